#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twrep/diagram.hpp"

namespace twrep {

// Twisted representation: a module X_i per vertex and, per arrow a : i -> j,
// both adjoint forms of the structure map,
//   psi form  Psi_a X_i -> X_j   and   phi form  X_i -> Phi_a X_j.
// Immutable; copies share the data.
class Representation {
public:
    Representation() = default;

    static Representation from_psi(DiagramPtr d, std::vector<Module> components, std::vector<Matrix> psi_maps);
    static Representation from_phi(DiagramPtr d, std::vector<Module> components, std::vector<Matrix> phi_maps);
    // Stores both forms as given, for exercising validate on inconsistent data.
    static Representation unchecked(DiagramPtr d, std::vector<Module> components, std::vector<Matrix> psi_maps,
                                    std::vector<Matrix> phi_maps);
    static Representation zero(DiagramPtr d);

    const DiagramPtr& diagram() const { return data_->diagram; }
    const Field& field() const { return data_->diagram->field(); }
    std::size_t vertex_count() const { return data_->components.size(); }
    const Module& component(std::size_t i) const { return data_->components[i]; }
    const std::vector<Module>& components() const { return data_->components; }
    const Matrix& psi_map(std::size_t a) const { return data_->psi[a]; }
    const Matrix& phi_map(std::size_t a) const { return data_->phi[a]; }
    // Psi_a X_source and Phi_a X_target with their presentations.
    const TensorProduct& psi_source(std::size_t a) const { return data_->psi_source[a]; }
    const HomModule& phi_target(std::size_t a) const { return data_->phi_target[a]; }
    std::vector<std::size_t> dims() const;

private:
    struct Data {
        DiagramPtr diagram;
        std::vector<Module> components;
        std::vector<Matrix> psi;
        std::vector<Matrix> phi;
        std::vector<TensorProduct> psi_source;
        std::vector<HomModule> phi_target;
    };
    static std::shared_ptr<Data> prepare(DiagramPtr d, std::vector<Module> components);

    std::shared_ptr<const Data> data_;
};

struct Violation {
    std::string where;  // "vertex <label>" or "arrow <label>"
    std::string message;
};
std::vector<Violation> validate(const Representation& x);

struct RepMorphism {
    Representation source;
    Representation target;
    std::vector<Matrix> components;
};

RepMorphism identity_morphism(const Representation& x);
RepMorphism zero_morphism(const Representation& x, const Representation& y);
RepMorphism compose(const RepMorphism& g, const RepMorphism& f);  // g o f
// Empty optional iff every component is linear and every arrow square commutes.
std::optional<std::string> check_morphism(const RepMorphism& f);

struct RepHom {
    Representation source;
    Representation target;
    std::vector<HomBasis> vertex_spaces;
    std::vector<std::size_t> offsets;  // coefficient offsets per vertex
    Kernel space;                      // inside the product of the vertex hom spaces
    std::size_t dim() const noexcept { return space.dim(); }
    RepMorphism element(std::size_t j) const;
    RepMorphism combination(const Matrix& coefficients) const;
};
RepHom hom_rep(const Representation& x, const Representation& y);

struct RepKernel {
    Representation object;
    RepMorphism inclusion;
};
struct RepCokernel {
    Representation object;
    RepMorphism projection;
};
RepKernel kernel(const RepMorphism& f);
RepCokernel cokernel(const RepMorphism& f);

struct ExactnessVerdict {
    bool exact = true;
    std::optional<std::size_t> failing_vertex;
    std::string reason;
};
// Exactness of X -f-> Y -g-> Z at Y, vertex by vertex.
ExactnessVerdict is_exact_at(const RepMorphism& f, const RepMorphism& g);

struct RepDirectSum {
    Representation object;
    std::vector<DirectSum> vertex_sums;
    RepMorphism injection(std::size_t r) const;
    RepMorphism projection(std::size_t r) const;
    std::vector<Representation> parts;
};
RepDirectSum direct_sum(const DiagramPtr& d, const std::vector<Representation>& parts);

// Structure map along a path: Psi_p X_i -> X_j (identity for a trivial path).
Matrix psi_path_map(const Representation& x, const Path& p);
// X_j -> Phi_p X_i for p : j -> i.
Matrix phi_path_map(const Representation& x, const Path& p);

// sigma_! M and sigma_* M with their path decompositions.
struct Induced {
    std::size_t vertex = 0;
    Module module;
    Representation object;
    std::vector<std::vector<Path>> paths;  // per vertex j: paths vertex -> j (shriek) or j -> vertex (star)
    std::vector<DirectSum> sums;
};
Induced sigma_shriek(const DiagramPtr& d, std::size_t i, const Module& m);
Induced sigma_star(const DiagramPtr& d, std::size_t i, const Module& m);

struct AdjunctionCheck {
    bool ok = true;
    std::size_t rep_dim = 0;
    std::size_t module_dim = 0;
    std::string failure;
};
// Hom_R(sigma_! M, X) = Hom(M, X_i) by restriction to the trivial-path summand
// and assembly through X_p o Psi_p(g); both round trips checked on bases.
AdjunctionCheck adjunction_check_shriek(const DiagramPtr& d, std::size_t i, const Module& m,
                                        const Representation& x);
// Hom_R(X, sigma_* M) = Hom(X_i, M), dually.
AdjunctionCheck adjunction_check_star(const DiagramPtr& d, std::size_t i, const Module& m,
                                      const Representation& x);

struct ThreeTermVerification {
    bool morphisms_valid = true;
    bool composite_zero = true;
    bool exact = true;
    std::optional<std::size_t> failing_vertex;
    std::string reason;
    bool ok() const noexcept { return morphisms_valid && composite_zero && exact; }
};

// 0 -> (+)_{a:i->j} sigma_!(Psi_a X_i) -beta-> (+)_i sigma_!(X_i) -gamma-> X -> 0
struct StandardResolution {
    Representation left;
    Representation middle;
    RepMorphism beta;
    RepMorphism gamma;
    ThreeTermVerification verification;
};
StandardResolution standard_resolution(const Representation& x);

// 0 -> X -gamma-> (+)_i sigma_*(X_i) -beta-> (+)_{a:j->i} sigma_*(Phi_a X_i) -> 0
struct StandardCoresolution {
    Representation middle;
    Representation right;
    RepMorphism gamma;
    RepMorphism beta;
    ThreeTermVerification verification;
};
StandardCoresolution standard_coresolution(const Representation& x);

// Dual representation over the opposite diagram: reversed quiver, opposite
// algebras, swapped bimodules, componentwise linear duals.
DiagramPtr opposite_diagram(const Diagram& d);
Representation dualize_rep(const Representation& x, const DiagramPtr& opposite);
RepMorphism dualize_morphism(const RepMorphism& f, const Representation& dual_source,
                             const Representation& dual_target);

}  // namespace twrep
