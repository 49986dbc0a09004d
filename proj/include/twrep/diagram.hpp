#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "twrep/homological.hpp"

namespace twrep {

struct Arrow {
    std::string label;
    std::size_t source = 0;
    std::size_t target = 0;
};

class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t arrow_count() const noexcept { return arrows_.size(); }
    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    const Arrow& arrow(std::size_t a) const { return arrows_[a]; }
    std::size_t vertex_index(const std::string& label) const;
    std::size_t arrow_index(const std::string& label) const;

    std::vector<std::size_t> arrows_from(std::size_t i) const;
    bool is_acyclic() const;
    // Same vertices, every arrow reversed.
    Quiver opposite() const;

    friend bool operator==(const Quiver&, const Quiver&);

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

// Directed path; `arrows` lists arrow indices in traversal order.
struct Path {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::size_t> arrows;

    bool trivial() const noexcept { return arrows.empty(); }
    std::string label(const Quiver& q) const;
    // this followed by `next`
    Path then(const Path& next) const;
    friend bool operator==(const Path&, const Path&) = default;
};

Path trivial_path(std::size_t vertex);
Path arrow_path(const Quiver& q, std::size_t a);

// All paths i -> j ordered by length, then lexicographically by arrow labels.
// Throws CyclicQuiver on cyclic quivers.
std::vector<Path> enumerate_paths(const Quiver& q, std::size_t i, std::size_t j);

struct ArrowCertificate {
    ProjectivityCertificate left;   // N_a over A_source: - (x) N_a exact
    ProjectivityCertificate right;  // N_a over A_target: Hom(N_a, -) exact
    bool psi_exact() const noexcept { return left.projective; }
    bool phi_exact() const noexcept { return right.projective; }
};

// Module category per vertex (right modules over an algebra) and an
// A_source - A_target bimodule per arrow, giving Psi_a = - (x) N_a and its
// right adjoint Phi_a = Hom(N_a, -).
class Diagram {
public:
    Diagram(Quiver quiver, std::vector<AlgebraPtr> algebras, std::vector<Bimodule> bimodules);

    const Field& field() const noexcept { return field_; }
    const Quiver& quiver() const noexcept { return quiver_; }
    const AlgebraPtr& algebra(std::size_t i) const { return algebras_[i]; }
    const Bimodule& bimodule(std::size_t a) const { return bimodules_[a]; }
    const std::vector<AlgebraPtr>& algebras() const noexcept { return algebras_; }
    const std::vector<Bimodule>& bimodules() const noexcept { return bimodules_; }

    // Computed from the bimodule data at construction.
    const ArrowCertificate& certificate(std::size_t a) const { return certificates_[a]; }
    BimoduleFunctor psi(std::size_t a) const { return BimoduleFunctor::tensor(bimodules_[a]); }
    BimoduleFunctor phi(std::size_t a) const { return BimoduleFunctor::hom(bimodules_[a]); }

    friend bool operator==(const Diagram&, const Diagram&);

private:
    Field field_;
    Quiver quiver_;
    std::vector<AlgebraPtr> algebras_;
    std::vector<Bimodule> bimodules_;
    std::vector<ArrowCertificate> certificates_;
};

using DiagramPtr = std::shared_ptr<const Diagram>;

bool same_diagram(const DiagramPtr& a, const DiagramPtr& b);

struct PerArrowExactness {
    std::string arrow;
    bool psi_exact = false;
    bool phi_exact = false;
};
std::vector<PerArrowExactness> certify_exactness(const Diagram& d);

// Psi_p M: iterated tensor along the path, first arrow first.
struct PsiPathImage {
    Path path;
    std::vector<TensorProduct> stages;
    Module module;
};
PsiPathImage psi_on_path(const Diagram& d, const Path& p, const Module& m);
Matrix psi_on_path(const Diagram& d, const Matrix& f, const PsiPathImage& source,
                   const PsiPathImage& target);

// Phi_p M for M over the path's target: Phi_{a_1}(...(Phi_{a_n} M)).
// stages[0] is Phi_{a_n} M, stages.back() the outermost application.
struct PhiPathImage {
    Path path;
    std::vector<HomModule> stages;
    Module module;
};
PhiPathImage phi_on_path(const Diagram& d, const Path& p, const Module& m);
Matrix phi_on_path(const Diagram& d, const Matrix& f, const PhiPathImage& source,
                   const PhiPathImage& target);

// N_p = N_{a_1} (x) (N_{a_2} (x) (... (x) N_{a_n})) as an A_source - A_target
// bimodule; the regular bimodule for a trivial path.
struct PathBimodule {
    Bimodule bimodule;
    // raw N_{a_1} (x)_k ... (x)_k N_{a_n} -> N_p, and a linear section
    Matrix projection;
    Matrix section;
};
PathBimodule path_bimodule(const Diagram& d, const Path& p);

// Associativity isomorphisms Psi_p M -> M (x) N_p and Phi_p M -> Hom(N_p, M).
Matrix psi_associator(const Diagram& d, const PsiPathImage& iterated, const TensorProduct& composite,
                      const PathBimodule& np);
Matrix phi_associator(const Diagram& d, const PhiPathImage& iterated, const HomModule& composite,
                      const PathBimodule& np);

}  // namespace twrep
