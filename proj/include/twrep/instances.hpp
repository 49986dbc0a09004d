#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "twrep/les.hpp"

namespace twrep {

// Named quiver shapes.
Quiver quiver_a(std::size_t vertices);  // 0 -> 1 -> ... -> n-1, arrows a0, a1, ...
Quiver quiver_single_arrow();           // 0 -> 1 (Kronecker-type once given multiplicity 2)
Quiver quiver_commutative_square();     // 0 -> 1, 0 -> 2, 1 -> 3, 2 -> 3 (no relations)

// Ground field at every vertex; N_a = k^{m_a}.
struct VectDiagram {
    DiagramPtr diagram;
    std::vector<std::size_t> multiplicities;
};
VectDiagram build_vect(Field f, Quiver q, std::vector<std::size_t> multiplicities);
// Recognizes a diagram of ground fields with trivially acting bimodules; throws NotVectDiagram.
VectDiagram as_vect(const DiagramPtr& d);

struct EulerOracle {
    std::size_t hom = 0;
    std::size_t ext1 = 0;
    long long euler = 0;  // <dim X, dim Y>
};
// Hom by a direct solve of the commuting squares of the parallel-arrow
// expansion; Ext^1 = Hom - <x, y>. Ext^k = 0 for k >= 2.
EulerOracle euler_oracle(const VectDiagram& v, const Representation& x, const Representation& y);

// Quiver 0 -> 1 with the ground field at 0, A at 1 and N = P as a k-A bimodule:
// Psi_a = - (x) P, Phi_a = Hom_A(P, -).
struct FramedDiagram {
    DiagramPtr diagram;
    AlgebraPtr algebra;
    Module framing;
};
FramedDiagram build_framed(const AlgebraPtr& a, const Module& p);
// The triple (E, V, s : V -> Hom_A(P, E)).
Representation framed_object(const FramedDiagram& fd, const Module& e, std::size_t v_dim, const Matrix& s);

struct FramedLes {
    LesReport psi;
    std::optional<LesReport> phi;            // when P is projective
    std::vector<std::size_t> component_ext;  // Ext^k_A(E, F)
    bool higher_agree = true;                // Ext^k_R = Ext^k_A(E, F) for 2 <= k <= max
};
FramedLes framed_les(const FramedDiagram& fd, const Representation& e, const Representation& f,
                     std::size_t max_degree);

// Quiver 0 -> 1 -> ... -> n+1: the connector (an A-B bimodule) on the first
// arrow and the regular B-bimodule on each of the n tail arrows.
struct ChainDiagram {
    DiagramPtr diagram;
    std::size_t tail = 0;
};
ChainDiagram build_chain(const Bimodule& connector, std::size_t tail);

// Seeded generator for random modules, representations and morphisms.
class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }
    Scalar scalar(Field f);
    Matrix matrix(Field f, std::size_t rows, std::size_t cols);
    // Quotient of a free module by a random submodule; dimension in [1, max_dim],
    // or the zero module with probability 1/8 when allowed.
    Module module(const AlgebraPtr& a, std::size_t max_dim, bool allow_zero = true);
    Matrix morphism(const Module& m, const Module& n);
    Representation representation(const DiagramPtr& d, std::size_t max_dim);
    Representation vect_representation(const VectDiagram& v, const std::vector<std::size_t>& dims);
    RepMorphism rep_morphism(const Representation& x, const Representation& y);

private:
    std::mt19937_64 rng_;
};

}  // namespace twrep
