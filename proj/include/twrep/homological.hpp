#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "twrep/algebra.hpp"

namespace twrep {

// P_L -> ... -> P_1 -> P_0 -> M -> 0 with an augmentation. Terms need not be
// projective (images of resolutions under exact functors land here).
struct ExactComplex {
    Module of;
    std::vector<Module> terms;
    Matrix augmentation;               // P_0 -> M
    std::vector<Matrix> differentials;  // differentials[k - 1] : P_k -> P_{k-1}

    std::size_t length() const noexcept { return terms.empty() ? 0 : terms.size() - 1; }
    // d(0) is the augmentation.
    const Matrix& d(std::size_t k) const { return k == 0 ? augmentation : differentials[k - 1]; }
};

struct ProjectiveResolution {
    ExactComplex complex;
    std::vector<std::size_t> ranks;  // P_k = A^{ranks[k]}

    const Module& of() const noexcept { return complex.of; }
    std::size_t length() const noexcept { return complex.length(); }
};

// Terms P_0 .. P_length; each P_k is a free cover of the previous kernel.
ProjectiveResolution projective_resolution(const Module& m, std::size_t length);

// Rank checks: augmentation onto M, consecutive composites zero and exactness
// at P_0 .. P_{length-1}.
bool verify_exact(const ExactComplex& c);

// Hom_A(P_., N) for free P. A cochain on P_k = A^r is the r-tuple of values at
// the generators, stacked as an (r * dim N) column.
struct CochainComplex {
    std::vector<std::size_t> dims;
    std::vector<Matrix> d;  // d[k] : C^k -> C^{k+1}
};
CochainComplex hom_complex(const ProjectiveResolution& p, const Module& n);

// Matrix of phi |-> phi o g on generator-value cochains, for g : A^{src_rank} -> A^{tgt_rank}.
Matrix precompose_matrix(const Matrix& g, std::size_t src_rank, std::size_t tgt_rank,
                         const Module& n);
Matrix postcompose_matrix(const Matrix& h, std::size_t rank);
// Value form <-> full morphism matrix A^rank -> N.
Matrix cochain_to_morphism(const Module& n, const Matrix& values, std::size_t rank);
Matrix morphism_to_cochain(const Matrix& f, const AlgebraPtr& a, std::size_t rank);

// Z/B for a cochain complex node: Z = ker(out), B = im(in).
struct Cohomology {
    std::size_t ambient = 0;
    Matrix cycles;
    Matrix boundaries;
    Matrix representatives;  // completes `boundaries` to a basis of `cycles`
    std::size_t dim() const noexcept { return representatives.cols(); }
    // Class coordinates of cocycle columns; throws Internal on non-cocycles.
    Matrix classes_of(const Matrix& cocycles) const;
    bool is_cocycle(const Matrix& v) const;
};
// `in` may be nullopt (degree 0) and `out` may be nullopt (top degree treated as closed).
Cohomology cohomology(Field f, std::size_t ambient, const std::optional<Matrix>& in,
                      const std::optional<Matrix>& out);
Cohomology cohomology_at(const CochainComplex& c, std::size_t k);

// Matrix of the map on cohomology induced by a cochain map.
Matrix induced_on_cohomology(const Matrix& cochain_map, const Cohomology& source,
                             const Cohomology& target);

struct ExtGroup {
    std::size_t degree = 0;
    ProjectiveResolution resolution;
    Module coefficients;
    Cohomology cohomology;
    std::size_t dim() const noexcept { return cohomology.dim(); }
};
ExtGroup ext_group(std::size_t k, const Module& m, const Module& n);
std::size_t ext_dim(std::size_t k, const Module& m, const Module& n);

// Chain map g_0..g_upto from a free resolution to an exact complex over the
// morphism g : source.of -> target.of. Throws LiftFailure if a step is unsolvable.
std::vector<Matrix> chain_lift(const Matrix& g, const ProjectiveResolution& source,
                               const ExactComplex& target, std::size_t upto);

// Functor of bimodule type: - (x)_A N or Hom_B(N, -).
class BimoduleFunctor {
public:
    enum class Kind { Tensor, Hom };
    using Image = std::variant<TensorProduct, HomModule>;

    static BimoduleFunctor tensor(Bimodule n) { return BimoduleFunctor(Kind::Tensor, std::move(n)); }
    static BimoduleFunctor hom(Bimodule n) { return BimoduleFunctor(Kind::Hom, std::move(n)); }

    Kind kind() const noexcept { return kind_; }
    const Bimodule& bimodule() const noexcept { return n_; }
    const AlgebraPtr& source_algebra() const;
    const AlgebraPtr& target_algebra() const;

    Image apply(const Module& m) const;
    static const Module& module_of(const Image& im);
    Matrix apply(const Matrix& f, const Image& source, const Image& target) const;
    ExactComplex apply(const ExactComplex& c) const;

    // Tensor is exact iff N is projective as a left module, Hom iff N is
    // projective as a right module. The certificate carries the splitting.
    ProjectivityCertificate exactness_certificate() const;

private:
    BimoduleFunctor(Kind kind, Bimodule n) : kind_(kind), n_(std::move(n)) {}

    Kind kind_;
    Bimodule n_;
};

// Cochain-level transport Hom(P_k, N) -> Hom(Q_k, F N) where Q resolves F M and
// lifts[k] : Q_k -> F P_k lifts the identity of F M.
struct FunctorTransport {
    ProjectiveResolution image_resolution;  // Q
    ExactComplex image_complex;             // F P
    std::vector<Matrix> lifts;
    Module image_coefficients;              // F N
    std::vector<Matrix> cochain_maps;       // per degree
};
FunctorTransport functor_transport(const BimoduleFunctor& f, const ProjectiveResolution& p,
                                   const Module& n, std::size_t upto);

// Maps on Ext in the representative bases of ext_group.
Matrix ext_post(const Matrix& h, const ExtGroup& source, const ExtGroup& target);
Matrix ext_pre(const Matrix& g, const ExtGroup& source, const ExtGroup& target);
Matrix ext_transport(const BimoduleFunctor& f, const ExtGroup& source, const ExtGroup& target);

}  // namespace twrep
