#include "twrep/homological.hpp"

#include "twrep/error.hpp"

namespace twrep {
namespace {

// Columns u_0..u_{r-1}: the unit of A placed in block l of A^r.
Matrix generator_columns(const AlgebraPtr& a, std::size_t rank) {
    const std::size_t d = a->dim();
    Matrix u(a->field(), rank * d, rank);
    for (std::size_t l = 0; l < rank; ++l) u.set_block(l * d, l, a->unit());
    return u;
}

}  // namespace

ProjectiveResolution projective_resolution(const Module& m, std::size_t length) {
    ProjectiveResolution res;
    res.complex.of = m;
    FreeCover cover = free_cover(m);
    res.complex.terms.push_back(cover.free);
    res.complex.augmentation = cover.map;
    res.ranks.push_back(cover.generator_coords.size());
    Kernel ker = kernel(cover.map);
    for (std::size_t k = 1; k <= length; ++k) {
        Module kmod = submodule(res.complex.terms.back(), ker.basis);
        FreeCover next = free_cover(kmod);
        res.complex.differentials.push_back(ker.basis * next.map);
        res.complex.terms.push_back(next.free);
        res.ranks.push_back(next.generator_coords.size());
        ker = kernel(next.map);
    }
    return res;
}

bool verify_exact(const ExactComplex& c) {
    if (rank(c.augmentation) != c.of.dim()) return false;
    for (std::size_t k = 0; k < c.length(); ++k) {
        const Matrix& out = c.d(k);
        const Matrix& in = c.d(k + 1);
        if (!(out * in).is_zero()) return false;
        if (rank(out) + rank(in) != c.terms[k].dim()) return false;
    }
    return true;
}

Matrix precompose_matrix(const Matrix& g, std::size_t src_rank, std::size_t tgt_rank,
                         const Module& n) {
    const AlgebraPtr& a = n.algebra();
    const std::size_t d = a->dim(), nd = n.dim();
    if (g.rows() != tgt_rank * d || g.cols() != src_rank * d)
        throw Error(ErrorKind::DimensionMismatch, "precompose_matrix: map between wrong free modules");
    Matrix images = g * generator_columns(a, src_rank);
    Matrix out(n.field(), src_rank * nd, tgt_rank * nd);
    for (std::size_t lp = 0; lp < src_rank; ++lp)
        for (std::size_t l = 0; l < tgt_rank; ++l) {
            Matrix alpha = images.block(l * d, lp, d, 1);
            if (alpha.is_zero()) continue;
            out.set_block(lp * nd, l * nd, n.act(alpha));
        }
    return out;
}

Matrix postcompose_matrix(const Matrix& h, std::size_t rank) {
    return kron(Matrix::identity(h.field(), rank), h);
}

Matrix cochain_to_morphism(const Module& n, const Matrix& values, std::size_t rank) {
    Matrix v(n.field(), n.dim(), rank);
    for (std::size_t l = 0; l < rank; ++l) v.set_block(0, l, values.block(l * n.dim(), 0, n.dim(), 1));
    return free_extension(n, v, rank);
}

Matrix morphism_to_cochain(const Matrix& f, const AlgebraPtr& a, std::size_t rank) {
    Matrix vals = f * generator_columns(a, rank);
    Matrix out(f.field(), rank * f.rows(), 1);
    for (std::size_t l = 0; l < rank; ++l) out.set_block(l * f.rows(), 0, vals.column(l));
    return out;
}

CochainComplex hom_complex(const ProjectiveResolution& p, const Module& n) {
    require_same_algebra(p.of().algebra(), n.algebra(), "hom_complex");
    CochainComplex c;
    for (std::size_t r : p.ranks) c.dims.push_back(r * n.dim());
    for (std::size_t k = 0; k < p.length(); ++k)
        c.d.push_back(precompose_matrix(p.complex.d(k + 1), p.ranks[k + 1], p.ranks[k], n));
    return c;
}

Matrix Cohomology::classes_of(const Matrix& cocycles) const {
    const Field f = cocycles.field();
    if (cocycles.cols() == 0) return Matrix(f, dim(), 0);
    Matrix basis = Matrix::hstack(f, ambient, {boundaries, representatives});
    auto c = solve(basis, cocycles);
    if (!c) throw Error(ErrorKind::Internal, "vector is not a cocycle");
    return c->block(boundaries.cols(), 0, dim(), cocycles.cols());
}

bool Cohomology::is_cocycle(const Matrix& v) const { return solve(cycles, v).has_value(); }

Cohomology cohomology(Field f, std::size_t ambient, const std::optional<Matrix>& in,
                      const std::optional<Matrix>& out) {
    Cohomology h;
    h.ambient = ambient;
    h.cycles = out ? kernel(*out).basis : Matrix::identity(f, ambient);
    h.boundaries = in ? column_space_basis(*in) : Matrix(f, ambient, 0);
    Rref r = rref(Matrix::hstack(f, ambient, {h.boundaries, h.cycles}));
    std::vector<std::size_t> extra;
    for (std::size_t p : r.pivots)
        if (p >= h.boundaries.cols()) extra.push_back(p - h.boundaries.cols());
    if (r.rank() != h.cycles.cols())
        throw Error(ErrorKind::Internal, "boundaries are not contained in cycles");
    h.representatives = h.cycles.select_cols(extra);
    return h;
}

Cohomology cohomology_at(const CochainComplex& c, std::size_t k) {
    const Field f = c.d.empty() ? Field::rationals() : c.d.front().field();
    std::optional<Matrix> in, out;
    if (k > 0) in = c.d[k - 1];
    if (k < c.d.size()) out = c.d[k];
    if (c.d.empty()) throw Error(ErrorKind::Internal, "cohomology_at on a complex without differentials");
    return cohomology(f, c.dims[k], in, out);
}

Matrix induced_on_cohomology(const Matrix& cochain_map, const Cohomology& source,
                             const Cohomology& target) {
    return target.classes_of(cochain_map * source.representatives);
}

ExtGroup ext_group(std::size_t k, const Module& m, const Module& n) {
    require_same_algebra(m.algebra(), n.algebra(), "ext");
    ExtGroup g;
    g.degree = k;
    g.resolution = projective_resolution(m, k + 1);
    g.coefficients = n;
    CochainComplex c = hom_complex(g.resolution, n);
    g.cohomology = cohomology(m.field(), c.dims[k], k > 0 ? std::optional<Matrix>(c.d[k - 1]) : std::nullopt,
                              c.d[k]);
    return g;
}

std::size_t ext_dim(std::size_t k, const Module& m, const Module& n) {
    return ext_group(k, m, n).dim();
}

std::vector<Matrix> chain_lift(const Matrix& g, const ProjectiveResolution& source,
                               const ExactComplex& target, std::size_t upto) {
    if (source.length() < upto || target.length() < upto)
        throw Error(ErrorKind::Internal, "chain_lift beyond resolution length");
    if (g.rows() != target.of.dim() || g.cols() != source.of().dim())
        throw Error(ErrorKind::DimensionMismatch, "chain_lift: morphism shape");
    const AlgebraPtr& a = source.of().algebra();
    std::vector<Matrix> lifts;
    for (std::size_t k = 0; k <= upto; ++k) {
        const std::size_t r = source.ranks[k];
        Matrix u = generator_columns(a, r);
        Matrix wanted = k == 0 ? g * source.complex.augmentation * u
                               : lifts[k - 1] * source.complex.d(k) * u;
        auto x = solve(target.d(k), wanted);
        if (!x)
            throw Error(ErrorKind::LiftFailure,
                        "no lift in degree " + std::to_string(k) + " (target complex not exact?)");
        lifts.push_back(free_extension(target.terms[k], *x, r));
    }
    return lifts;
}

// ---------------------------------------------------------------------------

const AlgebraPtr& BimoduleFunctor::source_algebra() const {
    return kind_ == Kind::Tensor ? n_.left() : n_.right();
}

const AlgebraPtr& BimoduleFunctor::target_algebra() const {
    return kind_ == Kind::Tensor ? n_.right() : n_.left();
}

BimoduleFunctor::Image BimoduleFunctor::apply(const Module& m) const {
    if (kind_ == Kind::Tensor) return tensor_over(m, n_);
    return hom_from(n_, m);
}

const Module& BimoduleFunctor::module_of(const Image& im) {
    if (const auto* t = std::get_if<TensorProduct>(&im)) return t->module;
    return std::get<HomModule>(im).module;
}

Matrix BimoduleFunctor::apply(const Matrix& f, const Image& source, const Image& target) const {
    if (kind_ == Kind::Tensor)
        return tensor_morphism(f, std::get<TensorProduct>(source), std::get<TensorProduct>(target));
    return hom_morphism(f, std::get<HomModule>(source), std::get<HomModule>(target));
}

ExactComplex BimoduleFunctor::apply(const ExactComplex& c) const {
    ExactComplex out;
    Image of = apply(c.of);
    out.of = module_of(of);
    std::vector<Image> terms;
    for (const auto& t : c.terms) {
        terms.push_back(apply(t));
        out.terms.push_back(module_of(terms.back()));
    }
    out.augmentation = apply(c.augmentation, terms[0], of);
    for (std::size_t k = 1; k < terms.size(); ++k)
        out.differentials.push_back(apply(c.d(k), terms[k], terms[k - 1]));
    return out;
}

ProjectivityCertificate BimoduleFunctor::exactness_certificate() const {
    return is_projective(kind_ == Kind::Tensor ? n_.as_left_module() : n_.as_right_module());
}

FunctorTransport functor_transport(const BimoduleFunctor& f, const ProjectiveResolution& p,
                                   const Module& n, std::size_t upto) {
    require_same_algebra(f.source_algebra(), p.of().algebra(), "functor_transport");
    FunctorTransport t;
    t.image_complex = f.apply(p.complex);
    if (!verify_exact(t.image_complex))
        throw Error(ErrorKind::FunctorNotExact, "functor image of the resolution is not exact");
    t.image_resolution = projective_resolution(t.image_complex.of, upto);
    t.lifts = chain_lift(Matrix::identity(n.field(), t.image_complex.of.dim()), t.image_resolution,
                         t.image_complex, upto);
    BimoduleFunctor::Image fn = f.apply(n);
    t.image_coefficients = BimoduleFunctor::module_of(fn);
    const AlgebraPtr& b = f.target_algebra();
    for (std::size_t k = 0; k <= upto; ++k) {
        const std::size_t r = p.ranks[k];
        BimoduleFunctor::Image fp = f.apply(p.complex.terms[k]);
        const std::size_t cols = r * n.dim();
        Matrix map(n.field(), t.image_resolution.ranks[k] * t.image_coefficients.dim(), cols);
        for (std::size_t j = 0; j < cols; ++j) {
            Matrix phi = cochain_to_morphism(n, Matrix::unit_column(n.field(), cols, j), r);
            Matrix moved = f.apply(phi, fp, fn) * t.lifts[k];
            map.set_block(0, j, morphism_to_cochain(moved, b, t.image_resolution.ranks[k]));
        }
        t.cochain_maps.push_back(std::move(map));
    }
    return t;
}

Matrix ext_post(const Matrix& h, const ExtGroup& source, const ExtGroup& target) {
    const std::size_t k = source.degree;
    return induced_on_cohomology(postcompose_matrix(h, source.resolution.ranks[k]),
                                 source.cohomology, target.cohomology);
}

Matrix ext_pre(const Matrix& g, const ExtGroup& source, const ExtGroup& target) {
    const std::size_t k = source.degree;
    auto lifts = chain_lift(g, target.resolution, source.resolution.complex, k);
    Matrix cochain = precompose_matrix(lifts[k], target.resolution.ranks[k],
                                       source.resolution.ranks[k], source.coefficients);
    return induced_on_cohomology(cochain, source.cohomology, target.cohomology);
}

Matrix ext_transport(const BimoduleFunctor& f, const ExtGroup& source, const ExtGroup& target) {
    const std::size_t k = source.degree;
    FunctorTransport t = functor_transport(f, source.resolution, source.coefficients, k);
    return induced_on_cohomology(t.cochain_maps[k], source.cohomology, target.cohomology);
}

}  // namespace twrep
