#include "twrep/instances.hpp"

#include "twrep/error.hpp"

namespace twrep {

Quiver quiver_a(std::size_t n) {
    std::vector<std::string> v;
    std::vector<Arrow> a;
    for (std::size_t i = 0; i < n; ++i) v.push_back(std::to_string(i));
    for (std::size_t i = 0; i + 1 < n; ++i) a.push_back({"a" + std::to_string(i), i, i + 1});
    return Quiver(v, a);
}

Quiver quiver_single_arrow() { return Quiver({"0", "1"}, {{"a", 0, 1}}); }

Quiver quiver_commutative_square() {
    return Quiver({"0", "1", "2", "3"}, {{"a", 0, 1}, {"b", 0, 2}, {"c", 1, 3}, {"d", 2, 3}});
}

VectDiagram build_vect(Field f, Quiver q, std::vector<std::size_t> m) {
    if (m.size() != q.arrow_count()) throw Error(ErrorKind::InvalidData, "need one multiplicity per arrow");
    AlgebraPtr k = Algebra::ground_field(f);
    std::vector<AlgebraPtr> algs(q.vertex_count(), k);
    std::vector<Bimodule> bims;
    for (std::size_t x : m) bims.push_back(Bimodule::vect(k, x));
    return {std::make_shared<const Diagram>(std::move(q), std::move(algs), std::move(bims)), std::move(m)};
}

VectDiagram as_vect(const DiagramPtr& d) {
    AlgebraPtr k = Algebra::ground_field(d->field());
    for (const auto& a : d->algebras())
        if (!same_algebra(a, k)) throw Error(ErrorKind::NotVectDiagram, "vertex algebra is not the ground field");
    std::vector<std::size_t> m;
    for (const auto& n : d->bimodules()) {
        if (!n.left_action(0).is_identity() || !n.right_action(0).is_identity())
            throw Error(ErrorKind::NotVectDiagram, "bimodule acts nontrivially");
        m.push_back(n.dim());
    }
    return {d, m};
}

EulerOracle euler_oracle(const VectDiagram& v, const Representation& x, const Representation& y) {
    if (!same_diagram(v.diagram, x.diagram()) || !same_diagram(v.diagram, y.diagram()))
        throw Error(ErrorKind::NotVectDiagram, "representations are not over this Vect diagram");
    const Quiver& q = v.diagram->quiver();
    const Field f = v.diagram->field();
    const auto xd = x.dims(), yd = y.dims();
    // unknown (i, r, c) is entry (r, c) of f_i : X_i -> Y_i
    std::vector<std::size_t> off;
    std::size_t n = 0;
    for (std::size_t i = 0; i < xd.size(); ++i) {
        off.push_back(n);
        n += xd[i] * yd[i];
    }
    // arrow c-th parallel copy: column x * m + c of the structure matrix
    auto parallel = [&](const Matrix& s, std::size_t m, std::size_t c, std::size_t src_dim) {
        std::vector<std::size_t> cols;
        for (std::size_t t = 0; t < src_dim; ++t) cols.push_back(t * m + c);
        return s.select_cols(cols);
    };
    std::vector<std::vector<long long>> rows;
    std::vector<Matrix> eqs;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const std::size_t i = q.arrow(a).source, j = q.arrow(a).target, m = v.multiplicities[a];
        for (std::size_t c = 0; c < m; ++c) {
            Matrix ax = parallel(x.psi_map(a), m, c, xd[i]);  // xd[j] x xd[i]
            Matrix ay = parallel(y.psi_map(a), m, c, yd[i]);  // yd[j] x yd[i]
            // (f_j ax - ay f_i)[r][s] = sum_t f_j[r][t] ax[t][s] - sum_t ay[r][t] f_i[t][s]
            Matrix e(f, yd[j] * xd[i], n);
            for (std::size_t r = 0; r < yd[j]; ++r)
                for (std::size_t s = 0; s < xd[i]; ++s) {
                    const std::size_t row = r * xd[i] + s;
                    for (std::size_t t = 0; t < xd[j]; ++t)
                        e.set(row, off[j] + r * xd[j] + t, e.at(row, off[j] + r * xd[j] + t) + ax.at(t, s));
                    for (std::size_t t = 0; t < yd[i]; ++t)
                        e.set(row, off[i] + t * xd[i] + s, e.at(row, off[i] + t * xd[i] + s) - ay.at(r, t));
                }
            eqs.push_back(std::move(e));
        }
    }
    const std::size_t r = eqs.empty() ? 0 : rank(Matrix::vstack(f, n, eqs));
    EulerOracle o;
    o.hom = n - r;
    long long euler = 0;
    for (std::size_t i = 0; i < xd.size(); ++i) euler += static_cast<long long>(xd[i] * yd[i]);
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
        euler -= static_cast<long long>(v.multiplicities[a] * xd[q.arrow(a).source] * yd[q.arrow(a).target]);
    o.euler = euler;
    const long long e1 = static_cast<long long>(o.hom) - euler;
    if (e1 < 0) throw Error(ErrorKind::Internal, "negative Ext^1 from the Euler form");
    o.ext1 = static_cast<std::size_t>(e1);
    return o;
}

// ---------------------------------------------------------------------------

FramedDiagram build_framed(const AlgebraPtr& a, const Module& p) {
    require_same_algebra(a, p.algebra(), "build_framed");
    AlgebraPtr k = Algebra::ground_field(a->field());
    auto d = std::make_shared<const Diagram>(Quiver({"0", "1"}, {{"a", 0, 1}}), std::vector<AlgebraPtr>{k, a},
                                             std::vector<Bimodule>{Bimodule::from_right_module(k, p)});
    return {d, a, p};
}

Representation framed_object(const FramedDiagram& fd, const Module& e, std::size_t v_dim, const Matrix& s) {
    const Field f = fd.algebra->field();
    Module v(fd.diagram->algebra(0), v_dim, {Matrix::identity(f, v_dim)});
    return Representation::from_phi(fd.diagram, {v, e}, {s});
}

FramedLes framed_les(const FramedDiagram& fd, const Representation& e, const Representation& f,
                     std::size_t max_degree) {
    FramedLes out;
    out.psi = les(LesVariant::Psi, e, f, max_degree);
    if (fd.diagram->certificate(0).phi_exact()) out.phi = les(LesVariant::Phi, e, f, max_degree);
    for (std::size_t k = 0; k <= max_degree; ++k) out.component_ext.push_back(ext_dim(k, e.component(1), f.component(1)));
    for (std::size_t k = 2; k <= max_degree; ++k) {
        if (out.psi.ext_dims[k] != out.component_ext[k]) out.higher_agree = false;
        if (out.phi && out.phi->ext_dims[k] != out.component_ext[k]) out.higher_agree = false;
    }
    return out;
}

ChainDiagram build_chain(const Bimodule& connector, std::size_t tail) {
    std::vector<std::string> v;
    std::vector<Arrow> arrows;
    std::vector<AlgebraPtr> algs{connector.left()};
    std::vector<Bimodule> bims{connector};
    for (std::size_t i = 0; i <= tail + 1; ++i) v.push_back(std::to_string(i));
    arrows.push_back({"c", 0, 1});
    algs.push_back(connector.right());
    Bimodule reg = Bimodule::regular(connector.right());
    for (std::size_t t = 1; t <= tail; ++t) {
        arrows.push_back({"t" + std::to_string(t), t, t + 1});
        algs.push_back(connector.right());
        bims.push_back(reg);
    }
    return {std::make_shared<const Diagram>(Quiver(v, arrows), std::move(algs), std::move(bims)), tail};
}

// ---------------------------------------------------------------------------

Scalar Generator::scalar(Field f) {
    if (f.is_prime()) return Scalar(f, static_cast<long long>(rng_() % f.characteristic()));
    return Scalar(f, static_cast<long long>(rng_() % 5) - 2);
}

Matrix Generator::matrix(Field f, std::size_t rows, std::size_t cols) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, scalar(f));
    return m;
}

Module Generator::module(const AlgebraPtr& a, std::size_t max_dim, bool allow_zero) {
    const Field f = a->field();
    if (max_dim == 0 || (allow_zero && below(8) == 0)) return Module::zero(a);
    for (;;) {
        const std::size_t rank_bound = (max_dim + a->dim() - 1) / a->dim();
        const std::size_t n = 1 + below(rank_bound);
        Module free = free_module(a, n);
        const std::size_t g = below(3);
        Matrix sub = g == 0 ? Matrix(f, free.dim(), 0) : generated_subspace(free, matrix(f, free.dim(), g));
        Quotient qt = quotient(free, sub);
        const std::size_t d = qt.module.dim();
        if (d > max_dim || d == 0) continue;
        // random change of basis keeps coordinate generators from being canonical
        Matrix p = matrix(f, d, d);
        if (rank(p) < d) continue;
        Matrix pinv = *solve(p, Matrix::identity(f, d));
        std::vector<Matrix> act;
        for (const auto& r : qt.module.actions()) act.push_back(pinv * r * p);
        return Module(a, d, std::move(act));
    }
}

Matrix Generator::morphism(const Module& m, const Module& n) {
    HomBasis h = hom_basis(m, n);
    return h.combination(matrix(m.field(), h.dim(), 1));
}

Representation Generator::representation(const DiagramPtr& d, std::size_t max_dim) {
    std::vector<Module> comps;
    for (const auto& a : d->algebras()) comps.push_back(module(a, max_dim));
    std::vector<Matrix> psi;
    for (std::size_t a = 0; a < d->quiver().arrow_count(); ++a) {
        const Arrow& ar = d->quiver().arrow(a);
        TensorProduct t = tensor_over(comps[ar.source], d->bimodule(a));
        psi.push_back(morphism(t.module, comps[ar.target]));
    }
    return Representation::from_psi(d, std::move(comps), std::move(psi));
}

Representation Generator::vect_representation(const VectDiagram& v, const std::vector<std::size_t>& dims) {
    const Field f = v.diagram->field();
    std::vector<Module> comps;
    for (std::size_t i = 0; i < dims.size(); ++i)
        comps.emplace_back(v.diagram->algebra(i), dims[i], std::vector<Matrix>{Matrix::identity(f, dims[i])});
    std::vector<Matrix> psi;
    for (std::size_t a = 0; a < v.diagram->quiver().arrow_count(); ++a) {
        const Arrow& ar = v.diagram->quiver().arrow(a);
        psi.push_back(matrix(f, dims[ar.target], dims[ar.source] * v.multiplicities[a]));
    }
    return Representation::from_psi(v.diagram, std::move(comps), std::move(psi));
}

RepMorphism Generator::rep_morphism(const Representation& x, const Representation& y) {
    RepHom h = hom_rep(x, y);
    return h.combination(matrix(x.field(), h.dim(), 1));
}

}  // namespace twrep
