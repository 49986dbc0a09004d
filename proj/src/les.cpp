#include "twrep/les.hpp"

#include "twrep/error.hpp"

namespace twrep {

std::string to_string(LesVariant v) { return v == LesVariant::Psi ? "psi" : "phi"; }

std::string to_string(LesNode::Kind k) {
    switch (k) {
        case LesNode::Kind::Rep: return "rep";
        case LesNode::Kind::Vertices: return "vertices";
        case LesNode::Kind::Arrows: return "arrows";
    }
    return "?";
}

bool hypotheses_hold(const Diagram& d, LesVariant v) {
    if (!d.quiver().is_acyclic()) return false;
    for (std::size_t a = 0; a < d.quiver().arrow_count(); ++a) {
        const ArrowCertificate& c = d.certificate(a);
        if (!(v == LesVariant::Psi ? c.psi_exact() : c.phi_exact())) return false;
    }
    return true;
}

void require_hypotheses(const Diagram& d, LesVariant v) {
    if (!d.quiver().is_acyclic()) throw Error(ErrorKind::CyclicQuiver, "long exact sequences need an acyclic quiver");
    for (std::size_t a = 0; a < d.quiver().arrow_count(); ++a) {
        const ArrowCertificate& c = d.certificate(a);
        if (!(v == LesVariant::Psi ? c.psi_exact() : c.phi_exact()))
            throw HypothesisViolation(d.quiver().arrow(a).label, to_string(v));
    }
}

LesVariant certified_variant(const Diagram& d) {
    if (hypotheses_hold(d, LesVariant::Psi)) return LesVariant::Psi;
    if (hypotheses_hold(d, LesVariant::Phi)) return LesVariant::Phi;
    require_hypotheses(d, LesVariant::Psi);
    return LesVariant::Psi;
}

namespace {

struct Sum {
    std::vector<std::size_t> dims;  // per degree
    std::vector<Matrix> d;          // per degree
};

// Direct sum of cochain complexes truncated to degrees 0..top.
Sum sum_complex(Field f, const std::vector<CochainComplex>& parts, std::size_t top) {
    Sum s;
    for (std::size_t k = 0; k <= top; ++k) {
        std::size_t n = 0;
        for (const auto& c : parts) n += c.dims[k];
        s.dims.push_back(n);
    }
    for (std::size_t k = 0; k < top; ++k) {
        std::vector<Matrix> blocks;
        for (const auto& c : parts) blocks.push_back(c.d[k]);
        s.d.push_back(blocks.empty() ? Matrix(f, 0, 0) : Matrix::block_diag(f, blocks));
    }
    return s;
}

std::vector<std::size_t> offsets_at(const std::vector<CochainComplex>& parts, std::size_t k) {
    std::vector<std::size_t> o;
    std::size_t n = 0;
    for (const auto& c : parts) {
        o.push_back(n);
        n += c.dims[k];
    }
    return o;
}

void add_block(Matrix& m, std::size_t r, std::size_t c, const Matrix& b) {
    if (b.rows() == 0 || b.cols() == 0) return;
    m.set_block(r, c, m.block(r, c, b.rows(), b.cols()) + b);
}

}  // namespace

LesReport les(LesVariant variant, const Representation& x, const Representation& y, std::size_t max_degree) {
    if (!same_diagram(x.diagram(), y.diagram())) throw Error(ErrorKind::DiagramMismatch, "les");
    const Diagram& d = *x.diagram();
    require_hypotheses(d, variant);
    const Field f = x.field();
    const Quiver& q = d.quiver();
    const std::size_t K = max_degree, L = K + 2, T = K + 1;

    std::vector<ProjectiveResolution> p;
    std::vector<CochainComplex> cparts, dparts;
    for (std::size_t i = 0; i < q.vertex_count(); ++i) {
        p.push_back(projective_resolution(x.component(i), L));
        cparts.push_back(hom_complex(p.back(), y.component(i)));
    }
    // Per arrow: delta block from the source vertex and from the target vertex, per degree.
    std::vector<std::vector<Matrix>> from_source(q.arrow_count()), from_target(q.arrow_count());
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        const std::size_t i = ar.source, j = ar.target;
        if (variant == LesVariant::Psi) {
            ProjectiveResolution qa = projective_resolution(x.psi_source(a).module, L);
            dparts.push_back(hom_complex(qa, y.component(j)));
            FunctorTransport tr = functor_transport(d.psi(a), p[i], y.component(i), T);
            auto mu = chain_lift(x.psi_map(a), qa, p[j].complex, T);
            for (std::size_t k = 0; k <= T; ++k) {
                from_source[a].push_back(postcompose_matrix(y.psi_map(a), qa.ranks[k]) * tr.cochain_maps[k]);
                from_target[a].push_back(-precompose_matrix(mu[k], qa.ranks[k], p[j].ranks[k], y.component(j)));
            }
        } else {
            const Module& phy = y.phi_target(a).module;
            dparts.push_back(hom_complex(p[i], phy));
            FunctorTransport tr = functor_transport(d.phi(a), p[j], y.component(j), T);
            auto mu = chain_lift(x.phi_map(a), p[i], tr.image_resolution.complex, T);
            for (std::size_t k = 0; k <= T; ++k) {
                from_source[a].push_back(postcompose_matrix(y.phi_map(a), p[i].ranks[k]));
                from_target[a].push_back(
                    -(precompose_matrix(mu[k], p[i].ranks[k], tr.image_resolution.ranks[k], phy) * tr.cochain_maps[k]));
            }
        }
    }
    Sum c = sum_complex(f, cparts, L);
    Sum dd = sum_complex(f, dparts, L);

    std::vector<Matrix> delta;  // cochain level, degrees 0..T
    for (std::size_t k = 0; k <= T; ++k) {
        Matrix m(f, dd.dims[k], c.dims[k]);
        auto co = offsets_at(cparts, k), dofs = offsets_at(dparts, k);
        for (std::size_t a = 0; a < q.arrow_count(); ++a) {
            add_block(m, dofs[a], co[q.arrow(a).source], from_source[a][k]);
            add_block(m, dofs[a], co[q.arrow(a).target], from_target[a][k]);
        }
        delta.push_back(std::move(m));
    }

    LesReport r;
    r.variant = variant;
    r.max_degree = K;
    for (std::size_t k = 0; k <= K; ++k)
        if (!(delta[k + 1] * c.d[k] == dd.d[k] * delta[k])) r.delta_chain_map = false;

    // Cone E^k = C^k + D^{k-1}, d(c, e) = (d c, delta c - d e).
    auto cone_dim = [&](std::size_t k) { return c.dims[k] + (k ? dd.dims[k - 1] : 0); };
    std::vector<Matrix> de;
    for (std::size_t k = 0; k <= T; ++k) {
        Matrix m(f, cone_dim(k + 1), cone_dim(k));
        m.set_block(0, 0, c.d[k]);
        m.set_block(c.dims[k + 1], 0, delta[k]);
        if (k > 0) m.set_block(c.dims[k + 1], c.dims[k], -dd.d[k - 1]);
        de.push_back(std::move(m));
    }
    std::vector<Cohomology> he, hc, hd;
    for (std::size_t k = 0; k <= T; ++k)
        he.push_back(cohomology(f, cone_dim(k), k ? std::optional<Matrix>(de[k - 1]) : std::nullopt, de[k]));
    for (std::size_t k = 0; k <= K; ++k) {
        hc.push_back(cohomology(f, c.dims[k], k ? std::optional<Matrix>(c.d[k - 1]) : std::nullopt, c.d[k]));
        hd.push_back(cohomology(f, dd.dims[k], k ? std::optional<Matrix>(dd.d[k - 1]) : std::nullopt, dd.d[k]));
    }
    std::vector<Matrix> proj, incl;  // H^k(E) -> H^k(C), H^k(D) -> H^{k+1}(E)
    for (std::size_t k = 0; k <= K; ++k) {
        Matrix pm(f, c.dims[k], cone_dim(k));
        pm.set_block(0, 0, Matrix::identity(f, c.dims[k]));
        proj.push_back(induced_on_cohomology(pm, he[k], hc[k]));
        Matrix im(f, cone_dim(k + 1), dd.dims[k]);
        im.set_block(c.dims[k + 1], 0, Matrix::identity(f, dd.dims[k]));
        incl.push_back(induced_on_cohomology(im, hd[k], he[k + 1]));
        r.delta.push_back(induced_on_cohomology(delta[k], hc[k], hd[k]));
        r.vertex_dims.push_back(hc[k].dim());
        r.arrow_dims.push_back(hd[k].dim());
        r.cone_dims.push_back(he[k].dim());
    }
    for (std::size_t k = 0; k <= K; ++k) {
        const std::size_t rd = rank(r.delta[k]);
        std::size_t e = r.vertex_dims[k] - rd;
        if (k > 0) e += r.arrow_dims[k - 1] - rank(r.delta[k - 1]);
        r.ext_dims.push_back(e);
    }

    auto node = [&](LesNode::Kind kind, std::size_t k, std::size_t dim, const Matrix* in, const Matrix* out) {
        LesNode n{kind, k, dim, in ? rank(*in) : 0, out ? rank(*out) : 0, true};
        n.exact = n.rank_in + n.rank_out == dim && (!in || !out || (*out * *in).is_zero());
        if (!n.exact) r.all_exact = false;
        r.nodes.push_back(n);
    };
    for (std::size_t k = 0; k <= K; ++k) {
        node(LesNode::Kind::Rep, k, r.cone_dims[k], k ? &incl[k - 1] : nullptr, &proj[k]);
        node(LesNode::Kind::Vertices, k, r.vertex_dims[k], &proj[k], &r.delta[k]);
        node(LesNode::Kind::Arrows, k, r.arrow_dims[k], &r.delta[k], &incl[k]);
    }

    r.hom_dim = hom_rep(x, y).dim();
    r.consistent = r.ext_dims == r.cone_dims && r.ext_dims[0] == r.hom_dim;
    return r;
}

std::size_t ext_dim_rep(std::size_t k, const Representation& x, const Representation& y, LesVariant variant) {
    return les(variant, x, y, k).ext_dims[k];
}

WitnessResult projectivity_test(const DiagramPtr& d, std::size_t i, const Module& p,
                                const std::vector<Representation>& family) {
    LesVariant v = certified_variant(*d);
    Representation x = sigma_shriek(d, i, p).object;
    WitnessResult w;
    for (std::size_t t = 0; t < family.size(); ++t) {
        w.ext1.push_back(ext_dim_rep(1, x, family[t], v));
        if (w.ext1.back() != 0 && w.pass) {
            w.pass = false;
            w.witness = t;
        }
    }
    return w;
}

WitnessResult injectivity_test(const DiagramPtr& d, std::size_t i, const Module& injective,
                               const std::vector<Representation>& family) {
    LesVariant v = certified_variant(*d);
    Representation x = sigma_star(d, i, injective).object;
    WitnessResult w;
    for (std::size_t t = 0; t < family.size(); ++t) {
        w.ext1.push_back(ext_dim_rep(1, family[t], x, v));
        if (w.ext1.back() != 0 && w.pass) {
            w.pass = false;
            w.witness = t;
        }
    }
    return w;
}

BothExactCheck both_exact_check(const Diagram& d, std::size_t a, const Module& m, const Module& n,
                                std::size_t max_degree) {
    BothExactCheck c;
    c.both_exact = d.certificate(a).psi_exact() && d.certificate(a).phi_exact();
    Module psim = BimoduleFunctor::module_of(d.psi(a).apply(m));
    Module phin = BimoduleFunctor::module_of(d.phi(a).apply(n));
    for (std::size_t k = 0; k <= max_degree; ++k) {
        c.psi_side.push_back(ext_dim(k, psim, n));
        c.phi_side.push_back(ext_dim(k, m, phin));
    }
    return c;
}

}  // namespace twrep
