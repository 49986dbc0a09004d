#include "twrep/rep.hpp"

#include "twrep/error.hpp"

namespace twrep {

namespace {

const std::string& vertex_label(const Diagram& d, std::size_t i) { return d.quiver().vertices()[i]; }

void require_same_diagram(const DiagramPtr& a, const DiagramPtr& b, const char* context) {
    if (!same_diagram(a, b)) throw Error(ErrorKind::DiagramMismatch, context);
}

std::size_t index_of(const std::vector<Path>& paths, const Path& p) {
    for (std::size_t k = 0; k < paths.size(); ++k)
        if (paths[k] == p) return k;
    throw Error(ErrorKind::Internal, "path missing from enumeration");
}

}  // namespace

std::shared_ptr<Representation::Data> Representation::prepare(DiagramPtr d, std::vector<Module> components) {
    if (!d) throw Error(ErrorKind::DiagramMismatch, "representation without a diagram");
    if (components.size() != d->quiver().vertex_count())
        throw Error(ErrorKind::DiagramMismatch, "need one component per vertex");
    for (std::size_t i = 0; i < components.size(); ++i)
        if (!same_algebra(components[i].algebra(), d->algebra(i)))
            throw Error(ErrorKind::AlgebraMismatch, "component at vertex '" + vertex_label(*d, i) +
                                                        "' is not over the vertex algebra");
    auto data = std::make_shared<Data>();
    for (std::size_t a = 0; a < d->quiver().arrow_count(); ++a) {
        const Arrow& ar = d->quiver().arrow(a);
        data->psi_source.push_back(tensor_over(components[ar.source], d->bimodule(a)));
        data->phi_target.push_back(hom_from(d->bimodule(a), components[ar.target]));
    }
    data->diagram = std::move(d);
    data->components = std::move(components);
    return data;
}

Representation Representation::from_psi(DiagramPtr d, std::vector<Module> components, std::vector<Matrix> psi) {
    auto data = prepare(std::move(d), std::move(components));
    const Diagram& dg = *data->diagram;
    if (psi.size() != dg.quiver().arrow_count())
        throw Error(ErrorKind::DiagramMismatch, "need one structure map per arrow");
    for (std::size_t a = 0; a < psi.size(); ++a) {
        const Arrow& ar = dg.quiver().arrow(a);
        if (psi[a].rows() != data->components[ar.target].dim() || psi[a].cols() != data->psi_source[a].module.dim())
            throw Error(ErrorKind::DimensionMismatch, "structure map of arrow '" + ar.label + "' has wrong shape");
        data->phi.push_back(adjoint_to_hom(psi[a], data->psi_source[a], data->phi_target[a]));
    }
    data->psi = std::move(psi);
    Representation r;
    r.data_ = std::move(data);
    return r;
}

Representation Representation::from_phi(DiagramPtr d, std::vector<Module> components, std::vector<Matrix> phi) {
    auto data = prepare(std::move(d), std::move(components));
    const Diagram& dg = *data->diagram;
    if (phi.size() != dg.quiver().arrow_count())
        throw Error(ErrorKind::DiagramMismatch, "need one structure map per arrow");
    for (std::size_t a = 0; a < phi.size(); ++a) {
        const Arrow& ar = dg.quiver().arrow(a);
        if (phi[a].rows() != data->phi_target[a].module.dim() || phi[a].cols() != data->components[ar.source].dim())
            throw Error(ErrorKind::DimensionMismatch, "structure map of arrow '" + ar.label + "' has wrong shape");
        data->psi.push_back(adjoint_to_tensor(phi[a], data->psi_source[a], data->phi_target[a]));
    }
    data->phi = std::move(phi);
    Representation r;
    r.data_ = std::move(data);
    return r;
}

Representation Representation::unchecked(DiagramPtr d, std::vector<Module> components, std::vector<Matrix> psi,
                                         std::vector<Matrix> phi) {
    auto data = prepare(std::move(d), std::move(components));
    if (psi.size() != data->psi_source.size() || phi.size() != data->psi_source.size())
        throw Error(ErrorKind::DiagramMismatch, "need one structure map per arrow");
    data->psi = std::move(psi);
    data->phi = std::move(phi);
    Representation r;
    r.data_ = std::move(data);
    return r;
}

Representation Representation::zero(DiagramPtr d) {
    std::vector<Module> comps;
    for (const auto& a : d->algebras()) comps.push_back(Module::zero(a));
    std::vector<Matrix> psi;
    for (std::size_t a = 0; a < d->quiver().arrow_count(); ++a) psi.push_back(Matrix(d->field(), 0, 0));
    return from_psi(std::move(d), std::move(comps), std::move(psi));
}

std::vector<std::size_t> Representation::dims() const {
    std::vector<std::size_t> out;
    for (const auto& m : data_->components) out.push_back(m.dim());
    return out;
}

std::vector<Violation> validate(const Representation& x) {
    std::vector<Violation> out;
    const Diagram& d = *x.diagram();
    for (std::size_t i = 0; i < x.vertex_count(); ++i)
        if (auto err = check_module_laws(x.component(i))) out.push_back({"vertex " + vertex_label(d, i), *err});
    for (std::size_t a = 0; a < d.quiver().arrow_count(); ++a) {
        const Arrow& ar = d.quiver().arrow(a);
        const std::string where = "arrow " + ar.label;
        const Matrix& psi = x.psi_map(a);
        const Matrix& phi = x.phi_map(a);
        const Module& src = x.component(ar.source);
        const Module& tgt = x.component(ar.target);
        const Module& tsrc = x.psi_source(a).module;
        const Module& htgt = x.phi_target(a).module;
        bool shapes = true;
        if (psi.rows() != tgt.dim() || psi.cols() != tsrc.dim()) {
            out.push_back({where, "psi-form map has shape " + std::to_string(psi.rows()) + "x" +
                                      std::to_string(psi.cols()) + ", expected " + std::to_string(tgt.dim()) +
                                      "x" + std::to_string(tsrc.dim())});
            shapes = false;
        }
        if (phi.rows() != htgt.dim() || phi.cols() != src.dim()) {
            out.push_back({where, "phi-form map has shape " + std::to_string(phi.rows()) + "x" +
                                      std::to_string(phi.cols()) + ", expected " + std::to_string(htgt.dim()) +
                                      "x" + std::to_string(src.dim())});
            shapes = false;
        }
        if (!shapes) continue;
        if (!is_linear(psi, tsrc, tgt)) out.push_back({where, "psi-form map is not linear over the target algebra"});
        if (!is_linear(phi, src, htgt)) out.push_back({where, "phi-form map is not linear over the source algebra"});
        if (!(adjoint_to_hom(psi, x.psi_source(a), x.phi_target(a)) == phi))
            out.push_back({where, "psi-form and phi-form maps are not adjoint transposes"});
    }
    return out;
}

// ---------------------------------------------------------------------------

RepMorphism identity_morphism(const Representation& x) {
    RepMorphism f{x, x, {}};
    for (const auto& m : x.components()) f.components.push_back(Matrix::identity(x.field(), m.dim()));
    return f;
}

RepMorphism zero_morphism(const Representation& x, const Representation& y) {
    require_same_diagram(x.diagram(), y.diagram(), "zero_morphism");
    RepMorphism f{x, y, {}};
    for (std::size_t i = 0; i < x.vertex_count(); ++i)
        f.components.push_back(Matrix(x.field(), y.component(i).dim(), x.component(i).dim()));
    return f;
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
    RepMorphism h{f.source, g.target, {}};
    for (std::size_t i = 0; i < f.components.size(); ++i) h.components.push_back(g.components[i] * f.components[i]);
    return h;
}

std::optional<std::string> check_morphism(const RepMorphism& f) {
    if (!same_diagram(f.source.diagram(), f.target.diagram())) return std::string("different diagrams");
    const Diagram& d = *f.source.diagram();
    if (f.components.size() != f.source.vertex_count()) return std::string("wrong number of components");
    for (std::size_t i = 0; i < f.components.size(); ++i)
        if (!is_linear(f.components[i], f.source.component(i), f.target.component(i)))
            return "component at vertex '" + vertex_label(d, i) + "' is not linear";
    for (std::size_t a = 0; a < d.quiver().arrow_count(); ++a) {
        const Arrow& ar = d.quiver().arrow(a);
        Matrix moved = tensor_morphism(f.components[ar.source], f.source.psi_source(a), f.target.psi_source(a));
        if (!(f.components[ar.target] * f.source.psi_map(a) == f.target.psi_map(a) * moved))
            return "square at arrow '" + ar.label + "' does not commute";
    }
    return std::nullopt;
}

RepMorphism RepHom::combination(const Matrix& c) const {
    Matrix v = space.basis * c;
    RepMorphism f{source, target, {}};
    for (std::size_t i = 0; i < vertex_spaces.size(); ++i)
        f.components.push_back(vertex_spaces[i].combination(v.block(offsets[i], 0, vertex_spaces[i].dim(), 1)));
    return f;
}

RepMorphism RepHom::element(std::size_t j) const {
    return combination(Matrix::unit_column(source.field(), dim(), j));
}

RepHom hom_rep(const Representation& x, const Representation& y) {
    require_same_diagram(x.diagram(), y.diagram(), "hom_rep");
    const Diagram& d = *x.diagram();
    const Field f = x.field();
    RepHom h{x, y, {}, {}, {}};
    std::size_t unknowns = 0;
    for (std::size_t i = 0; i < x.vertex_count(); ++i) {
        h.offsets.push_back(unknowns);
        h.vertex_spaces.push_back(hom_basis(x.component(i), y.component(i)));
        unknowns += h.vertex_spaces.back().dim();
    }
    std::vector<Matrix> blocks;
    for (std::size_t a = 0; a < d.quiver().arrow_count(); ++a) {
        const Arrow& ar = d.quiver().arrow(a);
        const std::size_t rows = y.component(ar.target).dim() * x.psi_source(a).module.dim();
        Matrix block(f, rows, unknowns);
        for (std::size_t t = 0; t < h.vertex_spaces[ar.target].dim(); ++t) {
            Matrix e = h.vertex_spaces[ar.target].element(t) * x.psi_map(a);
            block.set_block(0, h.offsets[ar.target] + t, e.vec());
        }
        for (std::size_t t = 0; t < h.vertex_spaces[ar.source].dim(); ++t) {
            Matrix moved = tensor_morphism(h.vertex_spaces[ar.source].element(t), x.psi_source(a), y.psi_source(a));
            Matrix e = -(y.psi_map(a) * moved);
            Matrix col = block.block(0, h.offsets[ar.source] + t, rows, 1) + e.vec();
            block.set_block(0, h.offsets[ar.source] + t, col);
        }
        blocks.push_back(std::move(block));
    }
    h.space = kernel(Matrix::vstack(f, unknowns, blocks));
    return h;
}

RepKernel kernel(const RepMorphism& f) {
    const Representation& x = f.source;
    const Diagram& d = *x.diagram();
    std::vector<Module> comps;
    std::vector<Matrix> incl;
    for (std::size_t i = 0; i < x.vertex_count(); ++i) {
        Kernel k = kernel(f.components[i]);
        comps.push_back(submodule(x.component(i), k.basis));
        incl.push_back(k.basis);
    }
    std::vector<Matrix> phi;
    for (std::size_t a = 0; a < d.quiver().arrow_count(); ++a) {
        const Arrow& ar = d.quiver().arrow(a);
        HomModule hk = hom_from(d.bimodule(a), comps[ar.target]);
        Matrix moved = hom_morphism(incl[ar.target], hk, x.phi_target(a));
        if (rank(moved) != moved.cols())
            throw Error(ErrorKind::UniquenessFailure, "induced kernel map at arrow '" + ar.label + "' is not unique");
        auto ka = solve(moved, x.phi_map(a) * incl[ar.source]);
        if (!ka) throw Error(ErrorKind::Internal, "kernel is not stable under arrow '" + ar.label + "'");
        phi.push_back(std::move(*ka));
    }
    Representation k = Representation::from_phi(x.diagram(), std::move(comps), std::move(phi));
    RepMorphism inc{k, x, std::move(incl)};
    return {k, inc};
}

RepCokernel cokernel(const RepMorphism& f) {
    const Representation& y = f.target;
    const Diagram& d = *y.diagram();
    std::vector<Module> comps;
    std::vector<Matrix> proj;
    for (std::size_t i = 0; i < y.vertex_count(); ++i) {
        Quotient q = quotient(y.component(i), f.components[i]);
        comps.push_back(q.module);
        proj.push_back(q.map.projection);
    }
    std::vector<Matrix> psi;
    for (std::size_t a = 0; a < d.quiver().arrow_count(); ++a) {
        const Arrow& ar = d.quiver().arrow(a);
        TensorProduct tc = tensor_over(comps[ar.source], d.bimodule(a));
        Matrix moved = tensor_morphism(proj[ar.source], y.psi_source(a), tc);
        if (rank(moved) != moved.rows())
            throw Error(ErrorKind::UniquenessFailure, "induced cokernel map at arrow '" + ar.label + "' is not unique");
        auto ct = solve(moved.transpose(), (proj[ar.target] * y.psi_map(a)).transpose());
        if (!ct) throw Error(ErrorKind::Internal, "cokernel map at arrow '" + ar.label + "' does not descend");
        psi.push_back(ct->transpose());
    }
    Representation c = Representation::from_psi(y.diagram(), std::move(comps), std::move(psi));
    RepMorphism p{y, c, std::move(proj)};
    return {c, p};
}

ExactnessVerdict is_exact_at(const RepMorphism& f, const RepMorphism& g) {
    ExactnessVerdict v;
    for (std::size_t i = 0; i < f.components.size(); ++i) {
        const Matrix& fi = f.components[i];
        const Matrix& gi = g.components[i];
        if (!(gi * fi).is_zero()) {
            v = {false, i, "composite is nonzero"};
            return v;
        }
        if (rank(fi) + rank(gi) != f.target.component(i).dim()) {
            v = {false, i, "image is smaller than kernel"};
            return v;
        }
    }
    return v;
}

// ---------------------------------------------------------------------------

RepMorphism RepDirectSum::injection(std::size_t r) const {
    RepMorphism f{parts[r], object, {}};
    for (const auto& s : vertex_sums) f.components.push_back(s.injection(r));
    return f;
}

RepMorphism RepDirectSum::projection(std::size_t r) const {
    RepMorphism f{object, parts[r], {}};
    for (const auto& s : vertex_sums) f.components.push_back(s.projection(r));
    return f;
}

RepDirectSum direct_sum(const DiagramPtr& d, const std::vector<Representation>& parts) {
    RepDirectSum out;
    out.parts = parts;
    std::vector<Module> comps;
    for (std::size_t i = 0; i < d->quiver().vertex_count(); ++i) {
        std::vector<Module> ms;
        for (const auto& p : parts) {
            require_same_diagram(p.diagram(), d, "direct_sum");
            ms.push_back(p.component(i));
        }
        out.vertex_sums.push_back(direct_sum(d->algebra(i), ms));
        comps.push_back(out.vertex_sums.back().module);
    }
    std::vector<Matrix> psi;
    for (std::size_t a = 0; a < d->quiver().arrow_count(); ++a) {
        const Arrow& ar = d->quiver().arrow(a);
        TensorProduct ts = tensor_over(comps[ar.source], d->bimodule(a));
        Matrix m(d->field(), comps[ar.target].dim(), ts.module.dim());
        for (std::size_t r = 0; r < parts.size(); ++r) {
            Matrix moved = tensor_morphism(out.vertex_sums[ar.source].projection(r), ts, parts[r].psi_source(a));
            m += out.vertex_sums[ar.target].injection(r) * parts[r].psi_map(a) * moved;
        }
        psi.push_back(std::move(m));
    }
    out.object = Representation::from_psi(d, std::move(comps), std::move(psi));
    return out;
}

Matrix psi_path_map(const Representation& x, const Path& p) {
    const Diagram& d = *x.diagram();
    PsiPathImage img = psi_on_path(d, p, x.component(p.source));
    Matrix g = Matrix::identity(x.field(), x.component(p.source).dim());
    for (std::size_t s = 0; s < p.arrows.size(); ++s) {
        const std::size_t b = p.arrows[s];
        g = x.psi_map(b) * tensor_morphism(g, img.stages[s], x.psi_source(b));
    }
    return g;
}

Matrix phi_path_map(const Representation& x, const Path& p) {
    const Diagram& d = *x.diagram();
    PhiPathImage img = phi_on_path(d, p, x.component(p.target));
    Matrix h = Matrix::identity(x.field(), x.component(p.target).dim());
    const std::size_t n = p.arrows.size();
    for (std::size_t s = 0; s < n; ++s) {
        const std::size_t b = p.arrows[n - 1 - s];
        h = hom_morphism(h, x.phi_target(b), img.stages[s]) * x.phi_map(b);
    }
    return h;
}

// ---------------------------------------------------------------------------

Induced sigma_shriek(const DiagramPtr& d, std::size_t i, const Module& m) {
    require_same_algebra(d->algebra(i), m.algebra(), "sigma_shriek");
    const Quiver& q = d->quiver();
    Induced out{i, m, {}, {}, {}};
    std::vector<std::vector<PsiPathImage>> images;
    std::vector<Module> comps;
    for (std::size_t j = 0; j < q.vertex_count(); ++j) {
        out.paths.push_back(enumerate_paths(q, i, j));
        std::vector<PsiPathImage> imgs;
        std::vector<Module> ms;
        for (const auto& p : out.paths.back()) {
            imgs.push_back(psi_on_path(*d, p, m));
            ms.push_back(imgs.back().module);
        }
        out.sums.push_back(direct_sum(d->algebra(j), ms));
        comps.push_back(out.sums.back().module);
        images.push_back(std::move(imgs));
    }
    std::vector<Matrix> psi;
    for (std::size_t b = 0; b < q.arrow_count(); ++b) {
        const Arrow& ar = q.arrow(b);
        TensorProduct ts = tensor_over(comps[ar.source], d->bimodule(b));
        Matrix map(d->field(), comps[ar.target].dim(), ts.module.dim());
        for (std::size_t k = 0; k < out.paths[ar.source].size(); ++k) {
            Path ext = out.paths[ar.source][k].then(arrow_path(q, b));
            std::size_t idx = index_of(out.paths[ar.target], ext);
            const TensorProduct& last = images[ar.target][idx].stages.back();
            map += out.sums[ar.target].injection(idx) * tensor_morphism(out.sums[ar.source].projection(k), ts, last);
        }
        psi.push_back(std::move(map));
    }
    out.object = Representation::from_psi(d, std::move(comps), std::move(psi));
    return out;
}

Induced sigma_star(const DiagramPtr& d, std::size_t i, const Module& m) {
    require_same_algebra(d->algebra(i), m.algebra(), "sigma_star");
    const Quiver& q = d->quiver();
    Induced out{i, m, {}, {}, {}};
    std::vector<std::vector<PhiPathImage>> images;
    std::vector<Module> comps;
    for (std::size_t j = 0; j < q.vertex_count(); ++j) {
        out.paths.push_back(enumerate_paths(q, j, i));
        std::vector<PhiPathImage> imgs;
        std::vector<Module> ms;
        for (const auto& p : out.paths.back()) {
            imgs.push_back(phi_on_path(*d, p, m));
            ms.push_back(imgs.back().module);
        }
        out.sums.push_back(direct_sum(d->algebra(j), ms));
        comps.push_back(out.sums.back().module);
        images.push_back(std::move(imgs));
    }
    std::vector<Matrix> phi;
    for (std::size_t b = 0; b < q.arrow_count(); ++b) {
        const Arrow& ar = q.arrow(b);
        HomModule ht = hom_from(d->bimodule(b), comps[ar.target]);
        Matrix map(d->field(), ht.module.dim(), comps[ar.source].dim());
        for (std::size_t k = 0; k < out.paths[ar.target].size(); ++k) {
            Path ext = arrow_path(q, b).then(out.paths[ar.target][k]);
            std::size_t idx = index_of(out.paths[ar.source], ext);
            const HomModule& outer = images[ar.source][idx].stages.back();
            map += hom_morphism(out.sums[ar.target].injection(k), outer, ht) * out.sums[ar.source].projection(idx);
        }
        phi.push_back(std::move(map));
    }
    out.object = Representation::from_phi(d, std::move(comps), std::move(phi));
    return out;
}

namespace {

bool same_components(const RepMorphism& f, const RepMorphism& g) { return f.components == g.components; }

}  // namespace

AdjunctionCheck adjunction_check_shriek(const DiagramPtr& d, std::size_t i, const Module& m, const Representation& x) {
    Induced ind = sigma_shriek(d, i, m);
    RepHom rep = hom_rep(ind.object, x);
    HomBasis mod = hom_basis(m, x.component(i));
    AdjunctionCheck c{true, rep.dim(), mod.dim(), ""};
    if (rep.dim() != mod.dim()) {
        c.ok = false;
        c.failure = "dimension mismatch";
        return c;
    }
    auto restrict = [&](const RepMorphism& f) { return f.components[i] * ind.sums[i].injection(0); };
    auto assemble = [&](const Matrix& g) {
        RepMorphism f{ind.object, x, {}};
        for (std::size_t j = 0; j < ind.paths.size(); ++j) {
            Matrix fj(x.field(), x.component(j).dim(), ind.object.component(j).dim());
            for (std::size_t k = 0; k < ind.paths[j].size(); ++k) {
                const Path& p = ind.paths[j][k];
                Matrix moved = psi_on_path(*d, g, psi_on_path(*d, p, m), psi_on_path(*d, p, x.component(i)));
                fj += psi_path_map(x, p) * moved * ind.sums[j].projection(k);
            }
            f.components.push_back(std::move(fj));
        }
        return f;
    };
    for (std::size_t t = 0; t < mod.dim(); ++t) {
        RepMorphism f = assemble(mod.element(t));
        if (auto err = check_morphism(f)) {
            c.ok = false;
            c.failure = "assembled map is not a morphism: " + *err;
            return c;
        }
        if (!(restrict(f) == mod.element(t))) {
            c.ok = false;
            c.failure = "restriction after assembly is not the identity";
            return c;
        }
    }
    for (std::size_t t = 0; t < rep.dim(); ++t) {
        RepMorphism f = rep.element(t);
        if (!same_components(assemble(restrict(f)), f)) {
            c.ok = false;
            c.failure = "assembly after restriction is not the identity";
            return c;
        }
    }
    return c;
}

AdjunctionCheck adjunction_check_star(const DiagramPtr& d, std::size_t i, const Module& m, const Representation& x) {
    Induced ind = sigma_star(d, i, m);
    RepHom rep = hom_rep(x, ind.object);
    HomBasis mod = hom_basis(x.component(i), m);
    AdjunctionCheck c{true, rep.dim(), mod.dim(), ""};
    if (rep.dim() != mod.dim()) {
        c.ok = false;
        c.failure = "dimension mismatch";
        return c;
    }
    auto restrict = [&](const RepMorphism& f) { return ind.sums[i].projection(0) * f.components[i]; };
    auto assemble = [&](const Matrix& g) {
        RepMorphism f{x, ind.object, {}};
        for (std::size_t j = 0; j < ind.paths.size(); ++j) {
            Matrix fj(x.field(), ind.object.component(j).dim(), x.component(j).dim());
            for (std::size_t k = 0; k < ind.paths[j].size(); ++k) {
                const Path& p = ind.paths[j][k];
                Matrix moved = phi_on_path(*d, g, phi_on_path(*d, p, x.component(i)), phi_on_path(*d, p, m));
                fj += ind.sums[j].injection(k) * moved * phi_path_map(x, p);
            }
            f.components.push_back(std::move(fj));
        }
        return f;
    };
    for (std::size_t t = 0; t < mod.dim(); ++t) {
        RepMorphism f = assemble(mod.element(t));
        if (auto err = check_morphism(f)) {
            c.ok = false;
            c.failure = "assembled map is not a morphism: " + *err;
            return c;
        }
        if (!(restrict(f) == mod.element(t))) {
            c.ok = false;
            c.failure = "restriction after assembly is not the identity";
            return c;
        }
    }
    for (std::size_t t = 0; t < rep.dim(); ++t) {
        RepMorphism f = rep.element(t);
        if (!same_components(assemble(restrict(f)), f)) {
            c.ok = false;
            c.failure = "assembly after restriction is not the identity";
            return c;
        }
    }
    return c;
}

// ---------------------------------------------------------------------------

namespace {

ThreeTermVerification verify_three_term(const RepMorphism& first, const RepMorphism& second, bool first_injective,
                                        bool second_surjective) {
    ThreeTermVerification v;
    const Diagram& d = *first.source.diagram();
    for (const RepMorphism* m : {&first, &second})
        if (auto err = check_morphism(*m)) {
            v.morphisms_valid = false;
            v.reason = *err;
        }
    for (std::size_t k = 0; k < first.components.size(); ++k) {
        const Matrix& f = first.components[k];
        const Matrix& g = second.components[k];
        if (!(g * f).is_zero()) {
            v.composite_zero = false;
            v.failing_vertex = k;
            v.reason = "composite nonzero at vertex '" + vertex_label(d, k) + "'";
            return v;
        }
        const std::size_t rf = rank(f), rg = rank(g);
        const bool ok = rf + rg == first.target.component(k).dim() &&
                        (!first_injective || rf == first.source.component(k).dim()) &&
                        (!second_surjective || rg == second.target.component(k).dim());
        if (!ok) {
            v.exact = false;
            v.failing_vertex = k;
            v.reason = "rank condition fails at vertex '" + vertex_label(d, k) + "'";
            return v;
        }
    }
    return v;
}

}  // namespace

StandardResolution standard_resolution(const Representation& x) {
    const DiagramPtr& d = x.diagram();
    const Quiver& q = d->quiver();
    const Field f = x.field();
    std::vector<Induced> lefts, mids;
    std::vector<Representation> lparts, mparts;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        lefts.push_back(sigma_shriek(d, q.arrow(a).target, x.psi_source(a).module));
        lparts.push_back(lefts.back().object);
    }
    for (std::size_t i = 0; i < q.vertex_count(); ++i) {
        mids.push_back(sigma_shriek(d, i, x.component(i)));
        mparts.push_back(mids.back().object);
    }
    RepDirectSum left = direct_sum(d, lparts);
    RepDirectSum middle = direct_sum(d, mparts);
    RepMorphism beta{left.object, middle.object, {}};
    RepMorphism gamma{middle.object, x, {}};
    for (std::size_t k = 0; k < q.vertex_count(); ++k) {
        Matrix b(f, middle.object.component(k).dim(), left.object.component(k).dim());
        for (std::size_t a = 0; a < q.arrow_count(); ++a) {
            const Arrow& ar = q.arrow(a);
            const Induced& la = lefts[a];
            for (std::size_t pi = 0; pi < la.paths[k].size(); ++pi) {
                const Path& p = la.paths[k][pi];
                const std::size_t col = left.vertex_sums[k].offsets[a] + la.sums[k].offsets[pi];
                const std::size_t width = la.sums[k].dims[pi];
                Path through = arrow_path(q, a).then(p);
                const Induced& mi = mids[ar.source];
                std::size_t idx = index_of(mi.paths[k], through);
                b.set_block(middle.vertex_sums[k].offsets[ar.source] + mi.sums[k].offsets[idx], col,
                            Matrix::identity(f, width));
                const Induced& mj = mids[ar.target];
                std::size_t jdx = index_of(mj.paths[k], p);
                Matrix moved = psi_on_path(*d, x.psi_map(a), psi_on_path(*d, p, x.psi_source(a).module),
                                           psi_on_path(*d, p, x.component(ar.target)));
                const std::size_t row = middle.vertex_sums[k].offsets[ar.target] + mj.sums[k].offsets[jdx];
                Matrix cur = b.block(row, col, moved.rows(), moved.cols());
                b.set_block(row, col, cur - moved);
            }
        }
        beta.components.push_back(std::move(b));
        Matrix g(f, x.component(k).dim(), middle.object.component(k).dim());
        for (std::size_t i = 0; i < q.vertex_count(); ++i)
            for (std::size_t pi = 0; pi < mids[i].paths[k].size(); ++pi)
                g.set_block(0, middle.vertex_sums[k].offsets[i] + mids[i].sums[k].offsets[pi],
                            psi_path_map(x, mids[i].paths[k][pi]));
        gamma.components.push_back(std::move(g));
    }
    StandardResolution r{left.object, middle.object, beta, gamma, {}};
    r.verification = verify_three_term(beta, gamma, true, true);
    return r;
}

StandardCoresolution standard_coresolution(const Representation& x) {
    const DiagramPtr& d = x.diagram();
    const Quiver& q = d->quiver();
    const Field f = x.field();
    std::vector<Induced> mids, rights;
    std::vector<Representation> mparts, rparts;
    for (std::size_t i = 0; i < q.vertex_count(); ++i) {
        mids.push_back(sigma_star(d, i, x.component(i)));
        mparts.push_back(mids.back().object);
    }
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        rights.push_back(sigma_star(d, q.arrow(a).source, x.phi_target(a).module));
        rparts.push_back(rights.back().object);
    }
    RepDirectSum middle = direct_sum(d, mparts);
    RepDirectSum right = direct_sum(d, rparts);
    RepMorphism gamma{x, middle.object, {}};
    RepMorphism beta{middle.object, right.object, {}};
    for (std::size_t k = 0; k < q.vertex_count(); ++k) {
        Matrix g(f, middle.object.component(k).dim(), x.component(k).dim());
        for (std::size_t i = 0; i < q.vertex_count(); ++i)
            for (std::size_t pi = 0; pi < mids[i].paths[k].size(); ++pi)
                g.set_block(middle.vertex_sums[k].offsets[i] + mids[i].sums[k].offsets[pi], 0,
                            phi_path_map(x, mids[i].paths[k][pi]));
        gamma.components.push_back(std::move(g));

        Matrix b(f, right.object.component(k).dim(), middle.object.component(k).dim());
        for (std::size_t a = 0; a < q.arrow_count(); ++a) {
            const Arrow& ar = q.arrow(a);  // a : j -> i with j = source
            const Induced& ra = rights[a];
            for (std::size_t pi = 0; pi < ra.paths[k].size(); ++pi) {
                const Path& p = ra.paths[k][pi];
                const std::size_t row = right.vertex_sums[k].offsets[a] + ra.sums[k].offsets[pi];
                const std::size_t height = ra.sums[k].dims[pi];
                Path through = p.then(arrow_path(q, a));
                const Induced& mi = mids[ar.target];
                std::size_t idx = index_of(mi.paths[k], through);
                b.set_block(row, middle.vertex_sums[k].offsets[ar.target] + mi.sums[k].offsets[idx],
                            Matrix::identity(f, height));
                const Induced& mj = mids[ar.source];
                std::size_t jdx = index_of(mj.paths[k], p);
                Matrix moved = phi_on_path(*d, x.phi_map(a), phi_on_path(*d, p, x.component(ar.source)),
                                           phi_on_path(*d, p, x.phi_target(a).module));
                const std::size_t col = middle.vertex_sums[k].offsets[ar.source] + mj.sums[k].offsets[jdx];
                Matrix cur = b.block(row, col, moved.rows(), moved.cols());
                b.set_block(row, col, cur - moved);
            }
        }
        beta.components.push_back(std::move(b));
    }
    StandardCoresolution r{middle.object, right.object, gamma, beta, {}};
    r.verification = verify_three_term(gamma, beta, true, true);
    return r;
}

// ---------------------------------------------------------------------------

DiagramPtr opposite_diagram(const Diagram& d) {
    std::vector<AlgebraPtr> ops;
    for (const auto& a : d.algebras()) ops.push_back(a->opposite());
    std::vector<Bimodule> bims;
    for (std::size_t a = 0; a < d.quiver().arrow_count(); ++a) {
        const Arrow& ar = d.quiver().arrow(a);
        const Bimodule& n = d.bimodule(a);
        bims.emplace_back(ops[ar.target], ops[ar.source], n.dim(), n.right_actions(), n.left_actions());
    }
    return std::make_shared<const Diagram>(d.quiver().opposite(), std::move(ops), std::move(bims));
}

Representation dualize_rep(const Representation& x, const DiagramPtr& opposite) {
    const Diagram& d = *x.diagram();
    std::vector<Module> comps;
    for (std::size_t i = 0; i < x.vertex_count(); ++i) comps.push_back(dualize_over(x.component(i), opposite->algebra(i)));
    std::vector<Matrix> phi;
    for (std::size_t a = 0; a < d.quiver().arrow_count(); ++a) {
        const Arrow& ar = d.quiver().arrow(a);
        HomModule target = hom_from(opposite->bimodule(a), comps[ar.source]);
        Matrix g = x.psi_map(a) * x.psi_source(a).projection;
        phi.push_back(g.transpose().select_rows(target.space.free_columns));
    }
    return Representation::from_phi(opposite, std::move(comps), std::move(phi));
}

RepMorphism dualize_morphism(const RepMorphism& f, const Representation& dual_source,
                             const Representation& dual_target) {
    RepMorphism g{dual_source, dual_target, {}};
    for (const auto& c : f.components) g.components.push_back(c.transpose());
    return g;
}

}  // namespace twrep
