#include "twrep/diagram.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "twrep/error.hpp"

namespace twrep {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    std::set<std::string> seen(vertices_.begin(), vertices_.end());
    if (seen.size() != vertices_.size())
        throw Error(ErrorKind::InvalidData, "vertex labels must be unique");
    std::set<std::string> arrow_labels;
    for (const auto& a : arrows_) {
        if (!arrow_labels.insert(a.label).second)
            throw Error(ErrorKind::InvalidData, "duplicate arrow label '" + a.label + "'");
        if (a.source >= vertices_.size() || a.target >= vertices_.size())
            throw Error(ErrorKind::InvalidData, "arrow '" + a.label + "' has an endpoint outside the quiver");
    }
}

std::size_t Quiver::vertex_index(const std::string& label) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), label);
    if (it == vertices_.end()) throw Error(ErrorKind::InvalidData, "unknown vertex '" + label + "'");
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Quiver::arrow_index(const std::string& label) const {
    for (std::size_t a = 0; a < arrows_.size(); ++a)
        if (arrows_[a].label == label) return a;
    throw Error(ErrorKind::InvalidData, "unknown arrow '" + label + "'");
}

std::vector<std::size_t> Quiver::arrows_from(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < arrows_.size(); ++a)
        if (arrows_[a].source == i) out.push_back(a);
    return out;
}

bool Quiver::is_acyclic() const {
    // Kahn's algorithm
    std::vector<std::size_t> indeg(vertices_.size(), 0);
    for (const auto& a : arrows_) ++indeg[a.target];
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < indeg.size(); ++i)
        if (indeg[i] == 0) ready.push_back(i);
    std::size_t done = 0;
    while (!ready.empty()) {
        std::size_t v = ready.back();
        ready.pop_back();
        ++done;
        for (const auto& a : arrows_)
            if (a.source == v && --indeg[a.target] == 0) ready.push_back(a.target);
    }
    return done == vertices_.size();
}

Quiver Quiver::opposite() const {
    std::vector<Arrow> rev;
    for (const auto& a : arrows_) rev.push_back({a.label, a.target, a.source});
    return Quiver(vertices_, rev);
}

bool operator==(const Quiver& a, const Quiver& b) {
    if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
    for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
        const Arrow &x = a.arrows_[i], &y = b.arrows_[i];
        if (x.label != y.label || x.source != y.source || x.target != y.target) return false;
    }
    return true;
}

std::string Path::label(const Quiver& q) const {
    if (arrows.empty()) return "e_" + q.vertices()[source];
    std::string s;
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        if (k) s += ".";
        s += q.arrow(arrows[k]).label;
    }
    return s;
}

Path Path::then(const Path& next) const {
    if (target != next.source) throw Error(ErrorKind::DiagramMismatch, "paths are not composable");
    Path p{source, next.target, arrows};
    p.arrows.insert(p.arrows.end(), next.arrows.begin(), next.arrows.end());
    return p;
}

Path trivial_path(std::size_t vertex) { return Path{vertex, vertex, {}}; }

Path arrow_path(const Quiver& q, std::size_t a) {
    return Path{q.arrow(a).source, q.arrow(a).target, {a}};
}

std::vector<Path> enumerate_paths(const Quiver& q, std::size_t i, std::size_t j) {
    if (!q.is_acyclic()) throw Error(ErrorKind::CyclicQuiver, "path enumeration needs an acyclic quiver");
    std::vector<Path> out;
    std::function<void(Path)> walk = [&](Path p) {
        if (p.target == j) out.push_back(p);
        for (std::size_t a : q.arrows_from(p.target)) {
            Path next = p;
            next.arrows.push_back(a);
            next.target = q.arrow(a).target;
            walk(std::move(next));
        }
    };
    walk(trivial_path(i));
    std::sort(out.begin(), out.end(), [&](const Path& x, const Path& y) {
        if (x.arrows.size() != y.arrows.size()) return x.arrows.size() < y.arrows.size();
        for (std::size_t k = 0; k < x.arrows.size(); ++k) {
            const auto& lx = q.arrow(x.arrows[k]).label;
            const auto& ly = q.arrow(y.arrows[k]).label;
            if (lx != ly) return lx < ly;
        }
        return false;
    });
    return out;
}

// ---------------------------------------------------------------------------

Diagram::Diagram(Quiver quiver, std::vector<AlgebraPtr> algebras, std::vector<Bimodule> bimodules)
    : field_(algebras.empty() ? Field::rationals() : algebras.front()->field()),
      quiver_(std::move(quiver)), algebras_(std::move(algebras)), bimodules_(std::move(bimodules)) {
    if (algebras_.size() != quiver_.vertex_count())
        throw Error(ErrorKind::DiagramMismatch, "need one algebra per vertex");
    if (bimodules_.size() != quiver_.arrow_count())
        throw Error(ErrorKind::DiagramMismatch, "need one bimodule per arrow");
    for (const auto& a : algebras_)
        if (!(a->field() == field_)) throw Error(ErrorKind::FieldMismatch, "vertex algebras over different fields");
    for (std::size_t a = 0; a < bimodules_.size(); ++a) {
        const Arrow& ar = quiver_.arrow(a);
        const Bimodule& n = bimodules_[a];
        if (!same_algebra(n.left(), algebras_[ar.source]) || !same_algebra(n.right(), algebras_[ar.target]))
            throw Error(ErrorKind::DiagramMismatch,
                        "bimodule of arrow '" + ar.label + "' does not match its endpoint algebras");
        if (auto err = check_bimodule_laws(n))
            throw Error(ErrorKind::InvalidData, "bimodule of arrow '" + ar.label + "': " + *err);
        certificates_.push_back({is_projective(n.as_left_module()), is_projective(n.as_right_module())});
    }
}

namespace {

bool same_bimodule(const Bimodule& x, const Bimodule& y) {
    return x.dim() == y.dim() && same_algebra(x.left(), y.left()) && same_algebra(x.right(), y.right()) &&
           x.left_actions() == y.left_actions() && x.right_actions() == y.right_actions();
}

}  // namespace

bool operator==(const Diagram& a, const Diagram& b) {
    if (!(a.field_ == b.field_) || !(a.quiver_ == b.quiver_)) return false;
    for (std::size_t i = 0; i < a.algebras_.size(); ++i)
        if (!same_algebra(a.algebras_[i], b.algebras_[i])) return false;
    for (std::size_t i = 0; i < a.bimodules_.size(); ++i)
        if (!same_bimodule(a.bimodules_[i], b.bimodules_[i])) return false;
    return true;
}

bool same_diagram(const DiagramPtr& a, const DiagramPtr& b) {
    if (a == b) return true;
    return a && b && *a == *b;
}

std::vector<PerArrowExactness> certify_exactness(const Diagram& d) {
    std::vector<PerArrowExactness> out;
    for (std::size_t a = 0; a < d.quiver().arrow_count(); ++a)
        out.push_back({d.quiver().arrow(a).label, d.certificate(a).psi_exact(), d.certificate(a).phi_exact()});
    return out;
}

// ---------------------------------------------------------------------------

PsiPathImage psi_on_path(const Diagram& d, const Path& p, const Module& m) {
    require_same_algebra(d.algebra(p.source), m.algebra(), "psi_on_path");
    PsiPathImage img{p, {}, m};
    for (std::size_t a : p.arrows) {
        img.stages.push_back(tensor_over(img.module, d.bimodule(a)));
        img.module = img.stages.back().module;
    }
    return img;
}

Matrix psi_on_path(const Diagram&, const Matrix& f, const PsiPathImage& source, const PsiPathImage& target) {
    if (!(source.path == target.path)) throw Error(ErrorKind::DiagramMismatch, "psi images along different paths");
    Matrix out = f;
    for (std::size_t s = 0; s < source.stages.size(); ++s)
        out = tensor_morphism(out, source.stages[s], target.stages[s]);
    return out;
}

PhiPathImage phi_on_path(const Diagram& d, const Path& p, const Module& m) {
    require_same_algebra(d.algebra(p.target), m.algebra(), "phi_on_path");
    PhiPathImage img{p, {}, m};
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
        img.stages.push_back(hom_from(d.bimodule(*it), img.module));
        img.module = img.stages.back().module;
    }
    return img;
}

Matrix phi_on_path(const Diagram&, const Matrix& f, const PhiPathImage& source, const PhiPathImage& target) {
    if (!(source.path == target.path)) throw Error(ErrorKind::DiagramMismatch, "phi images along different paths");
    Matrix out = f;
    for (std::size_t s = 0; s < source.stages.size(); ++s)
        out = hom_morphism(out, source.stages[s], target.stages[s]);
    return out;
}

PathBimodule path_bimodule(const Diagram& d, const Path& p) {
    const Field f = d.field();
    if (p.trivial()) {
        const AlgebraPtr& a = d.algebra(p.source);
        return {Bimodule::regular(a), a->unit(), Matrix(f, 0, a->dim())};
    }
    const Bimodule& first = d.bimodule(p.arrows.front());
    if (p.arrows.size() == 1) {
        Matrix id = Matrix::identity(f, first.dim());
        return {first, id, id};
    }
    Path rest{d.quiver().arrow(p.arrows[1]).source, p.target, {p.arrows.begin() + 1, p.arrows.end()}};
    PathBimodule inner = path_bimodule(d, rest);
    TensorProduct t = tensor_over(first.as_right_module(), inner.bimodule);
    std::vector<Matrix> left;
    const Matrix in = Matrix::identity(f, inner.bimodule.dim());
    for (const auto& l : first.left_actions()) left.push_back(t.projection * kron(l, in) * t.section);
    const Matrix i1 = Matrix::identity(f, first.dim());
    Bimodule np(first.left(), inner.bimodule.right(), t.module.dim(), std::move(left), t.module.actions());
    return {np, t.projection * kron(i1, inner.projection), kron(i1, inner.section) * t.section};
}

Matrix psi_associator(const Diagram& d, const PsiPathImage& iterated, const TensorProduct& composite,
                      const PathBimodule& np) {
    const Field f = d.field();
    Matrix s = Matrix::identity(f, iterated.stages.empty() ? composite.left_dim : iterated.stages.front().left_dim);
    for (const auto& st : iterated.stages) s = kron(s, Matrix::identity(f, st.right_dim)) * st.section;
    return composite.projection * kron(Matrix::identity(f, composite.left_dim), np.projection) * s;
}

namespace {

// Multilinear map N_{a_1} x ... x N_{a_n} -> M encoded by an element of the
// stage `level` module (stages are innermost first).
Matrix unfold(const PhiPathImage& img, std::size_t level, const Matrix& v) {
    if (level == 0) return v;
    const HomModule& st = img.stages[level - 1];
    Matrix e = st.element(v);
    std::vector<Matrix> cols;
    for (std::size_t c = 0; c < e.cols(); ++c) cols.push_back(unfold(img, level - 1, e.column(c)));
    const std::size_t rows = cols.empty() ? 0 : cols.front().rows();
    Field f = v.field();
    if (cols.empty()) {
        Matrix inner = unfold(img, level - 1, Matrix(f, st.target_dim, 1));
        return Matrix(f, inner.rows(), 0);
    }
    return Matrix::hstack(f, rows, cols);
}

}  // namespace

Matrix phi_associator(const Diagram& d, const PhiPathImage& iterated, const HomModule& composite,
                      const PathBimodule& np) {
    const Field f = d.field();
    const std::size_t n = iterated.module.dim();
    Matrix out(f, composite.module.dim(), n);
    const Module& base = iterated.stages.empty() ? iterated.module : Module();
    for (std::size_t c = 0; c < n; ++c) {
        Matrix e = Matrix::unit_column(f, n, c);
        Matrix g;
        if (iterated.stages.empty())
            g = free_extension(base, e, 1);
        else
            g = unfold(iterated, iterated.stages.size(), e) * np.section;
        out.set_block(0, c, composite.coords(g));
    }
    return out;
}

}  // namespace twrep
