#include "twrep/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "twrep/error.hpp"

namespace twrep {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& msg) {
    throw Error(ErrorKind::InvalidData, where + ": " + msg);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) bad(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(where, std::string("missing key '") + key + "'");
    return *it;
}

std::string string_member(const Json& j, const char* key, const std::string& where) {
    const Json& v = member(j, key, where);
    if (!v.is_string()) bad(where + "." + key, "expected a string");
    return v.get<std::string>();
}

std::size_t size_member(const Json& j, const char* key, const std::string& where) {
    const Json& v = member(j, key, where);
    if (!v.is_number_unsigned()) bad(where + "." + key, "expected a non-negative integer");
    return v.get<std::size_t>();
}

const Json& array_member(const Json& j, const char* key, const std::string& where) {
    const Json& v = member(j, key, where);
    if (!v.is_array()) bad(where + "." + key, "expected an array");
    return v;
}

template <class T>
const T& lookup(const std::vector<std::pair<std::string, T>>& items, const std::string& label, const std::string& where,
                const char* what) {
    for (const auto& [l, v] : items)
        if (l == label) return v;
    bad(where, std::string("unknown ") + what + " '" + label + "'");
}

template <class T>
void require_fresh(const std::vector<std::pair<std::string, T>>& items, const std::string& label,
                   const std::string& where) {
    for (const auto& [l, v] : items)
        if (l == label) bad(where, "duplicate label '" + label + "'");
}

std::vector<Matrix> action_from_json(const Field& f, const Json& j, std::size_t count, std::size_t rows,
                                     std::size_t cols, const std::string& where) {
    if (!j.is_array() || j.size() != count)
        bad(where, "expected " + std::to_string(count) + " action matrices");
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(matrix_from_json(f, j[i], rows, cols, where + "[" + std::to_string(i) + "]"));
    return out;
}

Json actions_to_json(const std::vector<Matrix>& ms) {
    Json out = Json::array();
    for (const auto& m : ms) out.push_back(matrix_to_json(m));
    return out;
}

const char* form_name(Form f) { return f == Form::Psi ? "psi" : "phi"; }

// Psi form given on X_i (x)_k N; must vanish on the balancing relations.
Matrix psi_from_document(const Representation& shell, std::size_t a, const Matrix& g, const std::string& where) {
    const TensorProduct& t = shell.psi_source(a);
    Matrix m = g * t.section;
    if (!(m * t.projection == g)) bad(where, "map is not balanced over the source algebra");
    return m;
}

Matrix phi_from_document(const Representation& shell, std::size_t a, const Matrix& g, const std::string& where) {
    const HomModule& h = shell.phi_target(a);
    const Field f = g.field();
    Matrix out(f, h.module.dim(), g.cols());
    for (std::size_t c = 0; c < g.cols(); ++c) {
        Matrix fmap = Matrix::unvec(g.column(c), h.target_dim, h.bimodule_dim);
        Matrix coords = h.coords(fmap);
        if (!(h.element(coords) == fmap))
            bad(where, "column " + std::to_string(c) + " is not linear over the target algebra");
        out.set_block(0, c, coords);
    }
    return out;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
    if (s.field().is_prime()) return Json(s.residue());
    return Json(s.to_string());
}

Scalar scalar_from_json(const Field& f, const Json& j, const std::string& where) {
    if (j.is_number_integer()) {
        if (f.is_prime()) {
            long long v = j.get<long long>();
            if (v < 0 || v >= static_cast<long long>(f.characteristic()))
                bad(where, "residue out of range for " + f.name());
            return Scalar(f, v);
        }
        return Scalar(f, j.get<long long>());
    }
    if (j.is_string()) {
        if (f.is_prime()) bad(where, "prime-field elements are integers");
        try {
            return Scalar::parse(f, j.get<std::string>());
        } catch (const std::exception& e) {
            bad(where, std::string("bad rational: ") + e.what());
        }
    }
    bad(where, "expected a scalar");
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!j.is_array()) bad(where, "expected a list of rows");
    if (j.size() != rows && !(cols == 0 && j.empty()))
        bad(where, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < j.size(); ++r) {
        const Json& row = j[r];
        if (!row.is_array() || row.size() != cols)
            bad(where, "row " + std::to_string(r) + " should have " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, scalar_from_json(f, row[c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
    }
    return m;
}

Json field_to_json(const Field& f) {
    if (f.is_prime()) return Json{{"kind", "Fp"}, {"p", f.characteristic()}};
    return Json{{"kind", "Q"}};
}

Field field_from_json(const Json& j) {
    const std::string kind = string_member(j, "kind", "field");
    if (kind == "Q") return Field::rationals();
    if (kind == "Fp") {
        std::size_t p = size_member(j, "p", "field");
        if (p > 0x7fffffffu || !is_prime_number(p)) bad("field.p", "not a prime below 2^31");
        return Field::prime(static_cast<std::uint32_t>(p));
    }
    bad("field.kind", "expected \"Q\" or \"Fp\"");
}

const Representation& Document::representation(const std::string& label) const {
    for (const auto& r : representations)
        if (r.label == label) return r.rep;
    throw Error(ErrorKind::InvalidData, "unknown representation '" + label + "'");
}

Document parse_document(const Json& j) {
    Document doc;
    doc.field = field_from_json(member(j, "field", "document"));
    const Field f = doc.field;

    const Json& algs = array_member(j, "algebras", "document");
    for (std::size_t i = 0; i < algs.size(); ++i) {
        const std::string where = "algebras[" + std::to_string(i) + "]";
        const Json& a = algs[i];
        const std::string label = string_member(a, "label", where);
        require_fresh(doc.algebras, label, where);
        const std::size_t dim = size_member(a, "dim", where);
        std::vector<std::string> basis;
        if (a.contains("basis")) {
            const Json& b = array_member(a, "basis", where);
            if (b.size() != dim) bad(where + ".basis", "needs one label per basis element");
            for (const auto& s : b) {
                if (!s.is_string()) bad(where + ".basis", "labels must be strings");
                basis.push_back(s.get<std::string>());
            }
        } else {
            for (std::size_t k = 0; k < dim; ++k) basis.push_back("b" + std::to_string(k));
        }
        std::vector<Algebra::Constant> cs;
        const Json& cj = array_member(a, "constants", where);
        for (std::size_t c = 0; c < cj.size(); ++c) {
            const std::string w = where + ".constants[" + std::to_string(c) + "]";
            const Json& t = cj[c];
            if (!t.is_array() || t.size() != 4) bad(w, "expected [i, j, k, value]");
            for (int q = 0; q < 3; ++q)
                if (!t[q].is_number_unsigned() || t[q].get<std::size_t>() >= dim) bad(w, "index out of range");
            cs.push_back({t[0].get<std::size_t>(), t[1].get<std::size_t>(), t[2].get<std::size_t>(),
                          scalar_from_json(f, t[3], w)});
        }
        const Json& uj = array_member(a, "unit", where);
        if (uj.size() != dim) bad(where + ".unit", "needs one coordinate per basis element");
        Matrix unit(f, dim, 1);
        for (std::size_t k = 0; k < dim; ++k) unit.set(k, 0, scalar_from_json(f, uj[k], where + ".unit"));
        try {
            doc.algebras.emplace_back(label, std::make_shared<const Algebra>(f, basis, cs, unit));
        } catch (const Error& e) {
            bad(where, e.what());
        }
    }

    if (j.contains("modules")) {
        const Json& mods = array_member(j, "modules", "document");
        for (std::size_t i = 0; i < mods.size(); ++i) {
            const std::string where = "modules[" + std::to_string(i) + "]";
            const Json& m = mods[i];
            const std::string label = string_member(m, "label", where);
            require_fresh(doc.modules, label, where);
            const AlgebraPtr& a = lookup(doc.algebras, string_member(m, "algebra", where), where, "algebra");
            const std::size_t dim = size_member(m, "dim", where);
            auto act = action_from_json(f, member(m, "action", where), a->dim(), dim, dim, where + ".action");
            Module mod(a, dim, std::move(act));
            if (auto err = check_module_laws(mod)) bad(where, *err);
            doc.modules.emplace_back(label, std::move(mod));
        }
    }

    const Json& bims = array_member(j, "bimodules", "document");
    for (std::size_t i = 0; i < bims.size(); ++i) {
        const std::string where = "bimodules[" + std::to_string(i) + "]";
        const Json& b = bims[i];
        const std::string label = string_member(b, "label", where);
        require_fresh(doc.bimodules, label, where);
        const AlgebraPtr& l = lookup(doc.algebras, string_member(b, "left", where), where, "algebra");
        const AlgebraPtr& r = lookup(doc.algebras, string_member(b, "right", where), where, "algebra");
        const std::size_t dim = size_member(b, "dim", where);
        auto la = action_from_json(f, member(b, "left_action", where), l->dim(), dim, dim, where + ".left_action");
        auto ra = action_from_json(f, member(b, "right_action", where), r->dim(), dim, dim, where + ".right_action");
        Bimodule n(l, r, dim, std::move(la), std::move(ra));
        if (auto err = check_bimodule_laws(n)) bad(where, *err);
        doc.bimodules.emplace_back(label, std::move(n));
    }

    const Json& q = member(j, "quiver", "document");
    const Json& vj = array_member(q, "vertices", "quiver");
    std::vector<std::string> vlabels;
    std::vector<AlgebraPtr> valgs;
    for (std::size_t i = 0; i < vj.size(); ++i) {
        const std::string where = "quiver.vertices[" + std::to_string(i) + "]";
        const std::string label = string_member(vj[i], "label", where);
        for (const auto& v : vlabels)
            if (v == label) bad(where, "duplicate vertex '" + label + "'");
        vlabels.push_back(label);
        doc.vertex_algebras.push_back(string_member(vj[i], "algebra", where));
        valgs.push_back(lookup(doc.algebras, doc.vertex_algebras.back(), where, "algebra"));
    }
    auto vertex = [&](const std::string& label, const std::string& where) {
        for (std::size_t i = 0; i < vlabels.size(); ++i)
            if (vlabels[i] == label) return i;
        bad(where, "unknown vertex '" + label + "'");
    };
    const Json& aj = array_member(q, "arrows", "quiver");
    std::vector<Arrow> arrows;
    std::vector<Bimodule> abims;
    for (std::size_t i = 0; i < aj.size(); ++i) {
        const std::string where = "quiver.arrows[" + std::to_string(i) + "]";
        Arrow ar{string_member(aj[i], "label", where), vertex(string_member(aj[i], "source", where), where),
                 vertex(string_member(aj[i], "target", where), where)};
        for (const auto& other : arrows)
            if (other.label == ar.label) bad(where, "duplicate arrow '" + ar.label + "'");
        doc.arrow_bimodules.push_back(string_member(aj[i], "bimodule", where));
        const Bimodule& n = lookup(doc.bimodules, doc.arrow_bimodules.back(), where, "bimodule");
        if (!same_algebra(n.left(), valgs[ar.source]) || !same_algebra(n.right(), valgs[ar.target]))
            bad(where, "bimodule sides do not match the endpoint algebras");
        arrows.push_back(ar);
        abims.push_back(n);
    }
    try {
        doc.diagram = std::make_shared<const Diagram>(Quiver(vlabels, arrows), valgs, abims);
    } catch (const Error& e) {
        bad("quiver", e.what());
    }

    if (j.contains("representations")) {
        const Json& reps = array_member(j, "representations", "document");
        const Quiver& qv = doc.diagram->quiver();
        for (std::size_t i = 0; i < reps.size(); ++i) {
            const std::string where = "representations[" + std::to_string(i) + "]";
            const Json& r = reps[i];
            NamedRepresentation nr;
            nr.label = string_member(r, "label", where);
            for (const auto& other : doc.representations)
                if (other.label == nr.label) bad(where, "duplicate label '" + nr.label + "'");
            const std::string form = string_member(r, "form", where);
            if (form == "psi") nr.form = Form::Psi;
            else if (form == "phi") nr.form = Form::Phi;
            else bad(where + ".form", "expected \"psi\" or \"phi\"");
            const Json& comps = member(r, "components", where);
            if (!comps.is_object() || comps.size() != qv.vertex_count())
                bad(where + ".components", "needs one module per vertex");
            std::vector<Module> cs;
            for (std::size_t v = 0; v < qv.vertex_count(); ++v) {
                const std::string w = where + ".components." + vlabels[v];
                if (!comps.contains(vlabels[v]) || !comps[vlabels[v]].is_string()) bad(w, "missing module reference");
                const Module& m = lookup(doc.modules, comps[vlabels[v]].get<std::string>(), w, "module");
                if (!same_algebra(m.algebra(), valgs[v])) bad(w, "module is over the wrong algebra");
                cs.push_back(m);
            }
            const Json& maps = member(r, "maps", where);
            if (!maps.is_object() || maps.size() != qv.arrow_count())
                bad(where + ".maps", "needs one structure matrix per arrow");
            std::vector<Matrix> empty(qv.arrow_count());
            Representation shell = Representation::unchecked(doc.diagram, cs, empty, empty);
            std::vector<Matrix> structure;
            for (std::size_t a = 0; a < qv.arrow_count(); ++a) {
                const Arrow& ar = qv.arrow(a);
                const std::string w = where + ".maps." + ar.label;
                if (!maps.contains(ar.label)) bad(w, "missing structure matrix");
                const std::size_t n = doc.diagram->bimodule(a).dim();
                const std::size_t xi = cs[ar.source].dim(), xj = cs[ar.target].dim();
                if (nr.form == Form::Psi) {
                    Matrix g = matrix_from_json(f, maps[ar.label], xj, xi * n, w);
                    structure.push_back(psi_from_document(shell, a, g, w));
                } else {
                    Matrix g = matrix_from_json(f, maps[ar.label], xj * n, xi, w);
                    structure.push_back(phi_from_document(shell, a, g, w));
                }
            }
            nr.rep = nr.form == Form::Psi ? Representation::from_psi(doc.diagram, cs, structure)
                                          : Representation::from_phi(doc.diagram, cs, structure);
            auto violations = validate(nr.rep);
            if (!violations.empty()) bad(where, violations.front().where + ": " + violations.front().message);
            doc.representations.push_back(std::move(nr));
        }
    }
    return doc;
}

Document load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidData, path + ": cannot open");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::InvalidData, path + ": " + e.what());
    }
    return parse_document(j);
}

Matrix psi_document_matrix(const Representation& x, std::size_t a) {
    return x.psi_map(a) * x.psi_source(a).projection;
}

Matrix phi_document_matrix(const Representation& x, std::size_t a) {
    const HomModule& h = x.phi_target(a);
    const Matrix& phi = x.phi_map(a);
    Matrix out(x.field(), h.target_dim * h.bimodule_dim, phi.cols());
    for (std::size_t c = 0; c < phi.cols(); ++c) out.set_block(0, c, h.element(phi.column(c)).vec());
    return out;
}

void DocumentBuilder::add_algebra(const std::string& label, const AlgebraPtr& a) {
    Json cs = Json::array();
    for (std::size_t i = 0; i < a->dim(); ++i)
        for (std::size_t j = 0; j < a->dim(); ++j)
            for (std::size_t k = 0; k < a->dim(); ++k) {
                Scalar v = a->constant(i, j, k);
                if (!v.is_zero()) cs.push_back(Json::array({i, j, k, scalar_to_json(v)}));
            }
    Json unit = Json::array();
    for (std::size_t k = 0; k < a->dim(); ++k) unit.push_back(scalar_to_json(a->unit().at(k, 0)));
    algebras_.push_back({{"label", label}, {"dim", a->dim()}, {"basis", a->basis_labels()}, {"constants", cs},
                         {"unit", unit}});
    known_.emplace_back(label, a);
}

std::string DocumentBuilder::algebra_label(const AlgebraPtr& a) const {
    for (const auto& [l, p] : known_)
        if (same_algebra(p, a)) return l;
    throw Error(ErrorKind::Internal, "algebra not registered with the document builder");
}

void DocumentBuilder::add_module(const std::string& label, const std::string& algebra, const Module& m) {
    modules_.push_back({{"label", label}, {"algebra", algebra}, {"dim", m.dim()}, {"action", actions_to_json(m.actions())}});
}

void DocumentBuilder::add_bimodule(const std::string& label, const std::string& left, const std::string& right,
                                   const Bimodule& n) {
    bimodules_.push_back({{"label", label}, {"left", left}, {"right", right}, {"dim", n.dim()},
                          {"left_action", actions_to_json(n.left_actions())},
                          {"right_action", actions_to_json(n.right_actions())}});
}

void DocumentBuilder::set_quiver(const Quiver& q, const std::vector<std::string>& vertex_algebras,
                                 const std::vector<std::string>& arrow_bimodules) {
    Json vs = Json::array(), as = Json::array();
    for (std::size_t i = 0; i < q.vertex_count(); ++i)
        vs.push_back({{"label", q.vertices()[i]}, {"algebra", vertex_algebras[i]}});
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        as.push_back({{"label", ar.label}, {"source", q.vertices()[ar.source]}, {"target", q.vertices()[ar.target]},
                      {"bimodule", arrow_bimodules[a]}});
    }
    quiver_ = {{"vertices", vs}, {"arrows", as}};
    vertex_algebras_ = vertex_algebras;
}

void DocumentBuilder::add_representation(const std::string& label, const Representation& x, Form form) {
    const Quiver& q = x.diagram()->quiver();
    Json comps = Json::object(), maps = Json::object();
    for (std::size_t i = 0; i < q.vertex_count(); ++i) {
        const std::string mlabel = label + "@" + q.vertices()[i];
        add_module(mlabel, vertex_algebras_.at(i), x.component(i));
        comps[q.vertices()[i]] = mlabel;
    }
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
        maps[q.arrow(a).label] = matrix_to_json(form == Form::Psi ? psi_document_matrix(x, a) : phi_document_matrix(x, a));
    representations_.push_back({{"label", label}, {"form", form_name(form)}, {"components", comps}, {"maps", maps}});
}

Json DocumentBuilder::build() const {
    return {{"field", field_to_json(field_)}, {"algebras", algebras_}, {"modules", modules_},
            {"bimodules", bimodules_}, {"quiver", quiver_}, {"representations", representations_}};
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error(ErrorKind::Internal, "SHA-256 failed");
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return out.str();
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace twrep
