#include "twrep/commands.hpp"

#include <fstream>
#include <sstream>

#include "twrep/error.hpp"
#include "twrep/instances.hpp"

namespace twrep {

namespace {

Json args_to_json(const CommandArgs& a) {
    Json j = {{"field", a.field}, {"seed", a.seed}, {"max_degree", a.max_degree}, {"variant", a.variant},
              {"emit_matrices", a.emit_matrices}, {"trials", a.trials}};
    if (!a.document.empty()) j["document"] = a.document;
    if (!a.x.empty()) j["x"] = a.x;
    if (!a.y.empty()) j["y"] = a.y;
    return j;
}

Json certificates_json(const Diagram& d) {
    Json out = Json::array();
    for (std::size_t a = 0; a < d.quiver().arrow_count(); ++a)
        out.push_back({{"arrow", d.quiver().arrow(a).label},
                       {"psi_exact", d.certificate(a).psi_exact()},
                       {"phi_exact", d.certificate(a).phi_exact()}});
    return out;
}

Json dims_json(const Representation& x) { return Json(x.dims()); }

Json les_json(const LesReport& r, bool emit) {
    Json nodes = Json::array();
    for (const LesNode& n : r.nodes)
        nodes.push_back({{"kind", to_string(n.kind)}, {"degree", n.degree}, {"dim", n.dim}, {"rank_in", n.rank_in},
                         {"rank_out", n.rank_out}, {"exact", n.exact}});
    Json j = {{"variant", to_string(r.variant)}, {"max_degree", r.max_degree}, {"vertex_dims", r.vertex_dims},
              {"arrow_dims", r.arrow_dims}, {"ext_dims", r.ext_dims}, {"cone_dims", r.cone_dims},
              {"hom_dim", r.hom_dim}, {"delta_chain_map", r.delta_chain_map}, {"all_exact", r.all_exact},
              {"consistent", r.consistent}, {"nodes", nodes}};
    if (emit) {
        Json ds = Json::array();
        for (const Matrix& m : r.delta) ds.push_back(matrix_to_json(m));
        j["delta"] = ds;
    }
    return j;
}

Json verification_json(const ThreeTermVerification& v) {
    Json j = {{"morphisms_valid", v.morphisms_valid}, {"composite_zero", v.composite_zero}, {"exact", v.exact},
              {"reason", v.reason}};
    j["failing_vertex"] = v.failing_vertex ? Json(*v.failing_vertex) : Json(nullptr);
    return j;
}

Json morphism_json(const RepMorphism& f) {
    Json j = Json::object();
    const Quiver& q = f.source.diagram()->quiver();
    for (std::size_t i = 0; i < q.vertex_count(); ++i) j[q.vertices()[i]] = matrix_to_json(f.components[i]);
    return j;
}

std::vector<LesVariant> requested_variants(const Diagram& d, const std::string& v, bool all_certified) {
    if (v == "psi") return {LesVariant::Psi};
    if (v == "phi") return {LesVariant::Phi};
    if (v == "both") return {LesVariant::Psi, LesVariant::Phi};
    if (v != "auto") throw Error(ErrorKind::InvalidData, "variant must be auto, psi, phi or both");
    if (!all_certified) return {certified_variant(d)};
    std::vector<LesVariant> out;
    for (LesVariant x : {LesVariant::Psi, LesVariant::Phi})
        if (hypotheses_hold(d, x)) out.push_back(x);
    if (out.empty()) out.push_back(certified_variant(d));  // throws with the failing arrow
    return out;
}

struct Loaded {
    Document doc;
    Json input;
};

Loaded load(const CommandArgs& a) {
    if (a.document.empty()) throw Error(ErrorKind::InvalidData, "a document path is required");
    std::ifstream in(a.document, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidData, a.document + ": cannot open");
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string bytes = ss.str();
    Json j;
    try {
        j = Json::parse(bytes);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::InvalidData, a.document + ": " + e.what());
    }
    return {parse_document(j), Json{{"path", a.document}, {"sha256", sha256_hex(bytes)}}};
}

const Representation& need(const Document& d, const std::string& label, const char* which) {
    if (label.empty()) throw Error(ErrorKind::InvalidData, std::string("missing representation argument ") + which);
    return d.representation(label);
}

struct Outcome {
    Json results;
    int exit_code = 0;
};

Outcome cmd_validate(const Document& doc) {
    Json reps = Json::array();
    for (const auto& r : doc.representations)
        reps.push_back({{"label", r.label}, {"form", r.form == Form::Psi ? "psi" : "phi"}, {"dims", dims_json(r.rep)}});
    return {{{"valid", true},
             {"vertices", doc.diagram->quiver().vertex_count()},
             {"arrows", doc.diagram->quiver().arrow_count()},
             {"acyclic", doc.diagram->quiver().is_acyclic()},
             {"representations", reps}},
            0};
}

Outcome cmd_hom(const Document& doc, const CommandArgs& a) {
    const Representation& x = need(doc, a.x, "x");
    const Representation& y = need(doc, a.y, "y");
    RepHom h = hom_rep(x, y);
    Json j = {{"x", a.x}, {"y", a.y}, {"dim", h.dim()}};
    if (a.emit_matrices) {
        Json basis = Json::array();
        for (std::size_t i = 0; i < h.dim(); ++i) basis.push_back(morphism_json(h.element(i)));
        j["basis"] = basis;
    }
    return {j, 0};
}

Outcome cmd_ext(const Document& doc, const CommandArgs& a, bool check) {
    const Representation& x = need(doc, a.x, "x");
    const Representation& y = need(doc, a.y, "y");
    std::vector<LesVariant> vs = requested_variants(*doc.diagram, a.variant, check);
    for (LesVariant v : vs) require_hypotheses(*doc.diagram, v);
    Json per = Json::object();
    std::vector<LesReport> reports;
    bool ok = true;
    for (LesVariant v : vs) {
        reports.push_back(les(v, x, y, a.max_degree));
        per[to_string(v)] = les_json(reports.back(), a.emit_matrices);
        ok = ok && reports.back().ok();
    }
    bool agree = true;
    for (const auto& r : reports) agree = agree && r.ext_dims == reports.front().ext_dims;
    Json j = {{"x", a.x}, {"y", a.y}, {"max_degree", a.max_degree}, {"ext_dims", reports.front().ext_dims},
              {"variants", per}, {"variants_agree", agree}, {"exact_at_every_node", ok}};
    return {j, (ok && agree) ? 0 : 3};
}

Outcome cmd_resolve(const Document& doc, const CommandArgs& a, bool co) {
    const Representation& x = need(doc, a.x, "x");
    Json j = {{"x", a.x}, {"object_dims", dims_json(x)}};
    const ThreeTermVerification* v;
    StandardResolution r;
    StandardCoresolution c;
    if (!co) {
        r = standard_resolution(x);
        j["left_dims"] = dims_json(r.left);
        j["middle_dims"] = dims_json(r.middle);
        v = &r.verification;
        if (a.emit_matrices) j["matrices"] = {{"beta", morphism_json(r.beta)}, {"gamma", morphism_json(r.gamma)}};
    } else {
        c = standard_coresolution(x);
        j["middle_dims"] = dims_json(c.middle);
        j["right_dims"] = dims_json(c.right);
        v = &c.verification;
        if (a.emit_matrices) j["matrices"] = {{"gamma", morphism_json(c.gamma)}, {"beta", morphism_json(c.beta)}};
    }
    j["verification"] = verification_json(*v);
    return {j, v->ok() ? 0 : 3};
}

struct VectShape {
    std::string name;
    VectDiagram v;
};

std::vector<VectShape> oracle_shapes(Field f) {
    return {{"a2", build_vect(f, quiver_a(2), {1})},
            {"a3", build_vect(f, quiver_a(3), {1, 2})},
            {"kronecker2", build_vect(f, quiver_single_arrow(), {2})},
            {"kronecker3", build_vect(f, quiver_single_arrow(), {3})},
            {"square", build_vect(f, quiver_commutative_square(), {1, 2, 3, 1})}};
}

Outcome cmd_oracle_compare(const CommandArgs& a, const std::optional<Document>& doc) {
    std::vector<VectShape> shapes;
    if (doc) shapes.push_back({"document", as_vect(doc->diagram)});
    else shapes = oracle_shapes(parse_field(a.field));
    Generator gen(a.seed);
    std::vector<std::size_t> per_trials(shapes.size()), per_mismatch(shapes.size());
    Json cases = Json::array();
    std::size_t mismatches = 0;
    for (std::size_t t = 0; t < a.trials; ++t) {
        const std::size_t s = t % shapes.size();
        const VectDiagram& v = shapes[s].v;
        const std::size_t n = v.diagram->quiver().vertex_count();
        std::vector<std::size_t> dx(n), dy(n);
        for (auto& d : dx) d = gen.below(4);
        for (auto& d : dy) d = gen.below(4);
        Representation x = gen.vect_representation(v, dx), y = gen.vect_representation(v, dy);
        EulerOracle o = euler_oracle(v, x, y);
        LesReport r = les(certified_variant(*v.diagram), x, y, a.max_degree);
        bool match = r.ok() && r.ext_dims[0] == o.hom && (a.max_degree < 1 || r.ext_dims[1] == o.ext1);
        for (std::size_t k = 2; k < r.ext_dims.size(); ++k) match = match && r.ext_dims[k] == 0;
        ++per_trials[s];
        if (!match) {
            ++mismatches;
            ++per_mismatch[s];
            cases.push_back({{"trial", t}, {"shape", shapes[s].name}, {"x_dims", dx}, {"y_dims", dy},
                             {"ext_dims", r.ext_dims}, {"oracle_hom", o.hom}, {"oracle_ext1", o.ext1}});
        }
    }
    Json per = Json::array();
    for (std::size_t s = 0; s < shapes.size(); ++s)
        per.push_back({{"shape", shapes[s].name},
                       {"multiplicities", shapes[s].v.multiplicities},
                       {"trials", per_trials[s]},
                       {"mismatches", per_mismatch[s]}});
    return {{{"trials", a.trials}, {"mismatches", mismatches}, {"shapes", per}, {"mismatch_cases", cases}},
            mismatches == 0 ? 0 : 3};
}

Json error_json(const std::exception& e) {
    Json j = {{"message", e.what()}};
    if (auto* err = dynamic_cast<const Error*>(&e)) {
        j["kind"] = to_string(err->kind());
        if (auto* h = dynamic_cast<const HypothesisViolation*>(err)) {
            j["arrow"] = h->arrow();
            j["side"] = h->side();
        }
    } else {
        j["kind"] = "Internal";
    }
    return j;
}

int exit_code_for_exception(const std::exception& e) {
    if (auto* err = dynamic_cast<const Error*>(&e)) return exit_code_for(err->kind());
    return 3;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::HypothesisViolated:
        case ErrorKind::FunctorNotExact:
            return 2;
        case ErrorKind::LiftFailure:
        case ErrorKind::UniquenessFailure:
        case ErrorKind::Internal:
            return 3;
        default:
            return 1;
    }
}

Json diagram_document(const DiagramPtr& d, const std::vector<NamedRepresentation>& reps) {
    DocumentBuilder b(d->field());
    std::vector<std::pair<std::string, AlgebraPtr>> algs;
    AlgebraPtr k = Algebra::ground_field(d->field());
    std::vector<std::string> vlabels;
    std::size_t next = 0;
    for (const AlgebraPtr& a : d->algebras()) {
        std::string label;
        for (const auto& [l, p] : algs)
            if (same_algebra(p, a)) label = l;
        if (label.empty()) {
            label = same_algebra(a, k) ? "k" : "A" + std::to_string(next++);
            algs.emplace_back(label, a);
            b.add_algebra(label, a);
        }
        vlabels.push_back(label);
    }
    const Quiver& q = d->quiver();
    std::vector<std::string> blabels;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        blabels.push_back("N_" + ar.label);
        b.add_bimodule(blabels.back(), vlabels[ar.source], vlabels[ar.target], d->bimodule(a));
    }
    b.set_quiver(q, vlabels, blabels);
    for (const auto& r : reps) b.add_representation(r.label, r.rep, r.form);
    return b.build();
}

Json preset_document(const CommandArgs& a) {
    const Field f = parse_field(a.field);
    Generator gen(a.seed);
    if (a.preset == "framed") {
        if (a.degree == 0) throw Error(ErrorKind::InvalidData, "degree must be positive");
        AlgebraPtr alg = Algebra::truncated_polynomial(f, a.degree);
        Module p;
        if (a.framing == "regular") {
            p = free_module(alg, 1);
        } else if (a.framing == "simple") {
            Matrix t(f, 1, 1);
            std::vector<Matrix> act{Matrix::identity(f, 1)};
            for (std::size_t i = 1; i < a.degree; ++i) act.push_back(t);
            p = Module::checked(alg, 1, act);
        } else {
            throw Error(ErrorKind::InvalidData, "framing must be regular or simple");
        }
        FramedDiagram fd = build_framed(alg, p);
        // E = the simple module k, V = k, s picks the generator of Hom_A(P, k).
        std::vector<Matrix> kact{Matrix::identity(f, 1)};
        for (std::size_t i = 1; i < a.degree; ++i) kact.push_back(Matrix(f, 1, 1));
        Module simple = Module::checked(alg, 1, kact);
        const std::size_t h = hom_space(p, simple).size();
        Matrix s(f, h, 1);
        if (h > 0) s.set(0, 0, 1);
        Representation e = framed_object(fd, simple, 1, s);
        Representation e0 = framed_object(fd, simple, 0, Matrix(f, h, 0));
        Representation r = gen.representation(fd.diagram, 3);
        return diagram_document(fd.diagram, {{"E", Form::Phi, e}, {"F", Form::Phi, e}, {"E0", Form::Phi, e0},
                                             {"X", Form::Psi, r}});
    }
    if (a.preset == "chain") {
        if (a.degree == 0) throw Error(ErrorKind::InvalidData, "degree must be positive");
        AlgebraPtr alg = a.degree == 1 ? Algebra::ground_field(f) : Algebra::truncated_polynomial(f, a.degree);
        ChainDiagram c = build_chain(Bimodule::regular(alg), a.tail);
        Representation x = gen.representation(c.diagram, 3), y = gen.representation(c.diagram, 3);
        return diagram_document(c.diagram, {{"X", Form::Psi, x}, {"Y", Form::Psi, y}});
    }
    if (a.preset == "vect") {
        if (a.multiplicity == 0) throw Error(ErrorKind::InvalidData, "multiplicity must be positive");
        const std::size_t m = a.multiplicity;
        VectDiagram v;
        if (a.shape == "a2") v = build_vect(f, quiver_a(2), {m});
        else if (a.shape == "a3") v = build_vect(f, quiver_a(3), {m, m});
        else if (a.shape == "kronecker") v = build_vect(f, quiver_single_arrow(), {std::max<std::size_t>(m, 2)});
        else if (a.shape == "square") v = build_vect(f, quiver_commutative_square(), {m, m, m, m});
        else throw Error(ErrorKind::InvalidData, "shape must be a2, a3, kronecker or square");
        const std::size_t n = v.diagram->quiver().vertex_count();
        std::vector<NamedRepresentation> reps;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::size_t> dims(n, 0);
            dims[i] = 1;
            reps.push_back({"S" + v.diagram->quiver().vertices()[i], Form::Psi, gen.vect_representation(v, dims)});
        }
        std::vector<std::size_t> dx(n), dy(n);
        for (auto& d : dx) d = 1 + gen.below(3);
        for (auto& d : dy) d = 1 + gen.below(3);
        reps.push_back({"X", Form::Psi, gen.vect_representation(v, dx)});
        reps.push_back({"Y", Form::Phi, gen.vect_representation(v, dy)});
        return diagram_document(v.diagram, reps);
    }
    throw Error(ErrorKind::InvalidData, "preset must be framed, chain or vect");
}

CommandOutput run_command(const CommandArgs& a) {
    if (a.name == "preset") {
        try {
            return {dump_canonical(preset_document(a)), 0};
        } catch (const std::exception& e) {
            Json r = {{"schema_version", kReportSchemaVersion},
                      {"command", {{"name", a.name}, {"args", args_to_json(a)}}},
                      {"status", {{"exit_code", exit_code_for_exception(e)}, {"error", error_json(e)}}}};
            return {dump_canonical(r), exit_code_for_exception(e)};
        }
    }
    Json report = {{"schema_version", kReportSchemaVersion},
                   {"command", {{"name", a.name}, {"args", args_to_json(a)}}},
                   {"inputs", Json::array()},
                   {"seed", a.seed},
                   {"results", nullptr},
                   {"certificates", Json::array()}};
    int code = 0;
    Json error = nullptr;
    try {
        std::optional<Document> doc;
        const bool needs_doc = a.name != "oracle-compare" || !a.document.empty();
        if (needs_doc) {
            Loaded l = load(a);
            report["inputs"].push_back(l.input);
            report["certificates"] = certificates_json(*l.doc.diagram);
            doc = std::move(l.doc);
        }
        Outcome o;
        if (a.name == "validate") o = cmd_validate(*doc);
        else if (a.name == "hom") o = cmd_hom(*doc, a);
        else if (a.name == "ext") o = cmd_ext(*doc, a, false);
        else if (a.name == "les-check") o = cmd_ext(*doc, a, true);
        else if (a.name == "resolve") o = cmd_resolve(*doc, a, false);
        else if (a.name == "coresolve") o = cmd_resolve(*doc, a, true);
        else if (a.name == "oracle-compare") o = cmd_oracle_compare(a, doc);
        else throw Error(ErrorKind::InvalidData, "unknown command '" + a.name + "'");
        report["results"] = o.results;
        code = o.exit_code;
    } catch (const std::exception& e) {
        code = exit_code_for_exception(e);
        error = error_json(e);
    }
    report["status"] = {{"exit_code", code}, {"error", error}};
    return {dump_canonical(report), code};
}

}  // namespace twrep
