// Runs the nine acceptance criteria and prints one PASS/FAIL line for each.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "sample_diagrams.hpp"
#include "twrep/commands.hpp"
#include "twrep/error.hpp"

using namespace twrep;
using twrep::testing::NamedDiagram;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

Matrix flatten(const RepMorphism& f) {
    std::vector<Matrix> parts;
    for (const auto& c : f.components) parts.push_back(c.vec());
    return Matrix::vstack(f.source.field(), 1, parts);
}

std::size_t total_dim(const Representation& x) {
    std::size_t n = 0;
    for (auto d : x.dims()) n += d;
    return n;
}

// Rank of h |-> post o h on Hom(W, X), or h |-> h o pre on Hom(Y, W).
std::size_t rank_post(const RepHom& hom, const RepMorphism& post, std::size_t target_size) {
    Field f = post.source.field();
    Matrix cols(f, target_size, hom.dim());
    for (std::size_t j = 0; j < hom.dim(); ++j) cols.set_block(0, j, flatten(compose(post, hom.element(j))));
    return rank(cols);
}
std::size_t rank_pre(const RepHom& hom, const RepMorphism& pre, std::size_t target_size) {
    Field f = pre.source.field();
    Matrix cols(f, target_size, hom.dim());
    for (std::size_t j = 0; j < hom.dim(); ++j) cols.set_block(0, j, flatten(compose(hom.element(j), pre)));
    return rank(cols);
}

std::size_t hom_vec_size(const Representation& a, const Representation& b) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < a.vertex_count(); ++i) n += a.component(i).dim() * b.component(i).dim();
    return n;
}

std::vector<std::size_t> random_dims(Generator& g, std::size_t n, std::size_t max_dim) {
    std::vector<std::size_t> d(n);
    for (auto& x : d) x = g.below(max_dim + 1);
    return d;
}

Outcome abelian_structure() {
    const Field f = Field::prime(5);
    std::size_t samples = 0;
    for (const NamedDiagram& nd : testing::vect_shapes(f)) {
        VectDiagram v = as_vect(nd.diagram);
        Generator gen(1001);
        const std::size_t n = nd.diagram->quiver().vertex_count();
        for (int t = 0; t < 100; ++t) {
            Representation x = gen.vect_representation(v, random_dims(gen, n, 4));
            Representation y = gen.vect_representation(v, random_dims(gen, n, 4));
            Representation w = gen.vect_representation(v, random_dims(gen, n, 2));
            RepMorphism fm = gen.rep_morphism(x, y);
            auto fail = [&](const std::string& what) { return Outcome{false, nd.name + " sample " + std::to_string(t) + ": " + what}; };
            if (check_morphism(fm)) return fail("generated morphism invalid");
            RepKernel k = kernel(fm);
            RepCokernel c = cokernel(fm);
            if (check_morphism(k.inclusion) || check_morphism(c.projection)) return fail("structure maps invalid");
            if (!flatten(compose(fm, k.inclusion)).is_zero()) return fail("f o i != 0");
            if (!flatten(compose(c.projection, fm)).is_zero()) return fail("p o f != 0");
            for (std::size_t i = 0; i < n; ++i) {
                if (rank(k.inclusion.components[i]) != k.object.component(i).dim()) return fail("inclusion not injective");
                if (rank(c.projection.components[i]) != c.object.component(i).dim()) return fail("projection not surjective");
            }
            if (!is_exact_at(k.inclusion, fm).exact) return fail("not exact at the source");
            if (!is_exact_at(fm, c.projection).exact) return fail("not exact at the target");
            // Hom(W, K) = {h : W -> X | f h = 0}, with i o - injective.
            RepHom wx = hom_rep(w, x), wk = hom_rep(w, k.object);
            if (wk.dim() != wx.dim() - rank_post(wx, fm, hom_vec_size(w, y))) return fail("kernel universal property (dimension)");
            if (rank_post(wk, k.inclusion, hom_vec_size(w, x)) != wk.dim()) return fail("kernel universal property (injectivity)");
            // Hom(C, W) = {h : Y -> W | h f = 0}, with - o p injective.
            RepHom yw = hom_rep(y, w), cw = hom_rep(c.object, w);
            if (cw.dim() != yw.dim() - rank_pre(yw, fm, hom_vec_size(x, w))) return fail("cokernel universal property (dimension)");
            if (rank_pre(cw, c.projection, hom_vec_size(y, w)) != cw.dim()) return fail("cokernel universal property (injectivity)");
            ++samples;
        }
    }
    return {true, std::to_string(samples) + " morphisms over 4 shapes"};
}

Outcome standard_resolutions() {
    const Field f = Field::prime(5);
    std::size_t samples = 0;
    auto shapes = testing::vect_shapes(f);
    for (const NamedDiagram& nd : testing::algebra_shapes(f)) shapes.push_back(nd);
    for (const NamedDiagram& nd : shapes) {
        Generator gen(2002);
        const bool vect = samples < 400;
        const int count = vect ? 100 : 20;
        for (int t = 0; t < count; ++t) {
            Representation x = vect ? gen.vect_representation(as_vect(nd.diagram),
                                                              random_dims(gen, nd.diagram->quiver().vertex_count(), 4))
                                    : gen.representation(nd.diagram, 3);
            StandardResolution r = standard_resolution(x);
            StandardCoresolution c = standard_coresolution(x);
            if (!r.verification.ok()) return {false, nd.name + ": resolution " + r.verification.reason};
            if (!c.verification.ok()) return {false, nd.name + ": coresolution " + c.verification.reason};
            ++samples;
        }
    }
    return {true, std::to_string(samples) + " representations, resolution and coresolution"};
}

Outcome adjunctions() {
    const Field f = Field::prime(5);
    std::size_t samples = 0;
    auto shapes = testing::vect_shapes(f);
    for (const NamedDiagram& nd : testing::algebra_shapes(f)) shapes.push_back(nd);
    Generator gen(3003);
    for (const NamedDiagram& nd : shapes) {
        for (int t = 0; t < 15; ++t) {
            const std::size_t i = gen.below(nd.diagram->quiver().vertex_count());
            Module m = gen.module(nd.diagram->algebra(i), 3);
            Representation x = gen.representation(nd.diagram, 3);
            AdjunctionCheck s = adjunction_check_shriek(nd.diagram, i, m, x);
            AdjunctionCheck c = adjunction_check_star(nd.diagram, i, m, x);
            if (!s.ok || s.rep_dim != s.module_dim) return {false, nd.name + ": left adjoint " + s.failure};
            if (!c.ok || c.rep_dim != c.module_dim) return {false, nd.name + ": right adjoint " + c.failure};
            ++samples;
        }
    }
    return {true, std::to_string(samples) + " samples, both adjunctions with round trips"};
}

Outcome long_exact_sequences() {
    const Field f = Field::prime(5);
    auto shapes = testing::vect_shapes(f);
    for (const NamedDiagram& nd : testing::algebra_shapes(f)) shapes.push_back(nd);
    std::size_t pairs = 0, compared = 0;
    for (const NamedDiagram& nd : shapes) {
        Generator gen(4004);
        const bool psi = hypotheses_hold(*nd.diagram, LesVariant::Psi);
        const bool phi = hypotheses_hold(*nd.diagram, LesVariant::Phi);
        for (int t = 0; t < 50; ++t) {
            Representation x = gen.representation(nd.diagram, 3), y = gen.representation(nd.diagram, 3);
            std::optional<LesReport> rp, rf;
            if (psi) rp = les(LesVariant::Psi, x, y, 4);
            if (phi) rf = les(LesVariant::Phi, x, y, 4);
            for (const auto* r : {&rp, &rf})
                if (*r && !(*r)->ok())
                    return {false, nd.name + " pair " + std::to_string(t) + ": " + to_string((*r)->variant) + " not exact"};
            if (rp && rf) {
                if (rp->ext_dims != rf->ext_dims) return {false, nd.name + ": variants disagree"};
                ++compared;
            }
            ++pairs;
        }
    }
    return {true, std::to_string(pairs) + " pairs to degree 4, " + std::to_string(compared) + " with both variants agreeing"};
}

Outcome vect_oracle() {
    const Field f = Field::prime(5);
    std::vector<VectDiagram> family;
    for (std::size_t m : {1, 2, 3}) {
        family.push_back(build_vect(f, quiver_single_arrow(), {m}));
        family.push_back(build_vect(f, quiver_a(3), {m, 4 - m}));
        family.push_back(build_vect(f, quiver_commutative_square(), {m, 1, 2, m}));
    }
    Generator gen(5005);
    std::size_t samples = 0;
    for (int t = 0; t < 216; ++t) {
        const VectDiagram& v = family[t % family.size()];
        const std::size_t n = v.diagram->quiver().vertex_count();
        Representation x = gen.vect_representation(v, random_dims(gen, n, 3));
        Representation y = gen.vect_representation(v, random_dims(gen, n, 3));
        EulerOracle o = euler_oracle(v, x, y);
        LesReport r = les(LesVariant::Psi, x, y, 3);
        if (!r.ok() || r.ext_dims[0] != o.hom || r.ext_dims[1] != o.ext1 || r.ext_dims[2] != 0 || r.ext_dims[3] != 0)
            return {false, "mismatch at instance " + std::to_string(t)};
        ++samples;
    }
    VectDiagram a2 = build_vect(f, quiver_a(2), {1});
    VectDiagram kr = build_vect(f, quiver_single_arrow(), {2});
    auto anchor = [&](const VectDiagram& v) {
        Representation x = gen.vect_representation(v, {1, 0}), y = gen.vect_representation(v, {0, 1});
        EulerOracle o = euler_oracle(v, x, y);
        LesReport r = les(LesVariant::Psi, x, y, 2);
        return std::make_pair(std::make_pair(o.hom, o.ext1), std::make_pair(r.ext_dims[0], r.ext_dims[1]));
    };
    auto pa = anchor(a2), pk = anchor(kr);
    using P = std::pair<std::size_t, std::size_t>;
    if (pa.first != P{0, 1} || pa.second != P{0, 1}) return {false, "A2 anchor is not (0,1)"};
    if (pk.first != P{0, 2} || pk.second != P{0, 2}) return {false, "Kronecker anchor is not (0,2)"};
    return {true, std::to_string(samples) + " instances with m in {1,2,3}; anchors (0,1) and (0,2)"};
}

Outcome framed_higher() {
    std::ostringstream detail;
    for (Field f : {Field::rationals(), Field::prime(5)}) {
        auto a = Algebra::truncated_polynomial(f, 2);
        FramedDiagram fd = build_framed(a, free_module(a, 1));
        Module k = testing::dual_numbers_simple(a);
        Matrix s = Matrix::identity(f, 1);  // evaluation at the generator
        Representation e = framed_object(fd, k, 1, s);
        FramedLes fl = framed_les(fd, e, e, 4);
        if (!fl.psi.ok() || !fl.phi || !fl.phi->ok() || !fl.higher_agree) return {false, f.name() + ": sequence check failed"};
        for (std::size_t d = 2; d <= 4; ++d) {
            if (fl.psi.ext_dims[d] != 1 || fl.phi->ext_dims[d] != 1) return {false, f.name() + ": Ext^" + std::to_string(d) + " != 1"};
            if (ext_dim(d, k, k) != 1) return {false, f.name() + ": module Ext^" + std::to_string(d) + " != 1"};
        }
        detail << f.name() << " ext dims";
        for (auto x : fl.psi.ext_dims) detail << " " << x;
        detail << "; ";
    }
    return {true, detail.str() + "Ext^k = 1 for k = 2..4"};
}

Outcome witnesses() {
    const Field f = Field::prime(5);
    std::size_t tests = 0;
    for (const NamedDiagram& nd : testing::algebra_shapes(f)) {
        Generator gen(7007);
        std::vector<Representation> family;
        for (int t = 0; t < 6; ++t) family.push_back(gen.representation(nd.diagram, 3));
        for (std::size_t i = 0; i < nd.diagram->quiver().vertex_count(); ++i) {
            const AlgebraPtr& a = nd.diagram->algebra(i);
            if (!projectivity_test(nd.diagram, i, free_module(a, 2), family).pass)
                return {false, nd.name + ": Ext^1(sigma_! P, Y) != 0"};
            if (!injectivity_test(nd.diagram, i, dualize_over(free_module(a->opposite(), 1), a), family).pass)
                return {false, nd.name + ": Ext^1(Y, sigma_* I) != 0"};
            tests += 2;
        }
    }
    auto a = Algebra::truncated_polynomial(f, 2);
    auto d = std::make_shared<const Diagram>(quiver_single_arrow(), std::vector<AlgebraPtr>{a, a},
                                             std::vector<Bimodule>{Bimodule::regular(a)});
    Module simple = testing::dual_numbers_simple(a);
    WitnessResult w = projectivity_test(d, 0, simple, {sigma_shriek(d, 0, simple).object});
    if (w.pass || !w.witness) return {false, "non-projective module produced no witness"};
    return {true, std::to_string(tests) + " vanishing tests; non-projective k gives witness with Ext^1 = " +
                      std::to_string(w.ext1.at(*w.witness))};
}

Outcome both_exact() {
    const Field f = Field::prime(5);
    std::size_t samples = 0;
    for (const NamedDiagram& nd : testing::algebra_shapes(f)) {
        const Diagram& d = *nd.diagram;
        Generator gen(8008);
        for (std::size_t a = 0; a < d.quiver().arrow_count(); ++a) {
            if (!(d.certificate(a).psi_exact() && d.certificate(a).phi_exact())) continue;
            for (int t = 0; t < 15; ++t) {
                Module m = gen.module(d.algebra(d.quiver().arrow(a).source), 3);
                Module n = gen.module(d.algebra(d.quiver().arrow(a).target), 3);
                BothExactCheck c = both_exact_check(d, a, m, n, 3);
                if (!c.both_exact || !c.agree()) return {false, nd.name + ": Ext^k(Psi M, N) != Ext^k(M, Phi N)"};
                ++samples;
            }
        }
    }
    if (samples < 50) return {false, "only " + std::to_string(samples) + " samples"};
    return {true, std::to_string(samples) + " samples per degree 0..3"};
}

Outcome determinism() {
    std::vector<CommandArgs> runs;
    CommandArgs o;
    o.name = "oracle-compare";
    o.trials = 40;
    o.seed = 9;
    runs.push_back(o);
    for (std::string p : {"framed", "chain", "vect"}) {
        CommandArgs a;
        a.name = "preset";
        a.preset = p;
        a.seed = 9;
        runs.push_back(a);
    }
    for (const auto& a : runs) {
        CommandOutput first = run_command(a), second = run_command(a);
        if (first.exit_code != 0 || first.text != second.text) return {false, a.name + " " + a.preset + " differs"};
    }
    // Reports over a generated document, computed twice.
    CommandArgs p = runs[2];
    std::string doc = run_command(p).text;
    const std::string path = "acceptance_chain.json";
    std::FILE* fh = std::fopen(path.c_str(), "wb");
    std::fwrite(doc.data(), 1, doc.size(), fh);
    std::fclose(fh);
    for (std::string c : {"ext", "les-check", "resolve", "hom"}) {
        CommandArgs a;
        a.name = c;
        a.document = path;
        a.x = "X";
        a.y = "Y";
        a.seed = 9;
        a.emit_matrices = true;
        CommandOutput first = run_command(a), second = run_command(a);
        if (first.exit_code != 0 || first.text != second.text) return {false, c + " report differs"};
    }
    std::remove(path.c_str());
    return {true, "8 commands produced byte-identical reports"};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"abelian structure", abelian_structure},
        {"standard resolution and coresolution", standard_resolutions},
        {"induction and coinduction adjunctions", adjunctions},
        {"long exact sequences", long_exact_sequences},
        {"Vect Euler-form oracle", vect_oracle},
        {"framed higher Ext", framed_higher},
        {"projective and injective witnesses", witnesses},
        {"both-exact arrows", both_exact},
        {"determinism", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %zu (%s): %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                    o.detail.c_str(), secs);
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
