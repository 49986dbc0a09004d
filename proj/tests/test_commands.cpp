#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "sample_diagrams.hpp"
#include "test_support.hpp"
#include "twrep/commands.hpp"
#include "twrep/error.hpp"

using namespace twrep;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("twrep_" + name)).string();
}

std::string write_preset(CommandArgs a, const std::string& name) {
    a.name = "preset";
    CommandOutput out = run_command(a);
    REQUIRE(out.exit_code == 0);
    const std::string path = temp_path(name);
    std::ofstream(path, std::ios::binary) << out.text;
    return path;
}

Json run(CommandArgs a, int expected_exit) {
    CommandOutput out = run_command(a);
    CHECK(out.exit_code == expected_exit);
    Json j = Json::parse(out.text);
    CHECK(j["status"]["exit_code"] == expected_exit);
    CHECK(j["schema_version"] == kReportSchemaVersion);
    return j;
}

}  // namespace

TEST_CASE("scalar and matrix JSON round trip") {
    std::mt19937_64 rng(5);
    for (Field f : {Field::rationals(), Field::prime(7)}) {
        Matrix m = testing::random_matrix(f, 3, 4, rng, 5);
        if (f.is_prime()) CHECK(scalar_to_json(Scalar(f, 3)).is_number_integer());
        else CHECK(scalar_to_json(Scalar(f, mpq_class(-3, 4))) == "-3/4");
        CHECK(matrix_from_json(f, matrix_to_json(m), 3, 4, "m") == m);
    }
    CHECK_THROWS_AS(scalar_from_json(Field::prime(5), Json(5), "x"), Error);
    CHECK_THROWS_AS(scalar_from_json(Field::prime(5), Json("1/2"), "x"), Error);
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("documents round trip through the parser") {
    for (const auto& nd : testing::algebra_shapes(Field::prime(5))) {
        Generator g(5);
        Representation x = g.representation(nd.diagram, 3), y = g.representation(nd.diagram, 3);
        Json doc = diagram_document(nd.diagram, {{"X", Form::Psi, x}, {"Y", Form::Phi, y}});
        Document parsed = parse_document(Json::parse(dump_canonical(doc)));
        CHECK(*parsed.diagram == *nd.diagram);
        const Representation& px = parsed.representation("X");
        const Representation& py = parsed.representation("Y");
        for (std::size_t a = 0; a < nd.diagram->quiver().arrow_count(); ++a) {
            CHECK(px.psi_map(a) == x.psi_map(a));
            CHECK(py.phi_map(a) == y.phi_map(a));
        }
        CHECK(hom_rep(px, py).dim() == hom_rep(x, y).dim());
        CHECK(dump_canonical(diagram_document(parsed.diagram, parsed.representations)) == dump_canonical(doc));
    }
}

TEST_CASE("documents are untrusted") {
    CommandArgs a;
    a.preset = "framed";
    Json doc = preset_document(a);
    SUBCASE("broken associativity") {
        doc["algebras"][1]["constants"][0][3] = "2/1";
        CHECK_THROWS_AS(parse_document(doc), Error);
    }
    SUBCASE("broken module law") {
        doc["modules"][1]["action"][0][0][0] = "0/1";
        CHECK_THROWS_AS(parse_document(doc), Error);
    }
    SUBCASE("dangling reference") {
        doc["quiver"]["arrows"][0]["bimodule"] = "nope";
        try {
            parse_document(doc);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InvalidData);
            CHECK(std::string(e.what()).find("quiver.arrows[0]") != std::string::npos);
        }
    }
    SUBCASE("wrong shape") {
        doc["representations"][0]["maps"]["a"] = Json::array();
        CHECK_THROWS_AS(parse_document(doc), Error);
    }
}

TEST_CASE("preset documents validate") {
    for (std::string p : {"framed", "chain", "vect"}) {
        CommandArgs a;
        a.preset = p;
        a.field = "F5";
        CommandArgs v;
        v.name = "validate";
        v.document = write_preset(a, p + ".json");
        Json r = run(v, 0);
        CHECK(r["results"]["valid"] == true);
        CHECK(r["inputs"][0]["sha256"].get<std::string>().size() == 64);
    }
}

TEST_CASE("ext in degree zero equals hom") {
    CommandArgs p;
    p.preset = "chain";
    const std::string path = write_preset(p, "chain_hom.json");
    CommandArgs h;
    h.name = "hom";
    h.document = path;
    h.x = "X";
    h.y = "Y";
    Json hr = run(h, 0);
    h.name = "ext";
    h.max_degree = 0;
    Json er = run(h, 0);
    CHECK(er["results"]["ext_dims"][0] == hr["results"]["dim"]);
}

TEST_CASE("framed anchors through the command layer") {
    CommandArgs p;
    p.preset = "framed";
    const std::string path = write_preset(p, "framed_anchor.json");
    CommandArgs e;
    e.name = "ext";
    e.document = path;
    e.x = "E";
    e.y = "F";
    e.variant = "both";
    Json r = run(e, 0);
    CHECK(r["results"]["ext_dims"] == Json({1, 1, 1, 1, 1}));
    CHECK(r["results"]["variants_agree"] == true);

    p.framing = "simple";
    e.document = write_preset(p, "framed_simple.json");
    e.variant = "phi";
    Json v = run(e, 2);
    CHECK(v["status"]["error"]["arrow"] == "a");
    CHECK(v["status"]["error"]["side"] == "phi");
}

TEST_CASE("vect anchor and resolutions") {
    CommandArgs p;
    p.preset = "vect";
    p.shape = "a2";
    const std::string path = write_preset(p, "vect_a2.json");
    CommandArgs e;
    e.name = "les-check";
    e.document = path;
    e.x = "S0";
    e.y = "S1";
    Json r = run(e, 0);
    CHECK(r["results"]["ext_dims"] == Json({0, 1, 0, 0, 0}));
    CHECK(r["results"]["exact_at_every_node"] == true);
    for (std::string c : {"resolve", "coresolve"}) {
        CommandArgs rc;
        rc.name = c;
        rc.document = path;
        rc.x = "X";
        Json rr = run(rc, 0);
        CHECK(rr["results"]["verification"]["exact"] == true);
    }
}

TEST_CASE("oracle comparison has no mismatches") {
    CommandArgs a;
    a.name = "oracle-compare";
    a.trials = 100;
    a.seed = 7;
    a.field = "F5";
    Json r = run(a, 0);
    CHECK(r["results"]["mismatches"] == 0);
    CHECK(r["seed"] == 7);
}

TEST_CASE("reports are byte-identical for a fixed seed") {
    CommandArgs a;
    a.name = "oracle-compare";
    a.trials = 20;
    a.seed = 11;
    CHECK(run_command(a).text == run_command(a).text);
    CommandArgs p;
    p.preset = "chain";
    p.seed = 3;
    p.name = "preset";
    CHECK(run_command(p).text == run_command(p).text);
}

TEST_CASE("errors map to exit codes") {
    CHECK(exit_code_for(ErrorKind::InvalidData) == 1);
    CHECK(exit_code_for(ErrorKind::HypothesisViolated) == 2);
    CHECK(exit_code_for(ErrorKind::LiftFailure) == 3);
    CHECK(exit_code_for(ErrorKind::Internal) == 3);
    CommandArgs a;
    a.name = "validate";
    a.document = temp_path("does_not_exist.json");
    run(a, 1);
}
