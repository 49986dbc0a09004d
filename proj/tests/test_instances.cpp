#include "doctest.h"

#include "sample_diagrams.hpp"
#include "twrep/error.hpp"

using namespace twrep;
using twrep::testing::algebra_shapes;

namespace {

std::vector<VectDiagram> vect_family(Field f) {
    std::vector<VectDiagram> out;
    for (std::size_t m : {1, 2, 3}) {
        out.push_back(build_vect(f, quiver_single_arrow(), {m}));
        out.push_back(build_vect(f, quiver_a(3), {m, 1}));
        out.push_back(build_vect(f, quiver_commutative_square(), {1, m, 1, 2}));
    }
    return out;
}

std::vector<std::size_t> random_dims(Generator& g, std::size_t n, std::size_t max_dim) {
    std::vector<std::size_t> d(n);
    for (auto& x : d) x = g.below(max_dim + 1);
    return d;
}

}  // namespace

TEST_CASE("LES over Vect diagrams matches the Euler-form oracle") {
    Field f = Field::prime(5);
    Generator g(61);
    for (const VectDiagram& v : vect_family(f)) {
        const std::size_t n = v.diagram->quiver().vertex_count();
        for (int t = 0; t < 8; ++t) {
            Representation x = g.vect_representation(v, random_dims(g, n, 3));
            Representation y = g.vect_representation(v, random_dims(g, n, 3));
            EulerOracle o = euler_oracle(v, x, y);
            CHECK(static_cast<long long>(o.hom) - static_cast<long long>(o.ext1) == o.euler);
            for (LesVariant var : {LesVariant::Psi, LesVariant::Phi}) {
                LesReport r = les(var, x, y, 3);
                CHECK(r.ok());
                CHECK(r.ext_dims[0] == o.hom);
                CHECK(r.ext_dims[1] == o.ext1);
                CHECK(r.ext_dims[2] == 0);
                CHECK(r.ext_dims[3] == 0);
            }
        }
    }
}

TEST_CASE("Kronecker anchors") {
    Field f = Field::rationals();
    VectDiagram v = build_vect(f, quiver_single_arrow(), {2});
    Generator g(3);
    Representation s0 = g.vect_representation(v, {1, 0});
    Representation s1 = g.vect_representation(v, {0, 1});
    EulerOracle o = euler_oracle(v, s0, s1);
    CHECK(o.hom == 0);
    CHECK(o.ext1 == 2);
    CHECK(les(LesVariant::Psi, s0, s1, 2).ext_dims == std::vector<std::size_t>{0, 2, 0});
    CHECK(les(LesVariant::Psi, s1, s0, 2).ext_dims == std::vector<std::size_t>{0, 0, 0});
}

TEST_CASE("recognizing Vect diagrams") {
    Field f = Field::prime(5);
    VectDiagram v = build_vect(f, quiver_a(3), {2, 1});
    VectDiagram back = as_vect(v.diagram);
    CHECK(back.multiplicities == std::vector<std::size_t>{2, 1});
    for (const auto& nd : algebra_shapes(f)) {
        try {
            as_vect(nd.diagram);
            FAIL("expected NotVectDiagram for " << nd.name);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotVectDiagram);
        }
    }
}

TEST_CASE("framed diagrams") {
    Field f = Field::prime(5);
    auto a = Algebra::truncated_polynomial(f, 2);
    Module simple = testing::dual_numbers_simple(a);
    Module regular = free_module(a, 1);
    Generator g(67);
    for (const Module& p : {regular, simple}) {
        FramedDiagram fd = build_framed(a, p);
        const bool projective = is_projective(p).projective;
        CHECK(fd.diagram->certificate(0).psi_exact());
        CHECK(fd.diagram->certificate(0).phi_exact() == projective);
        for (int t = 0; t < 6; ++t) {
            Module e = g.module(a, 3), e2 = g.module(a, 3);
            std::size_t vd = g.below(3);
            Matrix s = g.matrix(f, hom_space(p, e).size(), vd);
            Representation x = framed_object(fd, e, vd, s);
            Representation y = framed_object(fd, e2, 0, Matrix(f, hom_space(p, e2).size(), 0));
            CHECK(validate(x).empty());
            FramedLes fl = framed_les(fd, x, y, 3);
            CHECK(fl.psi.ok());
            CHECK(fl.phi.has_value() == projective);
            if (fl.phi) {
                CHECK(fl.phi->ok());
                CHECK(fl.phi->ext_dims == fl.psi.ext_dims);
            }
            for (std::size_t k = 0; k <= 3; ++k) CHECK(fl.component_ext[k] == ext_dim(k, e, e2));
            if (projective) CHECK(fl.higher_agree);
        }
    }
}

TEST_CASE("chains over the ground field match the Euler-form oracle") {
    Field f = Field::prime(3);
    auto k = Algebra::ground_field(f);
    ChainDiagram c = build_chain(Bimodule::vect(k, 1), 2);
    CHECK(c.diagram->quiver().vertex_count() == 4);
    VectDiagram v = as_vect(c.diagram);
    Generator g(71);
    for (int t = 0; t < 10; ++t) {
        Representation x = g.vect_representation(v, random_dims(g, 4, 2));
        Representation y = g.vect_representation(v, random_dims(g, 4, 2));
        EulerOracle o = euler_oracle(v, x, y);
        LesReport r = les(LesVariant::Psi, x, y, 3);
        CHECK(r.ok());
        CHECK(r.ext_dims[0] == o.hom);
        CHECK(r.ext_dims[1] == o.ext1);
    }
}

TEST_CASE("chains over an algebra dualize and round trip") {
    Field f = Field::prime(5);
    auto a = Algebra::truncated_polynomial(f, 2);
    ChainDiagram c = build_chain(Bimodule::regular(a), 2);
    CHECK(hypotheses_hold(*c.diagram, LesVariant::Psi));
    CHECK(hypotheses_hold(*c.diagram, LesVariant::Phi));
    DiagramPtr op = opposite_diagram(*c.diagram);
    DiagramPtr opop = opposite_diagram(*op);
    Generator g(73);
    for (int t = 0; t < 4; ++t) {
        Representation x = g.representation(c.diagram, 3), y = g.representation(c.diagram, 3);
        Representation ddx = dualize_rep(dualize_rep(x, op), opop);
        CHECK(ddx.dims() == x.dims());
        CHECK(!check_morphism(RepMorphism{x, ddx, identity_morphism(x).components}));
        LesReport r = les(LesVariant::Psi, x, y, 3);
        CHECK(r.ok());
        CHECK(r.ext_dims == les(LesVariant::Phi, x, y, 3).ext_dims);
    }
}

TEST_CASE("the generator is deterministic") {
    Field f = Field::prime(5);
    for (const auto& nd : algebra_shapes(f)) {
        Generator g1(99), g2(99);
        for (int t = 0; t < 3; ++t) {
            Representation x = g1.representation(nd.diagram, 3), y = g2.representation(nd.diagram, 3);
            REQUIRE(x.dims() == y.dims());
            for (std::size_t i = 0; i < x.dims().size(); ++i) CHECK(x.component(i) == y.component(i));
            for (std::size_t a = 0; a < nd.diagram->quiver().arrow_count(); ++a) CHECK(x.psi_map(a) == y.psi_map(a));
        }
    }
}
