#include "doctest.h"

#include "sample_diagrams.hpp"
#include "twrep/error.hpp"

using namespace twrep;
using twrep::testing::algebra_shapes;
using twrep::testing::vect_shapes;

namespace {

std::vector<testing::NamedDiagram> all_shapes(Field f) {
    auto v = vect_shapes(f);
    auto a = algebra_shapes(f);
    v.insert(v.end(), a.begin(), a.end());
    return v;
}

Module kmod(const DiagramPtr& d, std::size_t i, std::size_t n) {
    return Module(d->algebra(i), n, {Matrix::identity(d->field(), n)});
}

}  // namespace

TEST_CASE("validate") {
    Field f = Field::prime(5);
    VectDiagram v = build_vect(f, quiver_a(2), {1});
    CHECK(validate(Representation::zero(v.diagram)).empty());
    Generator g(5);
    Representation x = g.vect_representation(v, {2, 2});
    CHECK(validate(x).empty());
    Matrix psi = Matrix::from_rows(f, {{1, 2}, {3, 4}});
    Representation good = Representation::from_psi(v.diagram, x.components(), {psi});
    Representation bad = Representation::unchecked(v.diagram, x.components(), {psi.transpose()}, {good.phi_map(0)});
    auto viol = validate(bad);
    REQUIRE(viol.size() == 1);
    CHECK(viol[0].where == "arrow a0");
    Representation wrong_shape =
        Representation::unchecked(v.diagram, x.components(), {Matrix(f, 1, 2)}, {good.phi_map(0)});
    CHECK(validate(wrong_shape).size() == 1);
    for (const auto& nd : all_shapes(f)) {
        Generator gen(11);
        for (int t = 0; t < 10; ++t) CHECK(validate(gen.representation(nd.diagram, 3)).empty());
    }
}

TEST_CASE("hom_rep small cases") {
    Field f = Field::prime(5);
    VectDiagram v = build_vect(f, quiver_a(2), {1});
    Generator g(3);
    Representation x = g.vect_representation(v, {1, 0});
    Representation y = g.vect_representation(v, {0, 1});
    CHECK(hom_rep(x, y).dim() == 0);
    CHECK(hom_rep(y, x).dim() == 0);
    CHECK(hom_rep(x, x).dim() == 1);
    // an arrowless quiver: hom is the product of component homs
    VectDiagram bare = build_vect(f, Quiver({"0", "1"}, {}), {});
    Representation p = g.vect_representation(bare, {2, 1}), q = g.vect_representation(bare, {3, 2});
    CHECK(hom_rep(p, q).dim() == 6 + 2);
    for (const auto& nd : all_shapes(f)) {
        Generator gen(13);
        for (int t = 0; t < 8; ++t) {
            Representation a = gen.representation(nd.diagram, 3);
            Representation b = gen.representation(nd.diagram, 3);
            RepHom h = hom_rep(a, b);
            for (std::size_t j = 0; j < h.dim(); ++j) CHECK(!check_morphism(h.element(j)));
            CHECK(!check_morphism(identity_morphism(a)));
        }
    }
}

TEST_CASE("kernels and cokernels") {
    Field f = Field::prime(5);
    VectDiagram v = build_vect(f, quiver_a(2), {1});
    Generator g(7);
    Representation x = g.vect_representation(v, {2, 3});
    CHECK(kernel(identity_morphism(x)).object.dims() == std::vector<std::size_t>{0, 0});
    CHECK(kernel(zero_morphism(x, x)).object.dims() == x.dims());
    CHECK(cokernel(identity_morphism(x)).object.dims() == std::vector<std::size_t>{0, 0});
    // a surjection onto the simple at 0: kernel dims by rank-nullity
    Representation s = g.vect_representation(v, {1, 0});
    Representation p = Representation::from_psi(v.diagram, {kmod(v.diagram, 0, 1), kmod(v.diagram, 1, 1)},
                                                 {Matrix::identity(f, 1)});
    RepMorphism pi{p, s, {Matrix::identity(f, 1), Matrix(f, 0, 1)}};
    REQUIRE(!check_morphism(pi));
    CHECK(kernel(pi).object.dims() == std::vector<std::size_t>{0, 1});

    for (const auto& nd : all_shapes(f)) {
        Generator gen(17);
        for (int t = 0; t < 10; ++t) {
            Representation a = gen.representation(nd.diagram, 3), b = gen.representation(nd.diagram, 3);
            RepMorphism h = gen.rep_morphism(a, b);
            RepKernel k = kernel(h);
            RepCokernel c = cokernel(h);
            CHECK(validate(k.object).empty());
            CHECK(validate(c.object).empty());
            CHECK(!check_morphism(k.inclusion));
            CHECK(!check_morphism(c.projection));
            CHECK(is_exact_at(k.inclusion, h).exact);
            CHECK(is_exact_at(h, c.projection).exact);
        }
    }
}

TEST_CASE("exactness verdicts") {
    Field f = Field::prime(5);
    VectDiagram v = build_vect(f, quiver_a(2), {1});
    Generator g(9);
    Representation x = g.vect_representation(v, {2, 1});
    Representation z = Representation::zero(v.diagram);
    CHECK(is_exact_at(zero_morphism(z, x), identity_morphism(x)).exact);
    CHECK(is_exact_at(identity_morphism(x), zero_morphism(x, z)).exact);
    RepDirectSum s = direct_sum(v.diagram, {x, x});
    CHECK(is_exact_at(s.injection(0), s.projection(1)).exact);
    auto broken = is_exact_at(s.injection(0), s.projection(0));
    CHECK_FALSE(broken.exact);
    REQUIRE(broken.failing_vertex);
    CHECK(*broken.failing_vertex == 0);
}

TEST_CASE("sigma_shriek and sigma_star on A2") {
    Field f = Field::prime(5);
    VectDiagram v = build_vect(f, quiver_a(2), {2});
    Module m = kmod(v.diagram, 0, 1);
    Induced up = sigma_shriek(v.diagram, 0, m);
    CHECK(up.object.dims() == std::vector<std::size_t>{1, 2});
    CHECK(up.object.psi_map(0).is_identity());
    CHECK(sigma_shriek(v.diagram, 1, kmod(v.diagram, 1, 3)).object.dims() == std::vector<std::size_t>{0, 3});
    CHECK(sigma_star(v.diagram, 0, kmod(v.diagram, 0, 3)).object.dims() == std::vector<std::size_t>{3, 0});
    Induced down = sigma_star(v.diagram, 1, kmod(v.diagram, 1, 1));
    CHECK(down.object.dims() == std::vector<std::size_t>{2, 1});
    VectDiagram single = build_vect(f, Quiver({"0"}, {}), {});
    CHECK(sigma_shriek(single.diagram, 0, kmod(single.diagram, 0, 2)).object.dims() == std::vector<std::size_t>{2});
    CHECK(sigma_star(single.diagram, 0, kmod(single.diagram, 0, 2)).object.dims() == std::vector<std::size_t>{2});
}

TEST_CASE("adjunctions for sigma_shriek and sigma_star") {
    Field f = Field::prime(5);
    for (const auto& nd : all_shapes(f)) {
        Generator gen(19);
        for (int t = 0; t < 6; ++t) {
            Representation x = gen.representation(nd.diagram, 3);
            std::size_t i = gen.below(nd.diagram->quiver().vertex_count());
            Module m = gen.module(nd.diagram->algebra(i), 3);
            AdjunctionCheck s = adjunction_check_shriek(nd.diagram, i, m, x);
            CHECK_MESSAGE(s.ok, nd.name << ": " << s.failure);
            AdjunctionCheck r = adjunction_check_star(nd.diagram, i, m, x);
            CHECK_MESSAGE(r.ok, nd.name << ": " << r.failure);
            CHECK(validate(sigma_shriek(nd.diagram, i, m).object).empty());
            CHECK(validate(sigma_star(nd.diagram, i, m).object).empty());
        }
        Representation x = gen.representation(nd.diagram, 2);
        CHECK(adjunction_check_shriek(nd.diagram, 0, x.component(0), x).ok);
        CHECK(adjunction_check_shriek(nd.diagram, 0, Module::zero(nd.diagram->algebra(0)), x).rep_dim == 0);
    }
}

TEST_CASE("standard resolution and coresolution") {
    Field f = Field::prime(5);
    VectDiagram v = build_vect(f, quiver_a(2), {1});
    Generator g(23);
    Representation x = g.vect_representation(v, {1, 1});
    StandardResolution r = standard_resolution(x);
    CHECK(r.verification.ok());
    CHECK(r.middle.dims() == std::vector<std::size_t>{1, 2});
    CHECK(r.left.dims() == std::vector<std::size_t>{0, 1});
    StandardCoresolution c = standard_coresolution(x);
    CHECK(c.verification.ok());
    CHECK(c.middle.dims() == std::vector<std::size_t>{2, 1});
    CHECK(c.right.dims() == std::vector<std::size_t>{1, 0});

    VectDiagram bare = build_vect(f, Quiver({"0", "1"}, {}), {});
    Representation b = g.vect_representation(bare, {2, 3});
    StandardResolution rb = standard_resolution(b);
    CHECK(rb.verification.ok());
    CHECK(rb.left.dims() == std::vector<std::size_t>{0, 0});
    CHECK(rb.gamma.components[0].is_identity());

    for (const auto& nd : all_shapes(f)) {
        Generator gen(29);
        for (int t = 0; t < 10; ++t) {
            Representation y = gen.representation(nd.diagram, 3);
            CHECK_MESSAGE(standard_resolution(y).verification.ok(), nd.name);
            CHECK_MESSAGE(standard_coresolution(y).verification.ok(), nd.name);
        }
    }
}

TEST_CASE("duality") {
    Field f = Field::prime(5);
    for (const auto& nd : all_shapes(f)) {
        DiagramPtr op = opposite_diagram(*nd.diagram);
        DiagramPtr opop = opposite_diagram(*op);
        CHECK(same_diagram(opop, nd.diagram));
        Generator gen(31);
        CHECK(dualize_rep(Representation::zero(nd.diagram), op).dims() == Representation::zero(nd.diagram).dims());
        for (int t = 0; t < 6; ++t) {
            Representation x = gen.representation(nd.diagram, 3), y = gen.representation(nd.diagram, 3);
            Representation dx = dualize_rep(x, op), dy = dualize_rep(y, op);
            CHECK(validate(dx).empty());
            CHECK(dx.dims() == x.dims());
            CHECK(hom_rep(x, y).dim() == hom_rep(dy, dx).dim());
            RepMorphism h = gen.rep_morphism(x, y);
            CHECK(!check_morphism(dualize_morphism(h, dy, dx)));
            Representation ddx = dualize_rep(dx, opop);
            RepMorphism id{x, ddx, identity_morphism(x).components};
            CHECK(!check_morphism(id));
        }
    }
}
