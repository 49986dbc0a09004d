#pragma once

#include <string>
#include <vector>

#include "twrep/instances.hpp"

namespace twrep::testing {

struct NamedDiagram {
    std::string name;
    DiagramPtr diagram;
};

inline Module dual_numbers_simple(const AlgebraPtr& a) {
    const Field f = a->field();
    return Module(a, 1, {Matrix::identity(f, 1), Matrix(f, 1, 1)});
}

// The four quiver shapes as Vect diagrams.
inline std::vector<NamedDiagram> vect_shapes(Field f) {
    return {{"A2", build_vect(f, quiver_a(2), {1}).diagram},
            {"A3", build_vect(f, quiver_a(3), {1, 1}).diagram},
            {"Kronecker", build_vect(f, quiver_single_arrow(), {2}).diagram},
            {"square", build_vect(f, quiver_commutative_square(), {1, 1, 1, 1}).diagram}};
}

// Diagrams of genuine algebras and bimodules.
inline std::vector<NamedDiagram> algebra_shapes(Field f) {
    auto k = Algebra::ground_field(f);
    auto d2 = Algebra::truncated_polynomial(f, 2);
    auto t2 = Algebra::upper_triangular(f, 2);
    Matrix twist = Matrix::from_rows(f, {{1, 0}, {0, 2}});
    std::vector<NamedDiagram> out;
    out.push_back({"dual-numbers twisted",
                   std::make_shared<const Diagram>(quiver_single_arrow(), std::vector<AlgebraPtr>{d2, d2},
                                                   std::vector<Bimodule>{Bimodule::twisted_regular(d2, twist)})});
    out.push_back({"triangular to dual numbers free",
                   std::make_shared<const Diagram>(quiver_single_arrow(), std::vector<AlgebraPtr>{t2, d2},
                                                   std::vector<Bimodule>{Bimodule::free(t2, d2)})});
    out.push_back({"dual-numbers A3 regular",
                   std::make_shared<const Diagram>(
                       quiver_a(3), std::vector<AlgebraPtr>{d2, d2, d2},
                       std::vector<Bimodule>{Bimodule::regular(d2),
                                             Bimodule::direct_sum(Bimodule::regular(d2), Bimodule::regular(d2))})});
    out.push_back({"framed by the simple", build_framed(d2, dual_numbers_simple(d2)).diagram});
    out.push_back({"framed by the regular", build_framed(d2, free_module(d2, 1)).diagram});
    return out;
}

}  // namespace twrep::testing
