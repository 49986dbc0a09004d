#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twrep/rep.hpp"

namespace twrep {

// Psi: terms Ext(X_i, Y_i) -> Ext(Psi_a X_i, Y_j), needs every Psi_a exact.
// Phi: terms Ext(X_i, Y_i) -> Ext(X_i, Phi_a Y_j), needs every Phi_a exact.
enum class LesVariant { Psi, Phi };

std::string to_string(LesVariant v);

bool hypotheses_hold(const Diagram& d, LesVariant v);
// Throws CyclicQuiver or HypothesisViolation naming the first failing arrow.
void require_hypotheses(const Diagram& d, LesVariant v);

// One term of 0 -> Ext^0_R -> V^0 -> W^0 -> Ext^1_R -> V^1 -> ... where
// V^k = (+)_i Ext^k(X_i, Y_i) and W^k is the arrow term of the variant.
struct LesNode {
    enum class Kind { Rep, Vertices, Arrows };
    Kind kind;
    std::size_t degree = 0;
    std::size_t dim = 0;
    std::size_t rank_in = 0;
    std::size_t rank_out = 0;
    bool exact = true;
};

std::string to_string(LesNode::Kind k);

struct LesReport {
    LesVariant variant = LesVariant::Psi;
    std::size_t max_degree = 0;
    std::vector<std::size_t> vertex_dims;  // dim V^k
    std::vector<std::size_t> arrow_dims;   // dim W^k
    std::vector<Matrix> delta;             // delta^k : V^k -> W^k on Ext
    std::vector<std::size_t> ext_dims;     // dim coker delta^{k-1} + dim ker delta^k
    std::vector<std::size_t> cone_dims;    // cohomology of the cochain-level cone of delta
    std::vector<LesNode> nodes;
    std::size_t hom_dim = 0;               // dim hom_rep(X, Y), solved independently
    bool delta_chain_map = true;
    bool all_exact = true;
    bool consistent = true;
    bool ok() const noexcept { return delta_chain_map && all_exact && consistent; }
};

LesReport les(LesVariant variant, const Representation& x, const Representation& y, std::size_t max_degree = 4);
std::size_t ext_dim_rep(std::size_t k, const Representation& x, const Representation& y, LesVariant variant);

// First variant whose hypotheses hold, preferring Psi; throws if neither does.
LesVariant certified_variant(const Diagram& d);

struct WitnessResult {
    bool pass = true;
    std::optional<std::size_t> witness;  // index into the family
    std::vector<std::size_t> ext1;
};
// Ext^1_R(sigma_! P, Y) = 0 over the family.
WitnessResult projectivity_test(const DiagramPtr& d, std::size_t i, const Module& p,
                                const std::vector<Representation>& family);
// Ext^1_R(Y, sigma_* I) = 0 over the family.
WitnessResult injectivity_test(const DiagramPtr& d, std::size_t i, const Module& injective,
                               const std::vector<Representation>& family);

// Ext^k(Psi_a M, N) against Ext^k(M, Phi_a N) for M over A_source, N over A_target.
struct BothExactCheck {
    bool both_exact = false;
    std::vector<std::size_t> psi_side;
    std::vector<std::size_t> phi_side;
    bool agree() const { return psi_side == phi_side; }
};
BothExactCheck both_exact_check(const Diagram& d, std::size_t a, const Module& m, const Module& n,
                                std::size_t max_degree);

}  // namespace twrep
