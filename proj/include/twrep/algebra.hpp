#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "twrep/linalg.hpp"

namespace twrep {

// Finite-dimensional associative unital algebra given by structure constants
// b_i * b_j = sum_k c_ij^k b_k.
//
// Modules are right modules acting on column vectors: a module element x is a
// column and x.b is rho(b) x, so rho(a b) = rho(b) rho(a). Left actions (only
// inside bimodules) satisfy lambda(a b) = lambda(a) lambda(b).
class Algebra {
public:
    struct Constant {
        std::size_t i, j, k;
        Scalar value;
    };

    // Validates associativity and the unit; throws InvalidData otherwise.
    Algebra(Field field, std::vector<std::string> basis_labels,
            const std::vector<Constant>& constants, Matrix unit);

    static std::shared_ptr<const Algebra> ground_field(Field f);
    // k[t]/t^n with basis 1, t, ..., t^{n-1}.
    static std::shared_ptr<const Algebra> truncated_polynomial(Field f, std::size_t n);
    // Upper triangular n x n matrices with matrix-unit basis e_rc (r <= c); for
    // n = 2 this is the path algebra of 0 -> 1.
    static std::shared_ptr<const Algebra> upper_triangular(Field f, std::size_t n);

    const Field& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return labels_.size(); }
    const std::vector<std::string>& basis_labels() const noexcept { return labels_; }
    const Matrix& unit() const noexcept { return unit_; }

    Scalar constant(std::size_t i, std::size_t j, std::size_t k) const;
    // Column j of left_mult(i) holds b_i b_j; column i of right_mult(j) holds b_i b_j.
    const Matrix& left_mult(std::size_t i) const { return left_mult_[i]; }
    const Matrix& right_mult(std::size_t j) const { return right_mult_[j]; }
    Matrix multiply(const Matrix& x, const Matrix& y) const;

    std::shared_ptr<const Algebra> opposite() const;

    friend bool operator==(const Algebra& a, const Algebra& b);

private:
    Field field_;
    std::vector<std::string> labels_;
    std::vector<Matrix> left_mult_;
    std::vector<Matrix> right_mult_;
    Matrix unit_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);
void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b, const char* context);

// Right module: one dim x dim matrix per algebra basis element.
class Module {
public:
    Module() = default;
    Module(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action);

    static Module zero(AlgebraPtr algebra);
    // Throws InvalidData when the module laws fail.
    static Module checked(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action);

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const Field& field() const noexcept { return algebra_->field(); }
    std::size_t dim() const noexcept { return dim_; }
    const Matrix& action(std::size_t i) const { return action_[i]; }
    const std::vector<Matrix>& actions() const noexcept { return action_; }
    // rho(alpha) for an algebra element given as a coordinate column.
    Matrix act(const Matrix& element) const;

    friend bool operator==(const Module& a, const Module& b);

private:
    AlgebraPtr algebra_;
    std::size_t dim_ = 0;
    std::vector<Matrix> action_;
};

// Empty optional when the module laws hold, else a description of the first failure.
std::optional<std::string> check_module_laws(const Module& m);
bool is_linear(const Matrix& f, const Module& source, const Module& target);

struct ModuleMorphism {
    Module source;
    Module target;
    Matrix matrix;  // target.dim x source.dim
};

// Left A, right B bimodule.
class Bimodule {
public:
    Bimodule() = default;
    Bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Matrix> left_action,
             std::vector<Matrix> right_action);

    static Bimodule checked(AlgebraPtr left, AlgebraPtr right, std::size_t dim,
                            std::vector<Matrix> left_action, std::vector<Matrix> right_action);
    // A as an A-A bimodule.
    static Bimodule regular(AlgebraPtr a);
    // k^m over k-k with identity actions.
    static Bimodule vect(AlgebraPtr ground, std::size_t m);
    // A right B-module viewed as a k-B bimodule (the framing functor V |-> V (x) P).
    static Bimodule from_right_module(AlgebraPtr ground, const Module& p);
    // A left A-module (right A^op-module) viewed as an A-k bimodule.
    static Bimodule from_left_module(AlgebraPtr a, AlgebraPtr ground, const Module& left);
    // A (x)_k B with the outer actions; projective on both sides.
    static Bimodule free(AlgebraPtr a, AlgebraPtr b);
    // A with regular left action and right action twisted by an automorphism
    // sigma (d x d matrix): x . b = x sigma(b).
    static Bimodule twisted_regular(AlgebraPtr a, const Matrix& sigma);
    static Bimodule direct_sum(const Bimodule& x, const Bimodule& y);

    const AlgebraPtr& left() const noexcept { return left_; }
    const AlgebraPtr& right() const noexcept { return right_; }
    std::size_t dim() const noexcept { return dim_; }
    const Matrix& left_action(std::size_t i) const { return left_action_[i]; }
    const Matrix& right_action(std::size_t i) const { return right_action_[i]; }
    const std::vector<Matrix>& left_actions() const noexcept { return left_action_; }
    const std::vector<Matrix>& right_actions() const noexcept { return right_action_; }
    Matrix left_act(const Matrix& element) const;

    // Right B-module obtained by forgetting the left action.
    Module as_right_module() const;
    // Left A-module, presented as a right module over A^op.
    Module as_left_module() const;
    // The same bimodule seen as a B^op - A^op bimodule.
    Bimodule swapped() const;

private:
    AlgebraPtr left_;
    AlgebraPtr right_;
    std::size_t dim_ = 0;
    std::vector<Matrix> left_action_;
    std::vector<Matrix> right_action_;
};

std::optional<std::string> check_bimodule_laws(const Bimodule& n);

Module free_module(const AlgebraPtr& a, std::size_t n);

struct DirectSum {
    Module module;
    std::vector<std::size_t> offsets;
    std::vector<std::size_t> dims;
    Matrix injection(std::size_t i) const;
    Matrix projection(std::size_t i) const;
};
DirectSum direct_sum(const AlgebraPtr& a, const std::vector<Module>& parts);

// Module on an A-stable subspace with the given independent basis columns.
Module submodule(const Module& m, const Matrix& basis);
// Smallest submodule containing the given columns, as a basis of columns.
Matrix generated_subspace(const Module& m, const Matrix& vectors);

struct Quotient {
    Module module;
    Cokernel map;  // projection: m -> quotient, section: quotient -> m
};
Quotient quotient(const Module& m, const Matrix& subspace);

// Basis of Hom_A(M, N) in row-major vec form (vec(F) index r * dim M + c).
struct HomBasis {
    Kernel space;
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::size_t dim() const noexcept { return space.dim(); }
    Matrix element(std::size_t j) const;
    Matrix combination(const Matrix& coefficients) const;
    // Coefficients of a morphism in this basis (read from the free coordinates).
    Matrix coefficients(const Matrix& f) const;
};
HomBasis hom_basis(const Module& m, const Module& n);
std::vector<ModuleMorphism> hom_space(const Module& m, const Module& n);

// M (x)_A N as a right B-module, with the quotient map from M (x)_k N.
struct TensorProduct {
    Module module;
    Matrix projection;  // dim x (dim M * dim N)
    Matrix section;     // (dim M * dim N) x dim
    std::size_t left_dim = 0;
    std::size_t right_dim = 0;
};
TensorProduct tensor_over(const Module& m, const Bimodule& n);
// f (x) N : M (x)_A N -> M' (x)_A N
Matrix tensor_morphism(const Matrix& f, const TensorProduct& source, const TensorProduct& target);

// Hom_B(N, Y) as a right A-module, (f.a)(n) = f(a.n).
struct HomModule {
    Module module;
    Kernel space;  // basis of vec(F), F : N -> Y, inside Hom_k(N, Y)
    std::size_t bimodule_dim = 0;
    std::size_t target_dim = 0;
    Matrix element(const Matrix& coords) const;  // target_dim x bimodule_dim
    Matrix coords(const Matrix& f) const;
};
HomModule hom_from(const Bimodule& n, const Module& y);
// Hom_B(N, g) : Hom_B(N, Y) -> Hom_B(N, Y')
Matrix hom_morphism(const Matrix& g, const HomModule& source, const HomModule& target);

// Adjunction Hom_B(M (x)_A N, Y) = Hom_A(M, Hom_B(N, Y)).
Matrix adjoint_to_hom(const Matrix& f, const TensorProduct& mn, const HomModule& ny);
Matrix adjoint_to_tensor(const Matrix& g, const TensorProduct& mn, const HomModule& ny);

// k-linear dual, a right module over A^op; morphisms dualize by transposition.
Module dualize(const Module& m);
Module dualize_over(const Module& m, const AlgebraPtr& opposite);

// Free cover A^r -> M by an irredundant set of coordinate generators.
struct FreeCover {
    std::vector<std::size_t> generator_coords;  // which coordinate vectors were kept
    Matrix generators;                          // dim M x r
    Module free;                                // A^r
    Matrix map;                                 // dim M x (r * dim A)
};
FreeCover free_cover(const Module& m);
// A-linear map from A^r sending the l-th generator to column l of `values`.
Matrix free_extension(const Module& target, const Matrix& values, std::size_t rank);

struct ProjectivityCertificate {
    bool projective = false;
    FreeCover cover;
    std::optional<Matrix> section;  // A-linear s with cover.map * s = id
};
ProjectivityCertificate is_projective(const Module& m);

}  // namespace twrep
