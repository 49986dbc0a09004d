#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "twrep/matrix.hpp"

namespace twrep {

struct Rref {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const noexcept { return pivots.size(); }
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Basis of ker m in free-variable form: restricted to `free_columns`, the
// basis matrix is the identity, so coordinates of a kernel vector are read off
// those rows.
struct Kernel {
    Matrix basis;
    std::vector<std::size_t> free_columns;
    std::size_t dim() const noexcept { return free_columns.size(); }
};

Kernel kernel(const Matrix& m);
Matrix kernel_basis(const Matrix& m);

// Returns X with A X = b (free variables zero), or nullopt when inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// Quotient of the target space by the column space of m, presented in the
// complement basis spanned by the non-pivot coordinates of the RREF of m^T.
// projection * section = identity and projection * m = 0.
struct Cokernel {
    Matrix projection;
    Matrix section;
    std::vector<std::size_t> complement;
    std::size_t dim() const noexcept { return complement.size(); }
};

Cokernel cokernel(const Matrix& m);
Matrix cokernel_projection(const Matrix& m);

// Kronecker product; row and column index (i, j) maps to i * dim_b + j.
Matrix kron(const Matrix& a, const Matrix& b);

// Maximal set of independent columns of m, in column order.
Matrix column_space_basis(const Matrix& m);

// Coordinates (as columns) of the columns of `vectors` in the basis given by
// the columns of `basis`; nullopt if some vector lies outside the span.
std::optional<Matrix> coordinates(const Matrix& basis, const Matrix& vectors);

}  // namespace twrep
