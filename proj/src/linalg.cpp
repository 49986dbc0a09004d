#include "twrep/linalg.hpp"

#include <utility>

#include "twrep/error.hpp"
#include "twrep/simd/modp_kernels.hpp"

namespace twrep {
namespace {

struct ModpOps {
    std::uint32_t p;
    const simd::ModpKernels* k;
    using T = std::uint32_t;
    bool is_zero(T x) const { return x == 0; }
    T inv(T x) const { return modp::inv(x, p); }
    T neg(T x) const { return modp::neg(x, p); }
    void axpy(T* dst, const T* src, std::size_t n, const T& c) const { k->axpy(dst, src, n, c, p); }
    void scale(T* row, std::size_t n, const T& c) const { k->scale(row, n, c, p); }
    static std::vector<T>& data(Matrix& m) { return m.residues(); }
};

struct RatOps {
    using T = mpq_class;
    bool is_zero(const T& x) const { return sgn(x) == 0; }
    T inv(const T& x) const { return 1 / x; }
    T neg(const T& x) const { return -x; }
    void axpy(T* dst, const T* src, std::size_t n, const T& c) const {
        for (std::size_t i = 0; i < n; ++i)
            if (sgn(src[i]) != 0) dst[i] += c * src[i];
    }
    void scale(T* row, std::size_t n, const T& c) const {
        for (std::size_t i = 0; i < n; ++i) row[i] *= c;
    }
    static std::vector<T>& data(Matrix& m) { return m.rationals(); }
};

// In-place Gauss-Jordan elimination. Rows at or below the current rank are
// zero left of the working column, so row operations start at that column.
template <class Ops>
std::vector<std::size_t> eliminate(const Ops& ops, Matrix& m) {
    auto& a = Ops::data(m);
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && ops.is_zero(a[piv * cols + c])) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
        auto* prow = a.data() + r * cols;
        ops.scale(prow + c, cols - c, ops.inv(prow[c]));
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            auto f = a[i * cols + c];
            if (ops.is_zero(f)) continue;
            ops.axpy(a.data() + i * cols + c, prow + c, cols - c, ops.neg(f));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::size_t> eliminate_in_place(Matrix& m) {
    if (m.field().is_prime())
        return eliminate(ModpOps{m.field().characteristic(), &simd::active_kernels()}, m);
    return eliminate(RatOps{}, m);
}

}  // namespace

Rref rref(const Matrix& m) {
    Rref out{m, {}};
    out.pivots = eliminate_in_place(out.reduced);
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Kernel kernel(const Matrix& m) {
    Rref r = rref(m);
    const Field f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    Kernel k{Matrix(f, m.cols(), 0), {}};
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) k.free_columns.push_back(c);
    k.basis = Matrix(f, m.cols(), k.free_columns.size());
    for (std::size_t j = 0; j < k.free_columns.size(); ++j) {
        const std::size_t fc = k.free_columns[j];
        k.basis.set(fc, j, 1);
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            k.basis.set(r.pivots[i], j, -r.reduced.at(i, fc));
    }
    return k;
}

Matrix kernel_basis(const Matrix& m) { return kernel(m).basis; }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field()))
        throw Error(ErrorKind::FieldMismatch, a.field().name() + " vs " + b.field().name());
    if (a.rows() != b.rows())
        throw Error(ErrorKind::DimensionMismatch,
                    "solve: A has " + std::to_string(a.rows()) + " rows, b has " +
                        std::to_string(b.rows()));
    Matrix aug = Matrix::hstack(a.field(), a.rows(), {a, b});
    Rref r = rref(aug);
    Matrix x(a.field(), a.cols(), b.cols());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] >= a.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.set(r.pivots[i], j, r.reduced.at(i, a.cols() + j));
    }
    return x;
}

Cokernel cokernel(const Matrix& m) {
    const Field f = m.field();
    const std::size_t n = m.rows();
    Rref r = rref(m.transpose());
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    Cokernel ck{Matrix(f, 0, n), Matrix(f, n, 0), {}};
    std::vector<std::size_t> slot(n, 0);
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) {
            slot[c] = ck.complement.size();
            ck.complement.push_back(c);
        }
    const std::size_t q = ck.complement.size();
    ck.projection = Matrix(f, q, n);
    ck.section = Matrix(f, n, q);
    for (std::size_t j = 0; j < q; ++j) {
        ck.projection.set(j, ck.complement[j], 1);
        ck.section.set(ck.complement[j], j, 1);
    }
    // A pivot coordinate e_c equals row_k of the RREF minus its non-pivot tail.
    for (std::size_t k = 0; k < r.pivots.size(); ++k)
        for (std::size_t j = 0; j < q; ++j)
            ck.projection.set(j, r.pivots[k], -r.reduced.at(k, ck.complement[j]));
    return ck;
}

Matrix cokernel_projection(const Matrix& m) { return cokernel(m).projection; }

Matrix kron(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field()))
        throw Error(ErrorKind::FieldMismatch, a.field().name() + " vs " + b.field().name());
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.is_zero_at(i, j)) continue;
            out.set_block(i * b.rows(), j * b.cols(), b.scaled(a.at(i, j)));
        }
    return out;
}

Matrix column_space_basis(const Matrix& m) { return m.select_cols(rref(m).pivots); }

std::optional<Matrix> coordinates(const Matrix& basis, const Matrix& vectors) {
    return solve(basis, vectors);
}

}  // namespace twrep
