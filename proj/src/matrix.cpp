#include "twrep/matrix.hpp"

#include <sstream>

#include "twrep/error.hpp"
#include "twrep/simd/modp_kernels.hpp"

namespace twrep {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
    if (field_.is_prime())
        residues_.assign(rows * cols, 0);
    else
        rationals_.assign(rows * cols, mpq_class(0));
}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(Field field,
                         std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(field, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
        std::size_t j = 0;
        for (long long v : row) m.set(i, j++, v);
        ++i;
    }
    return m;
}

Matrix Matrix::from_ints(Field field, std::size_t rows, std::size_t cols,
                         const std::vector<long long>& row_major) {
    if (row_major.size() != rows * cols)
        throw Error(ErrorKind::DimensionMismatch, "entry count does not match shape");
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows * cols; ++i) m.set(i / cols, i % cols, row_major[i]);
    return m;
}

Matrix Matrix::unit_column(Field field, std::size_t n, std::size_t i) {
    Matrix m(field, n, 1);
    m.set(i, 0, 1);
    return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
    if (field_.is_prime()) {
        return Scalar(field_, static_cast<long long>(residues_[r * cols_ + c]));
    }
    return Scalar(field_, rationals_[r * cols_ + c]);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
    if (!(v.field() == field_))
        throw Error(ErrorKind::FieldMismatch, field_.name() + " vs " + v.field().name());
    if (field_.is_prime())
        residues_[r * cols_ + c] = v.residue();
    else
        rationals_[r * cols_ + c] = v.rational();
}

void Matrix::set(std::size_t r, std::size_t c, long long v) {
    if (field_.is_prime())
        residues_[r * cols_ + c] = modp::reduce(v, field_.characteristic());
    else
        rationals_[r * cols_ + c] = mpq_class(mpz_class(std::to_string(v)));
}

bool Matrix::is_zero_at(std::size_t r, std::size_t c) const {
    return field_.is_prime() ? residues_[r * cols_ + c] == 0
                             : sgn(rationals_[r * cols_ + c]) == 0;
}

bool Matrix::is_zero() const {
    if (field_.is_prime()) {
        for (auto v : residues_)
            if (v != 0) return false;
        return true;
    }
    for (const auto& v : rationals_)
        if (sgn(v) != 0) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(field_, rows_);
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (field_.is_prime())
                t.residues_[j * rows_ + i] = residues_[i * cols_ + j];
            else
                t.rationals_[j * rows_ + i] = rationals_[i * cols_ + j];
        }
    return t;
}

Matrix Matrix::operator-() const {
    Matrix r(*this);
    if (field_.is_prime()) {
        for (auto& v : r.residues_) v = modp::neg(v, field_.characteristic());
    } else {
        for (auto& v : r.rationals_) v = -v;
    }
    return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
    if (!(s.field() == field_))
        throw Error(ErrorKind::FieldMismatch, field_.name() + " vs " + s.field().name());
    Matrix r(*this);
    if (field_.is_prime()) {
        if (!r.residues_.empty())
            simd::active_kernels().scale(r.residues_.data(), r.residues_.size(), s.residue(),
                                         field_.characteristic());
    } else {
        for (auto& v : r.rationals_) v *= s.rational();
    }
    return r;
}

void Matrix::require_same_shape(const Matrix& o, const char* op) const {
    if (!(field_ == o.field_))
        throw Error(ErrorKind::FieldMismatch, field_.name() + " vs " + o.field_.name());
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(op) + ": " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                        " vs " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
}

Matrix& Matrix::operator+=(const Matrix& o) {
    require_same_shape(o, "add");
    if (field_.is_prime()) {
        if (!residues_.empty())
            simd::active_kernels().axpy(residues_.data(), o.residues_.data(), residues_.size(), 1,
                                        field_.characteristic());
    } else {
        for (std::size_t i = 0; i < rationals_.size(); ++i) rationals_[i] += o.rationals_[i];
    }
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    require_same_shape(o, "subtract");
    if (field_.is_prime()) {
        const std::uint32_t p = field_.characteristic();
        if (!residues_.empty())
            simd::active_kernels().axpy(residues_.data(), o.residues_.data(), residues_.size(),
                                        p - 1, p);
    } else {
        for (std::size_t i = 0; i < rationals_.size(); ++i) rationals_[i] -= o.rationals_[i];
    }
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (!(a.field_ == b.field_))
        throw Error(ErrorKind::FieldMismatch, a.field_.name() + " vs " + b.field_.name());
    if (a.cols_ != b.rows_)
        throw Error(ErrorKind::DimensionMismatch,
                    "multiply: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                        " by " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    Matrix c(a.field_, a.rows_, b.cols_);
    if (b.cols_ == 0) return c;
    if (a.field_.is_prime()) {
        const auto& k = simd::active_kernels();
        const std::uint32_t p = a.field_.characteristic();
        for (std::size_t i = 0; i < a.rows_; ++i) {
            std::uint32_t* crow = c.residues_.data() + i * c.cols_;
            for (std::size_t l = 0; l < a.cols_; ++l) {
                std::uint32_t coef = a.residues_[i * a.cols_ + l];
                if (coef != 0) k.axpy(crow, b.residues_.data() + l * b.cols_, b.cols_, coef, p);
            }
        }
    } else {
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                const mpq_class& coef = a.rationals_[i * a.cols_ + l];
                if (sgn(coef) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c.rationals_[i * c.cols_ + j] += coef * b.rationals_[l * b.cols_ + j];
            }
    }
    return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.residues_ == b.residues_ && a.rationals_ == b.rationals_;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw Error(ErrorKind::DimensionMismatch, "block out of range");
    Matrix b(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) {
            if (field_.is_prime())
                b.residues_[i * nc + j] = residues_[(r0 + i) * cols_ + c0 + j];
            else
                b.rationals_[i * nc + j] = rationals_[(r0 + i) * cols_ + c0 + j];
        }
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (!(b.field_ == field_))
        throw Error(ErrorKind::FieldMismatch, field_.name() + " vs " + b.field_.name());
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
        throw Error(ErrorKind::DimensionMismatch, "set_block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) {
            if (field_.is_prime())
                residues_[(r0 + i) * cols_ + c0 + j] = b.residues_[i * b.cols_ + j];
            else
                rationals_[(r0 + i) * cols_ + c0 + j] = b.rationals_[i * b.cols_ + j];
        }
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
    Matrix out(field_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) out.set_block(i, 0, block(idx[i], 0, 1, cols_));
    return out;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
    Matrix out(field_, rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (field_.is_prime())
                out.residues_[r * idx.size() + j] = residues_[r * cols_ + idx[j]];
            else
                out.rationals_[r * idx.size() + j] = rationals_[r * cols_ + idx[j]];
        }
    return out;
}

Matrix Matrix::hstack(Field field, std::size_t rows, const std::vector<Matrix>& parts) {
    std::size_t cols = 0;
    for (const auto& p : parts) {
        if (p.rows_ != rows) throw Error(ErrorKind::DimensionMismatch, "hstack row count");
        cols += p.cols_;
    }
    Matrix out(field, rows, cols);
    std::size_t c = 0;
    for (const auto& p : parts) {
        out.set_block(0, c, p);
        c += p.cols_;
    }
    return out;
}

Matrix Matrix::vstack(Field field, std::size_t cols, const std::vector<Matrix>& parts) {
    std::size_t rows = 0;
    for (const auto& p : parts) {
        if (p.cols_ != cols) throw Error(ErrorKind::DimensionMismatch, "vstack column count");
        rows += p.rows_;
    }
    Matrix out(field, rows, cols);
    std::size_t r = 0;
    for (const auto& p : parts) {
        out.set_block(r, 0, p);
        r += p.rows_;
    }
    return out;
}

Matrix Matrix::block_diag(Field field, const std::vector<Matrix>& parts) {
    std::size_t rows = 0, cols = 0;
    for (const auto& p : parts) {
        rows += p.rows_;
        cols += p.cols_;
    }
    Matrix out(field, rows, cols);
    std::size_t r = 0, c = 0;
    for (const auto& p : parts) {
        out.set_block(r, c, p);
        r += p.rows_;
        c += p.cols_;
    }
    return out;
}

Matrix Matrix::vec() const {
    Matrix v(*this);
    v.rows_ = rows_ * cols_;
    v.cols_ = 1;
    return v;
}

Matrix Matrix::unvec(const Matrix& column, std::size_t rows, std::size_t cols) {
    if (column.cols_ != 1 || column.rows_ != rows * cols)
        throw Error(ErrorKind::DimensionMismatch, "unvec shape");
    Matrix m(column);
    m.rows_ = rows;
    m.cols_ = cols;
    return m;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).to_string();
    }
    os << "]";
    return os.str();
}

}  // namespace twrep
