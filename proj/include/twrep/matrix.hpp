#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "twrep/field.hpp"

namespace twrep {

// Dense row-major matrix over a single Field. Prime-field entries are stored as
// packed residues so the elimination kernels can stream whole rows; rational
// entries are GMP rationals.
class Matrix {
public:
    Matrix() : field_(Field::rationals()) {}
    Matrix(Field field, std::size_t rows, std::size_t cols);

    static Matrix identity(Field field, std::size_t n);
    static Matrix from_rows(Field field, std::initializer_list<std::initializer_list<long long>> rows);
    static Matrix from_ints(Field field, std::size_t rows, std::size_t cols,
                            const std::vector<long long>& row_major);
    // n x 1 column with a single 1 at position i.
    static Matrix unit_column(Field field, std::size_t n, std::size_t i);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Scalar at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Scalar& v);
    void set(std::size_t r, std::size_t c, long long v);
    bool is_zero_at(std::size_t r, std::size_t c) const;

    bool is_zero() const;
    bool is_identity() const;

    Matrix transpose() const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& s) const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    Matrix column(std::size_t c) const { return block(0, c, rows_, 1); }
    Matrix select_rows(const std::vector<std::size_t>& idx) const;
    Matrix select_cols(const std::vector<std::size_t>& idx) const;

    static Matrix hstack(Field field, std::size_t rows, const std::vector<Matrix>& parts);
    static Matrix vstack(Field field, std::size_t cols, const std::vector<Matrix>& parts);
    static Matrix block_diag(Field field, const std::vector<Matrix>& parts);

    // Row-major flattening of an r x c matrix into an rc x 1 column, and back.
    Matrix vec() const;
    static Matrix unvec(const Matrix& column, std::size_t rows, std::size_t cols);

    std::string to_string() const;

    // Raw storage for the elimination kernels.
    std::vector<std::uint32_t>& residues() noexcept { return residues_; }
    const std::vector<std::uint32_t>& residues() const noexcept { return residues_; }
    std::vector<mpq_class>& rationals() noexcept { return rationals_; }
    const std::vector<mpq_class>& rationals() const noexcept { return rationals_; }

private:
    void require_same_shape(const Matrix& o, const char* op) const;

    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint32_t> residues_;
    std::vector<mpq_class> rationals_;
};

}  // namespace twrep
