#pragma once

// Dense exact linear algebra over a prime field F_p.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qs {

using Scalar = std::uint32_t;

class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Field {
    Scalar p = 2;

    explicit Field(Scalar modulus = 2);

    Scalar reduce(long long v) const;
    Scalar add(Scalar a, Scalar b) const { return static_cast<Scalar>((std::uint64_t(a) + b) % p); }
    Scalar sub(Scalar a, Scalar b) const { return static_cast<Scalar>((std::uint64_t(a) + p - b) % p); }
    Scalar mul(Scalar a, Scalar b) const { return static_cast<Scalar>((std::uint64_t(a) * b) % p); }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p - a; }
    Scalar inv(Scalar a) const;

    bool operator==(const Field&) const = default;
};

bool is_prime(Scalar n);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Field f);

    static Matrix zero(std::size_t rows, std::size_t cols, Field f) { return Matrix(rows, cols, f); }
    static Matrix identity(std::size_t n, Field f);
    static Matrix from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols, Field f);
    static Matrix column(const std::vector<Scalar>& v, Field f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Scalar v) { data_[i * cols_ + j] = v % field_.p; }
    void add_to(std::size_t i, std::size_t j, Scalar v) { data_[i * cols_ + j] = field_.add(data_[i * cols_ + j], v); }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Matrix transpose() const;
    Matrix scaled(Scalar s) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const { return scaled(field_.neg(1)); }
    Matrix operator*(const Matrix& o) const;

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    std::vector<Scalar> col(std::size_t j) const;

    bool operator==(const Matrix& o) const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Field field_{};
    std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);

struct RowEchelon {
    Matrix reduced;                   // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

RowEchelon rref(Matrix a);
std::size_t rank(const Matrix& a);

/// Columns form a basis of {x : a x = 0}.
Matrix kernel(const Matrix& a);

/// Columns form a basis of the column space of `a` (a subset of its columns).
Matrix column_basis(const Matrix& a);

/// Rows form a basis of {y : y a = 0}; as a map its kernel is exactly Col(a).
Matrix cokernel_projection(const Matrix& a);

struct Solution {
    std::optional<std::vector<Scalar>> particular;
    Matrix kernel;
    std::size_t rank = 0;
};

/// Solves a x = b. Without b, only the kernel and rank are computed.
Solution solve(const Matrix& a, const std::optional<std::vector<Scalar>>& b = std::nullopt);

/// Solves a X = b for a matrix right-hand side; nullopt when inconsistent.
std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b);

/// X with x a = b; nullopt when inconsistent.
std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& a);

}  // namespace qs
