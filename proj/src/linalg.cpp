#include "qs/linalg.hpp"

#include <sstream>

namespace qs {

bool is_prime(Scalar n) {
    if (n < 2) return false;
    for (Scalar d = 2; std::uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field::Field(Scalar modulus) : p(modulus) {
    if (!is_prime(p)) throw MathError("field modulus " + std::to_string(p) + " is not prime");
    if (p >= (Scalar(1) << 31)) throw MathError("field modulus too large");
}

Scalar Field::reduce(long long v) const {
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += p;
    return static_cast<Scalar>(m);
}

Scalar Field::inv(Scalar a) const {
    if (a % p == 0) throw MathError("division by zero in F_" + std::to_string(p));
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<Scalar>(result);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, 0) {}

Matrix Matrix::identity(std::size_t n, Field f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols, Field f) {
    Matrix m(rows.size(), cols, f);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw MathError("ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) m.data_[i * cols + j] = f.reduce(rows[i][j]);
    }
    return m;
}

Matrix Matrix::column(const std::vector<Scalar>& v, Field f) {
    Matrix m(v.size(), 1, f);
    for (std::size_t i = 0; i < v.size(); ++i) m.data_[i] = v[i] % f.p;
    return m;
}

bool Matrix::is_zero() const {
    for (Scalar v : data_)
        if (v) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
    return t;
}

Matrix Matrix::scaled(Scalar s) const {
    Matrix m = *this;
    for (Scalar& v : m.data_) v = field_.mul(v, s);
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw MathError("matrix sum shape mismatch");
    Matrix m = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = field_.add(data_[k], o.data_[k]);
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw MathError("matrix difference shape mismatch");
    Matrix m = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = field_.sub(data_[k], o.data_[k]);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw MathError("matrix product shape mismatch: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                        " * " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    if (field_.p != o.field_.p) throw MathError("matrix product over different fields");
    Matrix m(rows_, o.cols_, field_);
    const std::uint64_t p = field_.p;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::uint64_t a = data_[i * cols_ + k];
            if (!a) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                Scalar& dst = m.data_[i * o.cols_ + j];
                dst = static_cast<Scalar>((dst + a * o.data_[k * o.cols_ + j]) % p);
            }
        }
    }
    return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw MathError("matrix block out of range");
    Matrix m(nr, nc, field_);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) m.data_[i * nc + j] = data_[(r0 + i) * cols_ + c0 + j];
    return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw MathError("matrix block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) data_[(r0 + i) * cols_ + c0 + j] = b.data_[i * b.cols_ + j];
}

std::vector<Scalar> Matrix::col(std::size_t j) const {
    std::vector<Scalar> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = data_[i * cols_ + j];
    return v;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_.p == o.field_.p && data_ == o.data_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << data_[i * cols_ + j];
        os << ']';
    }
    os << ']';
    return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw MathError("hstack row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols(), a.field());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw MathError("vstack column mismatch");
    Matrix m(a.rows() + b.rows(), a.cols(), a.field());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols(), a.field());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

RowEchelon rref(Matrix a) {
    const Field f = a.field();
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
        std::size_t piv = row;
        while (piv < a.rows() && a(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                Scalar t = a(row, j);
                a.set(row, j, a(piv, j));
                a.set(piv, j, t);
            }
        const Scalar s = f.inv(a(row, c));
        for (std::size_t j = c; j < a.cols(); ++j) a.set(row, j, f.mul(a(row, j), s));
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, c) == 0) continue;
            const Scalar factor = a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j) a.set(r, j, f.sub(a(r, j), f.mul(factor, a(row, j))));
        }
        out.pivots.push_back(c);
        ++row;
    }
    out.reduced = std::move(a);
    return out;
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

namespace {

Matrix kernel_from_rref(const RowEchelon& e, std::size_t ncols) {
    const Field f = e.reduced.field();
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < ncols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(ncols, free_cols.size(), f);
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        const std::size_t fc = free_cols[t];
        k.set(fc, t, 1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) k.set(e.pivots[r], t, f.neg(e.reduced(r, fc)));
    }
    return k;
}

}  // namespace

Matrix kernel(const Matrix& a) { return kernel_from_rref(rref(a), a.cols()); }

Matrix column_basis(const Matrix& a) {
    const auto e = rref(a);
    Matrix b(a.rows(), e.pivots.size(), a.field());
    for (std::size_t t = 0; t < e.pivots.size(); ++t)
        for (std::size_t i = 0; i < a.rows(); ++i) b.set(i, t, a(i, e.pivots[t]));
    return b;
}

Matrix cokernel_projection(const Matrix& a) { return kernel(a.transpose()).transpose(); }

Solution solve(const Matrix& a, const std::optional<std::vector<Scalar>>& b) {
    Solution s;
    if (!b) {
        const auto e = rref(a);
        s.rank = e.pivots.size();
        s.kernel = kernel_from_rref(e, a.cols());
        return s;
    }
    if (b->size() != a.rows())
        throw MathError("solve: right-hand side has " + std::to_string(b->size()) + " entries, matrix has " +
                        std::to_string(a.rows()) + " rows");
    const Matrix aug = hstack(a, Matrix::column(*b, a.field()));
    const auto e = rref(aug);
    std::vector<std::size_t> piv_a;
    bool consistent = true;
    for (std::size_t c : e.pivots) {
        if (c == a.cols()) consistent = false;
        else piv_a.push_back(c);
    }
    s.rank = piv_a.size();
    RowEchelon ea{e.reduced.block(0, 0, e.reduced.rows(), a.cols()), piv_a};
    s.kernel = kernel_from_rref(ea, a.cols());
    if (consistent) {
        std::vector<Scalar> x(a.cols(), 0);
        for (std::size_t r = 0; r < piv_a.size(); ++r) x[piv_a[r]] = e.reduced(r, a.cols());
        s.particular = std::move(x);
    }
    return s;
}

std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw MathError("solve_matrix: row mismatch");
    const auto e = rref(hstack(a, b));
    Matrix x(a.cols(), b.cols(), a.field());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        const std::size_t c = e.pivots[r];
        if (c >= a.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x.set(c, j, e.reduced(r, a.cols() + j));
    }
    return x;
}

std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b) {
    auto xt = solve_matrix(a.transpose(), b.transpose());
    if (!xt) return std::nullopt;
    return xt->transpose();
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (!a.is_square()) return std::nullopt;
    if (rank(a) != a.rows()) return std::nullopt;
    return solve_matrix(a, Matrix::identity(a.rows(), a.field()));
}

}  // namespace qs
