#include "synco/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace synco {

Rational parse_rational(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (ch != ' ' && ch != '+') t.push_back(ch);
    if (t.empty()) throw ParseError("empty rational");
    auto slash = t.find('/');
    auto digits_ok = [](const std::string& s) {
        std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (i >= s.size()) return false;
        return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                           [](char ch) { return ch >= '0' && ch <= '9'; });
    };
    if (slash == std::string::npos) {
        if (!digits_ok(t)) throw ParseError("not a rational: '" + text + "'");
        return Rational(mpz_class(t));
    }
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den)) throw ParseError("not a rational: '" + text + "'");
    mpz_class d(den);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    Rational q(mpz_class(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::scalar(std::size_t n, const Rational& s) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionError("ragged matrix literal");
        std::size_t j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionError("ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
}

Matrix Matrix::column(const Vector& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<long>(i * cols_),
                  data_.begin() + static_cast<long>((i + 1) * cols_));
}

Vector Matrix::col(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_col(std::size_t j, const Vector& v) {
    if (v.size() != rows_) throw DimensionError("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector length mismatch");
    Vector out(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(v[j]) == 0) continue;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Rational& a = (*this)(i, j);
            if (sgn(a) != 0) out[i] += a * v[j];
        }
    }
    return out;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
    Matrix m(rows_, idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k)
        for (std::size_t i = 0; i < rows_; ++i) m(i, k) = (*this)(i, idx[k]);
    return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
    Matrix m(idx.size(), cols_);
    for (std::size_t k = 0; k < idx.size(); ++k)
        for (std::size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(idx[k], j);
    return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
    Matrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw DimensionError("block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix& b, const Rational& scale) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw DimensionError("block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (sgn(b(i, j)) != 0) (*this)(r0 + i, c0 + j) += scale * b(i, j);
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
    for (auto& q : data_) q *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw DimensionError("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                             std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                             std::to_string(b.cols_));
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& y = b(k, j);
                if (sgn(y) != 0) c(i, j) += x * y;
            }
        }
    return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("hstack row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw DimensionError("vstack column mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

Matrix block_diag(const std::vector<Matrix>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix m(r, c);
    r = c = 0;
    for (const auto& b : blocks) {
        m.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational& x = a(i, j);
            if (sgn(x) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (sgn(b(k, l)) != 0) m(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
        }
    return m;
}

Vector kron(const Vector& a, const Vector& b) {
    Vector v(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0)
            for (std::size_t k = 0; k < b.size(); ++k) v[i * b.size() + k] = a[i] * b[k];
    return v;
}

Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionError("vector length mismatch");
    Vector v(a);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b[i];
    return v;
}

Vector operator-(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionError("vector length mismatch");
    Vector v(a);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b[i];
    return v;
}

Vector operator*(const Rational& s, const Vector& v) {
    Vector out(v);
    for (auto& x : out) x *= s;
    return out;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

// ---------------------------------------------------------------- elimination

namespace {

std::size_t height(const Rational& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

}  // namespace

RowEchelon rref(const Matrix& input) {
    Matrix m = input;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        std::size_t best_h = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (sgn(m(i, c)) == 0) continue;
            std::size_t h = height(m(i, c));
            if (best == rows || h < best_h) {
                best = i;
                best_h = h;
            }
        }
        if (best == rows) continue;
        if (best != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(r, j), m(best, j));
        Rational inv = 1 / m(r, c);
        nz.clear();
        for (std::size_t j = c; j < cols; ++j)
            if (sgn(m(r, j)) != 0) {
                m(r, j) *= inv;
                nz.push_back(j);
            }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j : nz) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
    RowEchelon e = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free.push_back(c);
    Matrix k(n, free.size());
    for (std::size_t f = 0; f < free.size(); ++f) {
        k(free[f], f) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], f) = -e.reduced(r, free[f]);
    }
    return k;
}

Matrix image_basis(const Matrix& m) { return m.select_columns(rref(m).pivots); }

std::optional<Vector> solve(const Matrix& m, const Vector& v) {
    if (v.size() != m.rows()) throw DimensionError("solve: right-hand side length mismatch");
    RowEchelon e = rref(hstack(m, Matrix::column(v)));
    const std::size_t n = m.cols();
    if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
    Vector x(n);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, n);
    return x;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs) {
    if (rhs.rows() != m.rows()) throw DimensionError("solve: right-hand side row mismatch");
    const std::size_t n = m.cols();
    RowEchelon e = rref(hstack(m, rhs));
    for (std::size_t c : e.pivots)
        if (c >= n) return std::nullopt;
    Matrix x(n, rhs.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t j = 0; j < rhs.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, n + j);
    return x;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
    auto x = solve(m, Matrix::identity(m.rows()));
    if (!x || rank(m) != m.rows()) throw PreconditionError("matrix is singular");
    return *x;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(std::size_t ambient_dim, const Matrix& spanning) : ambient_(ambient_dim) {
    if (spanning.rows() != ambient_dim && !(spanning.cols() == 0))
        throw DimensionError("subspace spanning set has wrong ambient dimension");
    if (spanning.cols() == 0)
        basis_ = Matrix(ambient_dim, 0);
    else
        basis_ = image_basis(spanning);
}

Subspace Subspace::whole(std::size_t n) { return Subspace(n, Matrix::identity(n)); }
Subspace Subspace::zero(std::size_t n) { return Subspace(n, Matrix(n, 0)); }

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_) throw DimensionError("membership test: length mismatch");
    if (synco::is_zero(v)) return true;
    if (dim() == 0) return false;
    return rank(hstack(basis_, Matrix::column(v))) == dim();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionError("subspace containment: ambient mismatch");
    if (other.dim() == 0) return true;
    if (other.dim() > dim()) return false;
    return rank(hstack(basis_, other.basis_)) == dim();
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const { return solve(basis_, v); }

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.contains(b);
}

Subspace operator+(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspace sum: ambient mismatch");
    return Subspace(a.ambient_dim(), hstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspace intersection: ambient mismatch");
    const std::size_t n = a.ambient_dim();
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n);
    // x = A u = B w  <=>  [A | -B] (u, w) = 0
    Matrix k = kernel_basis(hstack(a.basis(), -b.basis()));
    Matrix u = k.block(0, 0, a.dim(), k.cols());
    return Subspace(n, a.basis() * u);
}

Subspace image(const Matrix& m, const Subspace& s) {
    if (m.cols() != s.ambient_dim()) throw DimensionError("image: shape mismatch");
    if (s.dim() == 0) return Subspace::zero(m.rows());
    return Subspace(m.rows(), m * s.basis());
}

Subspace preimage(const Matrix& m, const Subspace& s) {
    if (m.rows() != s.ambient_dim()) throw DimensionError("preimage: shape mismatch");
    Quotient q = quotient(s);
    if (q.dim() == 0) return Subspace::whole(m.cols());
    return Subspace(m.cols(), kernel_basis(q.projection * m));
}

Subspace tensor(const Subspace& a, const Subspace& b) {
    return Subspace(a.ambient_dim() * b.ambient_dim(), kron(a.basis(), b.basis()));
}

Subspace direct_sum(const Subspace& a, const Subspace& b) {
    return Subspace(a.ambient_dim() + b.ambient_dim(), block_diag({a.basis(), b.basis()}));
}

Quotient quotient(const Subspace& w) { return quotient(Subspace::whole(w.ambient_dim()), w); }

Quotient quotient(const Subspace& big, const Subspace& small) {
    const std::size_t n = big.ambient_dim();
    if (small.ambient_dim() != n) throw DimensionError("quotient: ambient mismatch");
    const std::size_t s = small.dim();
    // Extend a basis of `small` by columns of `big`, then by unit vectors.
    RowEchelon e1 = rref(hstack(small.basis(), big.basis()));
    std::vector<std::size_t> extra;
    for (std::size_t c : e1.pivots) {
        if (c < s) continue;
        extra.push_back(c - s);
    }
    if (s + extra.size() != big.dim()) throw DimensionError("quotient: subspace not contained in the big space");
    Matrix section = big.basis().select_columns(extra);
    Matrix partial = hstack(small.basis(), section);
    RowEchelon e2 = rref(hstack(partial, Matrix::identity(n)));
    std::vector<std::size_t> fill;
    for (std::size_t c : e2.pivots)
        if (c >= partial.cols()) fill.push_back(c - partial.cols());
    Matrix full = hstack(partial, Matrix::identity(n).select_columns(fill));
    Matrix inv = inverse(full);
    Quotient q;
    q.projection = inv.block(s, 0, extra.size(), n);
    q.section = section;
    return q;
}

RankDecomposition rank_decomposition(const Matrix& m) {
    RowEchelon e = rref(m);
    RankDecomposition out;
    out.pivots = e.pivots;
    out.image = Subspace(m.rows(), m.select_columns(e.pivots));
    out.kernel = Subspace(m.cols(), kernel_basis(m));
    return out;
}

}  // namespace synco
