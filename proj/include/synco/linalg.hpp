#pragma once

// Exact linear algebra over the rationals: dense matrices, reduced row
// echelon form, kernels, images, subspaces and quotients.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "synco/errors.hpp"

namespace synco {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "a", "a/b" or "-a/b"; the result is canonicalized.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
    static Matrix column(const Vector& v);
    static Matrix scalar(std::size_t n, const Rational& s);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;
    void set_col(std::size_t j, const Vector& v);

    Matrix transpose() const;
    bool is_zero() const;
    Vector apply(const Vector& v) const;

    Matrix select_columns(const std::vector<std::size_t>& idx) const;
    Matrix select_rows(const std::vector<std::size_t>& idx) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    void add_block(std::size_t r0, std::size_t c0, const Matrix& b, const Rational& scale = 1);

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Rational& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
    friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
    friend Matrix operator-(Matrix a) { return a *= Rational(-1); }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diag(const std::vector<Matrix>& blocks);
/// Kronecker product; (a ⊗ b)(i*b.rows()+k, j*b.cols()+l) = a(i,j) b(k,l).
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
bool is_zero(const Vector& v);

struct RowEchelon {
    Matrix reduced;                   ///< reduced row echelon form
    std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Gauss–Jordan elimination. Pivot rows are chosen by smallest bit height
/// (ties broken by row index) so results are deterministic.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Columns form a basis of ker m (one basis vector per free column).
Matrix kernel_basis(const Matrix& m);
/// The pivot columns of m: an independent basis of its column space.
Matrix image_basis(const Matrix& m);

std::optional<Vector> solve(const Matrix& m, const Vector& v);
/// Solves m·x = rhs column by column; nullopt if any column is not in the image.
std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs);
Matrix inverse(const Matrix& m);

/// A subspace of K^n presented by an independent family of column vectors.
/// Bases are not canonical; compare subspaces through membership only.
class Subspace {
public:
    Subspace() = default;
    /// Span of the columns of `spanning` (dependent columns are dropped).
    Subspace(std::size_t ambient_dim, const Matrix& spanning);

    static Subspace whole(std::size_t n);
    static Subspace zero(std::size_t n);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }
    bool is_zero() const { return dim() == 0; }
    bool is_whole() const { return dim() == ambient_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v in basis(); nullopt when v is not a member.
    std::optional<Vector> coordinates(const Vector& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b);
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
};

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// Image of s under the linear map m.
Subspace image(const Matrix& m, const Subspace& s);
/// { x : m x ∈ s }.
Subspace preimage(const Matrix& m, const Subspace& s);
/// Tensor product of subspaces inside K^a ⊗ K^b (Kronecker ordering).
Subspace tensor(const Subspace& a, const Subspace& b);
/// Direct sum inside K^a ⊕ K^b.
Subspace direct_sum(const Subspace& a, const Subspace& b);

/// V/W presented concretely: projection∘section = id, projection kills W.
struct Quotient {
    Matrix projection;  ///< q × n
    Matrix section;     ///< n × q, columns complete a basis of W to one of V
    std::size_t dim() const { return projection.rows(); }
};

/// Quotient of the ambient space by w.
Quotient quotient(const Subspace& w);
/// Quotient big/small for small ⊆ big; the projection is defined on the whole
/// ambient space and kills small, the section lands in big.
Quotient quotient(const Subspace& big, const Subspace& small);

struct RankDecomposition {
    Subspace kernel;
    Subspace image;
    std::vector<std::size_t> pivots;
};

RankDecomposition rank_decomposition(const Matrix& m);

}  // namespace synco
