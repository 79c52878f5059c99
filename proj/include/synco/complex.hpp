#pragma once

// Bounded cochain complexes of finite-dimensional Q-vector spaces.

#include <functional>
#include <map>
#include <vector>

#include "synco/linalg.hpp"

namespace synco {

class Complex {
public:
    /// The zero complex.
    Complex() = default;
    /// dims[k] is the dimension in degree lo+k; diffs maps n to d^n : C^n → C^{n+1}.
    /// Missing differentials are zero. The support is trimmed to nonzero degrees.
    Complex(int lo, std::vector<std::size_t> dims, const std::map<int, Matrix>& diffs = {});

    static Complex concentrated(int degree, std::size_t dim);

    /// First and last degree with nonzero dimension; hi < lo for the zero complex.
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
    bool is_zero() const { return dims_.empty(); }

    std::size_t dim(int n) const;
    /// d^n, of shape dim(n+1) × dim(n); empty outside the support.
    const Matrix& d(int n) const;
    std::size_t total_dim() const;

    /// Throws ValidationError naming the degree if some d^{n+1} d^n ≠ 0.
    void validate() const;

    friend bool operator==(const Complex& a, const Complex& b);

private:
    int lo_ = 0;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> d_;  // d_[k] is d^{lo-1+k}
};

/// A degree-preserving map of complexes; components are target.dim(n) × source.dim(n).
class ChainMap {
public:
    ChainMap() = default;
    ChainMap(Complex source, Complex target, const std::map<int, Matrix>& components = {});

    static ChainMap identity(const Complex& c);
    static ChainMap zero(const Complex& source, const Complex& target);

    const Complex& source() const { return source_; }
    const Complex& target() const { return target_; }
    const Matrix& at(int n) const;

    /// Throws ValidationError if some square fails to commute.
    void validate() const;

    friend ChainMap operator*(const ChainMap& g, const ChainMap& f);  ///< composition g∘f
    friend ChainMap operator+(const ChainMap& a, const ChainMap& b);
    friend ChainMap operator*(const Rational& s, const ChainMap& f);

private:
    Complex source_, target_;
    int lo_ = 0;
    std::vector<Matrix> comp_;  // comp_[k] is f^{lo_+k}, over the union of supports
};

/// H^n of a complex with chosen representatives.
struct Cohomology {
    int degree = 0;
    std::size_t dim = 0;
    Matrix cycles;          ///< basis of ker d^n (columns)
    Matrix boundaries;      ///< basis of im d^{n-1}
    Matrix representatives; ///< C^n × dim, cycles mapping to a basis of H^n
    Matrix projection;      ///< dim × C^n; kills boundaries, inverts representatives on cycles
};

Cohomology cohomology(const Complex& c, int n);
std::size_t betti(const Complex& c, int n);
/// Dimensions of H^n for n in [lo, hi] (empty for the zero complex).
std::map<int, std::size_t> betti_table(const Complex& c);
bool is_acyclic(const Complex& c);
long euler_characteristic(const Complex& c);

/// The matrix of H^n(f) in the representative bases of source and target.
Matrix induced_map(const ChainMap& f, int n);
Matrix induced_map(const ChainMap& f, int n, const Cohomology& hs, const Cohomology& ht);

/// shift(c,k)^n = c^{n+k}, differential (−1)^k d.
Complex shift(const Complex& c, int k);
ChainMap shift(const ChainMap& f, int k);

Complex direct_sum(const Complex& a, const Complex& b);
ChainMap direct_sum(const ChainMap& f, const ChainMap& g);

/// cone^n = target^n ⊕ source^{n+1}, d = [[d_t, f], [0, −d_s]].
struct Cone {
    Complex complex;
    ChainMap inclusion;   ///< target → cone
    ChainMap projection;  ///< cone → source[1]
};
Cone cone(const ChainMap& f);

/// (a⊗b)^n = ⊕_p a^p ⊗ b^{n−p}, blocks by ascending p, Kronecker order inside;
/// d(x⊗y) = dx⊗y + (−1)^p x⊗dy.
Complex tensor(const Complex& a, const Complex& b);
ChainMap tensor(const ChainMap& f, const ChainMap& g);
/// Offset of the block a^p ⊗ b^{n−p} inside (a⊗b)^n.
std::size_t tensor_offset(const Complex& a, const Complex& b, int n, int p);
/// The element x⊗y of (a⊗b)^{p+q} for x ∈ a^p, y ∈ b^q.
Vector tensor_element(const Complex& a, const Complex& b, int p, const Vector& x, int q, const Vector& y);

/// Hom^n = ⊕_q Hom(a^q, b^{q+n}), blocks by ascending q over a's support, each
/// block a row-major vectorized matrix; d f = d_b f − (−1)^n f d_a.
Complex hom_complex(const Complex& a, const Complex& b);
std::size_t hom_offset(const Complex& a, const Complex& b, int n, int q);
/// Packs the family q ↦ f_q : a^q → b^{q+n} into a vector of Hom^n.
Vector hom_pack(const Complex& a, const Complex& b, int n, const std::function<Matrix(int)>& f);
/// Inverse of hom_pack.
std::map<int, Matrix> hom_unpack(const Complex& a, const Complex& b, int n, const Vector& v);
/// f ↦ g∘f : Hom(a, b) → Hom(a, b′) for a chain map g: b → b′.
ChainMap hom_post(const Complex& a, const ChainMap& g);
/// f ↦ f∘h : Hom(a, b) → Hom(a′, b) for a chain map h: a′ → a.
ChainMap hom_pre(const ChainMap& h, const Complex& b);

/// Quasi-isomorphism via acyclicity of the cone.
bool is_quasi_iso(const ChainMap& f);
/// Quasi-isomorphism via invertibility of every induced H^n(f).
bool is_quasi_iso_by_cohomology(const ChainMap& f);

/// The subcomplex spanned degreewise by the columns of `bases` (which must be
/// stable under d), together with its inclusion.
struct Subcomplex {
    Complex complex;
    ChainMap inclusion;
    std::map<int, Matrix> bases;
};
Subcomplex subcomplex(const Complex& c, const std::map<int, Subspace>& spaces);

/// Quotient complex c / sub with its projection; `sub` must be d-stable.
struct QuotientComplex {
    Complex complex;
    ChainMap projection;
    std::map<int, Quotient> pieces;
};
QuotientComplex quotient_complex(const Complex& c, const std::map<int, Subspace>& sub);

/// τ_{≤n}: degrees < n unchanged, ker d^n in degree n.
Subcomplex truncate_below_or_at(const Complex& c, int n);
/// τ_{≥n}: Coim d^{n−1} in degree n−1, degrees ≥ n unchanged.
struct Truncation {
    Complex complex;
    ChainMap projection;  ///< c → τ_{≥n} c
    Quotient coimage;     ///< C^{n−1} / ker d^{n−1}
};
Truncation truncate_at_or_above(const Complex& c, int n);

enum class Side { AtMost, AtLeast };
/// The map induced by f between the truncations of its source and target.
ChainMap truncate_map(const ChainMap& f, int n, Side side);

}  // namespace synco
