#pragma once

// Double complexes and the spectral sequences of filtered complexes.
// Convention: d_h and d_v anticommute and the total differential is d_h + d_v.

#include <array>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "synco/filtered.hpp"

namespace synco {

using Bidegree = std::pair<int, int>;

class DoubleComplex {
public:
    DoubleComplex() = default;
    /// d_h: A^{p,q} → A^{p+1,q}, d_v: A^{p,q} → A^{p,q+1}; missing maps are zero.
    DoubleComplex(std::map<Bidegree, std::size_t> dims, std::map<Bidegree, Matrix> dh, std::map<Bidegree, Matrix> dv);

    std::size_t dim(int p, int q) const;
    Matrix dh(int p, int q) const;
    Matrix dv(int p, int q) const;
    const std::map<Bidegree, std::size_t>& dims() const { return dims_; }
    const std::map<Bidegree, Matrix>& horizontal() const { return dh_; }
    const std::map<Bidegree, Matrix>& vertical() const { return dv_; }
    /// Bounding rectangle of the nonzero spaces: p_lo, p_hi, q_lo, q_hi.
    std::array<int, 4> bounds() const;

    /// d_h² = 0, d_v² = 0 and d_h d_v + d_v d_h = 0, naming the failing bidegree.
    void validate() const;
    /// Swaps the roles of p and q.
    DoubleComplex transposed() const;

private:
    std::map<Bidegree, std::size_t> dims_;
    std::map<Bidegree, Matrix> dh_, dv_;
};

/// sA^n = ⊕_{p+q=n} A^{p,q}, blocks by ascending p.
Complex total_complex(const DoubleComplex& dc);
std::size_t total_offset(const DoubleComplex& dc, int n, int p);

/// E_r^{p,q} = Z_r / (Z_{r−1}^{p+1} + d Z_{r−1}^{p−r+1}), Z_r^p = F^p ∩ d^{−1} F^{p+r}.
struct SpectralPage {
    int r = 0;
    std::map<Bidegree, std::size_t> dims;
    /// d_r: E_r^{p,q} → E_r^{p+r,q−r+1}, keyed by source.
    std::map<Bidegree, Matrix> d;
    std::size_t dim(int p, int q) const;
};

struct SpectralSequence {
    std::vector<SpectralPage> pages;  ///< E_0, E_1, ... up to stabilization
    SpectralPage infinity;
    std::map<int, std::size_t> total_betti;
    /// d_r² = 0 and dim E_{r+1} = dim ker d_r − dim im d_r on every page.
    bool pages_consistent = true;
    /// Σ_{p+q=n} dim E_∞^{p,q} = dim H^n for all n.
    bool converges = true;
    /// First page from which all differentials vanish.
    int degenerates_at = 0;
};

/// Spectral sequence of a complex with a descending filtration F(n, p) ⊆ C^n,
/// F^p = C^n for p ≤ p_lo and 0 for p > p_hi.
SpectralSequence spectral_sequence(const Complex& c, const std::function<Subspace(int, int)>& filtration, int p_lo,
                                   int p_hi);

enum class Direction { Columns, Rows };
/// Columns: F^p = ⊕_{p′≥p} A^{p′,*}, E_1^{p,q} = H^q(A^{p,*}). Rows: the same for the transpose.
SpectralSequence spectral_sequence(const DoubleComplex& dc, Direction direction);
/// The spectral sequence H^n(gr^p) ⇒ H^n, indexed by (p, n − p).
SpectralSequence spectral_sequence(const FilteredComplex& fc);

/// A^{n,m} = C^m for −N ≤ n ≤ 0 with d_v = (−1)^n d_C and d_h = id out of even n < 0,
/// the alternating coface sums of a constant cosimplicial object.
DoubleComplex collapse_double_complex(const Complex& c, int n_columns);

struct CollapseReport {
    int columns = 0;
    SpectralSequence sequence;
    /// d_1 is the identity out of even columns n < 0 and zero otherwise.
    bool d1_pattern = true;
    /// Projection to column 0 induces isomorphisms H^i(total) → H^i(C).
    bool cohomology_matches = true;
};
/// Throws PreconditionError for odd or negative N.
CollapseReport simplicial_collapse(const Complex& c, int n_columns);

}  // namespace synco
