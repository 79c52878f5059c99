#pragma once

// Filtered complexes: descending, exhaustive, separated flags per degree.

#include <map>
#include <utility>
#include <vector>

#include "synco/complex.hpp"

namespace synco {

/// A descending flag on K^n stored by jump levels: F^i is the space of the
/// smallest listed level ≥ i, and 0 above the last listed level.
class Filtration {
public:
    Filtration() = default;
    /// Steps may come in any order; they are sorted, checked to be descending
    /// with a whole first space, and normalized (redundant levels dropped).
    Filtration(std::size_t ambient_dim, std::vector<std::pair<int, Subspace>> steps);

    /// F^i = K^n for i ≤ level, 0 above.
    static Filtration trivial(std::size_t ambient_dim, int level = 0);

    std::size_t ambient_dim() const { return ambient_; }
    Subspace at(int i) const;
    const std::vector<std::pair<int, Subspace>>& steps() const { return steps_; }
    std::vector<int> levels() const;
    /// F'^i = F^{i+k}: every jump moves by −k.
    Filtration reindexed(int k) const;

    friend bool operator==(const Filtration& a, const Filtration& b);

private:
    std::size_t ambient_ = 0;
    std::vector<std::pair<int, Subspace>> steps_;
};

/// Filtration whose F^i is computed by `at` at each candidate level.
Filtration filtration_from(std::size_t ambient_dim, std::vector<int> levels,
                           const std::function<Subspace(int)>& at);

class FilteredComplex {
public:
    FilteredComplex() = default;
    /// Degrees missing from `filtration` get the trivial filtration at level 0.
    FilteredComplex(Complex carrier, std::map<int, Filtration> filtration);

    static FilteredComplex trivial(const Complex& c, int level = 0);

    const Complex& carrier() const { return carrier_; }
    const Filtration& filtration(int n) const;
    Subspace F(int n, int i) const { return filtration(n).at(i); }
    /// Union over degrees of the jump levels.
    std::vector<int> levels() const;

    /// Throws ValidationError if d^n(F^i) ⊄ F^i somewhere.
    void validate() const;

private:
    Complex carrier_;
    std::map<int, Filtration> filt_;
};

/// A chain map between carriers that should preserve the filtrations.
struct FilteredMap {
    FilteredComplex source, target;
    ChainMap map;
    void validate() const;
};

/// F^i as a subcomplex of the carrier.
Subcomplex filtered_piece(const FilteredComplex& fc, int i);

/// gr^i for every jump level i (other levels give the zero complex).
std::map<int, Complex> graded(const FilteredComplex& fc);
Complex graded_piece(const FilteredComplex& fc, int i);
/// gr^i(f) between graded pieces.
ChainMap graded_map(const FilteredMap& f, int i);

bool is_strict_map(const FilteredMap& f);
/// f(F^i) = F^i ∩ Im f for a single linear map between filtered spaces.
bool is_strict_linear(const Matrix& f, const Filtration& source, const Filtration& target);

/// Σ_p dim H^n(gr^p).
std::size_t e1_dimension(const FilteredComplex& fc, int n);
/// Strict via all differentials being strict maps.
bool is_strict_complex(const FilteredComplex& fc);
/// Strict via Σ_p dim H^n(gr^p) = dim H^n for all n.
bool is_strict_complex_by_e1(const FilteredComplex& fc);

/// Truncations with induced filtrations (sub on Ker d^n, image on Coim d^{n−1}).
struct FilteredTruncation {
    FilteredComplex complex;
    ChainMap map;  ///< inclusion for ≤, projection for ≥
};
FilteredTruncation filtered_truncate(const FilteredComplex& fc, int n, Side side);

/// The filtration induced on H^n: image of F^i ∩ Ker d in H^n, in the representative basis.
Filtration induced_on_cohomology(const FilteredComplex& fc, int n, const Cohomology& h);

bool is_filtered_quasi_iso(const FilteredMap& f);

FilteredComplex shift(const FilteredComplex& fc, int k);
FilteredComplex direct_sum(const FilteredComplex& a, const FilteredComplex& b);
/// F^i(A⊗B) = Σ_a F^a A ⊗ F^{i−a} B blockwise.
FilteredComplex tensor(const FilteredComplex& a, const FilteredComplex& b);
/// Cone of a filtered map with the direct-sum filtration.
FilteredComplex cone(const FilteredMap& f);
/// F'^i = F^{i+k}.
FilteredComplex reindex(const FilteredComplex& fc, int k);

/// The subcomplex of Hom(a, b) of maps with f(F^i) ⊆ F^i in every degree and level.
Subcomplex filtered_hom(const FilteredComplex& a, const FilteredComplex& b);

}  // namespace synco
