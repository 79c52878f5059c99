#pragma once

// Godement resolutions on finite sites. A site is a finite poset X whose
// elements are the points of an Alexandrov space (opens are up-sets, U_x is
// the smallest open around x), so a sheaf is a functor: stalks F_x with
// restrictions F_x → F_y for x ≤ y.
//
// The points of the site are a list of elements (repetition allowed: a
// disjoint union of point sets). With T = u_*u^*,
//   (T^{k} F)_x = ⊕ F_{c_{k−1}} over multichains x ≤ c_0 ≤ ... ≤ c_{k−1} of points,
// coface δ_i omits c_i (restricting when i is last), codegeneracy σ_i repeats c_i.

#include <optional>
#include <string>
#include <vector>

#include "synco/spectral.hpp"

namespace synco {

class FiniteSite {
public:
    FiniteSite() = default;
    /// `leq` lists generating relations a ≤ b; the order is their reflexive-transitive closure.
    FiniteSite(std::vector<std::string> elements, const std::vector<std::pair<std::string, std::string>>& leq,
               const std::vector<std::string>& points, bool enough_points_claimed = false);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t index(const std::string& name) const;
    bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
    /// Covering relations a < b with nothing strictly between.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const;
    /// Element underlying each point.
    const std::vector<std::size_t>& points() const { return points_; }
    /// Length of the longest strict chain.
    int height() const;
    /// Every skyscraper sheaf has a nonzero stalk at some point.
    bool has_enough_points() const;
    bool enough_points_claimed() const { return claimed_; }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<bool>> leq_;
    std::vector<std::size_t> points_;
    bool claimed_ = false;
};

class Sheaf {
public:
    Sheaf() = default;
    /// `restrictions` holds F_a → F_b for covering pairs a < b; the rest are composites.
    Sheaf(const FiniteSite& site, std::vector<std::size_t> dims,
          const std::map<std::pair<std::size_t, std::size_t>, Matrix>& restrictions);
    static Sheaf constant(const FiniteSite& site, std::size_t dim = 1);
    static Sheaf skyscraper(const FiniteSite& site, std::size_t at, std::size_t dim = 1);

    std::size_t dim(std::size_t x) const { return dims_[x]; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    /// F_x → F_y for x ≤ y (identity for x = y).
    Matrix restriction(std::size_t x, std::size_t y) const;
    /// Throws ValidationError unless composites along different paths agree.
    void validate(const FiniteSite& site) const;

private:
    std::vector<std::size_t> dims_;
    std::map<std::pair<std::size_t, std::size_t>, Matrix> rho_;  // all pairs x < y
};

Sheaf tensor(const FiniteSite& site, const Sheaf& f, const Sheaf& g);

/// Γ(X, F) = lim F as a subspace of ⊕_x F_x.
Matrix global_sections(const FiniteSite& site, const Sheaf& f);

/// A point-multichain index for (T^{len} F)_x, or for Γ(X, T^{len} F) when base is empty.
struct ChainIndex {
    std::vector<std::vector<std::size_t>> chains;  ///< point indices
    std::vector<std::size_t> offsets;
    std::size_t dim = 0;
};
ChainIndex chain_index(const FiniteSite& site, const Sheaf& f, int len, std::optional<std::size_t> base);

/// The operator that omits position i of a chain of length len+1 (restricting when i = len).
Matrix omit(const FiniteSite& site, const Sheaf& f, int len, int i, std::optional<std::size_t> base);
/// The operator that repeats position i of a chain of length len+1, from length len+2.
Matrix repeat(const FiniteSite& site, const Sheaf& f, int len, int i, std::optional<std::size_t> base);

/// u^*, u_* and the unit and counit, checked through the triangle identities.
struct AdjunctionReport {
    bool unit_counit_on_pullback = true;   ///< ε u^* ∘ u^* η = id
    bool unit_counit_on_pushforward = true;  ///< u_* ε ∘ η u_* = id
};
AdjunctionReport adjunction(const FiniteSite& site, const Sheaf& f);

/// Stalks of B^k = T^{k+1} F at every element with cofaces and codegeneracies, up to level `levels`.
struct CosimplicialReport {
    int levels = 0;
    bool identities_hold = true;
    std::string failure;
};
CosimplicialReport check_cosimplicial(const FiniteSite& site, const Sheaf& f, int levels);

/// The truncated Godement complex T F → T² F → ... → T^{K+1} F, at an element or globally.
Complex godement_complex(const FiniteSite& site, const Sheaf& f, int truncation, std::optional<std::size_t> base);
/// b_F: F_x → (T F)_x, or Γ(X, F) → Γ(X, T F) in the coordinates of global_sections.
Matrix augmentation(const FiniteSite& site, const Sheaf& f, std::optional<std::size_t> base);

struct ResolutionReport {
    int truncation = 0;
    /// F_x → Gd(F)_x exact below the truncation at every point.
    bool quasi_iso_at_points = true;
    /// The same at every element.
    bool quasi_iso = true;
    std::vector<std::size_t> failing_elements;
};
ResolutionReport bar_resolution(const FiniteSite& site, const Sheaf& f, int truncation = -1);

/// Γ(X, Gd(Gd F)) as a double complex truncated to total degree ≤ K.
DoubleComplex godement_squared(const FiniteSite& site, const Sheaf& f, int truncation);

enum class Route { Godement, GodementSquared, Cech };
/// dim H^i(X, F) for 0 ≤ i ≤ height + 1. The Godement routes need enough points.
std::vector<std::size_t> sheaf_cohomology(const FiniteSite& site, const Sheaf& f, Route route);
/// The normalized cochain complex ∏_{x_0<...<x_n} F_{x_n} of the nerve of X.
Complex cech_complex(const FiniteSite& site, const Sheaf& f);

/// An order-preserving map of sites with a compatible map of points and a
/// natural map a_x: G_{f(x)} → F_x (equivalently G → f_* F).
struct SiteMorphism {
    FiniteSite source, target;
    std::vector<std::size_t> on_elements;  ///< x ↦ f(x)
    std::vector<std::size_t> on_points;    ///< π ↦ g(π), with f(x_π) = y_{g(π)}
};
struct FunctorialReport {
    ChainMap map;                  ///< Γ(Q, Gd_Q G) → Γ(P, Gd_P F)
    Matrix on_sections;            ///< Γ(Q, G) → Γ(P, F)
    bool commutes_with_augmentation = true;
    std::vector<Matrix> on_cohomology;
};
/// Throws ValidationError if the square of sites does not commute or a is not natural.
FunctorialReport gd_functorial(const SiteMorphism& f, const Sheaf& g, const Sheaf& fsheaf,
                               const std::vector<Matrix>& a, int truncation = -1);

struct TensorReport {
    bool quasi_iso = true;  ///< stalkwise below the truncation
    std::vector<std::size_t> cohomology;  ///< H^*(X, F⊗G) via Gd
};
/// Alexander–Whitney map Gd(F) ⊗ Gd(G) → Gd(F ⊗ G), checked at every element.
TensorReport gd_tensor(const FiniteSite& site, const Sheaf& f, const Sheaf& g, int truncation = -1);

}  // namespace synco
