#pragma once

// Glued objects M_rig →c M_K ←s M_dR and their morphisms.

#include <vector>

#include "synco/filtered.hpp"
#include "synco/frobenius.hpp"

namespace synco {

struct PHodgeComplex {
    FrobeniusComplex rig;
    FilteredComplex dr;
    Complex k;
    ChainMap c;  ///< M_rig ⊗ K → M_K
    ChainMap s;  ///< M_dR → M_K

    const CoefficientFrame& frame() const { return rig.frame(); }
    /// Re-checks every component and that c, s land in the same M_K.
    void validate() const;
};

struct PHMorphism {
    PHodgeComplex source, target;
    ChainMap rig, dr, k;

    /// φ-compatibility, filtration preservation and both squares, exactly.
    void validate() const;
    FilteredMap dr_filtered() const { return {source.dr, target.dr, dr}; }
};

PHMorphism identity(const PHodgeComplex& m);
PHMorphism compose(const PHMorphism& g, const PHMorphism& f);

/// K(n): K in degree 0 everywhere, φ = p^{−n}, F^i = K for i ≤ −n, c = s = id.
PHodgeComplex tate_object(int n, const CoefficientFrame& frame = {});
PHodgeComplex unit_object(const CoefficientFrame& frame = {});

/// Componentwise tensor product with c⊗c′, s⊗s′; throws on frame mismatch.
PHodgeComplex tensor(const PHodgeComplex& a, const PHodgeComplex& b);
/// M(n) = M ⊗ K(n), realized without the unit factor: φ·p^{−n}, F jumps moved by −n.
PHodgeComplex twist(const PHodgeComplex& m, int n);
PHMorphism twist(const PHMorphism& f, int n);
PHodgeComplex shift(const PHodgeComplex& m, int k);
PHodgeComplex direct_sum(const PHodgeComplex& a, const PHodgeComplex& b);
/// Componentwise cone with φ, c, s block-diagonal.
PHodgeComplex cone(const PHMorphism& f);

bool is_quasi_iso(const PHMorphism& f);
bool is_acyclic(const PHodgeComplex& m);

/// Componentwise truncation (filtered on the dR part).
PHodgeComplex truncate(const PHodgeComplex& m, int n, Side side);

/// Q = Cone((f, −g): M₂ → M₁ ⊕ M₃) for f: M₂ → M₁, g: M₂ → M₃.
struct QuasiPushout {
    Complex q;
    ChainMap from_first;   ///< M₁ → Q
    ChainMap from_third;   ///< M₃ → Q
    /// h^n : M₂^n → Q^{n−1} with from_first∘f − from_third∘g = d h + h d.
    std::map<int, Matrix> homotopy;
};
QuasiPushout quasi_pushout(const ChainMap& f, const ChainMap& g);

/// P = Cone(M₁ ⊕ M₃ → M₂, (x, y) ↦ f x − g y)[−1] for f: M₁ → M₂, g: M₃ → M₂.
struct QuasiPullback {
    Complex p;
    ChainMap to_first;   ///< P → M₁
    ChainMap to_third;   ///< P → M₃
    /// k^n : P^n → M₂^{n−1} with f∘to_first − g∘to_third = d k + k d.
    std::map<int, Matrix> homotopy;
};
QuasiPullback quasi_pullback(const ChainMap& f, const ChainMap& g);

/// X₀ → X₁ ← X₂ → X₃ ← ... ← X_{2m}, with X₀ = rig and X_{2m} = dR.
/// arrows[j] connects X_j and X_{j+1}: rightward for even j, leftward for odd j.
struct Zigzag {
    FrobeniusComplex rig;
    FilteredComplex dr;
    std::vector<Complex> middle;     ///< X₁ ... X_{2m−1}
    std::vector<ChainMap> arrows;    ///< 2m arrows
    std::vector<bool> quasi_iso;     ///< per-arrow flag (asserted, then verified)

    std::size_t node_count() const { return middle.size() + 2; }
    const Complex& node(std::size_t j) const;
    /// Shape checks, flagged arrows verified, interior leftward arrows must be quasi-isos.
    void validate() const;
};

/// Collapses a zigzag into M_rig → M_K ← M_dR by iterated quasi-pushouts.
PHodgeComplex collapse_zigzag(const Zigzag& z);

/// A morphism of zigzags: one chain map per node, commuting with every arrow.
struct ZigzagMorphism {
    Zigzag source, target;
    std::vector<ChainMap> nodes;
    void validate() const;
};
PHMorphism collapse_zigzag(const ZigzagMorphism& u);

/// Concatenates z (ending in a middle node, viewed as the dR end) with w.
Zigzag concatenate(const Zigzag& z, const Zigzag& w);

}  // namespace synco
