#pragma once

// Γ(M, M′) = Cone(ψ: Γ₀ → Γ₁)[−1], whose cohomology computes Ext in the
// derived category of p-adic Hodge complexes.
//
// Γ₀ = Hom(M₀, M₀′) ⊕ Hom(M_K, M_K′) ⊕ Hom^F(M_dR, M_dR′)
// Γ₁ = Hom(M₀, M₀′) ⊕ Hom(M₀, M_K′)  ⊕ Hom(M_dR, M_K′)
// ψ(x₀, x_K, x_dR) = (φ′x₀ − x₀φ, c′x₀ − x_K c, x_K s − s′x_dR)
// Γ^n = Γ₁^{n−1} ⊕ Γ₀^n with D(z, x) = (−dz − ψx, dx).

#include <array>

#include "synco/phc.hpp"

namespace synco {

struct GammaComplex {
    PHodgeComplex source, target;
    std::array<Complex, 3> slots0;   ///< Hom(M₀,M₀′), Hom(M_K,M_K′), Hom^F(M_dR,M_dR′)
    std::array<Complex, 3> slots1;   ///< Hom(M₀,M₀′), Hom(M₀,M_K′), Hom(M_dR,M_K′)
    Complex hom_dr;                  ///< the full Hom(M_dR, M_dR′)
    Subcomplex hom_dr_filtered;      ///< Hom^F inside hom_dr
    Complex gamma0, gamma1;
    ChainMap psi;
    Complex complex;

    /// Offset of slot k of Γ₀^n (resp. Γ₁^{n−1}) inside Γ^n.
    std::size_t offset0(int n, int k) const;
    std::size_t offset1(int n, int k) const;
};

GammaComplex gamma(const PHodgeComplex& m, const PHodgeComplex& m2);

/// dim H^n(Γ(m, m2)).
std::size_t ext(const PHodgeComplex& m, const PHodgeComplex& m2, int n);
std::map<int, std::size_t> ext_table(const PHodgeComplex& m, const PHodgeComplex& m2);

/// Γ(m, m2) → Γ(m, m3) induced by postcomposition with g: m2 → m3.
ChainMap gamma_post(const GammaComplex& from, const GammaComplex& to, const PHMorphism& g);
/// Γ(m, n) → Γ(m′, n) induced by precomposition with g: m′ → m.
ChainMap gamma_pre(const GammaComplex& from, const GammaComplex& to, const PHMorphism& g);

struct InvarianceReport {
    bool morphism_is_quasi_iso = false;
    std::map<int, std::pair<std::size_t, std::size_t>> dims;  ///< n ↦ (dim source, dim target)
    std::map<int, std::size_t> ranks;                         ///< rank of the induced map
    bool all_isomorphisms = false;
};
/// Checks that H^n(Γ(m, −)) sends g: m2 → m3 to isomorphisms.
InvarianceReport quasi_iso_invariance(const PHodgeComplex& m, const PHMorphism& g);

/// Elements of Γ(K, M) split into slots.
struct UnitGammaElement {
    int degree = 0;
    std::array<Vector, 3> z;  ///< Γ₁ part in degree−1: M₀, M_K, M_K
    std::array<Vector, 3> x;  ///< Γ₀ part: M₀, M_K, M_dR (ambient vectors in F⁰M_dR)
};
UnitGammaElement split_unit_element(const GammaComplex& g, int n, const Vector& v);
Vector join_unit_element(const GammaComplex& g, const UnitGammaElement& e);

/// The product Γ(K,M)^a × Γ(K,N)^b → Γ(K, M⊗N)^{a+b}, interpolated by α:
/// (z,x)∪(w,y) = ((−1)^a (α·A(x) + (1−α)·B(x))·w + z·(α·B(y) + (1−α)·A(y)), x·y)
/// with A(x) = (φx₀, c x₀, x_K), B(x) = (x₀, x_K, s x_dR), so that ψ = A − B.
/// `gmn` must be gamma(unit, tensor(M, N)).
Vector cup(const GammaComplex& gm, int a, const Vector& u, const GammaComplex& gn, int b, const Vector& v,
           const GammaComplex& gmn, const Rational& alpha);

/// The map Γ(K, M) → Γ(N, L) induced by a pairing π: M ⊗ N → L:
/// x ↦ (y ↦ π(x⊗y)) on Γ₀ and (z₀,z₁,z₂) ↦ (π(z₀⊗φ_N y), π(z₁⊗c_N y), π(z₂⊗s_N y)) on Γ₁.
ChainMap gamma_pairing_map(const GammaComplex& from, const GammaComplex& to, const PHMorphism& pi);

}  // namespace synco
