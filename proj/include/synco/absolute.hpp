#pragma once

// Absolute cohomology and homology of geometric data, the long exact
// sequences around them, cup products, duality and Gysin maps.

#include <array>
#include <optional>
#include <string>

#include "synco/gamma.hpp"

namespace synco {

/// RΓ(X) and RΓ_c(X) with the pairing and trace that duality needs.
struct GeometricDatum {
    std::string name;
    int d = 0;
    PHodgeComplex rgamma, rgamma_c;
    std::optional<PHMorphism> pairing;  ///< tensor(rgamma, rgamma_c) → rgamma_c
    std::optional<PHMorphism> trace;    ///< rgamma_c → K(−d)[−2d]
    /// 1 ∈ RΓ(X)^0 on the rig, K and dR sides.
    std::optional<std::array<Vector, 3>> unit;
    bool c_quasi_iso = false;
    bool s_quasi_iso = false;
    bool phi_invertible = false;

    /// Checks both objects, the pairing and trace shapes, and that the flags
    /// match what is computed.
    void validate() const;
};

/// Cone(η: M₀ ⊕ F^n M_dR → M₀ ⊕ M_K)[−1] with η(x₀, x) = (p^{−n}φx₀ − x₀, c x₀ − s x).
struct UnitGamma {
    Complex complex;
    Complex source;   ///< M₀ ⊕ F^n M_dR
    Complex target;   ///< M₀ ⊕ M_K
    Subcomplex filtered_dr;
    ChainMap eta;
};
UnitGamma unit_gamma(const PHodgeComplex& m, int n);

struct AbsoluteGroup {
    int degree = 0, twist = 0;
    std::size_t dim = 0;
    Matrix classes;  ///< cocycle representatives in unit_gamma, as columns
};
AbsoluteGroup abs_cohomology(const GeometricDatum& x, int i, int n);
AbsoluteGroup abs_compact(const GeometricDatum& x, int i, int n);
/// dim Hom(RΓ_c(X), K(−i)[−n]) = dim H^{−n}(Γ(RΓ_c(X), K(−i))).
std::size_t abs_homology(const GeometricDatum& x, int i, int n);

/// A finite stretch of a long exact sequence: maps[k]: terms[k] → terms[k+1].
struct ExactSequence {
    struct Term {
        std::string label;
        std::size_t dim = 0;
    };
    std::vector<Term> terms;
    std::vector<Matrix> maps;
    /// exact[k] refers to the joint at terms[k+1].
    std::vector<bool> exact;
    bool all_exact() const;
};
/// Fills in `exact` from the maps.
void check_exactness(ExactSequence& seq);

enum class LesKind { Eta, Specialization, Cospecialization };

struct LesReport {
    ExactSequence sequence;
    /// For the sp/cosp forms: the composite read off the maps agrees with the closed formula.
    bool formula_agrees = true;
    /// η with p^{−i}φ − 1 and with φ − p^i have the same kernel and rank in every degree.
    bool normalizations_agree = true;
};
/// The sequence … → H^k(Γ) → H^k(M₀) ⊕ H^k(F^i M_dR) → H^k(M₀) ⊕ H^k(M_K) → H^{k+1}(Γ) → …
/// for k in [lo, hi]. The sp form needs c to be a quasi-isomorphism, the cosp form needs s.
LesReport long_exact_sequence(const PHodgeComplex& m, int i, int lo, int hi, LesKind kind);
LesReport long_exact_sequence(const GeometricDatum& x, int i, int lo, int hi, LesKind kind, bool compact = false);

/// The class of a ∪ b in H^{n+m}(Γ(K, RΓ_c(X)(i+j))), all in cohomology coordinates:
/// a in H^n(Γ(K, RΓ(X)(i))), b in H^m(Γ(K, RΓ_c(X)(j))).
Vector cup_absolute(const GeometricDatum& x, int n, int i, const Vector& a, int m, int j, const Vector& b,
                    const Rational& alpha = 0);
/// The class of the unit in H^0(Γ(K, RΓ(X))).
Vector unit_class(const GeometricDatum& x);

struct DualityReport {
    bool preconditions_ok = false;
    std::string failure;  ///< why the preconditions fail
    std::size_t lhs = 0;  ///< dim H^n_abs(X, i)
    std::size_t rhs = 0;  ///< dim H^abs_{2d−n}(X, d−i)
    std::size_t witness_rank = 0;
    Matrix witness;       ///< H^n(Γ(K, RΓ(i))) → H^n(Γ(RΓ_c(d−i), K[−2d]))
    bool isomorphism = false;
};
/// Empty when the duality preconditions hold, otherwise the reason they fail.
std::optional<std::string> duality_precondition_failure(const GeometricDatum& x);
DualityReport duality_check(const GeometricDatum& x, int i, int n);

/// f* : RΓ_c(Y) → RΓ_c(X) for a proper map f: X → Y.
struct ProperMap {
    GeometricDatum source, target;
    PHMorphism pullback_c;
};
/// f_*: H^n_abs(X, i) → H^{n+2c}_abs(Y, i+c), c = dim Y − dim X, in the
/// cohomology bases of Γ(K, RΓ(X)(i)) and Γ(K, RΓ(Y)(i+c)).
Matrix gysin(const ProperMap& f, int n, int i);

}  // namespace synco
