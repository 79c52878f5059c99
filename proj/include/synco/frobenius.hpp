#pragma once

// Complexes over K₀ with a σ-semilinear Frobenius. With σ = id (all data
// here is over Q) φ is an ordinary chain endomorphism; the σ-twist
// (M₀)^σ is still spelled out so formulas read as φ(x^σ).

#include "synco/complex.hpp"
#include "synco/field.hpp"

namespace synco {

class FrobeniusComplex {
public:
    FrobeniusComplex() = default;
    FrobeniusComplex(Complex m0, std::map<int, Matrix> phi, CoefficientFrame frame = {});

    const Complex& complex() const { return m0_; }
    const CoefficientFrame& frame() const { return frame_; }
    /// φ as a chain map (M₀)^σ → M₀.
    const ChainMap& phi() const { return phi_; }

    /// (M₀)^σ; equal to M₀ for σ = id.
    Complex sigma_twist() const { return m0_; }

    /// Checks φ d^σ = d φ, the frame, and that σ = id for complexes over Q.
    void validate() const;
    /// True iff every induced φ on H^n is invertible.
    bool phi_invertible_on_cohomology() const;

private:
    Complex m0_;
    ChainMap phi_;
    CoefficientFrame frame_;
};

/// φ ↦ p^{−n} φ: the Frobenius of M ⊗ K(n).
FrobeniusComplex twist_frobenius(const FrobeniusComplex& fc, int n);
/// Matrix of φ on H^n in the representative basis.
Matrix frobenius_on_cohomology(const FrobeniusComplex& fc, int n);

/// Characteristic polynomial det(T·1 − m), coefficients from T^0 upward.
std::vector<Rational> charpoly(const Matrix& m);

Rational power(const Rational& base, int exponent);

}  // namespace synco
