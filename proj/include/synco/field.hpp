#pragma once

// Coefficient fields. Complexes are always over Q; a number field Q[t]/(f)
// with an automorphism is carried so that a nontrivial σ can be checked
// at scalar level.

#include <optional>
#include <vector>

#include "synco/linalg.hpp"

namespace synco {

/// Q[t]/(f) for a monic irreducible f, elements in the power basis 1, t, ..., t^{deg-1}.
class NumberField {
public:
    /// `modulus` lists the coefficients of f from t^0 up to t^deg (leading 1).
    explicit NumberField(std::vector<Rational> modulus);

    std::size_t degree() const { return modulus_.size() - 1; }
    const std::vector<Rational>& modulus() const { return modulus_; }

    Vector one() const;
    Vector generator() const;
    Vector embed(const Rational& q) const;
    Vector add(const Vector& a, const Vector& b) const;
    Vector mul(const Vector& a, const Vector& b) const;
    /// Evaluates the polynomial with coefficients `poly` at the element x.
    Vector evaluate(const std::vector<Rational>& poly, const Vector& x) const;

private:
    std::vector<Rational> modulus_;
};

/// σ on a number field, determined by the image of the generator.
struct FieldAutomorphism {
    Vector generator_image;
    Vector apply(const NumberField& k, const Vector& x) const;
};

/// The arithmetic context: K₀ ⊆ K, the prime p and σ.
struct CoefficientFrame {
    long p = 2;
    std::optional<NumberField> extension;
    std::optional<FieldAutomorphism> sigma;  ///< absent means identity

    bool sigma_is_identity() const;
    /// Throws ValidationError if p is not prime, if σ is given without an
    /// extension, or if σ fails to be unital and multiplicative on `samples`
    /// pseudo-random elements.
    void validate(int samples = 100) const;
    friend bool operator==(const CoefficientFrame& a, const CoefficientFrame& b);
};

bool is_prime(long p);

}  // namespace synco
