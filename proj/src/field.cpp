#include "synco/field.hpp"

#include <random>

namespace synco {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

NumberField::NumberField(std::vector<Rational> modulus) : modulus_(std::move(modulus)) {
    if (modulus_.size() < 2) throw ValidationError("field modulus must have degree at least 1");
    if (modulus_.back() != 1) throw ValidationError("field modulus must be monic");
    // Rational root test on the integer-scaled polynomial catches the
    // reducible cases that matter at degree 2 and 3.
    mpz_class den = 1;
    for (const auto& c : modulus_) den = lcm(den, c.get_den());
    std::vector<mpz_class> z;
    for (const auto& c : modulus_) z.push_back(mpz_class(c * den));
    auto divisors = [](mpz_class n) {
        std::vector<mpz_class> out;
        n = abs(n);
        if (n == 0) return out;
        for (mpz_class d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                out.push_back(d);
                out.push_back(n / d);
            }
        return out;
    };
    if (z.front() == 0 && degree() > 1) throw ValidationError("field modulus is reducible (root 0)");
    for (const auto& a : divisors(z.front()))
        for (const auto& b : divisors(z.back()))
            for (int s : {1, -1}) {
                Rational r(s * a, b);
                Rational v = 0;
                for (std::size_t k = modulus_.size(); k-- > 0;) v = v * r + modulus_[k];
                if (v == 0 && degree() > 1) throw ValidationError("field modulus is reducible (rational root)");
            }
}

Vector NumberField::one() const { return embed(1); }

Vector NumberField::generator() const {
    Vector v(degree());
    if (degree() == 1)
        v[0] = -modulus_[0];
    else
        v[1] = 1;
    return v;
}

Vector NumberField::embed(const Rational& q) const {
    Vector v(degree());
    v[0] = q;
    return v;
}

Vector NumberField::add(const Vector& a, const Vector& b) const { return a + b; }

Vector NumberField::mul(const Vector& a, const Vector& b) const {
    const std::size_t n = degree();
    Vector prod(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) prod[i + j] += a[i] * b[j];
    for (std::size_t k = prod.size(); k-- > n;) {
        Rational c = prod[k];
        if (c == 0) continue;
        for (std::size_t j = 0; j < n; ++j) prod[k - n + j] -= c * modulus_[j];
        prod[k] = 0;
    }
    prod.resize(n);
    return prod;
}

Vector NumberField::evaluate(const std::vector<Rational>& poly, const Vector& x) const {
    Vector acc(degree());
    for (std::size_t k = poly.size(); k-- > 0;) acc = add(mul(acc, x), embed(poly[k]));
    return acc;
}

Vector FieldAutomorphism::apply(const NumberField& k, const Vector& x) const {
    return k.evaluate(std::vector<Rational>(x.begin(), x.end()), generator_image);
}

bool CoefficientFrame::sigma_is_identity() const {
    if (!sigma) return true;
    if (!extension) return true;
    return sigma->generator_image == extension->generator();
}

void CoefficientFrame::validate(int samples) const {
    if (!is_prime(p)) throw ValidationError("frame: p = " + std::to_string(p) + " is not prime");
    if (sigma && !extension && !sigma->generator_image.empty())
        throw ValidationError("frame: sigma given without a field extension");
    if (!extension || !sigma) return;
    const NumberField& k = *extension;
    if (sigma->generator_image.size() != k.degree()) throw ValidationError("frame: sigma has the wrong length");
    if (!is_zero(k.evaluate(k.modulus(), sigma->generator_image)))
        throw ValidationError("frame: sigma does not send the generator to a root of the modulus");
    if (sigma->apply(k, k.one()) != k.one()) throw ValidationError("frame: sigma(1) != 1");
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int s = 0; s < samples; ++s) {
        Vector a(k.degree()), b(k.degree());
        for (auto& x : a) x = coef(rng);
        for (auto& x : b) x = Rational(coef(rng), 1 + (coef(rng) + 5) % 3);
        if (sigma->apply(k, k.mul(a, b)) != k.mul(sigma->apply(k, a), sigma->apply(k, b)))
            throw ValidationError("frame: sigma is not multiplicative");
    }
}

bool operator==(const CoefficientFrame& a, const CoefficientFrame& b) {
    if (a.p != b.p) return false;
    if (a.extension.has_value() != b.extension.has_value()) return false;
    if (a.extension && a.extension->modulus() != b.extension->modulus()) return false;
    return a.sigma_is_identity() == b.sigma_is_identity() &&
           (a.sigma_is_identity() || a.sigma->generator_image == b.sigma->generator_image);
}

}  // namespace synco
