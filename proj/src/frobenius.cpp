#include "synco/frobenius.hpp"

namespace synco {

Rational power(const Rational& base, int exponent) {
    Rational r = 1;
    const Rational b = exponent >= 0 ? base : Rational(1) / base;
    for (int k = 0; k < std::abs(exponent); ++k) r *= b;
    return r;
}

FrobeniusComplex::FrobeniusComplex(Complex m0, std::map<int, Matrix> phi, CoefficientFrame frame)
    : m0_(std::move(m0)), frame_(std::move(frame)) {
    for (int n = m0_.lo(); n <= m0_.hi(); ++n)
        if (!phi.count(n)) phi[n] = Matrix::identity(m0_.dim(n));
    phi_ = ChainMap(m0_, m0_, phi);
}

void FrobeniusComplex::validate() const {
    m0_.validate();
    frame_.validate();
    if (!frame_.sigma_is_identity())
        throw ValidationError("Frobenius complex over Q requires sigma = id");
    try {
        phi_.validate();
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("phi is not a chain map: ") + e.what());
    }
}

bool FrobeniusComplex::phi_invertible_on_cohomology() const {
    for (int n = m0_.lo(); n <= m0_.hi(); ++n) {
        Matrix m = frobenius_on_cohomology(*this, n);
        if (rank(m) != m.rows()) return false;
    }
    return true;
}

FrobeniusComplex twist_frobenius(const FrobeniusComplex& fc, int n) {
    const Rational scale = power(Rational(fc.frame().p), -n);
    std::map<int, Matrix> phi;
    for (int k = fc.complex().lo(); k <= fc.complex().hi(); ++k) phi[k] = scale * fc.phi().at(k);
    return FrobeniusComplex(fc.complex(), phi, fc.frame());
}

Matrix frobenius_on_cohomology(const FrobeniusComplex& fc, int n) { return induced_map(fc.phi(), n); }

std::vector<Rational> charpoly(const Matrix& m) {
    // Faddeev–LeVerrier; exact over Q.
    const std::size_t n = m.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    Matrix mk = Matrix(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk + Matrix::scalar(n, c[n - k + 1]);
        Matrix am = m * mk;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return c;
}

}  // namespace synco
