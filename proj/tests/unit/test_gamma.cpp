#include "support.hpp"

using namespace synco;

namespace {

// Elements of Γ(m, m2)^n that are cocycles, as columns.
Matrix cocycles(const GammaComplex& g, int n) { return kernel_basis(g.complex.d(n)); }

Vector random_vector(Rng& rng, std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = random_rational(rng);
    return v;
}

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

TEST_SUITE("gamma") {
    TEST_CASE("Ext between Tate objects") {
        const Json& want = test::frozen()["ext_unit"];
        for (int n = -1; n <= 2; ++n) {
            auto got = test::nonzero(ext_table(unit_object(test::frame(5)), tate_object(n, test::frame(5))));
            CAPTURE(n);
            CHECK(got == test::as_table(want[std::to_string(n)]));
        }
        // Hom(K, K) is the scalars and Ext¹(K, K) is a single extension class.
        CHECK(ext(unit_object(test::frame(5)), unit_object(test::frame(5)), 0) == 1);
        CHECK(ext(unit_object(test::frame(5)), unit_object(test::frame(5)), 1) == 1);
    }

    TEST_CASE("Γ is a complex with the documented block layout") {
        Rng rng(21);
        for (int trial = 0; trial < 10; ++trial) {
            PHodgeComplex a = random_phc(rng, test::frame(5), {0, 1, 1, 1});
            PHodgeComplex b = random_phc(rng, test::frame(5), {0, 1, 1, 1});
            GammaComplex g = gamma(a, b);
            CHECK_NOTHROW(g.complex.validate());
            CHECK_NOTHROW(g.psi.validate());
            for (int n = g.complex.lo(); n <= g.complex.hi(); ++n)
                CHECK(g.complex.dim(n) == g.gamma1.dim(n - 1) + g.gamma0.dim(n));
            CHECK(g.hom_dr_filtered.complex.total_dim() <= g.hom_dr.total_dim());
        }
    }

    TEST_CASE("degree-zero objects have Ext only in degrees 0 and 1") {
        Rng rng(22);
        for (int trial = 0; trial < 25; ++trial) {
            PHodgeComplex a = random_phc_degree0(rng, test::frame(5), 2);
            PHodgeComplex b = random_phc_degree0(rng, test::frame(5), 2);
            for (auto& [n, dim] : test::nonzero(ext_table(a, b))) {
                CAPTURE(n);
                CHECK((n == 0 || n == 1));
            }
        }
    }

    TEST_CASE("Euler characteristic of Γ") {
        // χ(Γ) = χ(Γ₀) − χ(Γ₁) regardless of the maps.
        Rng rng(23);
        for (int trial = 0; trial < 10; ++trial) {
            PHodgeComplex a = random_phc(rng, test::frame(5), {0, 1, 1, 1});
            PHodgeComplex b = random_phc(rng, test::frame(5), {0, 1, 1, 1});
            GammaComplex g = gamma(a, b);
            CHECK(euler_characteristic(g.complex) ==
                  euler_characteristic(g.gamma0) - euler_characteristic(g.gamma1));
        }
    }

    TEST_CASE("quasi-isomorphisms in the second slot induce isomorphisms") {
        Rng rng(24);
        PHodgeComplex k = unit_object(test::frame(5));
        for (int trial = 0; trial < 10; ++trial) {
            PHodgeComplex m = random_phc(rng, test::frame(5), {0, 1, 1, 1});
            InvarianceReport r = quasi_iso_invariance(k, random_quasi_iso(rng, m, {0, 1, 0, 1}));
            CHECK(r.morphism_is_quasi_iso);
            CHECK(r.all_isomorphisms);
        }
        PHodgeComplex m = random_phc(rng, test::frame(5), {0, 1, 1, 1});
        InvarianceReport bad = quasi_iso_invariance(k, random_non_quasi_iso(rng, m));
        CHECK_FALSE(bad.morphism_is_quasi_iso);
    }

    TEST_CASE("pre- and post-composition are chain maps and functorial") {
        Rng rng(25);
        PHodgeComplex a = random_phc(rng, test::frame(5), {0, 1, 1, 1});
        PHodgeComplex m = random_phc(rng, test::frame(5), {0, 1, 1, 1});
        PHMorphism f = random_quasi_iso(rng, m, {0, 1, 0, 1});
        GammaComplex from = gamma(a, f.source), to = gamma(a, f.target);
        ChainMap post = gamma_post(from, to, f);
        CHECK_NOTHROW(post.validate());
        CHECK(is_quasi_iso(post));

        GammaComplex self = gamma(a, a);
        CHECK(gamma_post(self, self, identity(a)).at(0) == Matrix::identity(self.complex.dim(0)));

        GammaComplex pre_from = gamma(f.target, a), pre_to = gamma(f.source, a);
        ChainMap pre = gamma_pre(pre_from, pre_to, f);
        CHECK_NOTHROW(pre.validate());
        CHECK(is_quasi_iso(pre));
    }

    TEST_CASE("unit elements split and join") {
        Rng rng(26);
        PHodgeComplex m = random_phc(rng, test::frame(5), {0, 1, 1, 1});
        GammaComplex g = gamma(unit_object(test::frame(5)), m);
        for (int n = g.complex.lo(); n <= g.complex.hi(); ++n) {
            Vector v = random_vector(rng, g.complex.dim(n));
            UnitGammaElement e = split_unit_element(g, n, v);
            CHECK(e.degree == n);
            CHECK(join_unit_element(g, e) == v);
        }
    }

    TEST_CASE("cup product obeys the Leibniz rule") {
        Rng rng(27);
        PHodgeComplex k = unit_object(test::frame(5));
        for (int trial = 0; trial < 12; ++trial) {
            PHodgeComplex m = random_phc(rng, test::frame(5), {0, 1, 1, 1});
            PHodgeComplex n = random_phc(rng, test::frame(5), {0, 1, 1, 1});
            GammaComplex gm = gamma(k, m), gn = gamma(k, n), gmn = gamma(k, tensor(m, n));
            if (gm.complex.is_zero() || gn.complex.is_zero()) continue;
            for (Rational alpha : {Rational(0), Rational(1), Rational(1, 2)}) {
                const int a = pick(rng, gm.complex.lo(), gm.complex.hi());
                const int b = pick(rng, gn.complex.lo(), gn.complex.hi());
                Vector u = random_vector(rng, gm.complex.dim(a)), v = random_vector(rng, gn.complex.dim(b));
                Vector lhs = gmn.complex.d(a + b).apply(cup(gm, a, u, gn, b, v, gmn, alpha));
                Vector du = gm.complex.d(a).apply(u), dv = gn.complex.d(b).apply(v);
                Vector rhs = cup(gm, a + 1, du, gn, b, v, gmn, alpha);
                Vector second = cup(gm, a, u, gn, b + 1, dv, gmn, alpha);
                rhs = rhs + (a % 2 == 0 ? Rational(1) : Rational(-1)) * second;
                CAPTURE(alpha);
                CHECK(lhs == rhs);
            }
        }
    }

    TEST_CASE("cup of cocycles is a cocycle, and α only moves it by a coboundary") {
        auto p1 = test::datum("projective_line");
        PHodgeComplex k = unit_object(p1.rgamma.frame());
        PHodgeComplex m = twist(p1.rgamma, 1), n = twist(p1.rgamma, 0);
        GammaComplex gm = gamma(k, m), gn = gamma(k, n), gmn = gamma(k, tensor(m, n));
        Matrix zm = cocycles(gm, 2), zn = cocycles(gn, 0);
        REQUIRE(zm.cols() > 0);
        REQUIRE(zn.cols() > 0);
        Vector c0 = cup(gm, 2, zm.col(0), gn, 0, zn.col(0), gmn, 0);
        Vector c1 = cup(gm, 2, zm.col(0), gn, 0, zn.col(0), gmn, 1);
        CHECK(is_zero(gmn.complex.d(2).apply(c0)));
        CHECK(is_zero(gmn.complex.d(2).apply(c1)));
        Cohomology h = cohomology(gmn.complex, 2);
        CHECK(h.projection.apply(c0) == h.projection.apply(c1));
    }
}
