#include "support.hpp"

using namespace synco;

namespace {

bool same_tate(const PHodgeComplex& a, const PHodgeComplex& b) {
    return a.rig.phi().at(0) == b.rig.phi().at(0) && a.dr.filtration(0) == b.dr.filtration(0) &&
           a.k == b.k && a.rig.complex() == b.rig.complex();
}

}  // namespace

TEST_SUITE("phc") {
    TEST_CASE("Tate objects") {
        PHodgeComplex k0 = tate_object(0, test::frame(5));
        CHECK(k0.rig.phi().at(0) == Matrix::identity(1));
        CHECK(k0.dr.F(0, 0).dim() == 1);
        CHECK(k0.dr.F(0, 1).dim() == 0);

        PHodgeComplex km1 = tate_object(-1, test::frame(5));
        CHECK(km1.rig.phi().at(0) == Matrix::scalar(1, 5));
        CHECK(km1.dr.F(0, 1).dim() == 1);
        CHECK(km1.dr.F(0, 2).dim() == 0);

        for (int a = -2; a <= 2; ++a)
            for (int b = -2; b <= 2; ++b)
                CHECK(same_tate(tensor(tate_object(a, test::frame(5)), tate_object(b, test::frame(5))),
                                tate_object(a + b, test::frame(5))));
    }

    TEST_CASE("tensor products and twists") {
        Rng rng(4);
        PHodgeComplex m = random_phc(rng, test::frame(5), {0, 1, 2, 1});
        PHodgeComplex t = tensor(m, unit_object(test::frame(5)));
        CHECK(t.rig.complex() == m.rig.complex());
        CHECK(t.k == m.k);

        auto p1 = test::datum("projective_line");
        Cohomology h2 = cohomology(p1.rgamma.dr.carrier(), 2);
        CHECK(induced_on_cohomology(p1.rgamma.dr, 2, h2).levels() == std::vector<int>{1});
        PHodgeComplex tw = twist(p1.rgamma, 1);
        CHECK(induced_on_cohomology(tw.dr, 2, cohomology(tw.dr.carrier(), 2)).levels() == std::vector<int>{0});
        CHECK(frobenius_on_cohomology(tw.rig, 2) == Matrix::identity(1));

        auto e = test::datum("elliptic_curve");
        PHodgeComplex ep = tensor(e.rgamma, p1.rgamma);
        CHECK(betti(ep.rig.complex(), 2) == 2);
        CHECK(betti(ep.k, 2) == 2);
        CHECK(betti(ep.dr.carrier(), 2) == 2);
    }

    TEST_CASE("quasi-isomorphisms and acyclicity") {
        Rng rng(8);
        PHodgeComplex m = random_phc(rng, test::frame(5), {0, 1, 2, 1});
        CHECK(is_quasi_iso(identity(m)));
        for (int trial = 0; trial < 10; ++trial) {
            PHMorphism g = random_quasi_iso(rng, m, {0, 1, 1, 1});
            CHECK(is_quasi_iso(g));
            CHECK(is_acyclic(cone(g)));
            CHECK_FALSE(is_quasi_iso(random_non_quasi_iso(rng, m)));
        }

        // Identity on carriers, but the de Rham jump moves from level 0 to level 1.
        PHodgeComplex lo = unit_object(test::frame(5));
        PHodgeComplex hi = lo;
        hi.dr = FilteredComplex::trivial(hi.dr.carrier(), 1);
        PHMorphism shift_jump{lo, hi, ChainMap::identity(lo.rig.complex()), ChainMap::identity(lo.dr.carrier()),
                              ChainMap::identity(lo.k)};
        CHECK_NOTHROW(shift_jump.validate());
        CHECK_FALSE(is_quasi_iso(shift_jump));
    }

    TEST_CASE("morphisms must commute with the structure maps") {
        PHodgeComplex a = unit_object(test::frame(5)), b = tate_object(1, test::frame(5));
        Complex k = a.k;
        PHMorphism f{a, b, ChainMap::identity(k), ChainMap::zero(k, k), ChainMap::identity(k)};
        CHECK_THROWS_AS(f.validate(), ValidationError);
    }

    TEST_CASE("quasi push-outs") {
        Rng rng(12);
        Complex m1 = random_complex(rng, {0, 1, 2, 1});
        QuasiPushout q = quasi_pushout(ChainMap::identity(m1), ChainMap::identity(m1));
        CHECK(is_quasi_iso(q.from_first));

        // Pushing a quasi-isomorphism along any map gives a quasi-isomorphism.
        for (int trial = 0; trial < 10; ++trial) {
            PHodgeComplex m = random_phc(rng, test::frame(5), {0, 1, 2, 1});
            PHMorphism f = random_quasi_iso(rng, m, {0, 1, 1, 1});
            Complex m3 = random_complex(rng, {0, 1, 2, 1});
            QuasiPushout p = quasi_pushout(f.k, ChainMap::zero(m.k, m3));
            CHECK(is_quasi_iso(p.from_third));
        }

        Complex acyc(0, {1, 1}, {{0, Matrix::identity(1)}});
        Complex a = random_complex(rng, {0, 1, 1, 0}), b = random_complex(rng, {0, 1, 1, 0});
        QuasiPushout z = quasi_pushout(ChainMap::zero(acyc, a), ChainMap::zero(acyc, b));
        for (int n = -1; n <= 2; ++n) CHECK(betti(z.q, n) == betti(a, n) + betti(b, n));
    }

    TEST_CASE("collapsing zigzags") {
        Rng rng(14);
        PHodgeComplex m = random_phc(rng, test::frame(5), {0, 1, 2, 1});
        Zigzag three{m.rig, m.dr, {m.k}, {m.c, m.s}, {}};
        PHodgeComplex same = collapse_zigzag(three);
        CHECK(same.k == m.k);
        CHECK(same.c.at(0) == m.c.at(0));
        CHECK(same.s.at(1) == m.s.at(1));

        // Insert an identity in the middle: M_rig → K ← K → K ← M_dR.
        Zigzag five{m.rig, m.dr, {m.k, m.k, m.k}, {m.c, ChainMap::identity(m.k), ChainMap::identity(m.k), m.s}, {}};
        PHodgeComplex longer = collapse_zigzag(five);
        for (int n = -1; n <= 2; ++n) CHECK(betti(longer.k, n) == betti(m.k, n));
        CHECK(is_quasi_iso(longer.c) == is_quasi_iso(m.c));

        // Seven nodes: M_rig → K ← K → E ← K → K ← M_dR with E = K ⊕ acyclic.
        PHMorphism into = random_quasi_iso(rng, m, {0, 1, 1, 1});
        ChainMap id = ChainMap::identity(m.k);
        Zigzag seven{m.rig, m.dr, {m.k, m.k, into.target.k, m.k, m.k}, {m.c, id, into.k, into.k, id, m.s}, {}};
        CHECK_NOTHROW(seven.validate());
        PHodgeComplex out = collapse_zigzag(seven);
        for (int n = -1; n <= 2; ++n) CHECK(betti(out.k, n) == betti(m.k, n));
        CHECK(is_quasi_iso(out.c));
        CHECK(is_quasi_iso(out.s));
    }

    TEST_CASE("truncations") {
        auto p1 = test::datum("projective_line");
        PHodgeComplex top = truncate(p1.rgamma, 2, Side::AtMost);
        CHECK(top.rig.complex() == p1.rgamma.rig.complex());
        PHodgeComplex h2 = truncate(truncate(p1.rgamma, 2, Side::AtMost), 2, Side::AtLeast);
        CHECK(test::total_betti(h2.rig.complex()) == 1);
        CHECK(betti(h2.rig.complex(), 2) == 1);

        Rng rng(19);
        PHodgeComplex m = random_phc(rng, test::frame(5), {0, 2, 2, 1});
        for (int n = 0; n <= 2; ++n) {
            PHodgeComplex a = truncate(twist(m, 1), n, Side::AtLeast), b = twist(truncate(m, n, Side::AtLeast), 1);
            for (int k = 0; k <= 2; ++k) CHECK(a.rig.complex().dim(k) == b.rig.complex().dim(k));
        }
    }
}
