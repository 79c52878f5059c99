#include "support.hpp"

using namespace synco;

namespace {

std::size_t page_total(const SpectralPage& page) {
    std::size_t sum = 0;
    for (auto& [b, d] : page.dims) sum += d;
    return sum;
}

}  // namespace

TEST_SUITE("spectral") {
    TEST_CASE("double complexes validate anticommutation") {
        DoubleComplex ok({{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}},
                         {{{0, 0}, Matrix::identity(1)}, {{0, 1}, Matrix::identity(1)}},
                         {{{0, 0}, Matrix::identity(1)}, {{1, 0}, -Matrix::identity(1)}});
        CHECK_NOTHROW(ok.validate());
        DoubleComplex bad({{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}},
                          {{{0, 0}, Matrix::identity(1)}, {{0, 1}, Matrix::identity(1)}},
                          {{{0, 0}, Matrix::identity(1)}, {{1, 0}, Matrix::identity(1)}});
        CHECK_THROWS_AS(bad.validate(), ValidationError);
        CHECK(is_acyclic(total_complex(ok)));
        CHECK(ok.bounds() == std::array<int, 4>{0, 1, 0, 1});
    }

    TEST_CASE("the shipped zigzag square has a nonzero d_2") {
        DoubleComplex dc = test::load<DoubleComplex>("zigzag_square.json");
        SpectralSequence ss = spectral_sequence(dc, Direction::Columns);
        CHECK(ss.pages_consistent);
        CHECK(ss.converges);
        REQUIRE(ss.pages.size() >= 3);
        std::map<Bidegree, std::size_t> e1;
        for (auto& [b, d] : ss.pages[1].dims)
            if (d) e1[b] = d;
        std::map<Bidegree, std::size_t> want;
        for (auto& [k, v] : test::frozen()["double"]["zigzag_square"]["e1"].items()) {
            const auto comma = k.find(',');
            want[{std::stoi(k.substr(0, comma)), std::stoi(k.substr(comma + 1))}] = v.get<std::size_t>();
        }
        CHECK(e1 == want);
        bool d2_nonzero = false;
        for (auto& [b, m] : ss.pages[2].d) d2_nonzero = d2_nonzero || !m.is_zero();
        CHECK(d2_nonzero);
        CHECK(ss.degenerates_at == 3);
        CHECK(page_total(ss.infinity) == 0);
        CHECK(is_acyclic(total_complex(dc)));
    }

    TEST_CASE("random double complexes converge in both directions") {
        Rng rng(41);
        for (int trial = 0; trial < 25; ++trial) {
            DoubleComplex dc = random_double_complex(rng, 2 + trial % 2);
            CHECK_NOTHROW(dc.validate());
            Complex tot = total_complex(dc);
            for (Direction dir : {Direction::Columns, Direction::Rows}) {
                SpectralSequence ss = spectral_sequence(dc, dir);
                CHECK(ss.pages_consistent);
                CHECK(ss.converges);
                CHECK(test::nonzero(ss.total_betti) == test::nonzero(betti_table(tot)));
                // Pages only shrink.
                for (std::size_t r = 1; r < ss.pages.size(); ++r)
                    CHECK(page_total(ss.pages[r]) <= page_total(ss.pages[r - 1]));
            }
            CHECK(test::nonzero(betti_table(total_complex(dc.transposed()))) == test::nonzero(betti_table(tot)));
        }
    }

    TEST_CASE("filtered spectral sequence: E1 is the graded cohomology") {
        Rng rng(42);
        for (int trial = 0; trial < 20; ++trial) {
            FilteredComplex fc = random_filtered_complex(rng, {0, 2, 1, 1}, 0, 2, trial % 2 == 1);
            if (fc.carrier().is_zero()) continue;
            SpectralSequence ss = spectral_sequence(fc);
            CHECK(ss.converges);
            REQUIRE(ss.pages.size() >= 2);
            for (int n = fc.carrier().lo(); n <= fc.carrier().hi(); ++n) {
                std::size_t sum = 0;
                for (auto& [b, d] : ss.pages[1].dims)
                    if (b.first + b.second == n) sum += d;
                CHECK(sum == e1_dimension(fc, n));
            }
            if (is_strict_complex(fc)) CHECK(ss.degenerates_at <= 1);
        }
    }

    TEST_CASE("simplicial collapse") {
        Rng rng(43);
        Complex c = random_complex(rng, {0, 2, 2, 1});
        for (int n : {0, 2, 4}) {
            CollapseReport r = simplicial_collapse(c, n);
            CAPTURE(n);
            CHECK(r.columns == n);
            CHECK(r.d1_pattern);
            CHECK(r.cohomology_matches);
            CHECK(r.sequence.converges);
            CHECK(r.sequence.degenerates_at <= 2);
        }
        CHECK_THROWS_AS(simplicial_collapse(c, 3), PreconditionError);
        CHECK_THROWS_AS(simplicial_collapse(c, -2), PreconditionError);
        DoubleComplex dc = collapse_double_complex(c, 2);
        CHECK_NOTHROW(dc.validate());
        CHECK(test::nonzero(betti_table(total_complex(dc))) == test::nonzero(betti_table(c)));
    }
}
