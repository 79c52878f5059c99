// Values frozen from the brute-force Python oracle in tests/oracle.
#include "support.hpp"

using namespace synco;

TEST_SUITE("oracle") {
    TEST_CASE("Ext between Tate files") {
        PHodgeComplex a = test::load<PHodgeComplex>("tate_0.json"), b = test::load<PHodgeComplex>("tate_1.json");
        CHECK(test::nonzero(ext_table(a, b)) == test::as_table(test::frozen()["ext_tate_files"]));
    }

    TEST_CASE("absolute homology") {
        for (auto& [name, want] : test::frozen()["data"].items()) {
            GeometricDatum x = test::datum(name);
            CHECK(x.d == want["d"].get<int>());
            for (auto& [i, row] : want["homology"].items()) {
                std::map<int, std::size_t> got;
                for (int n = -2 * x.d - 2; n <= 2 * x.d + 2; ++n)
                    if (auto h = abs_homology(x, std::stoi(i), n)) got[n] = h;
                CAPTURE(name);
                CAPTURE(i);
                CHECK(got == test::as_table(row));
            }
        }
    }

    TEST_CASE("filtered exemplars") {
        for (auto& [name, want] : test::frozen()["filtered"].items()) {
            FilteredComplex fc = test::load<FilteredComplex>(name + ".json");
            std::size_t e1 = 0;
            for (int n = fc.carrier().lo(); n <= fc.carrier().hi(); ++n) e1 += e1_dimension(fc, n);
            CAPTURE(name);
            CHECK(is_strict_complex(fc) == want["strict"].get<bool>());
            CHECK(is_strict_complex_by_e1(fc) == want["strict"].get<bool>());
            CHECK(e1 == want["e1_total"].get<std::size_t>());
            CHECK(test::total_betti(fc.carrier()) == want["cohomology_total"].get<std::size_t>());
        }
    }
}
