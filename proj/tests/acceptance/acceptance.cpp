// One PASS/FAIL line per acceptance criterion. Limits are pinned below.
//
// usage: acceptance CORPUS_DIR SYNCO_BINARY GOLDEN_COMMANDS
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "synco/io.hpp"
#include "synco/random.hpp"

using namespace synco;

namespace {

constexpr double kExtShapeSeconds = 10.0;
constexpr double kShippedValueSeconds = 1.0;
constexpr std::size_t kExtShapeCases = 100;
constexpr std::size_t kExtShapeMaxDim = 4;
constexpr std::size_t kInvarianceCases = 50;
constexpr std::size_t kSyntomicCases = 50;
constexpr std::size_t kCupPairs = 100;
constexpr std::size_t kSpectralCases = 100;
constexpr std::size_t kStrictCases = 100;
constexpr std::uint64_t kSeed = 20240901;

std::filesystem::path corpus_dir, synco_binary, golden_commands;

struct Outcome {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CoefficientFrame frame5() {
    CoefficientFrame f;
    f.p = 5;
    return f;
}

GeometricDatum datum(const std::string& name) {
    return std::get<GeometricDatum>(load_file(corpus_dir / (name + ".json")));
}

std::map<int, std::size_t> nonzero(const std::map<int, std::size_t>& t) {
    std::map<int, std::size_t> out;
    for (auto& [n, d] : t)
        if (d) out[n] = d;
    return out;
}

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Vector random_vector(Rng& rng, std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = random_rational(rng);
    return v;
}

Outcome ext_shape() {
    Outcome o;
    Rng rng(kSeed + 1);
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t trial = 0; trial < kExtShapeCases; ++trial) {
        PHodgeComplex a = random_phc_degree0(rng, frame5(), kExtShapeMaxDim);
        PHodgeComplex b = random_phc_degree0(rng, frame5(), kExtShapeMaxDim);
        for (auto& [n, d] : nonzero(ext_table(a, b)))
            o.require(n == 0 || n == 1, "Ext^" + std::to_string(n) + " nonzero in case " + std::to_string(trial));
    }
    const double s = seconds_since(t0);
    o.require(s < kExtShapeSeconds, "took " + std::to_string(s) + " s");
    if (o.pass) o.detail = std::to_string(kExtShapeCases) + " cases in " + std::to_string(s) + " s";
    return o;
}

Outcome unit_ext() {
    // Frozen from the brute-force oracle.
    Outcome o;
    PHodgeComplex k = unit_object(frame5()), k1 = tate_object(1, frame5());
    o.require(ext(k, k, 0) == 1, "ext(K,K,0)");
    o.require(ext(k, k, 1) == 1, "ext(K,K,1)");
    o.require(ext(k, k1, 0) == 0, "ext(K,K(1),0)");
    o.require(ext(k, k1, 1) == 1, "ext(K,K(1),1)");
    o.require(nonzero(ext_table(k, k1)) == std::map<int, std::size_t>{{1, 1}}, "ext(K,K(1),*) outside degree 1");
    return o;
}

Outcome invariance() {
    Outcome o;
    Rng rng(kSeed + 3);
    for (std::size_t trial = 0; trial < kInvarianceCases; ++trial) {
        PHodgeComplex m = random_phc(rng, frame5(), {0, 1, 1, 1});
        PHodgeComplex m2 = random_phc(rng, frame5(), {0, 1, 1, 1});
        InvarianceReport r = quasi_iso_invariance(m, random_quasi_iso(rng, m2, {0, 1, 0, 1}));
        o.require(r.morphism_is_quasi_iso && r.all_isomorphisms, "case " + std::to_string(trial));
    }
    // Negative control: the zero endomorphism of K kills Hom(K, K).
    PHodgeComplex k = unit_object(frame5());
    PHMorphism zero{k, k, ChainMap::zero(k.rig.complex(), k.rig.complex()), ChainMap::zero(k.dr.carrier(), k.dr.carrier()),
                    ChainMap::zero(k.k, k.k)};
    zero.validate();
    InvarianceReport bad = quasi_iso_invariance(k, zero);
    o.require(!bad.morphism_is_quasi_iso && !bad.all_isomorphisms, "negative control not detected");
    if (o.pass) o.detail = "negative control: H^0 map has rank " + std::to_string(bad.ranks[0]);
    return o;
}

Outcome syntomic() {
    Outcome o;
    Rng rng(kSeed + 4);
    for (std::size_t trial = 0; trial < kSyntomicCases; ++trial) {
        PHodgeComplex m = random_phc(rng, frame5(), {0, 1, 1, 1});
        for (int n = -1; n <= 2; ++n) {
            const auto lhs = nonzero(betti_table(unit_gamma(m, n).complex));
            const auto rhs = nonzero(betti_table(gamma(unit_object(frame5()), twist(m, n)).complex));
            o.require(lhs == rhs, "case " + std::to_string(trial) + ", twist " + std::to_string(n));
            const bool c_qi = is_quasi_iso(m.c), s_qi = is_quasi_iso(m.s);
            if (c_qi)
                o.require(long_exact_sequence(m, n, -1, 2, LesKind::Specialization).sequence.all_exact(),
                          "sp sequence not exact");
            if (s_qi)
                o.require(long_exact_sequence(m, n, -1, 2, LesKind::Cospecialization).sequence.all_exact(),
                          "cosp sequence not exact");
            o.require(long_exact_sequence(m, n, -1, 2, LesKind::Eta).sequence.all_exact(), "eta sequence not exact");
        }
    }
    return o;
}

Outcome shipped_values() {
    Outcome o;
    struct Expect {
        std::string name;
        int twist, degree;
        std::size_t dim;
    };
    const std::vector<Expect> expect{{"point", 0, 0, 1},           {"point", 0, 1, 1},
                                     {"point", 1, 1, 1},           {"point", 2, 1, 1},
                                     {"projective_line", 1, 2, 1}, {"multiplicative_group", 1, 1, 2}};
    double worst = 0;
    for (auto& e : expect) {
        const auto t0 = std::chrono::steady_clock::now();
        const std::size_t got = abs_cohomology(datum(e.name), e.twist, e.degree).dim;
        const double s = seconds_since(t0);
        worst = std::max(worst, s);
        const std::string where = e.name + " H^" + std::to_string(e.degree) + "(" + std::to_string(e.twist) + ")";
        o.require(got == e.dim, where + " = " + std::to_string(got));
        o.require(s < kShippedValueSeconds, where + " took " + std::to_string(s) + " s");
    }
    if (o.pass) o.detail = "slowest " + std::to_string(worst) + " s";
    return o;
}

Outcome duality() {
    Outcome o;
    for (const char* name : {"point", "projective_line", "elliptic_curve"}) {
        GeometricDatum x = datum(name);
        for (int i = 0; i <= x.d; ++i)
            for (int n = 0; n <= 2 * x.d; ++n) {
                DualityReport r = duality_check(x, i, n);
                o.require(r.preconditions_ok && r.lhs == r.rhs && r.isomorphism,
                          std::string(name) + " n=" + std::to_string(n) + " i=" + std::to_string(i));
            }
    }
    o.require(charpoly(frobenius_on_cohomology(datum("elliptic_curve").rgamma.rig, 1)) ==
                  std::vector<Rational>{5, -1, 1},
              "elliptic Frobenius is not T^2 - T + 5");
    GeometricDatum bad = datum("degenerate_line");
    o.require(duality_precondition_failure(bad).has_value(), "degenerate pairing accepted");
    o.require(!duality_check(bad, 0, 0).preconditions_ok, "degenerate pairing passed the precondition stage");
    return o;
}

Outcome gysin_maps() {
    Outcome o;
    ProperMap to_point = std::get<ProperMap>(load_file(corpus_dir / "line_to_point.json"));
    Matrix g = gysin(to_point, 2, 1);
    o.require(g.rows() == 1 && g.cols() == 1 && rank(g) == 1, "H^2(P1,1) -> H^0(pt,0) is not an isomorphism");
    ProperMap id = std::get<ProperMap>(load_file(corpus_dir / "line_identity.json"));
    for (int n = 0; n <= 2; ++n)
        for (int i = 0; i <= 1; ++i) {
            Matrix m = gysin(id, n, i);
            o.require(m == Matrix::identity(m.rows()), "identity at n=" + std::to_string(n));
        }
    return o;
}

Outcome cup_products() {
    Outcome o;
    Rng rng(kSeed + 8);
    PHodgeComplex k = unit_object(frame5());
    std::size_t pairs = 0;
    while (pairs < kCupPairs) {
        PHodgeComplex m = random_phc(rng, frame5(), {0, 1, 1, 1});
        PHodgeComplex n = random_phc(rng, frame5(), {0, 1, 1, 1});
        GammaComplex gm = gamma(k, m), gn = gamma(k, n);
        if (gm.complex.is_zero() || gn.complex.is_zero()) continue;
        GammaComplex gmn = gamma(k, tensor(m, n));
        for (int rep = 0; rep < 5 && pairs < kCupPairs; ++rep, ++pairs) {
            const int a = pick(rng, gm.complex.lo(), gm.complex.hi());
            const int b = pick(rng, gn.complex.lo(), gn.complex.hi());
            Vector u = random_vector(rng, gm.complex.dim(a)), v = random_vector(rng, gn.complex.dim(b));
            for (Rational alpha : {Rational(0), Rational(1), Rational(1, 2)}) {
                Vector lhs = gmn.complex.d(a + b).apply(cup(gm, a, u, gn, b, v, gmn, alpha));
                Vector rhs = cup(gm, a + 1, gm.complex.d(a).apply(u), gn, b, v, gmn, alpha) +
                             (a % 2 == 0 ? Rational(1) : Rational(-1)) *
                                 cup(gm, a, u, gn, b + 1, gn.complex.d(b).apply(v), gmn, alpha);
                o.require(lhs == rhs, "Leibniz rule fails for alpha = " + to_string(alpha));
            }
        }
    }
    std::size_t products = 0;
    for (const char* name : {"point", "projective_line", "multiplicative_group", "elliptic_curve"}) {
        GeometricDatum x = datum(name);
        for (int n = 0; n <= 2 * x.d; ++n)
            for (int m = 0; n + m <= 2 * x.d + 1; ++m) {
                const std::size_t da = abs_cohomology(x, 0, n).dim, db = abs_compact(x, 1, m).dim;
                for (std::size_t s = 0; s < da; ++s)
                    for (std::size_t t = 0; t < db; ++t) {
                        Vector a(da), b(db);
                        a[s] = 1;
                        b[t] = 1;
                        Vector c0 = cup_absolute(x, n, 0, a, m, 1, b, 0);
                        o.require(c0 == cup_absolute(x, n, 0, a, m, 1, b, 1) &&
                                      c0 == cup_absolute(x, n, 0, a, m, 1, b, Rational(1, 2)),
                                  std::string(name) + ": products depend on alpha");
                        ++products;
                    }
            }
    }
    if (o.pass) o.detail = std::to_string(products) + " shipped products agree";
    return o;
}

Outcome spectral() {
    Outcome o;
    Rng rng(kSeed + 9);
    for (std::size_t trial = 0; trial < kSpectralCases; ++trial) {
        DoubleComplex dc = random_double_complex(rng, 2 + static_cast<int>(trial % 2));
        for (Direction dir : {Direction::Columns, Direction::Rows}) {
            SpectralSequence ss = spectral_sequence(dc, dir);
            o.require(ss.converges && ss.pages_consistent, "case " + std::to_string(trial));
        }
    }
    Complex c = random_complex(rng, {0, 2, 2, 1});
    for (int n : {0, 2, 4}) {
        CollapseReport r = simplicial_collapse(c, n);
        o.require(r.d1_pattern && r.cohomology_matches, "collapse with N = " + std::to_string(n));
    }
    return o;
}

Outcome strictness() {
    Outcome o;
    Rng rng(kSeed + 10);
    std::size_t strict = 0;
    for (std::size_t trial = 0; trial < kStrictCases; ++trial) {
        FilteredComplex fc = random_filtered_complex(rng, {0, 2, 1, 1}, 0, 2, trial % 2 == 1);
        const bool s = is_strict_complex(fc);
        strict += s;
        o.require(s == is_strict_complex_by_e1(fc), "case " + std::to_string(trial));
    }
    for (auto [file, want] : {std::pair{"strict_interval.json", true}, std::pair{"strict_three_term.json", true},
                              std::pair{"jumping_interval.json", false}}) {
        FilteredComplex fc = std::get<FilteredComplex>(load_file(corpus_dir / file));
        o.require(is_strict_complex(fc) == want && is_strict_complex_by_e1(fc) == want, file);
    }
    if (o.pass) o.detail = std::to_string(strict) + " of " + std::to_string(kStrictCases) + " random cases strict";
    return o;
}

Outcome godement() {
    Outcome o;
    auto sheaf = [](const FiniteSite& site, const std::string& file) {
        return sheaf_from_json(std::get<Json>(load_file(corpus_dir / file)), site);
    };
    const Json manifest = read_json(corpus_dir / "manifest.json");
    for (auto& entry : manifest["files"]) {
        if (entry["type"] != "site") continue;
        const std::string file = entry["file"];
        FiniteSite site = std::get<FiniteSite>(load_file(corpus_dir / file));
        if (!site.has_enough_points()) continue;
        for (std::size_t x = 0; x < site.size(); ++x)
            o.require(bar_resolution(site, Sheaf::skyscraper(site, x)).quasi_iso, file + ": b_F fails");
        o.require(bar_resolution(site, Sheaf::constant(site)).quasi_iso, file + ": b_F fails");
    }
    FiniteSite sparse = std::get<FiniteSite>(load_file(corpus_dir / "site_sierpinski_sparse.json"));
    ResolutionReport r = bar_resolution(sparse, sheaf(sparse, "sheaf_skyscraper_a.json"));
    o.require(!r.quasi_iso, "b_F is a quasi-iso on the sparse control");
    o.require(r.quasi_iso_at_points, "u*(b_F) fails on the sparse control");

    auto trim = [](std::vector<std::size_t> v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    };
    for (auto [file, want] : {std::pair{"site_sierpinski.json", std::vector<std::size_t>{1}},
                              std::pair{"site_circle.json", std::vector<std::size_t>{1, 1}},
                              std::pair{"site_sphere.json", std::vector<std::size_t>{1, 0, 1}}}) {
        FiniteSite site = std::get<FiniteSite>(load_file(corpus_dir / file));
        Sheaf f = Sheaf::constant(site);
        for (Route route : {Route::Cech, Route::Godement, Route::GodementSquared})
            o.require(trim(sheaf_cohomology(site, f, route)) == want, std::string(file) + ": routes disagree");
    }
    return o;
}

std::string run(const std::string& args) {
    const std::string cmd = "cd '" + corpus_dir.string() + "' && '" + synco_binary.string() + "' " + args + " 2>&1";
    std::string out;
    if (FILE* pipe = popen(cmd.c_str(), "r")) {
        char buf[4096];
        std::size_t got;
        while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
        out += "exit " + std::to_string(pclose(pipe)) + "\n";
    }
    return out;
}

Outcome determinism() {
    Outcome o;
    std::ifstream in(golden_commands);
    o.require(static_cast<bool>(in), "cannot read " + golden_commands.string());
    std::vector<std::string> commands;
    for (std::string line; std::getline(in, line);)
        if (!line.empty() && line[0] != '#') commands.push_back(line.substr(line.find(':') + 1));
    auto suite = [&] {
        std::string all;
        for (auto& c : commands) all += run(c);
        return all;
    };
    const std::string first = suite(), second = suite();
    o.require(!commands.empty(), "no commands");
    o.require(first == second, "outputs differ between runs");
    if (o.pass) o.detail = std::to_string(commands.size()) + " commands, " + std::to_string(first.size()) + " bytes";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 4) {
        std::cerr << "usage: acceptance CORPUS_DIR SYNCO_BINARY GOLDEN_COMMANDS\n";
        return 2;
    }
    corpus_dir = std::filesystem::absolute(argv[1]);
    synco_binary = std::filesystem::absolute(argv[2]);
    golden_commands = std::filesystem::absolute(argv[3]);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"ext vanishes outside degrees 0 and 1", ext_shape},
        {"unit Ext values", unit_ext},
        {"quasi-isomorphism invariance", invariance},
        {"syntomic cones and their long exact sequences", syntomic},
        {"shipped absolute cohomology values", shipped_values},
        {"duality", duality},
        {"Gysin maps", gysin_maps},
        {"cup products", cup_products},
        {"spectral sequences", spectral},
        {"strictness versus E1 degeneration", strictness},
        {"Godement resolutions", godement},
        {"CLI determinism", determinism},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("threw: ") + e.what();
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << std::setw(2) << k + 1 << "  " << criteria[k].first;
        if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
        std::cout << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
