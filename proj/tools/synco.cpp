// Command-line front end. Every command builds a JSON report; text output is
// rendered from the same report so both formats stay in step.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "synco/io.hpp"

using namespace synco;

namespace {

struct Options {
    std::string format = "text";
};

template <class T>
T load_as(const std::string& path, const char* what) {
    Loaded obj = load_file(path);
    if (auto* v = std::get_if<T>(&obj)) return *v;
    throw ParseError(path + " does not hold " + what);
}

std::string dims_line(const std::map<int, std::size_t>& dims, const std::string& label) {
    std::ostringstream out;
    bool first = true;
    for (auto& [n, d] : dims) {
        out << (first ? "" : " ") << label << n << "=" << d;
        first = false;
    }
    return out.str();
}

Json dims_json(const std::map<int, std::size_t>& dims) {
    Json j = Json::object();
    for (auto& [n, d] : dims) j[std::to_string(n)] = d;
    return j;
}

// Degrees in which unit_gamma(m, i) can be nonzero.
std::pair<int, int> gamma_range(const PHodgeComplex& m) {
    const Complex& c = m.rig.complex();
    int lo = std::min({c.lo(), m.k.lo(), m.dr.carrier().lo()}), hi = std::max({c.hi(), m.k.hi(), m.dr.carrier().hi()});
    return {lo, hi + 1};
}

Json les_json(const LesReport& r) {
    Json terms = Json::array();
    for (std::size_t k = 0; k < r.sequence.terms.size(); ++k) {
        Json t{{"term", r.sequence.terms[k].label}, {"dim", r.sequence.terms[k].dim}};
        if (k > 0 && k <= r.sequence.exact.size()) t["exact"] = static_cast<bool>(r.sequence.exact[k - 1]);
        terms.push_back(t);
    }
    return {{"terms", terms}, {"all_exact", r.sequence.all_exact()}, {"formula_agrees", r.formula_agrees},
            {"normalizations_agree", r.normalizations_agree}};
}

void les_text(std::ostream& out, const Json& les) {
    for (auto& t : les["terms"]) {
        out << "  " << t["term"].get<std::string>() << " : " << t["dim"].get<std::size_t>();
        if (t.contains("exact")) out << (t["exact"].get<bool>() ? "  exact" : "  NOT EXACT");
        out << "\n";
    }
    out << "  all joints exact: " << (les["all_exact"].get<bool>() ? "yes" : "no") << "\n";
}

LesKind les_kind(const std::string& s) {
    if (s == "eta") return LesKind::Eta;
    if (s == "sp") return LesKind::Specialization;
    if (s == "cosp") return LesKind::Cospecialization;
    throw ParseError("unknown sequence kind '" + s + "' (expected eta, sp or cosp)");
}

// ---- commands -------------------------------------------------------------

Json cmd_validate(const std::vector<std::string>& files, const std::string& site_path, int& status) {
    Json out = Json::array();
    std::optional<FiniteSite> site;
    if (!site_path.empty()) site = load_as<FiniteSite>(site_path, "a site");
    for (auto& f : files) {
        Json row{{"file", f}};
        try {
            Loaded obj = load_file(f);
            if (auto* j = std::get_if<Json>(&obj); j && j->value("type", "") == "sheaf") {
                if (!site) throw PreconditionError("a sheaf needs --site to be validated");
                sheaf_from_json(*j, *site).validate(*site);
            }
            row["status"] = "ok";
        } catch (const PreconditionError& e) {
            row["status"] = "precondition";
            row["error"] = e.what();
            status = std::max(status, 3);
        } catch (const std::exception& e) {
            row["status"] = "invalid";
            row["error"] = e.what();
            status = std::max(status, 2);
        }
        out.push_back(row);
    }
    return out;
}

Json cmd_ext(const std::string& a, const std::string& b, std::optional<int> degree) {
    const PHodgeComplex m = load_as<PHodgeComplex>(a, "a p-adic Hodge complex");
    const PHodgeComplex n = load_as<PHodgeComplex>(b, "a p-adic Hodge complex");
    std::map<int, std::size_t> table = ext_table(m, n);
    if (degree) table = {{*degree, ext(m, n, *degree)}};
    return {{"source", a}, {"target", b}, {"ext", dims_json(table)}};
}

Json cmd_abs(const std::string& file, int twist) {
    const GeometricDatum x = load_as<GeometricDatum>(file, "a geometric datum");
    auto [lo, hi] = gamma_range(x.rgamma);
    auto [lo_c, hi_c] = gamma_range(x.rgamma_c);
    std::map<int, std::size_t> h, hc;
    for (int n = lo; n <= hi; ++n) h[n] = abs_cohomology(x, twist, n).dim;
    for (int n = lo_c; n <= hi_c; ++n) hc[n] = abs_compact(x, twist, n).dim;
    return {{"datum", x.name},
            {"twist", twist},
            {"cohomology", dims_json(h)},
            {"compact", dims_json(hc)},
            {"sequence", les_json(long_exact_sequence(x, twist, lo, hi - 1, LesKind::Eta, false))},
            {"compact_sequence", les_json(long_exact_sequence(x, twist, lo_c, hi_c - 1, LesKind::Eta, true))}};
}

Json cmd_les(const std::string& file, int twist, const std::string& kind, bool compact) {
    const GeometricDatum x = load_as<GeometricDatum>(file, "a geometric datum");
    auto [lo, hi] = gamma_range(compact ? x.rgamma_c : x.rgamma);
    return {{"datum", x.name}, {"twist", twist}, {"kind", kind}, {"compact", compact},
            {"sequence", les_json(long_exact_sequence(x, twist, lo, hi - 1, les_kind(kind), compact))}};
}

Json cmd_duality(const std::string& file, int twist, std::optional<int> degree) {
    const GeometricDatum x = load_as<GeometricDatum>(file, "a geometric datum");
    if (auto why = duality_precondition_failure(x))
        throw PreconditionError("duality on '" + x.name + "': " + *why);
    Json rows = Json::array();
    bool all = true;
    for (int n = degree.value_or(0); n <= degree.value_or(2 * x.d); ++n) {
        DualityReport r = duality_check(x, twist, n);
        all = all && r.isomorphism;
        rows.push_back({{"degree", n}, {"cohomology", r.lhs}, {"homology", r.rhs}, {"witness_rank", r.witness_rank},
                        {"isomorphism", r.isomorphism}});
    }
    return {{"datum", x.name}, {"twist", twist}, {"dimension", x.d}, {"rows", rows}, {"all_isomorphisms", all}};
}

Json cmd_gysin(const std::string& file, int twist, int degree) {
    const ProperMap f = load_as<ProperMap>(file, "a proper map");
    const int c = f.target.d - f.source.d;
    Matrix g = gysin(f, degree, twist);
    Json rows = Json::array();
    for (std::size_t i = 0; i < g.rows(); ++i) rows.push_back(to_json(g.row(i)));
    return {{"source", f.source.name}, {"target", f.target.name},  {"degree", degree},
            {"twist", twist},          {"target_degree", degree + 2 * c}, {"target_twist", twist + c},
            {"matrix", rows},          {"rank", rank(g)}};
}

Json page_json(const SpectralPage& page) {
    Json dims = Json::array(), diffs = Json::array();
    for (auto& [b, n] : page.dims) dims.push_back({b.first, b.second, n});
    for (auto& [b, m] : page.d) diffs.push_back({{"from", {b.first, b.second}}, {"rank", rank(m)}});
    return {{"r", page.r}, {"dims", dims}, {"differentials", diffs}};
}

Json cmd_ss(const std::string& file, const std::string& direction) {
    Loaded obj = load_file(file);
    SpectralSequence ss;
    if (auto* dc = std::get_if<DoubleComplex>(&obj)) {
        if (direction != "row" && direction != "col")
            throw ParseError("unknown direction '" + direction + "' (expected row or col)");
        ss = spectral_sequence(*dc, direction == "row" ? Direction::Rows : Direction::Columns);
    } else if (auto* fc = std::get_if<FilteredComplex>(&obj)) {
        ss = spectral_sequence(*fc);
    } else {
        throw ParseError(file + " holds neither a double complex nor a filtered complex");
    }
    Json pages = Json::array();
    for (auto& p : ss.pages) pages.push_back(page_json(p));
    Json out{{"file", file}, {"direction", direction}, {"pages", pages}, {"infinity", page_json(ss.infinity)},
             {"total", dims_json(ss.total_betti)},  {"converges", ss.converges},
             {"pages_consistent", ss.pages_consistent}, {"degenerates_at", ss.degenerates_at}};
    if (auto* fc = std::get_if<FilteredComplex>(&obj)) {
        out["strict"] = is_strict_complex(*fc);
        out["strict_by_e1"] = is_strict_complex_by_e1(*fc);
    }
    return out;
}

Json cmd_godement(const std::string& site_path, const std::string& sheaf_path) {
    const FiniteSite site = load_as<FiniteSite>(site_path, "a site");
    const Sheaf f = sheaf_from_json(read_json(sheaf_path), site);
    f.validate(site);
    auto as_json = [](const std::vector<std::size_t>& v) {
        Json j = Json::object();
        for (std::size_t i = 0; i < v.size(); ++i) j[std::to_string(i)] = v[i];
        return j;
    };
    Json routes = Json::object();
    routes["cech"] = as_json(sheaf_cohomology(site, f, Route::Cech));
    for (auto [name, route] : {std::pair{"godement", Route::Godement}, {"godement_squared", Route::GodementSquared}}) {
        try {
            routes[name] = as_json(sheaf_cohomology(site, f, route));
        } catch (const PreconditionError& e) {
            routes[name] = e.what();
        }
    }
    ResolutionReport r = bar_resolution(site, f);
    return {{"site", site_path},
            {"sheaf", sheaf_path},
            {"enough_points", site.has_enough_points()},
            {"routes", routes},
            {"resolution", {{"truncation", r.truncation}, {"quasi_iso", r.quasi_iso}, {"quasi_iso_at_points", r.quasi_iso_at_points}}}};
}

Json cmd_cup(const std::string& file, int n, int i, int m, int j, const std::string& alpha) {
    const GeometricDatum x = load_as<GeometricDatum>(file, "a geometric datum");
    const Rational a = parse_rational(alpha);
    const std::size_t da = abs_cohomology(x, i, n).dim, db = abs_compact(x, j, m).dim;
    Json table = Json::array();
    for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < db; ++l) {
            Vector u(da), v(db);
            u[k] = 1;
            v[l] = 1;
            table.push_back({{"left", k}, {"right", l}, {"product", to_json(cup_absolute(x, n, i, u, m, j, v, a))}});
        }
    return {{"datum", x.name}, {"left", {{"degree", n}, {"twist", i}, {"dim", da}}},
            {"right", {{"degree", m}, {"twist", j}, {"dim", db}}}, {"alpha", to_json(a)}, {"products", table}};
}

// ---- text rendering -------------------------------------------------------

void render_text(std::ostream& out, const std::string& cmd, const Json& r) {
    auto dims = [](const Json& j, const std::string& label) {
        std::map<int, std::size_t> m;
        for (auto& [k, v] : j.items()) m[std::stoi(k)] = v.get<std::size_t>();
        return dims_line(m, label);
    };
    if (cmd == "validate") {
        for (auto& row : r) {
            out << row["file"].get<std::string>() << ": " << row["status"].get<std::string>();
            if (row.contains("error")) out << " (" << row["error"].get<std::string>() << ")";
            out << "\n";
        }
    } else if (cmd == "ext") {
        out << "Ext(" << r["source"].get<std::string>() << ", " << r["target"].get<std::string>() << ")\n";
        for (auto& [k, v] : r["ext"].items()) out << "  degree " << k << " : " << v.get<std::size_t>() << "\n";
    } else if (cmd == "abs") {
        out << r["datum"].get<std::string>() << ", twist " << r["twist"].get<int>() << "\n";
        out << "absolute cohomology: " << dims(r["cohomology"], "H") << "\n";
        out << "compact support:     " << dims(r["compact"], "Hc") << "\n";
        out << "long exact sequence:\n";
        les_text(out, r["sequence"]);
        out << "long exact sequence (compact support):\n";
        les_text(out, r["compact_sequence"]);
    } else if (cmd == "les") {
        out << r["datum"].get<std::string>() << ", twist " << r["twist"].get<int>() << ", " << r["kind"].get<std::string>()
            << (r["compact"].get<bool>() ? ", compact support" : "") << "\n";
        les_text(out, r["sequence"]);
        out << "  closed formula agrees: " << (r["sequence"]["formula_agrees"].get<bool>() ? "yes" : "no") << "\n";
    } else if (cmd == "duality") {
        out << r["datum"].get<std::string>() << ", twist " << r["twist"].get<int>() << ", dimension "
            << r["dimension"].get<int>() << "\n";
        out << "  n  H^n_abs  H^abs_{2d-n}  rank  iso\n";
        for (auto& row : r["rows"])
            out << "  " << row["degree"].get<int>() << "  " << row["cohomology"].get<std::size_t>() << "  "
                << row["homology"].get<std::size_t>() << "  " << row["witness_rank"].get<std::size_t>() << "  "
                << (row["isomorphism"].get<bool>() ? "yes" : "no") << "\n";
    } else if (cmd == "gysin") {
        out << "gysin " << r["source"].get<std::string>() << " -> " << r["target"].get<std::string>() << ": H^"
            << r["degree"].get<int>() << "(" << r["twist"].get<int>() << ") -> H^" << r["target_degree"].get<int>()
            << "(" << r["target_twist"].get<int>() << ")\n";
        out << "  matrix: [";
        bool first = true;
        for (auto& row : r["matrix"]) {
            out << (first ? "" : "; ");
            first = false;
            bool f2 = true;
            for (auto& e : row) {
                out << (f2 ? "" : " ") << (e.is_string() ? e.get<std::string>() : std::to_string(e.get<long>()));
                f2 = false;
            }
        }
        out << "]  rank " << r["rank"].get<std::size_t>() << "\n";
    } else if (cmd == "ss") {
        for (auto& page : r["pages"]) {
            out << "E_" << page["r"].get<int>() << ":";
            for (auto& d : page["dims"]) out << " (" << d[0].get<int>() << "," << d[1].get<int>() << ")=" << d[2].get<std::size_t>();
            out << "\n";
            for (auto& d : page["differentials"])
                out << "  d from (" << d["from"][0].get<int>() << "," << d["from"][1].get<int>() << ") rank "
                    << d["rank"].get<std::size_t>() << "\n";
        }
        out << "E_inf:";
        for (auto& d : r["infinity"]["dims"]) out << " (" << d[0].get<int>() << "," << d[1].get<int>() << ")=" << d[2].get<std::size_t>();
        out << "\ntotal: " << dims(r["total"], "H") << "\n";
        out << "converges: " << (r["converges"].get<bool>() ? "yes" : "no") << ", degenerates at E_"
            << r["degenerates_at"].get<int>() << "\n";
        if (r.contains("strict"))
            out << "strict: " << (r["strict"].get<bool>() ? "yes" : "no") << " (E_1 count says "
                << (r["strict_by_e1"].get<bool>() ? "yes" : "no") << ")\n";
    } else if (cmd == "godement") {
        for (auto& [name, v] : r["routes"].items()) {
            out << name << ": ";
            if (v.is_string()) {
                out << "unavailable (" << v.get<std::string>() << ")\n";
                continue;
            }
            bool first = true;
            for (auto& [k, d] : v.items()) {
                out << (first ? "" : " ") << "H" << k << "=" << d.get<std::size_t>();
                first = false;
            }
            out << "\n";
        }
        const Json& res = r["resolution"];
        out << "b_F quasi-iso: " << (res["quasi_iso"].get<bool>() ? "yes" : "no")
            << ", at points: " << (res["quasi_iso_at_points"].get<bool>() ? "yes" : "no") << "\n";
    } else if (cmd == "cup") {
        out << r["datum"].get<std::string>() << ": H^" << r["left"]["degree"].get<int>() << "(" << r["left"]["twist"].get<int>()
            << ") x Hc^" << r["right"]["degree"].get<int>() << "(" << r["right"]["twist"].get<int>() << ")\n";
        for (auto& p : r["products"]) {
            out << "  e" << p["left"].get<std::size_t>() << " * f" << p["right"].get<std::size_t>() << " = [";
            bool first = true;
            for (auto& e : p["product"]) {
                out << (first ? "" : " ") << (e.is_string() ? e.get<std::string>() : std::to_string(e.get<long>()));
                first = false;
            }
            out << "]\n";
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with p-adic Hodge complexes"};
    app.require_subcommand(1);
    Options opt;
    auto with_format = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        return sub;
    };

    std::vector<std::string> files;
    std::string a, b, site, kind = "eta", direction = "col", alpha = "0";
    int twist = 0, twist2 = 0, degree_value = 0, degree2 = 0;
    std::optional<int> degree;
    bool compact = false;

    auto* validate = with_format(app.add_subcommand("validate", "Load files and check every invariant"));
    validate->add_option("files", files, "Corpus files")->required();
    validate->add_option("--site", site, "Site for sheaf files");

    auto* ext_cmd = with_format(app.add_subcommand("ext", "Ext groups between two p-adic Hodge complexes"));
    ext_cmd->add_option("source", a)->required();
    ext_cmd->add_option("target", b)->required();
    ext_cmd->add_option("--degree", degree);

    auto* abs_cmd = with_format(app.add_subcommand("abs", "Absolute cohomology with its long exact sequence"));
    abs_cmd->add_option("datum", a)->required();
    abs_cmd->add_option("--twist", twist);

    auto* les_cmd = with_format(app.add_subcommand("les", "One form of the long exact sequence"));
    les_cmd->add_option("datum", a)->required();
    les_cmd->add_option("--twist", twist);
    les_cmd->add_option("--kind", kind)->check(CLI::IsMember({"eta", "sp", "cosp"}));
    les_cmd->add_flag("--compact", compact);

    auto* dual_cmd = with_format(app.add_subcommand("duality", "Compare cohomology with homology in the dual degree"));
    dual_cmd->add_option("datum", a)->required();
    dual_cmd->add_option("--twist", twist);
    dual_cmd->add_option("--degree", degree);

    auto* gysin_cmd = with_format(app.add_subcommand("gysin", "Pushforward along a proper map"));
    gysin_cmd->add_option("map", a)->required();
    gysin_cmd->add_option("--twist", twist);
    gysin_cmd->add_option("--degree", degree_value);

    auto* ss_cmd = with_format(app.add_subcommand("ss", "Spectral sequence of a double or filtered complex"));
    ss_cmd->add_option("file", a)->required();
    ss_cmd->add_option("--direction", direction)->check(CLI::IsMember({"row", "col"}));

    auto* gd_cmd = with_format(app.add_subcommand("godement", "Sheaf cohomology by Godement, Godement squared and Cech"));
    gd_cmd->add_option("site", a)->required();
    gd_cmd->add_option("sheaf", b)->required();

    auto* cup_cmd = with_format(app.add_subcommand("cup", "Cup products H^n(i) x Hc^m(j) -> Hc^{n+m}(i+j)"));
    cup_cmd->add_option("datum", a)->required();
    cup_cmd->add_option("--degree", degree_value);
    cup_cmd->add_option("--twist", twist);
    cup_cmd->add_option("--degree2", degree2);
    cup_cmd->add_option("--twist2", twist2);
    cup_cmd->add_option("--alpha", alpha, "Interpolation parameter, a rational");

    CLI11_PARSE(app, argc, argv);

    int status = 0;
    std::string cmd;
    try {
        Json report;
        if (*validate) {
            cmd = "validate";
            report = cmd_validate(files, site, status);
        } else if (*ext_cmd) {
            cmd = "ext";
            report = cmd_ext(a, b, degree);
        } else if (*abs_cmd) {
            cmd = "abs";
            report = cmd_abs(a, twist);
        } else if (*les_cmd) {
            cmd = "les";
            report = cmd_les(a, twist, kind, compact);
        } else if (*dual_cmd) {
            cmd = "duality";
            report = cmd_duality(a, twist, degree);
        } else if (*gysin_cmd) {
            cmd = "gysin";
            report = cmd_gysin(a, twist, degree_value);
        } else if (*ss_cmd) {
            cmd = "ss";
            report = cmd_ss(a, direction);
        } else if (*gd_cmd) {
            cmd = "godement";
            report = cmd_godement(a, b);
        } else if (*cup_cmd) {
            cmd = "cup";
            report = cmd_cup(a, degree_value, twist, degree2, twist2, alpha);
        }
        if (opt.format == "json")
            std::cout << report.dump(2) << "\n";
        else
            render_text(std::cout, cmd, report);
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    }
    return status;
}
