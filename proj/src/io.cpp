#include "synco/io.hpp"

#include <fstream>

namespace synco {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

int degree_key(const std::string& key) {
    try {
        std::size_t used = 0;
        int n = std::stoi(key, &used);
        if (used != key.size()) throw ParseError("bad degree key '" + key + "'");
        return n;
    } catch (const std::logic_error&) {
        throw ParseError("bad degree key '" + key + "'");
    }
}

Json map_components(const ChainMap& f) {
    Json out = Json::object();
    const int lo = std::min(f.source().lo(), f.target().lo()), hi = std::max(f.source().hi(), f.target().hi());
    for (int n = lo; n <= hi; ++n) {
        const Matrix& m = f.at(n);
        if (!m.empty() && !m.is_zero()) out[std::to_string(n)] = to_json(m);
    }
    return out;
}

Json morphism_components(const PHMorphism& f) {
    return {{"rig", map_components(f.rig)}, {"dr", map_components(f.dr)}, {"k", map_components(f.k)}};
}

std::map<int, Matrix> phi_from_json(const Json& j, const Complex& c) {
    std::map<int, Matrix> phi;
    if (!j.is_object()) throw ParseError("phi must be an object keyed by degree");
    for (auto& [key, m] : j.items()) {
        const int n = degree_key(key);
        phi[n] = matrix_from_json(m, c.dim(n), c.dim(n));
    }
    return phi;
}

GeometricDatum datum_body(const Json& j) {
    GeometricDatum x;
    const CoefficientFrame frame = frame_from_json(j);
    x.name = j.value("name", std::string("datum"));
    x.d = field(j, "d").get<int>();
    x.rgamma = phc_from_json(field(j, "rgamma"), frame);
    const Json& rc = field(j, "rgamma_c");
    x.rgamma_c = rc.is_string() && rc.get<std::string>() == "same" ? x.rgamma : phc_from_json(rc, frame);
    if (j.contains("pairing"))
        x.pairing = morphism_components_from_json(j.at("pairing"), tensor(x.rgamma, x.rgamma_c), x.rgamma_c);
    if (j.contains("trace"))
        x.trace = morphism_components_from_json(j.at("trace"), x.rgamma_c, shift(tate_object(-x.d, frame), -2 * x.d));
    if (j.contains("unit")) {
        const Json& u = j.at("unit");
        x.unit = std::array<Vector, 3>{vector_from_json(field(u, "rig"), x.rgamma.rig.complex().dim(0)),
                                       vector_from_json(field(u, "k"), x.rgamma.k.dim(0)),
                                       vector_from_json(field(u, "dr"), x.rgamma.dr.carrier().dim(0))};
    }
    if (j.contains("flags")) {
        const Json& f = j.at("flags");
        x.c_quasi_iso = f.value("c_quasi_iso", false);
        x.s_quasi_iso = f.value("s_quasi_iso", false);
        x.phi_invertible = f.value("phi_invertible", false);
    }
    return x;
}

}  // namespace

Json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("matrix entries must be integers or \"a/b\" strings");
}

Json to_json(const Rational& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return to_string(q);
}

Vector vector_from_json(const Json& j, std::size_t size) {
    if (!j.is_array() || j.size() != size)
        throw ParseError("expected a vector of length " + std::to_string(size));
    Vector v;
    for (auto& e : j) v.push_back(rational_from_json(e));
    return v;
}

Json to_json(const Vector& v) {
    Json out = Json::array();
    for (auto& q : v) out.push_back(to_json(q));
    return out;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array()) throw ParseError("a matrix is a list of rows");
    if (j.empty() && rows * cols == 0) return Matrix(rows, cols);
    if (j.size() != rows)
        throw ParseError("expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    std::vector<Vector> r;
    for (auto& row : j) r.push_back(vector_from_json(row, cols));
    return Matrix::from_rows(r, cols);
}

Json to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
    return out;
}

Complex complex_from_json(const Json& j) {
    const int lo = field(j, "lo").get<int>();
    std::vector<std::size_t> dims = field(j, "dims").get<std::vector<std::size_t>>();
    auto dim = [&](int n) {
        return n < lo || n - lo >= static_cast<int>(dims.size()) ? 0 : dims[static_cast<std::size_t>(n - lo)];
    };
    std::map<int, Matrix> d;
    if (j.contains("d"))
        for (auto& [key, m] : j.at("d").items()) {
            const int n = degree_key(key);
            d[n] = matrix_from_json(m, dim(n + 1), dim(n));
        }
    Complex c(lo, dims, d);
    c.validate();
    return c;
}

Json to_json(const Complex& c) {
    Json out{{"lo", c.is_zero() ? 0 : c.lo()}, {"dims", Json::array()}};
    Json d = Json::object();
    for (int n = c.lo(); n <= c.hi(); ++n) {
        out["dims"].push_back(c.dim(n));
        if (n < c.hi() && !c.d(n).is_zero()) d[std::to_string(n)] = to_json(c.d(n));
    }
    out["d"] = d;
    return out;
}

ChainMap chain_map_from_json(const Json& j, const Complex& source, const Complex& target) {
    if (!j.is_object()) throw ParseError("a chain map is an object keyed by degree");
    std::map<int, Matrix> comp;
    for (auto& [key, m] : j.items()) {
        const int n = degree_key(key);
        comp[n] = matrix_from_json(m, target.dim(n), source.dim(n));
    }
    ChainMap f(source, target, comp);
    f.validate();
    return f;
}

Json to_json(const ChainMap& f) { return map_components(f); }

FilteredComplex filtered_from_json(const Json& j) {
    Complex c = complex_from_json(field(j, "complex"));
    std::map<int, Filtration> filt;
    if (j.contains("filtration"))
        for (auto& [key, entry] : j.at("filtration").items()) {
            const int n = degree_key(key);
            const std::size_t amb = c.dim(n);
            if (entry.is_object() && entry.contains("trivial")) {
                filt[n] = Filtration::trivial(amb, entry.at("trivial").get<int>());
                continue;
            }
            if (!entry.is_array()) throw ParseError("filtration of degree " + key + " must be a list of steps");
            std::vector<std::pair<int, Subspace>> steps;
            for (auto& step : entry) {
                const Json& basis = field(step, "basis");
                Subspace s;
                if (basis.is_string() && basis.get<std::string>() == "whole") {
                    s = Subspace::whole(amb);
                } else {
                    std::vector<Vector> cols;
                    for (auto& col : basis) cols.push_back(vector_from_json(col, amb));
                    s = Subspace(amb, Matrix::from_columns(cols, amb));
                }
                steps.emplace_back(field(step, "level").get<int>(), s);
            }
            filt[n] = Filtration(amb, steps);
        }
    FilteredComplex fc(c, filt);
    fc.validate();
    return fc;
}

Json to_json(const FilteredComplex& fc) {
    Json filt = Json::object();
    const Complex& c = fc.carrier();
    for (int n = c.lo(); n <= c.hi(); ++n) {
        Json steps = Json::array();
        for (auto& [level, s] : fc.filtration(n).steps()) {
            Json cols = Json::array();
            for (std::size_t k = 0; k < s.dim(); ++k) cols.push_back(to_json(s.basis().col(k)));
            steps.push_back({{"level", level}, {"basis", cols}});
        }
        filt[std::to_string(n)] = steps;
    }
    return {{"complex", to_json(c)}, {"filtration", filt}};
}

CoefficientFrame frame_from_json(const Json& j) {
    CoefficientFrame f;
    f.p = j.value("p", 2L);
    if (j.contains("extension")) {
        std::vector<Rational> mod;
        for (auto& e : j.at("extension")) mod.push_back(rational_from_json(e));
        f.extension = NumberField(mod);
        if (j.contains("sigma"))
            f.sigma = FieldAutomorphism{vector_from_json(j.at("sigma"), f.extension->degree())};
    }
    f.validate();
    return f;
}

PHodgeComplex phc_from_json(const Json& j, const CoefficientFrame& frame) {
    const Json& rig = field(j, "rig");
    Complex m0 = complex_from_json(field(rig, "complex"));
    FrobeniusComplex fr(m0, rig.contains("phi") ? phi_from_json(rig.at("phi"), m0) : std::map<int, Matrix>{}, frame);
    FilteredComplex dr = filtered_from_json(field(j, "dr"));
    Complex k = complex_from_json(field(j, "k"));
    PHodgeComplex m{fr, dr, k, chain_map_from_json(field(j, "c"), m0, k),
                    chain_map_from_json(field(j, "s"), dr.carrier(), k)};
    m.validate();
    return m;
}

Json to_json(const PHodgeComplex& m) {
    Json phi = Json::object();
    const Complex& m0 = m.rig.complex();
    for (int n = m0.lo(); n <= m0.hi(); ++n)
        if (m0.dim(n) > 0) phi[std::to_string(n)] = to_json(m.rig.phi().at(n));
    return {{"rig", {{"complex", to_json(m0)}, {"phi", phi}}},
            {"dr", to_json(m.dr)},
            {"k", to_json(m.k)},
            {"c", to_json(m.c)},
            {"s", to_json(m.s)}};
}

PHMorphism morphism_components_from_json(const Json& j, const PHodgeComplex& source, const PHodgeComplex& target) {
    PHMorphism f{source, target,
                 chain_map_from_json(field(j, "rig"), source.rig.complex(), target.rig.complex()),
                 chain_map_from_json(field(j, "dr"), source.dr.carrier(), target.dr.carrier()),
                 chain_map_from_json(field(j, "k"), source.k, target.k)};
    f.validate();
    return f;
}

GeometricDatum datum_from_json(const Json& j) {
    GeometricDatum x = datum_body(j);
    x.validate();
    return x;
}

Json to_json(const GeometricDatum& x) {
    Json out{{"type", "datum"}, {"name", x.name}, {"p", x.rgamma.frame().p}, {"d", x.d},
             {"rgamma", to_json(x.rgamma)}, {"rgamma_c", to_json(x.rgamma_c)}};
    if (x.pairing) out["pairing"] = morphism_components(*x.pairing);
    if (x.trace) out["trace"] = morphism_components(*x.trace);
    if (x.unit) out["unit"] = {{"rig", to_json((*x.unit)[0])}, {"k", to_json((*x.unit)[1])}, {"dr", to_json((*x.unit)[2])}};
    out["flags"] = {{"c_quasi_iso", x.c_quasi_iso}, {"s_quasi_iso", x.s_quasi_iso}, {"phi_invertible", x.phi_invertible}};
    return out;
}

ProperMap proper_map_from_json(const Json& j) {
    ProperMap f{datum_from_json(field(j, "source")), datum_from_json(field(j, "target")), {}};
    f.pullback_c = morphism_components_from_json(field(j, "pullback_c"), f.target.rgamma_c, f.source.rgamma_c);
    return f;
}

DoubleComplex double_complex_from_json(const Json& j) {
    std::map<Bidegree, std::size_t> dims;
    for (auto& e : field(j, "dims")) dims[{e.at(0).get<int>(), e.at(1).get<int>()}] = e.at(2).get<std::size_t>();
    auto dim = [&](int p, int q) {
        auto it = dims.find({p, q});
        return it == dims.end() ? std::size_t{0} : it->second;
    };
    auto maps = [&](const char* key, int dp, int dq) {
        std::map<Bidegree, Matrix> out;
        if (j.contains(key))
            for (auto& e : j.at(key)) {
                const int p = e.at(0).get<int>(), q = e.at(1).get<int>();
                out[{p, q}] = matrix_from_json(e.at(2), dim(p + dp, q + dq), dim(p, q));
            }
        return out;
    };
    DoubleComplex dc(dims, maps("dh", 1, 0), maps("dv", 0, 1));
    dc.validate();
    return dc;
}

Json to_json(const DoubleComplex& dc) {
    Json dims = Json::array(), dh = Json::array(), dv = Json::array();
    for (auto& [b, n] : dc.dims()) dims.push_back({b.first, b.second, n});
    for (auto& [b, m] : dc.horizontal()) dh.push_back({b.first, b.second, to_json(m)});
    for (auto& [b, m] : dc.vertical()) dv.push_back({b.first, b.second, to_json(m)});
    return {{"type", "double_complex"}, {"dims", dims}, {"dh", dh}, {"dv", dv}};
}

FiniteSite site_from_json(const Json& j) {
    std::vector<std::pair<std::string, std::string>> leq;
    for (auto& e : field(j, "leq")) leq.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    return FiniteSite(field(j, "elements").get<std::vector<std::string>>(), leq,
                      field(j, "points").get<std::vector<std::string>>(), j.value("enough_points", false));
}

Json to_json(const FiniteSite& site) {
    Json leq = Json::array(), points = Json::array();
    for (auto& [a, b] : site.covers()) leq.push_back({site.names()[a], site.names()[b]});
    for (std::size_t p : site.points()) points.push_back(site.names()[p]);
    return {{"type", "site"}, {"elements", site.names()}, {"leq", leq}, {"points", points},
            {"enough_points", site.enough_points_claimed()}};
}

Sheaf sheaf_from_json(const Json& j, const FiniteSite& site) {
    if (j.contains("constant")) return Sheaf::constant(site, j.at("constant").get<std::size_t>());
    if (j.contains("skyscraper"))
        return Sheaf::skyscraper(site, site.index(j.at("skyscraper").get<std::string>()), j.value("dim", std::size_t{1}));
    std::vector<std::size_t> dims(site.size(), 0);
    for (auto& [name, n] : field(j, "dims").items()) dims[site.index(name)] = n.get<std::size_t>();
    std::map<std::pair<std::size_t, std::size_t>, Matrix> r;
    if (j.contains("restrictions"))
        for (auto& e : j.at("restrictions")) {
            const std::size_t a = site.index(field(e, "from").get<std::string>());
            const std::size_t b = site.index(field(e, "to").get<std::string>());
            r[{a, b}] = matrix_from_json(field(e, "matrix"), dims[b], dims[a]);
        }
    return Sheaf(site, dims, r);
}

Json to_json(const Sheaf& f) {
    Json out{{"type", "sheaf"}, {"dims", Json::array()}};
    for (auto d : f.dims()) out["dims"].push_back(d);
    return out;
}

Loaded load_file(const std::filesystem::path& path) {
    Json j = read_json(path);
    const std::string type = j.value("type", std::string());
    if (type == "phc") return phc_from_json(j, frame_from_json(j));
    if (type == "morphism") {
        const CoefficientFrame fr = frame_from_json(j);
        return morphism_components_from_json(j, phc_from_json(field(j, "source"), fr),
                                             phc_from_json(field(j, "target"), fr));
    }
    if (type == "datum") return datum_from_json(j);
    if (type == "proper_map") return proper_map_from_json(j);
    if (type == "double_complex") return double_complex_from_json(j);
    if (type == "site") return site_from_json(j);
    if (type == "filtered") return filtered_from_json(j);
    if (type == "sheaf" || type == "manifest") return j;
    throw ParseError(path.string() + ": unknown type '" + type + "'");
}

const Loaded& Workspace::load(const std::filesystem::path& path, std::string name) {
    if (name.empty()) name = path.stem().string();
    if (objects_.count(name)) throw ValidationError("workspace already holds an object named '" + name + "'");
    return objects_.emplace(name, load_file(path)).first->second;
}

const Loaded& Workspace::get(const std::string& name) const {
    auto it = objects_.find(name);
    if (it == objects_.end()) throw ValidationError("no object named '" + name + "'");
    return it->second;
}

std::vector<std::string> Workspace::names() const {
    std::vector<std::string> out;
    for (auto& [n, o] : objects_) out.push_back(n);
    return out;
}

}  // namespace synco
