#include "synco/godement.hpp"

#include <algorithm>
#include <functional>

namespace synco {

FiniteSite::FiniteSite(std::vector<std::string> elements, const std::vector<std::pair<std::string, std::string>>& leq,
                       const std::vector<std::string>& points, bool enough_points_claimed)
    : names_(std::move(elements)), claimed_(enough_points_claimed) {
    const std::size_t n = names_.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (names_[a] == names_[b]) throw ValidationError("site element '" + names_[a] + "' is listed twice");
    leq_.assign(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) leq_[a][a] = true;
    for (auto& [a, b] : leq) leq_[index(a)][index(b)] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < n; ++a)
            if (leq_[a][k])
                for (std::size_t b = 0; b < n; ++b)
                    if (leq_[k][b]) leq_[a][b] = true;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (leq_[a][b] && leq_[b][a])
                throw ValidationError("order is not antisymmetric: " + names_[a] + " and " + names_[b]);
    for (const auto& p : points) points_.push_back(index(p));
    if (claimed_ && !has_enough_points())
        throw ValidationError("site claims enough points but a skyscraper is invisible to every point");
}

std::size_t FiniteSite::index(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw ValidationError("unknown site element '" + name + "'");
    return static_cast<std::size_t>(it - names_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteSite::covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = 0; b < size(); ++b) {
            if (a == b || !leq_[a][b]) continue;
            bool between = false;
            for (std::size_t c = 0; c < size() && !between; ++c)
                between = c != a && c != b && leq_[a][c] && leq_[c][b];
            if (!between) out.emplace_back(a, b);
        }
    return out;
}

int FiniteSite::height() const {
    std::vector<int> longest(size(), -1);
    std::function<int(std::size_t)> up = [&](std::size_t a) {
        if (longest[a] >= 0) return longest[a];
        int best = 0;
        for (std::size_t b = 0; b < size(); ++b)
            if (b != a && leq_[a][b]) best = std::max(best, 1 + up(b));
        return longest[a] = best;
    };
    int h = 0;
    for (std::size_t a = 0; a < size(); ++a) h = std::max(h, up(a));
    return h;
}

bool FiniteSite::has_enough_points() const {
    // The skyscraper at x has stalk K at x only; a point sees it iff it sits at x.
    for (std::size_t x = 0; x < size(); ++x)
        if (std::find(points_.begin(), points_.end(), x) == points_.end()) return false;
    return true;
}

Sheaf::Sheaf(const FiniteSite& site, std::vector<std::size_t> dims,
             const std::map<std::pair<std::size_t, std::size_t>, Matrix>& restrictions)
    : dims_(std::move(dims)) {
    if (dims_.size() != site.size()) throw DimensionError("sheaf needs one stalk per site element");
    for (auto& [xy, m] : restrictions) {
        const auto [x, y] = xy;
        if (x == y || !site.leq(x, y))
            throw ValidationError("restriction " + site.names()[x] + " -> " + site.names()[y] + " is not along the order");
        if (m.rows() != dims_[y] || m.cols() != dims_[x])
            throw DimensionError("restriction " + site.names()[x] + " -> " + site.names()[y] + " has the wrong shape");
    }
    // Fill every pair x < y, preferring given maps, else composing through a cover.
    auto covers = site.covers();
    std::function<Matrix(std::size_t, std::size_t)> get = [&](std::size_t x, std::size_t y) -> Matrix {
        auto it = rho_.find({x, y});
        if (it != rho_.end()) return it->second;
        Matrix m(dims_[y], dims_[x]);
        if (auto given = restrictions.find({x, y}); given != restrictions.end()) {
            m = given->second;
        } else {
            for (auto& [a, z] : covers)
                if (a == x && site.leq(z, y)) {
                    auto first = restrictions.find({x, z});
                    Matrix step = first == restrictions.end() ? Matrix(dims_[z], dims_[x]) : first->second;
                    m = z == y ? step : get(z, y) * step;
                    break;
                }
        }
        rho_[{x, y}] = m;
        return m;
    };
    for (std::size_t x = 0; x < site.size(); ++x)
        for (std::size_t y = 0; y < site.size(); ++y)
            if (x != y && site.leq(x, y)) get(x, y);
    validate(site);
}

Sheaf Sheaf::constant(const FiniteSite& site, std::size_t dim) {
    std::map<std::pair<std::size_t, std::size_t>, Matrix> r;
    for (auto& c : site.covers()) r[c] = Matrix::identity(dim);
    return Sheaf(site, std::vector<std::size_t>(site.size(), dim), r);
}

Sheaf Sheaf::skyscraper(const FiniteSite& site, std::size_t at, std::size_t dim) {
    std::vector<std::size_t> dims(site.size(), 0);
    dims.at(at) = dim;
    return Sheaf(site, dims, {});
}

Matrix Sheaf::restriction(std::size_t x, std::size_t y) const {
    if (x == y) return Matrix::identity(dims_[x]);
    auto it = rho_.find({x, y});
    if (it == rho_.end()) throw DimensionError("no restriction between incomparable elements");
    return it->second;
}

void Sheaf::validate(const FiniteSite& site) const {
    for (std::size_t x = 0; x < site.size(); ++x)
        for (std::size_t y = 0; y < site.size(); ++y) {
            if (x == y || !site.leq(x, y)) continue;
            for (std::size_t z = 0; z < site.size(); ++z) {
                if (z == y || !site.leq(y, z)) continue;
                if (restriction(y, z) * restriction(x, y) != restriction(x, z))
                    throw ValidationError("restrictions are not functorial along " + site.names()[x] + " <= " +
                                          site.names()[y] + " <= " + site.names()[z]);
            }
        }
}

Sheaf tensor(const FiniteSite& site, const Sheaf& f, const Sheaf& g) {
    std::vector<std::size_t> dims;
    for (std::size_t x = 0; x < site.size(); ++x) dims.push_back(f.dim(x) * g.dim(x));
    std::map<std::pair<std::size_t, std::size_t>, Matrix> r;
    for (auto& [x, y] : site.covers()) r[{x, y}] = kron(f.restriction(x, y), g.restriction(x, y));
    return Sheaf(site, dims, r);
}

Matrix global_sections(const FiniteSite& site, const Sheaf& f) {
    std::vector<std::size_t> off(site.size() + 1, 0);
    for (std::size_t x = 0; x < site.size(); ++x) off[x + 1] = off[x] + f.dim(x);
    auto covers = site.covers();
    std::size_t rows = 0;
    for (auto& [x, y] : covers) rows += f.dim(y);
    Matrix c(rows, off.back());
    std::size_t r = 0;
    for (auto& [x, y] : covers) {
        if (f.dim(y) > 0 && f.dim(x) > 0) c.set_block(r, off[x], f.restriction(x, y));
        if (f.dim(y) > 0) c.add_block(r, off[y], Matrix::identity(f.dim(y)), -1);
        r += f.dim(y);
    }
    return kernel_basis(c);
}

ChainIndex chain_index(const FiniteSite& site, const Sheaf& f, int len, std::optional<std::size_t> base) {
    ChainIndex idx;
    if (len == 0) {
        if (!base) throw DimensionError("global sections of F itself are not a chain space");
        idx.chains.push_back({});
        idx.offsets.push_back(0);
        idx.dim = f.dim(*base);
        return idx;
    }
    const auto& pts = site.points();
    std::vector<std::size_t> chain;
    std::function<void()> extend = [&]() {
        if (static_cast<int>(chain.size()) == len) {
            idx.chains.push_back(chain);
            idx.offsets.push_back(idx.dim);
            idx.dim += f.dim(pts[chain.back()]);
            return;
        }
        for (std::size_t p = 0; p < pts.size(); ++p) {
            const bool ok = chain.empty() ? (!base || site.leq(*base, pts[p])) : site.leq(pts[chain.back()], pts[p]);
            if (!ok) continue;
            chain.push_back(p);
            extend();
            chain.pop_back();
        }
    };
    extend();
    return idx;
}

namespace {

std::map<std::vector<std::size_t>, std::size_t> positions(const ChainIndex& idx) {
    std::map<std::vector<std::size_t>, std::size_t> pos;
    for (std::size_t k = 0; k < idx.chains.size(); ++k) pos[idx.chains[k]] = k;
    return pos;
}

std::size_t last_element(const FiniteSite& site, const std::vector<std::size_t>& chain,
                         std::optional<std::size_t> base) {
    return chain.empty() ? *base : site.points()[chain.back()];
}

}  // namespace

Matrix omit(const FiniteSite& site, const Sheaf& f, int len, int i, std::optional<std::size_t> base) {
    ChainIndex src = chain_index(site, f, len, base), tgt = chain_index(site, f, len + 1, base);
    auto pos = positions(src);
    Matrix m(tgt.dim, src.dim);
    for (std::size_t t = 0; t < tgt.chains.size(); ++t) {
        const auto& c = tgt.chains[t];
        std::vector<std::size_t> s = c;
        s.erase(s.begin() + i);
        const std::size_t k = pos.at(s);
        const std::size_t to = site.points()[c.back()];
        if (f.dim(to) == 0) continue;
        const Matrix block = i == len ? f.restriction(last_element(site, s, base), to) : Matrix::identity(f.dim(to));
        if (block.cols() > 0) m.set_block(tgt.offsets[t], src.offsets[k], block);
    }
    return m;
}

Matrix repeat(const FiniteSite& site, const Sheaf& f, int len, int i, std::optional<std::size_t> base) {
    ChainIndex src = chain_index(site, f, len + 2, base), tgt = chain_index(site, f, len + 1, base);
    auto pos = positions(src);
    Matrix m(tgt.dim, src.dim);
    for (std::size_t t = 0; t < tgt.chains.size(); ++t) {
        std::vector<std::size_t> s = tgt.chains[t];
        s.insert(s.begin() + i, s[static_cast<std::size_t>(i)]);
        const std::size_t d = f.dim(site.points()[s.back()]);
        if (d > 0) m.set_block(tgt.offsets[t], src.offsets[pos.at(s)], Matrix::identity(d));
    }
    return m;
}

AdjunctionReport adjunction(const FiniteSite& site, const Sheaf& f) {
    AdjunctionReport r;
    const auto& pts = site.points();
    for (std::size_t p = 0; p < pts.size(); ++p) {
        // u^*η at π, then ε: keep the block of the chain (π).
        const std::size_t x = pts[p];
        ChainIndex one = chain_index(site, f, 1, x);
        Matrix counit(f.dim(x), one.dim);
        for (std::size_t k = 0; k < one.chains.size(); ++k)
            if (one.chains[k][0] == p && f.dim(x) > 0) counit.set_block(0, one.offsets[k], Matrix::identity(f.dim(x)));
        if (counit * omit(site, f, 0, 0, x) != Matrix::identity(f.dim(x))) r.unit_counit_on_pullback = false;
    }
    for (std::size_t x = 0; x < site.size(); ++x) {
        // η on u_*u^*F inserts an outer point; u_*ε repeats it away.
        Matrix composite = repeat(site, f, 0, 0, x) * omit(site, f, 1, 0, x);
        if (composite != Matrix::identity(chain_index(site, f, 1, x).dim)) r.unit_counit_on_pushforward = false;
    }
    return r;
}

CosimplicialReport check_cosimplicial(const FiniteSite& site, const Sheaf& f, int levels) {
    CosimplicialReport rep;
    rep.levels = levels;
    for (std::size_t x = 0; x < site.size() && rep.identities_hold; ++x) {
        // δ^k_i : B^k → B^{k+1}, σ^k_j : B^{k+1} → B^k, B^k = T^{k+1}F.
        auto delta = [&](int k, int i) { return omit(site, f, k + 1, i, x); };
        auto sigma = [&](int k, int j) { return repeat(site, f, k, j, x); };
        auto fail = [&](const std::string& what, int k) {
            rep.identities_hold = false;
            rep.failure = what + " fails at level " + std::to_string(k) + " over " + site.names()[x];
        };
        for (int k = 0; k < levels && rep.identities_hold; ++k) {
            for (int j = 1; j <= k + 2; ++j)
                for (int i = 0; i < j; ++i)
                    if (delta(k + 1, j) * delta(k, i) != delta(k + 1, i) * delta(k, j - 1)) fail("dd", k);
            for (int j = 0; j <= k; ++j)
                for (int i = 0; i <= j; ++i)
                    if (sigma(k, j) * sigma(k + 1, i) != sigma(k, i) * sigma(k + 1, j + 1)) fail("ss", k);
            const Matrix id = Matrix::identity(chain_index(site, f, k + 1, x).dim);
            for (int j = 0; j <= k; ++j)
                for (int i = 0; i <= k + 1; ++i) {
                    const Matrix lhs = sigma(k, j) * delta(k, i);
                    Matrix rhs;
                    if (i == j || i == j + 1) rhs = id;
                    else if (i < j) rhs = delta(k - 1, i) * sigma(k - 1, j - 1);
                    else rhs = delta(k - 1, i - 1) * sigma(k - 1, j);
                    if (lhs != rhs) fail("sd", k);
                }
        }
    }
    return rep;
}

Complex godement_complex(const FiniteSite& site, const Sheaf& f, int truncation, std::optional<std::size_t> base) {
    std::vector<std::size_t> dims;
    std::map<int, Matrix> d;
    for (int k = 0; k <= truncation; ++k) dims.push_back(chain_index(site, f, k + 1, base).dim);
    for (int k = 0; k < truncation; ++k) {
        Matrix m(dims[static_cast<std::size_t>(k) + 1], dims[static_cast<std::size_t>(k)]);
        for (int i = 0; i <= k + 1; ++i) m.add_block(0, 0, omit(site, f, k + 1, i, base), i % 2 == 0 ? 1 : -1);
        d[k] = m;
    }
    return Complex(0, dims, d);
}

Matrix augmentation(const FiniteSite& site, const Sheaf& f, std::optional<std::size_t> base) {
    if (base) return omit(site, f, 0, 0, base);
    Matrix sections = global_sections(site, f);
    std::vector<std::size_t> off(site.size() + 1, 0);
    for (std::size_t x = 0; x < site.size(); ++x) off[x + 1] = off[x] + f.dim(x);
    ChainIndex one = chain_index(site, f, 1, std::nullopt);
    Matrix pick(one.dim, off.back());
    for (std::size_t k = 0; k < one.chains.size(); ++k) {
        const std::size_t x = site.points()[one.chains[k][0]];
        if (f.dim(x) > 0) pick.set_block(one.offsets[k], off[x], Matrix::identity(f.dim(x)));
    }
    return pick * sections;
}

namespace {

int default_truncation(const FiniteSite& site, int truncation) {
    return truncation < 0 ? site.height() + 2 : truncation;
}

/// F_x → Gd(F)_x as a complex starting in degree −1.
Complex augmented(const FiniteSite& site, const Sheaf& f, int truncation, std::size_t x) {
    Complex gd = godement_complex(site, f, truncation, x);
    std::vector<std::size_t> dims{f.dim(x)};
    std::map<int, Matrix> d{{-1, augmentation(site, f, x)}};
    for (int k = 0; k <= truncation; ++k) {
        dims.push_back(gd.dim(k));
        if (k < truncation) d[k] = gd.d(k);
    }
    return Complex(-1, dims, d);
}

}  // namespace

ResolutionReport bar_resolution(const FiniteSite& site, const Sheaf& f, int truncation) {
    ResolutionReport r;
    r.truncation = default_truncation(site, truncation);
    const auto& pts = site.points();
    for (std::size_t x = 0; x < site.size(); ++x) {
        Complex a = augmented(site, f, r.truncation, x);
        bool exact = true;
        for (int n = -1; n < r.truncation && exact; ++n) exact = betti(a, n) == 0;
        if (exact) continue;
        r.quasi_iso = false;
        r.failing_elements.push_back(x);
        if (std::find(pts.begin(), pts.end(), x) != pts.end()) r.quasi_iso_at_points = false;
    }
    return r;
}

DoubleComplex godement_squared(const FiniteSite& site, const Sheaf& f, int truncation) {
    std::map<Bidegree, std::size_t> dims;
    std::map<Bidegree, Matrix> dh, dv;
    for (int a = 0; a <= truncation; ++a)
        for (int b = 0; a + b <= truncation; ++b) dims[{a, b}] = chain_index(site, f, a + b + 2, std::nullopt).dim;
    for (int a = 0; a <= truncation; ++a)
        for (int b = 0; a + b < truncation; ++b) {
            const int len = a + b + 2;
            const std::size_t rows = chain_index(site, f, len + 1, std::nullopt).dim, cols = dims[{a, b}];
            Matrix h(rows, cols), v(rows, cols);
            for (int i = 0; i <= a + 1; ++i) h.add_block(0, 0, omit(site, f, len, i, std::nullopt), i % 2 == 0 ? 1 : -1);
            const Rational outer = a % 2 == 0 ? 1 : -1;
            for (int j = 0; j <= b + 1; ++j)
                v.add_block(0, 0, omit(site, f, len, a + 1 + j, std::nullopt), j % 2 == 0 ? outer : -outer);
            dh[{a, b}] = h;
            dv[{a, b}] = v;
        }
    return DoubleComplex(dims, dh, dv);
}

Complex cech_complex(const FiniteSite& site, const Sheaf& f) {
    std::vector<std::vector<std::vector<std::size_t>>> chains(1);
    for (std::size_t x = 0; x < site.size(); ++x) chains[0].push_back({x});
    while (true) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& c : chains.back())
            for (std::size_t y = 0; y < site.size(); ++y)
                if (y != c.back() && site.leq(c.back(), y)) {
                    auto e = c;
                    e.push_back(y);
                    next.push_back(e);
                }
        if (next.empty()) break;
        chains.push_back(std::move(next));
    }
    auto space = [&](std::size_t n, std::vector<std::size_t>& off) {
        off.assign(1, 0);
        for (const auto& c : chains[n]) off.push_back(off.back() + f.dim(c.back()));
        return off.back();
    };
    std::vector<std::size_t> dims;
    std::vector<std::vector<std::size_t>> offs(chains.size());
    for (std::size_t n = 0; n < chains.size(); ++n) dims.push_back(space(n, offs[n]));
    std::map<int, Matrix> d;
    for (std::size_t n = 0; n + 1 < chains.size(); ++n) {
        std::map<std::vector<std::size_t>, std::size_t> pos;
        for (std::size_t k = 0; k < chains[n].size(); ++k) pos[chains[n][k]] = k;
        Matrix m(dims[n + 1], dims[n]);
        for (std::size_t t = 0; t < chains[n + 1].size(); ++t) {
            const auto& c = chains[n + 1][t];
            const std::size_t top = c.back();
            if (f.dim(top) == 0) continue;
            for (std::size_t i = 0; i <= n + 1; ++i) {
                auto face = c;
                face.erase(face.begin() + static_cast<long>(i));
                const std::size_t k = pos.at(face);
                Matrix block = i == n + 1 ? f.restriction(face.back(), top) : Matrix::identity(f.dim(top));
                if (block.cols() > 0) m.add_block(offs[n + 1][t], offs[n][k], block, i % 2 == 0 ? 1 : -1);
            }
        }
        d[static_cast<int>(n)] = m;
    }
    return Complex(0, dims, d);
}

std::vector<std::size_t> sheaf_cohomology(const FiniteSite& site, const Sheaf& f, Route route) {
    const int top = site.height();
    if (route != Route::Cech && !site.has_enough_points())
        throw PreconditionError("Godement cohomology needs enough points");
    const int k = top + 2;
    Complex c;
    switch (route) {
        case Route::Cech: c = cech_complex(site, f); break;
        case Route::Godement: {
            c = godement_complex(site, f, k, std::nullopt);
            Complex longer = godement_complex(site, f, k + 1, std::nullopt);
            for (int n = 0; n <= top; ++n)
                if (betti(c, n) != betti(longer, n))
                    throw ValidationError("Godement cohomology did not stabilize by the truncation bound");
            break;
        }
        case Route::GodementSquared: {
            DoubleComplex dc = godement_squared(site, f, k);
            dc.validate();
            c = total_complex(dc);
            break;
        }
    }
    std::vector<std::size_t> out;
    for (int n = 0; n <= top; ++n) out.push_back(betti(c, n));
    return out;
}

FunctorialReport gd_functorial(const SiteMorphism& fm, const Sheaf& g, const Sheaf& fs, const std::vector<Matrix>& a,
                               int truncation) {
    const FiniteSite &P = fm.source, &Q = fm.target;
    if (fm.on_elements.size() != P.size() || fm.on_points.size() != P.points().size() || a.size() != P.size())
        throw DimensionError("site morphism data does not match the sites");
    for (std::size_t x = 0; x < P.size(); ++x)
        for (std::size_t y = 0; y < P.size(); ++y)
            if (P.leq(x, y) && !Q.leq(fm.on_elements[x], fm.on_elements[y]))
                throw ValidationError("site map is not order preserving at " + P.names()[x] + " <= " + P.names()[y]);
    for (std::size_t p = 0; p < P.points().size(); ++p)
        if (Q.points().at(fm.on_points[p]) != fm.on_elements[P.points()[p]])
            throw ValidationError("square of sites does not commute at point " + std::to_string(p));
    for (std::size_t x = 0; x < P.size(); ++x) {
        if (a[x].rows() != fs.dim(x) || a[x].cols() != g.dim(fm.on_elements[x]))
            throw DimensionError("a has the wrong shape at " + P.names()[x]);
        for (std::size_t y = 0; y < P.size(); ++y)
            if (x != y && P.leq(x, y) &&
                fs.restriction(x, y) * a[x] != a[y] * g.restriction(fm.on_elements[x], fm.on_elements[y]))
                throw ValidationError("a is not natural along " + P.names()[x] + " <= " + P.names()[y]);
    }
    const int k = truncation < 0 ? std::max(P.height(), Q.height()) + 2 : truncation;
    Complex gq = godement_complex(Q, g, k, std::nullopt), gp = godement_complex(P, fs, k, std::nullopt);
    std::map<int, Matrix> comp;
    for (int n = 0; n <= k; ++n) {
        ChainIndex src = chain_index(Q, g, n + 1, std::nullopt), tgt = chain_index(P, fs, n + 1, std::nullopt);
        auto pos = positions(src);
        Matrix m(tgt.dim, src.dim);
        for (std::size_t t = 0; t < tgt.chains.size(); ++t) {
            std::vector<std::size_t> image;
            for (std::size_t p : tgt.chains[t]) image.push_back(fm.on_points[p]);
            const Matrix& block = a[P.points()[tgt.chains[t].back()]];
            if (!block.empty()) m.set_block(tgt.offsets[t], src.offsets[pos.at(image)], block);
        }
        comp[n] = m;
    }
    FunctorialReport r;
    r.map = ChainMap(gq, gp, comp);
    r.map.validate();

    Matrix sq = global_sections(Q, g), sp = global_sections(P, fs);
    std::vector<std::size_t> offq(Q.size() + 1, 0), offp(P.size() + 1, 0);
    for (std::size_t y = 0; y < Q.size(); ++y) offq[y + 1] = offq[y] + g.dim(y);
    for (std::size_t x = 0; x < P.size(); ++x) offp[x + 1] = offp[x] + fs.dim(x);
    Matrix stacked(offp.back(), offq.back());
    for (std::size_t x = 0; x < P.size(); ++x)
        if (!a[x].empty()) stacked.set_block(offp[x], offq[fm.on_elements[x]], a[x]);
    auto coords = solve(sp, stacked * sq);
    if (!coords) throw ValidationError("a does not send global sections to global sections");
    r.on_sections = *coords;
    r.commutes_with_augmentation = r.map.at(0) * augmentation(Q, g, std::nullopt) ==
                                   augmentation(P, fs, std::nullopt) * r.on_sections;
    for (int n = 0; n <= std::min(P.height(), Q.height()); ++n) r.on_cohomology.push_back(induced_map(r.map, n));
    return r;
}

TensorReport gd_tensor(const FiniteSite& site, const Sheaf& f, const Sheaf& g, int truncation) {
    const int k = default_truncation(site, truncation);
    const Sheaf fg = tensor(site, f, g);
    TensorReport r;
    for (std::size_t x = 0; x < site.size(); ++x) {
        Complex a = godement_complex(site, f, k, x), b = godement_complex(site, g, k, x);
        Complex c = godement_complex(site, fg, k, x);
        Complex ab = tensor(a, b);
        std::map<int, Matrix> comp;
        for (int n = 0; n <= k; ++n) {
            Matrix m(c.dim(n), ab.dim(n));
            ChainIndex tgt = chain_index(site, fg, n + 1, x);
            for (int p = 0; p <= n; ++p) {
                ChainIndex ia = chain_index(site, f, p + 1, x), ib = chain_index(site, g, n - p + 1, x);
                auto pa = positions(ia), pb = positions(ib);
                const std::size_t base = tensor_offset(a, b, n, p), width = b.dim(n - p);
                for (std::size_t t = 0; t < tgt.chains.size(); ++t) {
                    const auto& ch = tgt.chains[t];
                    std::vector<std::size_t> front(ch.begin(), ch.begin() + p + 1), back(ch.begin() + p, ch.end());
                    const std::size_t ca = ia.offsets[pa.at(front)], cb = ib.offsets[pb.at(back)];
                    const std::size_t from = site.points()[front.back()], to = site.points()[ch.back()];
                    const Matrix rho = f.restriction(from, to);
                    const std::size_t dg = g.dim(to);
                    for (std::size_t u2 = 0; u2 < rho.rows(); ++u2)
                        for (std::size_t u = 0; u < rho.cols(); ++u) {
                            if (sgn(rho(u2, u)) == 0) continue;
                            for (std::size_t v = 0; v < dg; ++v)
                                m(tgt.offsets[t] + u2 * dg + v, base + (ca + u) * width + cb + v) = rho(u2, u);
                        }
                }
            }
            comp[n] = m;
        }
        ChainMap aw(ab, c, comp);
        aw.validate();
        for (int n = 0; n < k && r.quasi_iso; ++n) {
            Cohomology hs = cohomology(ab, n), ht = cohomology(c, n);
            if (hs.dim != ht.dim || rank(induced_map(aw, n, hs, ht)) != hs.dim) r.quasi_iso = false;
        }
    }
    r.cohomology = sheaf_cohomology(site, fg, Route::Godement);
    return r;
}

}  // namespace synco
