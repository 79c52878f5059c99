#include "synco/random.hpp"

#include <algorithm>

namespace synco {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Normal form: degree n holds [classes_n | pair sources_n | pair targets_{n−1}],
// and d sends the j-th source in degree n to the j-th target in degree n+1.
struct NormalForm {
    int lo = 0;
    std::vector<std::size_t> classes, pairs;  // pairs[n − lo] run from n to n+1

    std::size_t count(int n, const std::vector<std::size_t>& v) const {
        return n < lo || n - lo >= static_cast<int>(v.size()) ? 0 : v[static_cast<std::size_t>(n - lo)];
    }
    std::size_t dim(int n) const { return count(n, classes) + count(n, pairs) + count(n - 1, pairs); }
    std::size_t source_at(int n) const { return count(n, classes); }
    std::size_t target_at(int n) const { return count(n, classes) + count(n, pairs); }
    int hi() const { return lo + static_cast<int>(classes.size()) - 1; }

    Complex complex() const {
        std::vector<std::size_t> dims;
        std::map<int, Matrix> d;
        for (int n = lo; n <= hi(); ++n) dims.push_back(dim(n));
        for (int n = lo; n < hi(); ++n) {
            Matrix m(dim(n + 1), dim(n));
            for (std::size_t j = 0; j < count(n, pairs); ++j) m(target_at(n + 1) + j, source_at(n) + j) = 1;
            d[n] = m;
        }
        return Complex(lo, dims, d);
    }
};

NormalForm random_form(Rng& rng, const ComplexShape& s) {
    NormalForm f;
    f.lo = s.lo;
    for (int n = s.lo; n <= s.hi; ++n) {
        f.classes.push_back(static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(s.max_classes))));
        f.pairs.push_back(n < s.hi ? static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(s.max_pairs))) : 0);
    }
    return f;
}

// Moves a complex by g^n in every degree: d′ = g^{n+1} d (g^n)^{−1}.
struct Moved {
    Complex complex;
    std::map<int, Matrix> g, g_inv;
};

Moved move(Rng& rng, const Complex& c) {
    Moved m;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        m.g[n] = random_invertible(rng, c.dim(n));
        m.g_inv[n] = inverse(m.g[n]);
    }
    std::vector<std::size_t> dims;
    std::map<int, Matrix> d;
    for (int n = c.lo(); n <= c.hi(); ++n) dims.push_back(c.dim(n));
    for (int n = c.lo(); n < c.hi(); ++n) d[n] = m.g[n + 1] * c.d(n) * m.g_inv[n];
    m.complex = c.is_zero() ? Complex() : Complex(c.lo(), dims, d);
    return m;
}

// Levels per normal-form basis vector: classes anywhere, pairs at one level
// (or with the target deeper when jumps are allowed).
std::map<int, std::vector<int>> random_levels(Rng& rng, const NormalForm& f, int lo, int hi, bool jumps) {
    std::map<int, std::vector<int>> lv;
    for (int n = f.lo; n <= f.hi(); ++n) lv[n].assign(f.dim(n), lo);
    for (int n = f.lo; n <= f.hi(); ++n) {
        for (std::size_t j = 0; j < f.count(n, f.classes); ++j) lv[n][j] = uniform(rng, lo, hi);
        for (std::size_t j = 0; j < f.count(n, f.pairs); ++j) {
            const int l = uniform(rng, lo, hi);
            lv[n][f.source_at(n) + j] = l;
            lv[n + 1][f.target_at(n + 1) + j] = jumps ? uniform(rng, l, hi) : l;
        }
    }
    return lv;
}

FilteredComplex filtered_from_levels(const Complex& c, const std::map<int, std::vector<int>>& levels,
                                     const std::map<int, Matrix>& g) {
    std::map<int, Filtration> filt;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        const std::size_t dim = c.dim(n);
        if (dim == 0) continue;
        const std::vector<int>& lv = levels.at(n);
        std::vector<int> distinct(lv.begin(), lv.end());
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<std::pair<int, Subspace>> steps;
        for (int l : distinct) {
            std::vector<std::size_t> idx;
            for (std::size_t k = 0; k < dim; ++k)
                if (lv[k] >= l) idx.push_back(k);
            steps.emplace_back(l, Subspace(dim, g.at(n).select_columns(idx)));
        }
        steps.front().second = Subspace::whole(dim);
        filt[n] = Filtration(dim, steps);
    }
    return FilteredComplex(c, filt);
}

// Frobenius in normal form: invertible on classes, the same invertible block
// on the sources and targets of the pairs so that it commutes with d.
std::map<int, Matrix> random_phi(Rng& rng, const NormalForm& f) {
    std::map<int, Matrix> phi;
    for (int n = f.lo; n <= f.hi(); ++n) phi[n] = Matrix(f.dim(n), f.dim(n));
    for (int n = f.lo; n <= f.hi(); ++n) {
        phi[n].set_block(0, 0, random_invertible(rng, f.count(n, f.classes)));
        const Matrix q = random_invertible(rng, f.count(n, f.pairs));
        phi[n].set_block(f.source_at(n), f.source_at(n), q);
        if (n < f.hi()) phi[n + 1].set_block(f.target_at(n + 1), f.target_at(n + 1), q);
    }
    return phi;
}

ChainMap transport(const Moved& from, const Moved& to) {
    std::map<int, Matrix> m;
    for (auto& [n, g] : to.g) m[n] = g * from.g_inv.at(n);
    return ChainMap(from.complex, to.complex, m);
}

PHodgeComplex phc_from_form(Rng& rng, const CoefficientFrame& frame, const NormalForm& f,
                            const std::map<int, std::vector<int>>& levels) {
    const Complex base = f.complex();
    const Moved rig = move(rng, base), dr = move(rng, base), k = move(rng, base);
    std::map<int, Matrix> phi = random_phi(rng, f);
    // The complex drops empty end degrees, so φ does too.
    std::erase_if(phi, [&](const auto& e) { return !rig.g.count(e.first); });
    for (auto& [n, m] : phi) m = rig.g.at(n) * m * rig.g_inv.at(n);
    PHodgeComplex out{FrobeniusComplex(rig.complex, phi, frame), filtered_from_levels(dr.complex, levels, dr.g),
                      k.complex, transport(rig, k), transport(dr, k)};
    return out;
}

ChainMap first_inclusion(const Complex& a, const Complex& sum) {
    std::map<int, Matrix> m;
    for (int n = sum.lo(); n <= sum.hi(); ++n) {
        Matrix i(sum.dim(n), a.dim(n));
        if (a.dim(n) > 0) i.set_block(0, 0, Matrix::identity(a.dim(n)));
        m[n] = i;
    }
    return ChainMap(a, sum, m);
}

PHMorphism include_first(const PHodgeComplex& m, const PHodgeComplex& extra) {
    PHodgeComplex sum = direct_sum(m, extra);
    PHMorphism f{m, sum, first_inclusion(m.rig.complex(), sum.rig.complex()),
                 first_inclusion(m.dr.carrier(), sum.dr.carrier()), first_inclusion(m.k, sum.k)};
    return f;
}

}  // namespace

Rational random_rational(Rng& rng, int bound) {
    Rational q(uniform(rng, -bound, bound));
    if (uniform(rng, 0, 5) == 0) q /= uniform(rng, 2, 3);
    q.canonicalize();
    return q;
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(rng, bound);
    return m;
}

Matrix random_invertible(Rng& rng, std::size_t n) {
    // Unit lower times upper triangular with a nonzero diagonal.
    Matrix l = Matrix::identity(n), u = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        int diag = 0;
        while (diag == 0) diag = uniform(rng, -2, 2);
        u(i, i) = diag;
        for (std::size_t j = 0; j < i; ++j) {
            l(i, j) = uniform(rng, -2, 2);
            u(j, i) = uniform(rng, -2, 2);
        }
    }
    return l * u;
}

Complex random_complex(Rng& rng, const ComplexShape& shape) { return move(rng, random_form(rng, shape).complex()).complex; }

FilteredComplex random_filtered_complex(Rng& rng, const ComplexShape& shape, int level_lo, int level_hi, bool jumps) {
    const NormalForm f = random_form(rng, shape);
    const auto levels = random_levels(rng, f, level_lo, level_hi, jumps);
    const Moved m = move(rng, f.complex());
    FilteredComplex fc = filtered_from_levels(m.complex, levels, m.g);
    fc.validate();
    return fc;
}

PHodgeComplex random_phc(Rng& rng, const CoefficientFrame& frame, const ComplexShape& shape, int level_lo,
                         int level_hi) {
    const NormalForm f = random_form(rng, shape);
    PHodgeComplex m = phc_from_form(rng, frame, f, random_levels(rng, f, level_lo, level_hi, false));
    m.validate();
    return m;
}

PHodgeComplex random_phc_degree0(Rng& rng, const CoefficientFrame& frame, std::size_t max_dim) {
    return random_phc(rng, frame, {0, 0, max_dim, 0});
}

PHMorphism random_quasi_iso(Rng& rng, const PHodgeComplex& m, const ComplexShape& shape) {
    NormalForm f = random_form(rng, shape);
    std::fill(f.classes.begin(), f.classes.end(), 0);
    if (f.pairs.size() > 1 && f.pairs.front() == 0) f.pairs.front() = 1;
    PHodgeComplex extra = phc_from_form(rng, m.frame(), f, random_levels(rng, f, -1, 2, false));
    PHMorphism g = include_first(m, extra);
    g.validate();
    return g;
}

PHMorphism random_non_quasi_iso(Rng& rng, const PHodgeComplex& m) {
    const int n = uniform(rng, 0, 1), j = uniform(rng, -1, 1);
    PHMorphism g = include_first(m, shift(tate_object(j, m.frame()), -n));
    g.validate();
    return g;
}

DoubleComplex random_double_complex(Rng& rng, int size) {
    std::map<Bidegree, std::size_t> dims;
    // Basis vectors are (bidegree, local index); pieces are lists of arrows between them.
    auto add_vector = [&](Bidegree b) { return dims[b]++; };
    struct Arrow {
        Bidegree from;
        std::size_t i;
        Bidegree to;
        std::size_t j;
        Rational value;
    };
    std::vector<Arrow> arrows;

    // Tensor product of two complexes in normal form.
    const NormalForm a = random_form(rng, {0, size - 1, 1, 1}), b = random_form(rng, {0, size - 1, 1, 1});
    const Complex ca = a.complex(), cb = b.complex();
    std::map<Bidegree, std::size_t> base;
    for (int p = 0; p < size; ++p)
        for (int q = 0; q < size; ++q) {
            base[{p, q}] = dims[{p, q}];
            dims[{p, q}] += ca.dim(p) * cb.dim(q);
        }
    for (int p = 0; p < size; ++p)
        for (int q = 0; q < size; ++q)
            for (std::size_t x = 0; x < ca.dim(p); ++x)
                for (std::size_t y = 0; y < cb.dim(q); ++y) {
                    const std::size_t from = base[{p, q}] + x * cb.dim(q) + y;
                    if (p + 1 < size)
                        for (std::size_t x2 = 0; x2 < ca.dim(p + 1); ++x2)
                            if (ca.d(p)(x2, x) != 0)
                                arrows.push_back({{p, q}, from, {p + 1, q}, base[{p + 1, q}] + x2 * cb.dim(q) + y, ca.d(p)(x2, x)});
                    if (q + 1 < size)
                        for (std::size_t y2 = 0; y2 < cb.dim(q + 1); ++y2)
                            if (cb.d(q)(y2, y) != 0)
                                arrows.push_back({{p, q}, from, {p, q + 1}, base[{p, q + 1}] + x * cb.dim(q + 1) + y2,
                                                  (p % 2 == 0 ? 1 : -1) * cb.d(q)(y2, y)});
                }

    // Staircases x → c₁ ← y₁ → c₂ ← y₂ → ... with the corners c_k terminal;
    // x − y₁ + y₂ − ... links x to the last corner, so they carry d_r for r ≥ 2.
    const int stairs = uniform(rng, 0, 2);
    for (int s = 0; s < stairs; ++s) {
        int p = uniform(rng, 0, size - 1), q = uniform(rng, 0, size);
        const int steps = uniform(rng, 0, 2);
        const std::size_t x = add_vector({p, q});
        std::size_t corner = add_vector({p + 1, q});
        arrows.push_back({{p, q}, x, {p + 1, q}, corner, 1});
        for (int t = 0; t < steps; ++t) {
            const std::size_t y = add_vector({p + 1, q - 1});
            arrows.push_back({{p + 1, q - 1}, y, {p + 1, q}, corner, 1});
            const std::size_t next = add_vector({p + 2, q - 1});
            arrows.push_back({{p + 1, q - 1}, y, {p + 2, q - 1}, next, 1});
            p += 1;
            q -= 1;
            corner = next;
        }
    }

    std::map<Bidegree, Matrix> dh, dv, g, g_inv;
    for (auto& [bd, n] : dims) {
        g[bd] = random_invertible(rng, n);
        g_inv[bd] = inverse(g[bd]);
    }
    auto slot = [&](std::map<Bidegree, Matrix>& maps, Bidegree from, Bidegree to) -> Matrix& {
        auto it = maps.find(from);
        if (it == maps.end()) it = maps.emplace(from, Matrix(dims[to], dims[from])).first;
        return it->second;
    };
    for (auto& a : arrows) {
        const bool horizontal = a.to.first == a.from.first + 1;
        slot(horizontal ? dh : dv, a.from, a.to)(a.j, a.i) = a.value;
    }
    auto conj = [&](std::map<Bidegree, Matrix>& maps, int dp, int dq) {
        for (auto& [bd, m] : maps) m = g[{bd.first + dp, bd.second + dq}] * m * g_inv[bd];
    };
    conj(dh, 1, 0);
    conj(dv, 0, 1);
    DoubleComplex dc(dims, dh, dv);
    dc.validate();
    return dc;
}

}  // namespace synco
