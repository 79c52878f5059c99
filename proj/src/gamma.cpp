#include "synco/gamma.hpp"

#include <algorithm>

namespace synco {

namespace {

using DegreeMap = std::function<Matrix(int)>;

int sign(int k) { return (k % 2 == 0) ? 1 : -1; }

Matrix basis_at(const Subcomplex& sub, int n, std::size_t ambient) {
    auto it = sub.bases.find(n);
    return it == sub.bases.end() ? Matrix(ambient, 0) : it->second;
}

Complex sum3(const std::array<Complex, 3>& s) { return direct_sum(direct_sum(s[0], s[1]), s[2]); }

/// Expresses a map landing in the full Hom(M_dR, M_dR′) in Hom^F coordinates.
Matrix into_filtered(const Subcomplex& sub, const Complex& full, int n, const Matrix& m) {
    Matrix basis = basis_at(sub, n, full.dim(n));
    if (basis.cols() == 0 || m.cols() == 0) {
        if (!m.is_zero()) throw ValidationError("map leaves the filtered Hom complex in degree " + std::to_string(n));
        return Matrix(basis.cols(), m.cols());
    }
    auto x = solve(basis, m);
    if (!x) throw ValidationError("map leaves the filtered Hom complex in degree " + std::to_string(n));
    return *x;
}

/// Block-diagonal map of Γ complexes from per-slot maps (Γ₁ slots in degree n−1, Γ₀ slots in degree n).
ChainMap gamma_map(const GammaComplex& from, const GammaComplex& to, const std::array<DegreeMap, 3>& g0,
                   const std::array<DegreeMap, 3>& g1) {
    std::map<int, Matrix> comp;
    const Complex &s = from.complex, &t = to.complex;
    for (int n = std::min(s.lo(), t.lo()); n <= std::max(s.hi(), t.hi()); ++n) {
        if (s.dim(n) == 0 || t.dim(n) == 0) continue;
        Matrix m(t.dim(n), s.dim(n));
        for (int k = 0; k < 3; ++k) {
            if (from.slots1[k].dim(n - 1) > 0 && to.slots1[k].dim(n - 1) > 0)
                m.set_block(to.offset1(n, k), from.offset1(n, k), g1[k](n - 1));
            if (from.slots0[k].dim(n) > 0 && to.slots0[k].dim(n) > 0)
                m.set_block(to.offset0(n, k), from.offset0(n, k), g0[k](n));
        }
        comp[n] = m;
    }
    return ChainMap(s, t, comp);
}

DegreeMap of(const ChainMap& f) {
    return [f](int n) { return f.at(n); };
}

/// x ↦ (y ↦ π(x ⊗ g y)) as a matrix Hom(N′, L)^a × M^a, for π: M ⊗ N → L and g: N′ → N.
Matrix pairing_block(const Complex& m, int a, const ChainMap& pi, const Complex& n, const ChainMap& g,
                     const Complex& l) {
    const Complex& np = g.source();
    Matrix out(0, 0);
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < m.dim(a); ++j) {
        Matrix e(m.dim(a), 1);
        e(j, 0) = 1;
        cols.push_back(hom_pack(np, l, a, [&](int q) {
            const std::size_t width = m.dim(a) * n.dim(q);
            if (width == 0 || l.dim(a + q) == 0) return Matrix(l.dim(a + q), np.dim(q));
            Matrix block = pi.at(a + q).block(0, tensor_offset(m, n, a + q, a), l.dim(a + q), width);
            return Matrix(block * kron(e, g.at(q)));
        }));
    }
    std::size_t rows = 0;
    for (int q = np.lo(); q <= np.hi(); ++q) rows += l.dim(a + q) * np.dim(q);
    return Matrix::from_columns(cols, rows);
}

}  // namespace

std::size_t GammaComplex::offset0(int n, int k) const {
    std::size_t off = gamma1.dim(n - 1);
    for (int j = 0; j < k; ++j) off += slots0[j].dim(n);
    return off;
}

std::size_t GammaComplex::offset1(int n, int k) const {
    std::size_t off = 0;
    for (int j = 0; j < k; ++j) off += slots1[j].dim(n - 1);
    return off;
}

GammaComplex gamma(const PHodgeComplex& m, const PHodgeComplex& m2) {
    if (!(m.frame() == m2.frame())) throw ValidationError("gamma: objects live over different frames");
    GammaComplex g;
    g.source = m;
    g.target = m2;
    const Complex &a0 = m.rig.complex(), &ak = m.k, &adr = m.dr.carrier();
    const Complex &b0 = m2.rig.complex(), &bk = m2.k, &bdr = m2.dr.carrier();
    g.hom_dr = hom_complex(adr, bdr);
    g.hom_dr_filtered = filtered_hom(m.dr, m2.dr);
    g.slots0 = {hom_complex(a0, b0), hom_complex(ak, bk), g.hom_dr_filtered.complex};
    g.slots1 = {hom_complex(a0, b0), hom_complex(a0, bk), hom_complex(adr, bk)};
    g.gamma0 = sum3(g.slots0);
    g.gamma1 = sum3(g.slots1);

    ChainMap post_phi = hom_post(a0, m2.rig.phi()), pre_phi = hom_pre(m.rig.phi(), b0);
    ChainMap post_c = hom_post(a0, m2.c), pre_c = hom_pre(m.c, bk);
    ChainMap pre_s = hom_pre(m.s, bk), post_s = hom_post(adr, m2.s);

    std::map<int, Matrix> psi;
    const int lo = std::min(g.gamma0.lo(), g.gamma1.lo()), hi = std::max(g.gamma0.hi(), g.gamma1.hi());
    for (int n = lo; n <= hi; ++n) {
        if (g.gamma0.dim(n) == 0 || g.gamma1.dim(n) == 0) continue;
        Matrix p(g.gamma1.dim(n), g.gamma0.dim(n));
        const std::size_t c0 = 0, c1 = g.slots0[0].dim(n), c2 = c1 + g.slots0[1].dim(n);
        const std::size_t r0 = 0, r1 = g.slots1[0].dim(n), r2 = r1 + g.slots1[1].dim(n);
        if (g.slots0[0].dim(n) > 0) {
            p.set_block(r0, c0, post_phi.at(n) - pre_phi.at(n));
            if (g.slots1[1].dim(n) > 0) p.set_block(r1, c0, post_c.at(n));
        }
        if (g.slots0[1].dim(n) > 0) {
            if (g.slots1[1].dim(n) > 0) p.set_block(r1, c1, -pre_c.at(n));
            if (g.slots1[2].dim(n) > 0) p.set_block(r2, c1, pre_s.at(n));
        }
        if (g.slots0[2].dim(n) > 0 && g.slots1[2].dim(n) > 0)
            p.set_block(r2, c2, -(post_s.at(n) * basis_at(g.hom_dr_filtered, n, g.hom_dr.dim(n))));
        psi[n] = p;
    }
    g.psi = ChainMap(g.gamma0, g.gamma1, psi);
    g.complex = shift(cone(g.psi).complex, -1);
    return g;
}

std::size_t ext(const PHodgeComplex& m, const PHodgeComplex& m2, int n) { return betti(gamma(m, m2).complex, n); }

std::map<int, std::size_t> ext_table(const PHodgeComplex& m, const PHodgeComplex& m2) {
    return betti_table(gamma(m, m2).complex);
}

ChainMap gamma_post(const GammaComplex& from, const GammaComplex& to, const PHMorphism& g) {
    const PHodgeComplex& m = from.source;
    const Complex &a0 = m.rig.complex(), &ak = m.k, &adr = m.dr.carrier();
    ChainMap dr_full = hom_post(adr, g.dr);
    DegreeMap dr = [&, dr_full](int n) {
        return into_filtered(to.hom_dr_filtered, to.hom_dr, n,
                             dr_full.at(n) * basis_at(from.hom_dr_filtered, n, from.hom_dr.dim(n)));
    };
    return gamma_map(from, to, {of(hom_post(a0, g.rig)), of(hom_post(ak, g.k)), dr},
                     {of(hom_post(a0, g.rig)), of(hom_post(a0, g.k)), of(hom_post(adr, g.k))});
}

ChainMap gamma_pre(const GammaComplex& from, const GammaComplex& to, const PHMorphism& g) {
    const PHodgeComplex& n2 = from.target;
    const Complex &b0 = n2.rig.complex(), &bk = n2.k, &bdr = n2.dr.carrier();
    ChainMap dr_full = hom_pre(g.dr, bdr);
    DegreeMap dr = [&, dr_full](int n) {
        return into_filtered(to.hom_dr_filtered, to.hom_dr, n,
                             dr_full.at(n) * basis_at(from.hom_dr_filtered, n, from.hom_dr.dim(n)));
    };
    return gamma_map(from, to, {of(hom_pre(g.rig, b0)), of(hom_pre(g.k, bk)), dr},
                     {of(hom_pre(g.rig, b0)), of(hom_pre(g.rig, bk)), of(hom_pre(g.dr, bk))});
}

InvarianceReport quasi_iso_invariance(const PHodgeComplex& m, const PHMorphism& g) {
    InvarianceReport r;
    r.morphism_is_quasi_iso = is_quasi_iso(g);
    GammaComplex from = gamma(m, g.source), to = gamma(m, g.target);
    ChainMap map = gamma_post(from, to, g);
    r.all_isomorphisms = true;
    const int lo = std::min(from.complex.lo(), to.complex.lo()), hi = std::max(from.complex.hi(), to.complex.hi());
    for (int n = lo; n <= hi; ++n) {
        Cohomology hs = cohomology(from.complex, n), ht = cohomology(to.complex, n);
        std::size_t rk = rank(induced_map(map, n, hs, ht));
        r.dims[n] = {hs.dim, ht.dim};
        r.ranks[n] = rk;
        if (hs.dim != ht.dim || rk != hs.dim) r.all_isomorphisms = false;
    }
    return r;
}

UnitGammaElement split_unit_element(const GammaComplex& g, int n, const Vector& v) {
    if (v.size() != g.complex.dim(n)) throw DimensionError("element has the wrong length for degree " + std::to_string(n));
    UnitGammaElement e;
    e.degree = n;
    for (int k = 0; k < 3; ++k) {
        const std::size_t o1 = g.offset1(n, k), o0 = g.offset0(n, k);
        e.z[k] = Vector(v.begin() + static_cast<long>(o1), v.begin() + static_cast<long>(o1 + g.slots1[k].dim(n - 1)));
        e.x[k] = Vector(v.begin() + static_cast<long>(o0), v.begin() + static_cast<long>(o0 + g.slots0[k].dim(n)));
    }
    Matrix basis = basis_at(g.hom_dr_filtered, n, g.hom_dr.dim(n));
    e.x[2] = basis.cols() == 0 ? Vector(g.hom_dr.dim(n)) : basis.apply(e.x[2]);
    return e;
}

Vector join_unit_element(const GammaComplex& g, const UnitGammaElement& e) {
    const int n = e.degree;
    Vector v(g.complex.dim(n));
    for (int k = 0; k < 3; ++k) {
        Vector x = e.x[k];
        if (k == 2) {
            Matrix basis = basis_at(g.hom_dr_filtered, n, g.hom_dr.dim(n));
            if (basis.cols() == 0) {
                if (!is_zero(x)) throw ValidationError("de Rham part lies outside F^0");
                x = Vector();
            } else {
                auto c = solve(basis, x);
                if (!c) throw ValidationError("de Rham part lies outside F^0");
                x = *c;
            }
        }
        if (e.z[k].size() != g.slots1[k].dim(n - 1) || x.size() != g.slots0[k].dim(n))
            throw DimensionError("slot sizes do not match the Gamma complex");
        std::copy(e.z[k].begin(), e.z[k].end(), v.begin() + static_cast<long>(g.offset1(n, k)));
        std::copy(x.begin(), x.end(), v.begin() + static_cast<long>(g.offset0(n, k)));
    }
    return v;
}

Vector cup(const GammaComplex& gm, int a, const Vector& u, const GammaComplex& gn, int b, const Vector& v,
           const GammaComplex& gmn, const Rational& alpha) {
    const PHodgeComplex &M = gm.target, &N = gn.target;
    UnitGammaElement U = split_unit_element(gm, a, u), V = split_unit_element(gn, b, v);
    auto A = [](const PHodgeComplex& X, int deg, const std::array<Vector, 3>& x) {
        return std::array<Vector, 3>{X.rig.phi().at(deg).apply(x[0]), X.c.at(deg).apply(x[0]), x[1]};
    };
    auto B = [](const PHodgeComplex& X, int deg, const std::array<Vector, 3>& x) {
        return std::array<Vector, 3>{x[0], x[1], X.s.at(deg).apply(x[2])};
    };
    auto mix = [](const Rational& t, const std::array<Vector, 3>& p, const std::array<Vector, 3>& q) {
        std::array<Vector, 3> r;
        for (int k = 0; k < 3; ++k) r[k] = t * p[k] + (Rational(1) - t) * q[k];
        return r;
    };
    const std::array<Vector, 3> e = mix(alpha, A(M, a, U.x), B(M, a, U.x));
    const std::array<Vector, 3> f = mix(alpha, B(N, b, V.x), A(N, b, V.x));
    const std::array<const Complex*, 3> ms{&M.rig.complex(), &M.k, &M.k}, ns{&N.rig.complex(), &N.k, &N.k};
    const std::array<const Complex*, 3> m0{&M.rig.complex(), &M.k, &M.dr.carrier()},
        n0{&N.rig.complex(), &N.k, &N.dr.carrier()};

    UnitGammaElement W;
    W.degree = a + b;
    for (int k = 0; k < 3; ++k) {
        W.x[k] = tensor_element(*m0[k], *n0[k], a, U.x[k], b, V.x[k]);
        Vector left = tensor_element(*ms[k], *ns[k], a, e[k], b - 1, V.z[k]);
        Vector right = tensor_element(*ms[k], *ns[k], a - 1, U.z[k], b, f[k]);
        W.z[k] = Rational(sign(a)) * left + right;
    }
    return join_unit_element(gmn, W);
}

ChainMap gamma_pairing_map(const GammaComplex& from, const GammaComplex& to, const PHMorphism& pi) {
    const PHodgeComplex &M = from.target, &N = to.source, &L = to.target;
    const Complex &m0 = M.rig.complex(), &mk = M.k, &mdr = M.dr.carrier();
    const Complex &n0 = N.rig.complex(), &nk = N.k, &ndr = N.dr.carrier();
    const Complex &l0 = L.rig.complex(), &lk = L.k, &ldr = L.dr.carrier();
    ChainMap id0 = ChainMap::identity(n0), idk = ChainMap::identity(nk), iddr = ChainMap::identity(ndr);
    std::array<DegreeMap, 3> alpha{
        [&](int n) { return pairing_block(m0, n, pi.rig, n0, id0, l0); },
        [&](int n) { return pairing_block(mk, n, pi.k, nk, idk, lk); },
        [&](int n) {
            Matrix full = pairing_block(mdr, n, pi.dr, ndr, iddr, ldr) *
                          basis_at(from.hom_dr_filtered, n, from.hom_dr.dim(n));
            return into_filtered(to.hom_dr_filtered, to.hom_dr, n, full);
        }};
    std::array<DegreeMap, 3> beta{
        [&](int n) { return pairing_block(m0, n, pi.rig, n0, N.rig.phi(), l0); },
        [&](int n) { return pairing_block(mk, n, pi.k, nk, N.c, lk); },
        [&](int n) { return pairing_block(mk, n, pi.k, nk, N.s, lk); }};
    return gamma_map(from, to, alpha, beta);
}

}  // namespace synco
