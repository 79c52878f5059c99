#include "synco/phc.hpp"

#include <algorithm>

namespace synco {

namespace {

bool same_components(const ChainMap& a, const ChainMap& b, int* bad_degree = nullptr) {
    const int lo = std::min({a.source().lo(), a.target().lo(), b.source().lo(), b.target().lo()});
    const int hi = std::max({a.source().hi(), a.target().hi(), b.source().hi(), b.target().hi()});
    for (int n = lo; n <= hi; ++n) {
        if (a.source().dim(n) == 0 || a.target().dim(n) == 0) continue;
        if (a.at(n) != b.at(n)) {
            if (bad_degree) *bad_degree = n;
            return false;
        }
    }
    return true;
}

void require_square(const ChainMap& lhs, const ChainMap& rhs, const std::string& what) {
    int n = 0;
    if (!same_components(lhs, rhs, &n)) throw ValidationError(what + " does not commute in degree " + std::to_string(n));
}

/// The map between cones induced by compatible maps on targets and sources.
ChainMap cone_map(const Complex& from, const Complex& to, const ChainMap& on_target, const ChainMap& on_source) {
    std::map<int, Matrix> comp;
    for (int n = std::min(from.lo(), to.lo()); n <= std::max(from.hi(), to.hi()); ++n) {
        if (from.dim(n) == 0 || to.dim(n) == 0) continue;
        comp[n] = block_diag({on_target.at(n), on_source.at(n + 1)});
    }
    return ChainMap(from, to, comp);
}

std::map<int, Matrix> components(const ChainMap& f) {
    std::map<int, Matrix> comp;
    for (int n = std::min(f.source().lo(), f.target().lo()); n <= std::max(f.source().hi(), f.target().hi()); ++n)
        comp[n] = f.at(n);
    return comp;
}

}  // namespace

void PHodgeComplex::validate() const {
    rig.validate();
    dr.validate();
    k.validate();
    if (!(c.source() == rig.complex()) || !(c.target() == k))
        throw ValidationError("comparison map c does not run from M_rig to M_K");
    if (!(s.source() == dr.carrier()) || !(s.target() == k))
        throw ValidationError("comparison map s does not run from M_dR to M_K");
    try {
        c.validate();
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("c: ") + e.what());
    }
    try {
        s.validate();
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("s: ") + e.what());
    }
}

void PHMorphism::validate() const {
    if (!(rig.source() == source.rig.complex()) || !(rig.target() == target.rig.complex()))
        throw DimensionError("f_rig does not match the rigid components");
    if (!(dr.source() == source.dr.carrier()) || !(dr.target() == target.dr.carrier()))
        throw DimensionError("f_dR does not match the de Rham components");
    if (!(k.source() == source.k) || !(k.target() == target.k))
        throw DimensionError("f_K does not match the K components");
    rig.validate();
    k.validate();
    dr_filtered().validate();
    require_square(target.rig.phi() * rig, rig * source.rig.phi(), "Frobenius square (f_rig φ = φ′ f_rig)");
    require_square(target.c * rig, k * source.c, "c-square (c′ f_rig = f_K c)");
    require_square(target.s * dr, k * source.s, "s-square (s′ f_dR = f_K s)");
}

PHMorphism identity(const PHodgeComplex& m) {
    return {m, m, ChainMap::identity(m.rig.complex()), ChainMap::identity(m.dr.carrier()), ChainMap::identity(m.k)};
}

PHMorphism compose(const PHMorphism& g, const PHMorphism& f) {
    return {f.source, g.target, g.rig * f.rig, g.dr * f.dr, g.k * f.k};
}

PHodgeComplex tate_object(int n, const CoefficientFrame& frame) {
    Complex one = Complex::concentrated(0, 1);
    std::map<int, Matrix> phi{{0, Matrix::scalar(1, power(Rational(frame.p), -n))}};
    FilteredComplex dr(one, {{0, Filtration::trivial(1, -n)}});
    return {FrobeniusComplex(one, phi, frame), dr, one, ChainMap::identity(one), ChainMap::identity(one)};
}

PHodgeComplex unit_object(const CoefficientFrame& frame) { return tate_object(0, frame); }

PHodgeComplex tensor(const PHodgeComplex& a, const PHodgeComplex& b) {
    if (!(a.frame() == b.frame())) throw ValidationError("tensor product of objects over different frames");
    ChainMap phi = tensor(a.rig.phi(), b.rig.phi());
    FrobeniusComplex rig(phi.source(), components(phi), a.frame());
    return {rig, tensor(a.dr, b.dr), tensor(a.k, b.k), tensor(a.c, b.c), tensor(a.s, b.s)};
}

PHodgeComplex twist(const PHodgeComplex& m, int n) {
    return {twist_frobenius(m.rig, n), reindex(m.dr, n), m.k, m.c, m.s};
}

PHMorphism twist(const PHMorphism& f, int n) {
    return {twist(f.source, n), twist(f.target, n), f.rig, f.dr, f.k};
}

PHodgeComplex shift(const PHodgeComplex& m, int k) {
    ChainMap phi = shift(m.rig.phi(), k);
    return {FrobeniusComplex(phi.source(), components(phi), m.frame()), shift(m.dr, k), shift(m.k, k),
            shift(m.c, k), shift(m.s, k)};
}

PHodgeComplex direct_sum(const PHodgeComplex& a, const PHodgeComplex& b) {
    ChainMap phi = direct_sum(a.rig.phi(), b.rig.phi());
    return {FrobeniusComplex(phi.source(), components(phi), a.frame()), direct_sum(a.dr, b.dr),
            direct_sum(a.k, b.k), direct_sum(a.c, b.c), direct_sum(a.s, b.s)};
}

PHodgeComplex cone(const PHMorphism& f) {
    Complex rig = cone(f.rig).complex;
    Complex k = cone(f.k).complex;
    FilteredComplex dr = cone(f.dr_filtered());
    ChainMap phi = cone_map(rig, rig, f.target.rig.phi(), f.source.rig.phi());
    return {FrobeniusComplex(rig, components(phi), f.source.frame()), dr, k,
            cone_map(rig, k, f.target.c, f.source.c), cone_map(dr.carrier(), k, f.target.s, f.source.s)};
}

bool is_quasi_iso(const PHMorphism& f) {
    return is_quasi_iso(f.rig) && is_quasi_iso(f.k) && is_filtered_quasi_iso(f.dr_filtered());
}

bool is_acyclic(const PHodgeComplex& m) {
    if (!is_acyclic(m.rig.complex()) || !is_acyclic(m.k)) return false;
    for (auto& [i, g] : graded(m.dr))
        if (!is_acyclic(g)) return false;
    return true;
}

PHodgeComplex truncate(const PHodgeComplex& m, int n, Side side) {
    ChainMap phi = truncate_map(m.rig.phi(), n, side);
    FilteredTruncation dr = filtered_truncate(m.dr, n, side);
    ChainMap c = truncate_map(m.c, n, side), s = truncate_map(m.s, n, side);
    return {FrobeniusComplex(phi.source(), components(phi), m.frame()), dr.complex, c.target(), c, s};
}

QuasiPushout quasi_pushout(const ChainMap& f, const ChainMap& g) {
    if (!(f.source() == g.source())) throw DimensionError("quasi push-out: the two maps need a common source");
    const Complex &m2 = f.source(), &m1 = f.target(), &m3 = g.target();
    Complex t = direct_sum(m1, m3);
    std::map<int, Matrix> fg;
    for (int n = m2.lo(); n <= m2.hi(); ++n) fg[n] = vstack(f.at(n), -g.at(n));
    Cone c = cone(ChainMap(m2, t, fg));
    QuasiPushout out;
    out.q = c.complex;
    std::map<int, Matrix> i1, i3;
    for (int n = m1.lo(); n <= m1.hi(); ++n) {
        Matrix a(out.q.dim(n), m1.dim(n));
        a.set_block(0, 0, Matrix::identity(m1.dim(n)));
        i1[n] = a;
    }
    for (int n = m3.lo(); n <= m3.hi(); ++n) {
        Matrix b(out.q.dim(n), m3.dim(n));
        b.set_block(m1.dim(n), 0, Matrix::identity(m3.dim(n)));
        i3[n] = b;
    }
    for (int n = m2.lo(); n <= m2.hi(); ++n) {
        Matrix h(out.q.dim(n - 1), m2.dim(n));
        h.set_block(t.dim(n - 1), 0, Matrix::identity(m2.dim(n)));
        out.homotopy[n] = h;
    }
    out.from_first = ChainMap(m1, out.q, i1);
    out.from_third = ChainMap(m3, out.q, i3);
    return out;
}

QuasiPullback quasi_pullback(const ChainMap& f, const ChainMap& g) {
    if (!(f.target() == g.target())) throw DimensionError("quasi pull-back: the two maps need a common target");
    const Complex &m1 = f.source(), &m3 = g.source(), &m2 = f.target();
    Complex t = direct_sum(m1, m3);
    std::map<int, Matrix> fg;
    for (int n = t.lo(); n <= t.hi(); ++n) fg[n] = hstack(f.at(n), -g.at(n));
    Complex p = shift(cone(ChainMap(t, m2, fg)).complex, -1);
    QuasiPullback out;
    out.p = p;
    std::map<int, Matrix> p1, p3;
    for (int n = p.lo(); n <= p.hi(); ++n) {
        const std::size_t z = m2.dim(n - 1);
        if (m1.dim(n) > 0) {
            Matrix a(m1.dim(n), p.dim(n));
            a.set_block(0, z, Matrix::identity(m1.dim(n)));
            p1[n] = a;
        }
        if (m3.dim(n) > 0) {
            Matrix b(m3.dim(n), p.dim(n));
            b.set_block(0, z + m1.dim(n), Matrix::identity(m3.dim(n)));
            p3[n] = b;
        }
        Matrix k(z, p.dim(n));
        k.set_block(0, 0, -Matrix::identity(z));
        out.homotopy[n] = k;
    }
    out.to_first = ChainMap(p, m1, p1);
    out.to_third = ChainMap(p, m3, p3);
    return out;
}

// ---------------------------------------------------------------- zigzags

const Complex& Zigzag::node(std::size_t j) const {
    if (j == 0) return rig.complex();
    if (j + 1 == node_count()) return dr.carrier();
    return middle.at(j - 1);
}

void Zigzag::validate() const {
    if (arrows.size() + 1 != node_count() || arrows.size() % 2 != 0 || arrows.empty())
        throw ValidationError("zigzag needs an even, nonzero number of arrows joining consecutive nodes");
    if (!quasi_iso.empty() && quasi_iso.size() != arrows.size())
        throw ValidationError("zigzag has one quasi-iso flag per arrow");
    for (std::size_t j = 0; j < arrows.size(); ++j) {
        const bool rightward = j % 2 == 0;
        const Complex& from = rightward ? node(j) : node(j + 1);
        const Complex& to = rightward ? node(j + 1) : node(j);
        if (!(arrows[j].source() == from) || !(arrows[j].target() == to))
            throw ValidationError("zigzag arrow " + std::to_string(j) + " does not join its nodes in the right direction");
        arrows[j].validate();
        const bool flagged = !quasi_iso.empty() && quasi_iso[j];
        const bool interior_left = !rightward && j + 1 < arrows.size();
        if ((flagged || interior_left) && !is_quasi_iso(arrows[j]))
            throw PreconditionError("zigzag arrow " + std::to_string(j) +
                                    (flagged ? " is flagged as a quasi-isomorphism but is not one"
                                             : " points the wrong way and is not a quasi-isomorphism"));
    }
}

PHodgeComplex collapse_zigzag(const Zigzag& z) {
    z.validate();
    Complex cur = z.node(1);
    ChainMap left = z.arrows[0];
    ChainMap k = ChainMap::identity(cur);
    for (std::size_t j = 1; j + 1 < z.arrows.size(); j += 2) {
        QuasiPushout q = quasi_pushout(k * z.arrows[j], z.arrows[j + 1]);
        left = q.from_first * left;
        k = q.from_third;
        cur = q.q;
    }
    return {z.rig, z.dr, cur, left, k * z.arrows.back()};
}

void ZigzagMorphism::validate() const {
    if (nodes.size() != source.node_count() || nodes.size() != target.node_count())
        throw ValidationError("zigzag morphism needs one map per node");
    for (std::size_t j = 0; j < source.arrows.size(); ++j) {
        if (j % 2 == 0)
            require_square(target.arrows[j] * nodes[j], nodes[j + 1] * source.arrows[j],
                           "zigzag square " + std::to_string(j));
        else
            require_square(target.arrows[j] * nodes[j + 1], nodes[j] * source.arrows[j],
                           "zigzag square " + std::to_string(j));
    }
    require_square(target.rig.phi() * nodes.front(), nodes.front() * source.rig.phi(), "Frobenius square");
    FilteredMap{source.dr, target.dr, nodes.back()}.validate();
}

PHMorphism collapse_zigzag(const ZigzagMorphism& u) {
    u.validate();
    const Zigzag &zs = u.source, &zt = u.target;
    Complex cs = zs.node(1), ct = zt.node(1);
    ChainMap ks = ChainMap::identity(cs), kt = ChainMap::identity(ct);
    ChainMap on_cur = u.nodes[1];
    for (std::size_t j = 1; j + 1 < zs.arrows.size(); j += 2) {
        QuasiPushout qs = quasi_pushout(ks * zs.arrows[j], zs.arrows[j + 1]);
        QuasiPushout qt = quasi_pushout(kt * zt.arrows[j], zt.arrows[j + 1]);
        const ChainMap& u_next = u.nodes[j + 2];
        const ChainMap& u_mid = u.nodes[j + 1];
        std::map<int, Matrix> comp;
        for (int n = std::min(qs.q.lo(), qt.q.lo()); n <= std::max(qs.q.hi(), qt.q.hi()); ++n) {
            if (qs.q.dim(n) == 0 || qt.q.dim(n) == 0) continue;
            comp[n] = block_diag({on_cur.at(n), u_next.at(n), u_mid.at(n + 1)});
        }
        on_cur = ChainMap(qs.q, qt.q, comp);
        ks = qs.from_third;
        kt = qt.from_third;
        cs = qs.q;
        ct = qt.q;
    }
    PHodgeComplex s = collapse_zigzag(zs), t = collapse_zigzag(zt);
    return {s, t, u.nodes.front(), u.nodes.back(), on_cur};
}

Zigzag concatenate(const Zigzag& z, const Zigzag& w) {
    if (!(z.dr.carrier() == w.rig.complex()))
        throw DimensionError("zigzag concatenation: the junction nodes differ");
    Zigzag out;
    out.rig = z.rig;
    out.dr = w.dr;
    out.middle = z.middle;
    out.middle.push_back(z.dr.carrier());
    out.middle.insert(out.middle.end(), w.middle.begin(), w.middle.end());
    out.arrows = z.arrows;
    out.arrows.insert(out.arrows.end(), w.arrows.begin(), w.arrows.end());
    if (!z.quasi_iso.empty() || !w.quasi_iso.empty()) {
        auto flags = [](const Zigzag& x) {
            return x.quasi_iso.empty() ? std::vector<bool>(x.arrows.size(), false) : x.quasi_iso;
        };
        out.quasi_iso = flags(z);
        auto fw = flags(w);
        out.quasi_iso.insert(out.quasi_iso.end(), fw.begin(), fw.end());
    }
    return out;
}

}  // namespace synco
