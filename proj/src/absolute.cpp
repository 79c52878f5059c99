#include "synco/absolute.hpp"

#include <algorithm>

namespace synco {

namespace {

Matrix basis_at(const Subcomplex& sub, int n, std::size_t ambient) {
    auto it = sub.bases.find(n);
    return it == sub.bases.end() ? Matrix(ambient, 0) : it->second;
}

void put(Matrix& m, std::size_t r, std::size_t c, const Matrix& b) {
    if (!b.empty()) m.set_block(r, c, b);
}

/// Cohomology of a direct sum, in the bases of the summands.
struct SplitCohomology {
    std::size_t dim = 0;
    Matrix representatives, projection;
};

SplitCohomology split(const Cohomology& a, const Cohomology& b) {
    return {a.dim + b.dim, block_diag({a.representatives, b.representatives}),
            block_diag({a.projection, b.projection})};
}

Matrix induced(const Cohomology& hs, const Matrix& f, const Cohomology& ht) {
    return ht.projection * (f * hs.representatives);
}

bool same_kernel_and_rank(const Matrix& a, const Matrix& b) {
    return rank(a) == rank(b) && Subspace(a.cols(), kernel_basis(a)) == Subspace(b.cols(), kernel_basis(b));
}

PHodgeComplex trace_target(int d, const CoefficientFrame& frame) { return shift(tate_object(-d, frame), -2 * d); }

/// Gram matrix H^n(A) × H^{2d−n}(B) → K of trace∘π on one realization.
Matrix gram(const Complex& a, const Complex& b, const ChainMap& pi, const ChainMap& trace, int n, int d) {
    Cohomology ha = cohomology(a, n), hb = cohomology(b, 2 * d - n);
    Matrix g(ha.dim, hb.dim);
    if (ha.dim == 0 || hb.dim == 0) return g;
    const Matrix form = trace.at(2 * d) * pi.at(2 * d);
    for (std::size_t r = 0; r < ha.dim; ++r)
        for (std::size_t c = 0; c < hb.dim; ++c) {
            Vector t = tensor_element(a, b, n, ha.representatives.col(r), 2 * d - n, hb.representatives.col(c));
            g(r, c) = form.apply(t)[0];
        }
    return g;
}

std::optional<std::string> nondegenerate(const std::string& what, const Complex& a, const Complex& b,
                                         const ChainMap& pi, const ChainMap& trace, int d) {
    const int lo = std::min(a.lo(), 2 * d - b.hi()), hi = std::max(a.hi(), 2 * d - b.lo());
    for (int n = lo; n <= hi; ++n) {
        Matrix g = gram(a, b, pi, trace, n, d);
        if (g.rows() != g.cols() || rank(g) != g.rows())
            return what + " pairing H^" + std::to_string(n) + " x H^" + std::to_string(2 * d - n) +
                   " is degenerate";
    }
    return std::nullopt;
}

struct DualityData {
    GammaComplex from, to;
    ChainMap map;
};

DualityData duality_data(const GeometricDatum& x, int i) {
    const CoefficientFrame& fr = x.rgamma.frame();
    PHodgeComplex m = twist(x.rgamma, i), n = twist(x.rgamma_c, x.d - i);
    PHodgeComplex l = shift(unit_object(fr), -2 * x.d);
    const PHMorphism &pi = *x.pairing, &t = *x.trace;
    PHMorphism paired{tensor(m, n), l, t.rig * pi.rig, t.dr * pi.dr, t.k * pi.k};
    GammaComplex from = gamma(unit_object(fr), m), to = gamma(n, l);
    ChainMap w = gamma_pairing_map(from, to, paired);
    return {std::move(from), std::move(to), std::move(w)};
}

void require_pairing(const GeometricDatum& x) {
    if (!x.pairing) throw PreconditionError("datum '" + x.name + "' carries no pairing");
}

}  // namespace

void GeometricDatum::validate() const {
    if (d < 0) throw ValidationError("relative dimension must be non-negative");
    rgamma.validate();
    rgamma_c.validate();
    if (!(rgamma.frame() == rgamma_c.frame())) throw ValidationError("RΓ and RΓ_c live over different frames");
    if (pairing) {
        const PHodgeComplex src = tensor(rgamma, rgamma_c);
        if (!(pairing->source.rig.complex() == src.rig.complex()) || !(pairing->source.k == src.k) ||
            !(pairing->source.dr.carrier() == src.dr.carrier()) || !(pairing->target.k == rgamma_c.k))
            throw ValidationError("pairing must run from RΓ ⊗ RΓ_c to RΓ_c");
        pairing->validate();
    }
    if (trace) {
        const PHodgeComplex tt = trace_target(d, rgamma.frame());
        if (!(trace->target.rig.complex() == tt.rig.complex()) || trace->target.rig.phi().at(2 * d) != tt.rig.phi().at(2 * d) ||
            !(trace->target.dr.filtration(2 * d) == tt.dr.filtration(2 * d)))
            throw ValidationError("trace must land in K(-d)[-2d]");
        trace->validate();
    }
    if (unit) {
        const std::array<const Complex*, 3> cs{&rgamma.rig.complex(), &rgamma.k, &rgamma.dr.carrier()};
        for (int k = 0; k < 3; ++k) {
            if ((*unit)[k].size() != cs[k]->dim(0)) throw DimensionError("unit has the wrong length");
            if (cs[k]->dim(1) > 0 && !is_zero(cs[k]->d(0).apply((*unit)[k])))
                throw ValidationError("unit is not a cocycle");
        }
    }
    if (c_quasi_iso && !(is_quasi_iso(rgamma.c) && is_quasi_iso(rgamma_c.c)))
        throw ValidationError("flag c-quasi-iso is set but c is not a quasi-isomorphism");
    if (s_quasi_iso && !(is_quasi_iso(rgamma.s) && is_quasi_iso(rgamma_c.s)))
        throw ValidationError("flag s-quasi-iso is set but s is not a quasi-isomorphism");
    if (phi_invertible && !(rgamma.rig.phi_invertible_on_cohomology() && rgamma_c.rig.phi_invertible_on_cohomology()))
        throw ValidationError("flag phi-invertible is set but φ is not invertible on cohomology");
}

UnitGamma unit_gamma(const PHodgeComplex& m, int n) {
    UnitGamma u;
    const Complex& m0 = m.rig.complex();
    u.filtered_dr = filtered_piece(m.dr, n);
    u.source = direct_sum(m0, u.filtered_dr.complex);
    u.target = direct_sum(m0, m.k);
    const Rational scale = power(Rational(m.frame().p), -n);
    std::map<int, Matrix> eta;
    for (int k = std::min(u.source.lo(), u.target.lo()); k <= std::max(u.source.hi(), u.target.hi()); ++k) {
        if (u.source.dim(k) == 0 || u.target.dim(k) == 0) continue;
        Matrix e(u.target.dim(k), u.source.dim(k));
        const std::size_t r0 = m0.dim(k);
        if (r0 > 0) put(e, 0, 0, scale * m.rig.phi().at(k) - Matrix::identity(r0));
        put(e, r0, 0, m.c.at(k));
        Matrix incl = basis_at(u.filtered_dr, k, m.dr.carrier().dim(k));
        if (incl.cols() > 0 && m.k.dim(k) > 0) put(e, r0, r0, -(m.s.at(k) * incl));
        eta[k] = e;
    }
    u.eta = ChainMap(u.source, u.target, eta);
    u.complex = shift(cone(u.eta).complex, -1);
    return u;
}

AbsoluteGroup abs_cohomology(const GeometricDatum& x, int i, int n) {
    Cohomology h = cohomology(unit_gamma(x.rgamma, i).complex, n);
    return {n, i, h.dim, h.representatives};
}

AbsoluteGroup abs_compact(const GeometricDatum& x, int i, int n) {
    Cohomology h = cohomology(unit_gamma(x.rgamma_c, i).complex, n);
    return {n, i, h.dim, h.representatives};
}

std::size_t abs_homology(const GeometricDatum& x, int i, int n) {
    return betti(gamma(x.rgamma_c, tate_object(-i, x.rgamma_c.frame())).complex, -n);
}

bool ExactSequence::all_exact() const {
    return std::all_of(exact.begin(), exact.end(), [](bool b) { return b; });
}

void check_exactness(ExactSequence& seq) {
    seq.exact.clear();
    for (std::size_t k = 0; k + 1 < seq.maps.size(); ++k) {
        const Matrix &f = seq.maps[k], &g = seq.maps[k + 1];
        const bool composite_zero = f.cols() == 0 || g.rows() == 0 || (g * f).is_zero();
        seq.exact.push_back(composite_zero && rank(f) + rank(g) == seq.terms[k + 1].dim);
    }
}

LesReport long_exact_sequence(const PHodgeComplex& m, int i, int lo, int hi, LesKind kind) {
    if (kind == LesKind::Specialization && !is_quasi_iso(m.c))
        throw PreconditionError("the sp form of the sequence needs c to be a quasi-isomorphism");
    if (kind == LesKind::Cospecialization && !is_quasi_iso(m.s))
        throw PreconditionError("the cosp form of the sequence needs s to be a quasi-isomorphism");
    UnitGamma u = unit_gamma(m, i);
    const Complex &m0 = m.rig.complex(), &dr = m.dr.carrier();
    const Rational scale = power(Rational(m.frame().p), -i), unscale = power(Rational(m.frame().p), i);
    LesReport rep;
    ExactSequence& seq = rep.sequence;
    const std::string tw = "(" + std::to_string(i) + ")";

    for (int k = lo; k <= hi; ++k) {
        const std::string deg = std::to_string(k);
        Cohomology hg = cohomology(u.complex, k), hg1 = cohomology(u.complex, k + 1);
        Cohomology h0 = cohomology(m0, k), hk = cohomology(m.k, k), hf = cohomology(u.filtered_dr.complex, k);
        SplitCohomology ha = split(h0, hf), hb = split(h0, hk);

        // Γ^k = B^{k−1} ⊕ A^k and Γ^{k+1} = B^k ⊕ A^{k+1}
        Matrix proj(u.source.dim(k), u.complex.dim(k));
        if (u.source.dim(k) > 0) proj.set_block(0, u.target.dim(k - 1), Matrix::identity(u.source.dim(k)));
        Matrix embed(u.complex.dim(k + 1), u.target.dim(k));
        if (u.target.dim(k) > 0) embed.set_block(0, 0, Matrix::identity(u.target.dim(k)));

        const Matrix phi = induced(h0, m.rig.phi().at(k), h0);
        const Matrix c = induced(h0, m.c.at(k), hk);
        const Matrix s = induced(hf, m.s.at(k) * basis_at(u.filtered_dr, k, dr.dim(k)), hk);
        auto eta_with = [&](const Matrix& top) {
            Matrix e(hb.dim, ha.dim);
            put(e, 0, 0, top);
            put(e, h0.dim, 0, c);
            put(e, h0.dim, h0.dim, -s);
            return e;
        };
        const Matrix id0 = Matrix::identity(h0.dim);
        Matrix eta = eta_with(scale * phi - id0);
        Matrix delta = hg1.projection * (embed * hb.representatives);
        if (!same_kernel_and_rank(eta, eta_with(phi - unscale * id0))) rep.normalizations_agree = false;

        std::string third = "H^" + deg + "(M0) + H^" + deg + "(MK)";
        if (kind != LesKind::Eta) {
            Matrix j, formula(hb.dim, ha.dim);
            put(formula, 0, 0, scale * phi - id0);
            if (kind == LesKind::Specialization) {
                j = block_diag({id0, c});
                Matrix sp = inverse(c) * s;
                put(formula, h0.dim, 0, id0);
                put(formula, h0.dim, h0.dim, -sp);
                third = "H^" + deg + "(M0) + H^" + deg + "(M0)";
            } else {
                Cohomology hdr = cohomology(dr, k);
                Matrix s_full = induced(hdr, m.s.at(k), hk);
                j = block_diag({id0, s_full});
                Matrix cosp = inverse(s_full) * c;
                Matrix incl = induced(hf, basis_at(u.filtered_dr, k, dr.dim(k)), hdr);
                put(formula, h0.dim, 0, cosp);
                put(formula, h0.dim, h0.dim, -incl);
                third = "H^" + deg + "(M0) + H^" + deg + "(MdR)";
            }
            eta = inverse(j) * eta;
            delta = delta * j;
            if (eta != formula) rep.formula_agrees = false;
        }
        seq.terms.push_back({"H^" + deg + "(Gamma" + tw + ")", hg.dim});
        seq.terms.push_back({"H^" + deg + "(M0) + H^" + deg + "(F^" + std::to_string(i) + " MdR)", ha.dim});
        seq.terms.push_back({third, hb.dim});
        seq.maps.push_back(ha.projection * (proj * hg.representatives));
        seq.maps.push_back(eta);
        seq.maps.push_back(delta);
        if (k == hi) seq.terms.push_back({"H^" + std::to_string(k + 1) + "(Gamma" + tw + ")", hg1.dim});
    }
    check_exactness(seq);
    return rep;
}

LesReport long_exact_sequence(const GeometricDatum& x, int i, int lo, int hi, LesKind kind, bool compact) {
    if (kind == LesKind::Specialization && !x.c_quasi_iso)
        throw PreconditionError("datum '" + x.name + "' is not flagged c-quasi-iso");
    if (kind == LesKind::Cospecialization && !x.s_quasi_iso)
        throw PreconditionError("datum '" + x.name + "' is not flagged s-quasi-iso");
    return long_exact_sequence(compact ? x.rgamma_c : x.rgamma, i, lo, hi, kind);
}

Vector cup_absolute(const GeometricDatum& x, int n, int i, const Vector& a, int m, int j, const Vector& b,
                    const Rational& alpha) {
    require_pairing(x);
    const PHodgeComplex unit = unit_object(x.rgamma.frame());
    const PHodgeComplex lm = twist(x.rgamma, i), ln = twist(x.rgamma_c, j), target = twist(x.rgamma_c, i + j);
    const PHodgeComplex mn = tensor(lm, ln);
    GammaComplex gm = gamma(unit, lm), gn = gamma(unit, ln), gmn = gamma(unit, mn), gt = gamma(unit, target);
    Cohomology ha = cohomology(gm.complex, n), hb = cohomology(gn.complex, m);
    if (a.size() != ha.dim || b.size() != hb.dim) throw DimensionError("class has the wrong length");
    Vector prod = cup(gm, n, ha.representatives.apply(a), gn, m, hb.representatives.apply(b), gmn, alpha);
    PHMorphism pi{mn, target, x.pairing->rig, x.pairing->dr, x.pairing->k};
    Vector image = gamma_post(gmn, gt, pi).at(n + m).apply(prod);
    return cohomology(gt.complex, n + m).projection.apply(image);
}

Vector unit_class(const GeometricDatum& x) {
    if (!x.unit) throw PreconditionError("datum '" + x.name + "' carries no unit");
    GammaComplex g = gamma(unit_object(x.rgamma.frame()), x.rgamma);
    UnitGammaElement e;
    e.degree = 0;
    for (int k = 0; k < 3; ++k) e.z[k] = Vector(g.slots1[k].dim(-1));
    e.x = *x.unit;
    return cohomology(g.complex, 0).projection.apply(join_unit_element(g, e));
}

std::optional<std::string> duality_precondition_failure(const GeometricDatum& x) {
    if (!x.pairing) return "no pairing";
    if (!x.trace) return "no trace";
    if (!x.phi_invertible) return "phi is not flagged invertible on cohomology";
    const PHMorphism &pi = *x.pairing, &t = *x.trace;
    if (rank(induced_map(t.rig, 2 * x.d)) != 1) return "trace is not an isomorphism on H^2d";
    if (auto f = nondegenerate("rigid", x.rgamma.rig.complex(), x.rgamma_c.rig.complex(), pi.rig, t.rig, x.d)) return f;
    if (auto f = nondegenerate("K", x.rgamma.k, x.rgamma_c.k, pi.k, t.k, x.d)) return f;
    if (auto f = nondegenerate("de Rham", x.rgamma.dr.carrier(), x.rgamma_c.dr.carrier(), pi.dr, t.dr, x.d)) return f;
    return std::nullopt;
}

DualityReport duality_check(const GeometricDatum& x, int i, int n) {
    DualityReport r;
    r.lhs = abs_cohomology(x, i, n).dim;
    r.rhs = abs_homology(x, x.d - i, 2 * x.d - n);
    if (auto f = duality_precondition_failure(x)) {
        r.failure = *f;
        return r;
    }
    r.preconditions_ok = true;
    DualityData dd = duality_data(x, i);
    r.witness = induced_map(dd.map, n);
    r.witness_rank = rank(r.witness);
    r.isomorphism = r.lhs == r.rhs && r.witness.rows() == r.witness.cols() && r.witness_rank == r.lhs;
    return r;
}

Matrix gysin(const ProperMap& f, int n, int i) {
    const GeometricDatum &X = f.source, &Y = f.target;
    for (const GeometricDatum* g : {&X, &Y})
        if (auto why = duality_precondition_failure(*g))
            throw PreconditionError("gysin: duality fails on '" + g->name + "': " + *why);
    const int c = Y.d - X.d;
    DualityData dx = duality_data(X, i), dy = duality_data(Y, i + c);
    Matrix to_x = induced_map(dx.map, n), to_y = induced_map(dy.map, n + 2 * c);
    if (to_y.rows() != to_y.cols() || rank(to_y) != to_y.rows())
        throw PreconditionError("gysin: duality on '" + Y.name + "' is not an isomorphism in this degree");

    // Γ(N, K[−2d]) is Γ(N, K) shifted by the even amount −2d, so the dual of
    // f* lands in the same complex that duality on Y uses, reindexed by 2c.
    PHMorphism pull = twist(f.pullback_c, X.d - i);
    GammaComplex mid = gamma(pull.source, dx.to.target);
    if (!(mid.complex == shift(dy.to.complex, 2 * c)))
        throw ValidationError("gysin: dual complexes of X and Y do not match up to the shift");
    Matrix dual = induced_map(gamma_pre(dx.to, mid, pull), n);
    return inverse(to_y) * dual * to_x;
}

}  // namespace synco
