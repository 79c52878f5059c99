#include "synco/complex.hpp"

#include <algorithm>

namespace synco {

namespace {

const Matrix& empty_matrix() {
    static const Matrix m;
    return m;
}

Complex build(int lo, int hi, const std::function<std::size_t(int)>& dim,
              const std::function<Matrix(int)>& diff) {
    if (hi < lo) return Complex();
    std::vector<std::size_t> dims;
    std::map<int, Matrix> d;
    for (int n = lo; n <= hi; ++n) dims.push_back(dim(n));
    for (int n = lo; n < hi; ++n) d[n] = diff(n);
    return Complex(lo, std::move(dims), d);
}

int sign(int k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace

// ---------------------------------------------------------------- Complex

Complex::Complex(int lo, std::vector<std::size_t> dims, const std::map<int, Matrix>& diffs) {
    const int hi = lo + static_cast<int>(dims.size()) - 1;
    auto raw_dim = [&](int n) -> std::size_t {
        return (n < lo || n > hi) ? 0 : dims[static_cast<std::size_t>(n - lo)];
    };
    for (const auto& [n, m] : diffs) {
        if (m.rows() != raw_dim(n + 1) || m.cols() != raw_dim(n))
            throw DimensionError("differential d^" + std::to_string(n) + " has shape " + std::to_string(m.rows()) +
                                 "x" + std::to_string(m.cols()) + ", expected " + std::to_string(raw_dim(n + 1)) +
                                 "x" + std::to_string(raw_dim(n)));
    }
    int first = lo, last = hi;
    while (first <= hi && raw_dim(first) == 0) ++first;
    while (last >= first && raw_dim(last) == 0) --last;
    if (last < first) return;
    lo_ = first;
    for (int n = first; n <= last; ++n) dims_.push_back(raw_dim(n));
    for (int n = first - 1; n <= last; ++n) {
        auto it = diffs.find(n);
        d_.push_back(it != diffs.end() ? it->second : Matrix(dim(n + 1), dim(n)));
    }
}

Complex Complex::concentrated(int degree, std::size_t dim) { return Complex(degree, {dim}); }

std::size_t Complex::dim(int n) const {
    if (dims_.empty() || n < lo_ || n > hi()) return 0;
    return dims_[static_cast<std::size_t>(n - lo_)];
}

const Matrix& Complex::d(int n) const {
    if (dims_.empty() || n < lo_ - 1 || n > hi()) return empty_matrix();
    return d_[static_cast<std::size_t>(n - lo_ + 1)];
}

std::size_t Complex::total_dim() const {
    std::size_t t = 0;
    for (auto x : dims_) t += x;
    return t;
}

void Complex::validate() const {
    for (int n = lo_; n < hi() - 1; ++n)
        if (!(d(n + 1) * d(n)).is_zero())
            throw ValidationError("d∘d ≠ 0 at degree " + std::to_string(n) + " (d^" + std::to_string(n + 1) +
                                  " d^" + std::to_string(n) + ")");
}

bool operator==(const Complex& a, const Complex& b) {
    return a.lo_ == b.lo_ && a.dims_ == b.dims_ && a.d_ == b.d_;
}

// ---------------------------------------------------------------- ChainMap

ChainMap::ChainMap(Complex source, Complex target, const std::map<int, Matrix>& components)
    : source_(std::move(source)), target_(std::move(target)) {
    const int lo = std::min(source_.lo(), target_.lo()), hi = std::max(source_.hi(), target_.hi());
    for (const auto& [n, m] : components)
        if (m.rows() != target_.dim(n) || m.cols() != source_.dim(n))
            throw DimensionError("chain map component in degree " + std::to_string(n) + " has the wrong shape");
    lo_ = source_.is_zero() ? target_.lo() : (target_.is_zero() ? source_.lo() : lo);
    const int top = source_.is_zero() ? target_.hi() : (target_.is_zero() ? source_.hi() : hi);
    for (int n = lo_; n <= top; ++n) {
        auto it = components.find(n);
        comp_.push_back(it != components.end() ? it->second : Matrix(target_.dim(n), source_.dim(n)));
    }
}

ChainMap ChainMap::identity(const Complex& c) {
    std::map<int, Matrix> comp;
    for (int n = c.lo(); n <= c.hi(); ++n) comp[n] = Matrix::identity(c.dim(n));
    return ChainMap(c, c, comp);
}

ChainMap ChainMap::zero(const Complex& source, const Complex& target) { return ChainMap(source, target); }

const Matrix& ChainMap::at(int n) const {
    if (n < lo_ || n - lo_ >= static_cast<int>(comp_.size())) return empty_matrix();
    return comp_[static_cast<std::size_t>(n - lo_)];
}

void ChainMap::validate() const {
    for (int n = lo_ - 1; n < lo_ + static_cast<int>(comp_.size()); ++n) {
        if (source_.dim(n) == 0 || target_.dim(n + 1) == 0) continue;
        if (target_.d(n) * at(n) != at(n + 1) * source_.d(n))
            throw ValidationError("chain map does not commute with d in degree " + std::to_string(n));
    }
}

ChainMap operator*(const ChainMap& g, const ChainMap& f) {
    if (!(f.target() == g.source())) throw DimensionError("composition: target/source mismatch");
    std::map<int, Matrix> comp;
    for (int n = f.source().lo(); n <= f.source().hi(); ++n)
        if (g.target().dim(n) > 0) comp[n] = g.at(n) * f.at(n);
    return ChainMap(f.source(), g.target(), comp);
}

ChainMap operator+(const ChainMap& a, const ChainMap& b) {
    if (!(a.source() == b.source()) || !(a.target() == b.target()))
        throw DimensionError("sum of chain maps with different source or target");
    std::map<int, Matrix> comp;
    for (int n = a.source().lo(); n <= a.source().hi(); ++n) comp[n] = a.at(n) + b.at(n);
    return ChainMap(a.source(), a.target(), comp);
}

ChainMap operator*(const Rational& s, const ChainMap& f) {
    std::map<int, Matrix> comp;
    for (int n = f.source().lo(); n <= f.source().hi(); ++n) comp[n] = s * f.at(n);
    return ChainMap(f.source(), f.target(), comp);
}

// ---------------------------------------------------------------- cohomology

Cohomology cohomology(const Complex& c, int n) {
    Cohomology h;
    h.degree = n;
    const std::size_t dim = c.dim(n);
    h.cycles = kernel_basis(c.d(n).rows() == 0 ? Matrix(0, dim) : c.d(n));
    h.boundaries = c.d(n - 1).cols() == 0 ? Matrix(dim, 0) : image_basis(c.d(n - 1));
    if (dim == 0) {
        h.representatives = Matrix(0, 0);
        h.projection = Matrix(0, 0);
        return h;
    }
    const std::size_t b = h.boundaries.cols();
    RowEchelon e = rref(hstack(h.boundaries, h.cycles));
    std::vector<std::size_t> pick;
    for (std::size_t col : e.pivots)
        if (col >= b) pick.push_back(col - b);
    h.representatives = h.cycles.select_columns(pick);
    h.dim = pick.size();
    Matrix partial = hstack(h.boundaries, h.representatives);
    RowEchelon e2 = rref(hstack(partial, Matrix::identity(dim)));
    std::vector<std::size_t> fill;
    for (std::size_t col : e2.pivots)
        if (col >= partial.cols()) fill.push_back(col - partial.cols());
    Matrix inv = inverse(hstack(partial, Matrix::identity(dim).select_columns(fill)));
    h.projection = inv.block(b, 0, h.dim, dim);
    return h;
}

std::size_t betti(const Complex& c, int n) {
    const std::size_t dim = c.dim(n);
    if (dim == 0) return 0;
    return dim - rank(c.d(n)) - rank(c.d(n - 1));
}

std::map<int, std::size_t> betti_table(const Complex& c) {
    std::map<int, std::size_t> t;
    for (int n = c.lo(); n <= c.hi(); ++n) t[n] = betti(c, n);
    return t;
}

bool is_acyclic(const Complex& c) {
    for (int n = c.lo(); n <= c.hi(); ++n)
        if (betti(c, n) != 0) return false;
    return true;
}

long euler_characteristic(const Complex& c) {
    long chi = 0;
    for (int n = c.lo(); n <= c.hi(); ++n) chi += sign(n) * static_cast<long>(c.dim(n));
    return chi;
}

Matrix induced_map(const ChainMap& f, int n, const Cohomology& hs, const Cohomology& ht) {
    if (hs.dim == 0 || ht.dim == 0) return Matrix(ht.dim, hs.dim);
    return ht.projection * (f.at(n) * hs.representatives);
}

Matrix induced_map(const ChainMap& f, int n) {
    return induced_map(f, n, cohomology(f.source(), n), cohomology(f.target(), n));
}

// ---------------------------------------------------------------- functors

Complex shift(const Complex& c, int k) {
    return build(
        c.lo() - k, c.hi() - k, [&](int n) { return c.dim(n + k); },
        [&](int n) { return Rational(sign(k)) * c.d(n + k); });
}

ChainMap shift(const ChainMap& f, int k) {
    std::map<int, Matrix> comp;
    const int lo = std::min(f.source().lo(), f.target().lo()), hi = std::max(f.source().hi(), f.target().hi());
    for (int n = lo; n <= hi; ++n) comp[n - k] = f.at(n);
    return ChainMap(shift(f.source(), k), shift(f.target(), k), comp);
}

Complex direct_sum(const Complex& a, const Complex& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return build(
        std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()), [&](int n) { return a.dim(n) + b.dim(n); },
        [&](int n) {
            Matrix m(a.dim(n + 1) + b.dim(n + 1), a.dim(n) + b.dim(n));
            m.set_block(0, 0, a.d(n));
            m.set_block(a.dim(n + 1), a.dim(n), b.d(n));
            return m;
        });
}

ChainMap direct_sum(const ChainMap& f, const ChainMap& g) {
    Complex s = direct_sum(f.source(), g.source()), t = direct_sum(f.target(), g.target());
    std::map<int, Matrix> comp;
    for (int n = std::min(s.lo(), t.lo()); n <= std::max(s.hi(), t.hi()); ++n) {
        Matrix m(t.dim(n), s.dim(n));
        m.set_block(0, 0, f.at(n));
        m.set_block(f.target().dim(n), f.source().dim(n), g.at(n));
        comp[n] = m;
    }
    return ChainMap(s, t, comp);
}

Cone cone(const ChainMap& f) {
    const Complex& s = f.source();
    const Complex& t = f.target();
    int lo = std::min(t.is_zero() ? s.lo() - 1 : t.lo(), s.is_zero() ? t.lo() : s.lo() - 1);
    int hi = std::max(t.is_zero() ? s.hi() - 1 : t.hi(), s.is_zero() ? t.hi() : s.hi() - 1);
    if (s.is_zero() && t.is_zero()) hi = lo - 1;
    Complex c = build(
        lo, hi, [&](int n) { return t.dim(n) + s.dim(n + 1); },
        [&](int n) {
            Matrix m(t.dim(n + 1) + s.dim(n + 2), t.dim(n) + s.dim(n + 1));
            m.set_block(0, 0, t.d(n));
            m.set_block(0, t.dim(n), f.at(n + 1));
            m.set_block(t.dim(n + 1), t.dim(n), -s.d(n + 1));
            return m;
        });
    std::map<int, Matrix> inc, proj;
    for (int n = lo; n <= hi; ++n) {
        Matrix i(c.dim(n), t.dim(n));
        i.set_block(0, 0, Matrix::identity(t.dim(n)));
        inc[n] = i;
        Matrix p(s.dim(n + 1), c.dim(n));
        p.set_block(0, t.dim(n), Matrix::identity(s.dim(n + 1)));
        proj[n] = p;
    }
    std::map<int, Matrix> inc_t, proj_s;
    for (int n = t.lo(); n <= t.hi(); ++n) inc_t[n] = inc.count(n) ? inc[n] : Matrix(c.dim(n), t.dim(n));
    Complex s1 = shift(s, 1);
    for (int n = s1.lo(); n <= s1.hi(); ++n) proj_s[n] = proj.count(n) ? proj[n] : Matrix(s1.dim(n), c.dim(n));
    return Cone{c, ChainMap(t, c, inc_t), ChainMap(c, s1, proj_s)};
}

std::size_t tensor_offset(const Complex& a, const Complex& b, int n, int p) {
    std::size_t off = 0;
    for (int q = a.lo(); q < p; ++q) off += a.dim(q) * b.dim(n - q);
    return off;
}

Vector tensor_element(const Complex& a, const Complex& b, int p, const Vector& x, int q, const Vector& y) {
    const int n = p + q;
    std::size_t total = 0;
    for (int r = a.lo(); r <= a.hi(); ++r) total += a.dim(r) * b.dim(n - r);
    Vector v(total);
    Vector xy = kron(x, y);
    const std::size_t off = tensor_offset(a, b, n, p);
    for (std::size_t i = 0; i < xy.size(); ++i) v[off + i] = xy[i];
    return v;
}

Complex tensor(const Complex& a, const Complex& b) {
    if (a.is_zero() || b.is_zero()) return Complex();
    auto dim = [&](int n) {
        std::size_t t = 0;
        for (int p = a.lo(); p <= a.hi(); ++p) t += a.dim(p) * b.dim(n - p);
        return t;
    };
    return build(a.lo() + b.lo(), a.hi() + b.hi(), dim, [&](int n) {
        Matrix m(dim(n + 1), dim(n));
        for (int p = a.lo(); p <= a.hi(); ++p) {
            const int q = n - p;
            if (a.dim(p) * b.dim(q) == 0) continue;
            const std::size_t col = tensor_offset(a, b, n, p);
            if (a.dim(p + 1) * b.dim(q) > 0)
                m.set_block(tensor_offset(a, b, n + 1, p + 1), col, kron(a.d(p), Matrix::identity(b.dim(q))));
            if (a.dim(p) * b.dim(q + 1) > 0)
                m.set_block(tensor_offset(a, b, n + 1, p), col,
                            Rational(sign(p)) * kron(Matrix::identity(a.dim(p)), b.d(q)));
        }
        return m;
    });
}

ChainMap tensor(const ChainMap& f, const ChainMap& g) {
    const Complex &a = f.source(), &b = g.source(), &a2 = f.target(), &b2 = g.target();
    Complex s = tensor(a, b), t = tensor(a2, b2);
    std::map<int, Matrix> comp;
    if (s.is_zero() || t.is_zero()) return ChainMap(s, t);
    for (int n = s.lo(); n <= s.hi(); ++n) {
        Matrix m(t.dim(n), s.dim(n));
        for (int p = std::min(a.lo(), a2.lo()); p <= std::max(a.hi(), a2.hi()); ++p) {
            const int q = n - p;
            if (a.dim(p) * b.dim(q) == 0 || a2.dim(p) * b2.dim(q) == 0) continue;
            m.set_block(tensor_offset(a2, b2, n, p), tensor_offset(a, b, n, p), kron(f.at(p), g.at(q)));
        }
        comp[n] = m;
    }
    return ChainMap(s, t, comp);
}

std::size_t hom_offset(const Complex& a, const Complex& b, int n, int q) {
    std::size_t off = 0;
    for (int r = a.lo(); r < q; ++r) off += b.dim(r + n) * a.dim(r);
    return off;
}

namespace {
std::size_t hom_dim(const Complex& a, const Complex& b, int n) {
    std::size_t t = 0;
    for (int q = a.lo(); q <= a.hi(); ++q) t += b.dim(q + n) * a.dim(q);
    return t;
}
}  // namespace

Complex hom_complex(const Complex& a, const Complex& b) {
    if (a.is_zero() || b.is_zero()) return Complex();
    return build(
        b.lo() - a.hi(), b.hi() - a.lo(), [&](int n) { return hom_dim(a, b, n); },
        [&](int n) {
            Matrix m(hom_dim(a, b, n + 1), hom_dim(a, b, n));
            for (int q = a.lo(); q <= a.hi(); ++q) {
                const std::size_t aq = a.dim(q);
                if (aq == 0) continue;
                // f_q ↦ d_b f_q lands in block (n+1, q)
                if (b.dim(q + n) > 0 && b.dim(q + n + 1) > 0)
                    m.set_block(hom_offset(a, b, n + 1, q), hom_offset(a, b, n, q),
                                kron(b.d(q + n), Matrix::identity(aq)));
                // f_{q+1} ↦ −(−1)^n f_{q+1} d_a^q lands in block (n+1, q)
                const std::size_t rows = b.dim(q + 1 + n);
                if (rows > 0 && a.dim(q + 1) > 0)
                    m.set_block(hom_offset(a, b, n + 1, q), hom_offset(a, b, n, q + 1),
                                Rational(-sign(n)) * kron(Matrix::identity(rows), a.d(q).transpose()));
            }
            return m;
        });
}

Vector hom_pack(const Complex& a, const Complex& b, int n, const std::function<Matrix(int)>& f) {
    Vector v(hom_dim(a, b, n));
    for (int q = a.lo(); q <= a.hi(); ++q) {
        const std::size_t r = b.dim(q + n), c = a.dim(q);
        if (r * c == 0) continue;
        Matrix m = f(q);
        if (m.rows() != r || m.cols() != c) throw DimensionError("hom_pack: block has the wrong shape");
        const std::size_t off = hom_offset(a, b, n, q);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) v[off + i * c + j] = m(i, j);
    }
    return v;
}

std::map<int, Matrix> hom_unpack(const Complex& a, const Complex& b, int n, const Vector& v) {
    if (v.size() != hom_dim(a, b, n)) throw DimensionError("hom_unpack: wrong vector length");
    std::map<int, Matrix> out;
    for (int q = a.lo(); q <= a.hi(); ++q) {
        const std::size_t r = b.dim(q + n), c = a.dim(q);
        Matrix m(r, c);
        const std::size_t off = hom_offset(a, b, n, q);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = v[off + i * c + j];
        out[q] = m;
    }
    return out;
}

ChainMap hom_post(const Complex& a, const ChainMap& g) {
    const Complex &b = g.source(), &b2 = g.target();
    Complex s = hom_complex(a, b), t = hom_complex(a, b2);
    if (s.is_zero() || t.is_zero()) return ChainMap(s, t);
    std::map<int, Matrix> comp;
    for (int n = s.lo(); n <= s.hi(); ++n) {
        Matrix m(t.dim(n), s.dim(n));
        for (int q = a.lo(); q <= a.hi(); ++q) {
            if (a.dim(q) * b.dim(q + n) == 0 || b2.dim(q + n) == 0) continue;
            m.set_block(hom_offset(a, b2, n, q), hom_offset(a, b, n, q),
                        kron(g.at(q + n), Matrix::identity(a.dim(q))));
        }
        comp[n] = m;
    }
    return ChainMap(s, t, comp);
}

ChainMap hom_pre(const ChainMap& h, const Complex& b) {
    const Complex &a2 = h.source(), &a = h.target();
    Complex s = hom_complex(a, b), t = hom_complex(a2, b);
    if (s.is_zero() || t.is_zero()) return ChainMap(s, t);
    std::map<int, Matrix> comp;
    for (int n = s.lo(); n <= s.hi(); ++n) {
        Matrix m(t.dim(n), s.dim(n));
        for (int q = std::min(a.lo(), a2.lo()); q <= std::max(a.hi(), a2.hi()); ++q) {
            const std::size_t rows = b.dim(q + n);
            if (rows == 0 || a.dim(q) == 0 || a2.dim(q) == 0) continue;
            m.set_block(hom_offset(a2, b, n, q), hom_offset(a, b, n, q),
                        kron(Matrix::identity(rows), h.at(q).transpose()));
        }
        comp[n] = m;
    }
    return ChainMap(s, t, comp);
}

bool is_quasi_iso(const ChainMap& f) { return is_acyclic(cone(f).complex); }

bool is_quasi_iso_by_cohomology(const ChainMap& f) {
    const Complex &s = f.source(), &t = f.target();
    const int lo = std::min(s.lo(), t.lo()), hi = std::max(s.hi(), t.hi());
    for (int n = lo; n <= hi; ++n) {
        Cohomology hs = cohomology(s, n), ht = cohomology(t, n);
        if (hs.dim != ht.dim) return false;
        if (hs.dim == 0) continue;
        if (rank(induced_map(f, n, hs, ht)) != hs.dim) return false;
    }
    return true;
}

Subcomplex subcomplex(const Complex& c, const std::map<int, Subspace>& spaces) {
    Subcomplex out;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        auto it = spaces.find(n);
        out.bases[n] = it == spaces.end() ? Matrix(c.dim(n), 0) : it->second.basis();
        if (out.bases[n].rows() != c.dim(n)) throw DimensionError("subcomplex: ambient mismatch in degree " + std::to_string(n));
    }
    auto basis = [&](int n) -> Matrix {
        auto it = out.bases.find(n);
        return it == out.bases.end() ? Matrix(c.dim(n), 0) : it->second;
    };
    out.complex = build(
        c.lo(), c.hi(), [&](int n) { return basis(n).cols(); },
        [&](int n) {
            Matrix img = c.d(n) * basis(n);
            Matrix target = basis(n + 1);
            if (img.cols() == 0) return Matrix(target.cols(), 0);
            if (target.cols() == 0) {
                if (!img.is_zero()) throw ValidationError("subcomplex is not stable under d in degree " + std::to_string(n));
                return Matrix(0, img.cols());
            }
            auto x = solve(target, img);
            if (!x) throw ValidationError("subcomplex is not stable under d in degree " + std::to_string(n));
            return *x;
        });
    std::map<int, Matrix> inc;
    for (int n = c.lo(); n <= c.hi(); ++n) inc[n] = basis(n);
    out.inclusion = ChainMap(out.complex, c, inc);
    return out;
}

QuotientComplex quotient_complex(const Complex& c, const std::map<int, Subspace>& sub) {
    QuotientComplex out;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        auto it = sub.find(n);
        out.pieces[n] = quotient(it == sub.end() ? Subspace::zero(c.dim(n)) : it->second);
    }
    auto piece = [&](int n) -> const Quotient* {
        auto it = out.pieces.find(n);
        return it == out.pieces.end() ? nullptr : &it->second;
    };
    out.complex = build(
        c.lo(), c.hi(), [&](int n) { return piece(n) ? piece(n)->dim() : 0; },
        [&](int n) {
            const Quotient *s = piece(n), *t = piece(n + 1);
            if (!s || !t) return Matrix(t ? t->dim() : 0, s ? s->dim() : 0);
            return t->projection * (c.d(n) * s->section);
        });
    std::map<int, Matrix> proj;
    for (auto& [n, q] : out.pieces) proj[n] = q.projection;
    out.projection = ChainMap(c, out.complex, proj);
    return out;
}

Subcomplex truncate_below_or_at(const Complex& c, int n) {
    std::map<int, Subspace> spaces;
    for (int k = c.lo(); k <= c.hi(); ++k) {
        if (k < n)
            spaces[k] = Subspace::whole(c.dim(k));
        else if (k == n)
            spaces[k] = Subspace(c.dim(k), kernel_basis(c.d(k)));
    }
    return subcomplex(c, spaces);
}

Truncation truncate_at_or_above(const Complex& c, int n) {
    Truncation out;
    out.coimage = quotient(Subspace(c.dim(n - 1), kernel_basis(c.d(n - 1))));
    out.complex = build(
        n - 1, std::max(c.hi(), n - 1), [&](int k) { return k == n - 1 ? out.coimage.dim() : c.dim(k); },
        [&](int k) { return k == n - 1 ? Matrix(c.d(k) * out.coimage.section) : c.d(k); });
    std::map<int, Matrix> proj;
    for (int k = out.complex.lo(); k <= out.complex.hi(); ++k)
        proj[k] = k == n - 1 ? out.coimage.projection : Matrix::identity(c.dim(k));
    out.projection = ChainMap(c, out.complex, proj);
    return out;
}

ChainMap truncate_map(const ChainMap& f, int n, Side side) {
    std::map<int, Matrix> comp;
    if (side == Side::AtMost) {
        Subcomplex s = truncate_below_or_at(f.source(), n), t = truncate_below_or_at(f.target(), n);
        for (auto& [k, basis] : s.bases) {
            if (t.complex.dim(k) == 0 || basis.cols() == 0) continue;
            auto x = solve(t.bases.at(k), f.at(k) * basis);
            if (!x) throw ValidationError("truncate_map: image leaves the truncation");
            comp[k] = *x;
        }
        return ChainMap(s.complex, t.complex, comp);
    }
    Truncation s = truncate_at_or_above(f.source(), n), t = truncate_at_or_above(f.target(), n);
    for (int k = std::min(s.complex.lo(), t.complex.lo()); k <= std::max(s.complex.hi(), t.complex.hi()); ++k) {
        if (s.complex.dim(k) == 0 || t.complex.dim(k) == 0) continue;
        comp[k] = k == n - 1 ? Matrix(t.coimage.projection * (f.at(k) * s.coimage.section)) : f.at(k);
    }
    return ChainMap(s.complex, t.complex, comp);
}

}  // namespace synco
