#include "synco/spectral.hpp"

#include <algorithm>
#include <climits>

namespace synco {

namespace {

std::string at_bidegree(int p, int q) { return " at (" + std::to_string(p) + "," + std::to_string(q) + ")"; }

}  // namespace

DoubleComplex::DoubleComplex(std::map<Bidegree, std::size_t> dims, std::map<Bidegree, Matrix> dh,
                             std::map<Bidegree, Matrix> dv) {
    for (auto& [b, n] : dims)
        if (n > 0) dims_[b] = n;
    auto keep = [&](std::map<Bidegree, Matrix>& out, std::map<Bidegree, Matrix>& in, int dp, int dq, const char* name) {
        for (auto& [b, m] : in) {
            const std::size_t rows = dim(b.first + dp, b.second + dq), cols = dim(b.first, b.second);
            if (m.rows() != rows || m.cols() != cols) {
                if (m.is_zero() && (rows == 0 || cols == 0)) continue;
                throw DimensionError(std::string(name) + " has the wrong shape" + at_bidegree(b.first, b.second));
            }
            if (rows > 0 && cols > 0) out[b] = std::move(m);
        }
    };
    keep(dh_, dh, 1, 0, "d_h");
    keep(dv_, dv, 0, 1, "d_v");
}

std::size_t DoubleComplex::dim(int p, int q) const {
    auto it = dims_.find({p, q});
    return it == dims_.end() ? 0 : it->second;
}

Matrix DoubleComplex::dh(int p, int q) const {
    auto it = dh_.find({p, q});
    return it == dh_.end() ? Matrix(dim(p + 1, q), dim(p, q)) : it->second;
}

Matrix DoubleComplex::dv(int p, int q) const {
    auto it = dv_.find({p, q});
    return it == dv_.end() ? Matrix(dim(p, q + 1), dim(p, q)) : it->second;
}

std::array<int, 4> DoubleComplex::bounds() const {
    if (dims_.empty()) return {0, -1, 0, -1};
    std::array<int, 4> b{INT_MAX, INT_MIN, INT_MAX, INT_MIN};
    for (auto& [pq, n] : dims_) {
        b[0] = std::min(b[0], pq.first);
        b[1] = std::max(b[1], pq.first);
        b[2] = std::min(b[2], pq.second);
        b[3] = std::max(b[3], pq.second);
    }
    return b;
}

void DoubleComplex::validate() const {
    for (auto& [pq, n] : dims_) {
        const auto [p, q] = pq;
        if (!(dh(p + 1, q) * dh(p, q)).is_zero()) throw ValidationError("d_h d_h != 0" + at_bidegree(p, q));
        if (!(dv(p, q + 1) * dv(p, q)).is_zero()) throw ValidationError("d_v d_v != 0" + at_bidegree(p, q));
        if (!(dh(p, q + 1) * dv(p, q) + dv(p + 1, q) * dh(p, q)).is_zero())
            throw ValidationError("d_h and d_v do not anticommute" + at_bidegree(p, q));
    }
}

DoubleComplex DoubleComplex::transposed() const {
    std::map<Bidegree, std::size_t> dims;
    std::map<Bidegree, Matrix> dh, dv;
    for (auto& [b, n] : dims_) dims[{b.second, b.first}] = n;
    for (auto& [b, m] : dv_) dh[{b.second, b.first}] = m;
    for (auto& [b, m] : dh_) dv[{b.second, b.first}] = m;
    return DoubleComplex(dims, dh, dv);
}

std::size_t total_offset(const DoubleComplex& dc, int n, int p) {
    const auto b = dc.bounds();
    std::size_t off = 0;
    for (int a = b[0]; a < p; ++a) off += dc.dim(a, n - a);
    return off;
}

Complex total_complex(const DoubleComplex& dc) {
    const auto b = dc.bounds();
    if (b[1] < b[0]) return Complex();
    const int lo = b[0] + b[2], hi = b[1] + b[3];
    std::vector<std::size_t> dims;
    for (int n = lo; n <= hi; ++n) dims.push_back(total_offset(dc, n, b[1] + 1));
    std::map<int, Matrix> d;
    for (int n = lo; n < hi; ++n) {
        Matrix m(dims[n + 1 - lo], dims[n - lo]);
        for (int p = b[0]; p <= b[1]; ++p) {
            const int q = n - p;
            if (dc.dim(p, q) == 0) continue;
            const std::size_t col = total_offset(dc, n, p);
            if (dc.dim(p + 1, q) > 0) m.set_block(total_offset(dc, n + 1, p + 1), col, dc.dh(p, q));
            if (dc.dim(p, q + 1) > 0) m.set_block(total_offset(dc, n + 1, p), col, dc.dv(p, q));
        }
        d[n] = m;
    }
    return Complex(lo, dims, d);
}

std::size_t SpectralPage::dim(int p, int q) const {
    auto it = dims.find({p, q});
    return it == dims.end() ? 0 : it->second;
}

SpectralSequence spectral_sequence(const Complex& c, const std::function<Subspace(int, int)>& filtration, int p_lo,
                                   int p_hi) {
    SpectralSequence ss;
    if (c.is_zero()) return ss;
    auto F = [&](int n, int p) {
        if (p <= p_lo) return Subspace::whole(c.dim(n));
        if (p > p_hi) return Subspace::zero(c.dim(n));
        return filtration(n, p);
    };
    // Z_r^{p,n} = F^p ∩ d^{-1} F^{p+r}; Z_{-1} = F^p.
    auto Z = [&](int r, int p, int n) {
        Subspace f = F(n, p);
        if (r < 0 || c.dim(n + 1) == 0 || c.dim(n) == 0) return f;
        return intersect(f, preimage(c.d(n), F(n + 1, p + r)));
    };
    auto boundary = [&](int r, int p, int n) {
        Subspace b = Z(r - 1, p + 1, n);
        if (c.dim(n - 1) > 0 && c.dim(n) > 0) b = b + image(c.d(n - 1), Z(r - 1, p - r + 1, n - 1));
        return b;
    };

    const int last = p_hi - p_lo + 2;
    std::vector<std::map<Bidegree, Quotient>> pieces(static_cast<std::size_t>(last + 1));
    for (int r = 0; r <= last; ++r) {
        SpectralPage page;
        page.r = r;
        auto& q = pieces[static_cast<std::size_t>(r)];
        for (int n = c.lo(); n <= c.hi(); ++n)
            for (int p = p_lo; p <= p_hi; ++p) {
                Quotient e = quotient(Z(r, p, n), boundary(r, p, n));
                if (e.dim() == 0) continue;
                page.dims[{p, n - p}] = e.dim();
                q[{p, n - p}] = std::move(e);
            }
        for (auto& [b, e] : q) {
            const int p = b.first, n = b.first + b.second;
            auto t = q.find({p + r, n + 1 - (p + r)});
            if (t == q.end()) continue;
            Matrix dr = t->second.projection * (c.d(n) * e.section);
            if (!dr.is_zero()) page.d[b] = dr;
        }
        ss.pages.push_back(std::move(page));
    }
    ss.infinity = ss.pages.back();

    for (int r = 0; r < last; ++r) {
        const SpectralPage &e = ss.pages[static_cast<std::size_t>(r)], &next = ss.pages[static_cast<std::size_t>(r) + 1];
        auto out = [&](int p, int q) {
            auto it = e.d.find({p, q});
            return it == e.d.end() ? Matrix(e.dim(p + r, q - r + 1), e.dim(p, q)) : it->second;
        };
        for (int n = c.lo() - 1; n <= c.hi() + 1; ++n)
            for (int p = p_lo; p <= p_hi; ++p) {
                const int q = n - p;
                if (!(out(p + r, q - r + 1) * out(p, q)).is_zero()) ss.pages_consistent = false;
                const std::size_t ker = e.dim(p, q) - rank(out(p, q)), im = rank(out(p - r, q + r - 1));
                if (next.dim(p, q) != ker - im) ss.pages_consistent = false;
            }
    }
    ss.degenerates_at = last;
    while (ss.degenerates_at > 0 && ss.pages[static_cast<std::size_t>(ss.degenerates_at) - 1].d.empty())
        --ss.degenerates_at;

    ss.total_betti = betti_table(c);
    for (auto& [n, h] : ss.total_betti) {
        std::size_t sum = 0;
        for (int p = p_lo; p <= p_hi; ++p) sum += ss.infinity.dim(p, n - p);
        if (sum != h) ss.converges = false;
    }
    return ss;
}

SpectralSequence spectral_sequence(const DoubleComplex& dc, Direction direction) {
    if (direction == Direction::Rows) return spectral_sequence(dc.transposed(), Direction::Columns);
    const auto b = dc.bounds();
    Complex t = total_complex(dc);
    auto F = [&](int n, int p) {
        const std::size_t from = total_offset(dc, n, p), size = t.dim(n);
        Matrix m(size, size - from);
        for (std::size_t k = from; k < size; ++k) m(k, k - from) = 1;
        return Subspace(size, m);
    };
    return spectral_sequence(t, F, b[0], b[1]);
}

SpectralSequence spectral_sequence(const FilteredComplex& fc) {
    std::vector<int> levels = fc.levels();
    if (levels.empty()) levels = {0};
    return spectral_sequence(
        fc.carrier(), [&](int n, int p) { return fc.F(n, p); }, levels.front(), levels.back());
}

DoubleComplex collapse_double_complex(const Complex& c, int n_columns) {
    std::map<Bidegree, std::size_t> dims;
    std::map<Bidegree, Matrix> dh, dv;
    for (int n = -n_columns; n <= 0; ++n)
        for (int m = c.lo(); m <= c.hi(); ++m) {
            dims[{n, m}] = c.dim(m);
            if (c.dim(m + 1) > 0) dv[{n, m}] = (n % 2 == 0 ? Rational(1) : Rational(-1)) * c.d(m);
            if (n < 0 && n % 2 == 0) dh[{n, m}] = Matrix::identity(c.dim(m));
        }
    return DoubleComplex(dims, dh, dv);
}

CollapseReport simplicial_collapse(const Complex& c, int n_columns) {
    if (n_columns < 0 || n_columns % 2 != 0)
        throw PreconditionError("simplicial collapse needs an even, non-negative number of columns");
    CollapseReport rep;
    rep.columns = n_columns;
    DoubleComplex dc = collapse_double_complex(c, n_columns);
    dc.validate();
    rep.sequence = spectral_sequence(dc, Direction::Columns);

    if (rep.sequence.pages.size() > 1) {
        const SpectralPage& e1 = rep.sequence.pages[1];
        for (int n = -n_columns; n <= 0; ++n)
            for (int m = c.lo(); m <= c.hi(); ++m) {
                if (e1.dim(n, m) != betti(c, m)) rep.d1_pattern = false;
                if (e1.dim(n, m) == 0) continue;
                auto it = e1.d.find({n, m});
                const bool is_id = it != e1.d.end() && it->second == Matrix::identity(e1.dim(n, m));
                const bool should_be_id = n < 0 && n % 2 == 0;
                if (should_be_id ? !is_id : it != e1.d.end()) rep.d1_pattern = false;
            }
    }

    Complex t = total_complex(dc);
    std::map<int, Matrix> proj;
    for (int m = c.lo(); m <= c.hi(); ++m) {
        if (c.dim(m) == 0) continue;
        Matrix p(c.dim(m), t.dim(m));
        p.set_block(0, total_offset(dc, m, 0), Matrix::identity(c.dim(m)));
        proj[m] = p;
    }
    ChainMap to_column(t, c, proj);
    to_column.validate();
    rep.cohomology_matches = is_quasi_iso_by_cohomology(to_column);
    return rep;
}

}  // namespace synco
