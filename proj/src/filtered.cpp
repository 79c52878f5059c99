#include "synco/filtered.hpp"

#include <algorithm>
#include <set>

namespace synco {

namespace {

std::vector<int> merge_levels(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

/// Places the columns of `basis` at rows [offset, offset+basis.rows()) of a total-row matrix.
Matrix embed_rows(const Matrix& basis, std::size_t offset, std::size_t total) {
    Matrix m(total, basis.cols());
    m.set_block(offset, 0, basis);
    return m;
}

struct Graded {
    Complex complex;
    std::map<int, Quotient> pieces;
};

Graded graded_data(const FilteredComplex& fc, int i) {
    const Complex& c = fc.carrier();
    Graded g;
    std::vector<std::size_t> dims;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        g.pieces[n] = quotient(fc.F(n, i), fc.F(n, i + 1));
        dims.push_back(g.pieces[n].dim());
    }
    std::map<int, Matrix> d;
    for (int n = c.lo(); n < c.hi(); ++n)
        d[n] = g.pieces[n + 1].projection * (c.d(n) * g.pieces[n].section);
    if (c.is_zero()) return g;
    g.complex = Complex(c.lo(), dims, d);
    return g;
}

}  // namespace

// ---------------------------------------------------------------- Filtration

Filtration::Filtration(std::size_t ambient_dim, std::vector<std::pair<int, Subspace>> steps) : ambient_(ambient_dim) {
    if (ambient_ == 0) return;
    std::sort(steps.begin(), steps.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t j = 0; j < steps.size(); ++j) {
        if (steps[j].second.ambient_dim() != ambient_) throw DimensionError("filtration step has the wrong ambient dimension");
        if (j > 0 && steps[j].first == steps[j - 1].first)
            throw ValidationError("filtration lists level " + std::to_string(steps[j].first) + " twice");
        if (j > 0 && !steps[j - 1].second.contains(steps[j].second))
            throw ValidationError("filtration is not descending at level " + std::to_string(steps[j].first));
    }
    if (steps.empty() || !steps.front().second.is_whole())
        throw ValidationError("filtration is not exhaustive: its lowest step is not the whole space");
    for (std::size_t j = 0; j < steps.size(); ++j) {
        if (j + 1 < steps.size() && steps[j].second.dim() == steps[j + 1].second.dim()) continue;
        steps_.push_back(steps[j]);
    }
    while (!steps_.empty() && steps_.back().second.is_zero()) steps_.pop_back();
}

Filtration Filtration::trivial(std::size_t ambient_dim, int level) {
    return Filtration(ambient_dim, {{level, Subspace::whole(ambient_dim)}});
}

Subspace Filtration::at(int i) const {
    for (const auto& [level, s] : steps_)
        if (level >= i) return s;
    return Subspace::zero(ambient_);
}

std::vector<int> Filtration::levels() const {
    std::vector<int> out;
    for (const auto& step : steps_) out.push_back(step.first);
    return out;
}

Filtration Filtration::reindexed(int k) const {
    Filtration f = *this;
    for (auto& step : f.steps_) step.first -= k;
    return f;
}

bool operator==(const Filtration& a, const Filtration& b) {
    if (a.ambient_ != b.ambient_ || a.steps_.size() != b.steps_.size()) return false;
    for (std::size_t j = 0; j < a.steps_.size(); ++j)
        if (a.steps_[j].first != b.steps_[j].first || a.steps_[j].second != b.steps_[j].second) return false;
    return true;
}

Filtration filtration_from(std::size_t ambient_dim, std::vector<int> levels, const std::function<Subspace(int)>& at) {
    if (ambient_dim == 0) return Filtration();
    levels = merge_levels(std::move(levels), {});
    std::vector<std::pair<int, Subspace>> steps;
    for (int i : levels) steps.emplace_back(i, at(i));
    return Filtration(ambient_dim, std::move(steps));
}

// ---------------------------------------------------------------- FilteredComplex

FilteredComplex::FilteredComplex(Complex carrier, std::map<int, Filtration> filtration) : carrier_(std::move(carrier)) {
    for (auto& [n, f] : filtration)
        if (f.ambient_dim() != carrier_.dim(n))
            throw DimensionError("filtration in degree " + std::to_string(n) + " has the wrong ambient dimension");
    for (int n = carrier_.lo(); n <= carrier_.hi(); ++n) {
        auto it = filtration.find(n);
        filt_[n] = it != filtration.end() ? it->second : Filtration::trivial(carrier_.dim(n));
    }
}

FilteredComplex FilteredComplex::trivial(const Complex& c, int level) {
    std::map<int, Filtration> f;
    for (int n = c.lo(); n <= c.hi(); ++n) f[n] = Filtration::trivial(c.dim(n), level);
    return FilteredComplex(c, f);
}

const Filtration& FilteredComplex::filtration(int n) const {
    static const Filtration empty;
    auto it = filt_.find(n);
    return it == filt_.end() ? empty : it->second;
}

std::vector<int> FilteredComplex::levels() const {
    std::vector<int> out;
    for (const auto& [n, f] : filt_) out = merge_levels(out, f.levels());
    return out;
}

void FilteredComplex::validate() const {
    carrier_.validate();
    const auto lv = levels();
    for (int n = carrier_.lo(); n < carrier_.hi(); ++n)
        for (int i : lv)
            if (!F(n + 1, i).contains(image(carrier_.d(n), F(n, i))))
                throw ValidationError("d^" + std::to_string(n) + " does not preserve F^" + std::to_string(i));
}

void FilteredMap::validate() const {
    map.validate();
    if (!(map.source() == source.carrier()) || !(map.target() == target.carrier()))
        throw DimensionError("filtered map: carriers do not match the chain map");
    const auto lv = merge_levels(source.levels(), target.levels());
    const Complex& s = source.carrier();
    for (int n = s.lo(); n <= s.hi(); ++n)
        for (int i : lv)
            if (!target.F(n, i).contains(image(map.at(n), source.F(n, i))))
                throw ValidationError("map does not preserve F^" + std::to_string(i) + " in degree " + std::to_string(n));
}

Subcomplex filtered_piece(const FilteredComplex& fc, int i) {
    std::map<int, Subspace> spaces;
    const Complex& c = fc.carrier();
    for (int n = c.lo(); n <= c.hi(); ++n) spaces[n] = fc.F(n, i);
    return subcomplex(c, spaces);
}

Complex graded_piece(const FilteredComplex& fc, int i) { return graded_data(fc, i).complex; }

std::map<int, Complex> graded(const FilteredComplex& fc) {
    std::map<int, Complex> out;
    for (int i : fc.levels()) out[i] = graded_piece(fc, i);
    return out;
}

ChainMap graded_map(const FilteredMap& f, int i) {
    Graded s = graded_data(f.source, i), t = graded_data(f.target, i);
    std::map<int, Matrix> comp;
    for (auto& [n, qs] : s.pieces) {
        auto it = t.pieces.find(n);
        if (it == t.pieces.end()) continue;
        comp[n] = it->second.projection * (f.map.at(n) * qs.section);
    }
    return ChainMap(s.complex, t.complex, comp);
}

bool is_strict_linear(const Matrix& f, const Filtration& source, const Filtration& target) {
    const Subspace im = image(f, Subspace::whole(f.cols()));
    for (int i : merge_levels(source.levels(), target.levels()))
        if (image(f, source.at(i)) != intersect(target.at(i), im)) return false;
    return true;
}

bool is_strict_map(const FilteredMap& f) {
    const Complex& s = f.source.carrier();
    for (int n = s.lo(); n <= s.hi(); ++n)
        if (!is_strict_linear(f.map.at(n), f.source.filtration(n), f.target.filtration(n))) return false;
    return true;
}

std::size_t e1_dimension(const FilteredComplex& fc, int n) {
    std::size_t total = 0;
    for (int i : fc.levels()) total += betti(graded_piece(fc, i), n);
    return total;
}

bool is_strict_complex(const FilteredComplex& fc) {
    const Complex& c = fc.carrier();
    for (int n = c.lo(); n < c.hi(); ++n)
        if (!is_strict_linear(c.d(n), fc.filtration(n), fc.filtration(n + 1))) return false;
    return true;
}

bool is_strict_complex_by_e1(const FilteredComplex& fc) {
    const Complex& c = fc.carrier();
    auto gr = graded(fc);
    for (int n = c.lo(); n <= c.hi(); ++n) {
        std::size_t e1 = 0;
        for (auto& [i, g] : gr) e1 += betti(g, n);
        if (e1 != betti(c, n)) return false;
    }
    return true;
}

FilteredTruncation filtered_truncate(const FilteredComplex& fc, int n, Side side) {
    const Complex& c = fc.carrier();
    std::map<int, Filtration> filt;
    if (side == Side::AtMost) {
        Subcomplex t = truncate_below_or_at(c, n);
        for (auto& [k, basis] : t.bases) {
            const Filtration& f = fc.filtration(k);
            filt[k] = filtration_from(basis.cols(), f.levels(), [&](int i) { return preimage(basis, f.at(i)); });
        }
        return {FilteredComplex(t.complex, filt), t.inclusion};
    }
    Truncation t = truncate_at_or_above(c, n);
    for (int k = t.complex.lo(); k <= t.complex.hi(); ++k) {
        const Filtration& f = fc.filtration(k);
        if (k == n - 1)
            filt[k] = filtration_from(t.coimage.dim(), f.levels(),
                                      [&](int i) { return image(t.coimage.projection, f.at(i)); });
        else
            filt[k] = f;
    }
    return {FilteredComplex(t.complex, filt), t.projection};
}

Filtration induced_on_cohomology(const FilteredComplex& fc, int n, const Cohomology& h) {
    const Filtration& f = fc.filtration(n);
    const Subspace cycles(fc.carrier().dim(n), h.cycles);
    return filtration_from(h.dim, f.levels(),
                           [&](int i) { return image(h.projection, intersect(f.at(i), cycles)); });
}

bool is_filtered_quasi_iso(const FilteredMap& f) {
    for (int i : merge_levels(f.source.levels(), f.target.levels()))
        if (!is_quasi_iso(graded_map(f, i))) return false;
    return true;
}

FilteredComplex shift(const FilteredComplex& fc, int k) {
    Complex c = shift(fc.carrier(), k);
    std::map<int, Filtration> filt;
    for (int n = c.lo(); n <= c.hi(); ++n) filt[n] = fc.filtration(n + k);
    return FilteredComplex(c, filt);
}

namespace {
Filtration direct_sum(const Filtration& a, const Filtration& b) {
    return filtration_from(a.ambient_dim() + b.ambient_dim(), merge_levels(a.levels(), b.levels()),
                           [&](int i) { return synco::direct_sum(a.at(i), b.at(i)); });
}
}  // namespace

FilteredComplex direct_sum(const FilteredComplex& a, const FilteredComplex& b) {
    Complex c = direct_sum(a.carrier(), b.carrier());
    std::map<int, Filtration> filt;
    for (int n = c.lo(); n <= c.hi(); ++n) filt[n] = direct_sum(a.filtration(n), b.filtration(n));
    return FilteredComplex(c, filt);
}

FilteredComplex tensor(const FilteredComplex& a, const FilteredComplex& b) {
    const Complex &ca = a.carrier(), &cb = b.carrier();
    Complex c = tensor(ca, cb);
    std::map<int, Filtration> filt;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        std::vector<int> levels;
        for (int p = ca.lo(); p <= ca.hi(); ++p) {
            if (ca.dim(p) * cb.dim(n - p) == 0) continue;
            for (int x : a.filtration(p).levels())
                for (int y : b.filtration(n - p).levels()) levels.push_back(x + y);
        }
        filt[n] = filtration_from(c.dim(n), levels, [&](int i) {
            Matrix span(c.dim(n), 0);
            for (int p = ca.lo(); p <= ca.hi(); ++p) {
                const int q = n - p;
                if (ca.dim(p) * cb.dim(q) == 0) continue;
                const std::size_t off = tensor_offset(ca, cb, n, p);
                for (int x : a.filtration(p).levels()) {
                    Subspace t = synco::tensor(a.F(p, x), b.F(q, i - x));
                    if (t.dim() > 0) span = hstack(span, embed_rows(t.basis(), off, c.dim(n)));
                }
            }
            return Subspace(c.dim(n), span);
        });
    }
    return FilteredComplex(c, filt);
}

FilteredComplex cone(const FilteredMap& f) {
    Cone k = cone(f.map);
    std::map<int, Filtration> filt;
    for (int n = k.complex.lo(); n <= k.complex.hi(); ++n)
        filt[n] = direct_sum(f.target.filtration(n), f.source.filtration(n + 1));
    return FilteredComplex(k.complex, filt);
}

FilteredComplex reindex(const FilteredComplex& fc, int k) {
    std::map<int, Filtration> filt;
    const Complex& c = fc.carrier();
    for (int n = c.lo(); n <= c.hi(); ++n) filt[n] = fc.filtration(n).reindexed(k);
    return FilteredComplex(c, filt);
}

Subcomplex filtered_hom(const FilteredComplex& a, const FilteredComplex& b) {
    const Complex &ca = a.carrier(), &cb = b.carrier();
    Complex h = hom_complex(ca, cb);
    std::map<int, Subspace> spaces;
    for (int n = h.lo(); n <= h.hi(); ++n) {
        Matrix constraints(0, h.dim(n));
        for (int q = ca.lo(); q <= ca.hi(); ++q) {
            const std::size_t rows = cb.dim(q + n), cols = ca.dim(q);
            if (rows * cols == 0) continue;
            const std::size_t off = hom_offset(ca, cb, n, q);
            for (int i : merge_levels(a.filtration(q).levels(), b.filtration(q + n).levels())) {
                Subspace src = a.F(q, i);
                if (src.dim() == 0) continue;
                Quotient tgt = quotient(b.F(q + n, i));
                if (tgt.dim() == 0) continue;
                // vec(P f B) = (P ⊗ Bᵀ) vec f
                Matrix block = kron(tgt.projection, src.basis().transpose());
                Matrix rowsm(block.rows(), h.dim(n));
                rowsm.set_block(0, off, block);
                constraints = vstack(constraints, rowsm);
            }
        }
        spaces[n] = Subspace(h.dim(n), constraints.rows() == 0 ? Matrix::identity(h.dim(n)) : kernel_basis(constraints));
    }
    return subcomplex(h, spaces);
}

}  // namespace synco
