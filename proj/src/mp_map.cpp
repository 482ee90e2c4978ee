#include "maxpres/mp_map.hpp"

namespace maxpres {

MpMap::MpMap(std::size_t n, std::vector<ScalarFn> entries) : n_(n), entries_(std::move(entries)) {
    if (n_ == 0) throw DimensionMismatch("maps need dimension n >= 1");
    if (entries_.size() != n_ * n_)
        throw DimensionMismatch("expected " + std::to_string(n_ * n_) + " entries, got " +
                                std::to_string(entries_.size()));
}

MpMap::MpMap(const std::vector<std::vector<ScalarFn>>& rows) : n_(rows.size()) {
    if (n_ == 0) throw DimensionMismatch("maps need dimension n >= 1");
    entries_.reserve(n_ * n_);
    for (const auto& row : rows) {
        require_same_size(row.size(), n_, "matrix row");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

MpMap MpMap::identity(std::size_t n) {
    std::vector<ScalarFn> e(n * n);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = ScalarFn::identity();
    return MpMap(n, std::move(e));
}

MpMap MpMap::zero(std::size_t n) { return MpMap(n, std::vector<ScalarFn>(n * n)); }

MpMap MpMap::from_gains(const std::vector<std::vector<Rational>>& gains) {
    std::vector<std::vector<ScalarFn>> rows;
    for (const auto& g : gains) {
        auto& row = rows.emplace_back();
        for (const auto& x : g) row.push_back(x == 0 ? ScalarFn::zero() : normalize(ScalarFn::linear(x)));
    }
    return MpMap(rows);
}

MpMap MpMap::normalized() const {
    std::vector<ScalarFn> e;
    e.reserve(entries_.size());
    for (const auto& f : entries_) e.push_back(normalize(f));
    return MpMap(n_, std::move(e));
}

NonnegVector apply(const MpMap& a, const NonnegVector& x) {
    require_same_size(x.size(), a.dim(), "apply");
    const std::size_t n = a.dim();
    std::vector<Rational> out(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const ScalarFn& f = a(i, j);
            if (f.is_zero() || x[j] == 0) continue;
            out[i] = max(out[i], evaluate(f, x[j]));
        }
    return NonnegVector(std::move(out));
}

MpMap compose_maps(const MpMap& a, const MpMap& b) {
    require_same_size(a.dim(), b.dim(), "compose");
    const std::size_t n = a.dim();
    std::vector<ScalarFn> e;
    e.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<ScalarFn> terms;
            for (std::size_t k = 0; k < n; ++k) {
                if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
                terms.push_back(compose(a(i, k), b(k, j)));
            }
            e.push_back(terms.empty() ? ScalarFn::zero() : max_of(terms));
        }
    return MpMap(n, std::move(e));
}

MpMap oplus_maps(const MpMap& a, const MpMap& b) {
    require_same_size(a.dim(), b.dim(), "oplus");
    std::vector<ScalarFn> e;
    e.reserve(a.entries().size());
    for (std::size_t k = 0; k < a.entries().size(); ++k) e.push_back(max_of({a.entries()[k], b.entries()[k]}));
    return MpMap(a.dim(), std::move(e));
}

MpMap power_map(const MpMap& a, unsigned k) {
    MpMap result = MpMap::identity(a.dim());
    for (unsigned i = 0; i < k; ++i) result = compose_maps(a, result);
    return k == 0 ? result : result.normalized();
}

bool structurally_equal(const MpMap& a, const MpMap& b) {
    return a.dim() == b.dim() && a.normalized() == b.normalized();
}

std::vector<NonnegVector> verification_grid(std::size_t n, std::size_t count) {
    std::vector<NonnegVector> grid;
    grid.reserve(count);
    auto push = [&](NonnegVector v) {
        if (grid.size() < count) grid.push_back(std::move(v));
    };
    push(NonnegVector::zeros(n));
    push(NonnegVector::ones(n));
    for (std::size_t i = 0; i < n; ++i) push(NonnegVector::unit(n, i));
    for (std::size_t m = 1; grid.size() < count; ++m) {
        std::vector<Rational> c;
        c.reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            const unsigned long num = (m * (2 * j + 3) + 7 * j) % 17;
            const unsigned long den = 1 + (m + j) % 5;
            c.emplace_back(Rational(num, den));
            c.back().canonicalize();
        }
        push(NonnegVector(std::move(c)));
    }
    return grid;
}

bool pointwise_equal(const MpMap& a, const MpMap& b, std::span<const NonnegVector> grid) {
    for (const auto& x : grid)
        if (apply(a, x) != apply(b, x)) return false;
    return true;
}

}  // namespace maxpres
