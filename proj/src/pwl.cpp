#include "maxpres/pwl.hpp"

#include <algorithm>

namespace maxpres {

namespace {

void sort_unique(std::vector<Rational>& xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

std::vector<Rational> abscissae(const PiecewiseLinear& f) {
    std::vector<Rational> out;
    out.reserve(f.points().size());
    for (const auto& p : f.points()) out.push_back(p.t);
    return out;
}

}  // namespace

PiecewiseLinear::PiecewiseLinear(std::vector<PwlPoint> points, Rational final_slope)
    : points_(std::move(points)), final_slope_(std::move(final_slope)) {
    if (points_.empty() || points_.front().t != 0 || points_.front().v != 0)
        throw InvalidFunction("pwl breakpoints must start at (0,0)");
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (points_[i].t <= points_[i - 1].t)
            throw InvalidFunction("pwl abscissae must be strictly increasing");
        if (points_[i].v < points_[i - 1].v)
            throw InvalidFunction("pwl values must be nondecreasing");
    }
    if (final_slope_ < 0) throw InvalidFunction("pwl final slope must be nonnegative");
}

PiecewiseLinear PiecewiseLinear::ray(const Rational& slope) {
    return PiecewiseLinear({PwlPoint{0, 0}}, slope);
}

Rational PiecewiseLinear::operator()(const Rational& t) const {
    const auto& l = last();
    if (t >= l.t) return l.v + final_slope_ * (t - l.t);
    auto it = std::upper_bound(points_.begin(), points_.end(), t,
                               [](const Rational& x, const PwlPoint& p) { return x < p.t; });
    const PwlPoint& hi = *it;
    const PwlPoint& lo = *(it - 1);
    return lo.v + (hi.v - lo.v) * (t - lo.t) / (hi.t - lo.t);
}

Rational PiecewiseLinear::segment_slope(std::size_t i) const {
    return (points_[i + 1].v - points_[i].v) / (points_[i + 1].t - points_[i].t);
}

PiecewiseLinear PiecewiseLinear::simplified() const {
    std::vector<PwlPoint> kept{points_.front()};
    for (std::size_t i = 1; i < points_.size(); ++i) {
        const Rational in = segment_slope(i - 1);
        const Rational out = i + 1 < points_.size() ? segment_slope(i) : final_slope_;
        if (in != out) kept.push_back(points_[i]);
    }
    return PiecewiseLinear(std::move(kept), final_slope_);
}

bool PiecewiseLinear::strictly_increasing() const {
    for (std::size_t i = 0; i + 1 < points_.size(); ++i)
        if (points_[i + 1].v <= points_[i].v) return false;
    return final_slope_ > 0;
}

Rational PiecewiseLinear::gain_bound() const {
    Rational bound = final_slope_;
    for (std::size_t i = 1; i < points_.size(); ++i) bound = max(bound, points_[i].v / points_[i].t);
    return bound;
}

std::optional<Rational> PiecewiseLinear::lower_inverse(const Rational& y) const {
    if (y <= 0) return Rational(0);
    for (std::size_t k = 1; k < points_.size(); ++k) {
        if (points_[k].v >= y) {
            const PwlPoint& lo = points_[k - 1];
            return lo.t + (y - lo.v) / segment_slope(k - 1);
        }
    }
    if (final_slope_ == 0) return std::nullopt;
    return last().t + (y - last().v) / final_slope_;
}

PiecewiseLinear upper_envelope(const PiecewiseLinear& f, const PiecewiseLinear& g) {
    std::vector<Rational> xs = abscissae(f);
    const auto gx = abscissae(g);
    xs.insert(xs.end(), gx.begin(), gx.end());
    sort_unique(xs);

    std::vector<Rational> crossings;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const Rational da = f(xs[i]) - g(xs[i]);
        const Rational db = f(xs[i + 1]) - g(xs[i + 1]);
        if ((da < 0 && db > 0) || (da > 0 && db < 0))
            crossings.push_back(xs[i] + da * (xs[i + 1] - xs[i]) / (da - db));
    }
    const Rational& tail = xs.back();
    const Rational dl = f(tail) - g(tail);
    const Rational ds = f.final_slope() - g.final_slope();
    if ((dl > 0 && ds < 0) || (dl < 0 && ds > 0)) crossings.push_back(tail - dl / ds);
    xs.insert(xs.end(), crossings.begin(), crossings.end());
    sort_unique(xs);

    std::vector<PwlPoint> pts;
    pts.reserve(xs.size());
    for (const auto& x : xs) pts.push_back({x, max(f(x), g(x))});
    const Rational dend = f(xs.back()) - g(xs.back());
    Rational slope = dend > 0   ? f.final_slope()
                     : dend < 0 ? g.final_slope()
                                : max(f.final_slope(), g.final_slope());
    return PiecewiseLinear(std::move(pts), std::move(slope)).simplified();
}

PiecewiseLinear compose(const PiecewiseLinear& outer, const PiecewiseLinear& inner) {
    std::vector<Rational> xs = abscissae(inner);
    const auto& ip = inner.points();
    for (std::size_t k = 1; k < outer.points().size(); ++k) {
        const Rational& u = outer.points()[k].t;
        for (std::size_t i = 0; i + 1 < ip.size(); ++i) {
            if (ip[i].v < u && u < ip[i + 1].v)
                xs.push_back(ip[i].t + (u - ip[i].v) / inner.segment_slope(i));
        }
        if (inner.final_slope() > 0 && u > inner.last().v)
            xs.push_back(inner.last().t + (u - inner.last().v) / inner.final_slope());
    }
    sort_unique(xs);

    std::vector<PwlPoint> pts;
    pts.reserve(xs.size());
    for (const auto& x : xs) pts.push_back({x, outer(inner(x))});
    return PiecewiseLinear(std::move(pts), outer.final_slope() * inner.final_slope()).simplified();
}

bool dominates(const PiecewiseLinear& f, const PiecewiseLinear& g) {
    std::vector<Rational> xs = abscissae(f);
    const auto gx = abscissae(g);
    xs.insert(xs.end(), gx.begin(), gx.end());
    sort_unique(xs);
    for (const auto& x : xs)
        if (f(x) < g(x)) return false;
    return f.final_slope() >= g.final_slope();
}

std::optional<Rational> identity_violation(const PiecewiseLinear& f) {
    const auto& pts = f.points();
    for (std::size_t k = 1; k < pts.size(); ++k)
        if (pts[k].v >= pts[k].t) return pts[k].t;
    const Rational& s = f.final_slope();
    if (pts.size() == 1) return s >= 1 ? std::optional<Rational>(1) : std::nullopt;
    if (s <= 1) return std::nullopt;
    const auto& l = f.last();
    return l.t + (l.t - l.v) / (s - 1);
}

}  // namespace maxpres
