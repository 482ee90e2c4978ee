#pragma once

// Continuous, nondecreasing piecewise-linear functions on [0, inf) through
// the origin. This is the fragment of the function algebra that is closed
// under composition and pointwise maximum with exact breakpoints.

#include "maxpres/rational.hpp"

#include <optional>
#include <vector>

namespace maxpres {

/// A function violates the structural invariants of its variant.
class InvalidFunction : public Error {
public:
    using Error::Error;
};

struct PwlPoint {
    Rational t;
    Rational v;

    friend bool operator==(const PwlPoint&, const PwlPoint&) = default;
};

class PiecewiseLinear {
public:
    /// Breakpoints must start at (0,0), have strictly increasing abscissae and
    /// nondecreasing values; the final slope applies past the last breakpoint.
    PiecewiseLinear(std::vector<PwlPoint> points, Rational final_slope);

    /// t -> slope * t as a single-breakpoint function.
    static PiecewiseLinear ray(const Rational& slope);

    const std::vector<PwlPoint>& points() const { return points_; }
    const Rational& final_slope() const { return final_slope_; }
    const PwlPoint& last() const { return points_.back(); }

    Rational operator()(const Rational& t) const;

    /// Slope of finite segment i (between points i and i+1).
    Rational segment_slope(std::size_t i) const;

    /// Drops breakpoints that lie on the line through their neighbours.
    PiecewiseLinear simplified() const;

    /// True when the function is t -> s*t for some s (a single ray).
    bool is_ray() const { return points_.size() == 1; }

    bool strictly_increasing() const;
    bool unbounded() const { return final_slope_ > 0; }

    /// sup over t > 0 of f(t)/t.
    Rational gain_bound() const;

    /// inf{t >= 0 : f(t) >= y}; empty when y exceeds the supremum.
    std::optional<Rational> lower_inverse(const Rational& y) const;

    friend bool operator==(const PiecewiseLinear&, const PiecewiseLinear&) = default;

private:
    std::vector<PwlPoint> points_;
    Rational final_slope_;
};

/// Pointwise maximum, with crossing points inserted exactly.
PiecewiseLinear upper_envelope(const PiecewiseLinear& f, const PiecewiseLinear& g);

/// outer(inner(t)) with the exact breakpoint set.
PiecewiseLinear compose(const PiecewiseLinear& outer, const PiecewiseLinear& inner);

/// f(t) >= g(t) for every t >= 0, decided exactly.
bool dominates(const PiecewiseLinear& f, const PiecewiseLinear& g);

/// Some t > 0 with f(t) >= t, or nothing if f(t) < t for all t > 0.
std::optional<Rational> identity_violation(const PiecewiseLinear& f);

}  // namespace maxpres
