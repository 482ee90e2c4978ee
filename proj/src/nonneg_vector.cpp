#include "maxpres/nonneg_vector.hpp"

#include <algorithm>

namespace maxpres {

NonnegVector::NonnegVector(std::vector<Rational> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw Error("vectors must have at least one coordinate");
    for (const auto& c : coords_)
        if (c < 0) throw Error("vector coordinate " + maxpres::to_string(c) + " is negative");
}

NonnegVector NonnegVector::zeros(std::size_t n) { return NonnegVector(std::vector<Rational>(n, 0)); }
NonnegVector NonnegVector::ones(std::size_t n) { return NonnegVector(std::vector<Rational>(n, 1)); }

NonnegVector NonnegVector::unit(std::size_t n, std::size_t i) {
    std::vector<Rational> c(n, 0);
    c.at(i) = 1;
    return NonnegVector(std::move(c));
}

NonnegVector NonnegVector::scaled(const Rational& t, const NonnegVector& direction) {
    std::vector<Rational> c;
    c.reserve(direction.size());
    for (const auto& d : direction.coords()) c.push_back(t * d);
    return NonnegVector(std::move(c));
}

bool NonnegVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool NonnegVector::is_positive() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c > 0; });
}

void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a) + " vs " +
                                std::to_string(b));
}

NonnegVector oplus(const NonnegVector& x, const NonnegVector& y) {
    require_same_size(x.size(), y.size(), "oplus");
    std::vector<Rational> c;
    c.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) c.push_back(max(x[i], y[i]));
    return NonnegVector(std::move(c));
}

OrderRelation compare_vectors(const NonnegVector& x, const NonnegVector& y) {
    require_same_size(x.size(), y.size(), "compare");
    bool all_strict = true;
    bool any_strict = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > y[i]) return OrderRelation::Incomparable;
        const bool s = x[i] < y[i];
        all_strict = all_strict && s;
        any_strict = any_strict || s;
    }
    if (all_strict) return OrderRelation::ComponentwiseStrict;
    return any_strict ? OrderRelation::StrictlyLess : OrderRelation::LessOrEqual;
}

bool leq(const NonnegVector& x, const NonnegVector& y) {
    return compare_vectors(x, y) != OrderRelation::Incomparable;
}

bool strictly_less(OrderRelation r) {
    return r == OrderRelation::StrictlyLess || r == OrderRelation::ComponentwiseStrict;
}

Rational max_norm(const NonnegVector& x) {
    Rational best = 0;
    for (const auto& c : x.coords()) best = max(best, c);
    return best;
}

std::string to_string(const NonnegVector& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ", ";
        s += to_string(x[i]);
    }
    return s + ")";
}

const char* to_string(OrderRelation r) {
    switch (r) {
        case OrderRelation::LessOrEqual: return "less-or-equal";
        case OrderRelation::StrictlyLess: return "strictly-less";
        case OrderRelation::ComponentwiseStrict: return "componentwise-strict";
        case OrderRelation::Incomparable: return "incomparable";
    }
    return "?";
}

}  // namespace maxpres
