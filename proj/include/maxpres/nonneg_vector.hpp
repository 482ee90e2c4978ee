#pragma once

#include "maxpres/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace maxpres {

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A point of the closed positive orthant with exact coordinates.
class NonnegVector {
public:
    /// Throws Error on an empty list or a negative coordinate.
    explicit NonnegVector(std::vector<Rational> coords);

    static NonnegVector zeros(std::size_t n);
    static NonnegVector ones(std::size_t n);
    static NonnegVector unit(std::size_t n, std::size_t i);
    /// t * direction for t >= 0.
    static NonnegVector scaled(const Rational& t, const NonnegVector& direction);

    std::size_t size() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    std::span<const Rational> coords() const { return coords_; }

    bool is_zero() const;
    /// Every coordinate strictly positive.
    bool is_positive() const;

    friend bool operator==(const NonnegVector&, const NonnegVector&) = default;

private:
    std::vector<Rational> coords_;
};

enum class OrderRelation { LessOrEqual, StrictlyLess, ComponentwiseStrict, Incomparable };

/// Component-wise maximum.
NonnegVector oplus(const NonnegVector& x, const NonnegVector& y);

/// Classifies x against y: ComponentwiseStrict (x << y) takes precedence over
/// StrictlyLess (x <= y, x != y), which takes precedence over LessOrEqual
/// (reported only for x == y).
OrderRelation compare_vectors(const NonnegVector& x, const NonnegVector& y);

/// x <= y component-wise.
bool leq(const NonnegVector& x, const NonnegVector& y);

/// x < y in the sense x <= y and x != y; holds for ComponentwiseStrict too.
bool strictly_less(OrderRelation r);

Rational max_norm(const NonnegVector& x);

std::string to_string(const NonnegVector& x);
const char* to_string(OrderRelation r);

void require_same_size(std::size_t a, std::size_t b, const char* what);

}  // namespace maxpres
