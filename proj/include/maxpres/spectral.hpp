#pragma once

// Nonlinear left and right eigenvectors of a stable max-preserving map, built
// from its closure, and the Lyapunov functions they induce:
//
//   l(x) = w^T A*(x)            with l(Ax) < l(x) for x != 0,
//   r(t) = A*(t v)              with A(r(t)) < r(t) for t > 0,
//   V(x) = max_i r_i^{-1}(x_i)  (max-separable).

#include "maxpres/analysis.hpp"

#include <cstdint>
#include <random>

namespace maxpres {

enum class LeftMode { Sum, Max };

class LeftEigenfunctional {
public:
    /// Weights must be strictly positive; default is the all-ones vector.
    explicit LeftEigenfunctional(StableMap a, LeftMode mode = LeftMode::Sum);
    LeftEigenfunctional(StableMap a, NonnegVector weights, LeftMode mode = LeftMode::Sum);

    const StableMap& map() const { return a_; }
    const NonnegVector& weights() const { return weights_; }
    LeftMode mode() const { return mode_; }

    Rational operator()(const NonnegVector& x) const;

private:
    StableMap a_;
    NonnegVector weights_;
    LeftMode mode_;
};

struct LeftDescent {
    Rational before;
    Rational after;
    bool strict = false;
};

/// l(x) against l(Ax).
LeftDescent left_descent(const LeftEigenfunctional& l, const NonnegVector& x);

class RightEigenvector {
public:
    explicit RightEigenvector(StableMap a);
    RightEigenvector(StableMap a, NonnegVector direction);

    const StableMap& map() const { return a_; }
    const NonnegVector& direction() const { return direction_; }

    NonnegVector operator()(const Rational& t) const;

    /// r_i as symbolic functions t -> max_j a*_ij(t v_j).
    std::vector<ScalarFn> coordinate_functions() const;

private:
    StableMap a_;
    NonnegVector direction_;
};

struct RightDescent {
    NonnegVector ar;
    NonnegVector r;
    OrderRelation relation;
};

/// A(r(t)) against r(t); t must be positive.
RightDescent right_descent(const RightEigenvector& r, const Rational& t);

/// V(x) = max_i r_i^{-1}(x_i) with the lower generalized inverse.
class MaxSeparableLyapunov {
public:
    explicit MaxSeparableLyapunov(const RightEigenvector& r);

    Rational operator()(const NonnegVector& x) const;
    const std::vector<ScalarFn>& components() const { return components_; }

private:
    std::vector<ScalarFn> components_;
};

Rational max_separable_lyapunov(const RightEigenvector& r, const NonnegVector& x);

enum class CertificateMode { LeftSum, LeftMax, MaxSeparable };

struct DescentSample {
    NonnegVector x;
    Rational before;
    Rational after;
};

struct DescentCertificate {
    CertificateMode mode = CertificateMode::LeftSum;
    std::uint64_t seed = 0;
    std::vector<DescentSample> samples;
    /// after < before at every sample.
    bool all_strict = false;
    /// after <= before at every sample.
    bool all_weak = false;
};

/// Draws a strictly positive vector with coordinates p/q, p and q uniform
/// in [1, 1000], taking 1 + (raw % 1000) from consecutive mt19937_64 outputs
/// (numerator first, coordinate by coordinate).
NonnegVector draw_positive_vector(std::mt19937_64& rng, std::size_t n);

/// Samples the chosen Lyapunov function at sample_count seeded positive
/// vectors. A non-strict LeftSum sample contradicts the strict descent
/// property and raises std::logic_error.
DescentCertificate build_descent_certificate(const MpMap& a, CertificateMode mode,
                                             std::size_t sample_count, std::uint64_t seed);

const char* to_string(CertificateMode m);
const char* to_string(LeftMode m);

}  // namespace maxpres
