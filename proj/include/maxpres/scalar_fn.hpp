#pragma once

// Symbolic nondecreasing functions on [0, inf) with f(0) = 0: the entries of
// a max-preserving matrix. Values are immutable and cheap to copy (shared
// tree nodes), so they can be evaluated from several threads at once.

#include "maxpres/pwl.hpp"
#include "maxpres/rational.hpp"

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace maxpres {

/// Exact evaluation would need an irrational root.
class IrrationalValue : public Error {
public:
    using Error::Error;
};

/// Inverse requested above the supremum of a bounded function.
class OutOfRange : public Error {
public:
    using Error::Error;
};

enum class FnKind { Zero, Identity, Linear, Power, Pwl, Compose, Max };

enum class FnClass { Zero, Kinf, NondecreasingOnly };

enum class Dominance { Yes, No, Unknown };

struct ContractionVerdict {
    enum class Status { Certified, Refuted, Uncertified };
    Status status = Status::Uncertified;
    /// Set when Refuted: a point t > 0 with f(t) >= t.
    std::optional<Rational> witness;

    bool certified() const { return status == Status::Certified; }
    bool refuted() const { return status == Status::Refuted; }
};

class ScalarFn {
public:
    /// The constant-zero function.
    ScalarFn();

    static ScalarFn zero();
    static ScalarFn identity();
    static ScalarFn linear(Rational gain);
    static ScalarFn power(Rational coef, Rational exponent);
    static ScalarFn pwl(PiecewiseLinear f);
    static ScalarFn pwl(std::vector<PwlPoint> points, Rational final_slope);

    // Structural constructors: keep the tree exactly as given. Use compose()
    // and max_of() for the normalizing versions.
    static ScalarFn make_compose(ScalarFn outer, ScalarFn inner);
    static ScalarFn make_max(std::vector<ScalarFn> branches);

    FnKind kind() const;
    bool is_zero() const { return kind() == FnKind::Zero; }
    bool is_normalized() const;

    // Variant accessors; calling the wrong one is a logic error.
    const Rational& gain() const;
    const Rational& coef() const;
    const Rational& exponent() const;
    const PiecewiseLinear& as_pwl() const;
    const ScalarFn& outer() const;
    const ScalarFn& inner() const;
    const std::vector<ScalarFn>& branches() const;

    /// Compact structural rendering, e.g. "max(lin(1/2),cmp(pow(1,2),id))".
    std::string describe() const;

    friend bool operator==(const ScalarFn& a, const ScalarFn& b);

    struct Node;

private:
    explicit ScalarFn(std::shared_ptr<const Node> node);
    static ScalarFn normalized_node(Node node);

    friend ScalarFn normalize(const ScalarFn& f);
    friend ScalarFn compose(const ScalarFn& outer, const ScalarFn& inner);
    friend ScalarFn max_of(const std::vector<ScalarFn>& fs);

    std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const ScalarFn& f);

/// Exact value at t >= 0. Throws IrrationalValue for powers without an
/// exact rational root at t.
Rational evaluate(const ScalarFn& f, const Rational& t);

/// Floating-point value; for display only, never used by certified checks.
double evaluate_approx(const ScalarFn& f, double t);

/// Canonical form: closed forms merged bottom-up, maxima flattened and pruned.
ScalarFn normalize(const ScalarFn& f);

/// t -> outer(inner(t)), normalized.
ScalarFn compose(const ScalarFn& outer, const ScalarFn& inner);

/// t -> max_i fs[i](t), normalized with provably dominated branches removed.
ScalarFn max_of(const std::vector<ScalarFn>& fs);

/// Yes only with an analytic proof that f >= g on [0, inf); never sampled.
Dominance dominates(const ScalarFn& f, const ScalarFn& g);

FnClass classify(const ScalarFn& f);

/// Decides f(t) < t for all t > 0 by analytic rules only.
ContractionVerdict below_identity(const ScalarFn& f);

/// sup_{t>0} f(t)/t when a linear bound is provable.
std::optional<Rational> gain_bound(const ScalarFn& f);

/// inf{t >= 0 : f(t) >= y}. Throws OutOfRange for y above a bounded f, and
/// IrrationalValue when the answer is not rational.
Rational generalized_inverse(const ScalarFn& f, const Rational& y);

/// Some T with f(T) > bound for unbounded f, chosen so f(T) is exactly computable.
std::optional<Rational> unboundedness_witness(const ScalarFn& f, const Rational& bound);

const char* to_string(FnClass c);
const char* to_string(ContractionVerdict::Status s);

}  // namespace maxpres
