#pragma once

// Stability certification of max-preserving maps (cycle contraction test,
// trajectory test, fixed-ray witness search) and the closure
// A* = id (+) A (+) A^2 (+) ... together with what it buys: the descent
// identity A A* = A* A < A* and the maximal solution of x <= Ax (+) b.

#include "maxpres/mp_map.hpp"

#include <optional>
#include <vector>

namespace maxpres {

/// The closure was requested for a map that is not certified stable.
class NotStable : public Error {
public:
    using Error::Error;
};

/// A simple cycle, listed in traversal order i1 -> i2 -> ... -> ik -> i1
/// (0-based). Edge j -> i carries a_ij, so the weight is
/// a_{i1 ik} o ... o a_{i3 i2} o a_{i2 i1}.
struct Cycle {
    std::vector<std::size_t> nodes;
    ScalarFn weight;
};

struct CycleVerdict {
    Cycle cycle;
    ContractionVerdict verdict;
};

enum class StabilityVerdict { Stable, Unstable, Uncertified };

struct StabilityReport {
    StabilityVerdict verdict = StabilityVerdict::Uncertified;
    std::vector<CycleVerdict> cycles;
    /// Present exactly when Unstable: x != 0 with Ax >= x.
    std::optional<NonnegVector> witness;
};

/// Johnson-style enumeration over the graph with an edge j -> i whenever a_ij != 0.
std::vector<Cycle> enumerate_simple_cycles(const MpMap& a);

StabilityReport check_stability(const MpMap& a);

/// Looks for x != 0 with Ax >= x along orbits of scaled unit vectors
/// t e_i, t in {2^k : |k| <= max_scale_exponent}. Does not use the cycle list.
std::optional<NonnegVector> search_fixed_ray_witness(const MpMap& a, int max_scale_exponent = 8);

struct ClosureResult {
    MpMap star;
    /// Largest k whose power A^k still changed the running maximum.
    unsigned truncation_degree = 0;
};

/// A map together with a proof that every cycle is a contraction. The only
/// way to obtain one is certify(), so holders can skip re-checking.
class StableMap {
public:
    /// Throws NotStable unless stability is certified.
    static StableMap certify(MpMap a);

    const MpMap& map() const { return a_; }
    std::size_t dim() const { return a_.dim(); }

    /// max_{k<n} A^k x, without materializing A*.
    NonnegVector closure_apply(const NonnegVector& x) const;

    /// Symbolic A* = max_{k<n} A^k.
    ClosureResult closure() const;

private:
    explicit StableMap(MpMap a) : a_(std::move(a)) {}
    MpMap a_;
};

ClosureResult closure(const MpMap& a);
NonnegVector closure_apply(const MpMap& a, const NonnegVector& x);

struct DescentCheck {
    NonnegVector lhs;  // A*(Ax) = A(A*x)
    NonnegVector rhs;  // A*x
    OrderRelation relation;
};

/// Throws std::logic_error if the two sides of A A* = A* A disagree.
DescentCheck descent_check(const StableMap& a, const NonnegVector& x);

/// Largest x with x <= Ax (+) b, i.e. A* b.
NonnegVector maximal_solution(const StableMap& a, const NonnegVector& b);

struct FixedPointIteration {
    NonnegVector solution;
    /// Number of applications of y -> Ay (+) b that changed y.
    unsigned steps = 0;
};

/// Iterates y -> Ay (+) b from y = b until it stops changing.
FixedPointIteration iterate_maximal_solution(const StableMap& a, const NonnegVector& b);

enum class SimulationOutcome { ConvergedBelow, StepsExhausted, FixedPointHit };

struct Trajectory {
    std::vector<NonnegVector> states;  // x_0, x_1, ...
    SimulationOutcome outcome = SimulationOutcome::StepsExhausted;
};

/// x_{k+1} = A x_k until ||x_k|| < halt_norm, x_{k+1} = x_k != 0, or max_steps.
Trajectory simulate(const MpMap& a, const NonnegVector& x0, unsigned max_steps, const Rational& halt_norm);

const char* to_string(StabilityVerdict v);
const char* to_string(SimulationOutcome o);

}  // namespace maxpres
