#include "maxpres/analysis.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace maxpres {

namespace {

std::vector<std::vector<std::size_t>> successors(const MpMap& a) {
    const std::size_t n = a.dim();
    std::vector<std::vector<std::size_t>> succ(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (!normalize(a(i, j)).is_zero()) succ[j].push_back(i);
    return succ;
}

ScalarFn cycle_weight(const MpMap& a, const std::vector<std::size_t>& nodes) {
    const std::size_t m = nodes.size();
    ScalarFn w = a(nodes[1 % m], nodes[0]);
    for (std::size_t k = 1; k < m; ++k) w = compose(a(nodes[(k + 1) % m], nodes[k]), w);
    return normalize(w);
}

// Walks t0 around the cycle; the closing edge returns weight(t0) >= t0.
std::optional<NonnegVector> propagate(const MpMap& a, const Cycle& c, const Rational& t0) {
    std::vector<Rational> x(a.dim(), 0);
    try {
        x[c.nodes[0]] = t0;
        for (std::size_t k = 1; k < c.nodes.size(); ++k)
            x[c.nodes[k]] = evaluate(a(c.nodes[k], c.nodes[k - 1]), x[c.nodes[k - 1]]);
    } catch (const IrrationalValue&) {
        return std::nullopt;
    }
    NonnegVector v(std::move(x));
    if (v.is_zero() || !leq(v, apply(a, v))) return std::nullopt;
    return v;
}

std::optional<NonnegVector> cycle_witness(const MpMap& a, const Cycle& c, const Rational& refuted_at) {
    if (auto v = propagate(a, c, refuted_at)) return v;
    for (int k = 0; k <= 32; ++k)
        for (int sign : {1, -1}) {
            const Rational t = power_of_two(sign * k);
            try {
                if (evaluate(c.weight, t) < t) continue;
            } catch (const IrrationalValue&) {
                continue;
            }
            if (auto v = propagate(a, c, t)) return v;
        }
    return std::nullopt;
}

// Every closed walk of length <= n through i shows up in (A^k)_ii; if all of
// those are below the identity, so is every simple cycle.
bool diagonal_certificate(const MpMap& a) {
    const std::size_t n = a.dim();
    MpMap p = MpMap::identity(n);
    std::vector<ScalarFn> diag(n);
    for (std::size_t k = 1; k <= n; ++k) {
        p = compose_maps(a, p);
        for (std::size_t i = 0; i < n; ++i) diag[i] = max_of({diag[i], p(i, i)});
    }
    return std::all_of(diag.begin(), diag.end(),
                       [](const ScalarFn& f) { return below_identity(f).certified(); });
}

}  // namespace

std::vector<Cycle> enumerate_simple_cycles(const MpMap& a) {
    const std::size_t n = a.dim();
    const auto succ = successors(a);
    std::vector<Cycle> cycles;

    for (std::size_t s = 0; s < n; ++s) {
        std::vector<bool> blocked(n, false);
        std::vector<std::vector<std::size_t>> blocked_by(n);
        std::vector<std::size_t> stack;

        std::function<void(std::size_t)> unblock = [&](std::size_t u) {
            blocked[u] = false;
            auto waiting = std::move(blocked_by[u]);
            blocked_by[u].clear();
            for (std::size_t w : waiting)
                if (blocked[w]) unblock(w);
        };

        std::function<bool(std::size_t)> circuit = [&](std::size_t v) {
            bool found = false;
            stack.push_back(v);
            blocked[v] = true;
            for (std::size_t w : succ[v]) {
                if (w < s) continue;
                if (w == s) {
                    cycles.push_back({stack, cycle_weight(a, stack)});
                    found = true;
                } else if (!blocked[w] && circuit(w)) {
                    found = true;
                }
            }
            if (found) {
                unblock(v);
            } else {
                for (std::size_t w : succ[v]) {
                    if (w < s) continue;
                    auto& b = blocked_by[w];
                    if (std::find(b.begin(), b.end(), v) == b.end()) b.push_back(v);
                }
            }
            stack.pop_back();
            return found;
        };

        circuit(s);
    }
    return cycles;
}

StabilityReport check_stability(const MpMap& a) {
    StabilityReport report;
    bool any_uncertified = false;
    std::optional<std::size_t> first_refuted;
    for (auto& c : enumerate_simple_cycles(a)) {
        auto v = below_identity(c.weight);
        if (v.refuted() && !first_refuted) first_refuted = report.cycles.size();
        any_uncertified = any_uncertified || v.status == ContractionVerdict::Status::Uncertified;
        report.cycles.push_back({std::move(c), std::move(v)});
    }

    if (first_refuted) {
        // Any refuted cycle will do; try them in order until one yields an exact witness.
        for (std::size_t k = *first_refuted; k < report.cycles.size() && !report.witness; ++k) {
            const auto& cv = report.cycles[k];
            if (cv.verdict.refuted()) report.witness = cycle_witness(a, cv.cycle, *cv.verdict.witness);
        }
        if (!report.witness) report.witness = search_fixed_ray_witness(a, 32);
        report.verdict = report.witness ? StabilityVerdict::Unstable : StabilityVerdict::Uncertified;
    } else {
        report.verdict = any_uncertified ? StabilityVerdict::Uncertified : StabilityVerdict::Stable;
    }
    return report;
}

std::optional<NonnegVector> search_fixed_ray_witness(const MpMap& a, int max_scale_exponent) {
    const std::size_t n = a.dim();
    for (int k = 0; k <= max_scale_exponent; ++k)
        for (int sign : {1, -1}) {
            if (k == 0 && sign < 0) continue;
            const Rational t = power_of_two(sign * k);
            for (std::size_t i = 0; i < n; ++i) {
                // If A^m(t e_i) >= t e_i then w = max_{j<m} A^j(t e_i) has Aw >= w.
                NonnegVector start = NonnegVector::scaled(t, NonnegVector::unit(n, i));
                NonnegVector y = start;
                NonnegVector acc = start;
                try {
                    for (std::size_t m = 1; m <= n; ++m) {
                        y = apply(a, y);
                        if (y[i] >= t) {
                            if (leq(acc, apply(a, acc))) return acc;
                            break;
                        }
                        acc = oplus(acc, y);
                    }
                } catch (const IrrationalValue&) {
                }
            }
        }
    return std::nullopt;
}

StableMap StableMap::certify(MpMap a) {
    if (diagonal_certificate(a)) return StableMap(std::move(a));
    const auto report = check_stability(a);
    if (report.verdict == StabilityVerdict::Stable) return StableMap(std::move(a));
    throw NotStable(std::string("map is not certified stable (verdict: ") + to_string(report.verdict) + ")");
}

NonnegVector StableMap::closure_apply(const NonnegVector& x) const {
    require_same_size(x.size(), a_.dim(), "closure_apply");
    NonnegVector y = x;
    NonnegVector acc = x;
    for (std::size_t k = 1; k < a_.dim(); ++k) {
        y = apply(a_, y);
        if (y.is_zero()) break;
        acc = oplus(acc, y);
    }
    return acc;
}

ClosureResult StableMap::closure() const {
    const std::size_t n = a_.dim();
    ClosureResult result{MpMap::identity(n), 0};
    MpMap p = MpMap::identity(n);
    for (unsigned k = 1; k < n; ++k) {
        p = compose_maps(a_, p);
        if (std::all_of(p.entries().begin(), p.entries().end(), [](const ScalarFn& f) { return f.is_zero(); }))
            break;
        MpMap next = oplus_maps(result.star, p);
        if (!(next == result.star)) {
            result.star = std::move(next);
            result.truncation_degree = k;
        }
    }
    return result;
}

ClosureResult closure(const MpMap& a) { return StableMap::certify(a).closure(); }

NonnegVector closure_apply(const MpMap& a, const NonnegVector& x) {
    return StableMap::certify(a).closure_apply(x);
}

DescentCheck descent_check(const StableMap& a, const NonnegVector& x) {
    NonnegVector star_x = a.closure_apply(x);
    NonnegVector lhs = a.closure_apply(apply(a.map(), x));
    if (lhs != apply(a.map(), star_x))
        throw std::logic_error("A*(Ax) != A(A*x) at x = " + to_string(x));
    const OrderRelation rel = compare_vectors(lhs, star_x);
    return {std::move(lhs), std::move(star_x), rel};
}

NonnegVector maximal_solution(const StableMap& a, const NonnegVector& b) { return a.closure_apply(b); }

FixedPointIteration iterate_maximal_solution(const StableMap& a, const NonnegVector& b) {
    require_same_size(b.size(), a.dim(), "iterate_maximal_solution");
    FixedPointIteration it{b, 0};
    for (;;) {
        NonnegVector next = oplus(apply(a.map(), it.solution), b);
        if (next == it.solution) return it;
        it.solution = std::move(next);
        if (++it.steps > a.dim()) throw std::logic_error("fixed-point iteration failed to settle within n steps");
    }
}

Trajectory simulate(const MpMap& a, const NonnegVector& x0, unsigned max_steps, const Rational& halt_norm) {
    if (max_steps < 1) throw Error("simulate needs max_steps >= 1");
    if (halt_norm <= 0) throw Error("simulate needs halt_norm > 0");
    Trajectory tr;
    tr.states.push_back(x0);
    if (max_norm(x0) < halt_norm) {
        tr.outcome = SimulationOutcome::ConvergedBelow;
        return tr;
    }
    for (unsigned k = 0; k < max_steps; ++k) {
        NonnegVector next = apply(a, tr.states.back());
        const bool fixed = next == tr.states.back() && !next.is_zero();
        const bool below = max_norm(next) < halt_norm;
        tr.states.push_back(std::move(next));
        if (fixed) {
            tr.outcome = SimulationOutcome::FixedPointHit;
            return tr;
        }
        if (below) {
            tr.outcome = SimulationOutcome::ConvergedBelow;
            return tr;
        }
    }
    tr.outcome = SimulationOutcome::StepsExhausted;
    return tr;
}

const char* to_string(StabilityVerdict v) {
    switch (v) {
        case StabilityVerdict::Stable: return "stable";
        case StabilityVerdict::Unstable: return "unstable";
        case StabilityVerdict::Uncertified: return "uncertified";
    }
    return "?";
}

const char* to_string(SimulationOutcome o) {
    switch (o) {
        case SimulationOutcome::ConvergedBelow: return "converged-below";
        case SimulationOutcome::StepsExhausted: return "steps-exhausted";
        case SimulationOutcome::FixedPointHit: return "fixed-point-hit";
    }
    return "?";
}

}  // namespace maxpres
