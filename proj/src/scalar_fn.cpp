#include "maxpres/scalar_fn.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>

namespace maxpres {

struct ScalarFn::Node {
    FnKind kind = FnKind::Zero;
    Rational a;  // gain (Linear) or coefficient (Power)
    Rational b;  // exponent (Power)
    std::optional<PiecewiseLinear> pwl;
    std::vector<ScalarFn> children;  // {outer, inner} for Compose, branches for Max
    bool normalized = false;
};

namespace {

const auto& zero_node() {
    static const auto node = [] {
        auto n = std::make_shared<ScalarFn::Node>();
        n->kind = FnKind::Zero;
        n->normalized = true;
        return std::shared_ptr<const ScalarFn::Node>(n);
    }();
    return node;
}

}  // namespace

ScalarFn::ScalarFn() : node_(zero_node()) {}

ScalarFn::ScalarFn(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

ScalarFn ScalarFn::normalized_node(Node node) {
    node.normalized = true;
    return ScalarFn(std::make_shared<const Node>(std::move(node)));
}

ScalarFn ScalarFn::zero() { return ScalarFn(); }

ScalarFn ScalarFn::identity() {
    static const ScalarFn id = [] {
        Node n;
        n.kind = FnKind::Identity;
        return normalized_node(std::move(n));
    }();
    return id;
}

ScalarFn ScalarFn::linear(Rational gain) {
    if (gain <= 0) throw InvalidFunction("linear gain must be positive, got " + to_string(gain));
    Node n;
    n.kind = FnKind::Linear;
    n.normalized = gain != 1;
    n.a = std::move(gain);
    return ScalarFn(std::make_shared<const Node>(std::move(n)));
}

ScalarFn ScalarFn::power(Rational coef, Rational exponent) {
    if (coef <= 0) throw InvalidFunction("power coefficient must be positive, got " + to_string(coef));
    if (exponent <= 0)
        throw InvalidFunction("power exponent must be positive, got " + to_string(exponent));
    Node n;
    n.kind = FnKind::Power;
    n.normalized = exponent != 1;
    n.a = std::move(coef);
    n.b = std::move(exponent);
    return ScalarFn(std::make_shared<const Node>(std::move(n)));
}

ScalarFn ScalarFn::pwl(PiecewiseLinear f) {
    Node n;
    n.kind = FnKind::Pwl;
    n.normalized = !f.is_ray() && f.simplified() == f;
    n.pwl = std::move(f);
    return ScalarFn(std::make_shared<const Node>(std::move(n)));
}

ScalarFn ScalarFn::pwl(std::vector<PwlPoint> points, Rational final_slope) {
    return pwl(PiecewiseLinear(std::move(points), std::move(final_slope)));
}

ScalarFn ScalarFn::make_compose(ScalarFn outer, ScalarFn inner) {
    Node n;
    n.kind = FnKind::Compose;
    n.children = {std::move(outer), std::move(inner)};
    return ScalarFn(std::make_shared<const Node>(std::move(n)));
}

ScalarFn ScalarFn::make_max(std::vector<ScalarFn> branches) {
    if (branches.empty()) throw InvalidFunction("max needs at least one branch");
    Node n;
    n.kind = FnKind::Max;
    n.children = std::move(branches);
    return ScalarFn(std::make_shared<const Node>(std::move(n)));
}

FnKind ScalarFn::kind() const { return node_->kind; }
bool ScalarFn::is_normalized() const { return node_->normalized; }
const Rational& ScalarFn::gain() const { return node_->a; }
const Rational& ScalarFn::coef() const { return node_->a; }
const Rational& ScalarFn::exponent() const { return node_->b; }
const PiecewiseLinear& ScalarFn::as_pwl() const { return *node_->pwl; }
const ScalarFn& ScalarFn::outer() const { return node_->children[0]; }
const ScalarFn& ScalarFn::inner() const { return node_->children[1]; }
const std::vector<ScalarFn>& ScalarFn::branches() const { return node_->children; }

bool operator==(const ScalarFn& x, const ScalarFn& y) {
    if (x.node_ == y.node_) return true;
    const auto& a = *x.node_;
    const auto& b = *y.node_;
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case FnKind::Zero:
        case FnKind::Identity: return true;
        case FnKind::Linear: return a.a == b.a;
        case FnKind::Power: return a.a == b.a && a.b == b.b;
        case FnKind::Pwl: return *a.pwl == *b.pwl;
        case FnKind::Compose:
        case FnKind::Max: return a.children == b.children;
    }
    return false;
}

std::string ScalarFn::describe() const {
    switch (kind()) {
        case FnKind::Zero: return "0";
        case FnKind::Identity: return "id";
        case FnKind::Linear: return "lin(" + to_string(gain()) + ")";
        case FnKind::Power: return "pow(" + to_string(coef()) + "," + to_string(exponent()) + ")";
        case FnKind::Pwl: {
            std::string s = "pwl[";
            for (const auto& p : as_pwl().points()) s += "(" + to_string(p.t) + "," + to_string(p.v) + ")";
            return s + ";" + to_string(as_pwl().final_slope()) + "]";
        }
        case FnKind::Compose: return "cmp(" + outer().describe() + "," + inner().describe() + ")";
        case FnKind::Max: {
            std::string s = "max(";
            for (std::size_t i = 0; i < branches().size(); ++i) {
                if (i) s += ",";
                s += branches()[i].describe();
            }
            return s + ")";
        }
    }
    return {};
}

std::ostream& operator<<(std::ostream& os, const ScalarFn& f) { return os << f.describe(); }

// ---------------------------------------------------------------------------
// Evaluation

Rational evaluate(const ScalarFn& f, const Rational& t) {
    if (t < 0) throw Error("functions are defined on [0, inf), got t = " + to_string(t));
    switch (f.kind()) {
        case FnKind::Zero: return 0;
        case FnKind::Identity: return t;
        case FnKind::Linear: return f.gain() * t;
        case FnKind::Power: {
            auto r = rational_power(t, f.exponent());
            if (!r)
                throw IrrationalValue(to_string(t) + "^(" + to_string(f.exponent()) +
                                      ") has no exact rational value");
            return f.coef() * *r;
        }
        case FnKind::Pwl: return f.as_pwl()(t);
        case FnKind::Compose: return evaluate(f.outer(), evaluate(f.inner(), t));
        case FnKind::Max: {
            Rational best = 0;
            for (const auto& b : f.branches()) best = max(best, evaluate(b, t));
            return best;
        }
    }
    return 0;
}

double evaluate_approx(const ScalarFn& f, double t) {
    switch (f.kind()) {
        case FnKind::Zero: return 0.0;
        case FnKind::Identity: return t;
        case FnKind::Linear: return f.gain().get_d() * t;
        case FnKind::Power: return f.coef().get_d() * std::pow(t, f.exponent().get_d());
        case FnKind::Pwl: {
            const auto& p = f.as_pwl();
            const auto& pts = p.points();
            if (t >= pts.back().t.get_d())
                return pts.back().v.get_d() + p.final_slope().get_d() * (t - pts.back().t.get_d());
            for (std::size_t i = 1; i < pts.size(); ++i) {
                const double hi = pts[i].t.get_d();
                if (t < hi) {
                    const double lo = pts[i - 1].t.get_d();
                    const double vlo = pts[i - 1].v.get_d();
                    return vlo + (pts[i].v.get_d() - vlo) * (t - lo) / (hi - lo);
                }
            }
            return pts.back().v.get_d();
        }
        case FnKind::Compose: return evaluate_approx(f.outer(), evaluate_approx(f.inner(), t));
        case FnKind::Max: {
            double best = 0.0;
            for (const auto& b : f.branches()) best = std::max(best, evaluate_approx(b, t));
            return best;
        }
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// Normalization

namespace {

bool pwl_like(const ScalarFn& f) {
    return f.kind() == FnKind::Identity || f.kind() == FnKind::Linear || f.kind() == FnKind::Pwl;
}

bool power_like(const ScalarFn& f) {
    return f.kind() == FnKind::Identity || f.kind() == FnKind::Linear || f.kind() == FnKind::Power;
}

PiecewiseLinear to_pwl(const ScalarFn& f) {
    switch (f.kind()) {
        case FnKind::Identity: return PiecewiseLinear::ray(1);
        case FnKind::Linear: return PiecewiseLinear::ray(f.gain());
        default: return f.as_pwl();
    }
}

struct PowerForm {
    Rational coef;
    Rational exponent;
};

PowerForm to_power(const ScalarFn& f) {
    switch (f.kind()) {
        case FnKind::Identity: return {1, 1};
        case FnKind::Linear: return {f.gain(), 1};
        default: return {f.coef(), f.exponent()};
    }
}

ScalarFn from_pwl(const PiecewiseLinear& f) {
    PiecewiseLinear s = f.simplified();
    if (s.is_ray()) {
        const Rational& slope = s.final_slope();
        if (slope == 0) return ScalarFn::zero();
        if (slope == 1) return ScalarFn::identity();
        return ScalarFn::linear(slope);
    }
    return ScalarFn::pwl(std::move(s));
}

ScalarFn from_power(const Rational& coef, const Rational& exponent) {
    if (exponent == 1) return coef == 1 ? ScalarFn::identity() : ScalarFn::linear(coef);
    return ScalarFn::power(coef, exponent);
}

std::optional<ScalarFn> try_merge(const ScalarFn& outer, const ScalarFn& inner) {
    if (pwl_like(outer) && pwl_like(inner)) return from_pwl(compose(to_pwl(outer), to_pwl(inner)));
    if (power_like(outer) && power_like(inner)) {
        // c1 (c2 t^p2)^p1 = c1 c2^p1 t^(p1 p2)
        const auto o = to_power(outer);
        const auto i = to_power(inner);
        auto scaled = rational_power(i.coef, o.exponent);
        if (!scaled) return std::nullopt;
        return from_power(o.coef * *scaled, o.exponent * i.exponent);
    }
    return std::nullopt;
}

void append_chain(const ScalarFn& f, std::vector<ScalarFn>& out) {
    if (f.kind() == FnKind::Compose) {
        append_chain(f.outer(), out);
        append_chain(f.inner(), out);
    } else {
        out.push_back(f);
    }
}

}  // namespace

ScalarFn normalize(const ScalarFn& f) {
    if (f.is_normalized()) return f;
    switch (f.kind()) {
        case FnKind::Zero:
        case FnKind::Identity: return f;
        case FnKind::Linear:
        case FnKind::Power: return from_power(to_power(f).coef, to_power(f).exponent);
        case FnKind::Pwl: return from_pwl(f.as_pwl());
        case FnKind::Compose: return compose(f.outer(), f.inner());
        case FnKind::Max: return max_of(f.branches());
    }
    return f;
}

ScalarFn compose(const ScalarFn& outer_raw, const ScalarFn& inner_raw) {
    const ScalarFn outer = normalize(outer_raw);
    const ScalarFn inner = normalize(inner_raw);
    if (outer.is_zero() || inner.is_zero()) return ScalarFn::zero();
    if (outer.kind() == FnKind::Identity) return inner;
    if (inner.kind() == FnKind::Identity) return outer;

    // max_i f_i composed with g is max_i (f_i o g); a nondecreasing f commutes with max.
    if (outer.kind() == FnKind::Max) {
        std::vector<ScalarFn> parts;
        for (const auto& b : outer.branches()) parts.push_back(compose(b, inner));
        return max_of(parts);
    }
    if (inner.kind() == FnKind::Max) {
        std::vector<ScalarFn> parts;
        for (const auto& b : inner.branches()) parts.push_back(compose(outer, b));
        return max_of(parts);
    }

    std::vector<ScalarFn> chain;
    append_chain(outer, chain);
    append_chain(inner, chain);

    for (bool merged = true; merged;) {
        merged = false;
        for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
            auto m = try_merge(chain[k], chain[k + 1]);
            if (!m) continue;
            if (m->is_zero()) return ScalarFn::zero();
            chain.erase(chain.begin() + static_cast<std::ptrdiff_t>(k) + 1);
            if (m->kind() == FnKind::Identity)
                chain.erase(chain.begin() + static_cast<std::ptrdiff_t>(k));
            else
                chain[k] = std::move(*m);
            merged = true;
            break;
        }
    }
    if (chain.empty()) return ScalarFn::identity();

    ScalarFn acc = chain.back();
    for (std::size_t k = chain.size() - 1; k-- > 0;) {
        ScalarFn::Node n;
        n.kind = FnKind::Compose;
        n.children = {chain[k], acc};
        acc = ScalarFn::normalized_node(std::move(n));
    }
    return acc;
}

ScalarFn max_of(const std::vector<ScalarFn>& fs) {
    if (fs.empty()) throw InvalidFunction("max needs at least one branch");
    std::vector<ScalarFn> flat;
    for (const auto& f : fs) {
        ScalarFn g = normalize(f);
        if (g.kind() == FnKind::Max)
            flat.insert(flat.end(), g.branches().begin(), g.branches().end());
        else if (!g.is_zero())
            flat.push_back(std::move(g));
    }

    std::optional<PiecewiseLinear> envelope;
    std::map<Rational, Rational> power_by_exponent;
    std::vector<ScalarFn> others;
    for (auto& g : flat) {
        if (pwl_like(g)) {
            envelope = envelope ? upper_envelope(*envelope, to_pwl(g)) : to_pwl(g);
        } else if (g.kind() == FnKind::Power) {
            auto [it, fresh] = power_by_exponent.emplace(g.exponent(), g.coef());
            if (!fresh) it->second = max(it->second, g.coef());
        } else if (std::find(others.begin(), others.end(), g) == others.end()) {
            others.push_back(std::move(g));
        }
    }

    std::vector<ScalarFn> branches;
    if (envelope) branches.push_back(from_pwl(*envelope));
    for (const auto& [p, c] : power_by_exponent) branches.push_back(ScalarFn::power(c, p));
    branches.insert(branches.end(), others.begin(), others.end());

    std::vector<bool> dropped(branches.size(), false);
    for (std::size_t i = 0; i < branches.size(); ++i) {
        for (std::size_t j = 0; j < branches.size(); ++j) {
            if (i == j || dropped[j]) continue;
            if (dominates(branches[j], branches[i]) == Dominance::Yes) {
                dropped[i] = true;
                break;
            }
        }
    }
    std::vector<ScalarFn> kept;
    for (std::size_t i = 0; i < branches.size(); ++i)
        if (!dropped[i]) kept.push_back(branches[i]);

    if (kept.empty()) return ScalarFn::zero();
    if (kept.size() == 1) return kept.front();
    std::sort(kept.begin(), kept.end(),
              [](const ScalarFn& x, const ScalarFn& y) { return x.describe() < y.describe(); });
    ScalarFn::Node n;
    n.kind = FnKind::Max;
    n.children = std::move(kept);
    return ScalarFn::normalized_node(std::move(n));
}

// ---------------------------------------------------------------------------
// Order and classification

Dominance dominates(const ScalarFn& f_raw, const ScalarFn& g_raw) {
    const ScalarFn f = normalize(f_raw);
    const ScalarFn g = normalize(g_raw);
    if (f == g || g.is_zero()) return Dominance::Yes;
    // A normalized nonzero function is positive somewhere.
    if (f.is_zero()) return Dominance::No;

    if (g.kind() == FnKind::Max) {
        bool all = true;
        for (const auto& b : g.branches()) {
            const Dominance d = dominates(f, b);
            if (d == Dominance::No) return Dominance::No;
            all = all && d == Dominance::Yes;
        }
        return all ? Dominance::Yes : Dominance::Unknown;
    }
    if (f.kind() == FnKind::Max) {
        for (const auto& b : f.branches())
            if (dominates(b, g) == Dominance::Yes) return Dominance::Yes;
        return Dominance::Unknown;
    }
    if (pwl_like(f) && pwl_like(g))
        return dominates(to_pwl(f), to_pwl(g)) ? Dominance::Yes : Dominance::No;
    if (power_like(f) && power_like(g)) {
        const auto pf = to_power(f);
        const auto pg = to_power(g);
        if (pf.exponent == pg.exponent) return pf.coef >= pg.coef ? Dominance::Yes : Dominance::No;
        // Against a linear function the ratio c t^(p-1) sweeps (0, inf), so f < g somewhere.
        if (pf.exponent == 1 || pg.exponent == 1) return Dominance::No;
    }
    return Dominance::Unknown;
}

FnClass classify(const ScalarFn& f_raw) {
    const ScalarFn f = normalize(f_raw);
    switch (f.kind()) {
        case FnKind::Zero: return FnClass::Zero;
        case FnKind::Identity:
        case FnKind::Linear:
        case FnKind::Power: return FnClass::Kinf;
        case FnKind::Pwl:
            return f.as_pwl().strictly_increasing() ? FnClass::Kinf : FnClass::NondecreasingOnly;
        case FnKind::Compose:
            return classify(f.outer()) == FnClass::Kinf && classify(f.inner()) == FnClass::Kinf
                       ? FnClass::Kinf
                       : FnClass::NondecreasingOnly;
        case FnKind::Max:
            for (const auto& b : f.branches())
                if (classify(b) != FnClass::Kinf) return FnClass::NondecreasingOnly;
            return FnClass::Kinf;
    }
    return FnClass::NondecreasingOnly;
}

std::optional<Rational> gain_bound(const ScalarFn& f) {
    switch (f.kind()) {
        case FnKind::Zero: return Rational(0);
        case FnKind::Identity: return Rational(1);
        case FnKind::Linear: return f.gain();
        case FnKind::Power:
            if (f.exponent() == 1) return f.coef();
            return std::nullopt;
        case FnKind::Pwl: return f.as_pwl().gain_bound();
        case FnKind::Compose: {
            auto o = gain_bound(f.outer());
            auto i = gain_bound(f.inner());
            if (!o || !i) return std::nullopt;
            return *o * *i;
        }
        case FnKind::Max: {
            Rational best = 0;
            for (const auto& b : f.branches()) {
                auto g = gain_bound(b);
                if (!g) return std::nullopt;
                best = max(best, *g);
            }
            return best;
        }
    }
    return std::nullopt;
}

namespace {

ContractionVerdict certified() { return {ContractionVerdict::Status::Certified, std::nullopt}; }
ContractionVerdict refuted(Rational w) { return {ContractionVerdict::Status::Refuted, std::move(w)}; }

// Power(c, a/b): c t^(a/b) >= t  <=>  c^b t^(a-b) >= 1. Search t = s^b with
// s a power of two so the witness evaluates exactly.
Rational power_witness(const Rational& c, const Rational& p) {
    const unsigned long a = p.get_num().get_ui();
    const unsigned long b = p.get_den().get_ui();
    const Rational cb = pow(c, b);
    const int step = a > b ? 1 : -1;
    for (int k = step;; k += step) {
        const Rational s = power_of_two(k);
        const Rational t = pow(s, b);
        const Rational lhs = a > b ? cb * pow(t, a - b) : cb;
        const Rational rhs = a > b ? Rational(1) : pow(t, b - a);
        if (lhs >= rhs) return t;
    }
}

ContractionVerdict fallback(const ScalarFn& f) {
    if (auto g = gain_bound(f); g && *g < 1) return certified();
    // Exact refutation search; sound because any t with f(t) >= t refutes.
    for (int k = 0; k <= 32; ++k) {
        for (int sign : {1, -1}) {
            const Rational t = power_of_two(sign * k);
            try {
                if (evaluate(f, t) >= t) return refuted(t);
            } catch (const IrrationalValue&) {
            }
        }
    }
    return {};
}

}  // namespace

ContractionVerdict below_identity(const ScalarFn& f_raw) {
    const ScalarFn f = normalize(f_raw);
    switch (f.kind()) {
        case FnKind::Zero: return certified();
        case FnKind::Identity: return refuted(1);
        case FnKind::Linear: return f.gain() < 1 ? certified() : refuted(1);
        case FnKind::Power: return refuted(power_witness(f.coef(), f.exponent()));
        case FnKind::Pwl: {
            auto w = identity_violation(f.as_pwl());
            return w ? refuted(*w) : certified();
        }
        case FnKind::Max: {
            bool all = true;
            for (const auto& b : f.branches()) {
                const auto v = below_identity(b);
                if (v.refuted()) return v;
                all = all && v.certified();
            }
            if (all) return certified();
            return fallback(f);
        }
        case FnKind::Compose: return fallback(f);
    }
    return {};
}

Rational generalized_inverse(const ScalarFn& f, const Rational& y) {
    if (y < 0) throw Error("generalized inverse needs y >= 0, got " + to_string(y));
    if (y == 0) return 0;
    switch (f.kind()) {
        case FnKind::Zero: throw OutOfRange("the zero function never reaches " + to_string(y));
        case FnKind::Identity: return y;
        case FnKind::Linear: return y / f.gain();
        case FnKind::Power: {
            auto r = rational_power(y / f.coef(), 1 / f.exponent());
            if (!r) throw IrrationalValue("inverse of " + f.describe() + " at " + to_string(y) + " is irrational");
            return *r;
        }
        case FnKind::Pwl: {
            auto r = f.as_pwl().lower_inverse(y);
            if (!r) throw OutOfRange(to_string(y) + " exceeds the supremum of " + f.describe());
            return *r;
        }
        case FnKind::Compose: return generalized_inverse(f.inner(), generalized_inverse(f.outer(), y));
        case FnKind::Max: {
            std::optional<Rational> best;
            for (const auto& b : f.branches()) {
                try {
                    Rational t = generalized_inverse(b, y);
                    if (!best || t < *best) best = std::move(t);
                } catch (const OutOfRange&) {
                }
            }
            if (!best) throw OutOfRange(to_string(y) + " exceeds the supremum of " + f.describe());
            return *best;
        }
    }
    return 0;
}

std::optional<Rational> unboundedness_witness(const ScalarFn& f, const Rational& bound) {
    switch (f.kind()) {
        case FnKind::Zero: return std::nullopt;
        case FnKind::Identity: return max(bound, Rational(0)) + 1;
        case FnKind::Linear: return max(bound, Rational(0)) / f.gain() + 1;
        case FnKind::Power: {
            const unsigned long a = f.exponent().get_num().get_ui();
            const unsigned long b = f.exponent().get_den().get_ui();
            for (int k = 0;; ++k) {
                const Rational s = power_of_two(k);
                if (f.coef() * pow(s, a) > bound) return pow(s, b);
            }
        }
        case FnKind::Pwl: {
            const auto& p = f.as_pwl();
            if (!p.unbounded()) return std::nullopt;
            const auto& l = p.last();
            return max(l.t, l.t + (bound - l.v) / p.final_slope()) + 1;
        }
        case FnKind::Compose: {
            auto mid = unboundedness_witness(f.outer(), bound);
            if (!mid) return std::nullopt;
            return unboundedness_witness(f.inner(), *mid);
        }
        case FnKind::Max:
            for (const auto& b : f.branches())
                if (auto t = unboundedness_witness(b, bound)) return t;
            return std::nullopt;
    }
    return std::nullopt;
}

const char* to_string(FnClass c) {
    switch (c) {
        case FnClass::Zero: return "zero";
        case FnClass::Kinf: return "kinf";
        case FnClass::NondecreasingOnly: return "nondecreasing";
    }
    return "?";
}

const char* to_string(ContractionVerdict::Status s) {
    switch (s) {
        case ContractionVerdict::Status::Certified: return "certified";
        case ContractionVerdict::Status::Refuted: return "refuted";
        case ContractionVerdict::Status::Uncertified: return "uncertified";
    }
    return "?";
}

}  // namespace maxpres
