#include "maxpres/serialize.hpp"

namespace maxpres {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return parse_rational(j.dump());
    throw FormatError("expected a rational string \"p/q\" or an integer, got " + j.dump());
}

json to_json(const Rational& q) { return to_string(q); }

NonnegVector vector_from_json(const json& j) {
    if (!j.is_array()) throw FormatError("expected an array of rationals");
    std::vector<Rational> c;
    for (const auto& e : j) c.push_back(rational_from_json(e));
    return NonnegVector(std::move(c));
}

json to_json(const NonnegVector& x) {
    json out = json::array();
    for (const auto& c : x.coords()) out.push_back(to_string(c));
    return out;
}

ScalarFn fn_from_json(const json& j) {
    const json& kind_j = field(j, "kind");
    if (!kind_j.is_string()) throw FormatError("'kind' must be a string");
    const std::string kind = kind_j.get<std::string>();
    if (kind == "zero") return ScalarFn::zero();
    if (kind == "identity") return ScalarFn::identity();
    if (kind == "linear") return ScalarFn::linear(rational_from_json(field(j, "gain")));
    if (kind == "power")
        return ScalarFn::power(rational_from_json(field(j, "coef")), rational_from_json(field(j, "exp")));
    if (kind == "pwl") {
        const json& pts = field(j, "points");
        if (!pts.is_array() || pts.empty()) throw FormatError("'points' must be a nonempty array");
        std::vector<PwlPoint> points;
        for (const auto& p : pts) {
            if (!p.is_array() || p.size() != 2) throw FormatError("each pwl point must be a pair");
            points.push_back({rational_from_json(p[0]), rational_from_json(p[1])});
        }
        return ScalarFn::pwl(std::move(points), rational_from_json(field(j, "final_slope")));
    }
    if (kind == "compose") return ScalarFn::make_compose(fn_from_json(field(j, "outer")), fn_from_json(field(j, "inner")));
    if (kind == "max") {
        const json& of = field(j, "of");
        if (!of.is_array() || of.empty()) throw FormatError("'of' must be a nonempty array");
        std::vector<ScalarFn> branches;
        for (const auto& b : of) branches.push_back(fn_from_json(b));
        return ScalarFn::make_max(std::move(branches));
    }
    throw FormatError("unknown function kind '" + kind + "'");
}

json to_json(const ScalarFn& f) {
    switch (f.kind()) {
        case FnKind::Zero: return {{"kind", "zero"}};
        case FnKind::Identity: return {{"kind", "identity"}};
        case FnKind::Linear: return {{"kind", "linear"}, {"gain", to_json(f.gain())}};
        case FnKind::Power: return {{"kind", "power"}, {"coef", to_json(f.coef())}, {"exp", to_json(f.exponent())}};
        case FnKind::Pwl: {
            json pts = json::array();
            for (const auto& p : f.as_pwl().points()) pts.push_back({to_json(p.t), to_json(p.v)});
            return {{"kind", "pwl"}, {"points", pts}, {"final_slope", to_json(f.as_pwl().final_slope())}};
        }
        case FnKind::Compose: return {{"kind", "compose"}, {"outer", to_json(f.outer())}, {"inner", to_json(f.inner())}};
        case FnKind::Max: {
            json of = json::array();
            for (const auto& b : f.branches()) of.push_back(to_json(b));
            return {{"kind", "max"}, {"of", of}};
        }
    }
    return {};
}

MpMap map_from_json(const json& j) {
    const json& n_j = field(j, "n");
    if (!n_j.is_number_integer() || n_j.get<long long>() < 1) throw FormatError("'n' must be a positive integer");
    const auto n = static_cast<std::size_t>(n_j.get<long long>());
    const json& rows = field(j, "entries");
    if (!rows.is_array() || rows.size() != n)
        throw FormatError("'entries' must have n = " + std::to_string(n) + " rows");
    std::vector<ScalarFn> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n)
            throw FormatError("row " + std::to_string(i + 1) + " must have n = " + std::to_string(n) + " entries");
        for (std::size_t k = 0; k < n; ++k) {
            try {
                entries.push_back(fn_from_json(rows[i][k]));
            } catch (const Error& e) {
                throw FormatError("entry (" + std::to_string(i + 1) + "," + std::to_string(k + 1) + "): " + e.what());
            }
        }
    }
    return MpMap(n, std::move(entries));
}

json to_json(const MpMap& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < a.dim(); ++k) row.push_back(to_json(a(i, k)));
        rows.push_back(std::move(row));
    }
    return {{"n", a.dim()}, {"entries", rows}};
}

json to_json(const StabilityReport& r) {
    json cycles = json::array();
    for (const auto& cv : r.cycles) {
        json nodes = json::array();
        for (auto v : cv.cycle.nodes) nodes.push_back(v + 1);
        json c = {{"nodes", nodes}, {"weight", cv.cycle.weight.describe()}, {"verdict", to_string(cv.verdict.status)}};
        if (cv.verdict.witness) c["witness_t"] = to_json(*cv.verdict.witness);
        cycles.push_back(std::move(c));
    }
    json out = {{"verdict", to_string(r.verdict)}, {"cycles", cycles}};
    if (r.witness) out["witness"] = to_json(*r.witness);
    return out;
}

json to_json(const ClosureResult& c) {
    json out = to_json(c.star);
    out["truncation_degree"] = c.truncation_degree;
    return out;
}

json to_json(const DescentCertificate& c) {
    json samples = json::array();
    for (const auto& s : c.samples)
        samples.push_back({{"x", to_json(s.x)}, {"before", to_json(s.before)}, {"after", to_json(s.after)}});
    return {{"mode", to_string(c.mode)},
            {"seed", c.seed},
            {"sample_count", c.samples.size()},
            {"all_strict", c.all_strict},
            {"all_weak", c.all_weak},
            {"samples", samples}};
}

}  // namespace maxpres
