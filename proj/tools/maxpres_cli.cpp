// maxpres: command-line front end for max-preserving map analysis.
//
// Exit codes: 0 ok/stable, 2 unstable, 3 uncertified, 64 usage, 65 data format.

#include "maxpres/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace maxpres;

constexpr int kOk = 0;
constexpr int kUnstable = 2;
constexpr int kUncertified = 3;
constexpr int kUsage = 64;
constexpr int kDataFormat = 65;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotStableExit {
    int code;
};

MpMap load_map(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open map file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw DataError(path + ": invalid JSON: " + e.what());
    }
    try {
        return map_from_json(j);
    } catch (const Error& e) {
        throw DataError(path + ": " + e.what());
    } catch (const json::exception& e) {
        throw DataError(path + ": " + e.what());
    }
}

Rational parse_arg(const std::string& text, const char* flag) {
    try {
        return parse_rational(text);
    } catch (const Error& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

NonnegVector parse_vector(const std::string& text, std::size_t n, const char* flag) {
    std::vector<Rational> coords;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) coords.push_back(parse_arg(item, flag));
    if (coords.size() != n)
        throw UsageError(std::string(flag) + ": expected " + std::to_string(n) + " coordinates, got " +
                         std::to_string(coords.size()));
    try {
        return NonnegVector(std::move(coords));
    } catch (const Error& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

int verdict_code(StabilityVerdict v) {
    switch (v) {
        case StabilityVerdict::Stable: return kOk;
        case StabilityVerdict::Unstable: return kUnstable;
        case StabilityVerdict::Uncertified: return kUncertified;
    }
    return kUncertified;
}

StableMap require_stable(const MpMap& a) {
    try {
        return StableMap::certify(a);
    } catch (const NotStable& e) {
        const StabilityReport rep = check_stability(a);
        std::cerr << "maxpres: map is not certified stable (" << to_string(rep.verdict) << ")\n";
        throw NotStableExit{rep.verdict == StabilityVerdict::Unstable ? kUnstable : kUncertified};
    }
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

double approx(const Rational& q) { return q.get_d(); }

std::string format_approx(double v, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << v;
    return os.str();
}

struct Options {
    std::string map_path;
    std::string out_path;
    std::string vec;
    std::string weights;
    std::string mode;
    std::string t = "1";
    std::string direction;
    std::string halt = "1/1000000";
    unsigned steps = 100;
    bool approx = false;
    int digits = 12;
    std::size_t samples = 100;
    std::uint64_t seed = 0;
    std::size_t grid = 64;
};

int cmd_validate(const Options& o) {
    const MpMap a = load_map(o.map_path);
    std::cout << "ok: n = " << a.dim() << '\n';
    return kOk;
}

int cmd_check(const Options& o) {
    const StabilityReport rep = check_stability(load_map(o.map_path));
    print(to_json(rep));
    return verdict_code(rep.verdict);
}

int cmd_closure(const Options& o) {
    const MpMap a = load_map(o.map_path);
    const StableMap s = require_stable(a);
    const ClosureResult c = s.closure();
    bool grid_ok = true;
    for (const auto& x : verification_grid(a.dim(), o.grid))
        if (apply(c.star, x) != s.closure_apply(x)) grid_ok = false;
    if (!grid_ok) {
        std::cerr << "maxpres: symbolic closure disagrees with the applied form\n";
        return 1;
    }
    const json body = to_json(c);
    if (o.out_path.empty()) {
        print(body);
        return kOk;
    }
    std::ofstream out(o.out_path);
    if (!out) throw UsageError("cannot write '" + o.out_path + "'");
    out << body.dump(2) << '\n';
    print(json{{"out", o.out_path},
               {"truncation_degree", c.truncation_degree},
               {"grid_points", o.grid},
               {"grid_check", "pass"}});
    return kOk;
}

int cmd_eval(const Options& o) {
    const MpMap a = load_map(o.map_path);
    const NonnegVector x = parse_vector(o.vec, a.dim(), "--vec");
    json body{{"x", to_json(x)}};
    try {
        body["Ax"] = to_json(apply(a, x));
    } catch (const IrrationalValue& e) {
        if (!o.approx) {
            std::cerr << "maxpres: " << e.what() << "; rerun with --approx\n";
            return 1;
        }
    }
    if (o.approx) {
        json ax = json::array();
        for (std::size_t i = 0; i < a.dim(); ++i) {
            double best = 0;
            for (std::size_t j = 0; j < a.dim(); ++j)
                best = std::max(best, evaluate_approx(a(i, j), approx(x[j])));
            ax.push_back(format_approx(best, o.digits));
        }
        body["Ax_approx"] = ax;
    }
    print(body);
    return kOk;
}

int cmd_left(const Options& o) {
    const MpMap a = load_map(o.map_path);
    const NonnegVector x = parse_vector(o.vec, a.dim(), "--vec");
    LeftMode mode = LeftMode::Sum;
    if (o.mode == "max") mode = LeftMode::Max;
    else if (!o.mode.empty() && o.mode != "sum") throw UsageError("--mode: expected sum or max");
    const NonnegVector w = o.weights.empty() ? NonnegVector::ones(a.dim())
                                             : parse_vector(o.weights, a.dim(), "--weights");
    if (!w.is_positive()) throw UsageError("--weights: weights must be positive");
    const LeftEigenfunctional l(require_stable(a), w, mode);
    const LeftDescent d = left_descent(l, x);
    print(json{{"mode", to_string(mode)},
               {"x", to_json(x)},
               {"l", to_json(d.before)},
               {"l_after", to_json(d.after)},
               {"strict", d.strict}});
    return kOk;
}

int cmd_right(const Options& o) {
    const MpMap a = load_map(o.map_path);
    const Rational t = parse_arg(o.t, "--t");
    if (sgn(t) <= 0) throw UsageError("--t: must be positive");
    const NonnegVector v = o.direction.empty() ? NonnegVector::ones(a.dim())
                                               : parse_vector(o.direction, a.dim(), "--direction");
    if (!v.is_positive()) throw UsageError("--direction: coordinates must be positive");
    const RightEigenvector r(require_stable(a), v);
    const RightDescent d = right_descent(r, t);
    print(json{{"t", to_json(t)},
               {"r", to_json(d.r)},
               {"Ar", to_json(d.ar)},
               {"relation", to_string(d.relation)}});
    return kOk;
}

int cmd_solve(const Options& o) {
    const MpMap a = load_map(o.map_path);
    const NonnegVector b = parse_vector(o.vec, a.dim(), "--b");
    const StableMap s = require_stable(a);
    const NonnegVector x = maximal_solution(s, b);
    const bool residual = oplus(apply(a, x), b) == x;
    print(json{{"b", to_json(b)},
               {"x", to_json(x)},
               {"residual", residual ? "pass" : "fail"},
               {"iteration_steps", iterate_maximal_solution(s, b).steps}});
    return residual ? kOk : 1;
}

int cmd_simulate(const Options& o) {
    const MpMap a = load_map(o.map_path);
    const NonnegVector x0 = parse_vector(o.vec, a.dim(), "--x0");
    const Rational halt = parse_arg(o.halt, "--halt");
    if (sgn(halt) <= 0) throw UsageError("--halt: must be positive");
    if (o.steps < 1) throw UsageError("--steps: must be at least 1");
    const Trajectory tr = simulate(a, x0, o.steps, halt);
    if (o.approx) std::cout << "# approximate decimal values, " << o.digits << " significant digits\n";
    std::cout << 'k';
    for (std::size_t i = 1; i <= a.dim(); ++i) std::cout << ",x" << i;
    std::cout << '\n';
    for (std::size_t k = 0; k < tr.states.size(); ++k) {
        std::cout << k;
        for (const auto& c : tr.states[k].coords())
            std::cout << ',' << (o.approx ? format_approx(approx(c), o.digits) : to_string(c));
        std::cout << '\n';
    }
    std::cout << "# outcome: " << to_string(tr.outcome) << '\n';
    return kOk;
}

int cmd_certify(const Options& o) {
    const MpMap a = load_map(o.map_path);
    CertificateMode mode = CertificateMode::LeftSum;
    if (o.mode == "left-max") mode = CertificateMode::LeftMax;
    else if (o.mode == "max-separable") mode = CertificateMode::MaxSeparable;
    else if (!o.mode.empty() && o.mode != "left-sum")
        throw UsageError("--mode: expected left-sum, left-max or max-separable");
    require_stable(a);
    print(to_json(build_descent_certificate(a, mode, o.samples, o.seed)));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of max-preserving maps"};
    app.require_subcommand(1);
    Options o;
    int (*handler)(const Options&) = nullptr;

    auto add = [&](const char* name, const char* help, int (*fn)(const Options&)) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("map", o.map_path, "map file (JSON)")->required();
        sub->callback([&handler, fn] { handler = fn; });
        return sub;
    };

    add("validate", "parse a map file and check entry invariants", cmd_validate);
    add("check", "stability report", cmd_check);
    auto* closure = add("closure", "symbolic closure A*", cmd_closure);
    closure->add_option("--out", o.out_path, "write the closure map file here");
    closure->add_option("--grid", o.grid, "grid vectors for the applied-form check")->capture_default_str();
    auto* eval = add("eval", "apply the map to a vector", cmd_eval);
    eval->add_option("--vec", o.vec, "comma-separated rationals")->required();
    eval->add_flag("--approx", o.approx, "also print floating-point values");
    eval->add_option("--digits", o.digits, "significant digits for --approx")->capture_default_str();
    auto* left = add("left", "left eigenvector l(x) and l(Ax)", cmd_left);
    left->add_option("--vec", o.vec)->required();
    left->add_option("--weights", o.weights, "positive weights (default all ones)");
    left->add_option("--mode", o.mode, "sum or max");
    auto* right = add("right", "right eigenvector r(t) and A(r(t))", cmd_right);
    right->add_option("--t", o.t)->capture_default_str();
    right->add_option("--direction", o.direction, "positive direction (default all ones)");
    auto* solve = add("solve", "maximal solution of x <= Ax (+) b", cmd_solve);
    solve->add_option("--b", o.vec)->required();
    auto* sim = add("simulate", "trajectory x(k+1) = A x(k) as CSV", cmd_simulate);
    sim->add_option("--x0", o.vec)->required();
    sim->add_option("--steps", o.steps)->capture_default_str();
    sim->add_option("--halt", o.halt, "stop once the max-norm drops below this")->capture_default_str();
    sim->add_flag("--approx", o.approx, "decimal output instead of exact rationals");
    sim->add_option("--digits", o.digits)->capture_default_str();
    auto* cert = add("certify", "sampled descent certificate", cmd_certify);
    cert->add_option("--mode", o.mode, "left-sum, left-max or max-separable");
    cert->add_option("--samples", o.samples)->capture_default_str();
    cert->add_option("--seed", o.seed)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return handler(o);
    } catch (const NotStableExit& e) {
        return e.code;
    } catch (const UsageError& e) {
        std::cerr << "maxpres: " << e.what() << '\n';
        return kUsage;
    } catch (const DataError& e) {
        std::cerr << "maxpres: " << e.what() << '\n';
        return kDataFormat;
    } catch (const DimensionMismatch& e) {
        std::cerr << "maxpres: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "maxpres: " << e.what() << '\n';
        return 1;
    }
}
