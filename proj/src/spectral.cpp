#include "maxpres/spectral.hpp"

#include <functional>
#include <stdexcept>

namespace maxpres {

namespace {

NonnegVector require_positive(NonnegVector v, std::size_t n, const char* what) {
    require_same_size(v.size(), n, what);
    if (!v.is_positive()) throw Error(std::string(what) + " must be strictly positive");
    return v;
}

}  // namespace

LeftEigenfunctional::LeftEigenfunctional(StableMap a, LeftMode mode)
    : LeftEigenfunctional(a, NonnegVector::ones(a.dim()), mode) {}

LeftEigenfunctional::LeftEigenfunctional(StableMap a, NonnegVector weights, LeftMode mode)
    : a_(std::move(a)), weights_(require_positive(std::move(weights), a_.dim(), "weights")), mode_(mode) {}

Rational LeftEigenfunctional::operator()(const NonnegVector& x) const {
    const NonnegVector y = a_.closure_apply(x);
    Rational acc = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const Rational term = weights_[i] * y[i];
        acc = mode_ == LeftMode::Sum ? acc + term : max(acc, term);
    }
    return acc;
}

LeftDescent left_descent(const LeftEigenfunctional& l, const NonnegVector& x) {
    LeftDescent d{l(x), l(apply(l.map().map(), x)), false};
    d.strict = d.after < d.before;
    return d;
}

RightEigenvector::RightEigenvector(StableMap a) : RightEigenvector(a, NonnegVector::ones(a.dim())) {}

RightEigenvector::RightEigenvector(StableMap a, NonnegVector direction)
    : a_(std::move(a)), direction_(require_positive(std::move(direction), a_.dim(), "direction")) {}

NonnegVector RightEigenvector::operator()(const Rational& t) const {
    if (t < 0) throw Error("right eigenvector needs t >= 0");
    return a_.closure_apply(NonnegVector::scaled(t, direction_));
}

std::vector<ScalarFn> RightEigenvector::coordinate_functions() const {
    const MpMap star = a_.closure().star;
    const std::size_t n = star.dim();
    std::vector<ScalarFn> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<ScalarFn> terms;
        for (std::size_t j = 0; j < n; ++j) {
            if (star(i, j).is_zero()) continue;
            terms.push_back(compose(star(i, j), ScalarFn::linear(direction_[j])));
        }
        out.push_back(max_of(terms));
    }
    return out;
}

RightDescent right_descent(const RightEigenvector& r, const Rational& t) {
    if (t <= 0) throw Error("right descent needs t > 0");
    NonnegVector rt = r(t);
    NonnegVector ar = apply(r.map().map(), rt);
    const OrderRelation rel = compare_vectors(ar, rt);
    return {std::move(ar), std::move(rt), rel};
}

MaxSeparableLyapunov::MaxSeparableLyapunov(const RightEigenvector& r) : components_(r.coordinate_functions()) {}

Rational MaxSeparableLyapunov::operator()(const NonnegVector& x) const {
    require_same_size(x.size(), components_.size(), "lyapunov");
    Rational v = 0;
    for (std::size_t i = 0; i < x.size(); ++i) v = max(v, generalized_inverse(components_[i], x[i]));
    return v;
}

Rational max_separable_lyapunov(const RightEigenvector& r, const NonnegVector& x) {
    return MaxSeparableLyapunov(r)(x);
}

NonnegVector draw_positive_vector(std::mt19937_64& rng, std::size_t n) {
    std::vector<Rational> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned long p = 1 + rng() % 1000;
        const unsigned long q = 1 + rng() % 1000;
        Rational r(p, q);
        r.canonicalize();
        c.push_back(std::move(r));
    }
    return NonnegVector(std::move(c));
}

DescentCertificate build_descent_certificate(const MpMap& a, CertificateMode mode, std::size_t sample_count,
                                             std::uint64_t seed) {
    if (sample_count < 1) throw Error("certificate needs at least one sample");
    StableMap stable = StableMap::certify(a);
    std::mt19937_64 rng(seed);

    std::function<Rational(const NonnegVector&)> value;
    switch (mode) {
        case CertificateMode::LeftSum:
        case CertificateMode::LeftMax: {
            LeftEigenfunctional l(stable, mode == CertificateMode::LeftSum ? LeftMode::Sum : LeftMode::Max);
            value = [l](const NonnegVector& x) { return l(x); };
            break;
        }
        case CertificateMode::MaxSeparable: {
            MaxSeparableLyapunov v{RightEigenvector(stable)};
            value = [v](const NonnegVector& x) { return v(x); };
            break;
        }
    }

    DescentCertificate cert;
    cert.mode = mode;
    cert.seed = seed;
    cert.all_strict = true;
    cert.all_weak = true;
    cert.samples.reserve(sample_count);
    for (std::size_t k = 0; k < sample_count; ++k) {
        NonnegVector x = draw_positive_vector(rng, a.dim());
        Rational before = value(x);
        Rational after = value(apply(a, x));
        cert.all_strict = cert.all_strict && after < before;
        cert.all_weak = cert.all_weak && after <= before;
        if (mode == CertificateMode::LeftSum && !(after < before))
            throw std::logic_error("left eigenvector failed strict descent at x = " + to_string(x));
        cert.samples.push_back({std::move(x), std::move(before), std::move(after)});
    }
    return cert;
}

const char* to_string(CertificateMode m) {
    switch (m) {
        case CertificateMode::LeftSum: return "left-sum";
        case CertificateMode::LeftMax: return "left-max";
        case CertificateMode::MaxSeparable: return "max-separable";
    }
    return "?";
}

const char* to_string(LeftMode m) { return m == LeftMode::Sum ? "sum" : "max"; }

}  // namespace maxpres
