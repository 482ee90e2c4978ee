#include "maxpres/rational.hpp"

#include <cctype>

namespace maxpres {

namespace {

bool valid_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                                 : text.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' ||
        den.front() == '+')
        throw FormatError("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    Integer p(n, 10);
    Integer q(std::string(den), 10);
    if (q == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int digits) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rational scaled = abs(q) * scale;
    Integer rounded = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
    Integer whole = rounded / scale;
    Integer frac = rounded % scale;
    std::string out = (q < 0 && rounded != 0) ? "-" : "";
    out += whole.get_str();
    if (digits > 0) {
        std::string f = frac.get_str();
        out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
    }
    return out;
}

Rational pow(const Rational& base, unsigned long exponent) {
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), exponent);
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::optional<Rational> exact_root(const Rational& q, unsigned long k) {
    if (k == 0) return std::nullopt;
    if (q < 0 && k % 2 == 0) return std::nullopt;
    Integer n, d;
    if (mpz_root(n.get_mpz_t(), q.get_num().get_mpz_t(), k) == 0) return std::nullopt;
    if (mpz_root(d.get_mpz_t(), q.get_den().get_mpz_t(), k) == 0) return std::nullopt;
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::optional<Rational> rational_power(const Rational& q, const Rational& exponent) {
    if (q == 0) return Rational(0);
    if (q == 1) return Rational(1);
    if (!exponent.get_num().fits_ulong_p() || !exponent.get_den().fits_ulong_p()) return std::nullopt;
    const auto root = exact_root(q, exponent.get_den().get_ui());
    if (!root) return std::nullopt;
    return pow(*root, exponent.get_num().get_ui());
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational power_of_two(int k) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k < 0 ? -k : k));
    return k < 0 ? Rational(Integer(1), p) : Rational(p);
}

}  // namespace maxpres
