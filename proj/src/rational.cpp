#include "tightspan/rational.hpp"

#include <algorithm>
#include <cctype>

namespace tightspan {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(std::string_view token, std::size_t position) {
    auto fail = [&](const std::string& why) -> Rational {
        throw ParseError("token " + std::to_string(position) + " '" + std::string(token) + "': " + why, position);
    };
    if (token.empty()) return fail("empty token");
    std::string_view num = token;
    std::string_view den;
    if (auto slash = token.find('/'); slash != std::string_view::npos) {
        num = token.substr(0, slash);
        den = token.substr(slash + 1);
        if (!den.empty() && den.front() == '-') return fail("negative denominator");
        if (!all_digits(den)) return fail("malformed denominator");
    }
    std::string_view digits = num;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (!all_digits(digits)) return fail("malformed rational");

    std::string num_str(num.front() == '+' ? num.substr(1) : num);
    Rational q;
    if (den.empty()) {
        q = Rational(Integer(num_str));
    } else {
        Integer d(std::string{den});
        if (d == 0) return fail("zero denominator");
        q = Rational(Integer(num_str), d);
        q.canonicalize();
    }
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

IntVector primitive(const RationalVector& v) {
    Integer lcm = 1;
    for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (lcm / v[i].get_den());
    return primitive(std::move(out));
}

IntVector primitive(IntVector v) {
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

RationalVector to_rational(const IntVector& v) {
    RationalVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

Integer dot(const IntVector& a, const IntVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
    return s;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    return s;
}

bool lex_less(const IntVector& a, const IntVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(const IntVector& v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += v[i].get_str();
    }
    return s;
}

std::string to_string(const RationalVector& v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += to_string(v[i]);
    }
    return s;
}

}  // namespace tightspan
