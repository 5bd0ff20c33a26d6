#include "latwce/scalar.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdlib>

namespace latwce {

Rational make_rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

Rational rational_from_double(double v) {
    if (!std::isfinite(v)) throw std::domain_error("rational_from_double: non-finite input");
    Rational q;
    mpq_set_d(q.get_mpq_t(), v);
    return q;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// [sign] digits [. digits] [ (e|E) [sign] digits ]
Rational parse_decimal(std::string_view s) {
    std::string_view rest = s;
    bool neg = false;
    if (!rest.empty() && (rest[0] == '+' || rest[0] == '-')) {
        neg = rest[0] == '-';
        rest.remove_prefix(1);
    }
    long long exp10 = 0;
    if (auto epos = rest.find_first_of("eE"); epos != std::string_view::npos) {
        std::string_view es = rest.substr(epos + 1);
        rest = rest.substr(0, epos);
        bool eneg = false;
        if (!es.empty() && (es[0] == '+' || es[0] == '-')) {
            eneg = es[0] == '-';
            es.remove_prefix(1);
        }
        if (!all_digits(es) || es.size() > 6)
            throw std::domain_error("rational_from_string: bad exponent in '" + std::string(s) + "'");
        for (char c : es) exp10 = exp10 * 10 + (c - '0');
        if (eneg) exp10 = -exp10;
    }
    std::string digits;
    if (auto dot = rest.find('.'); dot != std::string_view::npos) {
        std::string_view frac = rest.substr(dot + 1);
        digits = std::string(rest.substr(0, dot)) + std::string(frac);
        exp10 -= static_cast<long long>(frac.size());
        if (rest.substr(0, dot).empty() && frac.empty())
            throw std::domain_error("rational_from_string: bare '.' in '" + std::string(s) + "'");
    } else {
        digits = std::string(rest);
    }
    if (!all_digits(digits))
        throw std::domain_error("rational_from_string: cannot parse '" + std::string(s) + "'");
    mpz_class num(digits, 10);
    if (neg) num = -num;
    mpz_class den(1);
    if (exp10 > 0) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exp10));
        num *= p;
    } else if (exp10 < 0) {
        mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(-exp10));
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace

Rational rational_from_string(std::string_view s) {
    if (s.empty()) throw std::domain_error("rational_from_string: empty string");
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view ns = s.substr(0, slash), ds = s.substr(slash + 1);
        std::string_view nb = ns;
        if (!nb.empty() && (nb[0] == '+' || nb[0] == '-')) nb.remove_prefix(1);
        if (!all_digits(nb) || !all_digits(ds))
            throw std::domain_error("rational_from_string: cannot parse '" + std::string(s) + "'");
        mpz_class num(std::string(ns), 10), den(std::string(ds), 10);
        if (den == 0) throw std::domain_error("rational_from_string: zero denominator in '" + std::string(s) + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    return parse_decimal(s);
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format_double(double v) {
    std::array<char, 64> buf;
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) return "nan";
    return std::string(buf.data(), end);
}

} // namespace latwce
