// include/latwce/scalar.hpp — Dual-mode scalar: IEEE double or exact GMP rational.

#pragma once

#include <gmpxx.h>

#include <charconv>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace latwce {

/// Exact rational with unbounded numerator/denominator. mpq_class keeps
/// values canonical (lowest terms, positive denominator) once canonicalized;
/// every construction in this library goes through make_rational or
/// rational_from_string, which guarantee that.
using Rational = mpq_class;

enum class Mode { Float, Exact };

inline const char* mode_name(Mode m) { return m == Mode::Float ? "float" : "exact"; }

/// Thrown when arithmetic would silently mix FLOAT and EXACT operands.
struct mode_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Thrown by operations whose cost guard (2^d subset sums, O(n^3) tables, ...)
/// is exceeded. The message names the guard and, where one exists, the
/// cheaper alternative.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational make_rational(long long num, long long den = 1);

/// Parses "p/q", "-3", "0.125", "2.5e-3". Decimal strings parse exactly
/// (0.1 -> 1/10), unlike going through a double first.
Rational rational_from_string(std::string_view s);

/// Exact rational equal to the given double (binary expansion, not decimal).
Rational rational_from_double(double v);

inline double to_double(const Rational& q) { return q.get_d(); }

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Shortest round-trip decimal form via std::to_chars; locale independent.
std::string format_double(double v);

class Scalar {
public:
    Scalar() : v_(0.0) {}

    static Scalar floating(double v) { return Scalar(v); }
    static Scalar exact(Rational v) { return Scalar(std::move(v)); }
    static Scalar exact(long long num, long long den = 1) { return Scalar(make_rational(num, den)); }
    static Scalar of(Mode m, double v) {
        return m == Mode::Float ? floating(v) : exact(rational_from_double(v));
    }

    Mode mode() const { return std::holds_alternative<double>(v_) ? Mode::Float : Mode::Exact; }
    bool is_exact() const { return mode() == Mode::Exact; }

    /// Conversion to double is always allowed; it is the designated
    /// "last step" out of EXACT mode.
    double as_double() const {
        return is_exact() ? to_double(std::get<Rational>(v_)) : std::get<double>(v_);
    }

    const Rational& rational() const {
        if (!is_exact()) throw mode_error("Scalar: rational() on a FLOAT-mode value");
        return std::get<Rational>(v_);
    }

    std::string str() const {
        return is_exact() ? to_string(std::get<Rational>(v_)) : format_double(std::get<double>(v_));
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return a.zip(b, "+", [](double x, double y) { return x + y; },
                     [](const Rational& x, const Rational& y) { return Rational(x + y); });
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return a.zip(b, "-", [](double x, double y) { return x - y; },
                     [](const Rational& x, const Rational& y) { return Rational(x - y); });
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return a.zip(b, "*", [](double x, double y) { return x * y; },
                     [](const Rational& x, const Rational& y) { return Rational(x * y); });
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
        return a.zip(b, "/", [](double x, double y) { return x / y; },
                     [](const Rational& x, const Rational& y) { return Rational(x / y); });
    }
    Scalar operator-() const {
        return is_exact() ? exact(Rational(-std::get<Rational>(v_))) : floating(-std::get<double>(v_));
    }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.compare(b) == 0; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.compare(b) != 0; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.compare(b) < 0; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return a.compare(b) <= 0; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return a.compare(b) > 0; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return a.compare(b) >= 0; }

    bool is_zero() const {
        return is_exact() ? sgn(std::get<Rational>(v_)) == 0 : std::get<double>(v_) == 0.0;
    }

private:
    explicit Scalar(double v) : v_(v) {}
    explicit Scalar(Rational v) : v_(std::move(v)) {}

    template <class FF, class FQ>
    Scalar zip(const Scalar& o, const char* op, FF ff, FQ fq) const {
        if (mode() != o.mode())
            throw mode_error(std::string("Scalar: operator ") + op + " mixes FLOAT and EXACT operands");
        if (is_exact()) return exact(fq(std::get<Rational>(v_), std::get<Rational>(o.v_)));
        return floating(ff(std::get<double>(v_), std::get<double>(o.v_)));
    }

    int compare(const Scalar& o) const {
        if (mode() != o.mode())
            throw mode_error("Scalar: comparison mixes FLOAT and EXACT operands");
        if (is_exact()) return cmp(std::get<Rational>(v_), std::get<Rational>(o.v_));
        double a = std::get<double>(v_), b = std::get<double>(o.v_);
        return a < b ? -1 : (a > b ? 1 : 0);
    }

    std::variant<double, Rational> v_;
};

} // namespace latwce
