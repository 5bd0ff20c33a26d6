#include "latwce/wce.hpp"

#include "latwce/parallel.hpp"

#include <cmath>

namespace latwce {

const char* wce_method_name(WceMethod m) {
    switch (m) {
    case WceMethod::DoubleSum: return "double-sum";
    case WceMethod::ExhaustiveAvg: return "exhaustive-avg";
    case WceMethod::FactorizedAvg: return "factorized-avg";
    case WceMethod::QuadratureIdentity: return "quadrature-identity";
    }
    return "?";
}

namespace {

void check_dims(int zd, const Weights& w, const char* who) {
    if (zd != w.dimension())
        throw std::domain_error(std::string(who) + ": z has dimension " + std::to_string(zd) +
                                " but weights have d = " + std::to_string(w.dimension()));
}

void check_value_sign(const Scalar& v, const char* who) {
    if (v.is_exact()) {
        if (sgn(v.rational()) < 0)
            throw std::logic_error(std::string(who) + ": negative exact e^2 (internal error)");
    } else if (v.as_double() < -1e-12) {
        throw std::logic_error(std::string(who) + ": e^2 below -1e-12 (internal error)");
    }
}

// eta on [0,1) without the domain re-checks; lattice coordinates are in
// range by construction.
inline double eta_raw(double x, double y) {
    double t = std::abs(x - y);
    return 0.5 * (t * t - t + 1.0 / 6.0) + (x - 0.5) * (y - 0.5);
}

inline Rational eta_raw(const Rational& x, const Rational& y) {
    Rational t = x < y ? Rational(y - x) : Rational(x - y);
    return Rational(make_rational(1, 2) * (t * t - t + make_rational(1, 6)) +
                    (x - make_rational(1, 2)) * (y - make_rational(1, 2)));
}

template <class T>
std::vector<T> flat_coords(const LatticePointSet& pts) {
    std::vector<T> c(static_cast<std::size_t>(pts.n()) * pts.dimension());
    for (long long i = 0; i < pts.n(); ++i)
        for (int j = 0; j < pts.dimension(); ++j) {
            if constexpr (std::is_same_v<T, double>)
                c[static_cast<std::size_t>(i) * pts.dimension() + j] = pts.coord_double(i, j);
            else
                c[static_cast<std::size_t>(i) * pts.dimension() + j] = pts.coord_exact(i, j);
        }
    return c;
}

// Row i of the double sum: sum over k = 0..i with off-diagonal pairs doubled.
template <class T>
T pair_row_sum(const std::vector<T>& coords, int d, long long i, const WeightsData<T>& w, std::vector<T>& etas,
               std::vector<T>& scratch) {
    T row = frac_of<T>(0, 1);
    const T* xi = coords.data() + static_cast<std::size_t>(i) * d;
    for (long long k = 0; k <= i; ++k) {
        const T* xk = coords.data() + static_cast<std::size_t>(k) * d;
        for (int j = 0; j < d; ++j) etas[static_cast<std::size_t>(j)] = eta_raw(xi[j], xk[j]);
        T term = detail::weighted_subset_sum<T>(etas, w, scratch);
        row = row + (k < i ? T(term + term) : term);
    }
    return row;
}

template <class T>
T wce_squared_impl(const LatticePointSet& pts, const WeightsData<T>& w) {
    const int d = pts.dimension();
    if (d != w.d) throw std::domain_error("wce: point set and weights dimension mismatch");
    auto coords = flat_coords<T>(pts);

    if constexpr (std::is_same_v<T, double>) {
        constexpr std::int64_t kChunk = 64;
        double total = ordered_reduce<double>(
            pts.n(), kChunk, 0.0,
            [&](std::int64_t b, std::int64_t e) {
                std::vector<double> etas(static_cast<std::size_t>(d));
                std::vector<double> scratch;
                double part = 0.0;
                for (std::int64_t i = b; i < e; ++i) part += pair_row_sum<double>(coords, d, i, w, etas, scratch);
                return part;
            },
            [](double a, double b2_) { return a + b2_; });
        return total / (static_cast<double>(pts.n()) * static_cast<double>(pts.n()));
    } else {
        std::vector<T> etas(static_cast<std::size_t>(d), frac_of<T>(0, 1));
        std::vector<T> scratch;
        T total = frac_of<T>(0, 1);
        for (long long i = 0; i < pts.n(); ++i) total = total + pair_row_sum<T>(coords, d, i, w, etas, scratch);
        return T(total * frac_of<T>(1, pts.n() * pts.n()));
    }
}

} // namespace

double wce_squared_double(const LatticePointSet& pts, const WeightsData<double>& w) {
    return wce_squared_impl<double>(pts, w);
}

Rational wce_squared_exact(const LatticePointSet& pts, const WeightsData<Rational>& w) {
    return wce_squared_impl<Rational>(pts, w);
}

WceResult wce_squared(const GeneratingVector& gv, const Weights& w, Mode mode) {
    check_dims(gv.dimension(), w, "wce_squared");
    auto pts = LatticePointSet::build(gv);
    Scalar value = mode == Mode::Exact ? Scalar::exact(wce_squared_exact(pts, realize<Rational>(w)))
                                       : Scalar::floating(wce_squared_double(pts, realize<double>(w)));
    check_value_sign(value, "wce_squared");
    return WceResult{value, gv.n, gv.dimension(), gv.z, mode, WceMethod::DoubleSum};
}

WceResult wce_squared_via_quadrature_identity(const GeneratingVector& gv, const Weights& w, Mode mode) {
    check_dims(gv.dimension(), w, "wce_squared_via_quadrature_identity");
    auto pts = LatticePointSet::build(gv);
    Scalar q;
    if (mode == Mode::Exact) {
        auto wd = realize<Rational>(w);
        auto g = [&](const std::vector<Rational>& y) {
            Rational s = make_rational(0);
            for (long long i = 0; i < pts.n(); ++i) {
                auto xi = pts.point_exact(i);
                s += kernel_eval<Rational>(xi, y, wd);
            }
            return Rational(make_rational(1) - s * make_rational(1, pts.n()));
        };
        q = Scalar::exact(qmc_quadrature<Rational>(pts, g));
    } else {
        auto wd = realize<double>(w);
        auto g = [&](const std::vector<double>& y) {
            double s = 0.0;
            for (long long i = 0; i < pts.n(); ++i) {
                auto xi = pts.point_double(i);
                s += kernel_eval<double>(xi, y, wd);
            }
            return 1.0 - s / static_cast<double>(pts.n());
        };
        q = Scalar::floating(qmc_quadrature<double>(pts, g));
    }
    Scalar value = -q;
    check_value_sign(value, "wce_squared_via_quadrature_identity");
    return WceResult{value, gv.n, gv.dimension(), gv.z, mode, WceMethod::QuadratureIdentity};
}

namespace {

long long exhaustive_count(long long n, int d) {
    long long count = 1;
    for (int j = 0; j < d; ++j) {
        if (count > kExhaustiveAvgCap / (n - 1) + 1) return kExhaustiveAvgCap + 1;
        count *= n - 1;
    }
    return count;
}

// Decode linear index t into z (z_d varies fastest).
std::vector<long long> decode_z(long long t, long long n, int d) {
    std::vector<long long> z(static_cast<std::size_t>(d));
    for (int j = d - 1; j >= 0; --j) {
        z[static_cast<std::size_t>(j)] = 1 + t % (n - 1);
        t /= n - 1;
    }
    return z;
}

void advance_z(std::vector<long long>& z, long long n) {
    for (int j = static_cast<int>(z.size()) - 1; j >= 0; --j) {
        if (z[static_cast<std::size_t>(j)] < n - 1) {
            ++z[static_cast<std::size_t>(j)];
            return;
        }
        z[static_cast<std::size_t>(j)] = 1;
    }
}

} // namespace

WceResult avg_wce_squared_exhaustive(long long n, int d, const Weights& w, Mode mode) {
    if (n < 2) throw std::domain_error("avg_wce_squared_exhaustive: n must be >= 2");
    check_dims(d, w, "avg_wce_squared_exhaustive");
    const long long count = exhaustive_count(n, d);
    if (count > kExhaustiveAvgCap)
        throw capacity_error("avg_wce_squared_exhaustive: (n-1)^d exceeds " + std::to_string(kExhaustiveAvgCap) +
                             "; use the factorized method");

    Scalar value;
    if (mode == Mode::Exact) {
        auto wd = realize<Rational>(w);
        Rational total = make_rational(0);
        std::vector<long long> z(static_cast<std::size_t>(d), 1);
        for (long long t = 0; t < count; ++t, advance_z(z, n))
            total += wce_squared_exact(LatticePointSet::build(GeneratingVector(n, z)), wd);
        value = Scalar::exact(Rational(total * make_rational(1, count)));
    } else {
        auto wd = realize<double>(w);
        constexpr std::int64_t kChunk = 1024;
        double total = ordered_reduce<double>(
            count, kChunk, 0.0,
            [&](std::int64_t b, std::int64_t e) {
                double part = 0.0;
                std::vector<long long> z = decode_z(b, n, d);
                for (std::int64_t t = b; t < e; ++t, advance_z(z, n))
                    part += wce_squared_double(LatticePointSet::build(GeneratingVector(n, z)), wd);
                return part;
            },
            [](double a, double b2_) { return a + b2_; });
        value = Scalar::floating(total / static_cast<double>(count));
    }
    check_value_sign(value, "avg_wce_squared_exhaustive");
    return WceResult{value, n, d, std::nullopt, mode, WceMethod::ExhaustiveAvg};
}

namespace {

// Triangular pair-average table M(i,k), i <= k.
template <class T>
class PairAverageTable {
public:
    PairAverageTable(long long n, Mode) : n_(n) {
        rows_.resize(static_cast<std::size_t>(n) * (n + 1) / 2);
        parallel_chunks(n, 8, [&](std::int64_t kb, std::int64_t ke) {
            for (std::int64_t k = kb; k < ke; ++k) fill_row(k);
        });
    }

    const T& at(long long i, long long k) const { // requires i <= k
        return rows_[static_cast<std::size_t>(k) * (k + 1) / 2 + i];
    }

private:
    void fill_row(long long k) {
        for (long long i = 0; i <= k; ++i) {
            T sum = frac_of<T>(0, 1);
            long long a = 0, b = 0; // (i z) mod n and (k z) mod n, z ascending
            for (long long z = 1; z <= n_ - 1; ++z) {
                a += i;
                if (a >= n_) a -= n_;
                b += k;
                if (b >= n_) b -= n_;
                if constexpr (std::is_same_v<T, double>)
                    sum += eta_raw(static_cast<double>(a) / static_cast<double>(n_),
                                   static_cast<double>(b) / static_cast<double>(n_));
                else
                    sum += eta_raw(make_rational(a, n_), make_rational(b, n_));
            }
            rows_[static_cast<std::size_t>(k) * (k + 1) / 2 + i] = T(sum * frac_of<T>(1, n_ - 1));
        }
    }

    long long n_;
    std::vector<T> rows_;
};

// sum_m W_m M^m by Horner.
template <class T>
T order_poly(const std::vector<T>& w_orders, const T& m) {
    T acc = frac_of<T>(0, 1);
    for (std::size_t idx = w_orders.size(); idx > 0; --idx) acc = T((acc + w_orders[idx - 1]) * m);
    return acc;
}

template <class T>
T factorized_avg_impl(long long n, const std::vector<T>& w_orders) {
    PairAverageTable<T> table(n, Mode::Float);
    T total = frac_of<T>(0, 1);
    for (long long k = 0; k < n; ++k) {
        T row = frac_of<T>(0, 1);
        for (long long i = 0; i <= k; ++i) {
            T term = order_poly<T>(w_orders, table.at(i, k));
            row = row + (i < k ? T(term + term) : term);
        }
        total = total + row;
    }
    return T(total * frac_of<T>(1, n * n));
}

} // namespace

WceResult avg_wce_squared_factorized(long long n, int d, const Weights& w, Mode mode) {
    if (n < 2) throw std::domain_error("avg_wce_squared_factorized: n must be >= 2");
    check_dims(d, w, "avg_wce_squared_factorized");
    if (n > kFactorizedAvgCapN)
        throw capacity_error("avg_wce_squared_factorized: n = " + std::to_string(n) + " exceeds the O(n^3) guard (" +
                             std::to_string(kFactorizedAvgCapN) + ")");

    Scalar value;
    if (mode == Mode::Exact) {
        value = Scalar::exact(factorized_avg_impl<Rational>(n, w.by_order()));
    } else {
        value = Scalar::floating(factorized_avg_impl<double>(n, w.by_order_double()));
    }
    check_value_sign(value, "avg_wce_squared_factorized");
    return WceResult{value, n, d, std::nullopt, mode, WceMethod::FactorizedAvg};
}

} // namespace latwce
