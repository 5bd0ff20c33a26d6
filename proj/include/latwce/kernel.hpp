// include/latwce/kernel.hpp — the univariate kernel eta and the d-variate
// reproducing kernel K_{d,gamma}.

#pragma once

#include "latwce/numeric.hpp"
#include "latwce/weights.hpp"

#include <span>

namespace latwce {

/// eta(x,y) = (1/2) B2(|x-y|) + B1(x) B1(y) for x, y in [0,1).
template <class T>
inline T eta(const T& x, const T& y) {
    check_unit_interval(x, "eta", false);
    check_unit_interval(y, "eta", false);
    T diff = x < y ? T(y - x) : T(x - y);
    return T(frac_of<T>(1, 2) * b2(diff) + b1(x) * b1(y));
}

Scalar eta(const Scalar& x, const Scalar& y);

namespace detail {

/// sum_{nonempty u} gamma_u prod_{j in u} v_j, for per-coordinate values v.
/// Product weights use prod_j (1 + gamma_j v_j) - 1; order-dependent weights
/// go through elementary symmetric polynomials; explicit weights iterate
/// their stored entries (canonical order). scratch avoids reallocation in
/// pairwise double-sum loops.
template <class T>
T weighted_subset_sum(std::span<const T> v, const WeightsData<T>& w, std::vector<T>& scratch) {
    switch (w.kind) {
    case WeightKind::Product: {
        T acc = frac_of<T>(1, 1);
        for (int j = 0; j < w.d; ++j)
            acc = acc * (frac_of<T>(1, 1) + w.gammas[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)]);
        return T(acc - frac_of<T>(1, 1));
    }
    case WeightKind::OrderDependent: {
        // e_m(v_1..v_d), then sum_m Gamma_m e_m.
        auto& e = scratch;
        e.assign(static_cast<std::size_t>(w.d) + 1, frac_of<T>(0, 1));
        e[0] = frac_of<T>(1, 1);
        for (int j = 0; j < w.d; ++j)
            for (int m = std::min(j + 1, w.d); m >= 1; --m)
                e[static_cast<std::size_t>(m)] =
                    e[static_cast<std::size_t>(m)] + v[static_cast<std::size_t>(j)] * e[static_cast<std::size_t>(m) - 1];
        T acc = frac_of<T>(0, 1);
        for (int m = 1; m <= w.d; ++m)
            acc = acc + w.order[static_cast<std::size_t>(m) - 1] * e[static_cast<std::size_t>(m)];
        return acc;
    }
    case WeightKind::Explicit: {
        T acc = frac_of<T>(0, 1);
        for (const auto& [mask, g] : w.entries) {
            T prod = g;
            for (std::uint32_t bits = mask; bits; bits &= bits - 1)
                prod = prod * v[static_cast<std::size_t>(std::countr_zero(bits))];
            acc = acc + prod;
        }
        return acc;
    }
    }
    throw std::logic_error("unreachable");
}

template <class T>
T weighted_subset_sum(std::span<const T> v, const WeightsData<T>& w) {
    std::vector<T> scratch;
    return weighted_subset_sum(v, w, scratch);
}

} // namespace detail

/// K_{d,gamma}(x,y) = sum_u gamma_u prod_{j in u} eta(x_j,y_j), empty set
/// contributing 1.
template <class T>
T kernel_eval(std::span<const T> x, std::span<const T> y, const WeightsData<T>& w) {
    if (static_cast<int>(x.size()) != w.d || static_cast<int>(y.size()) != w.d)
        throw std::domain_error("kernel_eval: dimension mismatch");
    std::vector<T> etas;
    etas.reserve(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) etas.push_back(eta(x[j], y[j]));
    return T(frac_of<T>(1, 1) + detail::weighted_subset_sum<T>(etas, w));
}

/// Point on [0,1)^d for the Scalar-level API; all coordinates share one mode.
using Point = std::vector<Scalar>;

Scalar kernel_eval(const Point& x, const Point& y, const Weights& w);

} // namespace latwce
