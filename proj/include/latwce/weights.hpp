// include/latwce/weights.hpp — subset weight collections gamma_u.
//
// Three models: PRODUCT (gamma_u = prod_{j in u} gamma_j), ORDER_DEPENDENT
// (gamma_u = Gamma_{|u|}) and EXPLICIT (stored per subset, missing non-empty
// subsets are 0). gamma_emptyset is fixed to 1 in every model. Weights are
// stored as exact rationals and realized to double at the point of use.

#pragma once

#include "latwce/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace latwce {

enum class WeightKind { Product, OrderDependent, Explicit };

/// Hard cap for anything that iterates all 2^d subsets.
inline constexpr int kSubsetDimCap = 20;

/// Subsets of {1,...,d} in canonical order: by size, then lexicographically
/// on the ascending index list. d = 2 gives {}, {1}, {2}, {1,2}.
std::vector<std::vector<int>> subsets_in_canonical_order(int d);

/// Bitmask form of the same enumeration (bit j-1 set <=> j in u).
std::vector<std::uint32_t> subset_masks_in_canonical_order(int d);

std::uint32_t subset_to_mask(const std::vector<int>& u, int d, const char* who);

class Weights {
public:
    static Weights product(std::vector<Rational> gammas);
    static Weights order_dependent(std::vector<Rational> big_gammas);
    /// entries: bitmask -> weight; indices beyond d or an entry for the empty
    /// set are rejected (gamma_emptyset is fixed to 1).
    static Weights explicit_map(int d, std::map<std::uint32_t, Rational> entries);

    WeightKind kind() const { return kind_; }
    int dimension() const { return d_; }

    /// gamma_u for u given as ascending 1-based indices; gamma_{} = 1.
    Rational gamma(const std::vector<int>& u) const;
    Rational gamma_mask(std::uint32_t mask) const;
    Scalar gamma(const std::vector<int>& u, Mode mode) const;

    /// W_m = sum_{|u| = m} gamma_u for m = 1..d. All bound evaluators and the
    /// factorized average only need these aggregates. PRODUCT uses the
    /// elementary-symmetric recurrence (O(d^2), no subset iteration);
    /// EXPLICIT requires d <= 20.
    std::vector<Rational> by_order() const;
    std::vector<double> by_order_double() const;

    /// Weights restricted to subsets of {1,...,s}; used by the CBC search.
    Weights restricted_to(int s) const;

    /// Compact descriptor, e.g. "product:[1,1/4]".
    std::string describe() const;

    const std::vector<Rational>& product_gammas() const;
    const std::vector<Rational>& order_gammas() const;
    const std::map<std::uint32_t, Rational>& explicit_entries() const { return explicit_; }

    /// True when every non-empty subset weight is zero.
    bool is_zero() const;

private:
    Weights(WeightKind k, int d) : kind_(k), d_(d) {}

    WeightKind kind_;
    int d_;
    std::vector<Rational> payload_; // Product: gamma_j; OrderDependent: Gamma_m
    std::map<std::uint32_t, Rational> explicit_;
};

/// Weights materialized in the computation's numeric type. For Explicit the
/// entries are held in canonical subset order.
template <class T>
struct WeightsData {
    WeightKind kind;
    int d;
    std::vector<T> gammas;                               // Product
    std::vector<T> order;                                // OrderDependent, index m-1
    std::vector<std::pair<std::uint32_t, T>> entries;    // Explicit
};

template <class T> WeightsData<T> realize(const Weights& w);

extern template WeightsData<double> realize<double>(const Weights&);
extern template WeightsData<Rational> realize<Rational>(const Weights&);

} // namespace latwce
