#include "latwce/weights.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace latwce {

namespace {

void check_subset_dim(int d, const char* who) {
    if (d < 1) throw std::domain_error(std::string(who) + ": d must be >= 1");
    if (d > kSubsetDimCap)
        throw capacity_error(std::string(who) + ": d = " + std::to_string(d) + " exceeds the 2^d subset cap (" +
                             std::to_string(kSubsetDimCap) + "); use PRODUCT weights and the order-aggregated fast paths");
}

void check_nonnegative(const Rational& g, const char* who) {
    if (sgn(g) < 0) throw std::domain_error(std::string(who) + ": weights must be non-negative");
}

} // namespace

std::vector<std::vector<int>> subsets_in_canonical_order(int d) {
    check_subset_dim(d, "subset_iterator");
    std::vector<std::vector<int>> out;
    out.reserve(std::size_t{1} << d);
    out.push_back({});
    for (int m = 1; m <= d; ++m) {
        // Lexicographic combinations of size m.
        std::vector<int> u(m);
        for (int i = 0; i < m; ++i) u[i] = i + 1;
        for (;;) {
            out.push_back(u);
            int i = m - 1;
            while (i >= 0 && u[i] == d - (m - 1 - i)) --i;
            if (i < 0) break;
            ++u[i];
            for (int k = i + 1; k < m; ++k) u[k] = u[k - 1] + 1;
        }
    }
    return out;
}

std::vector<std::uint32_t> subset_masks_in_canonical_order(int d) {
    auto subs = subsets_in_canonical_order(d);
    std::vector<std::uint32_t> masks;
    masks.reserve(subs.size());
    for (const auto& u : subs) {
        std::uint32_t m = 0;
        for (int j : u) m |= 1u << (j - 1);
        masks.push_back(m);
    }
    return masks;
}

std::uint32_t subset_to_mask(const std::vector<int>& u, int d, const char* who) {
    std::uint32_t mask = 0;
    for (int j : u) {
        if (j < 1 || j > d)
            throw std::domain_error(std::string(who) + ": index " + std::to_string(j) + " outside {1,...," +
                                    std::to_string(d) + "}");
        std::uint32_t bit = 1u << (j - 1);
        if (mask & bit) throw std::domain_error(std::string(who) + ": duplicate index " + std::to_string(j));
        mask |= bit;
    }
    return mask;
}

Weights Weights::product(std::vector<Rational> gammas) {
    if (gammas.empty()) throw std::domain_error("Weights::product: need at least one gamma_j");
    for (const auto& g : gammas) check_nonnegative(g, "Weights::product");
    Weights w(WeightKind::Product, static_cast<int>(gammas.size()));
    w.payload_ = std::move(gammas);
    return w;
}

Weights Weights::order_dependent(std::vector<Rational> big_gammas) {
    if (big_gammas.empty()) throw std::domain_error("Weights::order_dependent: need at least Gamma_1");
    for (const auto& g : big_gammas) check_nonnegative(g, "Weights::order_dependent");
    Weights w(WeightKind::OrderDependent, static_cast<int>(big_gammas.size()));
    w.payload_ = std::move(big_gammas);
    return w;
}

Weights Weights::explicit_map(int d, std::map<std::uint32_t, Rational> entries) {
    check_subset_dim(d, "Weights::explicit_map");
    for (const auto& [mask, g] : entries) {
        if (mask == 0)
            throw std::domain_error("Weights::explicit_map: gamma for the empty set is fixed to 1 and cannot be set");
        if (mask >= (std::uint32_t{1} << d))
            throw std::domain_error("Weights::explicit_map: subset index outside {1,...," + std::to_string(d) + "}");
        check_nonnegative(g, "Weights::explicit_map");
    }
    Weights w(WeightKind::Explicit, d);
    w.explicit_ = std::move(entries);
    return w;
}

Rational Weights::gamma(const std::vector<int>& u) const {
    std::vector<int> sorted = u;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 1 || sorted[i] > d_)
            throw std::domain_error("gamma: index " + std::to_string(sorted[i]) + " outside {1,...," +
                                    std::to_string(d_) + "}");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw std::domain_error("gamma: duplicate index " + std::to_string(sorted[i]));
    }
    if (sorted.empty()) return make_rational(1);
    switch (kind_) {
    case WeightKind::Product: {
        Rational g = make_rational(1);
        for (int j : sorted) g *= payload_[static_cast<std::size_t>(j) - 1];
        return g;
    }
    case WeightKind::OrderDependent:
        return payload_[sorted.size() - 1];
    case WeightKind::Explicit:
        return gamma_mask(subset_to_mask(sorted, d_, "gamma"));
    }
    throw std::logic_error("unreachable");
}

Rational Weights::gamma_mask(std::uint32_t mask) const {
    if (d_ > 31) throw std::logic_error("gamma_mask: bitmask form requires d <= 31");
    if (mask >= (std::uint32_t{1} << d_))
        throw std::domain_error("gamma: subset outside {1,...," + std::to_string(d_) + "}");
    if (mask == 0) return make_rational(1);
    switch (kind_) {
    case WeightKind::Product: {
        Rational g = make_rational(1);
        for (int j = 0; j < d_; ++j)
            if (mask & (1u << j)) g *= payload_[static_cast<std::size_t>(j)];
        return g;
    }
    case WeightKind::OrderDependent:
        return payload_[static_cast<std::size_t>(std::popcount(mask)) - 1];
    case WeightKind::Explicit: {
        auto it = explicit_.find(mask);
        return it == explicit_.end() ? make_rational(0) : it->second;
    }
    }
    throw std::logic_error("unreachable");
}

Scalar Weights::gamma(const std::vector<int>& u, Mode mode) const {
    Rational g = gamma(u);
    return mode == Mode::Exact ? Scalar::exact(std::move(g)) : Scalar::floating(to_double(g));
}

std::vector<Rational> Weights::by_order() const {
    std::vector<Rational> w(static_cast<std::size_t>(d_), make_rational(0));
    switch (kind_) {
    case WeightKind::Product: {
        // e_m(gamma_1..gamma_d) via the usual one-pass recurrence.
        std::vector<Rational> e(static_cast<std::size_t>(d_) + 1, make_rational(0));
        e[0] = make_rational(1);
        for (int j = 0; j < d_; ++j)
            for (int m = std::min(j + 1, d_); m >= 1; --m)
                e[static_cast<std::size_t>(m)] += payload_[static_cast<std::size_t>(j)] * e[static_cast<std::size_t>(m) - 1];
        for (int m = 1; m <= d_; ++m) w[static_cast<std::size_t>(m) - 1] = e[static_cast<std::size_t>(m)];
        return w;
    }
    case WeightKind::OrderDependent: {
        // W_m = C(d,m) * Gamma_m.
        mpz_class binom = 1;
        for (int m = 1; m <= d_; ++m) {
            binom = binom * (d_ - m + 1) / m;
            w[static_cast<std::size_t>(m) - 1] = Rational(binom) * payload_[static_cast<std::size_t>(m) - 1];
        }
        return w;
    }
    case WeightKind::Explicit: {
        for (const auto& [mask, g] : explicit_)
            w[static_cast<std::size_t>(std::popcount(mask)) - 1] += g;
        return w;
    }
    }
    throw std::logic_error("unreachable");
}

std::vector<double> Weights::by_order_double() const {
    auto exact = by_order();
    std::vector<double> w(exact.size());
    for (std::size_t i = 0; i < exact.size(); ++i) w[i] = to_double(exact[i]);
    return w;
}

Weights Weights::restricted_to(int s) const {
    if (s < 1 || s > d_) throw std::domain_error("Weights::restricted_to: s outside {1,...,d}");
    switch (kind_) {
    case WeightKind::Product:
        return product({payload_.begin(), payload_.begin() + s});
    case WeightKind::OrderDependent:
        return order_dependent({payload_.begin(), payload_.begin() + s});
    case WeightKind::Explicit: {
        std::map<std::uint32_t, Rational> sub;
        const std::uint32_t keep = (std::uint32_t{1} << s) - 1;
        for (const auto& [mask, g] : explicit_)
            if ((mask & ~keep) == 0) sub.emplace(mask, g);
        return explicit_map(s, std::move(sub));
    }
    }
    throw std::logic_error("unreachable");
}

bool Weights::is_zero() const {
    if (kind_ == WeightKind::Explicit) {
        for (const auto& [mask, g] : explicit_)
            if (sgn(g) != 0) return false;
        return true;
    }
    // Product: any nonzero gamma_j gives a nonzero singleton weight.
    // OrderDependent: any nonzero Gamma_m gives nonzero weights at order m.
    for (const auto& g : payload_)
        if (sgn(g) != 0) return false;
    return true;
}

std::string Weights::describe() const {
    std::ostringstream os;
    switch (kind_) {
    case WeightKind::Product:
    case WeightKind::OrderDependent: {
        os << (kind_ == WeightKind::Product ? "product:[" : "order:[");
        for (std::size_t i = 0; i < payload_.size(); ++i)
            os << (i ? "," : "") << to_string(payload_[i]);
        os << "]";
        break;
    }
    case WeightKind::Explicit: {
        os << "explicit:d=" << d_ << ":{";
        bool first = true;
        for (const auto& [mask, g] : explicit_) {
            if (!first) os << ",";
            first = false;
            os << "{";
            bool fj = true;
            for (int j = 0; j < d_; ++j)
                if (mask & (1u << j)) {
                    os << (fj ? "" : " ") << (j + 1);
                    fj = false;
                }
            os << "}:" << to_string(g);
        }
        os << "}";
        break;
    }
    }
    return os.str();
}

const std::vector<Rational>& Weights::product_gammas() const {
    if (kind_ != WeightKind::Product) throw std::logic_error("product_gammas: not PRODUCT weights");
    return payload_;
}

const std::vector<Rational>& Weights::order_gammas() const {
    if (kind_ != WeightKind::OrderDependent) throw std::logic_error("order_gammas: not ORDER_DEPENDENT weights");
    return payload_;
}

template <class T>
WeightsData<T> realize(const Weights& w) {
    WeightsData<T> data;
    data.kind = w.kind();
    data.d = w.dimension();
    auto conv = [](const Rational& q) {
        if constexpr (std::is_same_v<T, double>) return to_double(q);
        else return q;
    };
    switch (w.kind()) {
    case WeightKind::Product:
        for (const auto& g : w.product_gammas()) data.gammas.push_back(conv(g));
        break;
    case WeightKind::OrderDependent:
        for (const auto& g : w.order_gammas()) data.order.push_back(conv(g));
        break;
    case WeightKind::Explicit: {
        // Canonical order keeps FLOAT subset sums reproducible.
        for (std::uint32_t mask : subset_masks_in_canonical_order(w.dimension())) {
            if (mask == 0) continue;
            auto it = w.explicit_entries().find(mask);
            if (it != w.explicit_entries().end() && sgn(it->second) != 0)
                data.entries.emplace_back(mask, conv(it->second));
        }
        break;
    }
    }
    return data;
}

template WeightsData<double> realize<double>(const Weights&);
template WeightsData<Rational> realize<Rational>(const Weights&);

} // namespace latwce
