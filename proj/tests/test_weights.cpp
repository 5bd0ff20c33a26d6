#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latwce/weights.hpp"

#include <random>

using namespace latwce;

TEST_CASE("subset enumeration is ordered by size then lexicographically") {
    auto subs = subsets_in_canonical_order(2);
    REQUIRE(subs.size() == 4);
    CHECK(subs[0] == std::vector<int>{});
    CHECK(subs[1] == std::vector<int>{1});
    CHECK(subs[2] == std::vector<int>{2});
    CHECK(subs[3] == std::vector<int>{1, 2});

    auto masks3 = subset_masks_in_canonical_order(3);
    CHECK(masks3 == std::vector<std::uint32_t>{0, 1, 2, 4, 3, 5, 6, 7});

    CHECK(subsets_in_canonical_order(4).size() == 16);
    CHECK_THROWS_AS(subsets_in_canonical_order(0), std::domain_error);
    CHECK_THROWS_AS(subsets_in_canonical_order(21), capacity_error);
}

TEST_CASE("product weights multiply per-coordinate factors") {
    auto w = Weights::product({make_rational(1), make_rational(1, 2), make_rational(1, 3)});
    CHECK(w.kind() == WeightKind::Product);
    CHECK(w.dimension() == 3);
    CHECK(w.gamma({}) == make_rational(1));
    CHECK(w.gamma({1}) == make_rational(1));
    CHECK(w.gamma({2}) == make_rational(1, 2));
    CHECK(w.gamma({1, 3}) == make_rational(1, 3));
    CHECK(w.gamma({3, 1}) == make_rational(1, 3)); // order of indices is irrelevant
    CHECK(w.gamma({1, 2, 3}) == make_rational(1, 6));
    CHECK_THROWS_AS(w.gamma({0}), std::domain_error);
    CHECK_THROWS_AS(w.gamma({4}), std::domain_error);
    CHECK_THROWS_AS(w.gamma({1, 1}), std::domain_error);
}

TEST_CASE("order-dependent weights depend only on the subset size") {
    auto w = Weights::order_dependent({make_rational(1), make_rational(1, 4)});
    CHECK(w.dimension() == 2);
    CHECK(w.gamma({1}) == make_rational(1));
    CHECK(w.gamma({2}) == make_rational(1));
    CHECK(w.gamma({1, 2}) == make_rational(1, 4));
}

TEST_CASE("explicit weights default missing subsets to zero") {
    std::map<std::uint32_t, Rational> entries{{1u, make_rational(1)}, {3u, make_rational(1, 2)}};
    auto w = Weights::explicit_map(2, entries);
    CHECK(w.gamma({1}) == make_rational(1));
    CHECK(w.gamma({2}) == make_rational(0));
    CHECK(w.gamma({1, 2}) == make_rational(1, 2));
    CHECK(w.gamma({}) == make_rational(1));
}

TEST_CASE("explicit weights validate their construction") {
    CHECK_THROWS_AS(Weights::explicit_map(2, {{0u, make_rational(1)}}), std::domain_error);
    CHECK_THROWS_AS(Weights::explicit_map(2, {{4u, make_rational(1)}}), std::domain_error);
    CHECK_THROWS_AS(Weights::explicit_map(2, {{1u, make_rational(-1)}}), std::domain_error);
    CHECK_THROWS_AS(Weights::explicit_map(21, {}), capacity_error);
    CHECK_NOTHROW(Weights::explicit_map(20, {}));
}

TEST_CASE("negative weights are rejected in every model") {
    CHECK_THROWS_AS(Weights::product({make_rational(-1)}), std::domain_error);
    CHECK_THROWS_AS(Weights::order_dependent({make_rational(-1, 2)}), std::domain_error);
    CHECK_THROWS_AS(Weights::product({}), std::domain_error);
    CHECK_THROWS_AS(Weights::order_dependent({}), std::domain_error);
}

TEST_CASE("order aggregates W_m for product weights via elementary symmetric polynomials") {
    auto w = Weights::product({make_rational(1), make_rational(1, 2), make_rational(1, 3)});
    auto W = w.by_order();
    REQUIRE(W.size() == 3);
    CHECK(W[0] == make_rational(11, 6)); // 1 + 1/2 + 1/3
    CHECK(W[1] == make_rational(1));     // 1/2 + 1/3 + 1/6
    CHECK(W[2] == make_rational(1, 6));
}

TEST_CASE("order aggregates W_m for order-dependent weights use binomial counts") {
    auto w = Weights::order_dependent(
        {make_rational(1), make_rational(1, 2), make_rational(1, 4), make_rational(1, 8)});
    auto W = w.by_order();
    REQUIRE(W.size() == 4);
    CHECK(W[0] == make_rational(4));
    CHECK(W[1] == make_rational(3));
    CHECK(W[2] == make_rational(1));
    CHECK(W[3] == make_rational(1, 8));
}

TEST_CASE("order aggregates W_m for explicit weights bucket by subset size") {
    auto w = Weights::explicit_map(3, {{1u, make_rational(1)},
                                       {3u, make_rational(1, 2)},
                                       {6u, make_rational(1, 4)},
                                       {7u, make_rational(1, 8)}});
    auto W = w.by_order();
    REQUIRE(W.size() == 3);
    CHECK(W[0] == make_rational(1));
    CHECK(W[1] == make_rational(3, 4));
    CHECK(W[2] == make_rational(1, 8));
}

TEST_CASE("W_m sums against brute-force subset enumeration") {
    std::mt19937_64 rng(7);
    auto rand_q = [&] { return make_rational(static_cast<long long>(rng() % 5), 1 + static_cast<long long>(rng() % 4)); };
    for (int trial = 0; trial < 5; ++trial) {
        int d = 2 + static_cast<int>(rng() % 4);
        std::vector<Rational> gs;
        for (int j = 0; j < d; ++j) gs.push_back(rand_q());
        auto w = Weights::product(gs);
        auto W = w.by_order();
        std::vector<Rational> brute(static_cast<std::size_t>(d), make_rational(0));
        for (const auto& u : subsets_in_canonical_order(d))
            if (!u.empty()) brute[u.size() - 1] += w.gamma(u);
        for (int m = 1; m <= d; ++m) CHECK(W[m - 1] == brute[m - 1]);
    }
}

TEST_CASE("product order aggregates scale to high dimension without subset iteration") {
    // d = 64 with gamma_j = 1/j^2; 2^64 subsets would be unreachable, the
    // elementary-symmetric recurrence is O(d^2).
    std::vector<Rational> gs;
    for (int j = 1; j <= 64; ++j) gs.push_back(make_rational(1, static_cast<long long>(j) * j));
    auto w = Weights::product(gs);
    auto W = w.by_order();
    REQUIRE(W.size() == 64);
    Rational w1 = make_rational(0);
    for (int j = 1; j <= 64; ++j) w1 += make_rational(1, static_cast<long long>(j) * j);
    CHECK(W[0] == w1);
    CHECK(sgn(W[63]) > 0);
}

TEST_CASE("restriction to a prefix of coordinates") {
    auto w = Weights::product({make_rational(1), make_rational(1, 2), make_rational(1, 3)});
    auto r = w.restricted_to(2);
    CHECK(r.dimension() == 2);
    CHECK(r.gamma({2}) == make_rational(1, 2));
    CHECK_THROWS_AS(w.restricted_to(0), std::domain_error);
    CHECK_THROWS_AS(w.restricted_to(4), std::domain_error);

    auto e = Weights::explicit_map(3, {{1u, make_rational(1)}, {4u, make_rational(1, 2)}, {5u, make_rational(1, 3)}});
    auto er = e.restricted_to(2);
    CHECK(er.dimension() == 2);
    CHECK(er.gamma({1}) == make_rational(1));
    CHECK(er.gamma({2}) == make_rational(0));

    auto o = Weights::order_dependent({make_rational(1), make_rational(1, 2), make_rational(1, 4)});
    CHECK(o.restricted_to(1).gamma({1}) == make_rational(1));
}

TEST_CASE("weight descriptors are compact and exact") {
    CHECK(Weights::product({make_rational(1), make_rational(1, 4)}).describe() == "product:[1,1/4]");
    CHECK(Weights::order_dependent({make_rational(1, 2)}).describe() == "order:[1/2]");
    auto e = Weights::explicit_map(2, {{3u, make_rational(1, 2)}});
    CHECK(e.describe() == "explicit:d=2:{{1 2}:1/2}");
}

TEST_CASE("zero detection over all models") {
    CHECK(Weights::product({make_rational(0), make_rational(0)}).is_zero());
    CHECK(!Weights::product({make_rational(0), make_rational(1)}).is_zero());
    CHECK(Weights::explicit_map(3, {}).is_zero());
    CHECK(Weights::explicit_map(3, {{1u, make_rational(0)}}).is_zero());
    CHECK(!Weights::order_dependent({make_rational(1)}).is_zero());
}

TEST_CASE("realization into double and rational computation types") {
    auto w = Weights::product({make_rational(1), make_rational(1, 4)});
    auto dd = realize<double>(w);
    CHECK(dd.kind == WeightKind::Product);
    CHECK(dd.gammas == std::vector<double>{1.0, 0.25});
    auto qq = realize<Rational>(w);
    CHECK(qq.gammas[1] == make_rational(1, 4));

    auto e = Weights::explicit_map(2, {{2u, make_rational(1, 2)}, {1u, make_rational(0)}});
    auto ed = realize<double>(e);
    REQUIRE(ed.entries.size() == 1); // zero entries are dropped
    CHECK(ed.entries[0].first == 2u);
    CHECK(ed.entries[0].second == 0.5);
}

TEST_CASE("per-mode gamma accessor") {
    auto w = Weights::product({make_rational(1, 3)});
    CHECK(w.gamma({1}, Mode::Exact).rational() == make_rational(1, 3));
    CHECK(w.gamma({1}, Mode::Float).mode() == Mode::Float);
    CHECK(w.gamma({1}, Mode::Float).as_double() == doctest::Approx(1.0 / 3.0));
}
