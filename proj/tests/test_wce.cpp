#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latwce/wce.hpp"
#include "test_util.hpp"

using namespace latwce;

namespace {
Weights g1() { return Weights::product({make_rational(1)}); }
Weights g11_4() { return Weights::product({make_rational(1), make_rational(1, 4)}); }
Weights g11() { return Weights::product({make_rational(1), make_rational(1)}); }
} // namespace

TEST_CASE("squared error of small rules matches hand-derived rationals") {
    CHECK(wce_squared(GeneratingVector(3, {1}), g1(), Mode::Exact).value.rational() == make_rational(1, 27));
    CHECK(wce_squared(GeneratingVector(5, {1}), g1(), Mode::Exact).value.rational() == make_rational(1, 75));
    CHECK(wce_squared(GeneratingVector(5, {2}), g1(), Mode::Exact).value.rational() == make_rational(1, 75));
    CHECK(wce_squared(GeneratingVector(5, {1, 2}), g11_4(), Mode::Exact).value.rational() ==
          make_rational(4111, 225000));
}

TEST_CASE("in one dimension every admissible generator gives the same error") {
    Rational first = wce_squared(GeneratingVector(7, {1}), g1(), Mode::Exact).value.rational();
    CHECK(first == make_rational(1, 147));
    for (long long z = 2; z <= 6; ++z)
        CHECK(wce_squared(GeneratingVector(7, {z}), g1(), Mode::Exact).value.rational() == first);
}

TEST_CASE("float mode tracks exact mode to near machine precision") {
    for (auto [n, z] : std::vector<std::pair<long long, std::vector<long long>>>{
             {5, {1, 2}}, {7, {1, 3}}, {11, {1, 7}}}) {
        auto gv = GeneratingVector(n, z);
        double ex = wce_squared(gv, g11_4(), Mode::Exact).value.as_double();
        double fl = wce_squared(gv, g11_4(), Mode::Float).value.as_double();
        CHECK(testutil::rel_close(ex, fl, 1e-12));
    }
}

TEST_CASE("the quadrature identity reproduces the double sum exactly") {
    for (auto [n, z] : std::vector<std::pair<long long, std::vector<long long>>>{
             {3, {1}}, {5, {1, 2}}, {7, {2, 5}}}) {
        auto gv = GeneratingVector(n, z);
        auto direct = wce_squared(gv, g11_4().restricted_to(gv.dimension()), Mode::Exact);
        auto viaq = wce_squared_via_quadrature_identity(gv, g11_4().restricted_to(gv.dimension()), Mode::Exact);
        CHECK(direct.value.rational() == viaq.value.rational());
        CHECK(viaq.method == WceMethod::QuadratureIdentity);
    }
    auto fv = wce_squared_via_quadrature_identity(GeneratingVector(5, {1, 2}), g11_4(), Mode::Float);
    auto fd = wce_squared(GeneratingVector(5, {1, 2}), g11_4(), Mode::Float);
    CHECK(testutil::rel_close(fv.value.as_double(), fd.value.as_double(), 1e-10));
}

TEST_CASE("averages over all generating vectors match hand-derived rationals") {
    CHECK(avg_wce_squared_exhaustive(5, 1, g1(), Mode::Exact).value.rational() == make_rational(1, 75));
    CHECK(avg_wce_squared_exhaustive(5, 2, g11_4(), Mode::Exact).value.rational() == make_rational(421, 22500));
    CHECK(avg_wce_squared_exhaustive(5, 2, g11(), Mode::Exact).value.rational() == make_rational(196, 5625));
}

TEST_CASE("the factorized average equals the exhaustive average") {
    for (long long n : {3LL, 5LL, 7LL}) {
        auto ex = avg_wce_squared_exhaustive(n, 2, g11_4(), Mode::Exact).value.rational();
        auto fa = avg_wce_squared_factorized(n, 2, g11_4(), Mode::Exact).value.rational();
        CHECK(ex == fa);
    }
    CHECK(avg_wce_squared_factorized(7, 2, Weights::product({make_rational(1), make_rational(1, 2)}), Mode::Exact)
              .value.rational() == make_rational(2245, 172872));
    double exf = avg_wce_squared_exhaustive(11, 2, g11(), Mode::Float).value.as_double();
    double faf = avg_wce_squared_factorized(11, 2, g11(), Mode::Float).value.as_double();
    CHECK(testutil::rel_close(exf, faf, 1e-12));
}

TEST_CASE("the factorized average works for order-dependent and explicit weights") {
    auto ow = Weights::order_dependent({make_rational(1), make_rational(1, 3)});
    CHECK(avg_wce_squared_exhaustive(5, 2, ow, Mode::Exact).value.rational() ==
          avg_wce_squared_factorized(5, 2, ow, Mode::Exact).value.rational());
    auto ew = Weights::explicit_map(2, {{1u, make_rational(1)}, {3u, make_rational(1, 5)}});
    CHECK(avg_wce_squared_exhaustive(5, 2, ew, Mode::Exact).value.rational() ==
          avg_wce_squared_factorized(5, 2, ew, Mode::Exact).value.rational());
}

TEST_CASE("the two-point rule has only one generator choice per coordinate") {
    auto w = Weights::product({make_rational(1), make_rational(1, 2)});
    Rational direct = wce_squared(GeneratingVector(2, {1, 1}), w, Mode::Exact).value.rational();
    CHECK(direct == make_rational(323, 2304));
    CHECK(avg_wce_squared_exhaustive(2, 2, w, Mode::Exact).value.rational() == direct);
    CHECK(avg_wce_squared_factorized(2, 2, w, Mode::Exact).value.rational() == direct);
}

TEST_CASE("result metadata records n, d, z, mode and method") {
    auto r = wce_squared(GeneratingVector(5, {1, 2}), g11_4(), Mode::Exact);
    CHECK(r.n == 5);
    CHECK(r.d == 2);
    REQUIRE(r.z.has_value());
    CHECK(*r.z == std::vector<long long>{1, 2});
    CHECK(r.mode == Mode::Exact);
    CHECK(r.method == WceMethod::DoubleSum);

    auto a = avg_wce_squared_factorized(5, 2, g11_4(), Mode::Float);
    CHECK(!a.z.has_value());
    CHECK(a.mode == Mode::Float);
    CHECK(a.value.mode() == Mode::Float);
}

TEST_CASE("method names are stable strings") {
    CHECK(std::string(wce_method_name(WceMethod::DoubleSum)) == "double-sum");
    CHECK(std::string(wce_method_name(WceMethod::ExhaustiveAvg)) == "exhaustive-avg");
    CHECK(std::string(wce_method_name(WceMethod::FactorizedAvg)) == "factorized-avg");
    CHECK(std::string(wce_method_name(WceMethod::QuadratureIdentity)) == "quadrature-identity");
}

TEST_CASE("capacity guards reject infeasible enumerations with a pointer to the alternative") {
    CHECK_THROWS_AS(avg_wce_squared_exhaustive(1009, 3, Weights::product({make_rational(1), make_rational(1),
                                                                          make_rational(1)}),
                                               Mode::Float),
                    capacity_error);
    CHECK_THROWS_AS(avg_wce_squared_factorized(2001, 1, g1(), Mode::Float), capacity_error);
    CHECK_NOTHROW(avg_wce_squared_factorized(101, 1, g1(), Mode::Float));
}

TEST_CASE("dimension mismatches between generator and weights are rejected") {
    CHECK_THROWS_AS(wce_squared(GeneratingVector(5, {1}), g11_4(), Mode::Exact), std::domain_error);
    CHECK_THROWS_AS(avg_wce_squared_exhaustive(5, 3, g11_4(), Mode::Exact), std::domain_error);
    CHECK_THROWS_AS(avg_wce_squared_factorized(5, 1, g11_4(), Mode::Exact), std::domain_error);
    CHECK_THROWS_AS(avg_wce_squared_exhaustive(1, 1, g1(), Mode::Exact), std::domain_error);
}

TEST_CASE("squared errors are positive for nonzero weights") {
    for (long long n : {3LL, 5LL, 7LL, 11LL, 13LL}) {
        auto r = wce_squared(GeneratingVector(n, {1, static_cast<long long>(std::max<long long>(1, n / 2))}),
                             g11_4(), Mode::Exact);
        CHECK(sgn(r.value.rational()) > 0);
    }
}

TEST_CASE("the single-point rule has squared error gamma * eta(0,0)") {
    CHECK(wce_squared(GeneratingVector(1, {1}), g1(), Mode::Exact).value.rational() == make_rational(1, 3));
}

TEST_CASE("exchangeable weights make the error invariant under coordinate permutations") {
    auto wp = Weights::product({make_rational(1, 2), make_rational(1, 2)});
    CHECK(wce_squared(GeneratingVector(7, {2, 5}), wp, Mode::Exact).value.rational() ==
          wce_squared(GeneratingVector(7, {5, 2}), wp, Mode::Exact).value.rational());
    auto wo = Weights::order_dependent({make_rational(1), make_rational(1, 3)});
    CHECK(wce_squared(GeneratingVector(11, {1, 4}), wo, Mode::Exact).value.rational() ==
          wce_squared(GeneratingVector(11, {4, 1}), wo, Mode::Exact).value.rational());
}

TEST_CASE("enlarging a single subset weight never decreases the error") {
    auto base = Weights::explicit_map(2, {{1u, make_rational(1)}, {2u, make_rational(1, 2)}});
    auto more = Weights::explicit_map(2, {{1u, make_rational(1)}, {2u, make_rational(1, 2)},
                                          {3u, make_rational(1, 3)}});
    auto even_more = Weights::explicit_map(2, {{1u, make_rational(2)}, {2u, make_rational(1, 2)},
                                               {3u, make_rational(1, 3)}});
    auto gv = GeneratingVector(7, {1, 3});
    Rational a = wce_squared(gv, base, Mode::Exact).value.rational();
    Rational b = wce_squared(gv, more, Mode::Exact).value.rational();
    Rational c = wce_squared(gv, even_more, Mode::Exact).value.rational();
    CHECK(a <= b);
    CHECK(b <= c);
}

TEST_CASE("zero weights give zero error through every method") {
    auto wz = Weights::product({make_rational(0), make_rational(0)});
    CHECK(wce_squared(GeneratingVector(5, {1, 2}), wz, Mode::Exact).value.rational() == make_rational(0));
    CHECK(wce_squared_via_quadrature_identity(GeneratingVector(5, {1, 2}), wz, Mode::Exact).value.rational() ==
          make_rational(0));
    CHECK(avg_wce_squared_exhaustive(5, 2, wz, Mode::Exact).value.rational() == make_rational(0));
    CHECK(avg_wce_squared_factorized(5, 2, wz, Mode::Exact).value.rational() == make_rational(0));
}

TEST_CASE("larger point sets shrink the one-dimensional error monotonically") {
    Rational prev = make_rational(1);
    for (long long n : {3LL, 5LL, 7LL, 11LL, 13LL, 17LL}) {
        Rational cur = wce_squared(GeneratingVector(n, {1}), g1(), Mode::Exact).value.rational();
        CHECK(cur < prev);
        prev = cur;
    }
}
