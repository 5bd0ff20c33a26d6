// include/latwce/wce.hpp — squared worst-case error of Q_{d,n,z} in the
// weighted unanchored Sobolev space, plus its average over all generating
// vectors.
//
// The computable closed form is the reproducing-kernel double sum
//
//   e^2(n,z) = (1/n^2) sum_{i,k} sum_{nonempty u} gamma_u prod_{j in u}
//              eta(x_{i,j}, x_{k,j}),
//
// valid because eta integrates to zero in each argument (checked numerically
// in the kernel tests). The quadrature-identity route recomputes the same
// value through the lattice quadrature engine and must agree exactly in
// EXACT mode.

#pragma once

#include "latwce/lattice.hpp"
#include "latwce/weights.hpp"

#include <optional>

namespace latwce {

enum class WceMethod { DoubleSum, ExhaustiveAvg, FactorizedAvg, QuadratureIdentity };

const char* wce_method_name(WceMethod m);

struct WceResult {
    Scalar value; // e^2
    long long n;
    int d;
    std::optional<std::vector<long long>> z; // absent for averages
    Mode mode;
    WceMethod method;
};

/// Capacity guard for the exhaustive average: (n-1)^d enumerated vectors.
inline constexpr long long kExhaustiveAvgCap = 10'000'000;
/// Capacity guard for the factorized average's O(n^3) pair table.
inline constexpr long long kFactorizedAvgCapN = 2000;

/// e^2(n,z) by the kernel double sum. FLOAT accumulation order is fixed:
/// i outer, k = 0..i inner (off-diagonal doubled), subsets innermost.
WceResult wce_squared(const GeneratingVector& gv, const Weights& w, Mode mode);

/// e^2(n,z) as -Q_{d,n,z}(g), g(y) = 1 - (1/n) sum_i K(x_i, y); routed
/// through qmc_quadrature as a cross-module consistency check.
WceResult wce_squared_via_quadrature_identity(const GeneratingVector& gv, const Weights& w, Mode mode);

/// Mean of e^2(n,z) over all z in {1,...,n-1}^d, enumerated.
WceResult avg_wce_squared_exhaustive(long long n, int d, const Weights& w, Mode mode);

/// Same mean via per-pair averages M(i,k) = (1/(n-1)) sum_z eta({iz/n},{kz/n}):
/// the coordinates of z are independent, so the u-term averages to M^{|u|}
/// and the mean equals (1/n^2) sum_{i,k} sum_m W_m M(i,k)^m with the
/// order-aggregated weights W_m. O(n^3) time, O(n^2) memory.
WceResult avg_wce_squared_factorized(long long n, int d, const Weights& w, Mode mode);

/// Typed engines; search loops call these directly.
double wce_squared_double(const LatticePointSet& pts, const WeightsData<double>& w);
Rational wce_squared_exact(const LatticePointSet& pts, const WeightsData<Rational>& w);

} // namespace latwce
