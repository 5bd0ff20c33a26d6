// include/latwce/lattice.hpp — rank-1 lattice point sets and the equal-weight
// quadrature rule Q_{d,n,z}.

#pragma once

#include "latwce/kernel.hpp"

#include <functional>
#include <string>

namespace latwce {

/// n points generated by z in {1,...,n-1}^d. For n = 1 the rule degenerates
/// to the single point 0 and z carries no constraint.
struct GeneratingVector {
    long long n;
    std::vector<long long> z;

    GeneratingVector(long long n_, std::vector<long long> z_);
    int dimension() const { return static_cast<int>(z.size()); }
};

/// The points x_i = ({i z_1 / n}, ..., {i z_d / n}), held as exact numerators
/// over the common denominator n. Conversion to double is the last step.
class LatticePointSet {
public:
    static LatticePointSet build(const GeneratingVector& gv);

    long long n() const { return n_; }
    int dimension() const { return d_; }

    long long numerator(long long i, int j) const { return nums_[static_cast<std::size_t>(i) * d_ + j]; }
    double coord_double(long long i, int j) const {
        return static_cast<double>(numerator(i, j)) / static_cast<double>(n_);
    }
    Rational coord_exact(long long i, int j) const { return make_rational(numerator(i, j), n_); }

    std::vector<double> point_double(long long i) const;
    std::vector<Rational> point_exact(long long i) const;
    Point point(long long i, Mode mode) const;

private:
    LatticePointSet(long long n, int d) : n_(n), d_(d) {}
    long long n_;
    int d_;
    std::vector<long long> nums_;
};

/// Q_{d,n,z}(f) = (1/n) sum_i f(x_i). FLOAT sums run in index order
/// i = 0..n-1; an evaluation failure is rethrown with the point index.
template <class T, class F>
T qmc_quadrature(const LatticePointSet& pts, F&& f) {
    T acc = frac_of<T>(0, 1);
    for (long long i = 0; i < pts.n(); ++i) {
        try {
            if constexpr (std::is_same_v<T, double>)
                acc = acc + f(pts.point_double(i));
            else
                acc = acc + f(pts.point_exact(i));
        } catch (const std::exception& e) {
            throw std::runtime_error("qmc_quadrature: integrand failed at point index " + std::to_string(i) + ": " +
                                     e.what());
        }
    }
    return T(acc * frac_of<T>(1, pts.n()));
}

/// Built-in integrands with known integrals, for end-to-end demos.
struct TestIntegrand {
    std::string name;
    std::function<double(const std::vector<double>&)> eval_double;
    std::function<Rational(const std::vector<Rational>&)> eval_exact;
    Rational integral;
};

/// CONST, PROD_LINEAR, PROD_CENTERED, PROD_B2 in dimension d.
std::vector<TestIntegrand> builtin_integrands(int d);
const TestIntegrand& find_integrand(const std::vector<TestIntegrand>& list, const std::string& name);

Scalar qmc_quadrature(const TestIntegrand& f, const LatticePointSet& pts, Mode mode);

} // namespace latwce
