#include "latwce/lattice.hpp"

namespace latwce {

GeneratingVector::GeneratingVector(long long n_in, std::vector<long long> z_in) : n(n_in), z(std::move(z_in)) {
    if (n < 1) throw std::domain_error("GeneratingVector: n must be >= 1");
    if (z.empty()) throw std::domain_error("GeneratingVector: empty z");
    if (n > 1)
        for (long long zj : z)
            if (zj < 1 || zj > n - 1)
                throw std::domain_error("GeneratingVector: component " + std::to_string(zj) + " outside {1,...," +
                                        std::to_string(n - 1) + "}");
}

LatticePointSet LatticePointSet::build(const GeneratingVector& gv) {
    LatticePointSet pts(gv.n, gv.dimension());
    pts.nums_.resize(static_cast<std::size_t>(gv.n) * gv.dimension());
    for (long long i = 0; i < gv.n; ++i)
        for (int j = 0; j < gv.dimension(); ++j)
            pts.nums_[static_cast<std::size_t>(i) * gv.dimension() + j] =
                gv.n == 1 ? 0 : (i * gv.z[static_cast<std::size_t>(j)]) % gv.n;
    return pts;
}

std::vector<double> LatticePointSet::point_double(long long i) const {
    std::vector<double> p(static_cast<std::size_t>(d_));
    for (int j = 0; j < d_; ++j) p[static_cast<std::size_t>(j)] = coord_double(i, j);
    return p;
}

std::vector<Rational> LatticePointSet::point_exact(long long i) const {
    std::vector<Rational> p;
    p.reserve(static_cast<std::size_t>(d_));
    for (int j = 0; j < d_; ++j) p.push_back(coord_exact(i, j));
    return p;
}

Point LatticePointSet::point(long long i, Mode mode) const {
    Point p;
    p.reserve(static_cast<std::size_t>(d_));
    for (int j = 0; j < d_; ++j)
        p.push_back(mode == Mode::Exact ? Scalar::exact(coord_exact(i, j)) : Scalar::floating(coord_double(i, j)));
    return p;
}

std::vector<TestIntegrand> builtin_integrands(int d) {
    if (d < 1) throw std::domain_error("builtin_integrands: d must be >= 1");
    std::vector<TestIntegrand> out;

    out.push_back({"const",
                   [](const std::vector<double>&) { return 1.0; },
                   [](const std::vector<Rational>&) { return make_rational(1); },
                   make_rational(1)});

    // prod_j x_j, integral 2^-d
    Rational two_pow_d = make_rational(1);
    for (int j = 0; j < d; ++j) two_pow_d *= 2;
    out.push_back({"prod-linear",
                   [](const std::vector<double>& x) {
                       double p = 1.0;
                       for (double c : x) p *= c;
                       return p;
                   },
                   [](const std::vector<Rational>& x) {
                       Rational p = make_rational(1);
                       for (const auto& c : x) p *= c;
                       return p;
                   },
                   Rational(1 / two_pow_d)});

    // prod_j (1 + x_j - 1/2), integral 1
    out.push_back({"prod-centered",
                   [](const std::vector<double>& x) {
                       double p = 1.0;
                       for (double c : x) p *= 0.5 + c;
                       return p;
                   },
                   [](const std::vector<Rational>& x) {
                       Rational p = make_rational(1);
                       for (const auto& c : x) p *= make_rational(1, 2) + c;
                       return p;
                   },
                   make_rational(1)});

    // prod_j B2(x_j), integral 0
    out.push_back({"prod-b2",
                   [](const std::vector<double>& x) {
                       double p = 1.0;
                       for (double c : x) p *= b2(c);
                       return p;
                   },
                   [](const std::vector<Rational>& x) {
                       Rational p = make_rational(1);
                       for (const auto& c : x) p *= b2(c);
                       return p;
                   },
                   make_rational(0)});

    return out;
}

const TestIntegrand& find_integrand(const std::vector<TestIntegrand>& list, const std::string& name) {
    for (const auto& f : list)
        if (f.name == name) return f;
    throw std::domain_error("unknown integrand '" + name + "'");
}

Scalar qmc_quadrature(const TestIntegrand& f, const LatticePointSet& pts, Mode mode) {
    if (mode == Mode::Exact)
        return Scalar::exact(qmc_quadrature<Rational>(pts, f.eval_exact));
    return Scalar::floating(qmc_quadrature<double>(pts, f.eval_double));
}

} // namespace latwce
