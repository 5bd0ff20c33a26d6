#include "latwce/kernel.hpp"

namespace latwce {

Scalar eta(const Scalar& x, const Scalar& y) {
    if (x.mode() != y.mode()) throw mode_error("eta: operands in different modes");
    if (x.is_exact()) return Scalar::exact(eta<Rational>(x.rational(), y.rational()));
    return Scalar::floating(eta<double>(x.as_double(), y.as_double()));
}

namespace {

Mode common_mode(const Point& x, const Point& y) {
    Mode m = x.empty() ? Mode::Float : x[0].mode();
    for (const auto& c : x)
        if (c.mode() != m) throw mode_error("kernel_eval: mixed-mode point");
    for (const auto& c : y)
        if (c.mode() != m) throw mode_error("kernel_eval: mixed-mode point");
    return m;
}

} // namespace

Scalar kernel_eval(const Point& x, const Point& y, const Weights& w) {
    if (static_cast<int>(x.size()) != w.dimension() || static_cast<int>(y.size()) != w.dimension())
        throw std::domain_error("kernel_eval: dimension mismatch");
    Mode m = common_mode(x, y);
    if (m == Mode::Exact) {
        std::vector<Rational> xv, yv;
        for (const auto& c : x) xv.push_back(c.rational());
        for (const auto& c : y) yv.push_back(c.rational());
        return Scalar::exact(kernel_eval<Rational>(xv, yv, realize<Rational>(w)));
    }
    std::vector<double> xv, yv;
    for (const auto& c : x) xv.push_back(c.as_double());
    for (const auto& c : y) yv.push_back(c.as_double());
    return Scalar::floating(kernel_eval<double>(xv, yv, realize<double>(w)));
}

} // namespace latwce
