#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <queue>
#include <stdexcept>
#include <vector>

namespace qdephase {

struct QuadratureSettings {
    double abs_tol = 1e-9;   // absolute tolerance on the integral
    int max_panels = 30000;  // refinement budget
    // Angular frequency of the fastest oscillation of the integrand over
    // the integration variable; used to seed the initial subdivision so
    // that no panel spans more than a couple of periods.
    double osc_frequency = 0.0;
};

// Requested accuracy was not reached within the panel budget. Carries the
// best available estimate so callers can decide whether to accept it.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(std::complex<double> estimate, double achieved)
        : std::runtime_error("quadrature did not reach requested tolerance"),
          estimate_(estimate), achieved_error_(achieved) {}

    std::complex<double> estimate() const { return estimate_; }
    double achieved_error() const { return achieved_error_; }

private:
    std::complex<double> estimate_;
    double achieved_error_;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1].
inline constexpr std::array<double, 8> gk_nodes = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
inline constexpr std::array<double, 8> gk_weights = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr std::array<double, 4> g7_weights = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
    double a, b;
    std::complex<double> value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel evaluate_panel(F&& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    std::complex<double> gk = gk_weights[7] * f(c);
    std::complex<double> g7 = g7_weights[3] * f(c);
    for (int i = 0; i < 7; ++i) {
        const double x = h * gk_nodes[i];
        const std::complex<double> pair = f(c - x) + f(c + x);
        gk += gk_weights[i] * pair;
        if (i % 2 == 1) g7 += g7_weights[i / 2] * pair;
    }
    gk *= h;
    g7 *= h;
    return Panel{a, b, gk, std::abs(gk - g7)};
}

} // namespace detail

struct AdaptiveResult {
    std::complex<double> value;
    double error;
    int panels;
};

// Adaptive Gauss-Kronrod integration of a complex-valued integrand on
// [a, b] to an absolute tolerance. Throws QuadratureError when the panel
// budget is exhausted before the tolerance is met.
template <class F>
AdaptiveResult adaptive_integrate(F&& f, double a, double b,
                                  const QuadratureSettings& s = {}) {
    if (!(b > a)) return {0.0, 0.0, 0};

    int n0 = 1;
    if (s.osc_frequency > 0.0) {
        const double periods = s.osc_frequency * (b - a) / (2.0 * 3.14159265358979324);
        n0 = static_cast<int>(periods / 2.0) + 1;
    }
    if (n0 > s.max_panels / 2) n0 = s.max_panels / 2;
    if (n0 < 1) n0 = 1;

    std::priority_queue<detail::Panel> queue;
    std::complex<double> total = 0.0;
    double total_err = 0.0;
    int panels = n0;
    for (int i = 0; i < n0; ++i) {
        const double pa = a + (b - a) * static_cast<double>(i) / n0;
        const double pb = a + (b - a) * static_cast<double>(i + 1) / n0;
        auto p = detail::evaluate_panel(f, pa, pb);
        total += p.value;
        total_err += p.error;
        queue.push(p);
    }

    while (total_err > s.abs_tol && panels < s.max_panels) {
        const detail::Panel worst = queue.top();
        queue.pop();
        total -= worst.value;
        total_err -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        // Bisection below resolution: accept what we have for this panel.
        if (!(mid > worst.a && mid < worst.b)) {
            total += worst.value;
            total_err += worst.error;
            break;
        }
        auto left = detail::evaluate_panel(f, worst.a, mid);
        auto right = detail::evaluate_panel(f, mid, worst.b);
        total += left.value + right.value;
        total_err += left.error + right.error;
        queue.push(left);
        queue.push(right);
        ++panels;
    }

    if (total_err > s.abs_tol)
        throw QuadratureError(total, total_err);
    return {total, total_err, panels};
}

// Real-valued convenience wrapper.
template <class F>
double adaptive_integrate_real(F&& f, double a, double b,
                               const QuadratureSettings& s = {}) {
    auto r = adaptive_integrate(
        [&f](double x) { return std::complex<double>(f(x), 0.0); }, a, b, s);
    return r.value.real();
}

} // namespace qdephase
