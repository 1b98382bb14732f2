#include "heplus/quadrature.hpp"

#include <cmath>

namespace heplus {

namespace {

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double recurse(const std::function<double(double)>& f, double a, double b, double fa,
               double fm, double fb, double whole, double abs_tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * abs_tol)
        return left + right + delta / 15.0;
    if (depth <= 0)
        throw ConvergenceError("adaptive Simpson refinement cap reached");
    return recurse(f, a, m, fa, flm, fm, left, abs_tol / 2.0, depth - 1) +
           recurse(f, m, b, fm, frm, fb, right, abs_tol / 2.0, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        const QuadratureSpec& spec) {
    if (a == b) return 0.0;

    // Scale for the relative tolerance from a fixed composite pass; a bare
    // 3-point estimate can vanish on oscillatory integrands (e.g. sin^2
    // with an even number of half-periods).
    constexpr int kScalePanels = 128;
    const double h = (b - a) / kScalePanels;
    double rough = 0.0;
    double max_abs = 0.0;
    double prev = f(a);
    max_abs = std::abs(prev);
    for (int i = 0; i < kScalePanels; ++i) {
        const double x0 = a + i * h;
        const double fm = f(x0 + 0.5 * h);
        const double f1 = f(x0 + h);
        rough += simpson(prev, fm, f1, h);
        max_abs = std::max({max_abs, std::abs(fm), std::abs(f1)});
        prev = f1;
    }
    double scale = std::abs(rough);
    if (scale == 0.0) scale = max_abs * std::abs(b - a);
    if (scale == 0.0) return 0.0;  // integrand vanished at every sample

    // Start from a 16-panel composite so a periodic integrand whose zeros
    // line up with the first few bisection levels cannot fake convergence.
    constexpr int kInitPanels = 16;
    const double hp = (b - a) / kInitPanels;
    const double abs_tol = spec.rel_tol * scale / kInitPanels;
    const int depth = spec.max_depth - 4;  // 2^4 panels already spent
    double total = 0.0;
    for (int i = 0; i < kInitPanels; ++i) {
        const double x0 = a + i * hp;
        const double x1 = (i + 1 == kInitPanels) ? b : x0 + hp;
        const double fa = f(x0);
        const double fm = f(0.5 * (x0 + x1));
        const double fb = f(x1);
        const double whole = simpson(fa, fm, fb, x1 - x0);
        total += recurse(f, x0, x1, fa, fm, fb, whole, abs_tol, depth);
    }
    return total;
}

}  // namespace heplus
