#pragma once

// Reference computations used only by the tests.  They avoid the library's
// code paths: integrals use composite Simpson on [0, 2 pi] rather than the
// periodic equal-weight rule, and field contractions are expanded by hand
// in real arithmetic.

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <random>

namespace oracle {

inline constexpr double kPi = std::numbers::pi;

/// Composite Simpson rule for (1 / 2 pi) * integral_0^{2 pi} f.
inline double simpson_mean(const std::function<double(double)>& f, std::size_t intervals = 1 << 14) {
    const double h = 2.0 * kPi / static_cast<double>(intervals);
    double sum = f(0.0) + f(2.0 * kPi);
    for (std::size_t i = 1; i < intervals; ++i) {
        sum += (i % 2 == 1 ? 4.0 : 2.0) * f(h * static_cast<double>(i));
    }
    return sum * h / 3.0 / (2.0 * kPi);
}

// E_A = (cos t, e^{i pi/4} sin t), E_B = (-e^{i 3pi/4} sin(t - p), cos(t - p)).
// Re/Im parts spelled out with c = cos(pi/4) = sin(pi/4), cos(3pi/4) = -c.
struct Expanded {
    double ax_re, ax_im, ay_re, ay_im, bx_re, bx_im, by_re, by_im;
};

inline Expanded expand_fields(double t, double p) {
    const double c = std::sqrt(0.5);
    const double s_rel = std::sin(t - p);
    return {std::cos(t), 0.0, c * std::sin(t), c * std::sin(t),
            c * s_rel,   -c * s_rel, std::cos(t - p), 0.0};
}

/// |E_A . E_B|^2 from the hand expansion.
inline double bilinear_sq(double t, double p) {
    const Expanded e = expand_fields(t, p);
    const double re = e.ax_re * e.bx_re - e.ax_im * e.bx_im + e.ay_re * e.by_re - e.ay_im * e.by_im;
    const double im = e.ax_re * e.bx_im + e.ax_im * e.bx_re + e.ay_re * e.by_im + e.ay_im * e.by_re;
    return re * re + im * im;
}

/// |<E_A, E_B>|^2 from the hand expansion.
inline double hermitian_sq(double t, double p) {
    const Expanded e = expand_fields(t, p);
    const double re = e.ax_re * e.bx_re + e.ax_im * e.bx_im + e.ay_re * e.by_re + e.ay_im * e.by_im;
    const double im = e.ax_re * e.bx_im - e.ax_im * e.bx_re + e.ay_re * e.by_im - e.ay_im * e.by_re;
    return re * re + im * im;
}

/// CHSH combination from a correlation law E(phi), phi = b - a.
template <class Correlation>
double chsh(Correlation e, std::array<double, 4> s) {
    const auto [a, ap, b, bp] = s;
    return e(b - a) - e(bp - a) + e(b - ap) + e(bp - ap);
}

/// Brute-force max |S| over all +-1 assignments, by nested loops.
inline int lhv_max_brute() {
    int best = 0;
    for (int x : {-1, 1})
        for (int xp : {-1, 1})
            for (int y : {-1, 1})
                for (int yp : {-1, 1}) {
                    const int s = x * y - x * yp + xp * y + xp * yp;
                    best = std::max(best, s < 0 ? -s : s);
                }
    return best;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(20240611);
    return engine;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

}  // namespace oracle
