#include "degenlab/bumps.hpp"

namespace degenlab {

double mollifier(double t) {
    const double r = 1.0 - t * t;
    if (r <= 0.0) return 0.0;
    return std::exp(-1.0 / r);
}

double mollifier_d1(double t) {
    const double r = 1.0 - t * t;
    if (r <= 0.0) return 0.0;
    // phi = -1/r, phi' = -2t/r^2
    return std::exp(-1.0 / r) * (-2.0 * t / (r * r));
}

double mollifier_d2(double t) {
    const double r = 1.0 - t * t;
    if (r <= 0.0) return 0.0;
    const double p1 = -2.0 * t / (r * r);                 // phi'
    const double p2 = -2.0 / (r * r) - 8.0 * t * t / (r * r * r); // phi''
    return std::exp(-1.0 / r) * (p2 + p1 * p1);
}

namespace {
inline double estep(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }
inline double estep_d1(double t) {
    if (t <= 0.0) return 0.0;
    return std::exp(-1.0 / t) / (t * t);
}
inline double estep_d2(double t) {
    if (t <= 0.0) return 0.0;
    return std::exp(-1.0 / t) * (1.0 / (t * t * t * t) - 2.0 / (t * t * t));
}
} // namespace

double smooth_step(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double g = estep(t), h = estep(1.0 - t);
    return g / (g + h);
}

double smooth_step_d1(double t) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    const double g = estep(t), h = estep(1.0 - t);
    const double g1 = estep_d1(t), h1 = estep_d1(1.0 - t);
    const double q = g + h;
    return (g1 * h + g * h1) / (q * q);
}

double smooth_step_d2(double t) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    const double g = estep(t), h = estep(1.0 - t);
    const double g1 = estep_d1(t), h1 = estep_d1(1.0 - t);
    const double g2 = estep_d2(t), h2 = estep_d2(1.0 - t);
    const double q = g + h;
    const double P = g1 * h + g * h1;     // numerator of S'
    const double Pp = g2 * h - g * h2;    // P' (the cross terms cancel)
    const double Qp = 2.0 * q * (g1 - h1);
    return Pp / (q * q) - P * Qp / (q * q * q * q);
}

} // namespace degenlab
