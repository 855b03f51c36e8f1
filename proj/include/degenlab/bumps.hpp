#pragma once

#include <cmath>

namespace degenlab {

// Smooth compactly supported building blocks shared by the cutoff families,
// forcing corpora and experiment profiles. All values and first two
// derivatives are closed-form.

// mollifier m(t) = exp(-1/(1-t^2)) on (-1,1), 0 outside.
double mollifier(double t);
double mollifier_d1(double t);
double mollifier_d2(double t);

// C-infinity step: 0 for t<=0, 1 for t>=1, S(t) = f(t)/(f(t)+f(1-t)) with
// f(t)=exp(-1/t).
double smooth_step(double t);
double smooth_step_d1(double t);
double smooth_step_d2(double t);

// amplitude * m((s-center)/width): a bump in the log coordinate.
struct Bump {
    double center = 0.0;
    double width = 1.0;
    double amplitude = 1.0;

    double operator()(double s) const { return amplitude * mollifier((s - center) / width); }
    double d1(double s) const { return amplitude / width * mollifier_d1((s - center) / width); }
    double d2(double s) const {
        return amplitude / (width * width) * mollifier_d2((s - center) / width);
    }
};

} // namespace degenlab
