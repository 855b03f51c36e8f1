#include "degenlab/derivatives.hpp"

#include "degenlab/errors.hpp"

namespace degenlab {

namespace {
inline double g(const std::vector<double>& v, int i) { return v[static_cast<std::size_t>(i)]; }
}

std::vector<double> diff1_4th(const std::vector<double>& v, double h) {
    const int n = static_cast<int>(v.size());
    if (n < 6) throw Error(ErrorCode::invalid_range, "diff1_4th needs at least 6 nodes");
    std::vector<double> d(v.size());
    const double c = 1.0 / (12.0 * h);
    d[0] = c * (-25.0 * g(v, 0) + 48.0 * g(v, 1) - 36.0 * g(v, 2) + 16.0 * g(v, 3) - 3.0 * g(v, 4));
    d[1] = c * (-3.0 * g(v, 0) - 10.0 * g(v, 1) + 18.0 * g(v, 2) - 6.0 * g(v, 3) + g(v, 4));
    for (int i = 2; i < n - 2; ++i)
        d[static_cast<std::size_t>(i)] =
            c * (g(v, i - 2) - 8.0 * g(v, i - 1) + 8.0 * g(v, i + 1) - g(v, i + 2));
    d[static_cast<std::size_t>(n - 2)] =
        -c * (-3.0 * g(v, n - 1) - 10.0 * g(v, n - 2) + 18.0 * g(v, n - 3) - 6.0 * g(v, n - 4) +
              g(v, n - 5));
    d[static_cast<std::size_t>(n - 1)] =
        -c * (-25.0 * g(v, n - 1) + 48.0 * g(v, n - 2) - 36.0 * g(v, n - 3) + 16.0 * g(v, n - 4) -
              3.0 * g(v, n - 5));
    return d;
}

std::vector<double> diff2_4th(const std::vector<double>& v, double h) {
    const int n = static_cast<int>(v.size());
    if (n < 6) throw Error(ErrorCode::invalid_range, "diff2_4th needs at least 6 nodes");
    std::vector<double> d(v.size());
    const double c = 1.0 / (12.0 * h * h);
    d[0] = c * (45.0 * g(v, 0) - 154.0 * g(v, 1) + 214.0 * g(v, 2) - 156.0 * g(v, 3) +
                61.0 * g(v, 4) - 10.0 * g(v, 5));
    d[1] = c * (10.0 * g(v, 0) - 15.0 * g(v, 1) - 4.0 * g(v, 2) + 14.0 * g(v, 3) - 6.0 * g(v, 4) +
                g(v, 5));
    for (int i = 2; i < n - 2; ++i)
        d[static_cast<std::size_t>(i)] = c * (-g(v, i - 2) + 16.0 * g(v, i - 1) - 30.0 * g(v, i) +
                                              16.0 * g(v, i + 1) - g(v, i + 2));
    d[static_cast<std::size_t>(n - 2)] =
        c * (10.0 * g(v, n - 1) - 15.0 * g(v, n - 2) - 4.0 * g(v, n - 3) + 14.0 * g(v, n - 4) -
             6.0 * g(v, n - 5) + g(v, n - 6));
    d[static_cast<std::size_t>(n - 1)] =
        c * (45.0 * g(v, n - 1) - 154.0 * g(v, n - 2) + 214.0 * g(v, n - 3) - 156.0 * g(v, n - 4) +
             61.0 * g(v, n - 5) - 10.0 * g(v, n - 6));
    return d;
}

std::vector<double> diff1_2nd(const std::vector<double>& v, double h) {
    const int n = static_cast<int>(v.size());
    if (n < 3) throw Error(ErrorCode::invalid_range, "diff1_2nd needs at least 3 nodes");
    std::vector<double> d(v.size());
    const double c = 1.0 / (2.0 * h);
    d[0] = c * (-3.0 * g(v, 0) + 4.0 * g(v, 1) - g(v, 2));
    for (int i = 1; i < n - 1; ++i)
        d[static_cast<std::size_t>(i)] = c * (g(v, i + 1) - g(v, i - 1));
    d[static_cast<std::size_t>(n - 1)] =
        c * (3.0 * g(v, n - 1) - 4.0 * g(v, n - 2) + g(v, n - 3));
    return d;
}

std::vector<double> diff2_2nd(const std::vector<double>& v, double h) {
    const int n = static_cast<int>(v.size());
    if (n < 4) throw Error(ErrorCode::invalid_range, "diff2_2nd needs at least 4 nodes");
    std::vector<double> d(v.size());
    const double c = 1.0 / (h * h);
    d[0] = c * (2.0 * g(v, 0) - 5.0 * g(v, 1) + 4.0 * g(v, 2) - g(v, 3));
    for (int i = 1; i < n - 1; ++i)
        d[static_cast<std::size_t>(i)] = c * (g(v, i - 1) - 2.0 * g(v, i) + g(v, i + 1));
    d[static_cast<std::size_t>(n - 1)] =
        c * (2.0 * g(v, n - 1) - 5.0 * g(v, n - 2) + 4.0 * g(v, n - 3) - g(v, n - 4));
    return d;
}

} // namespace degenlab
