#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace degenlab {

// Uniform axis on [lo, hi] with n_cells cells (n_cells+1 nodes). Used for
// the transverse direction x' and for time.
struct Axis {
    double lo = 0.0;
    double hi = 1.0;
    int n_cells = 1;
    std::vector<double> nodes;

    static Axis uniform(double lo, double hi, int n_cells);
    double h() const { return (hi - lo) / n_cells; }
    int node_count() const { return n_cells + 1; }
};

// Truncated logarithmic grid for the half line: nodes x_i = e^{s_i} with
// uniform spacing h in the log coordinate s. Optional transverse axis
// (d=2 experiments) and time axis (parabolic problems).
class LogGrid {
public:
    LogGrid(double s_min, double s_max, int n_cells);

    double s_min() const { return s_min_; }
    double s_max() const { return s_max_; }
    int n_cells() const { return n_cells_; }
    double h() const { return h_; }
    int node_count() const { return n_cells_ + 1; }

    const std::vector<double>& s_nodes() const { return s_; }
    const std::vector<double>& x_nodes() const { return x_; }
    double s(int i) const { return s_[static_cast<std::size_t>(i)]; }
    double x(int i) const { return x_[static_cast<std::size_t>(i)]; }

    void set_transverse(Axis axis) { transverse_ = std::move(axis); }
    void set_time(Axis axis) { time_ = std::move(axis); }
    const std::optional<Axis>& transverse() const { return transverse_; }
    const std::optional<Axis>& time() const { return time_; }

    // total spatial nodes: (n_cells+1) or (n_cells+1)*(transverse nodes)
    int spatial_node_count() const;

private:
    double s_min_, s_max_, h_;
    int n_cells_;
    std::vector<double> s_;
    std::vector<double> x_;
    std::optional<Axis> transverse_;
    std::optional<Axis> time_;
};

using GridPtr = std::shared_ptr<const LogGrid>;

GridPtr make_log_grid(double s_min, double s_max, int n_cells);
GridPtr make_log_grid_2d(double s_min, double s_max, int n_cells, Axis transverse);
// copy of base carrying a time axis
GridPtr with_time_axis(const GridPtr& base, Axis time);

// Sampled real-valued function on the spatial nodes of a LogGrid.
// 1D layout: values[i] = u(x_i). 2D layout: values[i*ny + j] = u(x'_j, x_i)
// (log-axis-major, ny = transverse node count).
struct GridFunction {
    GridPtr grid;
    std::vector<double> values;

    GridFunction() = default;
    explicit GridFunction(GridPtr g);
    GridFunction(GridPtr g, std::vector<double> v);

    // sample u(s) given in the log coordinate
    static GridFunction sample(const GridPtr& g, const std::function<double(double)>& f_of_s);
    // sample u(s, y) on a grid with a transverse axis
    static GridFunction sample2d(const GridPtr& g,
                                 const std::function<double(double, double)>& f_of_s_y);

    bool is_2d() const { return grid && grid->transverse().has_value(); }
    int nx() const { return grid->node_count(); }
    int ny() const { return grid->transverse() ? grid->transverse()->node_count() : 1; }
    double& at(int i, int j) { return values[static_cast<std::size_t>(i) * ny() + j]; }
    double at(int i, int j) const { return values[static_cast<std::size_t>(i) * ny() + j]; }

    void check_finite(const char* what) const;
};

// Space-time sample on a grid carrying a time axis; time-major layout:
// values[it * spatial_node_count + ix].
struct SpaceTimeFunction {
    GridPtr grid;
    std::vector<double> values;

    SpaceTimeFunction() = default;
    explicit SpaceTimeFunction(GridPtr g);

    int nt() const { return grid->time() ? grid->time()->node_count() : 1; }
    int nx() const { return grid->spatial_node_count(); }
    double& at(int it, int ix) { return values[static_cast<std::size_t>(it) * nx() + ix]; }
    double at(int it, int ix) const { return values[static_cast<std::size_t>(it) * nx() + ix]; }

    // spatial slice at time index it (copies into a GridFunction on the same grid)
    GridFunction slice(int it) const;

    static SpaceTimeFunction sample(const GridPtr& g,
                                    const std::function<double(double, double)>& f_of_t_s);
};

} // namespace degenlab
