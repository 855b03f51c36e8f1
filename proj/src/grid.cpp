#include "degenlab/grid.hpp"

#include "degenlab/errors.hpp"

#include <cmath>

namespace degenlab {

Axis Axis::uniform(double lo, double hi, int n_cells) {
    if (!(lo < hi) || n_cells < 1)
        throw Error(ErrorCode::invalid_range, "axis needs lo < hi and n_cells >= 1");
    Axis a;
    a.lo = lo;
    a.hi = hi;
    a.n_cells = n_cells;
    a.nodes.resize(static_cast<std::size_t>(n_cells) + 1);
    const double h = (hi - lo) / n_cells;
    for (int i = 0; i <= n_cells; ++i) a.nodes[static_cast<std::size_t>(i)] = lo + i * h;
    a.nodes.back() = hi;
    return a;
}

LogGrid::LogGrid(double s_min, double s_max, int n_cells)
    : s_min_(s_min), s_max_(s_max), n_cells_(n_cells) {
    if (!(s_min < s_max))
        throw Error(ErrorCode::invalid_range, "log grid needs s_min < s_max");
    if (n_cells < 2)
        throw Error(ErrorCode::invalid_range, "log grid needs n_cells >= 2");
    h_ = (s_max - s_min) / n_cells;
    s_.resize(static_cast<std::size_t>(n_cells) + 1);
    x_.resize(s_.size());
    for (int i = 0; i <= n_cells; ++i) {
        const double si = (i == n_cells) ? s_max : s_min + i * h_;
        s_[static_cast<std::size_t>(i)] = si;
        x_[static_cast<std::size_t>(i)] = std::exp(si);
    }
}

int LogGrid::spatial_node_count() const {
    const int n = node_count();
    return transverse_ ? n * transverse_->node_count() : n;
}

GridPtr make_log_grid(double s_min, double s_max, int n_cells) {
    return std::make_shared<LogGrid>(s_min, s_max, n_cells);
}

GridPtr make_log_grid_2d(double s_min, double s_max, int n_cells, Axis transverse) {
    auto g = std::make_shared<LogGrid>(s_min, s_max, n_cells);
    g->set_transverse(std::move(transverse));
    return g;
}

GridPtr with_time_axis(const GridPtr& base, Axis time) {
    auto g = std::make_shared<LogGrid>(*base);
    g->set_time(std::move(time));
    return g;
}

GridFunction::GridFunction(GridPtr g) : grid(std::move(g)) {
    values.assign(static_cast<std::size_t>(grid->spatial_node_count()), 0.0);
}

GridFunction::GridFunction(GridPtr g, std::vector<double> v)
    : grid(std::move(g)), values(std::move(v)) {
    if (values.size() != static_cast<std::size_t>(grid->spatial_node_count()))
        throw Error(ErrorCode::invalid_range, "value count does not match grid");
}

GridFunction GridFunction::sample(const GridPtr& g, const std::function<double(double)>& f) {
    GridFunction u(g);
    const auto& s = g->s_nodes();
    for (std::size_t i = 0; i < s.size(); ++i) u.values[i] = f(s[i]);
    return u;
}

GridFunction GridFunction::sample2d(const GridPtr& g,
                                    const std::function<double(double, double)>& f) {
    if (!g->transverse())
        throw Error(ErrorCode::invalid_range, "sample2d needs a transverse axis");
    GridFunction u(g);
    const auto& s = g->s_nodes();
    const auto& y = g->transverse()->nodes;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            u.values[i * y.size() + j] = f(s[i], y[j]);
    return u;
}

void GridFunction::check_finite(const char* what) const {
    for (double v : values)
        if (!std::isfinite(v))
            throw Error(ErrorCode::invalid_range, std::string(what) + " has non-finite values");
}

SpaceTimeFunction::SpaceTimeFunction(GridPtr g) : grid(std::move(g)) {
    if (!grid->time())
        throw Error(ErrorCode::invalid_range, "space-time function needs a time axis");
    values.assign(static_cast<std::size_t>(grid->time()->node_count()) *
                      static_cast<std::size_t>(grid->spatial_node_count()),
                  0.0);
}

GridFunction SpaceTimeFunction::slice(int it) const {
    GridFunction u(grid);
    const int n = nx();
    for (int i = 0; i < n; ++i) u.values[static_cast<std::size_t>(i)] = at(it, i);
    return u;
}

SpaceTimeFunction SpaceTimeFunction::sample(const GridPtr& g,
                                            const std::function<double(double, double)>& f) {
    SpaceTimeFunction u(g);
    const auto& t = g->time()->nodes;
    const auto& s = g->s_nodes();
    for (std::size_t it = 0; it < t.size(); ++it)
        for (std::size_t ix = 0; ix < s.size(); ++ix)
            u.values[it * s.size() + ix] = f(t[it], s[ix]);
    return u;
}

} // namespace degenlab
