#include "degenlab.h"

#include "degenlab/bessel.hpp"
#include "degenlab/config.hpp"
#include "degenlab/errors.hpp"
#include "degenlab/grid.hpp"
#include "degenlab/harness.hpp"
#include "degenlab/indicial.hpp"
#include "degenlab/norms.hpp"
#include "degenlab/parabolic.hpp"
#include "degenlab/report.hpp"
#include "degenlab/version.hpp"

#include <cstring>
#include <string>

using namespace degenlab;

struct dgl_config {
    RunConfig config;
};

struct dgl_report {
    ExperimentReport report;
    std::string json; // cached serialization owned by the handle
};

struct dgl_grid {
    GridPtr grid;
};

namespace {

thread_local std::string g_last_error;

dgl_status status_of(const Error& e) {
    if (e.is_config()) return DGL_ERR_CONFIG;
    if (e.is_io()) return DGL_ERR_IO;
    return DGL_ERR_NUMERICAL;
}

template <typename Fn>
dgl_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return DGL_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return DGL_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return DGL_ERR_INTERNAL;
    }
}

dgl_status invalid_argument(const char* message) {
    g_last_error = message;
    return DGL_ERR_INVALID_ARGUMENT;
}

} // namespace

extern "C" {

const char* dgl_version(void) { return kVersion; }

const char* dgl_status_name(dgl_status status) {
    switch (status) {
        case DGL_OK: return "ok";
        case DGL_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case DGL_ERR_CONFIG: return "config-invalid";
        case DGL_ERR_NUMERICAL: return "numerical-error";
        case DGL_ERR_IO: return "io-failure";
        case DGL_ERR_INTERNAL: return "internal-error";
    }
    return "unknown";
}

const char* dgl_last_error(void) { return g_last_error.c_str(); }

dgl_status dgl_config_create(dgl_config** out) {
    if (!out) return invalid_argument("null output pointer");
    return guarded([&] { *out = new dgl_config(); });
}

void dgl_config_destroy(dgl_config* config) { delete config; }

dgl_status dgl_config_load_file(dgl_config* config, const char* path) {
    if (!config || !path) return invalid_argument("null config or path");
    return guarded([&] { config->config.load_file(path); });
}

dgl_status dgl_config_set(dgl_config* config, const char* key, const char* value) {
    if (!config || !key || !value) return invalid_argument("null config, key or value");
    return guarded([&] { config->config.set(key, value); });
}

dgl_status dgl_run(const char* command, const dgl_config* config, const char* out_dir,
                   dgl_report** out) {
    if (!command || !config || !out) return invalid_argument("null command, config or output");
    return guarded([&] {
        auto* handle = new dgl_report();
        try {
            handle->report = run(command, config->config, out_dir ? out_dir : "");
            handle->json = report_json(handle->report);
        } catch (...) {
            delete handle;
            throw;
        }
        *out = handle;
    });
}

void dgl_report_destroy(dgl_report* report) { delete report; }

int dgl_report_all_pass(const dgl_report* report) {
    if (!report) return -1;
    return report->report.all_pass() ? 1 : 0;
}

const char* dgl_report_json(const dgl_report* report) {
    if (!report) return "";
    return report->json.c_str();
}

dgl_status dgl_report_metric(const dgl_report* report, const char* name, double* out) {
    if (!report || !name || !out) return invalid_argument("null report, name or output");
    for (const auto& [k, v] : report->report.metrics)
        if (k == name) {
            *out = v;
            g_last_error.clear();
            return DGL_OK;
        }
    for (const auto& verdict : report->report.verdicts)
        for (const auto& [k, v] : verdict.details)
            if (verdict.experiment + "." + k == name) {
                *out = v;
                g_last_error.clear();
                return DGL_OK;
            }
    g_last_error = std::string("no metric named '") + name + "'";
    return DGL_ERR_INVALID_ARGUMENT;
}

dgl_status dgl_report_write(const dgl_report* report, const char* out_dir) {
    if (!report || !out_dir) return invalid_argument("null report or out_dir");
    return guarded([&] { write_report(report->report, out_dir); });
}

const char* dgl_command_list(void) {
    static const std::string joined = [] {
        std::string s;
        for (const auto& name : command_names()) {
            if (!s.empty()) s += " ";
            s += name;
        }
        return s;
    }();
    return joined.c_str();
}

dgl_status dgl_indicial_roots(double n_b, double n_c, double* alpha, double* beta) {
    if (!alpha || !beta) return invalid_argument("null output pointer");
    return guarded([&] {
        const auto r = indicial_roots(n_b, n_c);
        *alpha = r.alpha;
        *beta = r.beta;
    });
}

dgl_status dgl_admissible_theta_range(double p, double n_b, double n_c, double* lo, double* hi) {
    if (!lo || !hi) return invalid_argument("null output pointer");
    return guarded([&] {
        const auto r = admissible_theta_range(p, indicial_roots(n_b, n_c));
        *lo = r.first;
        *hi = r.second;
    });
}

dgl_status dgl_bessel_k(double nu, double x, double* out) {
    if (!out) return invalid_argument("null output pointer");
    return guarded([&] { *out = bessel_k(nu, x); });
}

dgl_status dgl_bessel_k_scaled(double nu, double x, double* out) {
    if (!out) return invalid_argument("null output pointer");
    return guarded([&] { *out = bessel_k_scaled(nu, x); });
}

dgl_status dgl_heat_kernel_solution(double a, double c, double t, double x, double* out) {
    if (!out) return invalid_argument("null output pointer");
    return guarded([&] { *out = heat_kernel_solution(a, c, t, x); });
}

dgl_status dgl_grid_create_log(double s_min, double s_max, int n_cells, dgl_grid** out) {
    if (!out) return invalid_argument("null output pointer");
    return guarded([&] { *out = new dgl_grid{make_log_grid(s_min, s_max, n_cells)}; });
}

void dgl_grid_destroy(dgl_grid* grid) { delete grid; }

int dgl_grid_node_count(const dgl_grid* grid) {
    if (!grid) return -1;
    return grid->grid->node_count();
}

dgl_status dgl_grid_nodes(const dgl_grid* grid, double* s_out, double* x_out) {
    if (!grid) return invalid_argument("null grid");
    const auto& s = grid->grid->s_nodes();
    const auto& x = grid->grid->x_nodes();
    if (s_out) std::memcpy(s_out, s.data(), s.size() * sizeof(double));
    if (x_out) std::memcpy(x_out, x.data(), x.size() * sizeof(double));
    g_last_error.clear();
    return DGL_OK;
}

dgl_status dgl_weighted_lp_norm(const dgl_grid* grid, const double* values, size_t n, double p,
                                double theta, double* out) {
    if (!grid || !values || !out) return invalid_argument("null grid, values or output");
    if (n != static_cast<size_t>(grid->grid->node_count()))
        return invalid_argument("value count does not match grid");
    return guarded([&] {
        GridFunction u(grid->grid, std::vector<double>(values, values + n));
        *out = weighted_lp_norm(u, NormParams(p, theta));
    });
}

dgl_status dgl_weighted_sobolev_norm(const dgl_grid* grid, const double* values, size_t n,
                                     int order, double p, double theta, double* out) {
    if (!grid || !values || !out) return invalid_argument("null grid, values or output");
    if (n != static_cast<size_t>(grid->grid->node_count()))
        return invalid_argument("value count does not match grid");
    return guarded([&] {
        GridFunction u(grid->grid, std::vector<double>(values, values + n));
        *out = weighted_sobolev_norm(u, order, NormParams(p, theta));
    });
}

} // extern "C"
