/* degenlab C API: opaque handles + status codes over the C++ core.
 *
 * Every function returns DGL_OK on success; on failure dgl_last_error()
 * holds a thread-local message for the calling thread. Handles are created
 * and destroyed by the library; NULL is never a valid handle argument
 * unless stated.
 */
#ifndef DEGENLAB_H
#define DEGENLAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dgl_status {
    DGL_OK = 0,
    DGL_ERR_INVALID_ARGUMENT = 1,
    DGL_ERR_CONFIG = 2,    /* bad config key/value, unknown command */
    DGL_ERR_NUMERICAL = 3, /* solver/quadrature/precondition failures */
    DGL_ERR_IO = 4,        /* file write/read, schema violations */
    DGL_ERR_INTERNAL = 5
} dgl_status;

typedef struct dgl_config dgl_config;
typedef struct dgl_report dgl_report;
typedef struct dgl_grid dgl_grid;

const char* dgl_version(void);
const char* dgl_status_name(dgl_status status);
/* Message for the most recent failure on this thread; empty string if none. */
const char* dgl_last_error(void);

/* ---- configuration ---- */
dgl_status dgl_config_create(dgl_config** out);
void dgl_config_destroy(dgl_config* config);
dgl_status dgl_config_load_file(dgl_config* config, const char* path);
dgl_status dgl_config_set(dgl_config* config, const char* key, const char* value);

/* ---- harness ---- */
/* Runs a command ("elliptic-solve", "sweep-theta", "sharpness-all", ...).
 * out_dir may be NULL (no files written). The report handle owns its JSON
 * buffer. */
dgl_status dgl_run(const char* command, const dgl_config* config, const char* out_dir,
                   dgl_report** out);
void dgl_report_destroy(dgl_report* report);
/* 1 when every verdict passed, 0 otherwise, -1 on NULL */
int dgl_report_all_pass(const dgl_report* report);
/* Deterministic JSON bytes; pointer owned by the report handle. */
const char* dgl_report_json(const dgl_report* report);
dgl_status dgl_report_metric(const dgl_report* report, const char* name, double* out);
dgl_status dgl_report_write(const dgl_report* report, const char* out_dir);
/* Space-separated list of command names (static buffer). */
const char* dgl_command_list(void);

/* ---- direct numeric entry points ---- */
dgl_status dgl_indicial_roots(double n_b, double n_c, double* alpha, double* beta);
dgl_status dgl_admissible_theta_range(double p, double n_b, double n_c, double* lo, double* hi);
dgl_status dgl_bessel_k(double nu, double x, double* out);
dgl_status dgl_bessel_k_scaled(double nu, double x, double* out);
dgl_status dgl_heat_kernel_solution(double a, double c, double t, double x, double* out);

/* ---- grids and weighted norms ---- */
dgl_status dgl_grid_create_log(double s_min, double s_max, int n_cells, dgl_grid** out);
void dgl_grid_destroy(dgl_grid* grid);
int dgl_grid_node_count(const dgl_grid* grid);
/* Copies node coordinates; either output may be NULL. Buffers must hold
 * dgl_grid_node_count doubles. */
dgl_status dgl_grid_nodes(const dgl_grid* grid, double* s_out, double* x_out);
/* values has one entry per node. */
dgl_status dgl_weighted_lp_norm(const dgl_grid* grid, const double* values, size_t n, double p,
                                double theta, double* out);
dgl_status dgl_weighted_sobolev_norm(const dgl_grid* grid, const double* values, size_t n,
                                     int order, double p, double theta, double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DEGENLAB_H */
