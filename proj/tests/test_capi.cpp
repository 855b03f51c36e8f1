#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "degenlab.h"

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

TEST_CASE("version and status names") {
    CHECK(std::strlen(dgl_version()) > 0);
    CHECK(std::string(dgl_status_name(DGL_OK)) == "ok");
    CHECK(std::string(dgl_status_name(DGL_ERR_CONFIG)) == "config-invalid");
    CHECK(std::string(dgl_status_name(DGL_ERR_NUMERICAL)) == "numerical-error");
}

TEST_CASE("scalar entry points") {
    double alpha = 0.0, beta = 0.0;
    REQUIRE(dgl_indicial_roots(-1.0, 4.0, &alpha, &beta) == DGL_OK);
    CHECK(alpha == doctest::Approx(-2.0));
    CHECK(beta == doctest::Approx(2.0));

    double lo = 0.0, hi = 0.0;
    REQUIRE(dgl_admissible_theta_range(2.0, -1.0, 4.0, &lo, &hi) == DGL_OK);
    CHECK(lo == doctest::Approx(-4.0));
    CHECK(hi == doctest::Approx(4.0));

    // degenerate discriminant surfaces as a numerical error with a message
    CHECK(dgl_indicial_roots(1.0, -1.0, &alpha, &beta) == DGL_ERR_NUMERICAL);
    CHECK(std::strlen(dgl_last_error()) > 0);

    double k = 0.0;
    REQUIRE(dgl_bessel_k(0.5, 1.0, &k) == DGL_OK);
    CHECK(k == doctest::Approx(std::sqrt(M_PI / 2.0) * std::exp(-1.0)).epsilon(1e-10));
    CHECK(dgl_bessel_k(0.5, -1.0, &k) == DGL_ERR_NUMERICAL);
    double ks = 0.0;
    REQUIRE(dgl_bessel_k_scaled(1.0, 50.0, &ks) == DGL_OK);
    CHECK(ks > 0.0);

    double v = 0.0;
    REQUIRE(dgl_heat_kernel_solution(1.0, 1.0, 2.0, 2.0, &v) == DGL_OK);
    CHECK(v == doctest::Approx(0.0122510237763).epsilon(1e-9));
    REQUIRE(dgl_heat_kernel_solution(1.0, 1.0, -3.0, 2.0, &v) == DGL_OK);
    CHECK(v == 0.0);

    CHECK(dgl_bessel_k(0.5, 1.0, nullptr) == DGL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("grid and norm handles") {
    dgl_grid* grid = nullptr;
    REQUIRE(dgl_grid_create_log(-8.0, 8.0, 2048, &grid) == DGL_OK);
    const int n = dgl_grid_node_count(grid);
    REQUIRE(n == 2049);

    std::vector<double> s(static_cast<std::size_t>(n)), x(static_cast<std::size_t>(n));
    REQUIRE(dgl_grid_nodes(grid, s.data(), x.data()) == DGL_OK);
    CHECK(x.front() == doctest::Approx(std::exp(-8.0)));
    CHECK(x.back() == doctest::Approx(std::exp(8.0)));

    std::vector<double> values(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = std::exp(-s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(i)]);
    double norm = 0.0;
    REQUIRE(dgl_weighted_lp_norm(grid, values.data(), values.size(), 2.0, 0.0, &norm) == DGL_OK);
    CHECK(norm == doctest::Approx(std::pow(M_PI / 2.0, 0.25)).epsilon(1e-9));

    double h1 = 0.0;
    REQUIRE(dgl_weighted_sobolev_norm(grid, values.data(), values.size(), 1, 2.0, 0.0, &h1) ==
            DGL_OK);
    CHECK(h1 == doctest::Approx(std::pow(2.0 * std::sqrt(M_PI / 2.0), 0.5)).epsilon(1e-9));

    CHECK(dgl_weighted_lp_norm(grid, values.data(), 7, 2.0, 0.0, &norm) ==
          DGL_ERR_INVALID_ARGUMENT);
    CHECK(dgl_grid_create_log(2.0, 1.0, 64, &grid) == DGL_ERR_NUMERICAL);
    dgl_grid_destroy(grid);

    dgl_grid* bad = nullptr;
    CHECK(dgl_grid_create_log(0.0, 1.0, 1, &bad) == DGL_ERR_NUMERICAL);
}

TEST_CASE("harness through the shared library") {
    dgl_config* cfg = nullptr;
    REQUIRE(dgl_config_create(&cfg) == DGL_OK);
    REQUIRE(dgl_config_set(cfg, "n_cells", "512") == DGL_OK);

    dgl_report* rep = nullptr;
    REQUIRE(dgl_run("norms", cfg, nullptr, &rep) == DGL_OK);
    CHECK(dgl_report_all_pass(rep) == 1);
    const std::string j1 = dgl_report_json(rep);
    CHECK(j1.find("\"schema_version\": 1") != std::string::npos);

    double metric = 0.0;
    REQUIRE(dgl_report_metric(rep, "gaussian_closed_form_error", &metric) == DGL_OK);
    CHECK(metric < 1e-7);
    CHECK(dgl_report_metric(rep, "no_such_metric", &metric) == DGL_ERR_INVALID_ARGUMENT);

    dgl_report* rep2 = nullptr;
    REQUIRE(dgl_run("norms", cfg, nullptr, &rep2) == DGL_OK);
    CHECK(j1 == dgl_report_json(rep2)); // determinism through the C surface
    dgl_report_destroy(rep2);

    const auto dir = std::filesystem::temp_directory_path() / "degenlab_capi_out";
    REQUIRE(dgl_report_write(rep, dir.string().c_str()) == DGL_OK);
    CHECK(std::filesystem::exists(dir / "report.json"));
    std::filesystem::remove_all(dir);
    dgl_report_destroy(rep);

    SUBCASE("error families") {
        dgl_report* r = nullptr;
        CHECK(dgl_run("no-such-command", cfg, nullptr, &r) == DGL_ERR_CONFIG);
        CHECK(std::strlen(dgl_last_error()) > 0);

        dgl_config* bad = nullptr;
        REQUIRE(dgl_config_create(&bad) == DGL_OK);
        REQUIRE(dgl_config_set(bad, "theta", "abc") == DGL_OK);
        CHECK(dgl_run("elliptic-solve", bad, nullptr, &r) == DGL_ERR_CONFIG);
        dgl_config_destroy(bad);

        dgl_config* endpoint = nullptr;
        REQUIRE(dgl_config_create(&endpoint) == DGL_OK);
        REQUIRE(dgl_config_set(endpoint, "theta", "4.0") == DGL_OK);
        CHECK(dgl_run("elliptic-solve", endpoint, nullptr, &r) == DGL_ERR_NUMERICAL);
        dgl_config_destroy(endpoint);

        CHECK(dgl_run(nullptr, cfg, nullptr, &r) == DGL_ERR_INVALID_ARGUMENT);
    }

    SUBCASE("config file loading") {
        const auto path = std::filesystem::temp_directory_path() / "degenlab_capi.cfg";
        {
            std::ofstream f(path);
            f << "preset=gaussian\nn_cells=256\n";
        }
        dgl_config* file_cfg = nullptr;
        REQUIRE(dgl_config_create(&file_cfg) == DGL_OK);
        CHECK(dgl_config_load_file(file_cfg, path.string().c_str()) == DGL_OK);
        CHECK(dgl_config_load_file(file_cfg, "/no/such/file.cfg") == DGL_ERR_IO);
        dgl_config_destroy(file_cfg);
        std::filesystem::remove(path);
    }

    dgl_config_destroy(cfg);
}

TEST_CASE("command list covers the documented surface") {
    const std::string cmds = dgl_command_list();
    for (const char* name :
         {"elliptic-solve", "elliptic-fd", "parabolic-cauchy", "heat-kernel", "bessel-check",
          "norms", "sweep-theta", "sharpness-hardy", "sharpness-parabolic",
          "sharpness-nonunique", "sharpness-adjoint", "sharpness-all"})
        CHECK(cmds.find(name) != std::string::npos);
}
