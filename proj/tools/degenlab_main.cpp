// degenlab CLI: thin consumer of the shared-library C API.
//
// Usage: degenlab <command> [--config <file>] [--set key=value ...] [--out <dir>]
//
// Exit codes: 0 all verdicts pass, 1 verdict failure, 2 config/usage error,
// 3 numerical error, 4 io failure.

#include "degenlab.h"

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

namespace {

void usage() {
    std::fprintf(stderr,
                 "usage: degenlab <command> [--config <file>] [--set key=value ...] "
                 "[--out <dir>] [--quiet]\n"
                 "commands: %s\n",
                 dgl_command_list());
}

int exit_code_for(dgl_status status) {
    switch (status) {
        case DGL_OK: return 0;
        case DGL_ERR_INVALID_ARGUMENT: return 2;
        case DGL_ERR_CONFIG: return 2;
        case DGL_ERR_NUMERICAL: return 3;
        case DGL_ERR_IO: return 4;
        case DGL_ERR_INTERNAL: return 3;
    }
    return 3;
}

int fail(dgl_status status) {
    std::fprintf(stderr, "degenlab: %s: %s\n", dgl_status_name(status), dgl_last_error());
    return exit_code_for(status);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        usage();
        return 2;
    }
    const std::string command = argv[1];
    if (command == "--help" || command == "-h" || command == "help") {
        usage();
        return 0;
    }

    std::string config_path, out_dir;
    std::vector<std::pair<std::string, std::string>> overrides;
    bool quiet = false;
    for (int i = 2; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc) {
            config_path = argv[++i];
        } else if (arg == "--out" && i + 1 < argc) {
            out_dir = argv[++i];
        } else if (arg == "--set" && i + 1 < argc) {
            const std::string kv = argv[++i];
            const auto eq = kv.find('=');
            if (eq == std::string::npos) {
                std::fprintf(stderr, "degenlab: --set expects key=value, got '%s'\n", kv.c_str());
                return 2;
            }
            overrides.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
        } else if (arg == "--quiet") {
            quiet = true;
        } else {
            std::fprintf(stderr, "degenlab: unknown argument '%s'\n", arg.c_str());
            usage();
            return 2;
        }
    }

    dgl_config* config = nullptr;
    dgl_status st = dgl_config_create(&config);
    if (st != DGL_OK) return fail(st);

    if (!config_path.empty()) {
        st = dgl_config_load_file(config, config_path.c_str());
        if (st != DGL_OK) {
            dgl_config_destroy(config);
            return fail(st);
        }
    }
    for (const auto& [k, v] : overrides) {
        st = dgl_config_set(config, k.c_str(), v.c_str());
        if (st != DGL_OK) {
            dgl_config_destroy(config);
            return fail(st);
        }
    }

    dgl_report* report = nullptr;
    st = dgl_run(command.c_str(), config, out_dir.empty() ? nullptr : out_dir.c_str(), &report);
    dgl_config_destroy(config);
    if (st != DGL_OK) return fail(st);

    if (!quiet) std::fputs(dgl_report_json(report), stdout);
    const int pass = dgl_report_all_pass(report);
    dgl_report_destroy(report);
    return pass == 1 ? 0 : 1;
}
