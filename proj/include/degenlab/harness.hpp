#pragma once

#include "degenlab/config.hpp"
#include "degenlab/report.hpp"

#include <string>
#include <vector>

namespace degenlab {

// Registered command names, in documentation order.
const std::vector<std::string>& command_names();

// Dispatches one command. Writes report.json + CSV curves into out_dir
// when non-empty. config_invalid for unknown commands/keys/bad values;
// numerical module errors propagate.
ExperimentReport run(const std::string& command, const RunConfig& config,
                     const std::string& out_dir = {});

// One row of the theta sweep.
struct SweepRow {
    double theta;
    double n_hat;            // NaN when not reported
    std::string status;      // ok | endpoint-theta | outside-range
    bool divergence_flag;    // homogeneous-norm scan marker
};

// A priori ratio constant over a seeded forcing corpus per theta;
// outside the closed admissible range records the failure mode instead of
// a number.
std::vector<SweepRow> sweep_theta(double a, double b, double c, double p, double lambda,
                                  double theta_min, double theta_max, double theta_step,
                                  int corpus_size, std::uint64_t seed);

} // namespace degenlab
