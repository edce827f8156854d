#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tww/contraction_engine.hpp"
#include "tww/random_models.hpp"

namespace tww {

enum class Model { gnp, gnm, regular };

std::string model_name(Model m);
Model parse_model(const std::string& name);

struct ExperimentSpec {
    Model model = Model::regular;
    std::vector<long long> n_grid;
    int d = 3;             // regular
    long long m = 0;       // gnm
    double p = 0.0;        // gnp
    int trials = 1;
    Seed seed_base = 1;
    bool auto_params = true;
    PipelineParams manual;  // used when !auto_params
    int jobs = 1;
};

struct ExperimentRecord {
    Model model;
    long long n = 0;
    double d_or_m = 0.0;
    int trial = 0;
    Seed seed = 0;
    int a = 0, b = 0, r = 0, q = 0;
    long long m_phi = 0;
    long long width = 0;
    double theory_exponent = 0.0;
    double bound_value = 0.0;  // n^theory_exponent, the bare polynomial factor
    long long runtime_ms = 0;
    bool out_of_theory = false;  // effective degree <= 2, outside the pipeline regime
    bool verified = false;       // width re-checked by a fresh replay before emission
};

struct ExperimentResult {
    std::vector<ExperimentRecord> records;  // deterministic (n, trial) order
    double slope = 0.0;                     // least squares of log(width) on log(n)
};

/// Runs the grid; every record's width is re-verified in-process and any
/// verification failure throws instead of emitting a silent invalid row.
ExperimentResult run_experiment(const ExperimentSpec& spec);

extern const char* const experiment_csv_header;
void write_csv_row(std::ostream& out, const ExperimentRecord& rec);
void write_csv(std::ostream& out, const ExperimentResult& result);

}  // namespace tww
