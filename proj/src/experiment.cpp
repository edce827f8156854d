#include "tww/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "tww/density.hpp"

namespace tww {

std::string model_name(Model m) {
    switch (m) {
        case Model::gnp: return "gnp";
        case Model::gnm: return "gnm";
        case Model::regular: return "regular";
    }
    return "?";
}

Model parse_model(const std::string& name) {
    if (name == "gnp") return Model::gnp;
    if (name == "gnm") return Model::gnm;
    if (name == "regular") return Model::regular;
    throw std::invalid_argument("unknown model '" + name + "' (gnp|gnm|regular)");
}

namespace {

ExperimentRecord run_one(const ExperimentSpec& spec, long long n, int trial, Seed seed) {
    auto t0 = std::chrono::steady_clock::now();
    ExperimentRecord rec;
    rec.model = spec.model;
    rec.n = n;
    rec.trial = trial;
    rec.seed = seed;

    Graph g;
    switch (spec.model) {
        case Model::regular:
            g = gen_regular(static_cast<int>(n), spec.d, seed);
            rec.d_or_m = spec.d;
            break;
        case Model::gnm:
            g = gen_gnm(static_cast<int>(n), spec.m, seed);
            rec.d_or_m = static_cast<double>(spec.m);
            break;
        case Model::gnp:
            g = gen_gnp(static_cast<int>(n), spec.p, seed);
            rec.d_or_m = spec.p;
            break;
    }

    Rational mad = mad_exact(g).density;
    double d_eff = mad.to_double();
    rec.out_of_theory = !(mad > Rational(2, 1));
    if (d_eff > 2.0) {
        rec.theory_exponent = (d_eff - 2.0) / (2.0 * d_eff - 2.0);
        rec.bound_value = std::pow(static_cast<double>(n), rec.theory_exponent);
    }

    ContractionSequence seq;
    if (!rec.out_of_theory) {
        PipelineParams params =
            spec.auto_params ? select_params_for(n, mad) : spec.manual;
        PipelineReport rep = build_pipeline(g, params, seed);
        seq = std::move(rep.sequence);
        rec.a = rep.params.a;
        rec.b = rep.params.b;
        rec.r = rep.params.r;
        rec.q = rep.params.q;
        rec.m_phi = rep.m_phi;
        rec.width = rep.width;
    } else {
        seq = greedy_contract(g);
        rec.width = replay(g, seq).width;
    }

    std::string reason;
    rec.verified = verify(g, seq, rec.width, &reason);
    if (!rec.verified)
        throw std::runtime_error("experiment: emitted sequence failed verification (n=" +
                                 std::to_string(n) + " trial=" + std::to_string(trial) +
                                 "): " + reason);
    auto t1 = std::chrono::steady_clock::now();
    rec.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return rec;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    struct Job {
        long long n;
        int trial;
        Seed seed;
    };
    std::vector<Job> jobs;
    for (size_t ni = 0; ni < spec.n_grid.size(); ni++)
        for (int t = 0; t < spec.trials; t++)
            jobs.push_back({spec.n_grid[ni], t,
                            mix_seed(spec.seed_base, ni * 1000003ULL + static_cast<Seed>(t))});

    ExperimentResult result;
    result.records.resize(jobs.size());
    std::atomic<size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
        while (true) {
            size_t i = cursor.fetch_add(1);
            if (i >= jobs.size()) break;
            try {
                result.records[i] = run_one(spec, jobs[i].n, jobs[i].trial, jobs[i].seed);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mu);
                if (!failure) failure = std::current_exception();
                break;
            }
        }
    };
    int nthreads = std::max(1, spec.jobs);
    if (nthreads == 1 || jobs.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; t++) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    // least squares slope of log(width) on log(n)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long long cnt = 0;
    for (const auto& rec : result.records) {
        if (rec.width <= 0 || rec.n <= 1) continue;
        double x = std::log(static_cast<double>(rec.n));
        double y = std::log(static_cast<double>(rec.width));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        cnt++;
    }
    double denom = cnt * sxx - sx * sx;
    result.slope = (cnt >= 2 && std::abs(denom) > 1e-12) ? (cnt * sxy - sx * sy) / denom : 0.0;
    return result;
}

const char* const experiment_csv_header =
    "model,n,d_or_m,trial,seed,a,b,r,q,m_phi,width,theory_exponent,bound_value,runtime_ms,"
    "out_of_theory,verified";

void write_csv_row(std::ostream& out, const ExperimentRecord& rec) {
    out << model_name(rec.model) << ',' << rec.n << ',' << rec.d_or_m << ',' << rec.trial << ','
        << rec.seed << ',' << rec.a << ',' << rec.b << ',' << rec.r << ',' << rec.q << ','
        << rec.m_phi << ',' << rec.width << ',' << rec.theory_exponent << ',' << rec.bound_value
        << ',' << rec.runtime_ms << ',' << (rec.out_of_theory ? 1 : 0) << ','
        << (rec.verified ? 1 : 0) << '\n';
}

void write_csv(std::ostream& out, const ExperimentResult& result) {
    out << experiment_csv_header << '\n';
    for (const auto& rec : result.records) write_csv_row(out, rec);
    out << "summary,slope=" << result.slope << '\n';
}

}  // namespace tww
