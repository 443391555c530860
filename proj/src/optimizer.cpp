#include "plutus/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "plutus/error.hpp"
#include "plutus/text.hpp"

namespace plutus::optimizer {

void ParamSpace::validate() const {
    if (dimensions.empty()) throw Error(ErrorKind::InvalidArgument, "parameter space has no dimensions");
    for (const auto& d : dimensions) {
        if (!std::isfinite(d.lower) || !std::isfinite(d.upper) || !(d.lower < d.upper)) {
            throw Error(ErrorKind::InvalidArgument, "dimension '" + d.name + "' needs finite lower < upper");
        }
    }
}

double uniform_unit(std::uint64_t seed, std::size_t trial_index, std::size_t dimension_index) {
    const auto trial = static_cast<std::uint64_t>(trial_index);
    const auto dim = static_cast<std::uint64_t>(dimension_index);
    // seed_seq and mt19937_64 are fully specified by the standard, so draws are portable.
    std::seed_seq key{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
                      static_cast<std::uint32_t>(dim), static_cast<std::uint32_t>(dim >> 32)};
    std::mt19937_64 engine(key);
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

ParamMap sample_params(const ParamSpace& space, std::uint64_t seed, std::size_t trial_index) {
    ParamMap params;
    for (std::size_t d = 0; d < space.dimensions.size(); ++d) {
        const auto& dim = space.dimensions[d];
        params[dim.name] = dim.lower + uniform_unit(seed, trial_index, d) * (dim.upper - dim.lower);
    }
    return params;
}

namespace {

Trial evaluate(const ParamSpace& space, const Objective& objective, std::uint64_t seed, std::size_t index) {
    Trial trial;
    trial.index = index;
    trial.params = sample_params(space, seed, index);
    try {
        const double value = objective(trial.params);
        if (std::isfinite(value)) {
            trial.objective = value;
        } else {
            trial.status = TrialStatus::Failed;
            trial.failure = "NonFinite";
        }
    } catch (const Error& e) {
        trial.status = TrialStatus::Failed;
        trial.failure = std::string(to_string(e.kind()));
    } catch (const std::exception&) {
        trial.status = TrialStatus::Failed;
        trial.failure = "Exception";
    }
    return trial;
}

}  // namespace

OptimizationResult optimize(const ParamSpace& space, const Objective& objective, std::uint64_t seed,
                            std::size_t n_trials, unsigned threads) {
    space.validate();
    if (n_trials == 0) throw Error(ErrorKind::InvalidArgument, "n_trials must be >= 1");

    std::vector<Trial> trials(n_trials);
    const unsigned workers = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::min<std::size_t>(n_trials, 256)));
    if (workers == 1) {
        for (std::size_t i = 0; i < n_trials; ++i) trials[i] = evaluate(space, objective, seed, i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < n_trials; i = next.fetch_add(1)) {
                    trials[i] = evaluate(space, objective, seed, i);
                }
            });
        }
    }

    OptimizationResult result;
    result.seed = seed;
    result.n_trials = n_trials;
    const Trial* best = nullptr;
    for (const auto& t : trials) {
        if (t.objective && (best == nullptr || *t.objective > *best->objective)) best = &t;
    }
    if (best == nullptr) {
        throw Error(ErrorKind::AllTrialsFailed, std::to_string(n_trials) + " trials, none with a finite objective");
    }
    result.best_trial = *best;
    result.all_trials = std::move(trials);
    return result;
}

std::string trial_log_csv(const ParamSpace& space, const OptimizationResult& result) {
    std::string out = "trial";
    for (const auto& d : space.dimensions) out += "," + d.name;
    out += ",objective,status\n";
    for (const auto& t : result.all_trials) {
        out += std::to_string(t.index);
        for (const auto& d : space.dimensions) out += "," + format_double(t.params.at(d.name));
        out += "," + (t.objective ? format_double(*t.objective) : std::string());
        out += "," + (t.status == TrialStatus::Ok ? std::string("ok") : "failed:" + t.failure) + "\n";
    }
    return out;
}

}  // namespace plutus::optimizer
