#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace plutus::optimizer {

struct Dimension {
    std::string name;
    double lower = 0.0;
    double upper = 1.0;
};

/// Linear-scale box. Every bound finite, lower < upper.
struct ParamSpace {
    std::vector<Dimension> dimensions;

    void validate() const;
};

using ParamMap = std::map<std::string, double>;

enum class TrialStatus { Ok, Failed };

struct Trial {
    std::size_t index = 0;
    ParamMap params;
    std::optional<double> objective;  // empty when the trial failed
    TrialStatus status = TrialStatus::Ok;
    std::string failure;              // error category for failed trials

    bool operator==(const Trial&) const = default;
};

struct OptimizationResult {
    Trial best_trial;
    std::vector<Trial> all_trials;  // ordered by index
    std::uint64_t seed = 0;
    std::size_t n_trials = 0;
};

/// Uniform value in [0, 1) drawn from a generator keyed only by (seed, trial, dimension), so a
/// draw never depends on which other draws were made before it.
double uniform_unit(std::uint64_t seed, std::size_t trial_index, std::size_t dimension_index);

ParamMap sample_params(const ParamSpace& space, std::uint64_t seed, std::size_t trial_index);

/// The objective returns the score to maximize. Throwing (any std::exception) or returning a
/// non-finite value marks the trial failed.
using Objective = std::function<double(const ParamMap&)>;

/// Evaluates n_trials sampled points, on up to `threads` worker threads. The result depends only on
/// (space, objective, seed, n_trials): best is the highest finite objective, ties going to the lowest
/// index. Throws AllTrialsFailed when no trial produced a finite objective.
OptimizationResult optimize(const ParamSpace& space, const Objective& objective, std::uint64_t seed,
                            std::size_t n_trials, unsigned threads = 1);

/// `trial,<dim names...>,objective,status` with one row per trial.
std::string trial_log_csv(const ParamSpace& space, const OptimizationResult& result);

}  // namespace plutus::optimizer
