#pragma once
// Goal schedules and solving runs.
//
// A fixed-goal (FG) schedule presents the first training task throughout; a
// varying-goal (MVG) schedule redraws the active task from the transition
// matrix every epoch.  The population carries over across switches.

#include <utility>
#include <vector>

#include "flexopt/evolve/ga.hpp"
#include "flexopt/evolve/trace.hpp"

namespace flexopt::evolve {

enum class ScheduleKind { FG, MVG };

const char* schedule_name(ScheduleKind kind);
ScheduleKind schedule_from_name(std::string_view name);

struct Schedule {
    ScheduleKind kind = ScheduleKind::MVG;
    int epoch_len = 20;                             // generations between switches
    std::vector<std::vector<double>> transition;    // row-stochastic, MVG only
    bool reset_on_switch = false;                   // fresh random population at each switch

    void validate(std::size_t n_tasks) const;
};

// Sequence of active task indices, one per epoch.  FG stays on task 0; MVG
// starts on task 0 and walks the transition matrix.
class ScheduleWalker {
public:
    ScheduleWalker(const Schedule& schedule, std::size_t n_tasks, Rng rng);

    std::size_t current() const { return current_; }
    std::size_t next();

private:
    const Schedule& schedule_;
    std::size_t n_tasks_;
    Rng rng_;
    std::size_t current_ = 0;
};

struct SolveResult {
    bool solved = false;
    int generations = 0;          // adaption cost when solved, the cap otherwise
    Genotype best;                // first qualifying genome (lowest index)
    RunTrace trace;
};

// Step until some genome reaches binary performance 1 against the goal, or
// until ga.max_generations.  A qualifying genome in the incoming population
// costs 0 generations.  The population is evolved in place.
SolveResult run_until_solved(Population& pop, const GoalEvaluator& eval, double eps, const GAParams& ga,
                             Rng run_rng, int threads = 1);

struct ScheduleResult {
    RunTrace trace;               // one row per generation 0..total (inclusive)
    std::size_t final_goal = 0;   // active task index at the end of the run
    Genotype final_best;          // best genome of the final population vs that task
};

// Evolve the population through the schedule for total_generations breeding
// steps, switching goals at epoch boundaries.
ScheduleResult run_schedule(Population& pop, const Schedule& schedule,
                            const std::vector<GoalEvaluator>& goals, const GAParams& ga,
                            int total_generations, Rng run_rng, int threads = 1);

} // namespace flexopt::evolve
