#include "flexopt/harness/replay.hpp"

#include <algorithm>

namespace flexopt::harness {

evolve::RunTrace replay(const RunRecord& record, const ExperimentConfig& cfg,
                        const std::string& expected_config_hash, int threads) {
    cfg.validate();
    if (cfg.hash() != expected_config_hash)
        throw IntegrityError("config drift: stored hash " + expected_config_hash +
                             " does not match the supplied config (" + cfg.hash() + ")");
    if (std::find(cfg.seeds.begin(), cfg.seeds.end(), record.seed) == cfg.seeds.end())
        throw IntegrityError("record seed " + std::to_string(record.seed) +
                             " is not part of the configured seed set");

    const evolve::ScheduleKind kind = evolve::schedule_from_name(record.scenario);

    std::size_t task_index = cfg.test.size();
    for (std::size_t ti = 0; ti < cfg.test.size(); ++ti) {
        if (std::string(circuit::kTestPrefix) + cfg.test[ti].name() == record.task_id) {
            task_index = ti;
            break;
        }
    }
    if (task_index == cfg.test.size())
        throw IntegrityError("record task '" + record.task_id + "' is not in the configured test list");

    const auto baselines = estimate_baselines(cfg);
    const auto eps = eps_from_baselines(baselines, cfg.fn_threshold);
    const PretrainedCell cell = pretrain_cell(cfg, eps, record.seed, kind, threads);
    AdaptOutcome regenerated = adapt_cell_to_task(cfg, cell, eps, record.seed, kind, task_index, threads);

    const RunRecord& r = regenerated.record;
    if (r.pre != record.pre || r.post != record.post || r.adaption_cost != record.adaption_cost ||
        r.reconfig_cost != record.reconfig_cost || r.solved != record.solved)
        throw IntegrityError("replay mismatch for seed " + std::to_string(record.seed) + ", " +
                             record.scenario + ", task '" + record.task_id + "'");
    return std::move(regenerated.trace);
}

} // namespace flexopt::harness
