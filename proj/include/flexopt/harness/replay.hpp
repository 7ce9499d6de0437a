#pragma once
// Bit-exact regeneration of stored runs.
//
// A record plus the config that produced it is enough to replay the full
// adaptation; any divergence (config drift, tampered seed, edited genomes)
// raises an integrity error.

#include <stdexcept>

#include "flexopt/harness/experiment.hpp"

namespace flexopt::harness {

struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Re-run the record's cell and task and verify that pre/post genotypes,
// costs, and outcome all match.  expected_config_hash comes from the output
// file's metadata line.  Returns the regenerated adaptation trace.
evolve::RunTrace replay(const RunRecord& record, const ExperimentConfig& cfg,
                        const std::string& expected_config_hash, int threads = 1);

} // namespace flexopt::harness
