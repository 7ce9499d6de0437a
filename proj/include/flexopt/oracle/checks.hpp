#pragma once
// Brute-force verification suites, kept deliberately independent of the
// implementations they check: the circuit reference evaluator recurses over
// wire definitions instead of iterating passes, and the hypercube reference
// scans raw configuration pairs instead of calling the measure code.
//
// Fault injection flips one device-under-test output so that the
// surrounding tooling can prove the checks actually bite.

#include <cstdint>
#include <string>
#include <vector>

#include "flexopt/circuit/circuit.hpp"

namespace flexopt::oracle {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

enum class Fault { none, evaluator };

// Independent feedforward evaluator: direct recursion over source indices.
int reference_feedforward_eval(const circuit::CircuitTopology& topology, std::uint32_t input,
                               const circuit::CircuitParams& params);

// feedforward-vs-reference equality, packed-vs-scalar settle equality,
// decode totality fuzz.
std::vector<CheckResult> circuit_checks(Fault fault = Fault::none);

// Hypercube minimal-reconfiguration brute force, Monte Carlo estimator
// consistency, sampled-bound dominance.
std::vector<CheckResult> formalism_checks(Fault fault = Fault::none);

} // namespace flexopt::oracle
