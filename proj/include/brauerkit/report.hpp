#pragma once

#include "brauerkit/landweber.hpp"
#include "brauerkit/parse.hpp"

namespace brauerkit {

// surface builders shared by the CLI and the test suites
CompleteIntersectionK3 build_ci(const JobSpec& job);
DoublePlaneK3 build_dp(const JobSpec& job);
WeierstrassModel build_ew(const JobSpec& job);

struct JobResult {
    std::string text;     // human-readable report
    std::string machine;  // brauerkit/1 JSON document
};

// run the requested outputs of one job; deterministic (same input document
// yields byte-identical output)
JobResult run_job(const JobSpec& job);

}  // namespace brauerkit
