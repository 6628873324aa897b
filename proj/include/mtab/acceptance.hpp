#pragma once

#include <string>
#include <vector>

#include "mtab/report.hpp"

namespace mtab {

struct Criterion {
    int number = 0;
    std::string name;
    Report report;
    double seconds = 0.0;
};

/// The full acceptance suite; `slow` adds the n=4 orbit-harmonics run.
/// Deterministic given the seed. Independent criteria fan out over `jobs`
/// worker threads.
std::vector<Criterion> run_acceptance(bool slow, unsigned long long seed, int jobs);

}  // namespace mtab
