// Acceptance suite runner: one pass/fail line per criterion, exit 0 iff all
// pass. --slow adds the n=4 orbit-harmonics run.
#include <cstdio>
#include <cstring>
#include <string>

#include "mtab/acceptance.hpp"

int main(int argc, char** argv) {
    bool slow = false;
    unsigned long long seed = 1;
    int jobs = 2;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--slow")) slow = true;
        if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) seed = std::stoull(argv[++i]);
        if (!std::strcmp(argv[i], "--jobs") && i + 1 < argc) jobs = std::stoi(argv[++i]);
    }
    auto results = mtab::run_acceptance(slow, seed, jobs);
    bool all_ok = true;
    for (auto& c : results) {
        std::printf("[%s] criterion %2d: %s (%.1fs)\n", c.report.passed() ? "PASS" : "FAIL",
                    c.number, c.name.c_str(), c.seconds);
        if (!c.report.passed()) {
            std::printf("        %s\n", c.report.data.dump().c_str());
            all_ok = false;
        }
    }
    std::printf("%s\n", all_ok ? "acceptance: all criteria passed"
                               : "acceptance: FAILURES present");
    return all_ok ? 0 : 1;
}
