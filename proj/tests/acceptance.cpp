// Acceptance suite: runs every acceptance criterion at its pinned cap and
// prints one PASS/FAIL line per criterion.  Exits nonzero if any fail.

#include <cstdio>

#include "nckernel/checks.hpp"

int main() {
    nck::CheckConfig cfg;  // pinned caps
    int failures = 0;
    for (int id = 1; id <= 11; ++id) {
        nck::CheckResult r = nck::run_check(id, cfg);
        std::printf("%s criterion %2d: %s [%.2fs]%s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.detail.empty() ? "" : " -- ",
                    r.detail.c_str());
        std::fflush(stdout);
        if (!r.pass) ++failures;
    }
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all 11 criteria passed\n");
    return failures;
}
