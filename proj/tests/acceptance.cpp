// Acceptance suite: runs every named identity and prints one line per
// criterion.  Exit status is the number of failures.

#include <cstdio>

#include "periods/identity_suite.hpp"

int main() {
    int failures = 0;
    int index = 1;
    for (const auto& name : pe::identity_names()) {
        pe::CheckResult r = pe::run_identity(name);
        std::printf("%s C%02d %-24s %s\n", r.pass ? "PASS" : "FAIL", index, r.id.c_str(),
                    r.detail.c_str());
        std::fflush(stdout);
        if (!r.pass) ++failures;
        ++index;
    }
    if (failures == 0)
        std::printf("all %d acceptance criteria passed\n", index - 1);
    else
        std::printf("%d of %d acceptance criteria FAILED\n", failures, index - 1);
    return failures;
}
