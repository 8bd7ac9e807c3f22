#include <polyenum/verify.hpp>

#include <cstdio>

// One line per acceptance check, printed as each finishes; the process
// fails when any check does.
int main() {
    int failures = 0;
    polyenum::run_all_checks([&](const polyenum::CheckResult& r) {
        std::printf("%s %2d %s: %s\n", r.passed ? "PASS" : "FAIL", r.number, r.name.c_str(),
                    r.detail.c_str());
        std::fflush(stdout);
        if (!r.passed) ++failures;
    });
    if (failures > 0) std::printf("%d of 10 checks failed\n", failures);
    return failures == 0 ? 0 : 1;
}
