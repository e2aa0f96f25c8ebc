#include "gwkit/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

int main() {
    using clock = std::chrono::steady_clock;
    std::vector<std::function<gwkit::CheckResult()>> criteria = {
        [] { return gwkit::suite_closed_formula(); },
        [] { return gwkit::suite_hurwitz_oracles(); },
        [] { return gwkit::suite_one_part(); },
        [] { return gwkit::suite_stationary_double(); },
        [] { return gwkit::suite_localization(); },
        [] { return gwkit::suite_rubber_theta(); },
        [] { return gwkit::suite_q_rationality(); },
        [] { return gwkit::suite_hodge(); },
        [] { return gwkit::suite_removal_relation(); },
        [] { return gwkit::suite_exclusions(); },
    };

    bool all_pass = true;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto start = clock::now();
        gwkit::CheckResult r = criteria[i]();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start);
        std::printf("[%2zu] %s %s (%lld ms)", i + 1, r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    static_cast<long long>(ms.count()));
        if (!r.detail.empty()) std::printf(" — %s", r.detail.c_str());
        std::printf("\n");
        if (!r.pass) all_pass = false;
    }
    return all_pass ? 0 : 1;
}
