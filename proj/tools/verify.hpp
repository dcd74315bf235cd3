#pragma once

// The command implementations behind the CLI: star-table emission, the
// characteristic-class report, and the residual verification suites
// {fedosov, hochschild, dk0, liouville, lemmas, all}.  Every function is
// deterministic for a fixed config and seed; reports are ordered JSON so
// identical runs produce identical bytes.

#include <string>

#include "config_io.hpp"

namespace fedosov::cli {

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "fedosov", "hochschild", "dk0", "liouville", "lemmas", "all"};
    return names;
}

struct VerifyOutcome {
    Json report;
    bool ok = false;  // process exit: success iff every residual vanished
};

Json run_star(const RunConfig& cfg);
Json run_class(const RunConfig& cfg);
VerifyOutcome run_verify(const RunConfig& cfg, const std::string& suite);

}  // namespace fedosov::cli
