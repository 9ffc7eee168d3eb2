#pragma once

#include <string>
#include <vector>

namespace pe {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

std::vector<std::string> identity_names();
CheckResult run_identity(const std::string& id);
std::vector<CheckResult> run_all_identities();

}  // namespace pe
