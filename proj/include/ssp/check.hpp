// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

namespace ssp {

enum class CheckStatus { pass, fail, skip };

const char* check_status_name(CheckStatus s);

// One verified property of one instance.  `values` carries the integer
// statistics the verdict was computed from, so a reader (or the report
// rechecker) can re-derive pass/fail without re-running the solvers.
struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::skip;
    std::map<std::string, long long> values;
    std::string note;
};

using CheckList = std::vector<CheckResult>;

inline CheckResult make_check(std::string name, bool ok) {
    CheckResult r;
    r.name = std::move(name);
    r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    return r;
}

inline CheckResult skip_check(std::string name, std::string note) {
    CheckResult r;
    r.name = std::move(name);
    r.status = CheckStatus::skip;
    r.note = std::move(note);
    return r;
}

}  // namespace ssp
