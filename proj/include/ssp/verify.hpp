// SPDX-License-Identifier: Apache-2.0
#pragma once
//
// Suite orchestration and the JSON report format (schema_version 1).
// Reports are deterministic for a fixed (source, suite, limits) triple:
// rows are keyed and sorted by instance fingerprint and `timing_ms` is the
// only nondeterministic field.

#include <optional>
#include <string>
#include <vector>

#include "ssp/check.hpp"
#include "ssp/instance.hpp"
#include "ssp/oracles.hpp"

namespace ssp {

enum class Suite {
    main_bound,
    first_bound,
    second_bound,
    culprits,
    lemmas,
    transform,
    all
};

const char* suite_name(Suite s);
std::optional<Suite> suite_from_name(const std::string& name);

struct InstanceReport {
    std::string fingerprint;
    int m = 0;
    long long total_length = 0;
    CheckList checks;

    long long count(CheckStatus s) const;
    bool clean() const { return count(CheckStatus::fail) == 0; }
};

InstanceReport run_suite(const Instance& inst, Suite suite,
                         const OracleLimits& limits);

// One JSON document over many instances; `source` echoes how the instances
// were obtained (a generator spec in JSON, or an input path).
std::string report_to_json(std::vector<InstanceReport> reports,
                           const std::string& suite, const std::string& source,
                           double timing_ms);

// Re-derives every verdict expressible from a row's stored integers and
// compares it with the stored status.
struct RecheckStats {
    long long rows = 0;        // non-skip rows seen
    long long rechecked = 0;   // rows with a registered derivation
    long long mismatches = 0;  // re-derived verdict differed
    long long failures = 0;    // rows stored as fail
};

RecheckStats recheck_report(const std::string& json_text);

// Human-oriented rendering of a report payload (one line per check).
std::string report_to_table(const std::string& json_text);

}  // namespace ssp
