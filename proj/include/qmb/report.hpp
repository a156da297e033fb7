#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qmb/point.hpp"

namespace qmb {

// Insertion-ordered JSON keeps report serialization byte-stable.
using json = nlohmann::ordered_json;

enum class CheckStatus { Pass, Fail, Inconclusive, Aborted };

const char* check_status_name(CheckStatus s);

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::Pass;
    json witness;  // null when the check passed
    json metrics;  // counts only, so identical configs serialize identically

    static CheckResult pass(std::string id, json metrics = json::object());
    static CheckResult fail(std::string id, json witness, json metrics = json::object());
    static CheckResult inconclusive(std::string id, json witness,
                                    json metrics = json::object());
    static CheckResult aborted(std::string id, json witness, json metrics = json::object());
};

struct VerificationReport {
    json config;  // echo of the resolved suite configuration
    std::vector<CheckResult> checks;

    void add(CheckResult check);
    // Stable order by check id, then insertion order for duplicates.
    void sort_checks();

    bool all_pass() const;
    bool any_fail() const;
    bool any_inconclusive() const;

    json to_json() const;
    std::string to_text() const;
};

json point_to_json(const PointValue& p);
// Inverse of point_to_json; bare numbers read as reals.
PointValue point_from_json(const json& j);

}  // namespace qmb
