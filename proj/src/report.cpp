#include "qmb/report.hpp"

#include <algorithm>

namespace qmb {

const char* check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Inconclusive: return "inconclusive";
        case CheckStatus::Aborted: return "aborted";
    }
    return "aborted";
}

CheckResult CheckResult::pass(std::string id, json metrics) {
    return CheckResult{std::move(id), CheckStatus::Pass, json(), std::move(metrics)};
}

CheckResult CheckResult::fail(std::string id, json witness, json metrics) {
    return CheckResult{std::move(id), CheckStatus::Fail, std::move(witness),
                       std::move(metrics)};
}

CheckResult CheckResult::inconclusive(std::string id, json witness, json metrics) {
    return CheckResult{std::move(id), CheckStatus::Inconclusive, std::move(witness),
                       std::move(metrics)};
}

CheckResult CheckResult::aborted(std::string id, json witness, json metrics) {
    return CheckResult{std::move(id), CheckStatus::Aborted, std::move(witness),
                       std::move(metrics)};
}

void VerificationReport::add(CheckResult check) { checks.push_back(std::move(check)); }

void VerificationReport::sort_checks() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
}

bool VerificationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) {
        return c.status == CheckStatus::Pass;
    });
}

bool VerificationReport::any_fail() const {
    return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) {
        return c.status == CheckStatus::Fail || c.status == CheckStatus::Aborted;
    });
}

bool VerificationReport::any_inconclusive() const {
    return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) {
        return c.status == CheckStatus::Inconclusive;
    });
}

json VerificationReport::to_json() const {
    json out;
    out["schema"] = "qmb-report/1";
    out["config"] = config.is_null() ? json::object() : config;
    json list = json::array();
    for (const CheckResult& c : checks) {
        json entry;
        entry["checkId"] = c.id;
        entry["status"] = check_status_name(c.status);
        if (!c.witness.is_null()) entry["witness"] = c.witness;
        if (!c.metrics.is_null() && !c.metrics.empty()) entry["metrics"] = c.metrics;
        list.push_back(std::move(entry));
    }
    out["perCheck"] = std::move(list);
    out["verdict"] = any_fail() ? "fail" : (any_inconclusive() ? "inconclusive" : "pass");
    return out;
}

std::string VerificationReport::to_text() const {
    std::string out;
    for (const CheckResult& c : checks) {
        out += c.id;
        out += ": ";
        out += check_status_name(c.status);
        if (!c.witness.is_null()) {
            out += "  witness=";
            out += c.witness.dump();
        }
        out += "\n";
    }
    out += "verdict: ";
    out += any_fail() ? "fail" : (any_inconclusive() ? "inconclusive" : "pass");
    out += "\n";
    return out;
}

json point_to_json(const PointValue& p) {
    if (p.is_real()) return json{{"real", p.as_real()}};
    if (p.is_nat()) return json{{"nat", p.as_nat()}};
    if (p.is_pair())
        return json{{"pair", json::array({point_to_json(p.pair_first()),
                                          point_to_json(p.pair_second())})}};
    if (p.is_hedgehog()) {
        const auto& h = p.as_hedgehog();
        if (h.apex) return json{{"hedgehog", "apex"}};
        return json{{"hedgehog", {{"coord", h.coord}, {"spine", h.spine}}}};
    }
    if (p.is_comb()) {
        const auto& c = p.as_comb();
        if (c.hand) return json{{"comb", {{"hand", c.x}}}};
        return json{{"comb", {{"tooth", c.tooth.str()}, {"height", c.y}}}};
    }
    return json{{"node", p.as_node()}};
}

namespace {

Rational rational_from_str(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) throw ConfigError("rational must look like p/q: " + s);
    try {
        return Rational(std::stoull(s.substr(0, slash)), std::stoull(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw ConfigError("bad rational: " + s);
    }
}

}  // namespace

PointValue point_from_json(const json& j) {
    if (j.is_number()) return PointValue::real(j.get<double>());
    if (!j.is_object()) throw ConfigError("point must be a number or an object");
    if (j.contains("real")) return PointValue::real(j.at("real").get<double>());
    if (j.contains("nat")) return PointValue::nat(j.at("nat").get<std::uint64_t>());
    if (j.contains("pair")) {
        const json& arr = j.at("pair");
        if (!arr.is_array() || arr.size() != 2)
            throw ConfigError("pair point needs exactly two members");
        return PointValue::pair(point_from_json(arr[0]), point_from_json(arr[1]));
    }
    if (j.contains("hedgehog")) {
        const json& h = j.at("hedgehog");
        if (h.is_string() && h.get<std::string>() == "apex") return PointValue::hedgehog_apex();
        return PointValue::hedgehog(h.at("coord").get<double>(),
                                    h.at("spine").get<std::uint64_t>());
    }
    if (j.contains("comb")) {
        const json& c = j.at("comb");
        if (c.contains("hand")) return PointValue::comb_hand(c.at("hand").get<double>());
        return PointValue::comb_tooth(rational_from_str(c.at("tooth").get<std::string>()),
                                      c.at("height").get<double>());
    }
    if (j.contains("node")) return PointValue::node(j.at("node").get<std::size_t>());
    throw ConfigError("unrecognized point: " + j.dump());
}

}  // namespace qmb
