#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmb/bornology.hpp"
#include "qmb/metrization.hpp"
#include "qmb/report.hpp"
#include "qmb/space.hpp"
#include "qmb/zoo.hpp"

namespace qmb {

// Result of evaluating a space expression.  The innermost catalog leaf
// and, when the whole expression still reduces to a catalog real-line
// distance, its RealMetric tag are kept so bornologies and interval
// closed forms stay reachable.  `separating` records whether separation
// is promised (and hence checked) for the composed distance.
struct ComposedSpace {
    QPSpace space;
    std::optional<std::string> zoo_id;
    std::optional<RealMetric> real_metric;
    bool separating = false;
    json expr;  // normalized expression echo
};

// Expression grammar, as JSON:
//   "id"                                   catalog space (shorthand)
//   {"zoo": "id"}
//   {"conjugate": e}
//   {"symmetrize": e}
//   {"truncate": {"of": e, "cap": c}}
//   {"fromChar": {"of": e, "char": cs, "symmetric": bool?}}
//   {"dg": {"of": e, "char": cs}}
//   {"rhoFromChi": {"of": e, "base": bs, "delta": d}}
//   {"finite": "digraph.txt"}              min-plus closure of the file
ComposedSpace compose_space(const json& expr);

// charSpec cs:
//   {"kind": "relu"} | {"kind": "abs"} | {"kind": "const", "value": v}
//   | {"kind": "distanceFrom", "point": p}
CharFunction char_from_spec(const QPSpace& space, const json& spec);

// baseSpec bs (n is the base index):
//   {"kind": "symmetric_intervals"}   open (-n, n); at(0) empty
//   {"kind": "closed_symmetric"}      closed [-n, n]
//   {"kind": "lower_rays"}            (-inf, n]
//   {"kind": "upper_rays"}            [-n, inf)
//   {"kind": "metric_balls", "center": p}   open balls B(center, n)
//   {"kind": "attached", "id": "..."}  catalog bornology base, shifted by
//                                      one slot so at(0) is empty
// Interval kinds take closed forms from the composed real metric when
// one is known and fall back to membership probes otherwise.
BaseSequence base_from_spec(const ComposedSpace& space, const json& spec);

struct SuiteConfig {
    std::string suite;
    json target;            // expression; null only when the suite has a default
    json second;            // partner expression for the pair suites
    std::size_t samples = 2000;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    std::vector<double> eps_grid;    // default 2^0 .. 2^-12, descending
    std::vector<double> delta_grid;  // default 2^0 .. 2^-12, descending
    bool grids_explicit = false;
    double delta = 1.0;     // absorption delta for the chi / cb-base suites
    json char_spec;         // charSpec for metrization-4.7; default relu
    json base_spec;         // baseSpec for metrization-6.5; default symmetric_intervals
    std::string bornology;  // attached-bornology selector; empty picks the first
    std::size_t index_budget = 8;
    double radius_budget = 0x1p12;

    static SuiteConfig from_json(const json& j);
    json to_json() const;
};

const std::vector<std::string>& suite_ids();

// Runs the named suite; every check derives its own substream from the
// master seed by check-id hashing and the report is ordered by check id.
// ConfigError escapes (exit code 2); other library errors mark the
// offending check aborted.
VerificationReport run_suite(const SuiteConfig& config);

json list_zoo();

// chi staircase on a catalog space, reported at canonical carrier points.
json construct_chi(const std::string& zoo_id, const json& base_spec, double delta);

}  // namespace qmb
