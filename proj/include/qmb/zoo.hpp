#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmb/bornology.hpp"
#include "qmb/sets.hpp"
#include "qmb/space.hpp"

namespace qmb {

enum class SpaceClass { Metric, QuasiMetric, Pseudometric, QuasiPseudometric };

const char* space_class_name(SpaceClass cls);

// The real-line distance functions the catalog ships, named so interval
// oracles can dispatch on them.
enum class RealMetric {
    DN,         // |x - y|
    DN1,        // min{|x - y|, 1}
    DPlus,      // |phi(x) - phi(y)|, phi(t) = e^t below 0, 1 + t above
    DPlus1,     // min{dplus, 1}
    DU,         // min{|x - y|, 1} + |relu(y) - relu(x)|
    SorgS,      // y - x forward, 1 backward
    SorgS1,     // min{1, y - x} forward, 1 backward
    SorgL,      // min{y - x, 1} forward, 1 + x - y backward
    RhoZero,    // y - x forward, 1 + x - y backward
    RhoU,       // max{y - x, 0}
    RhoL,       // max{x - y, 0}
};

double real_metric_eval(RealMetric m, double x, double y);

// Possibly unbounded interval; infinite endpoints make rays.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool lo_closed = true;
    bool hi_closed = true;

    static Interval closed(double a, double b) { return {a, b, true, true}; }
    static Interval open(double a, double b) { return {a, b, false, false}; }
    static Interval lower_ray(double b, bool closed = true);
    static Interval upper_ray(double a, bool closed = true);

    bool contains(double x) const {
        return (x > lo || (lo_closed && x == lo)) && (x < hi || (hi_closed && x == hi));
    }
    bool is_empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }
    std::string str() const;
};

// Exact inf_{a in A} d(a, x) / inf_{a in A} d(x, a) for interval A under
// the named metric; x need not be outside A.
double interval_dist_from(RealMetric m, const Interval& iv, double x);
double interval_dist_to(RealMetric m, const Interval& iv, double x);

// Membership + sampler only; works under any real-carrier space.
SetDescriptor interval_probe(const Interval& iv, const Carrier& carrier);

// Adds the closed-form oracles for the given metric on top of the probe.
SetDescriptor interval_set(RealMetric m, const Interval& iv, const Carrier& carrier);

// Monotone interval bases over a real carrier.
BaseSequence interval_base(RealMetric m, const Carrier& carrier, const std::string& label,
                           std::function<Interval(std::size_t)> shape);

Bornology ub_bornology(RealMetric m, const Carrier& carrier);  // base (-inf, n]
Bornology lb_bornology(RealMetric m, const Carrier& carrier);  // base [-n, inf)
Bornology cb_bornology(RealMetric m, const Carrier& carrier);  // base [-n, n]
// Constant whole-carrier base: the power-set bornology.
Bornology power_bornology(const QPSpace& space);

struct BornologyFamilyInfo {
    std::string id;
    std::string description;
    bool has_countable_base = true;
};

// The textbook families on the real line, including the finite-sets
// family, which is listed as a negative example: it has no countable
// base, so it cannot be carried by a BaseSequence.
const std::vector<BornologyFamilyInfo>& bornology_families();

struct NamedBornology {
    std::string id;
    Bornology bornology;
    std::string note;
};

struct ZooEntry {
    std::string id;
    QPSpace space;
    SpaceClass cls = SpaceClass::QuasiPseudometric;
    std::vector<NamedBornology> bornologies;
    std::optional<std::string> conjugate_partner;   // catalog id of conj(space)
    std::optional<std::string> symmetrize_partner;  // catalog id of sym(space)
    std::string notes;

    bool separating() const {
        return cls == SpaceClass::Metric || cls == SpaceClass::QuasiMetric;
    }
    bool symmetric() const {
        return cls == SpaceClass::Metric || cls == SpaceClass::Pseudometric;
    }
};

ZooEntry ex1_6_omega();
ZooEntry sorgenfrey_rho_s();
ZooEntry sorgenfrey_rho_l();
ZooEntry sorgenfrey_rho_s1();
ZooEntry rho_zero_line();
ZooEntry rho_u_line();
ZooEntry rho_l_line();
ZooEntry real_line_dn();
ZooEntry real_line_dn1();
ZooEntry real_line_dplus();
ZooEntry real_line_dplus1();
ZooEntry real_line_du();
ZooEntry hedgehog_space(std::optional<std::uint64_t> spines = std::nullopt);
ZooEntry hawaiian_earring();
ZooEntry ex8_2_scale();
ZooEntry ex8_6_scale();
ZooEntry comb_space();

const std::vector<ZooEntry>& zoo_catalog();
const ZooEntry& zoo_entry(const std::string& id);
bool zoo_has(const std::string& id);
std::vector<std::string> zoo_ids();

// The catalog's real-line entries keyed to their metric, for config
// resolution of interval oracles.
std::optional<RealMetric> real_metric_of(const std::string& zoo_id);

}  // namespace qmb
