#include "qmb/zoo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qmb/errors.hpp"

namespace qmb {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846;

double relu(double t) { return std::max(t, 0.0); }

double phi_embed(double t) { return t < 0.0 ? std::exp(t) : 1.0 + t; }

}  // namespace

const char* space_class_name(SpaceClass cls) {
    switch (cls) {
        case SpaceClass::Metric: return "metric";
        case SpaceClass::QuasiMetric: return "quasi-metric";
        case SpaceClass::Pseudometric: return "pseudometric";
        case SpaceClass::QuasiPseudometric: return "quasi-pseudometric";
    }
    return "quasi-pseudometric";
}

double real_metric_eval(RealMetric m, double x, double y) {
    switch (m) {
        case RealMetric::DN: return std::fabs(x - y);
        case RealMetric::DN1: return std::min(std::fabs(x - y), 1.0);
        case RealMetric::DPlus: return std::fabs(phi_embed(x) - phi_embed(y));
        case RealMetric::DPlus1:
            return std::min(std::fabs(phi_embed(x) - phi_embed(y)), 1.0);
        case RealMetric::DU:
            return std::min(std::fabs(x - y), 1.0) + std::fabs(relu(y) - relu(x));
        case RealMetric::SorgS: return x <= y ? y - x : 1.0;
        case RealMetric::SorgS1: return x <= y ? std::min(1.0, y - x) : 1.0;
        case RealMetric::SorgL: return x <= y ? std::min(y - x, 1.0) : 1.0 + (x - y);
        case RealMetric::RhoZero: return x <= y ? y - x : 1.0 + (x - y);
        case RealMetric::RhoU: return std::max(y - x, 0.0);
        case RealMetric::RhoL: return std::max(x - y, 0.0);
    }
    throw Error("unreachable metric kind");
}

Interval Interval::lower_ray(double b, bool closed) { return {-kInf, b, false, closed}; }
Interval Interval::upper_ray(double a, bool closed) { return {a, kInf, closed, false}; }

std::string Interval::str() const {
    std::string out = lo_closed ? "[" : "(";
    out += std::isinf(lo) ? "-inf" : format_real(lo);
    out += ", ";
    out += std::isinf(hi) ? "inf" : format_real(hi);
    out += hi_closed ? "]" : ")";
    return out;
}

namespace {

enum class Side { Member, Left, Right };

Side side_of(const Interval& iv, double x) {
    if (iv.contains(x)) return Side::Member;
    if (x > iv.hi || (x == iv.hi && !iv.hi_closed)) return Side::Right;
    return Side::Left;
}

}  // namespace

double interval_dist_from(RealMetric m, const Interval& iv, double x) {
    const Side side = side_of(iv, x);
    if (side == Side::Member) return 0.0;
    if (side == Side::Right) {
        const double dx = x - iv.hi;
        switch (m) {
            case RealMetric::DN: return dx;
            case RealMetric::DN1: return std::min(dx, 1.0);
            case RealMetric::DPlus: return phi_embed(x) - phi_embed(iv.hi);
            case RealMetric::DPlus1: return std::min(phi_embed(x) - phi_embed(iv.hi), 1.0);
            case RealMetric::DU: return std::min(dx, 1.0) + (relu(x) - relu(iv.hi));
            case RealMetric::SorgS: return dx;
            case RealMetric::SorgS1: return std::min(dx, 1.0);
            case RealMetric::SorgL: return std::min(dx, 1.0);
            case RealMetric::RhoZero: return dx;
            case RealMetric::RhoU: return dx;
            case RealMetric::RhoL: return 0.0;
        }
    }
    const double dxl = iv.lo - x;
    switch (m) {
        case RealMetric::DN: return dxl;
        case RealMetric::DN1: return std::min(dxl, 1.0);
        case RealMetric::DPlus: return phi_embed(iv.lo) - phi_embed(x);
        case RealMetric::DPlus1: return std::min(phi_embed(iv.lo) - phi_embed(x), 1.0);
        case RealMetric::DU: return std::min(dxl, 1.0) + (relu(iv.lo) - relu(x));
        case RealMetric::SorgS: return 1.0;
        case RealMetric::SorgS1: return 1.0;
        case RealMetric::SorgL: return 1.0 + dxl;
        case RealMetric::RhoZero: return 1.0 + dxl;
        case RealMetric::RhoU: return 0.0;
        case RealMetric::RhoL: return dxl;
    }
    throw Error("unreachable metric kind");
}

double interval_dist_to(RealMetric m, const Interval& iv, double x) {
    const Side side = side_of(iv, x);
    if (side == Side::Member) return 0.0;
    if (side == Side::Right) {
        const double dx = x - iv.hi;
        switch (m) {
            case RealMetric::DN: return dx;
            case RealMetric::DN1: return std::min(dx, 1.0);
            case RealMetric::DPlus: return phi_embed(x) - phi_embed(iv.hi);
            case RealMetric::DPlus1: return std::min(phi_embed(x) - phi_embed(iv.hi), 1.0);
            case RealMetric::DU: return std::min(dx, 1.0) + (relu(x) - relu(iv.hi));
            case RealMetric::SorgS: return 1.0;
            case RealMetric::SorgS1: return 1.0;
            case RealMetric::SorgL: return 1.0 + dx;
            case RealMetric::RhoZero: return 1.0 + dx;
            case RealMetric::RhoU: return 0.0;
            case RealMetric::RhoL: return dx;
        }
    }
    const double dxl = iv.lo - x;
    switch (m) {
        case RealMetric::DN: return dxl;
        case RealMetric::DN1: return std::min(dxl, 1.0);
        case RealMetric::DPlus: return phi_embed(iv.lo) - phi_embed(x);
        case RealMetric::DPlus1: return std::min(phi_embed(iv.lo) - phi_embed(x), 1.0);
        case RealMetric::DU: return std::min(dxl, 1.0) + (relu(iv.lo) - relu(x));
        case RealMetric::SorgS: return dxl;
        case RealMetric::SorgS1: return std::min(dxl, 1.0);
        case RealMetric::SorgL: return std::min(dxl, 1.0);
        case RealMetric::RhoZero: return dxl;
        case RealMetric::RhoU: return dxl;
        case RealMetric::RhoL: return 0.0;
    }
    throw Error("unreachable metric kind");
}

SetDescriptor interval_probe(const Interval& iv, const Carrier& carrier) {
    if (iv.is_empty()) return SetDescriptor::empty_set(iv.str());
    const double lo = std::max(iv.lo, carrier.window_lo());
    const double hi = std::min(iv.hi, carrier.window_hi());
    if (lo > hi)
        throw ConfigError("interval " + iv.str() + " misses the sampling window");
    Interval shape = iv;
    SetDescriptor set(iv.str(),
                      [shape](const PointValue& p) { return shape.contains(p.as_real()); });
    std::vector<double> anchors;
    for (double v : {iv.lo, iv.hi, 0.0, 1.0, -1.0, (lo + hi) / 2.0})
        if (std::isfinite(v) && shape.contains(v) && v >= lo && v <= hi) anchors.push_back(v);
    set.with_sampler([shape, lo, hi, anchors](Rng& rng) {
        if (!anchors.empty() && rng.next_bool(0.2))
            return PointValue::real(anchors[rng.next_index(anchors.size())]);
        double v = rng.next_real(lo, hi);
        for (int tries = 0; !shape.contains(v) && tries < 8; ++tries)
            v = std::nextafter(v, (lo + hi) / 2.0);
        if (!shape.contains(v)) v = anchors.empty() ? (lo + hi) / 2.0 : anchors.front();
        return PointValue::real(v);
    });
    return set;
}

SetDescriptor interval_set(RealMetric m, const Interval& iv, const Carrier& carrier) {
    SetDescriptor set = interval_probe(iv, carrier);
    if (iv.is_empty()) return set;
    Interval shape = iv;
    set.with_dist_from(
        [m, shape](const PointValue& p) { return interval_dist_from(m, shape, p.as_real()); });
    set.with_dist_to(
        [m, shape](const PointValue& p) { return interval_dist_to(m, shape, p.as_real()); });
    return set;
}

namespace {

bool interval_subset(const Interval& a, const Interval& b) {
    const bool lo_ok = b.lo < a.lo || (b.lo == a.lo && (b.lo_closed || !a.lo_closed));
    const bool hi_ok = a.hi < b.hi || (a.hi == b.hi && (b.hi_closed || !a.hi_closed));
    return lo_ok && hi_ok;
}

bool interval_equal(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi && a.lo_closed == b.lo_closed &&
           a.hi_closed == b.hi_closed;
}

}  // namespace

BaseSequence interval_base(RealMetric m, const Carrier& carrier, const std::string& label,
                           std::function<Interval(std::size_t)> shape) {
    BaseSequence::SetAt at = [m, carrier, shape](std::size_t n) {
        return interval_set(m, shape(n), carrier);
    };
    BaseSequence::InclusionAt incl = [shape](std::size_t i, std::size_t j) {
        const Interval a = shape(i);
        const Interval b = shape(j);
        if (!interval_subset(a, b)) return Inclusion::NotSubset;
        return interval_equal(a, b) ? Inclusion::Subset : Inclusion::StrictSubset;
    };
    return BaseSequence(label, std::move(at), std::move(incl));
}

Bornology ub_bornology(RealMetric m, const Carrier& carrier) {
    return Bornology("ub", interval_base(m, carrier, "ub-rays", [](std::size_t n) {
                         return Interval::lower_ray(static_cast<double>(n));
                     }));
}

Bornology lb_bornology(RealMetric m, const Carrier& carrier) {
    return Bornology("lb", interval_base(m, carrier, "lb-rays", [](std::size_t n) {
                         return Interval::upper_ray(-static_cast<double>(n));
                     }));
}

Bornology cb_bornology(RealMetric m, const Carrier& carrier) {
    return Bornology("cb", interval_base(m, carrier, "cb-intervals", [](std::size_t n) {
                         const double r = static_cast<double>(n);
                         return Interval::closed(-r, r);
                     }));
}

Bornology power_bornology(const QPSpace& space) {
    const Carrier carrier = space.carrier();
    BaseSequence::SetAt at = [carrier](std::size_t) {
        SetDescriptor whole("whole-carrier",
                            [carrier](const PointValue& p) { return carrier.shape_ok(p); });
        whole.with_sampler([carrier](Rng& rng) { return carrier.sample(rng); });
        return whole;
    };
    BaseSequence::InclusionAt incl = [](std::size_t, std::size_t) { return Inclusion::Subset; };
    return Bornology("power", BaseSequence("constant-whole", std::move(at), std::move(incl)));
}

const std::vector<BornologyFamilyInfo>& bornology_families() {
    static const std::vector<BornologyFamilyInfo> families = {
        {"ub", "upper-bounded sets, based by the rays (-inf, n]", true},
        {"lb", "lower-bounded sets, based by the rays [-n, inf)", true},
        {"cb", "metrically bounded sets, based by the intervals [-n, n]", true},
        {"fb",
         "finite sets; on an uncountable carrier this family has no countable base, so no "
         "BaseSequence can carry it",
         false},
        {"power", "all subsets, based by the constant whole-carrier sequence", true},
    };
    return families;
}

namespace {

ZooEntry real_line_entry(std::string id, RealMetric m, SpaceClass cls, std::string notes,
                         double lo = -1.0e4, double hi = 1.0e4) {
    const Carrier carrier = Carrier::reals(lo, hi);
    DistFn dist = [m](const PointValue& a, const PointValue& b) {
        return real_metric_eval(m, a.as_real(), b.as_real());
    };
    QPSpace space(id, carrier, std::move(dist));
    ZooEntry entry{std::move(id), std::move(space), cls, {}, {}, {}, {}};
    entry.notes = std::move(notes);
    return entry;
}

SetDescriptor nat_prefix_set(std::uint64_t n, std::uint64_t limit) {
    SetDescriptor set("{0.." + std::to_string(n) + "}",
                      [n](const PointValue& p) { return p.as_nat() <= n; });
    set.with_dist_from([n](const PointValue& p) {
        // Forward cost from the prefix: 0 is always a member and pays 2^0.
        return p.as_nat() <= n ? 0.0 : 1.0;
    });
    set.with_dist_to([n, limit](const PointValue& p) {
        const std::uint64_t v = p.as_nat();
        if (v <= n) return 0.0;
        return v <= limit ? std::ldexp(1.0, static_cast<int>(v)) : kInf;
    });
    set.with_sampler([n](Rng& rng) { return PointValue::nat(rng.next_index(n + 1)); });
    return set;
}

}  // namespace

ZooEntry ex1_6_omega() {
    const std::uint64_t limit = 900;
    const Carrier carrier = Carrier::naturals(64, limit);
    DistFn dist = [](const PointValue& a, const PointValue& b) {
        if (a.as_nat() == b.as_nat()) return 0.0;
        return std::ldexp(1.0, static_cast<int>(a.as_nat()));
    };
    ZooEntry entry{"ex1_6", QPSpace("ex1_6", carrier, std::move(dist)),
                   SpaceClass::QuasiMetric, {}, {}, {}, {}};
    entry.notes =
        "naturals with forward cost 2^x between distinct points; one ball of radius 2 around 0 "
        "swallows the whole carrier, while the conjugate escapes every ball";

    BaseSequence::SetAt prefix_at = [limit](std::size_t n) {
        return nat_prefix_set(static_cast<std::uint64_t>(n), limit);
    };
    BaseSequence::InclusionAt prefix_incl = [](std::size_t i, std::size_t j) {
        if (i == j) return Inclusion::Subset;
        return i < j ? Inclusion::StrictSubset : Inclusion::NotSubset;
    };
    entry.bornologies.push_back(
        {"prefixes",
         Bornology("prefixes", BaseSequence("nat-prefixes", prefix_at, prefix_incl)),
         "finite prefixes {0..n}; exactly the sets that stay bounded after symmetrization"});
    entry.bornologies.push_back(
        {"power", power_bornology(entry.space),
         "every subset is forward-bounded: the radius-2 ball at 0 is the whole carrier"});
    return entry;
}

ZooEntry sorgenfrey_rho_s() {
    ZooEntry entry = real_line_entry(
        "sorgenfrey_rho_s", RealMetric::SorgS, SpaceClass::QuasiMetric,
        "forward gap y - x, flat unit cost backward; lower-bounded sets absorb their "
        "neighborhoods");
    entry.bornologies.push_back(
        {"lb", lb_bornology(RealMetric::SorgS, entry.space.carrier()),
         "lower-bounded sets; [B_n]^1 = B_n makes the absorption test pass with delta 1"});
    return entry;
}

ZooEntry sorgenfrey_rho_l() {
    return real_line_entry("sorgenfrey_rho_l", RealMetric::SorgL, SpaceClass::QuasiMetric,
                           "forward gap capped at 1, backward cost 1 + x - y");
}

ZooEntry sorgenfrey_rho_s1() {
    return real_line_entry("sorgenfrey_rho_s1", RealMetric::SorgS1, SpaceClass::QuasiMetric,
                           "both directions bounded: forward min{1, y - x}, backward 1");
}

ZooEntry rho_zero_line() {
    return real_line_entry("rho_zero", RealMetric::RhoZero, SpaceClass::QuasiMetric,
                           "unbounded forward gap y - x with backward cost 1 + x - y");
}

ZooEntry rho_u_line() {
    ZooEntry entry = real_line_entry(
        "rho_u", RealMetric::RhoU, SpaceClass::QuasiPseudometric,
        "one-sided upper gap max{y - x, 0}; vanishes whenever x >= y, so separation fails");
    entry.conjugate_partner = "rho_l";
    entry.symmetrize_partner = "d_n";
    entry.bornologies.push_back({"ub", ub_bornology(RealMetric::RhoU, entry.space.carrier()),
                                 "bounded sets are exactly the upper-bounded ones"});
    return entry;
}

ZooEntry rho_l_line() {
    ZooEntry entry = real_line_entry(
        "rho_l", RealMetric::RhoL, SpaceClass::QuasiPseudometric,
        "one-sided lower gap max{x - y, 0}; the conjugate of the upper gap");
    entry.conjugate_partner = "rho_u";
    entry.symmetrize_partner = "d_n";
    return entry;
}

ZooEntry real_line_dn() {
    ZooEntry entry = real_line_entry("d_n", RealMetric::DN, SpaceClass::Metric,
                                     "the usual line metric |x - y|");
    entry.conjugate_partner = "d_n";
    entry.symmetrize_partner = "d_n";
    entry.bornologies.push_back({"cb", cb_bornology(RealMetric::DN, entry.space.carrier()),
                                 "metrically bounded sets, based by [-n, n]"});
    return entry;
}

ZooEntry real_line_dn1() {
    ZooEntry entry = real_line_entry("d_n_1", RealMetric::DN1, SpaceClass::Metric,
                                     "|x - y| capped at 1; uniformly equivalent to the "
                                     "uncapped metric, and every set is bounded");
    entry.conjugate_partner = "d_n_1";
    entry.symmetrize_partner = "d_n_1";
    return entry;
}

ZooEntry real_line_dplus() {
    ZooEntry entry = real_line_entry(
        "dplus_n", RealMetric::DPlus, SpaceClass::Metric,
        "pullback of |s - t| along the embedding e^t below zero, 1 + t above; equivalent to "
        "|x - y| but not uniformly so, and bounded sets are the upper-bounded ones",
        -700.0, 1.0e4);
    entry.conjugate_partner = "dplus_n";
    entry.symmetrize_partner = "dplus_n";
    entry.bornologies.push_back({"ub", ub_bornology(RealMetric::DPlus, entry.space.carrier()),
                                 "lower rays have finite diameter under the embedding"});
    return entry;
}

ZooEntry real_line_dplus1() {
    ZooEntry entry = real_line_entry("dplus_n_1", RealMetric::DPlus1, SpaceClass::Metric,
                                     "the embedded metric capped at 1", -700.0, 1.0e4);
    entry.conjugate_partner = "dplus_n_1";
    entry.symmetrize_partner = "dplus_n_1";
    return entry;
}

ZooEntry real_line_du() {
    ZooEntry entry = real_line_entry(
        "d_u", RealMetric::DU, SpaceClass::Metric,
        "capped line metric plus the spread of max{., 0}: bounded sets are upper-bounded");
    entry.conjugate_partner = "d_u";
    entry.symmetrize_partner = "d_u";
    entry.bornologies.push_back({"ub", ub_bornology(RealMetric::DU, entry.space.carrier()),
                                 "upper-bounded sets"});
    return entry;
}

ZooEntry hedgehog_space(std::optional<std::uint64_t> spines) {
    const Carrier carrier = Carrier::hedgehog(0.0, 1.0, 0.0, spines);
    DistFn dist = [](const PointValue& a, const PointValue& b) {
        const auto& ha = a.as_hedgehog();
        const auto& hb = b.as_hedgehog();
        if (ha.apex && hb.apex) return 0.0;
        if (ha.apex) return hb.coord;
        if (hb.apex) return ha.coord;
        if (ha.spine == hb.spine) return std::fabs(ha.coord - hb.coord);
        return ha.coord + hb.coord;
    };
    ZooEntry entry{"hedgehog", QPSpace("hedgehog", carrier, std::move(dist)),
                   SpaceClass::Metric, {}, {}, {}, {}};
    entry.notes =
        "unit intervals glued at a common apex, one per spine; every neighborhood of the apex "
        "meets all spines";

    BaseSequence::SetAt at = [](std::size_t n) {
        SetDescriptor set("spines<=" + std::to_string(n), [n](const PointValue& p) {
            const auto& h = p.as_hedgehog();
            return h.apex || h.spine <= n;
        });
        set.with_dist_from([n](const PointValue& p) {
            const auto& h = p.as_hedgehog();
            return (h.apex || h.spine <= n) ? 0.0 : h.coord;
        });
        set.with_dist_to([n](const PointValue& p) {
            const auto& h = p.as_hedgehog();
            return (h.apex || h.spine <= n) ? 0.0 : h.coord;
        });
        set.with_sampler([n](Rng& rng) {
            if (rng.next_bool(0.1)) return PointValue::hedgehog_apex();
            const double coord = std::max(rng.next_unit(), 0x1p-40);
            return PointValue::hedgehog(coord, rng.next_index(n + 1));
        });
        return set;
    };
    BaseSequence::InclusionAt incl = [](std::size_t i, std::size_t j) {
        if (i == j) return Inclusion::Subset;
        return i < j ? Inclusion::StrictSubset : Inclusion::NotSubset;
    };
    entry.bornologies.push_back(
        {"spine-prefixes",
         Bornology("spine-prefixes", BaseSequence("spine-prefixes", at, incl)),
         "sets touching only the first spines; apex neighborhoods leak onto later spines"});
    return entry;
}

namespace {

double circle_residual(double x, double y, std::uint64_t m) {
    const double r = 1.0 / static_cast<double>(m);
    return std::fabs(std::hypot(x - r, y) - r);
}

}  // namespace

ZooEntry hawaiian_earring() {
    const Carrier carrier = Carrier::hawaiian(64);
    DistFn dist = [](const PointValue& a, const PointValue& b) {
        return std::hypot(a.pair_first().as_real() - b.pair_first().as_real(),
                          a.pair_second().as_real() - b.pair_second().as_real());
    };
    ZooEntry entry{"hawaiian", QPSpace("hawaiian", carrier, std::move(dist)),
                   SpaceClass::Metric, {}, {}, {}, {}};
    entry.notes =
        "planar circles through the origin with radii 1/n under the Euclidean metric; every "
        "neighborhood of the origin meets all circles";

    BaseSequence::SetAt at = [](std::size_t n) {
        const std::uint64_t circles = static_cast<std::uint64_t>(n) + 1;
        SetDescriptor set("circles<=" + std::to_string(circles), [circles](const PointValue& p) {
            const double x = p.pair_first().as_real();
            const double y = p.pair_second().as_real();
            for (std::uint64_t m = 1; m <= circles; ++m)
                if (circle_residual(x, y, m) <= Carrier::kOnCircleTol) return true;
            return false;
        });
        auto union_dist = [circles](const PointValue& p) {
            const double x = p.pair_first().as_real();
            const double y = p.pair_second().as_real();
            double best = kInf;
            for (std::uint64_t m = 1; m <= circles; ++m)
                best = std::min(best, circle_residual(x, y, m));
            return best <= Carrier::kOnCircleTol ? 0.0 : best;
        };
        set.with_dist_from(union_dist);
        set.with_dist_to(union_dist);
        set.with_sampler([circles](Rng& rng) {
            const std::uint64_t m = 1 + rng.next_index(circles);
            const double r = 1.0 / static_cast<double>(m);
            double theta;
            if (rng.next_bool(0.5)) {
                const double u = rng.next_unit();
                theta = kPi - 0.5 * u * u * u * u;  // pile samples near the origin
            } else {
                theta = rng.next_real(0.0, 2.0 * kPi);
            }
            return PointValue::plane(r + r * std::cos(theta), r * std::sin(theta));
        });
        return set;
    };
    BaseSequence::InclusionAt incl = [](std::size_t i, std::size_t j) {
        if (i == j) return Inclusion::Subset;
        return i < j ? Inclusion::StrictSubset : Inclusion::NotSubset;
    };
    entry.bornologies.push_back(
        {"circle-prefixes",
         Bornology("circle-prefixes", BaseSequence("circle-prefixes", at, incl)),
         "unions of the first circles; origin neighborhoods leak onto later circles"});
    return entry;
}

namespace {

double dyadic_value(std::uint64_t index) {
    return std::ldexp(1.0, -static_cast<int>(index) - 1);
}

// Even index <=> odd exponent <=> the fast class X2 = {1/2, 1/8, ...};
// odd index <=> the slow class X1 = {1/4, 1/16, ...}.
bool dyadic_fast_class(std::uint64_t index) { return index % 2 == 0; }

}  // namespace

ZooEntry ex8_2_scale() {
    const Carrier carrier = Carrier::dyadic(64);
    DistFn dist = [](const PointValue& a, const PointValue& b) {
        const std::uint64_t i = a.as_nat();
        const std::uint64_t j = b.as_nat();
        if (i == j) return 0.0;
        if (dyadic_fast_class(i) && !dyadic_fast_class(j)) return dyadic_value(j);
        return 1.0;
    };
    ZooEntry entry{"ex8_2", QPSpace("ex8_2", carrier, std::move(dist)),
                   SpaceClass::QuasiMetric, {}, {}, {}, {}};
    entry.notes =
        "two interleaved dyadic scales: hops from the fast class into the slow class cost the "
        "target value, everything else costs 1";
    return entry;
}

ZooEntry ex8_6_scale() {
    const Carrier carrier = Carrier::dyadic(64);
    DistFn dist = [](const PointValue& a, const PointValue& b) {
        const std::uint64_t i = a.as_nat();
        const std::uint64_t j = b.as_nat();
        if (i == j) return 0.0;
        if (dyadic_fast_class(j)) return std::ldexp(1.0, static_cast<int>(j) + 1);
        if (dyadic_fast_class(i)) return dyadic_value(j);
        return 1.0;
    };
    ZooEntry entry{"ex8_6", QPSpace("ex8_6", carrier, std::move(dist)),
                   SpaceClass::QuasiMetric, {}, {}, {}, {}};
    entry.notes =
        "modification of the interleaved scales that blows up distances into the fast class "
        "(cost 1/target) yet agrees with the original below 1";
    return entry;
}

ZooEntry comb_space() {
    const Carrier carrier = Carrier::comb(128);
    DistFn dist = [](const PointValue& a, const PointValue& b) {
        const auto& ca = a.as_comb();
        const auto& cb = b.as_comb();
        if (ca.hand && cb.hand) return std::fabs(ca.x - cb.x);
        if (ca.hand) return std::fabs(ca.x - cb.tooth.value()) + cb.y;
        if (cb.hand) return ca.y + std::fabs(ca.tooth.value() - cb.x);
        if (ca.tooth == cb.tooth) return std::fabs(ca.y - cb.y);
        return ca.y + std::fabs(ca.tooth.value() - cb.tooth.value()) + cb.y;
    };
    ZooEntry entry{"comb", QPSpace("comb", carrier, std::move(dist)), SpaceClass::Metric, {}, {}, {}, {}};
    entry.notes =
        "unit segment with a vertical tooth over every rational; travel runs down the tooth, "
        "along the hand, and up again";
    return entry;
}

const std::vector<ZooEntry>& zoo_catalog() {
    static const std::vector<ZooEntry> catalog = [] {
        std::vector<ZooEntry> entries;
        entries.push_back(ex1_6_omega());
        entries.push_back(sorgenfrey_rho_s());
        entries.push_back(sorgenfrey_rho_l());
        entries.push_back(sorgenfrey_rho_s1());
        entries.push_back(rho_zero_line());
        entries.push_back(rho_u_line());
        entries.push_back(rho_l_line());
        entries.push_back(real_line_dn());
        entries.push_back(real_line_dn1());
        entries.push_back(real_line_dplus());
        entries.push_back(real_line_dplus1());
        entries.push_back(real_line_du());
        entries.push_back(hedgehog_space());
        entries.push_back(hawaiian_earring());
        entries.push_back(ex8_2_scale());
        entries.push_back(ex8_6_scale());
        entries.push_back(comb_space());
        return entries;
    }();
    return catalog;
}

const ZooEntry& zoo_entry(const std::string& id) {
    for (const ZooEntry& entry : zoo_catalog())
        if (entry.id == id) return entry;
    throw ConfigError("unknown catalog space '" + id + "'");
}

bool zoo_has(const std::string& id) {
    for (const ZooEntry& entry : zoo_catalog())
        if (entry.id == id) return true;
    return false;
}

std::vector<std::string> zoo_ids() {
    std::vector<std::string> ids;
    for (const ZooEntry& entry : zoo_catalog()) ids.push_back(entry.id);
    return ids;
}

std::optional<RealMetric> real_metric_of(const std::string& zoo_id) {
    if (zoo_id == "d_n") return RealMetric::DN;
    if (zoo_id == "d_n_1") return RealMetric::DN1;
    if (zoo_id == "dplus_n") return RealMetric::DPlus;
    if (zoo_id == "dplus_n_1") return RealMetric::DPlus1;
    if (zoo_id == "d_u") return RealMetric::DU;
    if (zoo_id == "sorgenfrey_rho_s") return RealMetric::SorgS;
    if (zoo_id == "sorgenfrey_rho_s1") return RealMetric::SorgS1;
    if (zoo_id == "sorgenfrey_rho_l") return RealMetric::SorgL;
    if (zoo_id == "rho_zero") return RealMetric::RhoZero;
    if (zoo_id == "rho_u") return RealMetric::RhoU;
    if (zoo_id == "rho_l") return RealMetric::RhoL;
    return std::nullopt;
}

}  // namespace qmb
