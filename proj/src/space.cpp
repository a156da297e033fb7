#include "qmb/space.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "qmb/errors.hpp"

namespace qmb {

QPSpace::QPSpace(std::string label, Carrier carrier, DistFn dist)
    : label_(std::move(label)), carrier_(std::move(carrier)), dist_(std::move(dist)) {
    if (!dist_) throw ConfigError("space '" + label_ + "' has no distance function");
}

double QPSpace::dist_signed(const PointValue& x, const PointValue& y) const {
    if (!carrier_.shape_ok(x) || !carrier_.shape_ok(y))
        throw CarrierMismatchError("space '" + label_ + "' cannot evaluate d(" + x.str() +
                                   ", " + y.str() + ")");
    const double v = dist_(x, y);
    if (std::isnan(v) || std::isinf(v))
        throw ContractViolationError("space '" + label_ + "': d(" + x.str() + ", " + y.str() +
                                     ") = " + format_real(v));
    return v;
}

double QPSpace::dist(const PointValue& x, const PointValue& y) const {
    const double v = dist_signed(x, y);
    if (v < 0.0)
        throw ContractViolationError("space '" + label_ + "': d(" + x.str() + ", " + y.str() +
                                     ") = " + format_real(v) + " is negative");
    return v;
}

QPSpace conjugate(const QPSpace& space) {
    DistFn inner = [space](const PointValue& x, const PointValue& y) {
        return space.dist_signed(y, x);
    };
    return QPSpace("conj(" + space.label() + ")", space.carrier(), std::move(inner));
}

QPSpace symmetrize(const QPSpace& space) {
    DistFn inner = [space](const PointValue& x, const PointValue& y) {
        return std::max(space.dist_signed(x, y), space.dist_signed(y, x));
    };
    return QPSpace("sym(" + space.label() + ")", space.carrier(), std::move(inner));
}

QPSpace truncate(const QPSpace& space, double cap) {
    if (!(cap > 0.0) || std::isinf(cap))
        throw ConfigError("truncation cap must be positive and finite");
    DistFn inner = [space, cap](const PointValue& x, const PointValue& y) {
        return std::min(space.dist_signed(x, y), cap);
    };
    return QPSpace("trunc(" + space.label() + ", " + format_real(cap) + ")", space.carrier(),
                   std::move(inner));
}

bool ball_contains(const QPSpace& space, const PointValue& center, double radius,
                   const PointValue& y) {
    return space.dist(center, y) < radius;
}

namespace {

template <class W>
void push_witness(std::vector<W>& list, W witness, std::size_t max_witnesses) {
    if (list.size() < max_witnesses) list.push_back(std::move(witness));
}

}  // namespace

AxiomReport check_axioms(const QPSpace& space, const AxiomCheckOptions& options) {
    AxiomReport report;
    Rng rng = substream(options.seed, "axioms:" + space.label());
    const Carrier& carrier = space.carrier();
    const std::vector<PointValue> canonical = carrier.canonical_points();
    const auto& scales = options.perturb_scales;

    auto correlated = [&](const PointValue& base) {
        const double scale = scales.empty() ? 1.0 : scales[rng.next_index(scales.size())];
        return carrier.perturb(base, scale, rng);
    };
    auto record_pair = [&](const PointValue& a, const PointValue& b) {
        const double v = space.dist_signed(a, b);
        ++report.distances_evaluated;
        if (v < 0.0)
            push_witness(report.negativity_failures, ValueWitness{a, b, v},
                         options.max_witnesses);
        if (options.require_separation && v == 0.0 && !(a == b))
            push_witness(report.separation_failures, ValueWitness{a, b, v},
                         options.max_witnesses);
        return v;
    };

    for (std::size_t i = 0; i < options.samples; ++i) {
        PointValue x = (i < canonical.size()) ? canonical[i] : carrier.sample(rng);
        PointValue y = rng.next_bool() ? carrier.sample(rng) : correlated(x);
        PointValue z = rng.next_bool() ? carrier.sample(rng)
                                       : correlated(rng.next_bool() ? x : y);

        const double d_xx = space.dist_signed(x, x);
        ++report.distances_evaluated;
        if (d_xx != 0.0)
            push_witness(report.reflexivity_failures, ValueWitness{x, x, d_xx},
                         options.max_witnesses);

        const double d_xy = record_pair(x, y);
        const double d_xz = record_pair(x, z);
        const double d_zy = record_pair(z, y);
        record_pair(y, x);
        record_pair(z, x);
        record_pair(y, z);

        if (d_xy > d_xz + d_zy + options.tol)
            push_witness(report.triangle_failures, TriangleWitness{x, y, z, d_xy, d_xz, d_zy},
                         options.max_witnesses);
        ++report.triples_checked;
    }
    return report;
}

}  // namespace qmb
