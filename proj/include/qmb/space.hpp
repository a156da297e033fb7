#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qmb/carrier.hpp"
#include "qmb/point.hpp"
#include "qmb/rng.hpp"

namespace qmb {

using DistFn = std::function<double(const PointValue&, const PointValue&)>;

// A carrier plus a distance function d : X x X -> [0, inf).  Nothing is
// assumed about d beyond non-negativity and finiteness, which dist()
// enforces; the axiom checker below probes everything else.
class QPSpace {
public:
    QPSpace(std::string label, Carrier carrier, DistFn dist);

    const std::string& label() const { return label_; }
    const Carrier& carrier() const { return carrier_; }

    // Guarded evaluation: throws CarrierMismatchError for foreign points
    // and ContractViolationError for NaN, infinite, or negative results.
    double dist(const PointValue& x, const PointValue& y) const;

    // Same guards except negative values are returned, so the axiom
    // checker can cite them as witnesses instead of aborting.
    double dist_signed(const PointValue& x, const PointValue& y) const;

private:
    std::string label_;
    Carrier carrier_;
    DistFn dist_;
};

QPSpace conjugate(const QPSpace& space);
QPSpace symmetrize(const QPSpace& space);
QPSpace truncate(const QPSpace& space, double cap);

// Membership in the open ball B_d(center, radius).
bool ball_contains(const QPSpace& space, const PointValue& center, double radius,
                   const PointValue& y);

struct ValueWitness {
    PointValue x;
    PointValue y;
    double value = 0.0;
};

struct TriangleWitness {
    PointValue x;
    PointValue y;
    PointValue z;
    double d_xy = 0.0;
    double d_xz = 0.0;
    double d_zy = 0.0;
    double defect() const { return d_xy - (d_xz + d_zy); }
};

struct AxiomCheckOptions {
    std::size_t samples = 2000;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    bool require_separation = false;
    std::size_t max_witnesses = 4;
    std::vector<double> perturb_scales{1.0, 0.25, 0x1p-6, 0x1p-12};
};

struct AxiomReport {
    std::size_t triples_checked = 0;
    std::size_t distances_evaluated = 0;
    std::vector<ValueWitness> reflexivity_failures;
    std::vector<TriangleWitness> triangle_failures;
    std::vector<ValueWitness> separation_failures;
    std::vector<ValueWitness> negativity_failures;

    bool pass() const {
        return reflexivity_failures.empty() && triangle_failures.empty() &&
               separation_failures.empty() && negativity_failures.empty();
    }
};

// Samples triples (independent and perturbation-correlated, canonical
// points mixed in) and records witnesses for reflexivity, triangle,
// negativity, and optionally separation violations.
AxiomReport check_axioms(const QPSpace& space, const AxiomCheckOptions& options = {});

}  // namespace qmb
