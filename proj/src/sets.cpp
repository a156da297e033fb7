#include "qmb/sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qmb/errors.hpp"

namespace qmb {

double SetDescriptor::eval(const SetDistFn& f, const char* what, const PointValue& x) const {
    if (!f) throw Error("set '" + label_ + "' has no closed-form " + what);
    const double v = f(x);
    if (std::isnan(v) || std::isinf(v) || v < 0.0)
        throw ContractViolationError("set '" + label_ + "' " + what + "(" + x.str() +
                                     ") = " + format_real(v));
    return v;
}

namespace {

enum class Direction { From, To };

SetDistance sampled_bound(const QPSpace& space, const SetDescriptor& set, const PointValue& x,
                          Direction dir, Rng& rng, const SampleBudget& budget) {
    if (!set.has_sampler())
        throw Error("set '" + set.label() + "' has neither a closed form nor a sampler");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < budget.samples; ++i) {
        const PointValue a = *set.sample_member(rng);
        const double v =
            dir == Direction::From ? space.dist(a, x) : space.dist(x, a);
        best = std::min(best, v);
        if (best == 0.0) break;
    }
    return SetDistance{best, false};
}

}  // namespace

SetDistance set_dist_from(const QPSpace& space, const SetDescriptor& set, const PointValue& x,
                          Rng& rng, const SampleBudget& budget) {
    if (set.is_empty())
        throw EmptySetError("set distance from empty set '" + set.label() + "'");
    if (set.contains(x)) return SetDistance{0.0, true};
    if (set.has_dist_from()) return SetDistance{set.dist_from(x), true};
    return sampled_bound(space, set, x, Direction::From, rng, budget);
}

SetDistance set_dist_to(const QPSpace& space, const SetDescriptor& set, const PointValue& x,
                        Rng& rng, const SampleBudget& budget) {
    if (set.is_empty())
        throw EmptySetError("set distance to empty set '" + set.label() + "'");
    if (set.contains(x)) return SetDistance{0.0, true};
    if (set.has_dist_to()) return SetDistance{set.dist_to(x), true};
    return sampled_bound(space, set, x, Direction::To, rng, budget);
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::DefiniteIn: return "in";
        case Verdict::DefiniteOut: return "out";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

Verdict neighborhood_contains(const QPSpace& space, const SetDescriptor& set, double delta,
                              const PointValue& x, Rng& rng, const SampleBudget& budget) {
    if (!(delta > 0.0)) throw ConfigError("neighborhood radius must be positive");
    if (set.is_empty()) return Verdict::DefiniteOut;
    if (set.contains(x)) return Verdict::DefiniteIn;
    if (set.has_dist_from())
        return set.dist_from(x) < delta ? Verdict::DefiniteIn : Verdict::DefiniteOut;
    const SetDistance bound = sampled_bound(space, set, x, Direction::From, rng, budget);
    return bound.value < delta ? Verdict::DefiniteIn : Verdict::Unknown;
}

std::vector<PointValue> sample_neighborhood(const QPSpace& space, const SetDescriptor& set,
                                            double delta, std::size_t count, Rng& rng) {
    if (!(delta > 0.0)) throw ConfigError("neighborhood radius must be positive");
    std::vector<PointValue> out;
    if (set.is_empty()) return out;
    const Carrier& carrier = space.carrier();
    std::size_t attempts = 0;
    const std::size_t max_attempts = count * 8 + 64;
    while (out.size() < count && attempts++ < max_attempts) {
        std::optional<PointValue> member = set.sample_member(rng);
        if (!member) break;
        if (rng.next_bool(0.25)) {
            out.push_back(*member);
            continue;
        }
        const PointValue candidate =
            carrier.perturb(*member, delta * rng.next_unit(), rng);
        // d(A, candidate) <= d(member, candidate) < delta certifies it.
        if (space.dist(*member, candidate) < delta) out.push_back(candidate);
    }
    return out;
}

}  // namespace qmb
