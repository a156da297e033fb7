#include "qmb/bornology.hpp"

#include <algorithm>
#include <cmath>

#include "qmb/errors.hpp"

namespace qmb {

std::optional<std::size_t> Bornology::covering_index(const PointValue& p,
                                                     std::size_t index_budget) const {
    for (std::size_t n = 0; n < index_budget; ++n)
        if (base_.at(n).contains(p)) return n;
    return std::nullopt;
}

Bornology metric_bornology(const QPSpace& space, const PointValue& x0) {
    if (!space.carrier().shape_ok(x0))
        throw CarrierMismatchError("metric_bornology center is not a carrier point");
    const Carrier carrier = space.carrier();
    BaseSequence::SetAt at = [space, x0, carrier](std::size_t n) {
        const double radius = static_cast<double>(n + 1);
        SetDescriptor ball(
            "B(" + x0.str() + ", " + format_real(radius) + ")",
            [space, x0, radius](const PointValue& p) { return space.dist(x0, p) < radius; });
        ball.with_sampler([space, x0, radius, carrier](Rng& rng) {
            for (int tries = 0; tries < 64; ++tries) {
                PointValue candidate = rng.next_bool(0.5)
                                           ? carrier.perturb(x0, radius * rng.next_unit(), rng)
                                           : carrier.sample(rng);
                if (space.dist(x0, candidate) < radius) return candidate;
            }
            return x0;
        });
        return ball;
    };
    BaseSequence::InclusionAt incl = [](std::size_t i, std::size_t j) {
        if (i < j) return Inclusion::Subset;
        if (i == j) return Inclusion::Subset;
        return Inclusion::Unknown;
    };
    return Bornology("bounded(" + space.label() + " @ " + x0.str() + ")",
                     BaseSequence("balls(" + space.label() + ")", std::move(at), std::move(incl)));
}

const char* boundedness_name(Boundedness b) {
    switch (b) {
        case Boundedness::Bounded: return "bounded";
        case Boundedness::Escape: return "escape";
        case Boundedness::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

BoundednessResult is_d_bounded(const QPSpace& space, const SetDescriptor& set,
                               const BoundednessOptions& options) {
    BoundednessResult result;
    std::vector<PointValue> centers = options.centers;
    if (centers.empty()) centers = space.carrier().canonical_points(options.center_count);
    if (centers.empty()) {
        result.note = "no candidate centers";
        return result;
    }
    if (set.is_empty()) {
        result.status = Boundedness::Bounded;
        result.witness = BoundedWitness{centers.front(), 1.0, 0.0};
        result.note = "empty set";
        return result;
    }
    if (!set.has_sampler()) {
        result.note = "set has no member sampler";
        return result;
    }

    Rng rng = substream(options.seed, "bounded:" + set.label());
    std::vector<PointValue> members;
    members.reserve(options.member_samples);
    for (std::size_t i = 0; i < options.member_samples; ++i)
        members.push_back(*set.sample_member(rng));

    bool any_unstable = false;
    for (const PointValue& center : centers) {
        double sup = 0.0;
        double early_sup = 0.0;
        const std::size_t early_cut = (members.size() * 3) / 4;
        std::optional<EscapeRecord> escape;
        for (std::size_t i = 0; i < members.size(); ++i) {
            const double v = space.dist(center, members[i]);
            if (v > sup) sup = v;
            if (i < early_cut && v > early_sup) early_sup = v;
            if (v >= options.max_radius) {
                escape = EscapeRecord{center, members[i], v};
                break;
            }
        }
        if (escape) {
            result.escapes.push_back(*escape);
            continue;
        }
        // A sup still growing markedly deep into the stream suggests an
        // escape the radius cap has not caught; refuse to call the set
        // bounded from this center.
        if (sup > early_sup * 1.05 + 1e-6) {
            any_unstable = true;
            continue;
        }
        double radius = 1.0;
        while (radius <= sup) radius *= 2.0;
        result.status = Boundedness::Bounded;
        result.witness = BoundedWitness{center, radius, sup};
        return result;
    }

    if (!any_unstable && result.escapes.size() == centers.size()) {
        result.status = Boundedness::Escape;
        return result;
    }
    result.status = Boundedness::Inconclusive;
    result.note = any_unstable ? "sampled sup did not settle" : "centers partially defeated";
    return result;
}

namespace {

bool strictly_larger(const BaseSequence& base, std::size_t i, std::size_t j,
                     std::size_t samples, Rng& rng) {
    const Inclusion known = base.inclusion(i, j);
    if (known == Inclusion::StrictSubset) return true;
    if (known == Inclusion::Subset || known == Inclusion::NotSubset) return false;
    // Monotonicity gives at(i) <= at(j); certify strictness by exhibiting
    // a member of at(j) outside at(i).
    const SetDescriptor larger = base.at(j);
    const SetDescriptor smaller = base.at(i);
    if (!larger.has_sampler()) return false;
    for (std::size_t k = 0; k < samples; ++k) {
        const PointValue m = *larger.sample_member(rng);
        if (!smaller.contains(m)) return true;
    }
    return false;
}

}  // namespace

RefinedBase refine_base(const BaseSequence& input, const RefineOptions& options) {
    Rng rng = substream(options.seed, "refine:" + input.label());
    std::vector<std::size_t> selected{0};
    for (std::size_t m = 0; m + 1 < options.prefix_length; ++m) {
        // A_m = C_{selected[m]}, so A_m union C_{m+1} = C_{union_idx}.
        const std::size_t union_idx = std::max(selected[m], m + 1);
        std::optional<std::size_t> next;
        for (std::size_t n = union_idx + 1; n <= options.max_index; ++n) {
            if (strictly_larger(input, union_idx, n, options.strictness_samples, rng)) {
                next = n;
                break;
            }
        }
        if (!next)
            throw BaseRefinementError(
                "no member of '" + input.label() + "' strictly contains index " +
                std::to_string(union_idx) + " within budget " +
                std::to_string(options.max_index) +
                " (maximal set or budget too small)");
        selected.push_back(*next);
    }

    BaseSequence::SetAt at = [input, selected](std::size_t m) {
        if (m >= selected.size())
            throw BaseRefinementError("refined base computed only " +
                                      std::to_string(selected.size()) + " sets");
        return input.at(selected[m]);
    };
    BaseSequence::InclusionAt incl = [input, selected](std::size_t i, std::size_t j) {
        if (i >= selected.size() || j >= selected.size()) return Inclusion::Unknown;
        if (i < j) return Inclusion::StrictSubset;
        return input.inclusion(selected[i], selected[j]);
    };
    return RefinedBase{
        BaseSequence("refined(" + input.label() + ")", std::move(at), std::move(incl)),
        selected};
}

namespace {

// True when every certified point of [candidate_base]^delta lies in the
// target set; the refuting point (if any) is written to out_witness.
bool absorbed(const QPSpace& space, const SetDescriptor& from, const SetDescriptor& into,
              double delta, std::size_t candidates, Rng& rng, PointValue* out_witness,
              PointValue* out_member, double* out_dist) {
    const Carrier& carrier = space.carrier();
    std::size_t produced = 0;
    std::size_t attempts = 0;
    const std::size_t max_attempts = candidates * 8 + 64;
    while (produced < candidates && attempts++ < max_attempts) {
        std::optional<PointValue> member = from.sample_member(rng);
        if (!member) break;
        PointValue candidate = *member;
        double cert = 0.0;
        if (!rng.next_bool(0.25)) {
            candidate = carrier.perturb(*member, delta * rng.next_unit(), rng);
            cert = space.dist(*member, candidate);
            if (!(cert < delta)) continue;
        }
        ++produced;
        if (!into.contains(candidate)) {
            if (out_witness) *out_witness = candidate;
            if (out_member) *out_member = *member;
            if (out_dist) *out_dist = cert;
            return false;
        }
    }
    return true;
}

}  // namespace

RefinedBase refine_base_uniform(const QPSpace& space, const BaseSequence& input, double delta,
                                const UniformRefineOptions& options) {
    if (!(delta > 0.0)) throw ConfigError("uniform refinement needs delta > 0");
    Rng rng = substream(options.seed, "refine-uniform:" + input.label());
    std::vector<std::size_t> selected{0};
    for (std::size_t m = 0; m + 1 < options.prefix_length; ++m) {
        const std::size_t current = selected[m];
        std::optional<std::size_t> next;
        for (std::size_t n = current + 1; n <= options.max_index; ++n) {
            if (absorbed(space, input.at(current), input.at(n), delta,
                         options.candidates_per_set, rng, nullptr, nullptr, nullptr)) {
                next = n;
                break;
            }
        }
        if (!next)
            throw BaseRefinementError("no member of '" + input.label() + "' absorbs [" +
                                      input.at(current).label() + "]^" + format_real(delta) +
                                      " within budget " + std::to_string(options.max_index));
        selected.push_back(*next);
    }

    BaseSequence::SetAt at = [input, selected](std::size_t m) {
        if (m >= selected.size())
            throw BaseRefinementError("uniformly refined base computed only " +
                                      std::to_string(selected.size()) + " sets");
        return input.at(selected[m]);
    };
    return RefinedBase{BaseSequence("uniform-refined(" + input.label() + ")", std::move(at)),
                       selected};
}

PropernessResult properness_check(const QPSpace& space, const Bornology& bornology,
                                  const PropernessOptions& options) {
    std::vector<double> grid = options.delta_grid;
    if (grid.empty())
        for (int k = 0; k <= 8; ++k) grid.push_back(std::ldexp(1.0, -k));
    std::sort(grid.begin(), grid.end(), std::greater<double>());

    PropernessResult result;
    result.pass = true;
    Rng rng = substream(options.seed, "properness:" + bornology.label());
    for (std::size_t n = 0; n < options.index_count; ++n) {
        const SetDescriptor current = bornology.base().at(n);
        const SetDescriptor next = bornology.base().at(n + 1);
        std::optional<double> accepted;
        PointValue witness = PointValue::nat(0);
        PointValue member = PointValue::nat(0);
        double member_dist = 0.0;
        for (double delta : grid) {
            if (absorbed(space, current, next, delta, options.candidates_per_set, rng,
                         &witness, &member, &member_dist)) {
                accepted = delta;
                break;
            }
        }
        ++result.indices_checked;
        if (accepted) {
            result.delta_for.push_back(*accepted);
            continue;
        }
        result.pass = false;
        result.failure =
            PropernessFailure{n, grid.back(), witness, member, member_dist};
        break;
    }
    return result;
}

}  // namespace qmb
