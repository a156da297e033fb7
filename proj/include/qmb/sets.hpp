#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qmb/space.hpp"

namespace qmb {

using PredicateFn = std::function<bool(const PointValue&)>;
using SetDistFn = std::function<double(const PointValue&)>;
using SamplerFn = std::function<PointValue(Rng&)>;

// A subset of a carrier, described by a membership predicate plus
// optional closed-form set distances and a member sampler.  Set
// distances follow argument order: dist_from(x) = inf_{a in A} d(a, x)
// and dist_to(x) = inf_{a in A} d(x, a).
class SetDescriptor {
public:
    SetDescriptor(std::string label, PredicateFn contains)
        : label_(std::move(label)), contains_(std::move(contains)) {}

    static SetDescriptor empty_set(std::string label = "empty") {
        SetDescriptor s(std::move(label), [](const PointValue&) { return false; });
        s.empty_ = true;
        return s;
    }

    SetDescriptor& with_dist_from(SetDistFn f) {
        dist_from_ = std::move(f);
        return *this;
    }
    SetDescriptor& with_dist_to(SetDistFn f) {
        dist_to_ = std::move(f);
        return *this;
    }
    SetDescriptor& with_sampler(SamplerFn f) {
        sampler_ = std::move(f);
        return *this;
    }

    const std::string& label() const { return label_; }
    bool is_empty() const { return empty_; }
    bool contains(const PointValue& p) const { return contains_(p); }
    bool has_dist_from() const { return static_cast<bool>(dist_from_); }
    bool has_dist_to() const { return static_cast<bool>(dist_to_); }
    bool has_sampler() const { return static_cast<bool>(sampler_); }

    double dist_from(const PointValue& x) const { return eval(dist_from_, "dist_from", x); }
    double dist_to(const PointValue& x) const { return eval(dist_to_, "dist_to", x); }

    std::optional<PointValue> sample_member(Rng& rng) const {
        if (!sampler_) return std::nullopt;
        return sampler_(rng);
    }

private:
    double eval(const SetDistFn& f, const char* what, const PointValue& x) const;

    std::string label_;
    PredicateFn contains_;
    SetDistFn dist_from_;
    SetDistFn dist_to_;
    SamplerFn sampler_;
    bool empty_ = false;
};

struct SetDistance {
    double value = 0.0;
    // Exact means a closed-form oracle produced the value; otherwise it
    // is a sampled upper bound on the infimum.
    bool exact = false;
};

struct SampleBudget {
    std::size_t samples = 256;
};

SetDistance set_dist_from(const QPSpace& space, const SetDescriptor& set, const PointValue& x,
                          Rng& rng, const SampleBudget& budget = {});
SetDistance set_dist_to(const QPSpace& space, const SetDescriptor& set, const PointValue& x,
                        Rng& rng, const SampleBudget& budget = {});

enum class Verdict { DefiniteIn, DefiniteOut, Unknown };

const char* verdict_name(Verdict v);

// Membership of x in the delta-neighborhood [A]^delta = {x : d(A, x) < delta}.
// Definite either way when a closed-form dist_from exists; with only a
// sampler, membership can be certified but non-membership cannot.
Verdict neighborhood_contains(const QPSpace& space, const SetDescriptor& set, double delta,
                              const PointValue& x, Rng& rng, const SampleBudget& budget = {});

// Points certified to lie in [A]^delta, produced by perturbing sampled
// members and keeping candidates with a member within distance delta.
std::vector<PointValue> sample_neighborhood(const QPSpace& space, const SetDescriptor& set,
                                            double delta, std::size_t count, Rng& rng);

}  // namespace qmb
