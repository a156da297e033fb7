#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qmb/sets.hpp"
#include "qmb/space.hpp"

namespace qmb {

enum class Inclusion { Subset, StrictSubset, NotSubset, Unknown };

// Countable monotone base A_0 <= A_1 <= ... of a bornology, presented as
// an index -> set function.  An optional inclusion oracle answers
// questions the sets' predicates cannot (strictness in particular);
// without it, strictness falls back to a sampled witness search.
class BaseSequence {
public:
    using SetAt = std::function<SetDescriptor(std::size_t)>;
    using InclusionAt = std::function<Inclusion(std::size_t, std::size_t)>;

    BaseSequence(std::string label, SetAt at, InclusionAt inclusion = nullptr)
        : label_(std::move(label)), at_(std::move(at)), inclusion_(std::move(inclusion)) {}

    const std::string& label() const { return label_; }
    SetDescriptor at(std::size_t n) const { return at_(n); }
    Inclusion inclusion(std::size_t i, std::size_t j) const {
        return inclusion_ ? inclusion_(i, j) : Inclusion::Unknown;
    }
    bool has_inclusion_oracle() const { return static_cast<bool>(inclusion_); }

private:
    std::string label_;
    SetAt at_;
    InclusionAt inclusion_;
};

class Bornology {
public:
    Bornology(std::string label, BaseSequence base)
        : label_(std::move(label)), base_(std::move(base)) {}

    const std::string& label() const { return label_; }
    const BaseSequence& base() const { return base_; }

    // Smallest base index whose set contains p, scanning up to the budget.
    std::optional<std::size_t> covering_index(const PointValue& p,
                                              std::size_t index_budget = 64) const;

private:
    std::string label_;
    BaseSequence base_;
};

// Bornology of d-bounded sets, based by the balls B_d(x0, n+1).
Bornology metric_bornology(const QPSpace& space, const PointValue& x0);

enum class Boundedness { Bounded, Escape, Inconclusive };

const char* boundedness_name(Boundedness b);

struct BoundedWitness {
    PointValue center;
    double radius = 0.0;
    double sampled_sup = 0.0;
};

struct EscapeRecord {
    PointValue center;
    PointValue member;
    double distance = 0.0;
};

struct BoundednessOptions {
    std::size_t member_samples = 512;
    double max_radius = 0x1p12;
    std::vector<PointValue> centers;  // empty: canonical carrier points
    std::size_t center_count = 8;
    std::uint64_t seed = 0;
};

struct BoundednessResult {
    Boundedness status = Boundedness::Inconclusive;
    std::optional<BoundedWitness> witness;
    std::vector<EscapeRecord> escapes;
    std::string note;
};

// Searches for a ball containing the sampled members of the set.  A
// center is "defeated" when some member sits at distance >= max_radius
// from it; all centers defeated reads as an escape (unboundedness
// evidence), an unstable sampled sup reads as inconclusive.
BoundednessResult is_d_bounded(const QPSpace& space, const SetDescriptor& set,
                               const BoundednessOptions& options = {});

struct RefineOptions {
    std::size_t max_index = 512;
    std::size_t prefix_length = 16;
    std::size_t strictness_samples = 32;
    std::uint64_t seed = 0;
};

struct RefinedBase {
    BaseSequence base;
    std::vector<std::size_t> selected;  // input indices chosen per output slot
};

// Strictly increasing refinement: A_0 = C_0 and A_{m+1} is the first C_n
// strictly containing A_m union C_{m+1}.  Throws BaseRefinementError when
// no strictly larger member exists within max_index (maximal set or
// exhausted budget; a finite search cannot tell these apart).
RefinedBase refine_base(const BaseSequence& input, const RefineOptions& options = {});

struct UniformRefineOptions {
    std::size_t max_index = 128;
    std::size_t prefix_length = 8;
    std::size_t candidates_per_set = 160;
    std::uint64_t seed = 0;
};

// Greedy subsequence B_m of the input with [B_m]^delta contained in
// B_{m+1}, certified against sampled neighborhood points.
RefinedBase refine_base_uniform(const QPSpace& space, const BaseSequence& input, double delta,
                                const UniformRefineOptions& options = {});

struct PropernessOptions {
    std::vector<double> delta_grid;  // descending; default 2^0 .. 2^-8
    std::size_t index_count = 8;
    std::size_t candidates_per_set = 160;
    std::uint64_t seed = 0;
};

struct PropernessFailure {
    std::size_t index = 0;       // n with [B_n]^delta not inside B_{n+1} for any grid delta
    double delta = 0.0;          // smallest grid delta, at which the witness was found
    PointValue witness;          // certified in [B_n]^delta, outside B_{n+1}
    PointValue member;           // the base-set member certifying the witness
    double member_dist = 0.0;    // d(member, witness) < delta
};

struct PropernessResult {
    bool pass = false;
    std::vector<double> delta_for;  // per checked index: accepted delta
    std::optional<PropernessFailure> failure;
    std::size_t indices_checked = 0;
};

// Absorption test: for each n, find a grid delta with [B_n]^delta inside
// B_{n+1}.  A certified neighborhood point escaping B_{n+1} at the
// smallest grid delta defeats every larger delta too and is reported as
// the counterexample.
PropernessResult properness_check(const QPSpace& space, const Bornology& bornology,
                                  const PropernessOptions& options = {});

}  // namespace qmb
