#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qmb/bornology.hpp"
#include "qmb/sets.hpp"
#include "qmb/space.hpp"

namespace qmb {

// Non-negative real-valued function on a carrier, the raw material both
// distance modifications below consume.  Evaluation is guarded the same
// way distances are: NaN, infinities, and negative values throw.
class CharFunction {
public:
    using EvalFn = std::function<double(const PointValue&)>;

    CharFunction(std::string label, EvalFn eval)
        : label_(std::move(label)), eval_(std::move(eval)) {}

    const std::string& label() const { return label_; }
    double operator()(const PointValue& x) const;

private:
    std::string label_;
    EvalFn eval_;
};

// f(x) = d(x0, x).
CharFunction forcing_from_point(const QPSpace& space, const PointValue& x0);

// rho(x, y) = d(x, y) + max{f(y) - f(x), 0}.  Feed a truncated distance
// when a bounded base distance is wanted.
QPSpace quasimetric_from_char(const QPSpace& space, const CharFunction& f);

struct SymmetryCheckOptions {
    std::size_t samples = 64;
    std::uint64_t seed = 0;
};

// rho(x, y) = d(x, y) + |f(y) - f(x)|; refuses asymmetric d (sampled
// precheck, AsymmetryError).
QPSpace metric_from_char(const QPSpace& space, const CharFunction& f,
                         const SymmetryCheckOptions& options = {});

// d_g(x, y) = min{d(x, y), 1} + max{g(y) - g(x), 0}.
QPSpace dg_from_char(const QPSpace& space, const CharFunction& g);

// Oracles for one band of the layered characteristic function: the
// closure of A_n (with closed-form dist_from) and the complement of the
// interior of A_{n+1} (with closed-form dist_to; its complement is the
// membership test for "inside interior").
struct PsiBandOracles {
    SetDescriptor closure;
    SetDescriptor outer_complement;
};

using PsiOracleFn = std::function<PsiBandOracles(std::size_t)>;

struct PsiOptions {
    std::size_t band_budget = 64;
};

// psi(x) = n + f_n(x) / (f_n(x) + g_n(x)) on the band between interiors,
// with f_n the distance from cl A_n and g_n the distance to the outer
// complement; psi = 1 on the innermost band.  Unbounded on the carrier,
// bounded on every A_n.
CharFunction psi_from_base(const QPSpace& space, PsiOracleFn oracles,
                           const PsiOptions& options = {});

struct ChiOptions {
    std::size_t band_budget = 16384;
    bool validate = true;
    std::size_t validate_indices = 8;
    std::size_t validate_candidates = 128;
    std::uint64_t seed = 0;
};

// Staircase function chi built from a base with base.at(0) empty and
// [B_n]^delta inside B_{n+1}; Lipschitz with constant 2/delta in the
// asymmetric sense chi(y) - chi(x) <= (2/delta) d(x, y).
class ChiConstruction {
public:
    ChiConstruction(QPSpace space, BaseSequence base, double delta, std::size_t band_budget);

    const QPSpace& space() const { return space_; }
    const BaseSequence& base() const { return base_; }
    double delta() const { return delta_; }

    // Smallest n with x in base.at(n); always >= 1 since base.at(0) is
    // empty.  BandAssignmentError past budget.
    std::size_t band(const PointValue& x) const;
    // phi_0 = 1; phi_n(x) = min{1, d(base.at(n), x) / delta}.
    double phi(std::size_t n, const PointValue& x) const;
    // chi(x) = n - 2 + phi_{n-1}(x) for x in base.at(n) \ base.at(n-1);
    // in particular chi = 0 on base.at(1).
    double chi(const PointValue& x) const;
    CharFunction chi_function() const;

private:
    QPSpace space_;
    BaseSequence base_;
    double delta_;
    std::size_t band_budget_;
};

ChiConstruction chi_from_base(const QPSpace& space, const BaseSequence& base, double delta,
                              const ChiOptions& options = {});

// rho(x, y) = max{min{d(x, y), 1}, (delta/2) max{chi(y) - chi(x), 0}}:
// a bounded distance that keeps every base set bounded and agrees with d
// below min{1, delta}.
QPSpace rho_from_chi(const ChiConstruction& construction);

struct UniformCheckOptions {
    std::vector<double> eps_grid;    // default 2^0 .. 2^-12, descending
    std::vector<double> delta_grid;  // default 2^0 .. 2^-12, descending
    std::size_t samples = 2000;
    std::uint64_t seed = 0;
};

struct EpsDeltaRow {
    double eps = 0.0;
    double delta = 0.0;  // largest grid delta accepted for this eps
};

struct UniformContinuityWitness {
    PointValue x;
    PointValue y;
    double dist = 0.0;
    double f_diff = 0.0;
    double eps = 0.0;
};

struct UniformContinuityResult {
    bool pass = false;
    std::vector<EpsDeltaRow> table;
    std::optional<UniformContinuityWitness> witness;
};

// (d, rho_u)-uniform continuity of f: for every eps some delta with
// d(x, y) < delta implying f(y) - f(x) < eps, tested on a sampled pool.
UniformContinuityResult uniform_continuity_check(const QPSpace& space, const CharFunction& f,
                                                 const UniformCheckOptions& options = {});

struct EquivalenceWitness {
    int direction = 0;  // 0: first->second failed, 1: second->first
    double eps = 0.0;
    PointValue x;
    PointValue y;
    double d_source = 0.0;
    double d_target = 0.0;
};

struct UniformEquivalenceResult {
    bool pass = false;
    std::vector<EpsDeltaRow> forward;
    std::vector<EpsDeltaRow> backward;
    std::optional<EquivalenceWitness> witness;
};

UniformEquivalenceResult uniform_equivalence_check(const QPSpace& first, const QPSpace& second,
                                                   const UniformCheckOptions& options = {});

struct LocalAgreementWitness {
    PointValue x;
    PointValue y;
    double d = 0.0;
    double rho = 0.0;
};

struct LocallyIdenticalResult {
    bool pass = false;
    double delta = 0.0;  // largest grid delta below which rho == d held
    UniformEquivalenceResult equivalence;
    std::optional<LocalAgreementWitness> witness;
};

// Uniform equivalence plus exact agreement rho = d on sampled pairs with
// d below some grid delta.
LocallyIdenticalResult locally_identical_check(const QPSpace& d_space, const QPSpace& rho_space,
                                               const UniformCheckOptions& options = {});

// [A]^r widening of every member of a family, with sampler and (when the
// input has closed-form dist_from) an exact membership predicate.
BaseSequence widen_base(const QPSpace& space, const BaseSequence& family, double r);

// Widen by delta/2, then greedily select a subsequence whose delta/2
// neighborhoods are absorbed by the successor.
RefinedBase cb_uniform_base(const QPSpace& space, const BaseSequence& family, double delta,
                            const UniformRefineOptions& options = {});

// Deterministic pool of test pairs: canonical cross pairs first, then a
// mix of independent samples and perturbations at the given scales.
std::vector<std::pair<PointValue, PointValue>> sample_pairs(const Carrier& carrier,
                                                            std::size_t count,
                                                            const std::vector<double>& scales,
                                                            Rng& rng);

std::vector<double> default_dyadic_grid();

}  // namespace qmb
