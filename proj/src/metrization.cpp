#include "qmb/metrization.hpp"

#include <algorithm>
#include <cmath>

#include "qmb/errors.hpp"

namespace qmb {

double CharFunction::operator()(const PointValue& x) const {
    const double v = eval_(x);
    if (std::isnan(v) || std::isinf(v) || v < 0.0)
        throw ContractViolationError("char function '" + label_ + "'(" + x.str() +
                                     ") = " + format_real(v));
    return v;
}

CharFunction forcing_from_point(const QPSpace& space, const PointValue& x0) {
    if (!space.carrier().shape_ok(x0))
        throw CarrierMismatchError("forcing center is not a carrier point");
    return CharFunction("d(" + x0.str() + ", .)",
                        [space, x0](const PointValue& x) { return space.dist(x0, x); });
}

QPSpace quasimetric_from_char(const QPSpace& space, const CharFunction& f) {
    DistFn inner = [space, f](const PointValue& x, const PointValue& y) {
        return space.dist_signed(x, y) + std::max(f(y) - f(x), 0.0);
    };
    return QPSpace(space.label() + " + relu(" + f.label() + ")", space.carrier(),
                   std::move(inner));
}

QPSpace metric_from_char(const QPSpace& space, const CharFunction& f,
                         const SymmetryCheckOptions& options) {
    Rng rng = substream(options.seed, "symcheck:" + space.label());
    for (std::size_t i = 0; i < options.samples; ++i) {
        const PointValue x = space.carrier().sample(rng);
        const PointValue y = space.carrier().sample(rng);
        const double fwd = space.dist(x, y);
        const double bwd = space.dist(y, x);
        if (fwd != bwd)
            throw AsymmetryError("metric_from_char needs a symmetric base distance; d(" +
                                 x.str() + ", " + y.str() + ") = " + format_real(fwd) +
                                 " but d(" + y.str() + ", " + x.str() + ") = " +
                                 format_real(bwd));
    }
    DistFn inner = [space, f](const PointValue& x, const PointValue& y) {
        return space.dist_signed(x, y) + std::fabs(f(y) - f(x));
    };
    return QPSpace(space.label() + " + abs(" + f.label() + ")", space.carrier(),
                   std::move(inner));
}

QPSpace dg_from_char(const QPSpace& space, const CharFunction& g) {
    DistFn inner = [space, g](const PointValue& x, const PointValue& y) {
        return std::min(space.dist_signed(x, y), 1.0) + std::max(g(y) - g(x), 0.0);
    };
    return QPSpace("trunc(" + space.label() + ", 1) + relu(" + g.label() + ")",
                   space.carrier(), std::move(inner));
}

CharFunction psi_from_base(const QPSpace&, PsiOracleFn oracles, const PsiOptions& options) {
    const std::size_t budget = options.band_budget;
    auto eval = [oracles, budget](const PointValue& x) -> double {
        for (std::size_t n = 0; n < budget; ++n) {
            const PsiBandOracles band = oracles(n);
            if (band.outer_complement.contains(x)) continue;
            if (n == 0) return 1.0;
            const double f = band.closure.dist_from(x);
            const double g = band.outer_complement.dist_to(x);
            if (!(f + g > 0.0))
                throw ZeroDenominatorError("band " + std::to_string(n) + " at " + x.str() +
                                           ": f + g = " + format_real(f + g));
            return static_cast<double>(n) + f / (f + g);
        }
        throw BandAssignmentError("no band within budget " + std::to_string(budget) +
                                  " holds " + x.str());
    };
    return CharFunction("psi", std::move(eval));
}

ChiConstruction::ChiConstruction(QPSpace space, BaseSequence base, double delta,
                                 std::size_t band_budget)
    : space_(std::move(space)),
      base_(std::move(base)),
      delta_(delta),
      band_budget_(band_budget) {
    if (!(delta_ > 0.0)) throw ConfigError("chi construction needs delta > 0");
    if (!base_.at(0).is_empty())
        throw ConfigError("chi construction needs an empty base.at(0); got '" +
                          base_.at(0).label() + "'");
}

std::size_t ChiConstruction::band(const PointValue& x) const {
    // Monotone base: membership is upward closed in the index, so gallop
    // to a containing index and bisect for the smallest one.  Invariant:
    // at(lo - 1) does not contain x (or lo == 0), at(hi - 1) does.
    std::size_t lo = 0;
    std::size_t hi = 1;
    while (true) {
        if (hi > band_budget_) {
            hi = band_budget_;
            if (lo >= hi || !base_.at(hi - 1).contains(x))
                throw BandAssignmentError("no base set within budget " +
                                          std::to_string(band_budget_) + " holds " + x.str());
            break;
        }
        if (base_.at(hi - 1).contains(x)) break;
        lo = hi;
        hi *= 2;
    }
    while (lo < hi - 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (base_.at(mid - 1).contains(x))
            hi = mid;
        else
            lo = mid;
    }
    return hi - 1;
}

double ChiConstruction::phi(std::size_t n, const PointValue& x) const {
    if (n == 0) return 1.0;
    const SetDescriptor from = base_.at(n);
    double d;
    if (from.contains(x)) {
        d = 0.0;
    } else if (from.has_dist_from()) {
        d = from.dist_from(x);
    } else {
        Rng rng = substream(hash_label(base_.label()), "phi:" + std::to_string(n));
        d = set_dist_from(space_, from, x, rng).value;
    }
    return std::min(1.0, d / delta_);
}

double ChiConstruction::chi(const PointValue& x) const {
    const std::size_t n = band(x);
    if (n == 1) return 0.0;
    return static_cast<double>(n - 2) + phi(n - 1, x);
}

CharFunction ChiConstruction::chi_function() const {
    ChiConstruction self = *this;
    return CharFunction("chi(" + base_.label() + ")",
                        [self](const PointValue& x) { return self.chi(x); });
}

ChiConstruction chi_from_base(const QPSpace& space, const BaseSequence& base, double delta,
                              const ChiOptions& options) {
    ChiConstruction construction(space, base, delta, options.band_budget);
    if (options.validate) {
        Rng rng = substream(options.seed, "chi-validate:" + base.label());
        for (std::size_t k = 1; k <= options.validate_indices; ++k) {
            const SetDescriptor current = base.at(k);
            const SetDescriptor next = base.at(k + 1);
            for (const PointValue& p :
                 sample_neighborhood(space, current, delta, options.validate_candidates, rng)) {
                if (!next.contains(p))
                    throw DeltaSearchError("neighborhood criterion fails: [" +
                                           current.label() + "]^" + format_real(delta) +
                                           " is not inside " + next.label() + "; witness " +
                                           p.str());
            }
        }
    }
    return construction;
}

QPSpace rho_from_chi(const ChiConstruction& construction) {
    const double half_delta = construction.delta() / 2.0;
    const QPSpace base_space = construction.space();
    ChiConstruction self = construction;
    DistFn inner = [self, base_space, half_delta](const PointValue& x, const PointValue& y) {
        const double d = std::min(base_space.dist_signed(x, y), 1.0);
        const double step = half_delta * std::max(self.chi(y) - self.chi(x), 0.0);
        return std::max(d, step);
    };
    return QPSpace("rho_chi(" + base_space.label() + ")", base_space.carrier(),
                   std::move(inner));
}

std::vector<double> default_dyadic_grid() {
    std::vector<double> grid;
    for (int k = 0; k <= 12; ++k) grid.push_back(std::ldexp(1.0, -k));
    return grid;
}

std::vector<std::pair<PointValue, PointValue>> sample_pairs(const Carrier& carrier,
                                                            std::size_t count,
                                                            const std::vector<double>& scales,
                                                            Rng& rng) {
    std::vector<std::pair<PointValue, PointValue>> pool;
    pool.reserve(count);
    const std::vector<PointValue> canonical = carrier.canonical_points();
    for (const PointValue& a : canonical) {
        for (const PointValue& b : canonical) {
            if (pool.size() >= count || pool.size() >= 64) break;
            if (!(a == b)) pool.emplace_back(a, b);
        }
        if (pool.size() >= count || pool.size() >= 64) break;
    }
    while (pool.size() < count) {
        const PointValue x = carrier.sample(rng);
        if (rng.next_bool(0.4) || scales.empty()) {
            pool.emplace_back(x, carrier.sample(rng));
        } else {
            const double scale = scales[rng.next_index(scales.size())];
            pool.emplace_back(x, carrier.perturb(x, scale, rng));
        }
    }
    return pool;
}

namespace {

std::vector<double> descending_or_default(std::vector<double> grid) {
    if (grid.empty()) grid = default_dyadic_grid();
    std::sort(grid.begin(), grid.end(), std::greater<double>());
    return grid;
}

struct PairStats {
    const PointValue* x;
    const PointValue* y;
    double src;
    double tgt;
};

// For each eps, the largest grid delta whose implication "src < delta ->
// tgt < eps" holds on the pool; defect reported at the smallest delta.
bool scan_direction(const std::vector<PairStats>& entries, const std::vector<double>& eps_grid,
                    const std::vector<double>& delta_grid, std::vector<EpsDeltaRow>& table,
                    std::optional<EquivalenceWitness>& witness, int direction) {
    for (double eps : eps_grid) {
        std::optional<double> accepted;
        for (double delta : delta_grid) {
            bool ok = true;
            for (const PairStats& e : entries) {
                if (e.src < delta && e.tgt >= eps) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                accepted = delta;
                break;
            }
        }
        if (!accepted) {
            for (const PairStats& e : entries) {
                if (e.src < delta_grid.back() && e.tgt >= eps) {
                    witness = EquivalenceWitness{direction, eps, *e.x, *e.y, e.src, e.tgt};
                    break;
                }
            }
            return false;
        }
        table.push_back(EpsDeltaRow{eps, *accepted});
    }
    return true;
}

}  // namespace

UniformContinuityResult uniform_continuity_check(const QPSpace& space, const CharFunction& f,
                                                 const UniformCheckOptions& options) {
    const std::vector<double> eps_grid = descending_or_default(options.eps_grid);
    const std::vector<double> delta_grid = descending_or_default(options.delta_grid);
    Rng rng = substream(options.seed, "ucont:" + space.label() + ":" + f.label());
    const auto pool = sample_pairs(space.carrier(), options.samples, delta_grid, rng);

    std::vector<PairStats> entries;
    entries.reserve(pool.size() * 2);
    for (const auto& [x, y] : pool) {
        const double fx = f(x);
        const double fy = f(y);
        entries.push_back(PairStats{&x, &y, space.dist(x, y), fy - fx});
        entries.push_back(PairStats{&y, &x, space.dist(y, x), fx - fy});
    }

    UniformContinuityResult result;
    std::optional<EquivalenceWitness> witness;
    result.pass = scan_direction(entries, eps_grid, delta_grid, result.table, witness, 0);
    if (witness)
        result.witness = UniformContinuityWitness{witness->x, witness->y, witness->d_source,
                                                  witness->d_target, witness->eps};
    return result;
}

UniformEquivalenceResult uniform_equivalence_check(const QPSpace& first, const QPSpace& second,
                                                   const UniformCheckOptions& options) {
    if (!first.carrier().compatible(second.carrier()))
        throw CarrierMismatchError("uniform equivalence needs compatible carriers: " +
                                   first.label() + " vs " + second.label());
    const std::vector<double> eps_grid = descending_or_default(options.eps_grid);
    const std::vector<double> delta_grid = descending_or_default(options.delta_grid);
    Rng rng = substream(options.seed, "uequiv:" + first.label() + ":" + second.label());
    const auto pool = sample_pairs(first.carrier(), options.samples, delta_grid, rng);

    std::vector<PairStats> fwd;
    std::vector<PairStats> bwd;
    fwd.reserve(pool.size() * 2);
    bwd.reserve(pool.size() * 2);
    for (const auto& [x, y] : pool) {
        const double a_xy = first.dist(x, y);
        const double a_yx = first.dist(y, x);
        const double b_xy = second.dist(x, y);
        const double b_yx = second.dist(y, x);
        fwd.push_back(PairStats{&x, &y, a_xy, b_xy});
        fwd.push_back(PairStats{&y, &x, a_yx, b_yx});
        bwd.push_back(PairStats{&x, &y, b_xy, a_xy});
        bwd.push_back(PairStats{&y, &x, b_yx, a_yx});
    }

    UniformEquivalenceResult result;
    const bool ok_fwd =
        scan_direction(fwd, eps_grid, delta_grid, result.forward, result.witness, 0);
    bool ok_bwd = true;
    if (ok_fwd)
        ok_bwd = scan_direction(bwd, eps_grid, delta_grid, result.backward, result.witness, 1);
    result.pass = ok_fwd && ok_bwd;
    return result;
}

LocallyIdenticalResult locally_identical_check(const QPSpace& d_space, const QPSpace& rho_space,
                                               const UniformCheckOptions& options) {
    LocallyIdenticalResult result;
    result.equivalence = uniform_equivalence_check(d_space, rho_space, options);

    const std::vector<double> delta_grid = descending_or_default(options.delta_grid);
    Rng rng = substream(options.seed, "lid:" + d_space.label() + ":" + rho_space.label());
    const auto pool = sample_pairs(d_space.carrier(), options.samples, delta_grid, rng);

    std::vector<PairStats> entries;
    entries.reserve(pool.size() * 2);
    for (const auto& [x, y] : pool) {
        entries.push_back(PairStats{&x, &y, d_space.dist(x, y), rho_space.dist(x, y)});
        entries.push_back(PairStats{&y, &x, d_space.dist(y, x), rho_space.dist(y, x)});
    }

    std::optional<double> agree_delta;
    for (double delta : delta_grid) {
        bool ok = true;
        for (const PairStats& e : entries) {
            if (e.src < delta && e.tgt != e.src) {
                ok = false;
                break;
            }
        }
        if (ok) {
            agree_delta = delta;
            break;
        }
    }
    if (agree_delta) {
        result.delta = *agree_delta;
    } else {
        for (const PairStats& e : entries) {
            if (e.src < delta_grid.back() && e.tgt != e.src) {
                result.witness = LocalAgreementWitness{*e.x, *e.y, e.src, e.tgt};
                break;
            }
        }
    }
    result.pass = result.equivalence.pass && agree_delta.has_value();
    return result;
}

BaseSequence widen_base(const QPSpace& space, const BaseSequence& family, double r) {
    if (!(r > 0.0)) throw ConfigError("widening radius must be positive");
    const Carrier carrier = space.carrier();
    BaseSequence::SetAt at = [space, family, r, carrier](std::size_t n) {
        const SetDescriptor inner = family.at(n);
        const std::string label = "[" + inner.label() + "]^" + format_real(r);
        PredicateFn contains;
        if (inner.has_dist_from()) {
            contains = [inner, r](const PointValue& p) {
                return inner.contains(p) || inner.dist_from(p) < r;
            };
        } else {
            contains = [space, inner, r, label](const PointValue& p) {
                if (inner.contains(p)) return true;
                Rng rng(hash_label(label) ^ hash_label(p.str()));
                return set_dist_from(space, inner, p, rng).value < r;
            };
        }
        SetDescriptor widened(label, std::move(contains));
        if (inner.has_sampler()) {
            widened.with_sampler([space, inner, r, carrier](Rng& rng) {
                const PointValue member = *inner.sample_member(rng);
                if (rng.next_bool(0.4)) return member;
                for (int tries = 0; tries < 16; ++tries) {
                    const PointValue candidate =
                        carrier.perturb(member, r * rng.next_unit(), rng);
                    if (space.dist(member, candidate) < r) return candidate;
                }
                return member;
            });
        }
        return widened;
    };
    return BaseSequence("widened(" + family.label() + ", " + format_real(r) + ")",
                        std::move(at));
}

RefinedBase cb_uniform_base(const QPSpace& space, const BaseSequence& family, double delta,
                            const UniformRefineOptions& options) {
    if (!(delta > 0.0)) throw ConfigError("cb_uniform_base needs delta > 0");
    const BaseSequence widened = widen_base(space, family, delta / 2.0);
    return refine_base_uniform(space, widened, delta / 2.0, options);
}

}  // namespace qmb
