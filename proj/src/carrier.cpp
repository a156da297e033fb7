#include "qmb/carrier.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace qmb {
namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<Rational> stern_brocot_teeth(std::uint64_t count) {
    // Enumerate the rationals of [0, 1] breadth-first by mediants so a
    // prefix of the list is a well-spread deterministic tooth set.
    std::vector<Rational> out{Rational(0, 1), Rational(1, 1)};
    std::deque<std::pair<Rational, Rational>> frontier{{Rational(0, 1), Rational(1, 1)}};
    while (out.size() < count && !frontier.empty()) {
        auto [a, b] = frontier.front();
        frontier.pop_front();
        Rational m = mediant(a, b);
        out.push_back(m);
        frontier.emplace_back(a, m);
        frontier.emplace_back(m, b);
    }
    if (out.size() > count) out.resize(count);
    return out;
}

double circle_radius(std::uint64_t m) { return 1.0 / static_cast<double>(m); }

PointValue on_circle(std::uint64_t m, double theta) {
    const double r = circle_radius(m);
    return PointValue::plane(r + r * std::cos(theta), r * std::sin(theta));
}

}  // namespace

const char* carrier_kind_name(CarrierKind kind) {
    switch (kind) {
        case CarrierKind::Real: return "real";
        case CarrierKind::Natural: return "natural";
        case CarrierKind::Dyadic: return "dyadic";
        case CarrierKind::Hedgehog: return "hedgehog";
        case CarrierKind::Comb: return "comb";
        case CarrierKind::Hawaiian: return "hawaiian";
        case CarrierKind::Finite: return "finite";
    }
    return "unknown";
}

Carrier Carrier::reals(double lo, double hi) {
    Carrier c(CarrierKind::Real);
    c.lo_ = lo;
    c.hi_ = hi;
    return c;
}

Carrier Carrier::naturals(std::uint64_t sample_cap, std::optional<std::uint64_t> value_limit) {
    Carrier c(CarrierKind::Natural);
    c.nat_cap_ = sample_cap;
    c.nat_limit_ = value_limit;
    return c;
}

Carrier Carrier::dyadic(std::uint64_t cutoff) {
    Carrier c(CarrierKind::Dyadic);
    c.dyadic_cutoff_ = cutoff;
    return c;
}

Carrier Carrier::hedgehog(double lo, double hi, double apex_coord,
                          std::optional<std::uint64_t> spines,
                          std::uint64_t spine_sample_cap) {
    Carrier c(CarrierKind::Hedgehog);
    c.lo_ = lo;
    c.hi_ = hi;
    c.apex_coord_ = apex_coord;
    c.spines_ = spines;
    c.spine_cap_ = spines ? std::min(*spines, spine_sample_cap) : spine_sample_cap;
    return c;
}

Carrier Carrier::comb(std::uint64_t tooth_sample_cap) {
    Carrier c(CarrierKind::Comb);
    c.teeth_ = stern_brocot_teeth(tooth_sample_cap);
    return c;
}

Carrier Carrier::hawaiian(std::uint64_t circle_sample_cap) {
    Carrier c(CarrierKind::Hawaiian);
    c.circle_cap_ = circle_sample_cap;
    return c;
}

Carrier Carrier::finite(std::size_t size) {
    Carrier c(CarrierKind::Finite);
    c.finite_size_ = size;
    return c;
}

Carrier Carrier::with_window(double lo, double hi) const {
    Carrier c(*this);
    c.lo_ = lo;
    c.hi_ = hi;
    return c;
}

bool Carrier::contains(const PointValue& p) const {
    switch (kind_) {
        case CarrierKind::Real:
            return p.is_real();
        case CarrierKind::Natural:
            return p.is_nat() && (!nat_limit_ || p.as_nat() <= *nat_limit_);
        case CarrierKind::Dyadic:
            return p.is_nat() && p.as_nat() < dyadic_cutoff_;
        case CarrierKind::Hedgehog: {
            if (!p.is_hedgehog()) return false;
            const auto& h = p.as_hedgehog();
            if (h.apex) return true;
            if (h.coord == apex_coord_) return false;
            if (h.coord < std::min(lo_, apex_coord_) || h.coord > std::max(hi_, apex_coord_))
                return false;
            return !spines_ || h.spine < *spines_;
        }
        case CarrierKind::Comb: {
            if (!p.is_comb()) return false;
            const auto& c = p.as_comb();
            if (c.hand) return c.x >= 0.0 && c.x <= 1.0;
            const double q = c.tooth.value();
            return q >= 0.0 && q <= 1.0 && c.y > 0.0 && c.y <= 1.0;
        }
        case CarrierKind::Hawaiian:
            return nearest_circle(p).has_value();
        case CarrierKind::Finite:
            return p.is_node() && p.as_node() < finite_size_;
    }
    return false;
}

bool Carrier::shape_ok(const PointValue& p) const {
    switch (kind_) {
        case CarrierKind::Real: return p.is_real();
        case CarrierKind::Natural:
            return p.is_nat() && (!nat_limit_ || p.as_nat() <= *nat_limit_);
        case CarrierKind::Dyadic: return p.is_nat() && p.as_nat() < dyadic_cutoff_;
        case CarrierKind::Hedgehog:
            return p.is_hedgehog() &&
                   (p.as_hedgehog().apex || !spines_ || p.as_hedgehog().spine < *spines_);
        case CarrierKind::Comb: return p.is_comb();
        case CarrierKind::Hawaiian:
            return p.is_pair() && p.pair_first().is_real() && p.pair_second().is_real();
        case CarrierKind::Finite: return p.is_node() && p.as_node() < finite_size_;
    }
    return false;
}

bool Carrier::compatible(const Carrier& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case CarrierKind::Finite: return finite_size_ == other.finite_size_;
        case CarrierKind::Dyadic: return dyadic_cutoff_ == other.dyadic_cutoff_;
        case CarrierKind::Hedgehog:
            return apex_coord_ == other.apex_coord_ && spines_ == other.spines_;
        default: return true;
    }
}

std::optional<std::uint64_t> Carrier::nearest_circle(const PointValue& p) const {
    if (!p.is_pair() || !p.pair_first().is_real() || !p.pair_second().is_real())
        return std::nullopt;
    const double x = p.pair_first().as_real();
    const double y = p.pair_second().as_real();
    double best = kOnCircleTol;
    std::optional<std::uint64_t> best_m;
    for (std::uint64_t m = 1; m <= circle_check_cap_; ++m) {
        const double r = circle_radius(m);
        const double residual = std::fabs(std::hypot(x - r, y) - r);
        if (residual < best || (residual == best && !best_m)) {
            best = residual;
            best_m = m;
        }
    }
    return best_m;
}

PointValue Carrier::sample(Rng& rng) const {
    switch (kind_) {
        case CarrierKind::Real: {
            if (rng.next_bool(0.2)) {
                auto grid = canonical_points();
                if (!grid.empty()) return grid[rng.next_index(grid.size())];
            }
            return PointValue::real(rng.next_real(lo_, hi_));
        }
        case CarrierKind::Natural:
            return PointValue::nat(rng.next_index(nat_cap_ + 1));
        case CarrierKind::Dyadic:
            return PointValue::nat(rng.next_index(dyadic_cutoff_));
        case CarrierKind::Hedgehog: {
            if (rng.next_bool(0.1)) return PointValue::hedgehog_apex();
            double coord = rng.next_real(lo_, hi_);
            if (std::fabs(coord - apex_coord_) < coord_floor_)
                coord = apex_coord_ + coord_floor_;
            return PointValue::hedgehog(coord, rng.next_index(spine_cap_));
        }
        case CarrierKind::Comb: {
            if (rng.next_bool(1.0 / 3.0)) return PointValue::comb_hand(rng.next_unit());
            const Rational q = teeth_[rng.next_index(teeth_.size())];
            double y = rng.next_unit();
            if (y <= 0.0) y = 0x1p-40;
            return PointValue::comb_tooth(q, y);
        }
        case CarrierKind::Hawaiian: {
            const std::uint64_t m = 1 + rng.next_index(circle_cap_);
            const double theta = rng.next_bool(0.25) ? kPi - rng.next_real(0.0, 0.5)
                                                     : rng.next_real(0.0, 2.0 * kPi);
            return on_circle(m, theta);
        }
        case CarrierKind::Finite:
            return PointValue::node(rng.next_index(finite_size_));
    }
    throw Error("unreachable carrier kind");
}

PointValue Carrier::perturb(const PointValue& p, double scale, Rng& rng) const {
    switch (kind_) {
        case CarrierKind::Real:
            return PointValue::real(p.as_real() + scale * (2.0 * rng.next_unit() - 1.0));
        case CarrierKind::Natural: {
            const std::uint64_t v = p.as_nat();
            std::uint64_t step = 1 + rng.next_index(2);
            if (rng.next_bool() && v >= step) return PointValue::nat(v - step);
            return PointValue::nat(std::min<std::uint64_t>(v + step, nat_cap_));
        }
        case CarrierKind::Dyadic: {
            const std::uint64_t v = p.as_nat();
            std::uint64_t step = 1 + rng.next_index(2);
            if (rng.next_bool() && v >= step) return PointValue::nat(v - step);
            return PointValue::nat(std::min<std::uint64_t>(v + step, dyadic_cutoff_ - 1));
        }
        case CarrierKind::Hedgehog: {
            const auto& h = p.as_hedgehog();
            const double base = h.apex ? apex_coord_ : h.coord;
            const std::uint64_t spine =
                (h.apex || rng.next_bool(0.1)) ? rng.next_index(spine_cap_) : h.spine;
            double coord = base + scale * (2.0 * rng.next_unit() - 1.0);
            coord = std::clamp(coord, std::min(lo_, apex_coord_), std::max(hi_, apex_coord_));
            if (std::fabs(coord - apex_coord_) < coord_floor_)
                coord = apex_coord_ + coord_floor_;
            return PointValue::hedgehog(coord, spine);
        }
        case CarrierKind::Comb: {
            const auto& c = p.as_comb();
            const double jitter = scale * (2.0 * rng.next_unit() - 1.0);
            if (c.hand) {
                if (rng.next_bool(0.2) && !teeth_.empty()) {
                    // Hop onto the tooth closest to the hand position.
                    const Rational* best = &teeth_[0];
                    for (const auto& q : teeth_)
                        if (std::fabs(q.value() - c.x) < std::fabs(best->value() - c.x)) best = &q;
                    return PointValue::comb_tooth(*best, std::clamp(std::fabs(jitter), 0.0, 1.0));
                }
                return PointValue::comb_hand(std::clamp(c.x + jitter, 0.0, 1.0));
            }
            const double y = std::clamp(c.y + jitter, 0.0, 1.0);
            return PointValue::comb_tooth(c.tooth, y);
        }
        case CarrierKind::Hawaiian: {
            std::uint64_t m = nearest_circle(p).value_or(1);
            if (rng.next_bool(0.2)) m = 1 + rng.next_index(circle_cap_);
            const double r = circle_radius(m);
            const double x = p.pair_first().as_real() - r;
            const double y = p.pair_second().as_real();
            const double theta = std::atan2(y, x);
            const double dtheta =
                std::clamp(scale / r * (2.0 * rng.next_unit() - 1.0), -kPi, kPi);
            return on_circle(m, theta + dtheta);
        }
        case CarrierKind::Finite:
            return PointValue::node(rng.next_index(finite_size_));
    }
    throw Error("unreachable carrier kind");
}

std::vector<PointValue> Carrier::canonical_points(std::size_t max) const {
    std::vector<PointValue> out;
    switch (kind_) {
        case CarrierKind::Real: {
            static const double grid[] = {0.0, 1.0,  -1.0, 0.5,  -0.5, 1.5, -1.5, 2.0, -2.0,
                                          2.5, -2.5, 3.0,  -3.0, 5.0,  -5.0, 10.0, -10.0};
            for (double v : grid)
                if (v >= lo_ && v <= hi_) out.push_back(PointValue::real(v));
            break;
        }
        case CarrierKind::Natural: {
            static const std::uint64_t grid[] = {0,  1,  2,  3,  4,  5,  6,  7,  8, 9,
                                                 10, 16, 21, 24, 32, 40, 48, 56, 64};
            for (std::uint64_t v : grid)
                if (v <= nat_cap_) out.push_back(PointValue::nat(v));
            break;
        }
        case CarrierKind::Dyadic:
            for (std::uint64_t i = 0; i < std::min<std::uint64_t>(dyadic_cutoff_, 12); ++i)
                out.push_back(PointValue::nat(i));
            break;
        case CarrierKind::Hedgehog: {
            out.push_back(PointValue::hedgehog_apex());
            const double span = std::max(hi_, apex_coord_) - apex_coord_;
            const double far = apex_coord_ + (span > 0.0 ? span : 1.0);
            for (std::uint64_t s = 0; s < std::min<std::uint64_t>(spine_cap_, 4); ++s) {
                out.push_back(PointValue::hedgehog(far, s));
                out.push_back(PointValue::hedgehog(apex_coord_ + (far - apex_coord_) / 2, s));
            }
            out.push_back(PointValue::hedgehog(apex_coord_ + (far - apex_coord_) / 4, 0));
            break;
        }
        case CarrierKind::Comb:
            out.push_back(PointValue::comb_hand(0.0));
            out.push_back(PointValue::comb_hand(1.0));
            out.push_back(PointValue::comb_hand(0.5));
            out.push_back(PointValue::comb_tooth(Rational(1, 2), 1.0));
            out.push_back(PointValue::comb_tooth(Rational(1, 2), 0.5));
            out.push_back(PointValue::comb_tooth(Rational(1, 3), 0.5));
            out.push_back(PointValue::comb_tooth(Rational(0, 1), 1.0));
            out.push_back(PointValue::comb_tooth(Rational(1, 1), 0.25));
            break;
        case CarrierKind::Hawaiian:
            out.push_back(PointValue::plane(0.0, 0.0));
            for (std::uint64_t m = 1; m <= std::min<std::uint64_t>(circle_cap_, 4); ++m) {
                const double r = circle_radius(m);
                out.push_back(PointValue::plane(2.0 * r, 0.0));
                out.push_back(PointValue::plane(r, r));
                out.push_back(PointValue::plane(r, -r));
            }
            break;
        case CarrierKind::Finite:
            for (std::size_t i = 0; i < std::min<std::size_t>(finite_size_, 8); ++i)
                out.push_back(PointValue::node(i));
            break;
    }
    if (out.size() > max) out.erase(out.begin() + static_cast<std::ptrdiff_t>(max), out.end());
    return out;
}

}  // namespace qmb
