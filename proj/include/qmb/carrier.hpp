#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmb/point.hpp"
#include "qmb/rng.hpp"

namespace qmb {

enum class CarrierKind { Real, Natural, Dyadic, Hedgehog, Comb, Hawaiian, Finite };

const char* carrier_kind_name(CarrierKind kind);

// Describes the point set a distance function operates on, together with
// enough structure to draw deterministic samples, perturb points at a
// given scale, and test membership.  Sampling windows bound where samples
// come from, not the carrier itself (the Real carrier holds all of R).
class Carrier {
public:
    static Carrier reals(double lo = -1.0e4, double hi = 1.0e4);
    static Carrier naturals(std::uint64_t sample_cap = 64,
                            std::optional<std::uint64_t> value_limit = std::nullopt);
    // Indexed dyadic scale {2^-(i+1) : 0 <= i < cutoff}; points are indices.
    static Carrier dyadic(std::uint64_t cutoff = 64);
    // Hedgehog over base interval [lo, hi] glued at apex_coord.  Empty
    // spine count means countably many spines.
    static Carrier hedgehog(double lo, double hi, double apex_coord,
                            std::optional<std::uint64_t> spines = std::nullopt,
                            std::uint64_t spine_sample_cap = 64);
    static Carrier comb(std::uint64_t tooth_sample_cap = 128);
    static Carrier hawaiian(std::uint64_t circle_sample_cap = 64);
    static Carrier finite(std::size_t size);

    CarrierKind kind() const { return kind_; }
    double window_lo() const { return lo_; }
    double window_hi() const { return hi_; }
    Carrier with_window(double lo, double hi) const;

    std::size_t finite_size() const { return finite_size_; }
    std::uint64_t dyadic_cutoff() const { return dyadic_cutoff_; }
    double apex_coord() const { return apex_coord_; }
    std::optional<std::uint64_t> spine_count() const { return spines_; }
    const std::vector<Rational>& teeth() const { return teeth_; }

    bool contains(const PointValue& p) const;
    // Cheap structural membership used on the hot path of dist(): checks
    // the variant alternative and index bounds, but not expensive
    // geometry (a planar point is shape-ok without the circle scan).
    bool shape_ok(const PointValue& p) const;
    // Structural interchangeability: points of one may be fed to distance
    // functions over the other.
    bool compatible(const Carrier& other) const;

    PointValue sample(Rng& rng) const;
    PointValue perturb(const PointValue& p, double scale, Rng& rng) const;
    std::vector<PointValue> canonical_points(std::size_t max = 24) const;

    // Index of the earring circle a planar point lies on (smallest
    // residual), or nullopt if every residual exceeds the tolerance.
    std::optional<std::uint64_t> nearest_circle(const PointValue& p) const;

    static constexpr double kOnCircleTol = 1e-9;

private:
    Carrier(CarrierKind kind) : kind_(kind) {}

    CarrierKind kind_;
    double lo_ = -1.0e4;
    double hi_ = 1.0e4;
    std::uint64_t nat_cap_ = 64;
    std::optional<std::uint64_t> nat_limit_;
    std::uint64_t dyadic_cutoff_ = 64;
    double apex_coord_ = 0.0;
    double coord_floor_ = 0x1p-40;
    std::optional<std::uint64_t> spines_;
    std::uint64_t spine_cap_ = 64;
    std::vector<Rational> teeth_;
    std::uint64_t circle_cap_ = 64;
    std::uint64_t circle_check_cap_ = 4096;
    std::size_t finite_size_ = 0;
};

}  // namespace qmb
