#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <variant>

#include "qmb/errors.hpp"
#include "qmb/rational.hpp"

namespace qmb {

class PointValue;

struct NatValue {
    std::uint64_t value = 0;
    friend bool operator==(const NatValue& a, const NatValue& b) {
        return a.value == b.value;
    }
};

// Ordered pair of points, used for planar carriers.
struct PairValue {
    std::shared_ptr<const PointValue> first;
    std::shared_ptr<const PointValue> second;
};

// Point of a hedgehog: either the apex or a base-space coordinate tagged
// with the index of the spine it lives on.
struct HedgehogPoint {
    bool apex = true;
    double coord = 0.0;
    std::uint64_t spine = 0;
    friend bool operator==(const HedgehogPoint& a, const HedgehogPoint& b) {
        if (a.apex != b.apex) return false;
        if (a.apex) return true;
        return a.coord == b.coord && a.spine == b.spine;
    }
};

// Point of the comb: on the hand segment at abscissa x, or on the tooth
// above the rational q at height y > 0.  Height zero is canonicalized to
// the hand, so equality stays structural.
struct CombPoint {
    bool hand = true;
    double x = 0.0;
    Rational tooth;
    double y = 0.0;
    friend bool operator==(const CombPoint& a, const CombPoint& b) {
        if (a.hand != b.hand) return false;
        if (a.hand) return a.x == b.x;
        return a.tooth == b.tooth && a.y == b.y;
    }
};

struct FiniteNode {
    std::size_t index = 0;
    friend bool operator==(const FiniteNode& a, const FiniteNode& b) {
        return a.index == b.index;
    }
};

// Immutable tagged value representing a point of some carrier.  Factory
// functions validate their arguments; distances and checks can then
// assume every held double is finite.
class PointValue {
public:
    using Variant =
        std::variant<double, NatValue, PairValue, HedgehogPoint, CombPoint, FiniteNode>;

    static PointValue real(double v) {
        if (!std::isfinite(v)) throw ContractViolationError("non-finite real point");
        return PointValue(Variant(v));
    }
    static PointValue nat(std::uint64_t v) { return PointValue(Variant(NatValue{v})); }
    static PointValue pair(PointValue a, PointValue b) {
        PairValue p{std::make_shared<const PointValue>(std::move(a)),
                    std::make_shared<const PointValue>(std::move(b))};
        return PointValue(Variant(std::move(p)));
    }
    static PointValue plane(double x, double y) { return pair(real(x), real(y)); }
    static PointValue hedgehog_apex() { return PointValue(Variant(HedgehogPoint{})); }
    static PointValue hedgehog(double coord, std::uint64_t spine) {
        if (!std::isfinite(coord)) throw ContractViolationError("non-finite hedgehog coord");
        return PointValue(Variant(HedgehogPoint{false, coord, spine}));
    }
    static PointValue comb_hand(double x) {
        if (!std::isfinite(x)) throw ContractViolationError("non-finite comb abscissa");
        return PointValue(Variant(CombPoint{true, x, Rational(), 0.0}));
    }
    static PointValue comb_tooth(Rational q, double y) {
        if (!std::isfinite(y) || y < 0.0)
            throw ContractViolationError("comb tooth height must be finite and >= 0");
        if (y == 0.0) return comb_hand(q.value());
        return PointValue(Variant(CombPoint{false, 0.0, q, y}));
    }
    static PointValue node(std::size_t index) { return PointValue(Variant(FiniteNode{index})); }

    bool is_real() const { return std::holds_alternative<double>(v_); }
    bool is_nat() const { return std::holds_alternative<NatValue>(v_); }
    bool is_pair() const { return std::holds_alternative<PairValue>(v_); }
    bool is_hedgehog() const { return std::holds_alternative<HedgehogPoint>(v_); }
    bool is_comb() const { return std::holds_alternative<CombPoint>(v_); }
    bool is_node() const { return std::holds_alternative<FiniteNode>(v_); }

    double as_real() const { return expect<double>("real"); }
    std::uint64_t as_nat() const { return expect<NatValue>("natural").value; }
    const PointValue& pair_first() const { return *expect<PairValue>("pair").first; }
    const PointValue& pair_second() const { return *expect<PairValue>("pair").second; }
    const HedgehogPoint& as_hedgehog() const { return expect<HedgehogPoint>("hedgehog"); }
    const CombPoint& as_comb() const { return expect<CombPoint>("comb"); }
    std::size_t as_node() const { return expect<FiniteNode>("node").index; }

    const Variant& raw() const { return v_; }

    friend bool operator==(const PointValue& a, const PointValue& b) {
        if (a.v_.index() != b.v_.index()) return false;
        if (a.is_pair()) {
            const auto& pa = std::get<PairValue>(a.v_);
            const auto& pb = std::get<PairValue>(b.v_);
            return *pa.first == *pb.first && *pa.second == *pb.second;
        }
        return std::visit(
            [&b](const auto& va) {
                using T = std::decay_t<decltype(va)>;
                if constexpr (std::is_same_v<T, PairValue>) {
                    return false;  // handled above
                } else {
                    return va == std::get<T>(b.v_);
                }
            },
            a.v_);
    }
    friend bool operator!=(const PointValue& a, const PointValue& b) { return !(a == b); }

    std::string str() const;

private:
    explicit PointValue(Variant v) : v_(std::move(v)) {}

    template <class T>
    const T& expect(const char* what) const {
        if (const T* p = std::get_if<T>(&v_)) return *p;
        throw CarrierMismatchError(std::string("point is not a ") + what + " value: " + str());
    }

    Variant v_;
};

inline std::string format_real(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

inline std::string PointValue::str() const {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_real(v);
            } else if constexpr (std::is_same_v<T, NatValue>) {
                return std::to_string(v.value);
            } else if constexpr (std::is_same_v<T, PairValue>) {
                return "(" + v.first->str() + ", " + v.second->str() + ")";
            } else if constexpr (std::is_same_v<T, HedgehogPoint>) {
                if (v.apex) return "apex";
                return "(" + format_real(v.coord) + " on spine " + std::to_string(v.spine) + ")";
            } else if constexpr (std::is_same_v<T, CombPoint>) {
                if (v.hand) return "hand(" + format_real(v.x) + ")";
                return "tooth(" + v.tooth.str() + ", " + format_real(v.y) + ")";
            } else {
                return "#" + std::to_string(v.index);
            }
        },
        v_);
}

}  // namespace qmb
