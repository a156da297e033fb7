#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "qmb/errors.hpp"
#include "qmb/zoo.hpp"

using namespace qmb;

namespace {
const QPSpace& space_of(const char* id) { return zoo_entry(id).space; }
double line_dist(const char* id, double x, double y) {
    return space_of(id).dist(PointValue::real(x), PointValue::real(y));
}
}  // namespace

TEST_CASE("catalog shape") {
    const auto& catalog = zoo_catalog();
    CHECK(catalog.size() >= 12);
    std::set<std::string> seen;
    for (const ZooEntry& entry : catalog) {
        CHECK(seen.insert(entry.id).second);
        CHECK_FALSE(entry.notes.empty());
        CHECK(zoo_has(entry.id));
    }
    CHECK_FALSE(zoo_has("missing"));
    CHECK_THROWS_AS(zoo_entry("missing"), ConfigError);
}

TEST_CASE("sorgenfrey family values") {
    CHECK(line_dist("sorgenfrey_rho_s", 1.0, 3.0) == 2.0);
    CHECK(line_dist("sorgenfrey_rho_s", 3.0, 1.0) == 1.0);
    CHECK(line_dist("sorgenfrey_rho_s1", 1.0, 3.0) == 1.0);
    CHECK(line_dist("sorgenfrey_rho_s1", 1.0, 1.5) == 0.5);
    CHECK(line_dist("sorgenfrey_rho_s1", 3.0, 1.0) == 1.0);
    CHECK(line_dist("sorgenfrey_rho_l", 0.5, 0.0) == 1.5);
    CHECK(line_dist("sorgenfrey_rho_l", 0.0, 0.5) == 0.5);
    CHECK(line_dist("sorgenfrey_rho_l", 0.0, 5.0) == 1.0);
    CHECK(line_dist("rho_zero", 3.0, 1.0) == 3.0);
    CHECK(line_dist("rho_zero", 1.0, 3.0) == 2.0);
}

TEST_CASE("one sided gaps") {
    CHECK(line_dist("rho_u", 1.0, 3.0) == 2.0);
    CHECK(line_dist("rho_u", 3.0, 1.0) == 0.0);
    CHECK(line_dist("rho_l", 1.0, 3.0) == 0.0);
    CHECK(line_dist("rho_l", 3.0, 1.0) == 2.0);
}

TEST_CASE("line metrics and the pulled back variant") {
    CHECK(line_dist("d_n", -2.0, 3.0) == 5.0);
    CHECK(line_dist("d_n_1", -2.0, 3.0) == 1.0);
    CHECK(line_dist("d_n_1", 0.25, 0.5) == 0.25);
    CHECK(line_dist("d_u", -5.0, 3.0) == 4.0);
    CHECK(line_dist("d_u", 3.0, -5.0) == 4.0);
    CHECK(line_dist("d_u", -5.0, -3.0) == 1.0);
    const double expect = 1.0 - std::exp(-1.0);
    CHECK(line_dist("dplus_n", -1.0, 0.0) == doctest::Approx(expect).epsilon(1e-15));
    CHECK(line_dist("dplus_n", 1.0, 3.0) == 2.0);
    CHECK(line_dist("dplus_n", -30.0, 0.0) < 1.0);
    CHECK(line_dist("dplus_n", -700.0, 0.0) == 1.0);
}

TEST_CASE("interval distance closed forms") {
    const Interval ray = Interval::lower_ray(-2.0);
    CHECK(interval_dist_from(RealMetric::DN, ray, 0.5) == 2.5);
    CHECK(interval_dist_to(RealMetric::DN, ray, 0.5) == 2.5);
    CHECK(interval_dist_from(RealMetric::SorgS, ray, 0.5) == 2.5);
    CHECK(interval_dist_to(RealMetric::SorgS, ray, 0.5) == 1.0);
    CHECK(interval_dist_from(RealMetric::DN, Interval::closed(-1.0, 1.0), 0.5) == 0.0);
    const Interval upper = Interval::upper_ray(2.0);
    CHECK(interval_dist_to(RealMetric::RhoU, upper, 0.5) == 1.5);
    CHECK(interval_dist_from(RealMetric::RhoU, upper, 0.5) == 0.0);
}

TEST_CASE("conjugate and symmetrize partners") {
    const ZooEntry& upper = zoo_entry("rho_u");
    REQUIRE(upper.conjugate_partner.has_value());
    CHECK(*upper.conjugate_partner == "rho_l");
    const QPSpace conj = conjugate(upper.space);
    const QPSpace& lower = space_of("rho_l");
    for (double x : {-3.0, 0.0, 1.5})
        for (double y : {-1.0, 0.25, 4.0})
            CHECK(conj.dist(PointValue::real(x), PointValue::real(y)) ==
                  lower.dist(PointValue::real(x), PointValue::real(y)));

    const QPSpace conj_nat = conjugate(space_of("ex1_6"));
    CHECK(conj_nat.dist(PointValue::nat(3), PointValue::nat(5)) == 32.0);
    CHECK(conj_nat.dist(PointValue::nat(5), PointValue::nat(3)) == 8.0);
}

TEST_CASE("hedgehog geometry") {
    const QPSpace& quills = space_of("hedgehog");
    const PointValue apex = PointValue::hedgehog_apex();
    const PointValue a = PointValue::hedgehog(0.5, 3);
    const PointValue b = PointValue::hedgehog(0.2, 3);
    const PointValue c = PointValue::hedgehog(0.2, 7);
    CHECK(quills.dist(apex, a) == 0.5);
    CHECK(quills.dist(a, apex) == 0.5);
    CHECK(quills.dist(a, b) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(quills.dist(a, c) == 0.7);
    CHECK(quills.dist(apex, apex) == 0.0);
}

TEST_CASE("shrinking circles geometry") {
    const QPSpace& rings = space_of("hawaiian");
    const PointValue origin = PointValue::plane(0.0, 0.0);
    const PointValue far = PointValue::plane(2.0, 0.0);
    CHECK(rings.dist(origin, far) == 2.0);
    CHECK(rings.dist(far, origin) == 2.0);
    const PointValue top = PointValue::plane(1.0, 1.0);
    CHECK(rings.dist(origin, top) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("comb geometry") {
    const QPSpace& comb = space_of("comb");
    const PointValue h1 = PointValue::comb_hand(0.2);
    const PointValue h2 = PointValue::comb_hand(0.5);
    const PointValue t1 = PointValue::comb_tooth(Rational(1, 2), 0.5);
    const PointValue t2 = PointValue::comb_tooth(Rational(1, 4), 0.25);
    const PointValue t3 = PointValue::comb_tooth(Rational(1, 2), 0.125);
    CHECK(comb.dist(h1, h2) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(comb.dist(t1, h2) == 0.5);
    CHECK(comb.dist(t1, t2) == 1.0);
    CHECK(comb.dist(t1, t3) == 0.375);
}

TEST_CASE("two scale spaces") {
    const QPSpace& d = space_of("ex8_2");
    const QPSpace& rho = space_of("ex8_6");
    const PointValue fast0 = PointValue::nat(0);
    const PointValue slow1 = PointValue::nat(1);
    const PointValue fast2 = PointValue::nat(2);
    const PointValue slow3 = PointValue::nat(3);
    CHECK(d.dist(fast0, slow1) == 0.25);
    CHECK(d.dist(fast0, slow3) == 0.0625);
    CHECK(d.dist(slow1, fast0) == 1.0);
    CHECK(d.dist(fast0, fast2) == 1.0);
    CHECK(d.dist(slow1, slow3) == 1.0);
    CHECK(rho.dist(fast0, slow1) == 0.25);
    CHECK(rho.dist(fast0, slow3) == 0.0625);
    CHECK(rho.dist(slow1, fast0) == 2.0);
    CHECK(rho.dist(fast0, fast2) == 8.0);
    CHECK(rho.dist(slow1, slow3) == 1.0);
}

TEST_CASE("named bornology bases") {
    const ZooEntry& upper = zoo_entry("rho_u");
    REQUIRE_FALSE(upper.bornologies.empty());
    const BaseSequence& ub = upper.bornologies.front().bornology.base();
    CHECK(ub.at(2).contains(PointValue::real(-5.0)));
    CHECK(ub.at(2).contains(PointValue::real(2.0)));
    CHECK_FALSE(ub.at(2).contains(PointValue::real(3.0)));
    CHECK(ub.inclusion(1, 2) == Inclusion::StrictSubset);
    CHECK(ub.inclusion(2, 1) == Inclusion::NotSubset);

    const ZooEntry& sorg = zoo_entry("sorgenfrey_rho_s");
    const BaseSequence& lb = sorg.bornologies.front().bornology.base();
    CHECK(lb.at(2).contains(PointValue::real(77.0)));
    CHECK(lb.at(2).contains(PointValue::real(-2.0)));
    CHECK_FALSE(lb.at(2).contains(PointValue::real(-3.0)));
}

TEST_CASE("real metric tags") {
    CHECK(real_metric_of("d_n") == RealMetric::DN);
    CHECK(real_metric_of("rho_u") == RealMetric::RhoU);
    CHECK_FALSE(real_metric_of("hedgehog").has_value());
    CHECK(real_metric_eval(RealMetric::DU, -5.0, 3.0) == 4.0);
    CHECK(real_metric_eval(RealMetric::SorgS, 3.0, 1.0) == 1.0);
}
