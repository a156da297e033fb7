#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qmb/errors.hpp"
#include "qmb/report.hpp"
#include "qmb/rng.hpp"
#include "qmb/sets.hpp"
#include "qmb/space.hpp"
#include "qmb/zoo.hpp"

using namespace qmb;

TEST_CASE("exponential naturals distances") {
    const QPSpace& space = zoo_entry("ex1_6").space;
    CHECK(space.dist(PointValue::nat(0), PointValue::nat(5)) == 1.0);
    CHECK(space.dist(PointValue::nat(3), PointValue::nat(5)) == 8.0);
    CHECK(space.dist(PointValue::nat(5), PointValue::nat(3)) == 32.0);
    CHECK(space.dist(PointValue::nat(5), PointValue::nat(5)) == 0.0);
}

TEST_CASE("conjugate symmetrize truncate algebra") {
    const QPSpace& upper = zoo_entry("rho_u").space;
    const QPSpace conj = conjugate(upper);
    const QPSpace sym = symmetrize(upper);
    const PointValue a = PointValue::real(1.0);
    const PointValue b = PointValue::real(3.5);
    CHECK(upper.dist(a, b) == 2.5);
    CHECK(upper.dist(b, a) == 0.0);
    CHECK(conj.dist(a, b) == 0.0);
    CHECK(conj.dist(b, a) == 2.5);
    CHECK(sym.dist(a, b) == 2.5);
    CHECK(sym.dist(b, a) == 2.5);

    const QPSpace capped = truncate(zoo_entry("d_n").space, 1.0);
    CHECK(capped.dist(a, b) == 1.0);
    CHECK(capped.dist(a, PointValue::real(1.25)) == 0.25);
    CHECK_THROWS_AS(truncate(upper, 0.0), ConfigError);
    CHECK_THROWS_AS(truncate(upper, -2.0), ConfigError);
}

TEST_CASE("asymmetric balls") {
    const QPSpace& sorg = zoo_entry("sorgenfrey_rho_s").space;
    const PointValue center = PointValue::real(0.0);
    CHECK(ball_contains(sorg, center, 1.0, PointValue::real(0.5)));
    CHECK_FALSE(ball_contains(sorg, center, 1.0, PointValue::real(-0.5)));
    CHECK(ball_contains(sorg, center, 1.5, PointValue::real(-0.5)));
    CHECK_FALSE(ball_contains(sorg, center, 1.0, PointValue::real(1.0)));
}

TEST_CASE("set distances respect argument order") {
    const QPSpace& line = zoo_entry("d_n").space;
    // Complement of (-2, 2): two rays with exact distance forms.
    SetDescriptor outside("outside(-2,2)", [](const PointValue& p) {
        const double x = p.as_real();
        return !(x > -2.0 && x < 2.0);
    });
    outside.with_dist_to([](const PointValue& p) {
        const double x = p.as_real();
        return std::min(interval_dist_to(RealMetric::DN, Interval::lower_ray(-2.0), x),
                        interval_dist_to(RealMetric::DN, Interval::upper_ray(2.0), x));
    });
    Rng rng(1);
    const SetDistance d = set_dist_to(line, outside, PointValue::real(0.5), rng);
    CHECK(d.value == 1.5);
    CHECK(d.exact);

    const QPSpace& sorg = zoo_entry("sorgenfrey_rho_s").space;
    const SetDescriptor ray = interval_set(RealMetric::SorgS, Interval::upper_ray(2.0),
                                           sorg.carrier());
    Rng rng2(1);
    CHECK(set_dist_to(sorg, ray, PointValue::real(0.5), rng2).value == 1.5);
    CHECK(set_dist_from(sorg, ray, PointValue::real(0.5), rng2).value == 1.0);
}

TEST_CASE("axiom checks flag violations") {
    const Carrier carrier = Carrier::reals(-10.0, 10.0);
    const QPSpace skew("skew", carrier, [](const PointValue& x, const PointValue& y) {
        return y.as_real() - x.as_real();
    });
    AxiomCheckOptions opt;
    opt.samples = 200;
    const AxiomReport rep = check_axioms(skew, opt);
    CHECK_FALSE(rep.negativity_failures.empty());
    CHECK(rep.negativity_failures.front().value < 0.0);

    const QPSpace squared("squared", carrier, [](const PointValue& x, const PointValue& y) {
        const double d = x.as_real() - y.as_real();
        return d * d;
    });
    const AxiomReport rep2 = check_axioms(squared, opt);
    CHECK_FALSE(rep2.triangle_failures.empty());
    const TriangleWitness& w = rep2.triangle_failures.front();
    CHECK(w.defect() > 0.0);
    CHECK(squared.dist(w.x, w.y) == w.d_xy);
    CHECK(w.d_xy > w.d_xz + w.d_zy);

    AxiomCheckOptions sep = opt;
    sep.require_separation = true;
    const AxiomReport rep3 = check_axioms(zoo_entry("rho_u").space, sep);
    CHECK_FALSE(rep3.separation_failures.empty());
    const AxiomReport rep4 = check_axioms(zoo_entry("d_n").space, sep);
    CHECK(rep4.pass());
}

TEST_CASE("point json round trip") {
    const std::vector<PointValue> points = {
        PointValue::real(2.5),
        PointValue::nat(7),
        PointValue::plane(0.25, -1.0),
        PointValue::hedgehog_apex(),
        PointValue::hedgehog(0.5, 3),
        PointValue::comb_hand(0.125),
        PointValue::comb_tooth(Rational(1, 2), 0.75),
        PointValue::node(4),
    };
    for (const PointValue& p : points) {
        const PointValue back = point_from_json(point_to_json(p));
        CHECK(back == p);
    }
    CHECK(point_from_json(json(1.5)) == PointValue::real(1.5));
    CHECK_THROWS_AS(point_from_json(json{{"bogus", 1}}), ConfigError);
    CHECK_THROWS_AS(point_from_json(json("text")), ConfigError);
}

TEST_CASE("report serialization") {
    VerificationReport rep;
    rep.config = json{{"suite", "axioms"}};
    rep.add(CheckResult::pass("zeta", json{{"n", 3}}));
    rep.add(CheckResult::fail("alpha", json{{"x", 1}}, json{{"n", 1}}));
    rep.add(CheckResult::inconclusive("mid", json{{"note", "thin"}}));
    rep.sort_checks();
    CHECK(rep.checks.front().id == "alpha");
    CHECK(rep.any_fail());
    CHECK(rep.any_inconclusive());
    CHECK_FALSE(rep.all_pass());

    const json j = rep.to_json();
    CHECK(j.at("schema") == "qmb-report/1");
    CHECK(j.at("verdict") == "fail");
    CHECK(j.at("perCheck").size() == 3);
    CHECK(j.at("perCheck").at(0).at("checkId") == "alpha");
    CHECK(j.dump() == rep.to_json().dump());

    const std::string text = rep.to_text();
    CHECK(text.find("alpha: fail") != std::string::npos);
    CHECK(text.find("verdict: fail") != std::string::npos);
}

TEST_CASE("seeded substreams are stable") {
    Rng a = substream(42, "alpha");
    Rng b = substream(42, "alpha");
    Rng c = substream(42, "beta");
    const std::uint64_t va = a.next_u64();
    CHECK(va == b.next_u64());
    CHECK(va != c.next_u64());
    Rng unit(7);
    for (int i = 0; i < 100; ++i) {
        const double u = unit.next_unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("carrier windows and canonical points") {
    const Carrier wide = Carrier::reals(-100.0, 100.0);
    const Carrier narrow = wide.with_window(-2.0, 2.0);
    CHECK(narrow.window_lo() == -2.0);
    CHECK(narrow.window_hi() == 2.0);
    for (const PointValue& p : narrow.canonical_points())
        CHECK(std::fabs(p.as_real()) <= 2.0);
    Rng rng(3);
    for (int i = 0; i < 50; ++i) CHECK(std::fabs(narrow.sample(rng).as_real()) <= 2.0);
    CHECK(wide.compatible(narrow));
    CHECK_FALSE(wide.compatible(Carrier::naturals(8)));
}
