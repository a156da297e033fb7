#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qmb/errors.hpp"
#include "qmb/metrization.hpp"
#include "qmb/zoo.hpp"

using namespace qmb;

namespace {
const QPSpace& space_of(const char* id) { return zoo_entry(id).space; }

CharFunction relu_char() {
    return CharFunction("relu", [](const PointValue& p) {
        return std::max(p.as_real(), 0.0);
    });
}

BaseSequence symmetric_base(const Carrier& carrier) {
    return interval_base(RealMetric::DN, carrier, "symmetric", [](std::size_t n) {
        const double r = static_cast<double>(n);
        return Interval::open(-r, r);
    });
}

PointValue r(double x) { return PointValue::real(x); }
}  // namespace

TEST_CASE("characteristic quasi-metric frozen values") {
    const QPSpace based = truncate(space_of("d_n"), 1.0);
    const QPSpace rho = quasimetric_from_char(based, relu_char());
    CHECK(rho.dist(r(0.0), r(2.0)) == 3.0);
    CHECK(rho.dist(r(2.0), r(0.0)) == 1.0);
    CHECK(rho.dist(r(-3.0), r(-1.0)) == 1.0);
    CHECK(rho.dist(r(0.25), r(0.75)) == 1.0);
    CHECK(rho.dist(r(0.0), r(0.0)) == 0.0);
}

TEST_CASE("metric variant reproduces the spread metric") {
    const QPSpace based = truncate(space_of("d_n"), 1.0);
    const QPSpace m = metric_from_char(based, relu_char());
    const QPSpace& reference = space_of("d_u");
    for (double x : {-5.0, -0.5, 0.0, 1.25, 3.0})
        for (double y : {-2.0, 0.0, 0.25, 7.0})
            CHECK(m.dist(r(x), r(y)) == reference.dist(r(x), r(y)));
    CHECK(m.dist(r(-5.0), r(3.0)) == 4.0);
    CHECK_THROWS_AS(metric_from_char(space_of("sorgenfrey_rho_s"), relu_char()),
                    AsymmetryError);
}

TEST_CASE("doubled gap variant") {
    const QPSpace dg = dg_from_char(space_of("d_n"), relu_char());
    CHECK(dg.dist(r(-5.0), r(3.0)) == 4.0);
    CHECK(dg.dist(r(3.0), r(-5.0)) == 1.0);
    CHECK(dg.dist(r(0.1), r(0.2)) == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("forcing from a point") {
    const QPSpace& sorg = space_of("sorgenfrey_rho_s");
    const CharFunction f = forcing_from_point(sorg, r(0.0));
    CHECK(f(r(2.0)) == 2.0);
    CHECK(f(r(-2.0)) == 1.0);
    CHECK_THROWS_AS(forcing_from_point(sorg, PointValue::nat(1)), CarrierMismatchError);
}

TEST_CASE("staircase construction frozen values") {
    const QPSpace& line = space_of("d_n");
    ChiOptions opt;
    opt.seed = 11;
    const ChiConstruction chi =
        chi_from_base(line, symmetric_base(line.carrier()), 1.0, opt);
    CHECK(chi.delta() == 1.0);
    CHECK(chi.band(r(0.0)) == 1);
    CHECK(chi.band(r(1.5)) == 2);
    CHECK(chi.band(r(2.5)) == 3);
    CHECK(chi.band(r(-3.25)) == 4);
    CHECK(chi.chi(r(0.0)) == 0.0);
    CHECK(chi.chi(r(0.99)) == 0.0);
    CHECK(chi.chi(r(1.5)) == 0.5);
    CHECK(chi.chi(r(2.5)) == 1.5);
    CHECK(chi.chi(r(-3.25)) == 2.25);
    CHECK(chi.phi(0, r(500.0)) == 1.0);
    const CharFunction fn = chi.chi_function();
    CHECK(fn(r(1.5)) == 0.5);
}

TEST_CASE("staircase guards") {
    const QPSpace& line = space_of("d_n");
    ChiOptions small;
    small.band_budget = 4;
    small.validate = false;
    const ChiConstruction chi =
        chi_from_base(line, symmetric_base(line.carrier()), 1.0, small);
    CHECK(chi.band(r(2.0)) == 3);
    CHECK_THROWS_AS(chi.band(r(10.0)), BandAssignmentError);

    const BaseSequence full("full", [](std::size_t) {
        return SetDescriptor("line", [](const PointValue&) { return true; });
    });
    CHECK_THROWS_AS(chi_from_base(line, full, 1.0, ChiOptions{}), ConfigError);
    CHECK_THROWS_AS(chi_from_base(line, symmetric_base(line.carrier()), 0.0, ChiOptions{}),
                    ConfigError);
}

TEST_CASE("induced rho agrees locally and spreads bands") {
    const QPSpace& line = space_of("d_n");
    ChiOptions opt;
    opt.seed = 12;
    const ChiConstruction chi =
        chi_from_base(line, symmetric_base(line.carrier()), 1.0, opt);
    const QPSpace rho = rho_from_chi(chi);
    CHECK(rho.dist(r(0.0), r(0.5)) == 0.5);
    CHECK(rho.dist(r(0.25), r(-0.5)) == 0.75);
    CHECK(rho.dist(r(0.0), r(5.0)) == 2.0);
    CHECK(rho.dist(r(5.0), r(0.0)) == 1.0);
    AxiomCheckOptions axioms;
    axioms.samples = 500;
    axioms.seed = 12;
    axioms.require_separation = true;
    CHECK(check_axioms(rho, axioms).pass());
}

TEST_CASE("band oracle staircase") {
    const Carrier window = Carrier::reals(-32.0, 32.0);
    const QPSpace line("line", window, [](const PointValue& a, const PointValue& b) {
        return std::fabs(a.as_real() - b.as_real());
    });
    PsiOracleFn oracles = [window](std::size_t n) {
        const double a = static_cast<double>(n);
        SetDescriptor closure = n == 0
                                    ? SetDescriptor::empty_set("closure(0)")
                                    : interval_set(RealMetric::DN,
                                                   Interval::closed(-a, a), window);
        const double b = a + 1.0;
        SetDescriptor outer("outer", [b](const PointValue& p) {
            const double x = p.as_real();
            return !(x > -b && x < b);
        });
        outer.with_dist_to([b](const PointValue& p) {
            const double x = p.as_real();
            return std::min(interval_dist_to(RealMetric::DN, Interval::lower_ray(-b), x),
                            interval_dist_to(RealMetric::DN, Interval::upper_ray(b), x));
        });
        return PsiBandOracles{std::move(closure), std::move(outer)};
    };
    const CharFunction psi = psi_from_base(line, oracles);
    CHECK(psi(r(0.0)) == 1.0);
    CHECK(psi(r(0.5)) == 1.0);
    CHECK(psi(r(1.5)) == 1.5);
    CHECK(psi(r(-2.25)) == 2.25);
    CHECK(psi(r(7.0)) == 7.0);
}

TEST_CASE("uniform continuity witnesses unbounded slope") {
    const QPSpace& line = space_of("d_n");
    const CharFunction square("square", [](const PointValue& p) {
        const double x = p.as_real();
        return x * x;
    });
    UniformCheckOptions opt;
    opt.eps_grid = default_dyadic_grid();
    opt.delta_grid = default_dyadic_grid();
    opt.samples = 600;
    opt.seed = 13;
    const UniformContinuityResult res = uniform_continuity_check(line, square, opt);
    CHECK_FALSE(res.pass);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->f_diff >= res.witness->eps);
    CHECK(std::fabs(square(res.witness->y) - square(res.witness->x)) == res.witness->f_diff);
}

TEST_CASE("equivalence versus local identity") {
    const QPSpace& line = space_of("d_n");
    const QPSpace doubled("doubled", line.carrier(),
                          [](const PointValue& a, const PointValue& b) {
                              return 2.0 * std::fabs(a.as_real() - b.as_real());
                          });
    UniformCheckOptions opt;
    opt.eps_grid = default_dyadic_grid();
    opt.delta_grid = default_dyadic_grid();
    opt.delta_grid.push_back(opt.delta_grid.back() / 2.0);
    opt.samples = 600;
    opt.seed = 14;
    const UniformEquivalenceResult eq = uniform_equivalence_check(line, doubled, opt);
    CHECK(eq.pass);

    const LocallyIdenticalResult local = locally_identical_check(line, doubled, opt);
    CHECK_FALSE(local.pass);
    REQUIRE(local.witness.has_value());
    CHECK(local.witness->rho == 2.0 * local.witness->d);

    const LocallyIdenticalResult self = locally_identical_check(line, line, opt);
    CHECK(self.pass);
    CHECK(self.delta == 1.0);
}

TEST_CASE("uniform equivalence fails across the embedding") {
    UniformCheckOptions opt;
    opt.eps_grid = default_dyadic_grid();
    opt.delta_grid = default_dyadic_grid();
    opt.samples = 1500;
    opt.seed = 15;
    const UniformEquivalenceResult res =
        uniform_equivalence_check(space_of("d_n"), space_of("dplus_n"), opt);
    CHECK_FALSE(res.pass);
    REQUIRE(res.witness.has_value());
    const EquivalenceWitness& w = *res.witness;
    const QPSpace& src = w.direction == 0 ? space_of("d_n") : space_of("dplus_n");
    const QPSpace& dst = w.direction == 0 ? space_of("dplus_n") : space_of("d_n");
    CHECK(src.dist(w.x, w.y) == w.d_source);
    CHECK(dst.dist(w.x, w.y) == w.d_target);
    CHECK(w.d_source < w.d_target);
}
