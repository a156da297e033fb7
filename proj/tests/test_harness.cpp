#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "qmb/errors.hpp"
#include "qmb/harness.hpp"
#include "qmb/oracle.hpp"
#include "qmb/zoo.hpp"

using namespace qmb;

namespace {
PointValue r(double x) { return PointValue::real(x); }
PointValue nat(std::uint64_t n) { return PointValue::nat(n); }

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("/tmp/qmb_test_" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};
}  // namespace

TEST_CASE("expression composition over the catalog") {
    const ComposedSpace conj = compose_space(json{{"conjugate", "ex1_6"}});
    CHECK(conj.zoo_id == "ex1_6");
    CHECK_FALSE(conj.real_metric.has_value());
    CHECK(conj.space.dist(nat(3), nat(5)) == 32.0);
    CHECK(conj.space.dist(nat(5), nat(3)) == 8.0);

    const ComposedSpace sym = compose_space(json{{"symmetrize", "rho_u"}});
    CHECK(sym.space.dist(r(2.0), r(-1.0)) == 3.0);
    CHECK(sym.space.dist(r(-1.0), r(2.0)) == 3.0);
    CHECK_FALSE(sym.separating);
    CHECK(compose_space(json{{"symmetrize", "d_n"}}).separating);

    const ComposedSpace cut =
        compose_space(json{{"truncate", {{"of", "d_n"}, {"cap", 1.0}}}});
    const QPSpace& reference = zoo_entry("d_n_1").space;
    for (double x : {-4.0, -0.25, 0.0, 0.5, 3.0})
        for (double y : {-1.0, 0.0, 0.75, 6.0})
            CHECK(cut.space.dist(r(x), r(y)) == reference.dist(r(x), r(y)));
    CHECK(cut.real_metric.has_value());
}

TEST_CASE("characteristic and staircase composition") {
    const ComposedSpace from_char = compose_space(json{
        {"fromChar",
         {{"of", {{"truncate", {{"of", "d_n"}, {"cap", 1.0}}}}},
          {"char", {{"kind", "relu"}}}}}});
    CHECK(from_char.space.dist(r(0.0), r(2.0)) == 3.0);
    CHECK(from_char.space.dist(r(2.0), r(0.0)) == 1.0);

    const ComposedSpace dg = compose_space(json{
        {"dg", {{"of", "d_n"}, {"char", {{"kind", "relu"}}}}}});
    CHECK(dg.space.dist(r(-5.0), r(3.0)) == 4.0);

    const ComposedSpace rho = compose_space(json{
        {"rhoFromChi",
         {{"of", "d_n"},
          {"base", {{"kind", "symmetric_intervals"}}},
          {"delta", 1.0}}}});
    CHECK(rho.space.dist(r(0.0), r(0.5)) == 0.5);
    CHECK(rho.space.dist(r(0.0), r(5.0)) == 2.0);
    CHECK(rho.expr.contains("rhoFromChi"));
}

TEST_CASE("finite expression reads a digraph file") {
    WeightedDigraph g(3);
    g.set_weight(0, 1, 1.0);
    g.set_weight(1, 2, 1.0);
    const TempFile file("finite.txt", g.to_text());
    const ComposedSpace fin = compose_space(json{{"finite", file.path}});
    CHECK(fin.space.dist(PointValue::node(0), PointValue::node(2)) == 2.0);
    CHECK(fin.space.dist(PointValue::node(2), PointValue::node(0)) == kUnreachableCap);
    CHECK_FALSE(fin.zoo_id.has_value());
}

TEST_CASE("expression errors") {
    CHECK_THROWS_AS(compose_space(json{{"warp", "d_n"}}), ConfigError);
    CHECK_THROWS_AS(compose_space(json("no_such_space")), ConfigError);
    CHECK_THROWS_AS(compose_space(json{{"truncate", {{"of", "d_n"}, {"cap", 0.0}}}}),
                    ConfigError);
    CHECK_THROWS_AS(compose_space(json{{"finite", "/tmp/qmb_missing_digraph.txt"}}),
                    ConfigError);
    CHECK_THROWS_AS(compose_space(json{
                        {"fromChar", {{"of", "ex1_6"}, {"char", {{"kind", "relu"}}}}}}),
                    ConfigError);
}

TEST_CASE("characteristic specs") {
    const ComposedSpace line = compose_space(json("d_n"));
    const CharFunction abs_fn = char_from_spec(line.space, json{{"kind", "abs"}});
    CHECK(abs_fn(r(-3.5)) == 3.5);
    const CharFunction c = char_from_spec(line.space, json{{"kind", "const"}, {"value", 2.0}});
    CHECK(c(r(9.0)) == 2.0);
    const CharFunction f = char_from_spec(
        line.space, json{{"kind", "distanceFrom"}, {"point", 1.0}});
    CHECK(f(r(4.0)) == 3.0);
    CHECK_THROWS_AS(char_from_spec(line.space, json{{"kind", "const"}, {"value", -1.0}}),
                    ConfigError);
    CHECK_THROWS_AS(
        char_from_spec(line.space, json{{"kind", "distanceFrom"}, {"point", {{"nat", 2}}}}),
        ConfigError);
    CHECK_THROWS_AS(char_from_spec(line.space, json{{"kind", "mystery"}}), ConfigError);
}

TEST_CASE("base specs") {
    const ComposedSpace line = compose_space(json("d_n"));
    const BaseSequence open_base =
        base_from_spec(line, json{{"kind", "symmetric_intervals"}});
    CHECK(open_base.at(0).is_empty());
    CHECK(open_base.at(2).contains(r(1.9)));
    CHECK_FALSE(open_base.at(2).contains(r(2.0)));

    const BaseSequence balls = base_from_spec(
        line, json{{"kind", "metric_balls"}, {"center", 0.0}});
    CHECK(balls.at(0).is_empty());
    CHECK(balls.at(1).contains(r(0.5)));

    const ComposedSpace nats = compose_space(json("ex1_6"));
    CHECK_THROWS_AS(
        base_from_spec(nats, json{{"kind", "metric_balls"}, {"center", 0.5}}),
        ConfigError);
    CHECK_THROWS_AS(base_from_spec(line, json{{"kind", "attached"}, {"id", "nope"}}),
                    ConfigError);

    const ComposedSpace forced = compose_space(json("sorgenfrey_rho_s"));
    const BaseSequence attached =
        base_from_spec(forced, json{{"kind", "attached"}, {"id", "lb"}});
    CHECK(attached.at(0).is_empty());
    CHECK(attached.at(1).contains(r(5.0)));
    CHECK_FALSE(attached.at(1).contains(r(-1.0)));
}

TEST_CASE("suite configuration parsing") {
    const SuiteConfig defaults = SuiteConfig::from_json(
        json{{"suite", "axioms"}, {"target", "d_n"}});
    CHECK(defaults.samples == 2000);
    CHECK(defaults.tol == 1e-9);
    CHECK(defaults.eps_grid.size() == 13);
    CHECK(defaults.eps_grid.front() == 1.0);
    CHECK(defaults.eps_grid.back() == 0x1p-12);
    CHECK_FALSE(defaults.grids_explicit);

    const SuiteConfig grids = SuiteConfig::from_json(
        json{{"suite", "axioms"}, {"target", "d_n"}, {"grids", {0.5, 1.0, 0.25}}});
    CHECK(grids.grids_explicit);
    CHECK(grids.eps_grid == std::vector<double>{1.0, 0.5, 0.25});
    CHECK(grids.delta_grid == grids.eps_grid);

    CHECK_THROWS_AS(SuiteConfig::from_json(json{{"suite", "axioms"}, {"mystery", 1}}),
                    ConfigError);
    CHECK_THROWS_AS(
        SuiteConfig::from_json(json{{"suite", "axioms"}, {"grids", {0.5, -1.0}}}),
        ConfigError);
    CHECK_THROWS_AS(SuiteConfig::from_json(json::array()), ConfigError);

    const json echo = grids.to_json();
    CHECK(echo["suite"] == "axioms");
    CHECK(SuiteConfig::from_json(echo).to_json() == echo);
}

TEST_CASE("suite reports are deterministic and sorted") {
    SuiteConfig cfg;
    cfg.suite = "conjugation";
    cfg.target = json("ex1_6");
    cfg.samples = 400;
    cfg.seed = 21;
    const VerificationReport first = run_suite(cfg);
    const VerificationReport second = run_suite(cfg);
    CHECK(first.all_pass());
    CHECK(first.to_json().dump(2) == second.to_json().dump(2));
    for (std::size_t i = 1; i < first.checks.size(); ++i)
        CHECK(first.checks[i - 1].id < first.checks[i].id);
}

TEST_CASE("failure witnesses replay from the report") {
    SuiteConfig cfg;
    cfg.suite = "uniform-equivalence";
    cfg.target = json("d_n");
    cfg.second = json("dplus_n");
    cfg.samples = 1500;
    cfg.seed = 3;
    const VerificationReport report = run_suite(cfg);
    CHECK(report.any_fail());
    const json j = report.to_json();
    CHECK(j["schema"] == "qmb-report/1");
    CHECK(j["verdict"] == "fail");
    const json& witness = j["perCheck"][0]["witness"];
    const PointValue x = point_from_json(witness["x"]);
    const PointValue y = point_from_json(witness["y"]);
    const QPSpace& dn = zoo_entry("d_n").space;
    const QPSpace& dplus = zoo_entry("dplus_n").space;
    const bool forward = witness["direction"] == "forward";
    const QPSpace& src = forward ? dn : dplus;
    const QPSpace& dst = forward ? dplus : dn;
    CHECK(src.dist(x, y) == witness["dSource"].get<double>());
    CHECK(dst.dist(x, y) == witness["dTarget"].get<double>());
    CHECK(dst.dist(x, y) >= witness["eps"].get<double>());
}

TEST_CASE("suite errors") {
    SuiteConfig cfg;
    cfg.suite = "no-such-suite";
    cfg.target = json("d_n");
    CHECK_THROWS_AS(run_suite(cfg), ConfigError);
    cfg.suite = "uniform-equivalence";
    cfg.second = json();
    CHECK_THROWS_AS(run_suite(cfg), ConfigError);
    cfg.suite = "oracle";
    cfg.target = json("/tmp/qmb_missing_digraph.txt");
    CHECK_THROWS_AS(run_suite(cfg), ConfigError);
}

TEST_CASE("oracle suite runs on a digraph file") {
    const TempFile file("oracle.txt", random_digraph(6, 0.5, 3).to_text());
    SuiteConfig cfg;
    cfg.suite = "oracle";
    cfg.target = json(file.path);
    cfg.seed = 3;
    const VerificationReport report = run_suite(cfg);
    CHECK(report.all_pass());
    CHECK(report.checks.size() >= 8);
}

TEST_CASE("zoo listing") {
    const json listing = list_zoo();
    CHECK(listing["schema"] == "qmb-zoo/1");
    const json& spaces = listing["spaces"];
    CHECK(spaces.size() >= 12);
    bool saw_partner = false;
    for (const json& entry : spaces) {
        CHECK(entry.contains("id"));
        CHECK(entry.contains("class"));
        CHECK(entry.contains("carrier"));
        CHECK(entry.contains("notes"));
        CHECK(entry.contains("expected"));
        if (entry.contains("conjugatePartner")) saw_partner = true;
    }
    CHECK(saw_partner);
}

TEST_CASE("chi construction report") {
    const json out =
        construct_chi("d_n", json{{"kind", "symmetric_intervals"}}, 1.0);
    CHECK(out["schema"] == "qmb-chi/1");
    CHECK(out["delta"] == 1.0);
    REQUIRE(out["values"].is_array());
    bool saw_zero = false;
    for (const json& row : out["values"]) {
        if (point_from_json(row["point"]).as_real() == 0.0) {
            CHECK(row["chi"] == 0.0);
            CHECK(row["band"] == 1);
            saw_zero = true;
        }
    }
    CHECK(saw_zero);
}
