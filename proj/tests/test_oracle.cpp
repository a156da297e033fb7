#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "qmb/errors.hpp"
#include "qmb/oracle.hpp"

using namespace qmb;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

WeightedDigraph three_node_path() {
    WeightedDigraph g(3);
    g.set_weight(0, 1, 1.0);
    g.set_weight(1, 2, 1.0);
    return g;
}
}  // namespace

TEST_CASE("closure of a directed path") {
    const FiniteQPSpace space = closure(three_node_path());
    CHECK(space.size == 3);
    CHECK(space.at(0, 1) == 1.0);
    CHECK(space.at(1, 2) == 1.0);
    CHECK(space.at(0, 2) == 2.0);
    CHECK(space.at(1, 0) == kUnreachableCap);
    CHECK(space.at(2, 0) == kUnreachableCap);
    CHECK(space.at(2, 1) == kUnreachableCap);
    CHECK(space.capped_pairs == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(space.at(i, i) == 0.0);
}

TEST_CASE("closure shortcuts beat direct edges") {
    WeightedDigraph g(4);
    g.set_weight(0, 3, 10.0);
    g.set_weight(0, 1, 1.0);
    g.set_weight(1, 2, 1.0);
    g.set_weight(2, 3, 1.0);
    g.set_weight(3, 0, 0.5);
    const FiniteQPSpace space = closure(g);
    CHECK(space.at(0, 3) == 3.0);
    CHECK(space.at(3, 1) == 1.5);
    CHECK(space.capped_pairs == 0);
}

TEST_CASE("digraph guards") {
    WeightedDigraph g(3);
    CHECK_THROWS_AS(g.set_weight(0, 0, 1.0), ContractViolationError);
    CHECK_THROWS_AS(g.set_weight(0, 1, -1.0), ContractViolationError);
    CHECK_THROWS_AS(g.set_weight(0, 1, std::nan("")), ContractViolationError);
    g.set_weight(0, 1, 2.0);
    CHECK(g.edge_count() == 1);
    g.set_weight(0, 1, kInf);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("text round trip") {
    const WeightedDigraph g = random_digraph(6, 0.5, 7);
    const std::string text = g.to_text();
    const WeightedDigraph back = WeightedDigraph::from_text(text);
    REQUIRE(back.size() == g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) {
            const double a = g.weight(i, j);
            const double b = back.weight(i, j);
            if (std::isinf(a))
                CHECK(std::isinf(b));
            else
                CHECK(a == b);
        }
    CHECK(back.to_text() == text);

    CHECK_THROWS_AS(WeightedDigraph::from_text(""), ConfigError);
    CHECK_THROWS_AS(WeightedDigraph::from_text("2\n0 1\n"), ConfigError);
    CHECK_THROWS_AS(WeightedDigraph::from_text("1\nbanana\n"), ConfigError);
}

TEST_CASE("random digraphs are reproducible") {
    const WeightedDigraph a = random_digraph(8, 0.4, 123);
    const WeightedDigraph b = random_digraph(8, 0.4, 123);
    CHECK(a.to_text() == b.to_text());
    const WeightedDigraph c = random_digraph(8, 0.4, 124);
    CHECK(a.to_text() != c.to_text());
    CHECK_THROWS_AS(random_digraph(kMaxOracleNodes + 1, 0.4, 0), ConfigError);
}

TEST_CASE("triangle audit") {
    const FiniteQPSpace space = closure(random_digraph(8, 0.6, 42));
    const TriangleAuditResult good = triangle_audit(space);
    CHECK(good.pass);
    CHECK(good.triples == 8 * 8 * 8);

    FiniteQPSpace broken;
    broken.size = 3;
    broken.d = {0.0, 1.0, 5.0,
                1.0, 0.0, 1.0,
                5.0, 1.0, 0.0};
    const TriangleAuditResult bad = triangle_audit(broken);
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.witness.has_value());
    const TriangleWitness& w = *bad.witness;
    CHECK(w.d_xy > w.d_xz + w.d_zy);
}

TEST_CASE("closure is idempotent") {
    for (std::uint64_t seed : {1, 2, 3}) {
        const WeightedDigraph g = random_digraph(7, 0.35, seed);
        const FiniteQPSpace once = closure(g);
        WeightedDigraph again(once.size);
        for (std::size_t i = 0; i < once.size; ++i)
            for (std::size_t j = 0; j < once.size; ++j)
                if (i != j) again.set_weight(i, j, once.at(i, j));
        const FiniteQPSpace twice = closure(again);
        CHECK(twice.d == once.d);
    }
}

TEST_CASE("finite spaces drive the sampling library") {
    const FiniteQPSpace space = closure(random_digraph(6, 0.5, 9));
    const QPSpace qp = as_qpspace(space, "finite");
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            CHECK(qp.dist(PointValue::node(i), PointValue::node(j)) == space.at(i, j));

    const double r = 3.0;
    const std::vector<std::size_t> ball = brute_ball(space, 2, r);
    for (std::size_t j = 0; j < 6; ++j) {
        const bool inside =
            std::find(ball.begin(), ball.end(), j) != ball.end();
        CHECK(inside == ball_contains(qp, PointValue::node(2), r, PointValue::node(j)));
    }
}

TEST_CASE("node sets give exact sampled distances") {
    const FiniteQPSpace space = closure(random_digraph(6, 0.5, 11));
    const QPSpace qp = as_qpspace(space, "finite");
    const std::vector<std::size_t> members = {0, 2, 5};
    const SetDescriptor set = node_set(members, "set");
    Rng rng(5);
    for (std::size_t j = 0; j < 6; ++j) {
        const SetDistance from = set_dist_from(qp, set, PointValue::node(j), rng);
        const SetDistance to = set_dist_to(qp, set, PointValue::node(j), rng);
        CHECK(from.value == brute_set_dist_from(space, members, j));
        CHECK(to.value == brute_set_dist_to(space, j, members));
    }
}

TEST_CASE("cross check finds no disagreements") {
    for (std::uint64_t seed : {0, 5, 17}) {
        const FiniteQPSpace space = closure(random_digraph(5 + seed % 3, 0.5, seed));
        const VerificationReport report = cross_check(space, seed);
        CHECK(report.all_pass());
        for (const CheckResult& check : report.checks)
            CHECK(check.status == CheckStatus::Pass);
    }
}
