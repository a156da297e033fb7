#include "qmb/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

#include "qmb/bornology.hpp"
#include "qmb/errors.hpp"
#include "qmb/rng.hpp"

namespace qmb {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

WeightedDigraph::WeightedDigraph(std::size_t size) : size_(size) {
    if (size == 0 || size > kMaxOracleNodes)
        throw ConfigError("digraph size must be in [1, " + std::to_string(kMaxOracleNodes) +
                          "], got " + std::to_string(size));
    w_.assign(size * size, kInf);
    for (std::size_t i = 0; i < size; ++i) w_[i * size + i] = 0.0;
}

void WeightedDigraph::set_weight(std::size_t i, std::size_t j, double w) {
    if (i >= size_ || j >= size_) throw ConfigError("digraph index out of range");
    if (i == j) {
        if (w != 0.0) throw ContractViolationError("digraph diagonal must stay zero");
        return;
    }
    if (std::isnan(w) || w < 0.0)
        throw ContractViolationError("digraph weights must be nonnegative");
    w_[i * size_ + j] = w;
}

std::size_t WeightedDigraph::edge_count() const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = 0; j < size_; ++j)
            if (i != j && std::isfinite(w_[i * size_ + j])) ++count;
    return count;
}

std::string WeightedDigraph::to_text() const {
    std::ostringstream os;
    os.precision(17);
    os << size_ << "\n";
    for (std::size_t i = 0; i < size_; ++i) {
        for (std::size_t j = 0; j < size_; ++j) {
            if (j) os << ' ';
            const double w = weight(i, j);
            if (std::isinf(w))
                os << "inf";
            else
                os << w;
        }
        os << "\n";
    }
    return os.str();
}

WeightedDigraph WeightedDigraph::from_text(const std::string& text) {
    std::istringstream is(text);
    std::size_t n = 0;
    if (!(is >> n)) throw ConfigError("digraph text must start with the node count");
    WeightedDigraph g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::string token;
            if (!(is >> token))
                throw ConfigError("digraph text ended early at row " + std::to_string(i));
            if (token == "inf") {
                if (i == j) throw ContractViolationError("digraph diagonal must stay zero");
                continue;
            }
            double w = 0.0;
            try {
                w = std::stod(token);
            } catch (const std::exception&) {
                throw ConfigError("bad digraph entry '" + token + "'");
            }
            if (i == j) {
                if (w != 0.0) throw ContractViolationError("digraph diagonal must stay zero");
            } else {
                g.set_weight(i, j, w);
            }
        }
    }
    return g;
}

FiniteQPSpace closure(const WeightedDigraph& g) {
    const std::size_t n = g.size();
    FiniteQPSpace out;
    out.size = n;
    out.d.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.d[i * n + j] = g.weight(i, j);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            const double dik = out.d[i * n + k];
            if (std::isinf(dik)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const double via = dik + out.d[k * n + j];
                if (via < out.d[i * n + j]) out.d[i * n + j] = via;
            }
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (std::isinf(out.d[i * n + j])) {
                out.d[i * n + j] = kUnreachableCap;
                ++out.capped_pairs;
            }
    return out;
}

std::vector<std::size_t> brute_ball(const FiniteQPSpace& space, std::size_t center, double r) {
    if (center >= space.size) throw ConfigError("ball center out of range");
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < space.size; ++j)
        if (space.at(center, j) < r) out.push_back(j);
    return out;
}

double brute_set_dist_from(const FiniteQPSpace& space, const std::vector<std::size_t>& a,
                           std::size_t j) {
    double best = kInf;
    for (std::size_t i : a) best = std::min(best, space.at(i, j));
    return best;
}

double brute_set_dist_to(const FiniteQPSpace& space, std::size_t j,
                         const std::vector<std::size_t>& a) {
    double best = kInf;
    for (std::size_t i : a) best = std::min(best, space.at(j, i));
    return best;
}

std::vector<std::size_t> brute_neighborhood(const FiniteQPSpace& space,
                                            const std::vector<std::size_t>& a, double delta) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < space.size; ++j)
        if (brute_set_dist_from(space, a, j) < delta) out.push_back(j);
    return out;
}

TriangleAuditResult triangle_audit(const FiniteQPSpace& space) {
    TriangleAuditResult result;
    const std::size_t n = space.size;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                ++result.triples;
                if (space.at(i, j) > space.at(i, k) + space.at(k, j)) {
                    result.witness = TriangleWitness{
                        PointValue::node(i),    PointValue::node(j), PointValue::node(k),
                        space.at(i, j),         space.at(i, k),      space.at(k, j)};
                    result.pass = false;
                    return result;
                }
            }
    result.pass = true;
    return result;
}

WeightedDigraph random_digraph(std::size_t size, double density, std::uint64_t seed) {
    if (density < 0.0 || density > 1.0)
        throw ConfigError("digraph density must lie in [0, 1]");
    WeightedDigraph g(size);
    Rng rng = substream(seed, "digraph:" + std::to_string(size));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
            if (i == j) continue;
            if (!rng.next_bool(density)) continue;
            // Dyadic grid inside (0, 10]: sums stay exact through closure.
            const double w = static_cast<double>(1 + rng.next_index(10240)) / 1024.0;
            g.set_weight(i, j, w);
        }
    return g;
}

QPSpace as_qpspace(const FiniteQPSpace& space, const std::string& label) {
    auto shared = std::make_shared<const FiniteQPSpace>(space);
    DistFn dist = [shared](const PointValue& a, const PointValue& b) {
        return shared->at(a.as_node(), b.as_node());
    };
    return QPSpace(label, Carrier::finite(space.size), std::move(dist));
}

SetDescriptor node_set(const std::vector<std::size_t>& nodes, const std::string& label) {
    if (nodes.empty()) return SetDescriptor::empty_set(label);
    std::vector<std::size_t> sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    SetDescriptor set(label, [sorted](const PointValue& p) {
        return p.is_node() && std::binary_search(sorted.begin(), sorted.end(), p.as_node());
    });
    auto cursor = std::make_shared<std::size_t>(0);
    set.with_sampler([sorted, cursor](Rng&) {
        const std::size_t i = (*cursor)++ % sorted.size();
        return PointValue::node(sorted[i]);
    });
    return set;
}

namespace {

json node_pair_witness(const char* what, std::size_t i, std::size_t j, double expected,
                       double got) {
    return json{{"check", what}, {"i", i}, {"j", j}, {"expected", expected}, {"got", got}};
}

std::vector<std::vector<std::size_t>> subset_pool(std::size_t n, Rng& rng) {
    std::vector<std::vector<std::size_t>> pool;
    if (n <= 10) {
        for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
            std::vector<std::size_t> subset;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t(1) << i)) subset.push_back(i);
            pool.push_back(std::move(subset));
        }
    } else {
        for (std::size_t k = 0; k < 64; ++k) {
            std::vector<std::size_t> subset;
            for (std::size_t i = 0; i < n; ++i)
                if (rng.next_bool(0.5)) subset.push_back(i);
            if (subset.empty()) subset.push_back(rng.next_index(n));
            pool.push_back(std::move(subset));
        }
    }
    return pool;
}

std::string subset_label(const std::vector<std::size_t>& subset) {
    std::string label = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) label += ",";
        label += std::to_string(subset[i]);
    }
    return label + "}";
}

}  // namespace

VerificationReport cross_check(const FiniteQPSpace& space, std::uint64_t seed) {
    VerificationReport report;
    const std::size_t n = space.size;
    const QPSpace qp = as_qpspace(space, "finite(" + std::to_string(n) + ")");
    const QPSpace conj = conjugate(qp);
    const QPSpace sym = symmetrize(qp);
    Rng rng = substream(seed, "cross-check");

    {
        std::optional<json> witness;
        std::size_t compared = 0;
        for (std::size_t i = 0; i < n && !witness; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                ++compared;
                const double lib = qp.dist(PointValue::node(i), PointValue::node(j));
                if (lib != space.at(i, j)) {
                    witness = node_pair_witness("dist", i, j, space.at(i, j), lib);
                    break;
                }
            }
        report.add(witness ? CheckResult::fail("dist-matrix", *witness)
                           : CheckResult::pass("dist-matrix", {{"pairs", compared}}));
    }
    {
        std::optional<json> witness;
        for (std::size_t i = 0; i < n && !witness; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const double c = conj.dist(PointValue::node(i), PointValue::node(j));
                if (c != space.at(j, i)) {
                    witness = node_pair_witness("conjugate", i, j, space.at(j, i), c);
                    break;
                }
                const double s = sym.dist(PointValue::node(i), PointValue::node(j));
                const double expect = std::max(space.at(i, j), space.at(j, i));
                if (s != expect) {
                    witness = node_pair_witness("symmetrize", i, j, expect, s);
                    break;
                }
            }
        report.add(witness ? CheckResult::fail("conjugation-transpose", *witness)
                           : CheckResult::pass("conjugation-transpose", {{"pairs", n * n}}));
    }

    std::vector<double> radii;
    for (double v : space.d)
        if (v > 0.0) radii.push_back(v);
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
    {
        std::vector<double> bumped;
        bumped.push_back(0x1p-10);
        for (double v : radii) {
            bumped.push_back(v);
            bumped.push_back(v + 0x1p-10);
        }
        bumped.push_back(kUnreachableCap + 1.0);
        std::optional<json> witness;
        std::size_t compared = 0;
        for (std::size_t i = 0; i < n && !witness; ++i)
            for (double r : bumped) {
                const auto ball = brute_ball(space, i, r);
                for (std::size_t j = 0; j < n; ++j) {
                    ++compared;
                    const bool lib =
                        ball_contains(qp, PointValue::node(i), r, PointValue::node(j));
                    const bool brute = std::binary_search(ball.begin(), ball.end(), j);
                    if (lib != brute) {
                        witness = json{{"check", "ball"},   {"center", i}, {"radius", r},
                                       {"j", j},            {"brute", brute},
                                       {"library", lib}};
                        break;
                    }
                }
                if (witness) break;
            }
        report.add(witness ? CheckResult::fail("balls", *witness)
                           : CheckResult::pass("balls", {{"memberships", compared}}));
    }

    const auto subsets = subset_pool(n, rng);
    const SampleBudget budget{std::max<std::size_t>(64, n)};
    {
        std::optional<json> witness;
        std::size_t compared = 0;
        for (const auto& subset : subsets) {
            const SetDescriptor set = node_set(subset, subset_label(subset));
            for (std::size_t j = 0; j < n; ++j) {
                ++compared;
                const double lib_from = set_dist_from(qp, set, PointValue::node(j), rng, budget).value;
                const double brute_from = brute_set_dist_from(space, subset, j);
                if (lib_from != brute_from) {
                    witness = json{{"check", "set-dist-from"},
                                   {"subset", subset_label(subset)},
                                   {"j", j},
                                   {"expected", brute_from},
                                   {"got", lib_from}};
                    break;
                }
                const double lib_to = set_dist_to(qp, set, PointValue::node(j), rng, budget).value;
                const double brute_to = brute_set_dist_to(space, j, subset);
                if (lib_to != brute_to) {
                    witness = json{{"check", "set-dist-to"},
                                   {"subset", subset_label(subset)},
                                   {"j", j},
                                   {"expected", brute_to},
                                   {"got", lib_to}};
                    break;
                }
            }
            if (witness) break;
        }
        report.add(witness ? CheckResult::fail("set-distances", *witness)
                           : CheckResult::pass("set-distances", {{"comparisons", compared}}));
    }
    {
        std::vector<double> deltas;
        deltas.push_back(0x1p-10);
        if (!radii.empty()) {
            deltas.push_back(radii[radii.size() / 2] + 0x1p-10);
            deltas.push_back(radii.back() + 0x1p-10);
        }
        std::optional<json> witness;
        std::size_t compared = 0;
        for (const auto& subset : subsets) {
            const SetDescriptor set = node_set(subset, subset_label(subset));
            for (double delta : deltas) {
                const auto hood = brute_neighborhood(space, subset, delta);
                for (std::size_t j = 0; j < n; ++j) {
                    ++compared;
                    const Verdict v =
                        neighborhood_contains(qp, set, delta, PointValue::node(j), rng, budget);
                    const bool brute = std::binary_search(hood.begin(), hood.end(), j);
                    const bool agree =
                        brute ? v == Verdict::DefiniteIn : v != Verdict::DefiniteIn;
                    if (!agree) {
                        witness = json{{"check", "neighborhood"},
                                       {"subset", subset_label(subset)},
                                       {"delta", delta},
                                       {"j", j},
                                       {"brute", brute},
                                       {"library", verdict_name(v)}};
                        break;
                    }
                }
                if (witness) break;
            }
            if (witness) break;
        }
        report.add(witness ? CheckResult::fail("neighborhoods", *witness)
                           : CheckResult::pass("neighborhoods", {{"memberships", compared}}));
    }
    {
        std::optional<json> witness;
        std::size_t checked = 0;
        BoundednessOptions opt;
        opt.max_radius = kUnreachableCap * 4.0;
        opt.seed = seed;
        for (std::size_t s = 0; s < subsets.size(); s += std::max<std::size_t>(1, subsets.size() / 8)) {
            const auto& subset = subsets[s];
            const SetDescriptor set = node_set(subset, subset_label(subset));
            const auto verdict = is_d_bounded(qp, set, opt);
            double sup = 0.0;
            for (std::size_t j : subset) sup = std::max(sup, space.at(subset[0], j));
            ++checked;
            if (verdict.status != Boundedness::Bounded) {
                witness = json{{"check", "boundedness"},
                               {"subset", subset_label(subset)},
                               {"status", boundedness_name(verdict.status)}};
                break;
            }
            if (verdict.witness && verdict.witness->sampled_sup > kUnreachableCap) {
                witness = json{{"check", "boundedness-sup"},
                               {"subset", subset_label(subset)},
                               {"sampledSup", verdict.witness->sampled_sup}};
                break;
            }
        }
        report.add(witness ? CheckResult::fail("boundedness", *witness)
                           : CheckResult::pass("boundedness", {{"subsets", checked}}));
    }
    report.sort_checks();
    return report;
}

}  // namespace qmb
