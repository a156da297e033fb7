#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmb/report.hpp"
#include "qmb/sets.hpp"
#include "qmb/space.hpp"

namespace qmb {

// Distances on unreachable pairs are capped here instead of rejecting
// the graph; capped entries are counted and reported.
constexpr double kUnreachableCap = 65536.0;
constexpr std::size_t kMaxOracleNodes = 64;

// Nonnegative weight matrix with zero diagonal; +inf marks an absent
// edge.
class WeightedDigraph {
public:
    explicit WeightedDigraph(std::size_t size);

    std::size_t size() const { return size_; }
    double weight(std::size_t i, std::size_t j) const { return w_[i * size_ + j]; }
    // Rejects negative, NaN, or diagonal edges; +inf removes the edge.
    void set_weight(std::size_t i, std::size_t j, double w);
    std::size_t edge_count() const;

    std::string to_text() const;
    static WeightedDigraph from_text(const std::string& text);

private:
    std::size_t size_;
    std::vector<double> w_;
};

// Exact finite quasi-pseudometric: zero diagonal, triangle inequality
// auditable with zero tolerance.
struct FiniteQPSpace {
    std::size_t size = 0;
    std::vector<double> d;
    std::size_t capped_pairs = 0;  // unreachable pairs capped to kUnreachableCap

    double at(std::size_t i, std::size_t j) const { return d[i * size + j]; }
};

// Min-plus transitive closure (all-pairs shortest paths): the largest
// quasi-pseudometric dominated by the weights.
FiniteQPSpace closure(const WeightedDigraph& g);

std::vector<std::size_t> brute_ball(const FiniteQPSpace& space, std::size_t center, double r);
// inf over a in A of d(a, j) / d(j, a); +inf for empty A.
double brute_set_dist_from(const FiniteQPSpace& space, const std::vector<std::size_t>& a,
                           std::size_t j);
double brute_set_dist_to(const FiniteQPSpace& space, std::size_t j,
                         const std::vector<std::size_t>& a);
std::vector<std::size_t> brute_neighborhood(const FiniteQPSpace& space,
                                            const std::vector<std::size_t>& a, double delta);

struct TriangleAuditResult {
    bool pass = false;
    std::size_t triples = 0;
    std::optional<TriangleWitness> witness;
};

// Exhaustive, zero-tolerance audit of d(i,j) <= d(i,k) + d(k,j).
TriangleAuditResult triangle_audit(const FiniteQPSpace& space);

// Edge present with probability `density`, weight uniform over the grid
// {k/1024 : 1 <= k <= 10240} so closure sums stay exact in doubles.
WeightedDigraph random_digraph(std::size_t size, double density, std::uint64_t seed);

QPSpace as_qpspace(const FiniteQPSpace& space, const std::string& label);

// Subset of nodes as a SetDescriptor.  No closed-form distances: the
// sampler cycles through the members deterministically, so a sampled
// infimum over at least |nodes| draws is exact.
SetDescriptor node_set(const std::vector<std::size_t>& nodes, const std::string& label);

// Exhaustively compares the sampling library against brute force on one
// finite space: distances, conjugate/symmetrize algebra, balls, set
// distances, neighborhoods, and boundedness.
VerificationReport cross_check(const FiniteQPSpace& space, std::uint64_t seed);

}  // namespace qmb
