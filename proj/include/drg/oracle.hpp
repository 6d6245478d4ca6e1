#pragma once

// Ground truth computed on explicit graphs, independent of every closed form
// in the library: absorbing-chain linear solves in exact rationals, a
// floating-point resistance solve, exact distribution evolution, and seeded
// Monte Carlo walks. Nothing here reads potentials, spectra, or any other
// array-side machinery.

#include "drg/graph.hpp"
#include "drg/intersection_array.hpp"
#include "drg/numbers.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace drg {

// Mean hitting times to target, every start; 0 at the target itself.
std::vector<BigRational> exact_hitting(const ExplicitGraph& g, int target);

struct HittingMomentsOracle {
    std::vector<BigRational> H;   // first moments
    std::vector<BigRational> M2;  // second moments E[tau^2]
};

HittingMomentsOracle exact_hitting_moments(const ExplicitGraph& g, int target);

// Effective resistance between x and y with unit resistors on the edges, by a
// floating grounded-Laplacian solve; the residual is checked against 1e-10.
double exact_resistance(const ExplicitGraph& g, int x, int y);

// Harmonic extension of fixed boundary values: the unique function with the
// given values on the boundary vertices and zero Laplacian elsewhere. With an
// indicator boundary this is the probability of hitting that vertex first.
std::vector<BigRational> absorbing_values(
    const ExplicitGraph& g, const std::vector<std::pair<int, BigRational>>& boundary);

// Expected visits to each vertex before the walk from start reaches the
// absorbing set; time 0 counts as a visit to the start.
std::vector<BigRational> expected_visits(const ExplicitGraph& g,
                                         const std::vector<int>& absorbing, int start);

// Exact distribution of the (optionally lazy) walk after t steps from start.
std::vector<BigRational> graph_evolve(const ExplicitGraph& g, int start, int t,
                                      const BigRational& laziness = BigRational(0));

struct SimSummary {
    long long samples = 0;
    double mean = 0.0;
    double variance = 0.0;   // unbiased sample variance
    double std_error = 0.0;  // sqrt(variance / samples)
};

// All simulations: at least 100 samples, one RNG substream per sample, so
// results are identical regardless of the thread count. DRG_WALK_THREADS
// caps the worker pool.
SimSummary simulate_hitting(const ExplicitGraph& g, int from, int to, long long samples,
                            std::uint64_t seed);

// Steps until every vertex has been seen, time 0 counting as a visit.
SimSummary simulate_cover(const ExplicitGraph& g, int from, long long samples,
                          std::uint64_t seed);

struct VisitSimulation {
    SimSummary indicator;  // walk from v touched w (at time >= 1) before reaching u
    SimSummary count;      // visits to w before reaching u
    SimSummary distinct;   // distinct vertices other than u seen at times >= 1
};

VisitSimulation simulate_visits(const ExplicitGraph& g, int v, int w, int u, long long samples,
                                std::uint64_t seed);

// Hitting-time sampler on the distance chain itself: exact in law for the
// distance from a fixed target, so it covers arrays with no explicit model.
SimSummary simulate_projected_hitting(const IntersectionArray& arr, int from_shell,
                                      long long samples, std::uint64_t seed);

} // namespace drg
