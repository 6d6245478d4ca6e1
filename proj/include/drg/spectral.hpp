#pragma once

// Spectral decomposition of the distance-collapsed adjacency operator, the
// return generating function built on it, and the exact projected walk with
// its total-variation mixing curve.

#include "drg/intersection_array.hpp"
#include "drg/numbers.hpp"

#include <vector>

namespace drg {

// Tridiagonal collapse of the adjacency operator onto distance shells:
// row i is (c_i, a_i, b_i), so every row sums to the degree k and the matrix
// is k times the one-step kernel of the projected walk.
struct IntersectionMatrix {
    int D = 0;
    std::vector<double> sub;    // sub[i] = c_i, defined for i >= 1
    std::vector<double> diag;   // diag[i] = a_i
    std::vector<double> sup;    // sup[i] = b_i, defined for i <= D-1

    static IntersectionMatrix build(const IntersectionArray& arr);
};

struct SpectralData {
    std::vector<double> eigenvalues;        // strictly descending, size D+1
    std::vector<long long> multiplicities;  // positive integers summing to n
    std::vector<std::vector<double>> u;     // u[r][i], normalized u[r][0] = 1
    std::vector<std::vector<double>> v;     // v[r][i] = k_i u[r][i]
};

// Eigenvalues via the symmetrized tridiagonal (off-diagonals sqrt(b_i c_{i+1})),
// eigenvectors via the three-term recurrence, multiplicities from the norm
// identity m_r = n / sum_i k_i u_r(i)^2. Throws NumericalError when
// eigenvalues nearly collide or multiplicities fail to round to integers.
SpectralData decompose(const IntersectionArray& arr);

// Generating function over first-arrival times from shell i to the target,
// for s in (-1, 1]. GF_i(1) = 1 by construction.
double generating_function(const IntersectionArray& arr, const SpectralData& sd, int i, double s);
double generating_function(const IntersectionArray& arr, int i, double s);

// Leading series coefficients of GF_i: entry t is the probability that the
// first arrival happens at step t.
std::vector<double> gf_series(const IntersectionArray& arr, const SpectralData& sd, int i,
                              int order);

// Distance process of the walk; laziness is the probability of standing still.
struct ProjectedChain {
    IntersectionArray arr;
    BigRational laziness;
};

ProjectedChain projected_chain(const IntersectionArray& arr, const BigRational& laziness = 0);

std::vector<BigRational> stationary(const ProjectedChain& chain);

// One exact kernel application.
std::vector<BigRational> step(const ProjectedChain& chain, const std::vector<BigRational>& mu);

// Exact distribution after t steps from shell 0.
std::vector<BigRational> evolve(const ProjectedChain& chain, long long t);

// Exact total-variation distance to stationarity after t steps from shell 0.
BigRational tv_distance(const ProjectedChain& chain, long long t);

struct MixingResult {
    long long t_mix = -1;
    std::vector<BigRational> curve;   // d(0), d(1), ..., d(t_mix)
    bool capped = false;
};

// First t with d(t) < eps by forward iteration. A bipartite array with zero
// laziness never mixes and is rejected.
MixingResult mixing_time(const ProjectedChain& chain, double eps, long long cap = 1000000);

} // namespace drg
