#include "drg/oracle.hpp"

#include "drg/errors.hpp"
#include "drg/linalg.hpp"
#include "drg/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <thread>

namespace drg {

namespace {

void check_vertex(const ExplicitGraph& g, int v, const char* what) {
    if (v < 0 || v >= g.n)
        throw ValidationError(std::string(what) + " vertex " + std::to_string(v) +
                              " out of range [0, " + std::to_string(g.n) + ")");
}

// Index map for the non-absorbing vertices, -1 on the absorbing set.
std::vector<int> interior_index(int n, const std::vector<bool>& absorbing) {
    std::vector<int> idx(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!absorbing[v]) idx[v] = next++;
    return idx;
}

// k on the diagonal, -1 per interior neighbor: the absorbing-walk system
// matrix shared by hitting times, absorption probabilities, and visit counts
// (the graph is regular and undirected, so the matrix is its own transpose).
std::vector<std::vector<BigRational>> interior_matrix(const ExplicitGraph& g,
                                                      const std::vector<bool>& absorbing,
                                                      const std::vector<int>& idx, int m) {
    std::vector<std::vector<BigRational>> a(m, std::vector<BigRational>(m, BigRational(0)));
    for (int v = 0; v < g.n; ++v) {
        if (absorbing[v]) continue;
        int r = idx[v];
        a[r][r] = BigRational(g.degree_of(v));
        for (int w : g.adj[v])
            if (!absorbing[w]) a[r][idx[w]] -= 1;
    }
    return a;
}

long long sim_thread_count() {
    long long t = static_cast<long long>(std::thread::hardware_concurrency());
    if (t < 1) t = 1;
    if (const char* env = std::getenv("DRG_WALK_THREADS")) {
        char* end = nullptr;
        long long cap = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && cap >= 1) t = std::min(t, cap);
    }
    return std::min<long long>(t, 64);
}

SimSummary summarize(const std::vector<double>& xs) {
    SimSummary s;
    s.samples = static_cast<long long>(xs.size());
    double sum = 0;
    for (double x : xs) sum += x;
    s.mean = sum / static_cast<double>(s.samples);
    double sq = 0;
    for (double x : xs) sq += (x - s.mean) * (x - s.mean);
    s.variance = s.samples > 1 ? sq / static_cast<double>(s.samples - 1) : 0.0;
    s.std_error = std::sqrt(s.variance / static_cast<double>(s.samples));
    return s;
}

// Runs one walk per sample on its own RNG substream; fills a value per
// sample, threaded over contiguous blocks.
void run_samples(long long samples, std::uint64_t seed,
                 const std::function<void(CounterRng&, long long)>& body) {
    if (samples < 100)
        throw ValidationError("simulation needs at least 100 samples");
    CounterRng root(seed);
    long long threads = std::min(sim_thread_count(), samples);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    long long chunk = (samples + threads - 1) / threads;
    for (long long t = 0; t < threads; ++t) {
        long long lo = t * chunk, hi = std::min(samples, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            for (long long i = lo; i < hi; ++i) {
                CounterRng rng = root.substream(static_cast<std::uint64_t>(i));
                body(rng, i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace

std::vector<BigRational> exact_hitting(const ExplicitGraph& g, int target) {
    return exact_hitting_moments(g, target).H;
}

HittingMomentsOracle exact_hitting_moments(const ExplicitGraph& g, int target) {
    check_vertex(g, target, "target");
    std::vector<bool> absorbing(g.n, false);
    absorbing[target] = true;
    std::vector<int> idx = interior_index(g.n, absorbing);
    const int m = g.n - 1;
    auto a = interior_matrix(g, absorbing, idx, m);

    // First moments: each step costs 1, so the row equation is k H(x) -
    // sum_{y ~ x interior} H(y) = k.
    std::vector<BigRational> col1(m);
    for (int v = 0; v < g.n; ++v)
        if (!absorbing[v]) col1[idx[v]] = BigRational(g.degree_of(v));
    auto sol1 = linalg::solve_rational(a, {col1});

    HittingMomentsOracle out;
    out.H.assign(g.n, BigRational(0));
    for (int v = 0; v < g.n; ++v)
        if (!absorbing[v]) out.H[v] = sol1[0][idx[v]];

    // Second moments: tau^2 = (1 + tau')^2 conditions on the first step, so
    // k M2(x) - sum_{y interior} M2(y) = k + 2 sum_{y ~ x} H(y).
    std::vector<BigRational> col2(m);
    for (int v = 0; v < g.n; ++v) {
        if (absorbing[v]) continue;
        BigRational r(g.degree_of(v));
        for (int w : g.adj[v]) r += BigRational(2) * out.H[w];
        col2[idx[v]] = r;
    }
    auto sol2 = linalg::solve_rational(a, {col2});
    out.M2.assign(g.n, BigRational(0));
    for (int v = 0; v < g.n; ++v)
        if (!absorbing[v]) out.M2[v] = sol2[0][idx[v]];
    return out;
}

double exact_resistance(const ExplicitGraph& g, int x, int y) {
    check_vertex(g, x, "source");
    check_vertex(g, y, "sink");
    if (x == y) return 0.0;

    // Laplacian grounded at y; unit current in at x, out at y.
    const int m = g.n - 1;
    auto row_of = [&](int v) { return v < y ? v : v - 1; };
    std::vector<std::vector<double>> lap(m, std::vector<double>(m, 0.0));
    std::vector<double> rhs(m, 0.0);
    for (int v = 0; v < g.n; ++v) {
        if (v == y) continue;
        int r = row_of(v);
        lap[r][r] = static_cast<double>(g.degree_of(v));
        for (int w : g.adj[v])
            if (w != y) lap[r][row_of(w)] -= 1.0;
    }
    rhs[row_of(x)] = 1.0;
    std::vector<double> volt = linalg::solve_double(lap, rhs);

    double worst = 0.0;
    for (int v = 0; v < g.n; ++v) {
        if (v == y) continue;
        double acc = static_cast<double>(g.degree_of(v)) * volt[row_of(v)];
        for (int w : g.adj[v])
            if (w != y) acc -= volt[row_of(w)];
        worst = std::max(worst, std::fabs(acc - rhs[row_of(v)]));
    }
    if (worst >= 1e-10)
        throw NumericalError("resistance solve residual " + std::to_string(worst) +
                             " exceeds 1e-10");
    return volt[row_of(x)];
}

std::vector<BigRational> absorbing_values(
    const ExplicitGraph& g, const std::vector<std::pair<int, BigRational>>& boundary) {
    if (boundary.empty()) throw ValidationError("absorbing set must be nonempty");
    std::vector<bool> absorbing(g.n, false);
    std::vector<BigRational> value(g.n, BigRational(0));
    for (const auto& [v, val] : boundary) {
        check_vertex(g, v, "boundary");
        if (absorbing[v]) throw ValidationError("duplicate boundary vertex " + std::to_string(v));
        absorbing[v] = true;
        value[v] = val;
    }
    if (static_cast<int>(boundary.size()) == g.n)
        throw ValidationError("absorbing set covers the whole graph; nothing to extend");

    std::vector<int> idx = interior_index(g.n, absorbing);
    const int m = g.n - static_cast<int>(boundary.size());
    auto a = interior_matrix(g, absorbing, idx, m);
    std::vector<BigRational> col(m, BigRational(0));
    for (int v = 0; v < g.n; ++v) {
        if (absorbing[v]) continue;
        for (int w : g.adj[v])
            if (absorbing[w]) col[idx[v]] += value[w];
    }
    auto sol = linalg::solve_rational(a, {col});
    for (int v = 0; v < g.n; ++v)
        if (!absorbing[v]) value[v] = sol[0][idx[v]];
    return value;
}

std::vector<BigRational> expected_visits(const ExplicitGraph& g,
                                         const std::vector<int>& absorbing_set, int start) {
    if (absorbing_set.empty()) throw ValidationError("absorbing set must be nonempty");
    check_vertex(g, start, "start");
    std::vector<bool> absorbing(g.n, false);
    for (int v : absorbing_set) {
        check_vertex(g, v, "absorbing");
        absorbing[v] = true;
    }
    std::vector<BigRational> visits(g.n, BigRational(0));
    if (absorbing[start]) return visits;  // absorbed at time 0

    std::vector<int> idx = interior_index(g.n, absorbing);
    int m = 0;
    for (int v = 0; v < g.n; ++v)
        if (!absorbing[v]) ++m;
    if (m == 0) throw ValidationError("absorbing set covers the whole graph");

    // Visit counts solve the transposed fundamental system; the walk matrix
    // is symmetric here, so the same interior matrix serves.
    auto a = interior_matrix(g, absorbing, idx, m);
    std::vector<BigRational> col(m, BigRational(0));
    col[idx[start]] = BigRational(g.degree_of(start));
    auto sol = linalg::solve_rational(a, {col});
    for (int v = 0; v < g.n; ++v)
        if (!absorbing[v]) visits[v] = sol[0][idx[v]];
    return visits;
}

std::vector<BigRational> graph_evolve(const ExplicitGraph& g, int start, int t,
                                      const BigRational& laziness) {
    check_vertex(g, start, "start");
    if (t < 0) throw ValidationError("step count must be nonnegative");
    if (laziness < 0 || laziness >= 1)
        throw ValidationError("laziness must lie in [0, 1)");
    std::vector<BigRational> mu(g.n, BigRational(0));
    mu[start] = 1;
    for (int step = 0; step < t; ++step) {
        std::vector<BigRational> next(g.n, BigRational(0));
        for (int v = 0; v < g.n; ++v) {
            if (mu[v] == 0) continue;
            BigRational stay = laziness * mu[v];
            BigRational share = (BigRational(1) - laziness) * mu[v] /
                                BigRational(g.degree_of(v));
            next[v] += stay;
            for (int w : g.adj[v]) next[w] += share;
        }
        mu = std::move(next);
    }
    return mu;
}

SimSummary simulate_hitting(const ExplicitGraph& g, int from, int to, long long samples,
                            std::uint64_t seed) {
    check_vertex(g, from, "start");
    check_vertex(g, to, "target");
    if (from == to) throw ValidationError("hitting simulation needs distinct endpoints");
    std::vector<double> steps(samples);
    run_samples(samples, seed, [&](CounterRng& rng, long long i) {
        int at = from;
        long long t = 0;
        while (at != to) {
            at = g.adj[at][rng.below(static_cast<uint32_t>(g.degree_of(at)))];
            ++t;
        }
        steps[i] = static_cast<double>(t);
    });
    return summarize(steps);
}

SimSummary simulate_cover(const ExplicitGraph& g, int from, long long samples,
                          std::uint64_t seed) {
    check_vertex(g, from, "start");
    std::vector<double> steps(samples);
    run_samples(samples, seed, [&](CounterRng& rng, long long i) {
        std::vector<bool> seen(g.n, false);
        seen[from] = true;  // time 0 is a visit
        int remaining = g.n - 1;
        int at = from;
        long long t = 0;
        while (remaining > 0) {
            at = g.adj[at][rng.below(static_cast<uint32_t>(g.degree_of(at)))];
            ++t;
            if (!seen[at]) {
                seen[at] = true;
                --remaining;
            }
        }
        steps[i] = static_cast<double>(t);
    });
    return summarize(steps);
}

VisitSimulation simulate_visits(const ExplicitGraph& g, int v, int w, int u, long long samples,
                                std::uint64_t seed) {
    check_vertex(g, v, "start");
    check_vertex(g, w, "watched");
    check_vertex(g, u, "target");
    if (u == v || u == w)
        throw ValidationError("the target must differ from the start and the watched vertex");
    std::vector<double> hit(samples), count(samples), distinct(samples);
    run_samples(samples, seed, [&](CounterRng& rng, long long i) {
        std::vector<bool> seen(g.n, false);
        int at = v;
        long long visits = 0, uniques = 0;
        while (at != u) {
            at = g.adj[at][rng.below(static_cast<uint32_t>(g.degree_of(at)))];
            if (at == u) break;
            if (at == w) ++visits;
            if (!seen[at]) {
                seen[at] = true;
                ++uniques;
            }
        }
        hit[i] = visits > 0 ? 1.0 : 0.0;
        count[i] = static_cast<double>(visits);
        distinct[i] = static_cast<double>(uniques);
    });
    VisitSimulation out;
    out.indicator = summarize(hit);
    out.count = summarize(count);
    out.distinct = summarize(distinct);
    return out;
}

SimSummary simulate_projected_hitting(const IntersectionArray& arr, int from_shell,
                                      long long samples, std::uint64_t seed) {
    const int D = arr.diameter();
    if (from_shell < 1 || from_shell > D)
        throw ValidationError("start shell must lie in [1, D]");
    const uint32_t k = static_cast<uint32_t>(arr.degree());
    // Thresholds per shell: draw one of k neighbor slots, c_i of them lead
    // inward and a_i sideways.
    std::vector<uint32_t> down(D + 1), flat(D + 1);
    for (int i = 1; i <= D; ++i) {
        down[i] = static_cast<uint32_t>(arr.c(i));
        flat[i] = static_cast<uint32_t>(arr.c(i) + arr.a(i));
    }
    std::vector<double> steps(samples);
    run_samples(samples, seed, [&](CounterRng& rng, long long i) {
        int at = from_shell;
        long long t = 0;
        while (at != 0) {
            uint32_t slot = rng.below(k);
            if (slot < down[at]) --at;
            else if (slot >= flat[at]) ++at;
            ++t;
        }
        steps[i] = static_cast<double>(t);
    });
    return summarize(steps);
}

} // namespace drg
