#include "drg/graph.hpp"

#include "drg/errors.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <string>

namespace drg {

namespace {

constexpr long long kMaxExplicit = 20000;

void check_size(long long n, const std::string& what) {
    if (n > kMaxExplicit)
        throw ValidationError(what + " would have " + std::to_string(n) +
                              " vertices; explicit models are capped at " +
                              std::to_string(kMaxExplicit));
}

ExplicitGraph finish(int n, std::vector<std::vector<int>> adj) {
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return ExplicitGraph{n, std::move(adj)};
}

// All q-subsets of {0..m-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int m, int q) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(q);
    for (int i = 0; i < q; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = q - 1;
        while (i >= 0 && cur[i] == m - q + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < q; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

} // namespace

ExplicitGraph build_complete(int n) {
    if (n < 2) throw ValidationError("complete graph needs n >= 2");
    check_size(n, "complete:" + std::to_string(n));
    std::vector<std::vector<int>> adj(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) adj[u].push_back(v);
    return finish(n, std::move(adj));
}

ExplicitGraph build_cycle(int n) {
    if (n < 3) throw ValidationError("cycle needs n >= 3");
    check_size(n, "cycle:" + std::to_string(n));
    std::vector<std::vector<int>> adj(n);
    for (int u = 0; u < n; ++u) {
        adj[u].push_back((u + 1) % n);
        adj[u].push_back((u + n - 1) % n);
    }
    return finish(n, std::move(adj));
}

ExplicitGraph build_hamming(int m, int q) {
    if (m < 1 || q < 2) throw ValidationError("hamming needs m >= 1 and q >= 2");
    long long n = 1;
    for (int i = 0; i < m; ++i) {
        n *= q;
        check_size(n, "hamming:" + std::to_string(m) + "," + std::to_string(q));
    }
    // Vertex index encodes the tuple base q, digit i at weight q^i.
    std::vector<long long> weight(m, 1);
    for (int i = 1; i < m; ++i) weight[i] = weight[i - 1] * q;
    std::vector<std::vector<int>> adj(n);
    for (long long u = 0; u < n; ++u) {
        long long rest = u;
        for (int i = 0; i < m; ++i) {
            int digit = static_cast<int>(rest % q);
            rest /= q;
            for (int d = 0; d < q; ++d)
                if (d != digit)
                    adj[u].push_back(static_cast<int>(u + (d - digit) * weight[i]));
        }
    }
    return finish(static_cast<int>(n), std::move(adj));
}

ExplicitGraph build_johnson(int m, int q) {
    if (q < 1 || m < 2 * q) throw ValidationError("johnson needs 1 <= q and 2q <= m");
    auto verts = subsets(m, q);
    check_size(static_cast<long long>(verts.size()),
               "johnson:" + std::to_string(m) + "," + std::to_string(q));
    int n = static_cast<int>(verts.size());
    std::vector<std::vector<int>> adj(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (intersection_size(verts[u], verts[v]) == q - 1) {
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
    return finish(n, std::move(adj));
}

ExplicitGraph build_odd(int m) {
    if (m < 2) throw ValidationError("odd graph needs m >= 2");
    auto verts = subsets(2 * m - 1, m - 1);
    check_size(static_cast<long long>(verts.size()), "odd:" + std::to_string(m));
    int n = static_cast<int>(verts.size());
    std::vector<std::vector<int>> adj(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (intersection_size(verts[u], verts[v]) == 0) {
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
    return finish(n, std::move(adj));
}

ExplicitGraph build_dodecahedron() {
    // Generalized Petersen graph GP(10, 2): outer 10-cycle 0..9, spokes to
    // 10..19, inner edges i -> i+2 (two pentagons). Checked against the known
    // array on every build; the construction is fixed, so this can only fail
    // if the code above is edited wrongly.
    std::vector<std::vector<int>> adj(20);
    auto link = [&](int u, int v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    };
    for (int i = 0; i < 10; ++i) {
        link(i, (i + 1) % 10);
        link(i, 10 + i);
        link(10 + i, 10 + (i + 2) % 10);
    }
    ExplicitGraph g = finish(20, std::move(adj));
    IntersectionArray expected = IntersectionArray::create({3, 2, 1, 1, 1}, {1, 1, 1, 2, 3});
    if (extract_array(g).to_string() != expected.to_string())
        throw NumericalError("dodecahedron construction no longer matches its intersection array");
    return g;
}

bool family_buildable(const std::string& name) {
    return name == "complete" || name == "cycle" || name == "hamming" ||
           name == "johnson" || name == "odd" || name == "petersen" ||
           name == "dodecahedron";
}

ExplicitGraph build_family(const FamilySpec& spec) {
    auto want = [&](std::size_t count) {
        if (spec.params.size() != count)
            throw ValidationError("family '" + spec.name + "' takes " + std::to_string(count) +
                                  " parameter(s)");
    };
    auto as_int = [](long long v) {
        if (v < -1000000 || v > 1000000)
            throw ValidationError("family parameter out of range");
        return static_cast<int>(v);
    };
    if (spec.name == "complete") { want(1); return build_complete(as_int(spec.params[0])); }
    if (spec.name == "cycle")    { want(1); return build_cycle(as_int(spec.params[0])); }
    if (spec.name == "hamming")  { want(2); return build_hamming(as_int(spec.params[0]), as_int(spec.params[1])); }
    if (spec.name == "johnson")  { want(2); return build_johnson(as_int(spec.params[0]), as_int(spec.params[1])); }
    if (spec.name == "odd")      { want(1); return build_odd(as_int(spec.params[0])); }
    if (spec.name == "petersen") { want(0); return build_odd(3); }
    if (spec.name == "dodecahedron") { want(0); return build_dodecahedron(); }
    if (spec.name == "biggs-smith")
        throw ValidationError("no explicit coordinates wired in for biggs-smith");
    throw ValidationError("no explicit model for family '" + spec.name + "'");
}

std::vector<int> bfs_distances(const ExplicitGraph& g, int src) {
    if (src < 0 || src >= g.n) throw ValidationError("BFS source out of range");
    std::vector<int> dist(g.n, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

IntersectionArray extract_array(const ExplicitGraph& g) {
    if (g.n < 2) throw ValidationError("graph needs at least two vertices");
    auto fail = [](const std::string& msg) -> void { throw ValidationError(msg); };

    const int k = g.degree_of(0);
    if (k < 1) fail("vertex 0 is isolated: graph is disconnected");
    for (int v = 0; v < g.n; ++v)
        if (g.degree_of(v) != k)
            fail("not regular: vertex " + std::to_string(v) + " has degree " +
                 std::to_string(g.degree_of(v)) + " while vertex 0 has degree " +
                 std::to_string(k));

    // Candidate profile from vertex 0, then constancy across every pair.
    std::vector<int> dist0 = bfs_distances(g, 0);
    int D = 0;
    for (int v = 0; v < g.n; ++v) {
        if (dist0[v] < 0)
            fail("graph is disconnected: no path from 0 to " + std::to_string(v));
        D = std::max(D, dist0[v]);
    }
    std::vector<long long> b(D + 1, -1), c(D + 1, -1);
    b[0] = k;
    auto counts_at = [&](const std::vector<int>& dist, int v) {
        int down = 0, same = 0, up = 0;
        for (int w : g.adj[v]) {
            if (dist[w] == dist[v] - 1) ++down;
            else if (dist[w] == dist[v]) ++same;
            else ++up;
        }
        return std::array<int, 3>{down, same, up};
    };
    for (int v = 0; v < g.n; ++v) {
        int i = dist0[v];
        if (i == 0 || c[i] >= 0) continue;
        auto [down, same, up] = counts_at(dist0, v);
        (void)same;
        c[i] = down;
        if (i < D) b[i] = up;
    }

    for (int u = 0; u < g.n; ++u) {
        std::vector<int> dist = u == 0 ? dist0 : bfs_distances(g, u);
        std::vector<long long> shell_count(D + 1, 0);
        for (int v = 0; v < g.n; ++v) {
            if (dist[v] < 0)
                fail("graph is disconnected: no path from " + std::to_string(u) + " to " +
                     std::to_string(v));
            if (dist[v] > D)
                fail("not distance-regular: pair (" + std::to_string(u) + ", " +
                     std::to_string(v) + ") at distance " + std::to_string(dist[v]) +
                     " exceeds the eccentricity " + std::to_string(D) + " of vertex 0");
            ++shell_count[dist[v]];
        }
        for (int i = 0; i <= D; ++i)
            if (shell_count[i] == 0)
                fail("not distance-regular: vertex " + std::to_string(u) +
                     " has no neighbor shell at distance " + std::to_string(i));
        for (int v = 0; v < g.n; ++v) {
            int i = dist[v];
            if (i == 0) continue;
            auto [down, same, up] = counts_at(dist, v);
            (void)same;
            if (down != c[i])
                fail("not distance-regular: pair (" + std::to_string(u) + ", " +
                     std::to_string(v) + ") at distance " + std::to_string(i) + " has " +
                     std::to_string(down) + " inward neighbors, elsewhere c_" +
                     std::to_string(i) + " = " + std::to_string(c[i]));
            if (i < D && up != b[i])
                fail("not distance-regular: pair (" + std::to_string(u) + ", " +
                     std::to_string(v) + ") at distance " + std::to_string(i) + " has " +
                     std::to_string(up) + " outward neighbors, elsewhere b_" +
                     std::to_string(i) + " = " + std::to_string(b[i]));
            if (i == D && up != 0)
                fail("not distance-regular: pair (" + std::to_string(u) + ", " +
                     std::to_string(v) + ") at the outermost distance still has outward neighbors");
        }
    }
    return IntersectionArray::create(std::vector<long long>(b.begin(), b.end() - 1),
                                     std::vector<long long>(c.begin() + 1, c.end()));
}

std::vector<std::pair<int, int>> edge_list(const ExplicitGraph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v) out.emplace_back(u, v);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace drg
