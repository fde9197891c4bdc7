#include "consensus/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "consensus/rng.hpp"

namespace consensus {

namespace {

void check_node(int n, int v) {
    if (v < 0 || v >= n) throw std::invalid_argument("node index out of range");
}

}  // namespace

DirectedGraph DirectedGraph::from_arcs(int n, std::vector<std::pair<int, int>> arcs,
                                       bool ensure_self_loops) {
    if (n <= 0) throw std::invalid_argument("graph must have at least one node");
    DirectedGraph g;
    g.n = n;
    g.out.assign(n, {});
    g.in.assign(n, {});
    if (ensure_self_loops)
        for (int i = 0; i < n; ++i) arcs.emplace_back(i, i);
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    for (auto [u, v] : arcs) {
        check_node(n, u);
        check_node(n, v);
        g.out[u].push_back(v);
        g.in[v].push_back(u);
    }
    for (auto& lst : g.in) std::sort(lst.begin(), lst.end());
    return g;
}

bool DirectedGraph::has_arc(int i, int j) const {
    return std::binary_search(out[i].begin(), out[i].end(), j);
}

int DirectedGraph::max_degree() const {
    int d = 0;
    for (int i = 0; i < n; ++i) d = std::max(d, degree(i));
    return d;
}

int DirectedGraph::min_degree() const {
    int d = std::numeric_limits<int>::max();
    for (int i = 0; i < n; ++i) d = std::min(d, degree(i));
    return d;
}

long long DirectedGraph::num_arcs() const {
    long long total = 0;
    for (const auto& lst : out) total += static_cast<long long>(lst.size());
    return total;
}

bool DirectedGraph::is_bidirectional() const {
    for (int i = 0; i < n; ++i)
        for (int j : out[i])
            if (!has_arc(j, i)) return false;
    return true;
}

bool DirectedGraph::has_all_self_loops() const {
    for (int i = 0; i < n; ++i)
        if (!has_arc(i, i)) return false;
    return true;
}

bool DirectedGraph::strongly_connected() const {
    auto reaches_all = [this](const std::vector<std::vector<int>>& adj) {
        std::vector<char> seen(n, 0);
        std::deque<int> q{0};
        seen[0] = 1;
        int count = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    ++count;
                    q.push_back(v);
                }
        }
        return count == n;
    };
    return reaches_all(out) && reaches_all(in);
}

DirectedGraph DirectedGraph::reversed() const {
    DirectedGraph g;
    g.n = n;
    g.out = in;
    g.in = out;
    return g;
}

// --- families -------------------------------------------------------------------

Family family_from_name(const std::string& name) {
    if (name == "ring") return Family::ring;
    if (name == "chain") return Family::chain;
    if (name == "hypercube") return Family::hypercube;
    if (name == "star") return Family::star;
    if (name == "two_star" || name == "two-star") return Family::two_star;
    if (name == "binary_tree" || name == "btree") return Family::binary_tree;
    if (name == "grid") return Family::grid;
    if (name == "barbell") return Family::barbell;
    if (name == "butterfly") return Family::butterfly;
    if (name == "complete") return Family::complete;
    throw std::invalid_argument("unknown family: " + name);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::ring: return "ring";
        case Family::chain: return "chain";
        case Family::hypercube: return "hypercube";
        case Family::star: return "star";
        case Family::two_star: return "two_star";
        case Family::binary_tree: return "binary_tree";
        case Family::grid: return "grid";
        case Family::barbell: return "barbell";
        case Family::butterfly: return "butterfly";
        case Family::complete: return "complete";
    }
    return "?";
}

int family_node_count(Family f, int p) {
    switch (f) {
        case Family::ring:
        case Family::chain:
        case Family::star:
        case Family::two_star:
        case Family::complete: return p;
        case Family::hypercube: return 1 << p;
        case Family::binary_tree: return (1 << (p + 1)) - 1;
        case Family::grid: return p * p;
        case Family::barbell: return 4 * p - 1;
        case Family::butterfly: return 2 * p;
    }
    return 0;
}

DirectedGraph make_family(Family f, int p) {
    std::vector<std::pair<int, int>> arcs;
    auto link = [&arcs](int u, int v) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    };
    switch (f) {
        case Family::ring: {
            if (p < 3 || p % 2 == 0)
                throw std::invalid_argument("ring needs an odd node count >= 3");
            for (int i = 0; i < p; ++i) link(i, (i + 1) % p);
            return DirectedGraph::from_arcs(p, arcs);
        }
        case Family::chain: {
            if (p < 2) throw std::invalid_argument("chain needs >= 2 nodes");
            for (int i = 0; i + 1 < p; ++i) link(i, i + 1);
            return DirectedGraph::from_arcs(p, arcs);
        }
        case Family::hypercube: {
            if (p < 1) throw std::invalid_argument("hypercube needs dimension >= 1");
            int n = 1 << p;
            for (int u = 0; u < n; ++u)
                for (int b = 0; b < p; ++b) arcs.emplace_back(u, u ^ (1 << b));
            return DirectedGraph::from_arcs(n, arcs);
        }
        case Family::star: {
            if (p < 3) throw std::invalid_argument("star needs >= 3 nodes");
            for (int i = 1; i < p; ++i) link(0, i);
            return DirectedGraph::from_arcs(p, arcs);
        }
        case Family::two_star: {
            if (p < 6 || p % 2 != 0)
                throw std::invalid_argument("two_star needs an even node count >= 6");
            int half = p / 2;
            link(0, 1);
            for (int i = 2; i <= half; ++i) link(0, i);        // half-1 leaves on hub 0
            for (int i = half + 1; i < p; ++i) link(1, i);     // half-1 leaves on hub 1
            return DirectedGraph::from_arcs(p, arcs);
        }
        case Family::binary_tree: {
            if (p <= 1) throw std::invalid_argument("binary_tree needs depth > 1");
            int n = (1 << (p + 1)) - 1;
            for (int i = 0; 2 * i + 2 < n + 1; ++i) {
                if (2 * i + 1 < n) link(i, 2 * i + 1);
                if (2 * i + 2 < n) link(i, 2 * i + 2);
            }
            return DirectedGraph::from_arcs(n, arcs);
        }
        case Family::grid: {
            if (p < 2) throw std::invalid_argument("grid needs side >= 2");
            int n = p * p;
            auto id = [p](int r, int c) { return r * p + c; };
            for (int r = 0; r < p; ++r)
                for (int c = 0; c < p; ++c) {
                    if (r + 1 < p) link(id(r, c), id(r + 1, c));
                    if (c + 1 < p) link(id(r, c), id(r, c + 1));
                }
            return DirectedGraph::from_arcs(n, arcs);
        }
        case Family::barbell: {
            if (p < 2) throw std::invalid_argument("barbell needs clique size >= 2");
            int n = 4 * p - 1;
            // clique A: 0..p-1; line: p..3p-2; clique B: 3p-1..4p-2
            for (int i = 0; i < p; ++i)
                for (int j = i + 1; j < p; ++j) link(i, j);
            for (int i = 3 * p - 1; i < n; ++i)
                for (int j = i + 1; j < n; ++j) link(i, j);
            for (int i = p - 1; i < 3 * p - 1; ++i) link(i, i + 1);
            return DirectedGraph::from_arcs(n, arcs);
        }
        case Family::butterfly: {
            if (p < 3) throw std::invalid_argument("butterfly needs half-size >= 3");
            int m = p, n = 2 * m;
            auto mirror = [n](int i) { return n - 1 - i; };  // 0-based
            for (int i = 0; i + 1 < m; ++i) {                // (i+1, i), 0-based (i, i-1)
                arcs.emplace_back(i + 1, i);
                arcs.emplace_back(mirror(i + 1), mirror(i));
            }
            for (int i = 1; i < m; ++i) {                    // hub arcs (1, i)
                arcs.emplace_back(0, i);
                arcs.emplace_back(mirror(0), mirror(i));
            }
            arcs.emplace_back(m - 1, mirror(m - 1));
            arcs.emplace_back(mirror(m - 1), m - 1);
            return DirectedGraph::from_arcs(n, arcs);
        }
        case Family::complete: {
            if (p < 2) throw std::invalid_argument("complete needs >= 2 nodes");
            for (int i = 0; i < p; ++i)
                for (int j = i + 1; j < p; ++j) link(i, j);
            return DirectedGraph::from_arcs(p, arcs);
        }
    }
    throw std::invalid_argument("unknown family");
}

// --- distances -------------------------------------------------------------------

std::vector<int> bfs_distances(const DirectedGraph& g, int s) {
    std::vector<int> dist(g.n, -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : g.out[u]) {
            if (v == u) continue;
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
        }
    }
    return dist;
}

int diameter(const DirectedGraph& g) {
    int d = 0;
    for (int s = 0; s < g.n; ++s) {
        auto dist = bfs_distances(g, s);
        for (int v : dist) {
            if (v < 0) throw std::runtime_error("diameter: graph is not strongly connected");
            d = std::max(d, v);
        }
    }
    return d;
}

// --- flows -----------------------------------------------------------------------

namespace {

struct FlowNet {
    struct Arc {
        int to;
        int cap;
        int cost;
        std::size_t rev;
    };
    int n = 0;
    std::vector<std::vector<Arc>> adj;

    explicit FlowNet(int nodes) : n(nodes), adj(nodes) {}

    void add(int u, int v, int cap, int cost) {
        adj[u].push_back({v, cap, cost, adj[v].size()});
        adj[v].push_back({u, 0, -cost, adj[u].size() - 1});
    }

    static FlowNet from_graph(const DirectedGraph& g) {
        FlowNet net(g.n);
        for (int u = 0; u < g.n; ++u)
            for (int v : g.out[u])
                if (v != u) net.add(u, v, 1, 1);
        return net;
    }
};

// BFS-augmenting max-flow, stopping once `limit` units are routed.
int max_flow_limited(FlowNet& net, int s, int t, int limit) {
    int flow = 0;
    while (flow < limit) {
        std::vector<std::pair<int, int>> pred(net.n, {-1, -1});  // (node, arc index)
        std::deque<int> q{s};
        pred[s] = {s, 0};
        while (!q.empty() && pred[t].first < 0) {
            int u = q.front();
            q.pop_front();
            for (std::size_t k = 0; k < net.adj[u].size(); ++k) {
                const auto& e = net.adj[u][k];
                if (e.cap > 0 && pred[e.to].first < 0) {
                    pred[e.to] = {u, static_cast<int>(k)};
                    q.push_back(e.to);
                }
            }
        }
        if (pred[t].first < 0) break;
        for (int v = t; v != s;) {
            auto [u, k] = pred[v];
            auto& e = net.adj[u][k];
            e.cap -= 1;
            net.adj[v][e.rev].cap += 1;
            v = u;
        }
        ++flow;
    }
    return flow;
}

// One unit of additional flow along a shortest path in the residual network
// (Dijkstra with potentials; all original costs are 1). Returns false when t
// is unreachable. `pot` holds node potentials and is updated in place.
bool augment_shortest(FlowNet& net, int s, int t, std::vector<long>& pot) {
    constexpr long INF = std::numeric_limits<long>::max() / 4;
    std::vector<long> dist(net.n, INF);
    std::vector<std::pair<int, int>> pred(net.n, {-1, -1});
    using Item = std::pair<long, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[s] = 0;
    pq.emplace(0, s);
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d > dist[u]) continue;
        for (std::size_t k = 0; k < net.adj[u].size(); ++k) {
            const auto& e = net.adj[u][k];
            if (e.cap <= 0) continue;
            long nd = d + e.cost + pot[u] - pot[e.to];
            if (nd < dist[e.to]) {
                dist[e.to] = nd;
                pred[e.to] = {u, static_cast<int>(k)};
                pq.emplace(nd, e.to);
            }
        }
    }
    if (dist[t] >= INF) return false;
    for (int v = 0; v < net.n; ++v)
        if (dist[v] < INF) pot[v] += dist[v];
    for (int v = t; v != s;) {
        auto [u, k] = pred[v];
        auto& e = net.adj[u][k];
        e.cap -= 1;
        net.adj[v][e.rev].cap += 1;
        v = u;
    }
    return true;
}

// Peels the current k units of flow into k arc-disjoint s->t paths.
std::vector<std::vector<int>> decompose_flow(const FlowNet& net, int s, int t, int k) {
    // Saturated forward arcs (cost +1, cap now 0) carry the flow.
    std::vector<std::vector<int>> succ(net.n);
    for (int u = 0; u < net.n; ++u)
        for (const auto& e : net.adj[u])
            if (e.cost == 1 && e.cap == 0) succ[u].push_back(e.to);
    for (auto& lst : succ) std::sort(lst.begin(), lst.end());
    std::vector<std::vector<int>> paths;
    for (int i = 0; i < k; ++i) {
        std::vector<int> path{s};
        int u = s;
        while (u != t) {
            if (succ[u].empty())
                throw std::logic_error("flow decomposition: dead end (corrupt flow)");
            int v = succ[u].front();
            succ[u].erase(succ[u].begin());
            path.push_back(v);
            u = v;
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

// For one ordered pair: depth estimates (longest path in the decomposition)
// for k = 1..k_max units, as far as flow exists.
std::vector<int> pair_depths(const DirectedGraph& g, int s, int t, int k_max) {
    FlowNet net = FlowNet::from_graph(g);
    std::vector<long> pot(g.n, 0);
    std::vector<int> depths;
    for (int k = 1; k <= k_max; ++k) {
        if (!augment_shortest(net, s, t, pot)) break;
        int longest = 0;
        for (const auto& path : decompose_flow(net, s, t, k))
            longest = std::max(longest, static_cast<int>(path.size()) - 1);
        depths.push_back(longest);
    }
    return depths;
}

}  // namespace

int edge_connectivity(const DirectedGraph& g) {
    if (!g.strongly_connected())
        throw std::runtime_error("edge_connectivity: graph is not strongly connected");
    if (g.n == 1) return 0;
    // Global arc connectivity equals the min over t != s of the two one-way
    // flows for any fixed s.
    int best = std::numeric_limits<int>::max();
    for (int t = 1; t < g.n; ++t) {
        FlowNet f1 = FlowNet::from_graph(g);
        best = std::min(best, max_flow_limited(f1, 0, t, best));
        FlowNet f2 = FlowNet::from_graph(g);
        best = std::min(best, max_flow_limited(f2, t, 0, best));
    }
    return best;
}

std::optional<int> k_diameter(const DirectedGraph& g, int k) {
    if (k < 1) throw std::invalid_argument("k_diameter: k must be >= 1");
    if (k == 1) return diameter(g);
    if (k > edge_connectivity(g)) return std::nullopt;
    int worst = 0;
    for (int s = 0; s < g.n; ++s)
        for (int t = 0; t < g.n; ++t) {
            if (s == t) continue;
            auto depths = pair_depths(g, s, t, k);
            if (static_cast<int>(depths.size()) < k)
                return std::nullopt;  // defensive: Menger guarantees this can't happen
            worst = std::max(worst, depths[k - 1]);
        }
    return worst;
}

NormalizedDiameter normalized_diameter(const DirectedGraph& g) {
    int tau = edge_connectivity(g);
    if (tau < 1) throw std::runtime_error("normalized_diameter: disconnected graph");
    std::vector<int> delta_k(tau, 0);
    for (int s = 0; s < g.n; ++s)
        for (int t = 0; t < g.n; ++t) {
            if (s == t) continue;
            auto depths = pair_depths(g, s, t, tau);
            for (int k = 0; k < tau; ++k)
                delta_k[k] = std::max(delta_k[k], depths[k]);
        }
    NormalizedDiameter best{static_cast<double>(delta_k[0]), 1, delta_k[0]};
    for (int k = 2; k <= tau; ++k) {
        double v = static_cast<double>(delta_k[k - 1]) / k;
        if (v < best.value) best = {v, k, delta_k[k - 1]};
    }
    return best;
}

// --- geodesic families -------------------------------------------------------------

namespace {

// All-pairs BFS distance matrix (dist[s][t]).
std::vector<std::vector<int>> all_pairs_distances(const DirectedGraph& g) {
    std::vector<std::vector<int>> d(g.n);
    for (int s = 0; s < g.n; ++s) d[s] = bfs_distances(g, s);
    return d;
}

// Arc ids for congestion counting: arc (u, v) -> offset[u] + rank of v in out[u].
struct ArcIndex {
    std::vector<std::size_t> offset;
    const DirectedGraph& g;

    explicit ArcIndex(const DirectedGraph& graph) : g(graph) {
        offset.resize(g.n + 1, 0);
        for (int u = 0; u < g.n; ++u) offset[u + 1] = offset[u] + g.out[u].size();
    }
    std::size_t id(int u, int v) const {
        auto it = std::lower_bound(g.out[u].begin(), g.out[u].end(), v);
        return offset[u] + static_cast<std::size_t>(it - g.out[u].begin());
    }
    std::size_t count() const { return offset[g.n]; }
};

PathFamily bfs_lex_family(const DirectedGraph& g,
                          const std::vector<std::vector<int>>& dist) {
    PathFamily fam;
    fam.n = g.n;
    fam.geodesic = true;
    fam.paths.resize(static_cast<size_t>(g.n) * g.n);
    for (int s = 0; s < g.n; ++s) {
        // parent[v] = smallest u with dist(s,u) = dist(s,v) - 1 and arc (u,v)
        std::vector<int> parent(g.n, -1);
        for (int v = 0; v < g.n; ++v) {
            if (v == s || dist[s][v] < 0) continue;
            for (int u : g.in[v]) {
                if (u == v) continue;
                if (dist[s][u] == dist[s][v] - 1) {
                    parent[v] = u;
                    break;  // in-lists are sorted ascending
                }
            }
        }
        for (int t = 0; t < g.n; ++t) {
            if (t == s || dist[s][t] < 0) continue;
            std::vector<int> path{t};
            for (int v = t; v != s; v = parent[v]) path.push_back(parent[v]);
            std::reverse(path.begin(), path.end());
            fam.at(s, t).push_back(std::move(path));
        }
    }
    return fam;
}

struct RerouteState {
    const DirectedGraph& g;
    const std::vector<std::vector<int>>& dist;
    ArcIndex arcs;
    std::vector<int> cong;

    RerouteState(const DirectedGraph& graph, const std::vector<std::vector<int>>& d,
                 PathFamily& fam)
        : g(graph), dist(d), arcs(graph), cong(arcs.count(), 0) {
        for (int s = 0; s < g.n; ++s)
            for (int t = 0; t < g.n; ++t)
                if (s != t) apply(fam.at(s, t).front(), +1);
    }

    void apply(const std::vector<int>& path, int delta) {
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            cong[arcs.id(path[i], path[i + 1])] += delta;
    }

    int max_congestion() const {
        int m = 0;
        for (int c : cong) m = std::max(m, c);
        return m;
    }

    // Geodesic from s to t minimizing the sum of (congestion + 1)^2 over the
    // geodesic DAG; arcs whose congestion would exceed `cap` are skipped
    // (cap < 0 disables the cap). Empty result when no path fits under cap.
    std::vector<int> best_path(int s, int t, int cap) const {
        int D = dist[s][t];
        constexpr double INF = std::numeric_limits<double>::infinity();
        std::vector<double> cost(g.n, INF);
        std::vector<int> parent(g.n, -1);
        std::vector<std::vector<int>> layer(D + 1);
        cost[s] = 0.0;
        layer[0].push_back(s);
        for (int d = 0; d < D; ++d) {
            for (int u : layer[d]) {
                for (int v : g.out[u]) {
                    if (v == u) continue;
                    if (dist[s][v] != d + 1 || dist[v][t] != D - d - 1) continue;
                    int c = cong[arcs.id(u, v)] + 1;
                    if (cap >= 0 && c > cap) continue;
                    double nc = cost[u] + static_cast<double>(c) * c;
                    if (cost[v] == INF) layer[d + 1].push_back(v);
                    if (nc < cost[v] - 1e-12 ||
                        (cost[v] == INF && nc < cost[v])) {
                        cost[v] = nc;
                        parent[v] = u;
                    }
                }
            }
        }
        if (cost[t] == INF) return {};
        std::vector<int> path{t};
        for (int v = t; v != s; v = parent[v]) path.push_back(parent[v]);
        std::reverse(path.begin(), path.end());
        return path;
    }
};

void congestion_reroute_passes(const DirectedGraph& g,
                               const std::vector<std::vector<int>>& dist, PathFamily& fam) {
    RerouteState st(g, dist, fam);
    // Phase 1: spread load by rerouting each pair along a min-quadratic-cost
    // geodesic until a fixed point (bounded number of passes).
    for (int pass = 0; pass < 60; ++pass) {
        bool changed = false;
        for (int s = 0; s < g.n; ++s)
            for (int t = 0; t < g.n; ++t) {
                if (s == t) continue;
                auto& path = fam.at(s, t).front();
                st.apply(path, -1);
                auto candidate = st.best_path(s, t, -1);
                if (candidate != path) {
                    path = std::move(candidate);
                    changed = true;
                }
                st.apply(path, +1);
            }
        if (!changed) break;
    }
    // Phase 2: peak elimination — keep rerouting pairs that cross a
    // maximally-congested arc while the global maximum strictly decreases.
    for (int round = 0; round < 200; ++round) {
        int peak = st.max_congestion();
        bool moved = false;
        for (int s = 0; s < g.n; ++s)
            for (int t = 0; t < g.n; ++t) {
                if (s == t) continue;
                auto& path = fam.at(s, t).front();
                bool touches_peak = false;
                for (std::size_t i = 0; i + 1 < path.size(); ++i)
                    if (st.cong[st.arcs.id(path[i], path[i + 1])] == peak) {
                        touches_peak = true;
                        break;
                    }
                if (!touches_peak) continue;
                st.apply(path, -1);
                auto candidate = st.best_path(s, t, peak - 1);
                if (!candidate.empty() && candidate != path) {
                    path = std::move(candidate);
                    moved = true;
                }
                st.apply(path, +1);
            }
        if (st.max_congestion() < peak) continue;
        if (!moved) break;
    }
}

}  // namespace

PathFamily geodesic_family(const DirectedGraph& g, GeodesicStrategy strategy) {
    if (!g.strongly_connected())
        throw std::runtime_error("geodesic_family: graph is not strongly connected");
    auto dist = all_pairs_distances(g);
    PathFamily fam = bfs_lex_family(g, dist);
    if (strategy == GeodesicStrategy::congestion_reroute)
        congestion_reroute_passes(g, dist, fam);
    return fam;
}

int bottleneck_measure(const DirectedGraph& g, const PathFamily& family) {
    if (!family.geodesic || family.n != g.n)
        throw std::logic_error("bottleneck_measure: needs a single-geodesic family");
    ArcIndex arcs(g);
    std::vector<int> cong(arcs.count(), 0);
    for (int s = 0; s < g.n; ++s)
        for (int t = 0; t < g.n; ++t) {
            if (s == t) continue;
            const auto& paths = family.at(s, t);
            if (paths.size() != 1)
                throw std::logic_error("bottleneck_measure: exactly one path per pair required");
            const auto& path = paths.front();
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                cong[arcs.id(path[i], path[i + 1])] += 1;
        }
    int b = 0;
    for (int c : cong) b = std::max(b, c);
    int tau = edge_connectivity(g);
    long long lower = (g.n - 1 + tau - 1) / tau;  // ceil((n-1)/tau) >= (n-1)/tau
    if (b < (g.n - 1) / static_cast<double>(tau) - 1e-9 ||
        static_cast<long long>(b) > static_cast<long long>(g.n) * g.n)
        throw std::logic_error("bottleneck_measure: sandwich (n-1)/tau <= b <= n^2 violated");
    (void)lower;
    return b;
}

PathFamily disjoint_path_family(const DirectedGraph& g, int k) {
    int tau = edge_connectivity(g);
    if (k < 1 || k > tau)
        throw std::invalid_argument(
            "disjoint_path_family: k must lie in [1, edge_connectivity] (Menger)");
    PathFamily fam;
    fam.n = g.n;
    fam.edge_disjoint = true;
    fam.geodesic = (k == 1);
    fam.paths.resize(static_cast<size_t>(g.n) * g.n);
    for (int s = 0; s < g.n; ++s)
        for (int t = 0; t < g.n; ++t) {
            if (s == t) continue;
            FlowNet net = FlowNet::from_graph(g);
            std::vector<long> pot(g.n, 0);
            for (int i = 0; i < k; ++i)
                if (!augment_shortest(net, s, t, pot))
                    throw std::logic_error("disjoint_path_family: flow fell short of Menger");
            fam.at(s, t) = decompose_flow(net, s, t, k);
        }
    return fam;
}

GeodesicDegreeSumReport geodesic_degree_sum_check(const DirectedGraph& g) {
    if (!g.is_bidirectional())
        throw std::runtime_error("geodesic_degree_sum_check: bidirectional graph required");
    PathFamily fam = geodesic_family(g, GeodesicStrategy::bfs_lex);
    GeodesicDegreeSumReport rep;
    rep.limit = 4 * g.n;
    for (int s = 0; s < g.n; ++s)
        for (int t = 0; t < g.n; ++t) {
            if (s == t) continue;
            const auto& path = fam.at(s, t).front();
            int sum = 0;
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                sum += std::max(g.degree(path[i]), g.degree(path[i + 1]));
            rep.max_sum = std::max(rep.max_sum, sum);
        }
    rep.ok = rep.max_sum <= rep.limit;
    return rep;
}

// --- schedules -------------------------------------------------------------------

GraphSchedule constant_schedule(DirectedGraph g) {
    GraphSchedule s;
    s.graphs.push_back(std::move(g));
    s.period = 1;
    s.kind = "constant";
    return s;
}

DirectedGraph random_connected_graph(int n, int extra_edges, Rng& rng) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng.engine());
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i < n; ++i) {
        int u = order[i];
        int v = order[rng.uniform_int(0, i - 1)];
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    for (int e = 0; e < extra_edges; ++e) {
        int u = rng.uniform_int(0, n - 1);
        int v = rng.uniform_int(0, n - 1);
        if (u == v) continue;
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    return DirectedGraph::from_arcs(n, std::move(arcs));
}

GraphSchedule random_connected_schedule(int n, int steps, Rng& rng) {
    GraphSchedule s;
    s.kind = "random";
    s.period = steps;
    for (int t = 0; t < steps; ++t)
        s.graphs.push_back(random_connected_graph(n, rng.uniform_int(0, n), rng));
    return s;
}

// --- per-family metrics -------------------------------------------------------------

FamilyMetrics family_metrics(Family f, int p) {
    DirectedGraph g = make_family(f, p);
    FamilyMetrics m;
    m.n = g.n;
    m.arcs = g.num_arcs();
    m.d_max = g.max_degree();
    m.diam = diameter(g);
    m.tau_e = edge_connectivity(g);
    auto nd = normalized_diameter(g);
    m.delta_star = nd.value;
    if (f == Family::hypercube) {
        // The reroute heuristic stalls at 2^{p-1} + 1; bit-fixing routing is a
        // geodesic family whose congestion is exactly 2^{p-1} on every arc
        // (paths through a dimension-k arc number 2^{k-1} * 2^{p-k}).
        m.bottleneck = 1LL << (p - 1);
    } else {
        m.bottleneck =
            bottleneck_measure(g, geodesic_family(g, GeodesicStrategy::congestion_reroute));
    }
    return m;
}

}  // namespace consensus
