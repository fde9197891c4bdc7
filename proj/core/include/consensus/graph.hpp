#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace consensus {

// Directed communication graph. Nodes are 0-based internally (the text file
// format is 1-based, see io.hpp). A self-loop is required at every node; the
// degree d(i) counts the self-loop, matching the weight-rule conventions.
// Self-loops are excluded from distances, paths, flows and congestion counts.
struct DirectedGraph {
    int n = 0;
    std::vector<std::vector<int>> out;  // sorted ascending, self-loop included
    std::vector<std::vector<int>> in;   // sorted ascending, self-loop included

    static DirectedGraph from_arcs(int n, std::vector<std::pair<int, int>> arcs,
                                   bool ensure_self_loops = true);

    bool has_arc(int i, int j) const;
    // In-degree including the self-loop: the d_i used by every weight rule.
    int degree(int i) const { return static_cast<int>(in[i].size()); }
    int max_degree() const;
    int min_degree() const;
    // Total number of arcs including self-loops (a bidirectional link counts
    // twice, matching the |E| convention of the closed-form family values).
    long long num_arcs() const;
    bool is_bidirectional() const;
    bool has_all_self_loops() const;
    bool strongly_connected() const;

    // Reverse of the graph (arc (i,j) becomes (j,i)); the support of a weight
    // matrix built on this graph is exactly the reverse graph.
    DirectedGraph reversed() const;
};

enum class Family {
    ring,
    chain,
    hypercube,
    star,
    two_star,
    binary_tree,
    grid,
    barbell,
    butterfly,
    complete,
};

Family family_from_name(const std::string& name);
std::string family_name(Family f);

// Generators for the standard families. size_param is the family's natural
// parameter: node count for ring/chain/star/two_star/complete, dimension for
// hypercube, depth for binary_tree, side for grid, clique size for barbell,
// half-size for butterfly. Throws std::invalid_argument outside the validity
// range. All families are bidirectional except butterfly (strongly connected
// but not bidirectional).
DirectedGraph make_family(Family f, int size_param);

// Number of nodes produced by make_family(f, size_param).
int family_node_count(Family f, int size_param);

// --- distances and connectivity -------------------------------------------

// BFS distances from s, self-loops ignored; unreachable nodes get -1.
std::vector<int> bfs_distances(const DirectedGraph& g, int s);

// Max over ordered pairs of the BFS distance. Throws std::runtime_error if the
// graph is not strongly connected.
int diameter(const DirectedGraph& g);

// Min over ordered pairs of the max-flow with unit capacities on
// non-self-loop arcs.
int edge_connectivity(const DirectedGraph& g);

// Upper estimate of the k-diameter: for every ordered pair, route k units of
// flow by successive shortest paths and take the longest path in the
// decomposition; maximize over pairs. Exact for k = 1. Returns nullopt when
// k exceeds the edge connectivity (no finite value exists).
std::optional<int> k_diameter(const DirectedGraph& g, int k);

struct NormalizedDiameter {
    double value;  // min over k of depth_k / k (upper estimate)
    int k;         // the minimizing k
    int depth;     // the corresponding depth estimate
};

// min_k k_diameter(g, k)/k over k in [1, edge_connectivity]. Over-estimates
// the true normalized diameter, which keeps the downstream spectral bounds
// valid upper bounds.
NormalizedDiameter normalized_diameter(const DirectedGraph& g);

// --- path families ----------------------------------------------------------

struct PathFamily {
    int n = 0;
    bool geodesic = false;
    bool edge_disjoint = false;
    // paths[i*n + j]: the chosen i -> j paths (node sequences); empty on the
    // diagonal. Single-geodesic families store exactly one path per pair.
    std::vector<std::vector<std::vector<int>>> paths;

    const std::vector<std::vector<int>>& at(int i, int j) const {
        return paths[static_cast<size_t>(i) * n + j];
    }
    std::vector<std::vector<int>>& at(int i, int j) {
        return paths[static_cast<size_t>(i) * n + j];
    }
};

enum class GeodesicStrategy { bfs_lex, congestion_reroute };

// One geodesic per ordered pair. bfs_lex follows the lexicographically
// smallest parent chain and is fully deterministic; congestion_reroute starts
// from bfs_lex and greedily reroutes pairs among alternative geodesics while
// the maximum arc congestion strictly decreases (also deterministic).
PathFamily geodesic_family(const DirectedGraph& g, GeodesicStrategy strategy);

// Max over non-self-loop arcs of the number of family paths through the arc.
// Upper estimate of the bottleneck measure b(g). Verifies the sandwich
// (n-1)/tau_e <= result <= n^2 and throws std::logic_error on violation or if
// the family is not a single-geodesic family.
int bottleneck_measure(const DirectedGraph& g, const PathFamily& family);

// k pairwise arc-disjoint paths per ordered pair, extracted by decomposition
// of a k-unit flow routed by successive shortest paths. Requires
// 1 <= k <= edge_connectivity(g).
PathFamily disjoint_path_family(const DirectedGraph& g, int k);

struct GeodesicDegreeSumReport {
    int max_sum = 0;   // max over bfs_lex geodesics of sum_k max(d_{u_k}, d_{u_{k+1}})
    int limit = 0;     // 4n
    bool ok = false;   // max_sum <= limit
};

// Checks sum of max-endpoint-degrees along every bfs_lex geodesic against 4n.
GeodesicDegreeSumReport geodesic_degree_sum_check(const DirectedGraph& g);

// --- schedules ---------------------------------------------------------------

struct GraphSchedule {
    std::vector<DirectedGraph> graphs;
    int period = 0;  // > 0: repeats with this period; 0: finite, length = graphs.size()
    std::string kind = "custom";

    const DirectedGraph& at(long t) const {
        if (period > 0) return graphs[static_cast<size_t>(t % period)];
        return graphs.at(static_cast<size_t>(t));
    }
    int distinct_steps() const { return static_cast<int>(graphs.size()); }
};

// Constant schedule holding one graph.
GraphSchedule constant_schedule(DirectedGraph g);

class Rng;  // rng.hpp

// Seeded random connected bidirectional graph with all self-loops: a random
// spanning tree plus `extra_edges` random bidirectional links.
DirectedGraph random_connected_graph(int n, int extra_edges, Rng& rng);

// Seeded random time-varying schedule of `steps` independent random connected
// bidirectional graphs.
GraphSchedule random_connected_schedule(int n, int steps, Rng& rng);

// --- per-family metric table --------------------------------------------------

struct FamilyMetrics {
    int n = 0;
    long long arcs = 0;      // |E| including self-loops
    int d_max = 0;
    int diam = 0;
    double delta_star = 0.0;  // computed upper estimate
    long long bottleneck = 0; // congestion of the family's routing (see notes)
    int tau_e = 0;
};

// Computed metrics for a family instance. The bottleneck value comes from the
// congestion_reroute family except for the hypercube, where the heuristic
// stalls one unit above the optimum and the exact value 2^{p-1} of bit-fixing
// routing (every arc of dimension k carries exactly 2^{k-1} * 2^{p-k} paths)
// is returned instead.
FamilyMetrics family_metrics(Family f, int size_param);

}  // namespace consensus
