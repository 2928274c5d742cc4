#pragma once
// Simple undirected graph with stable vertex/edge indices, the edge-list
// reader/writer and the structural checks the pipeline relies on.
// Internally everything is 0-based; text and JSON are 1-based.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace topo {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

class GraphError : public Error {
public:
    using Error::Error;
};

struct Edge {
    int u = 0;
    int v = 0;  // u < v
    int other(int x) const { return x == u ? v : u; }
    bool operator==(const Edge&) const = default;
};

struct Incidence {
    int vertex;  // neighbor
    int edge;
};

class Graph {
public:
    Graph() = default;
    // Edges are (a,b) pairs of 0-based vertices, kept in the given order.
    // Throws GraphError on self-loops, duplicates or out-of-range ids.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    const std::vector<Edge>& edges() const { return edges_; }
    // sorted by neighbor id
    const std::vector<Incidence>& incident(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(incident(v).size()); }
    std::optional<int> edge_index(int a, int b) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adj_;
};

// Text edge list ("vertices N" header, '#' comments, "u v" lines) or the
// JSON form {"vertices":N,"edges":[[u,v],...]}; detected by the first
// non-blank character.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string serialize_graph(const Graph& g);
std::string graph_to_json(const Graph& g);

struct NonseparabilityReport {
    bool connected = false;
    std::vector<int> bridges;             // edge ids
    std::vector<int> articulation_points;  // vertex ids
    int min_degree = 0;
    bool nonseparable() const {
        return connected && bridges.empty() && articulation_points.empty() && min_degree >= 3;
    }
};

NonseparabilityReport validate_nonseparable(const Graph& g);

bool is_connected(const Graph& g);
// m - n + 1; throws GraphError when g is disconnected
int cyclomatic_number(const Graph& g);

// Hop distances, row-major n*n. Throws GraphError when g is disconnected.
class DistanceTable {
public:
    DistanceTable() = default;
    DistanceTable(int n, std::vector<int> d) : n_(n), d_(std::move(d)) {}
    int operator()(int a, int b) const {
        return d_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)];
    }
    int n() const { return n_; }

private:
    int n_ = 0;
    std::vector<int> d_;
};

DistanceTable all_pairs_distance(const Graph& g);

// BFS tree from root; parent via the lowest-index neighbor reached first.
struct BfsTree {
    std::vector<int> dist;         // -1 if unreachable
    std::vector<int> parent;       // -1 at root
    std::vector<int> parent_edge;  // -1 at root
};
BfsTree bfs_tree(const Graph& g, int root);

}  // namespace topo
