#include "topodraw/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>

namespace topo {

ParseError::ParseError(int line, const std::string& what)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw GraphError("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n), {});
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw GraphError("vertex id out of range in edge (" + std::to_string(a + 1) + "," +
                             std::to_string(b + 1) + ")");
        if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a + 1));
        Edge e{std::min(a, b), std::max(a, b)};
        int id = static_cast<int>(edges_.size());
        edges_.push_back(e);
        adj_[static_cast<std::size_t>(e.u)].push_back({e.v, id});
        adj_[static_cast<std::size_t>(e.v)].push_back({e.u, id});
    }
    for (auto& row : adj_) {
        std::sort(row.begin(), row.end(),
                  [](const Incidence& x, const Incidence& y) { return x.vertex < y.vertex; });
        for (std::size_t i = 1; i < row.size(); ++i)
            if (row[i].vertex == row[i - 1].vertex) {
                const Edge& e = edges_[static_cast<std::size_t>(row[i].edge)];
                throw GraphError("duplicate edge (" + std::to_string(e.u + 1) + "," +
                                 std::to_string(e.v + 1) + ")");
            }
    }
}

std::optional<int> Graph::edge_index(int a, int b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) return std::nullopt;
    const auto& row = adj_[static_cast<std::size_t>(a)];
    auto it = std::lower_bound(row.begin(), row.end(), b,
                               [](const Incidence& x, int key) { return x.vertex < key; });
    if (it == row.end() || it->vertex != b) return std::nullopt;
    return it->edge;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

long long to_int(std::string_view tok, int line) {
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError(line, "malformed integer '" + std::string(tok) + "'");
    return v;
}

Graph build(long long header_n, const std::vector<std::pair<long long, long long>>& raw,
            const std::vector<int>& lines) {
    long long maxid = 0;
    std::map<std::pair<long long, long long>, int> seen;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto [a, b] = raw[i];
        int line = lines.empty() ? 0 : lines[i];
        if (a <= 0 || b <= 0) throw ParseError(line, "non-positive vertex id");
        if (a == b) throw ParseError(line, "self-loop at vertex " + std::to_string(a));
        auto key = std::minmax(a, b);
        if (!seen.emplace(key, line).second)
            throw ParseError(line, "duplicate edge (" + std::to_string(key.first) + "," +
                                       std::to_string(key.second) + ")");
        maxid = std::max({maxid, a, b});
    }
    long long n = header_n >= 0 ? header_n : maxid;
    if (maxid > n) throw ParseError(0, "vertex id " + std::to_string(maxid) + " exceeds header count");
    if (n > std::numeric_limits<int>::max() / 4) throw ParseError(0, "vertex count too large");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(raw.size());
    for (auto [a, b] : raw) edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
    return Graph(static_cast<int>(n), edges);
}

Graph parse_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array())
        throw ParseError(0, "JSON graph needs an \"edges\" array");
    long long n = -1;
    if (j.contains("vertices")) {
        if (!j["vertices"].is_number_integer()) throw ParseError(0, "\"vertices\" must be an integer");
        n = j["vertices"].get<long long>();
        if (n < 0) throw ParseError(0, "negative vertex count");
    }
    std::vector<std::pair<long long, long long>> raw;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError(0, "edge entries must be [u,v] integer pairs");
        raw.emplace_back(e[0].get<long long>(), e[1].get<long long>());
    }
    return build(n, raw, {});
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_json(text);

    long long header_n = -1;
    std::vector<std::pair<long long, long long>> raw;
    std::vector<int> lines;
    int lineno = 0;
    bool any_edge = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        auto toks = split_ws(line);
        if (toks.empty() || toks[0].front() == '#') continue;
        if (toks[0] == "vertices") {
            if (toks.size() != 2) throw ParseError(lineno, "header must be 'vertices N'");
            if (any_edge || header_n >= 0) throw ParseError(lineno, "header must precede edges");
            header_n = to_int(toks[1], lineno);
            if (header_n < 0) throw ParseError(lineno, "negative vertex count");
            continue;
        }
        if (toks.size() != 2) throw ParseError(lineno, "expected 'u v'");
        raw.emplace_back(to_int(toks[0], lineno), to_int(toks[1], lineno));
        lines.push_back(lineno);
        any_edge = true;
    }
    return build(header_n, raw, lines);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

std::string serialize_graph(const Graph& g) {
    std::string out = "vertices " + std::to_string(g.n()) + "\n";
    for (const Edge& e : g.edges()) out += std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
    return out;
}

std::string graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["vertices"] = g.n();
    j["edges"] = nlohmann::json::array();
    for (const Edge& e : g.edges()) j["edges"].push_back({e.u + 1, e.v + 1});
    return j.dump();
}

NonseparabilityReport validate_nonseparable(const Graph& g) {
    NonseparabilityReport r;
    const int n = g.n();
    r.min_degree = n == 0 ? 0 : std::numeric_limits<int>::max();
    for (int v = 0; v < n; ++v) r.min_degree = std::min(r.min_degree, g.degree(v));
    r.connected = is_connected(g);

    // iterative low-link DFS over every component
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<char> art(static_cast<std::size_t>(n), 0);
    struct Frame {
        int v, parent_edge;
        std::size_t next;
        int children;
    };
    int timer = 0;
    for (int s = 0; s < n; ++s) {
        if (disc[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<Frame> st{{s, -1, 0, 0}};
        disc[static_cast<std::size_t>(s)] = low[static_cast<std::size_t>(s)] = timer++;
        while (!st.empty()) {
            Frame& f = st.back();
            const auto& inc = g.incident(f.v);
            if (f.next < inc.size()) {
                Incidence x = inc[f.next++];
                if (x.edge == f.parent_edge) continue;
                auto w = static_cast<std::size_t>(x.vertex);
                if (disc[w] < 0) {
                    disc[w] = low[w] = timer++;
                    ++f.children;
                    st.push_back({x.vertex, x.edge, 0, 0});
                } else {
                    low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[w]);
                }
            } else {
                Frame done = f;
                st.pop_back();
                if (st.empty()) {
                    if (done.children > 1) art[static_cast<std::size_t>(done.v)] = 1;
                    continue;
                }
                Frame& p = st.back();
                auto pv = static_cast<std::size_t>(p.v), dv = static_cast<std::size_t>(done.v);
                low[pv] = std::min(low[pv], low[dv]);
                if (low[dv] > disc[pv]) r.bridges.push_back(done.parent_edge);
                if (st.size() > 1 && low[dv] >= disc[pv]) art[pv] = 1;
            }
        }
    }
    std::sort(r.bridges.begin(), r.bridges.end());
    for (int v = 0; v < n; ++v)
        if (art[static_cast<std::size_t>(v)]) r.articulation_points.push_back(v);
    return r;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    BfsTree t = bfs_tree(g, 0);
    return std::all_of(t.dist.begin(), t.dist.end(), [](int d) { return d >= 0; });
}

int cyclomatic_number(const Graph& g) {
    if (!is_connected(g)) throw GraphError("graph is disconnected");
    return g.m() - g.n() + 1;
}

BfsTree bfs_tree(const Graph& g, int root) {
    auto n = static_cast<std::size_t>(g.n());
    BfsTree t{std::vector<int>(n, -1), std::vector<int>(n, -1), std::vector<int>(n, -1)};
    std::deque<int> q{root};
    t.dist[static_cast<std::size_t>(root)] = 0;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (const Incidence& inc : g.incident(x)) {
            auto y = static_cast<std::size_t>(inc.vertex);
            if (t.dist[y] >= 0) continue;
            t.dist[y] = t.dist[static_cast<std::size_t>(x)] + 1;
            t.parent[y] = x;
            t.parent_edge[y] = inc.edge;
            q.push_back(inc.vertex);
        }
    }
    return t;
}

DistanceTable all_pairs_distance(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.n());
    std::vector<int> d(n * n, 0);
    for (std::size_t s = 0; s < n; ++s) {
        BfsTree t = bfs_tree(g, static_cast<int>(s));
        for (std::size_t v = 0; v < n; ++v) {
            if (t.dist[v] < 0) throw GraphError("graph is disconnected");
            d[s * n + v] = t.dist[v];
        }
    }
    return DistanceTable(static_cast<int>(n), std::move(d));
}

}  // namespace topo
