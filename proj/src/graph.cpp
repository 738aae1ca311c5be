#include "sclgp/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "sclgp/prng.hpp"

namespace sclgp {

SimplicialGraph::SimplicialGraph(std::vector<std::string> vertices,
                                 const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(vertices)) {
    std::sort(names_.begin(), names_.end());
    if (std::adjacent_find(names_.begin(), names_.end()) != names_.end())
        throw std::invalid_argument("duplicate vertex name");
    adj_.assign(names_.size(), std::vector<bool>(names_.size(), false));
    for (const auto& [u, v] : edges) {
        std::size_t i = index_of(u), j = index_of(v);
        if (i == j) throw std::invalid_argument("self-loop at vertex " + u);
        if (!adj_[i][j]) ++edge_count_;
        adj_[i][j] = adj_[j][i] = true;
    }
}

bool SimplicialGraph::has_vertex(const std::string& v) const {
    return std::binary_search(names_.begin(), names_.end(), v);
}

std::size_t SimplicialGraph::index_of(const std::string& v) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), v);
    if (it == names_.end() || *it != v) throw std::invalid_argument("unknown vertex: " + v);
    return static_cast<std::size_t>(it - names_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> SimplicialGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (adj_[i][j]) out.emplace_back(i, j);
    return out;
}

bool SimplicialGraph::is_complete() const {
    return edge_count_ * 2 == size() * (size() - 1);
}

bool SimplicialGraph::is_clique(const std::vector<std::size_t>& s) const {
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            if (!adj_[s[a]][s[b]]) return false;
    return true;
}

SimplicialGraph complement(const SimplicialGraph& g) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (!g.adjacent(i, j)) edges.emplace_back(g.name(i), g.name(j));
    return SimplicialGraph(g.vertex_names(), edges);
}

SimplicialGraph induced_subgraph(const SimplicialGraph& g, const std::vector<std::string>& s) {
    std::set<std::size_t> idx;
    for (const auto& v : s) idx.insert(g.index_of(v));
    return induced_subgraph(g, idx);
}

SimplicialGraph induced_subgraph(const SimplicialGraph& g, const std::set<std::size_t>& s) {
    std::vector<std::string> names;
    for (std::size_t i : s) names.push_back(g.name(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto it = s.begin(); it != s.end(); ++it)
        for (auto jt = std::next(it); jt != s.end(); ++jt)
            if (g.adjacent(*it, *jt)) edges.emplace_back(g.name(*it), g.name(*jt));
    return SimplicialGraph(names, edges);
}

namespace {

void bron_kerbosch(const SimplicialGraph& g, std::vector<std::size_t>& r,
                   std::vector<std::size_t> p, std::vector<std::size_t> x,
                   std::vector<Clique>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // Pivot: the vertex of P∪X with the most neighbours in P.
    std::size_t pivot = 0, best = 0;
    bool have = false;
    for (const auto& cand : {p, x})
        for (std::size_t u : cand) {
            std::size_t d = 0;
            for (std::size_t w : p)
                if (g.adjacent(u, w)) ++d;
            if (!have || d > best) {
                have = true;
                best = d;
                pivot = u;
            }
        }
    std::vector<std::size_t> ext;
    for (std::size_t v : p)
        if (!g.adjacent(pivot, v)) ext.push_back(v);
    for (std::size_t v : ext) {
        std::vector<std::size_t> p2, x2;
        for (std::size_t w : p)
            if (g.adjacent(v, w)) p2.push_back(w);
        for (std::size_t w : x)
            if (g.adjacent(v, w)) x2.push_back(w);
        r.push_back(v);
        bron_kerbosch(g, r, std::move(p2), std::move(x2), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

}  // namespace

std::vector<Clique> maximal_cliques(const SimplicialGraph& g) {
    std::vector<Clique> out;
    std::vector<std::size_t> r, p(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) p[i] = i;
    bron_kerbosch(g, r, std::move(p), {}, out);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Clique> all_cliques(const SimplicialGraph& g) {
    std::vector<Clique> out;
    const std::size_t n = g.size();
    if (n > 20) throw std::invalid_argument("all_cliques: graph too large");
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Clique c;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) c.push_back(i);
        if (g.is_clique(c)) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialGraph opposite_path(int m) {
    if (m < 1) throw std::invalid_argument("opposite_path: m must be >= 1");
    std::vector<std::string> names;
    for (int i = 0; i <= m; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i <= m; ++i)
        for (int j = i + 2; j <= m; ++j)
            edges.emplace_back("v" + std::to_string(i), "v" + std::to_string(j));
    return SimplicialGraph(names, edges);
}

namespace {

// Longest induced path extension in h, counted in edges.
void induced_path_dfs(const SimplicialGraph& h, std::vector<std::size_t>& path,
                      std::vector<bool>& used, int& best) {
    best = std::max(best, static_cast<int>(path.size()) - 1);
    const std::size_t last = path.back();
    for (std::size_t w = 0; w < h.size(); ++w) {
        if (used[w] || !h.adjacent(last, w)) continue;
        bool induced = true;
        for (std::size_t k = 0; k + 1 < path.size(); ++k)
            if (h.adjacent(path[k], w)) {
                induced = false;
                break;
            }
        if (!induced) continue;
        path.push_back(w);
        used[w] = true;
        induced_path_dfs(h, path, used, best);
        used[w] = false;
        path.pop_back();
    }
}

}  // namespace

int opposite_path_length(const SimplicialGraph& g) {
    if (g.empty()) throw std::invalid_argument("opposite_path_length: empty graph");
    const SimplicialGraph h = complement(g);
    int best = 0;
    std::vector<bool> used(h.size(), false);
    std::vector<std::size_t> path;
    for (std::size_t v = 0; v < h.size(); ++v) {
        path.assign(1, v);
        used.assign(h.size(), false);
        used[v] = true;
        induced_path_dfs(h, path, used, best);
    }
    return best;
}

SimplicialGraph double_graph(const SimplicialGraph& g) {
    std::vector<std::string> names;
    for (const auto& v : g.vertex_names()) {
        names.push_back("a:" + v);
        names.push_back("b:" + v);
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [i, j] : g.edges()) {
        const std::string &u = g.name(i), &v = g.name(j);
        edges.emplace_back("a:" + u, "a:" + v);
        edges.emplace_back("a:" + u, "b:" + v);
        edges.emplace_back("b:" + u, "a:" + v);
        edges.emplace_back("b:" + u, "b:" + v);
    }
    return SimplicialGraph(names, edges);
}

SimplicialGraph gamma_mn(int m, int n) {
    if (m < 2 || n < 2 * m) throw std::invalid_argument("gamma_mn: need m >= 2 and n >= 2m");
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                edges.emplace_back("v" + std::to_string((i + a) % n),
                                   "v" + std::to_string((i + b) % n));
    return SimplicialGraph(names, edges);
}

SimplicialGraph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_graph: negative vertex count");
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::sort(names.begin(), names.end());  // canonical pair order is over sorted names
    Prng rng(seed);
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (rng.next_bernoulli(p)) edges.emplace_back(names[i], names[j]);
    return SimplicialGraph(names, edges);
}

}  // namespace sclgp
