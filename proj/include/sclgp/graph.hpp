#ifndef SCLGP_GRAPH_HPP
#define SCLGP_GRAPH_HPP

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sclgp {

/// A finite simplicial graph: named vertices in a fixed lexicographic order,
/// undirected edges, no loops or multi-edges. Immutable after construction;
/// all operations on graphs are pure functions.
class SimplicialGraph {
  public:
    SimplicialGraph() = default;
    SimplicialGraph(std::vector<std::string> vertices,
                    const std::vector<std::pair<std::string, std::string>>& edges);

    std::size_t size() const { return names_.size(); }
    bool empty() const { return names_.empty(); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    bool has_vertex(const std::string& v) const;
    std::size_t index_of(const std::string& v) const;  // throws on unknown vertex

    bool adjacent(std::size_t i, std::size_t j) const { return adj_[i][j]; }
    bool adjacent(const std::string& u, const std::string& v) const {
        return adj_[index_of(u)][index_of(v)];
    }

    /// Edges as index pairs (i < j), in canonical order.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    std::size_t edge_count() const { return edge_count_; }

    bool is_complete() const;
    bool is_clique(const std::vector<std::size_t>& s) const;

    bool operator==(const SimplicialGraph& o) const {
        return names_ == o.names_ && adj_ == o.adj_;
    }

  private:
    std::vector<std::string> names_;            // sorted lexicographically
    std::vector<std::vector<bool>> adj_;
    std::size_t edge_count_ = 0;
};

/// A clique as a sorted list of vertex indices of its host graph.
using Clique = std::vector<std::size_t>;

SimplicialGraph complement(const SimplicialGraph& g);
SimplicialGraph induced_subgraph(const SimplicialGraph& g, const std::vector<std::string>& s);
SimplicialGraph induced_subgraph(const SimplicialGraph& g, const std::set<std::size_t>& s);

/// Inclusion-maximal cliques, each exactly once, canonically ordered
/// (Bron--Kerbosch with pivoting). Isolated vertices appear as singletons.
std::vector<Clique> maximal_cliques(const SimplicialGraph& g);

/// All nonempty cliques; exponential, test-oracle use only.
std::vector<Clique> all_cliques(const SimplicialGraph& g);

/// The opposite path Delta_m on v0..vm with edges {(vi,vj) : |i-j| >= 2}.
SimplicialGraph opposite_path(int m);

/// Delta(g): the largest m >= 1 such that Delta_m is an induced subgraph of g,
/// and 0 for complete graphs. Computed as the edge count of the longest
/// induced path in the complement (the complement of Delta_m is a simple path
/// on m+1 vertices). Throws on the empty graph.
int opposite_path_length(const SimplicialGraph& g);

/// The double graph D_Gamma: each vertex v becomes the non-adjacent pair
/// "a:v","b:v"; each edge becomes the four cross pairs.
SimplicialGraph double_graph(const SimplicialGraph& g);

/// Gamma_{m,n}: n vertices v0..v_{n-1}, the union of cliques on m cyclically
/// consecutive vertices. Requires m >= 2 and n >= 2m.
SimplicialGraph gamma_mn(int m, int n);

/// Erdos--Renyi graph on v0..v_{n-1}; each pair is an edge with probability p,
/// drawn in canonical pair order, bit-reproducible for a fixed seed.
SimplicialGraph random_graph(int n, double p, std::uint64_t seed);

}  // namespace sclgp

#endif
