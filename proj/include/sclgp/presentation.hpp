#ifndef SCLGP_PRESENTATION_HPP
#define SCLGP_PRESENTATION_HPP

#include <stdexcept>
#include <vector>

#include "sclgp/graph.hpp"

namespace sclgp {

enum class KindType { InfiniteCyclic, FiniteCyclic, Free };

/// The vertex-group kind at one vertex: Z, Z/n (n >= 2) or F_k (k >= 1).
struct VertexKind {
    KindType type = KindType::InfiniteCyclic;
    int order = 0;  // FiniteCyclic only
    int rank = 0;   // Free only

    static VertexKind Z() { return {KindType::InfiniteCyclic, 0, 0}; }
    static VertexKind Zn(int n) {
        if (n < 2) throw std::invalid_argument("cyclic order must be >= 2");
        return {KindType::FiniteCyclic, n, 0};
    }
    static VertexKind F(int k) {
        if (k < 1) throw std::invalid_argument("free rank must be >= 1");
        return {KindType::Free, 0, k};
    }

    bool operator==(const VertexKind&) const = default;
};

/// A graph product presentation: a simplicial graph with one vertex-group
/// kind per vertex. Shared read-only by all word operations.
class Presentation {
  public:
    Presentation() = default;
    Presentation(SimplicialGraph graph, std::vector<VertexKind> kinds)
        : graph_(std::move(graph)), kinds_(std::move(kinds)) {
        if (kinds_.size() != graph_.size())
            throw std::invalid_argument("presentation: one kind per vertex required");
    }

    const SimplicialGraph& graph() const { return graph_; }
    const VertexKind& kind(std::size_t v) const { return kinds_.at(v); }
    std::size_t size() const { return graph_.size(); }
    bool adjacent(std::size_t u, std::size_t v) const { return graph_.adjacent(u, v); }

    bool is_raag() const {
        for (const auto& k : kinds_)
            if (k.type != KindType::InfiniteCyclic) return false;
        return true;
    }
    bool is_racg() const {
        for (const auto& k : kinds_)
            if (k.type != KindType::FiniteCyclic || k.order != 2) return false;
        return true;
    }

    static Presentation raag(SimplicialGraph g) {
        std::vector<VertexKind> ks(g.size(), VertexKind::Z());
        return Presentation(std::move(g), std::move(ks));
    }
    static Presentation racg(SimplicialGraph g) {
        std::vector<VertexKind> ks(g.size(), VertexKind::Zn(2));
        return Presentation(std::move(g), std::move(ks));
    }
    /// F_n as the RAAG on the edgeless graph with n vertices.
    static Presentation free_group(int n) {
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
        return raag(SimplicialGraph(names, {}));
    }

  private:
    SimplicialGraph graph_;
    std::vector<VertexKind> kinds_;
};

}  // namespace sclgp

#endif
