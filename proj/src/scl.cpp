#include "sclgp/scl.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace sclgp {

WeightedStability fractional_weighted_stability(const SimplicialGraph& g,
                                                const std::map<std::string, Rat>& weights) {
    const std::size_t n = g.size();
    RationalLP lp;
    lp.objective.assign(n, Rat(0));
    for (const auto& [name, w] : weights) {
        if (w < 0) throw std::invalid_argument("negative vertex weight at " + name);
        lp.objective[g.index_of(name)] = w;
    }
    const auto cliques = maximal_cliques(g);
    for (const auto& q : cliques) {
        std::vector<Rat> row(n, Rat(0));
        for (std::size_t v : q) row[v] = 1;
        lp.rows.push_back(std::move(row));
        lp.rhs.emplace_back(1);
    }
    const LPSolution sol = solve(lp);
    if (sol.status != LPStatus::Optimal)
        throw std::logic_error("stable-measure program must have an optimum");
    WeightedStability out;
    out.value = sol.value;
    for (std::size_t v = 0; v < n; ++v) out.measure.weights[g.name(v)] = sol.primal[v];
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        if (sol.dual[i] == 0) continue;
        std::vector<std::string> names;
        for (std::size_t v : cliques[i]) names.push_back(g.name(v));
        out.cover.weights.emplace_back(std::move(names), sol.dual[i]);
    }
    return out;
}

WeightedStability fsn_full(const SimplicialGraph& g) {
    if (g.empty()) throw std::invalid_argument("fsn: empty graph");
    std::map<std::string, Rat> w;
    for (const auto& v : g.vertex_names()) w[v] = 1;
    return fractional_weighted_stability(g, w);
}

Rat fsn(const SimplicialGraph& g) { return fsn_full(g).value; }

DoubleChainResult double_chain_scl(const SimplicialGraph& g) {
    if (g.empty()) throw std::invalid_argument("double_chain_scl: empty graph");
    DoubleChainResult out;
    out.value = fsn(g) / 2;
    out.pres = Presentation::raag(double_graph(g));
    std::vector<std::pair<long long, Word>> terms;
    for (const auto& v : g.vertex_names()) {
        const std::size_t a = out.pres.graph().index_of("a:" + v);
        const std::size_t b = out.pres.graph().index_of("b:" + v);
        Word comm{make_letter(out.pres, a, {1, {}}), make_letter(out.pres, b, {1, {}}),
                  make_letter(out.pres, a, {-1, {}}), make_letter(out.pres, b, {-1, {}})};
        terms.emplace_back(1, std::move(comm));
    }
    out.chain = chain_make(out.pres, std::move(terms));
    return out;
}

WeightedStability vertex_chain_scl(const Presentation& p, const Chain& c,
                                   const std::map<std::string, Rat>& vertex_scl) {
    if (!is_vertex_chain(p, c))
        throw std::invalid_argument("vertex_chain_scl: chain has a multi-vertex term");
    std::map<std::string, Rat> weights;
    for (const auto& v : p.graph().vertex_names()) weights[v] = 0;
    for (const auto& [k, w] : c.terms)
        for (std::size_t v : support(p, w)) {
            auto it = vertex_scl.find(p.graph().name(v));
            if (it != vertex_scl.end()) weights[p.graph().name(v)] = it->second;
        }
    return fractional_weighted_stability(p.graph(), weights);
}

Word delta_generator_product(const Presentation& p, int i, int j) {
    Word w;
    for (int k = i; k <= j; ++k) {
        const std::size_t v = p.graph().index_of("v" + std::to_string(k));
        VGElem e;
        if (p.kind(v).type == KindType::Free)
            e.fword = {1};
        else
            e.exp = 1;
        w.push_back(make_letter(p, v, std::move(e)));
    }
    return normalize(p, w);
}

namespace {

int opposite_path_order(const Presentation& p) {
    const int m = static_cast<int>(p.size()) - 1;
    if (m < 1) throw std::invalid_argument("presentation is not an opposite path");
    SimplicialGraph expect = opposite_path(m);
    if (!(p.graph() == expect))
        throw std::invalid_argument("presentation graph is not Delta_m on v0..vm");
    return m;
}

}  // namespace

DeltaChainResult delta_chain(const Presentation& p) {
    DeltaChainResult out;
    out.m = opposite_path_order(p);
    if (out.m < 2) throw std::invalid_argument("delta_chain: need m >= 2");
    out.chain = chain_make(p, {{1, delta_generator_product(p, 0, out.m)},
                               {-1, delta_generator_product(p, 0, out.m - 1)},
                               {-1, delta_generator_product(p, 1, out.m)},
                               {1, delta_generator_product(p, 1, out.m - 1)}});
    out.lower = rat(1, 12 * (out.m + 2));
    out.upper = rat(1, out.m);
    return out;
}

namespace {

// Rational first homology class of a vertex chain, per vertex: torsion
// vertex groups contribute nothing; Z sums exponents; F_k sums the
// abelianized free word. Nonzero totals mean the chain is not rationally
// null-homologous and scl is infinite by convention.
bool rationally_null_homologous(const Presentation& p, const Chain& c) {
    std::map<std::size_t, std::map<int, long long>> totals;
    for (const auto& [k, w] : c.terms)
        for (const auto& l : normalize(p, w)) {
            switch (p.kind(l.vertex).type) {
                case KindType::FiniteCyclic:
                    break;
                case KindType::InfiniteCyclic:
                    totals[l.vertex][0] += k * l.elem.exp;
                    break;
                case KindType::Free:
                    for (int x : l.elem.fword) totals[l.vertex][std::abs(x)] += x > 0 ? k : -k;
                    break;
            }
        }
    for (const auto& [v, per_gen] : totals)
        for (const auto& [gen, sum] : per_gen)
            if (sum != 0) return false;
    return true;
}

// Built-in vertex scl constants: cyclic kinds have scl 0 on null-homologous
// terms; a Free(k) sub-chain consisting of single commutators [x_a, x_b] of
// distinct generators (up to conjugacy and inversion) has scl 1/2 per term.
std::optional<Rat> builtin_vertex_weight(const Presentation& p, std::size_t v,
                                         const std::vector<std::pair<long long, Letter>>& terms) {
    if (p.kind(v).type != KindType::Free) return Rat(0);
    // Only the single-commutator case is known in closed form.
    if (terms.size() != 1 || std::llabs(terms[0].first) != 1) return std::nullopt;
    std::vector<int> core = terms[0].second.elem.fword;
    while (core.size() >= 2 && core.front() == -core.back()) {
        core.erase(core.begin());
        core.pop_back();
    }
    if (core.size() != 4) return std::nullopt;
    const int a = core[0], b = core[1];
    if (std::abs(a) == std::abs(b)) return std::nullopt;
    if (core[2] != -a || core[3] != -b) return std::nullopt;
    return rat(1, 2);
}

}  // namespace

GapCertificate gap_certificate(const Presentation& p, const Chain& c,
                               const std::map<std::string, Rat>* vertex_scl) {
    GapCertificate cert;
    const Chain pf = pure_factor_chain(p, c);
    cert.witness = pf;
    if (!is_vertex_chain(p, pf)) {
        cert.kind = GapKind::LowerBoundOnly;
        const int delta = p.graph().empty() ? 0 : opposite_path_length(p.graph());
        cert.bound = rat(1, 12 * (delta + 2));
        return cert;
    }
    if (!rationally_null_homologous(p, pf)) {
        cert.kind = GapKind::InfiniteHomology;
        return cert;
    }
    if (p.is_raag() || p.is_racg()) {
        // Null-homologous vertex chains over abelian vertex groups are
        // equivalent to the zero chain.
        cert.kind = GapKind::ExactVertexChain;
        cert.value = 0;
        WeightedStability ws = vertex_chain_scl(p, pf, {});
        cert.measure = ws.measure;
        cert.cover = ws.cover;
        return cert;
    }
    std::map<std::string, Rat> weights;
    if (vertex_scl) {
        weights = *vertex_scl;
    } else {
        std::map<std::size_t, std::vector<std::pair<long long, Letter>>> by_vertex;
        for (const auto& [k, w] : pf.terms) {
            const Word n = normalize(p, w);
            if (n.size() == 1) by_vertex[n[0].vertex].emplace_back(k, n[0]);
        }
        for (const auto& [v, terms] : by_vertex) {
            auto weight = builtin_vertex_weight(p, v, terms);
            if (!weight) {
                cert.kind = GapKind::WeightsRequired;
                return cert;
            }
            weights[p.graph().name(v)] = *weight;
        }
    }
    WeightedStability ws = vertex_chain_scl(p, pf, weights);
    cert.kind = GapKind::ExactVertexChain;
    cert.value = ws.value;
    cert.measure = ws.measure;
    cert.cover = ws.cover;
    return cert;
}

std::string certificate_json(const Presentation& p, const GapCertificate& cert) {
    nlohmann::ordered_json j;
    switch (cert.kind) {
        case GapKind::ExactVertexChain: {
            j["status"] = "exact";
            j["value"] = rat_str(cert.value);
            nlohmann::ordered_json measure = nlohmann::ordered_json::object();
            for (const auto& [v, w] : cert.measure.weights) measure[v] = rat_str(w);
            j["stable_measure"] = measure;
            nlohmann::ordered_json cover = nlohmann::ordered_json::array();
            for (const auto& [q, w] : cert.cover.weights)
                cover.push_back({{"clique", q}, {"weight", rat_str(w)}});
            j["clique_cover"] = cover;
            break;
        }
        case GapKind::LowerBoundOnly:
            j["status"] = "lower_bound";
            j["bound"] = rat_str(cert.bound);
            j["witness"] = chain_str(p, cert.witness);
            break;
        case GapKind::WeightsRequired:
            j["status"] = "weights_required";
            j["witness"] = chain_str(p, cert.witness);
            break;
        case GapKind::InfiniteHomology:
            j["status"] = "infinite";
            break;
    }
    return j.dump(2);
}

}  // namespace sclgp
