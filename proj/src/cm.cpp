#include "sclgp/cm.hpp"

#include <algorithm>
#include <stdexcept>

namespace sclgp {

namespace {

bool supported_in(const Presentation& p, const Word& w, const std::set<std::size_t>& lambda) {
    for (const auto& l : w)
        if (!lambda.count(l.vertex)) return false;
    return true;
}

}  // namespace

DoubleCosetReduction cm_representative(const Presentation& p, const std::set<std::size_t>& lambda,
                                       const Word& g) {
    for (std::size_t v : lambda)
        if (v >= p.size()) throw std::invalid_argument("lambda contains unknown vertex");
    DoubleCosetReduction r;
    r.rep = normalize(p, g);
    if (supported_in(p, r.rep, lambda))
        throw std::invalid_argument("cm_representative: element lies in G(Lambda)");
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i : front_available(p, r.rep)) {
            if (!lambda.count(r.rep[i].vertex)) continue;
            r.left.push_back(r.rep[i]);
            r.rep.erase(r.rep.begin() + static_cast<long>(i));
            r.rep = normalize(p, std::move(r.rep));
            changed = true;
            break;
        }
        if (changed) continue;
        for (std::size_t i : back_available(p, r.rep)) {
            if (!lambda.count(r.rep[i].vertex)) continue;
            r.right.insert(r.right.begin(), r.rep[i]);
            r.rep.erase(r.rep.begin() + static_cast<long>(i));
            r.rep = normalize(p, std::move(r.rep));
            changed = true;
            break;
        }
    }
    r.left = normalize(p, std::move(r.left));
    r.right = normalize(p, std::move(r.right));
    return r;
}

std::set<std::size_t> centralizer_subgraph(const Presentation& p,
                                           const std::set<std::size_t>& lambda, const Word& rep) {
    const auto supp = support(p, rep);
    std::set<std::size_t> out;
    for (std::size_t v : lambda) {
        bool adj_all = true;
        for (std::size_t u : supp) adj_all = adj_all && u != v && p.adjacent(v, u);
        if (adj_all) out.insert(v);
    }
    return out;
}

CMNormalForm cm_normal_form(const Presentation& p, const std::set<std::size_t>& lambda,
                            const Word& g) {
    CMNormalForm nf;
    nf.subgraph_chain.push_back(lambda);
    Word residue = normalize(p, g);
    if (supported_in(p, residue, lambda))
        throw std::invalid_argument("cm_normal_form: element lies in G(Lambda)");
    std::set<std::size_t> level = lambda;  // Lambda_{i+1}, the subgroup h_i reduces against
    for (;;) {
        const DoubleCosetReduction r = cm_representative(p, level, residue);
        nf.cm_sequence.push_back(r.rep);
        // Conjugating by left^-1 turns left.rep.right into rep.(right.left);
        // the conjugator accumulates since deeper levels centralize the
        // earlier representatives.
        nf.conjugator = mul(p, nf.conjugator, r.left);
        residue = mul(p, r.right, r.left);
        level = centralizer_subgraph(p, level, r.rep);
        nf.subgraph_chain.push_back(level);
        if (supported_in(p, residue, level)) break;
    }
    nf.tail = residue;
    return nf;
}

}  // namespace sclgp
