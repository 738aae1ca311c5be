#include <doctest.h>

#include "oracles.hpp"
#include "sclgp/factor.hpp"
#include "sclgp/io.hpp"

using namespace sclgp;

namespace {

Presentation f2() { return Presentation::raag(SimplicialGraph({"a", "b"}, {})); }

Word W(const Presentation& p, const std::string& s) { return parse_word(p, s); }

// Brute-force maximal-root search: try every reduced word of length |w|/e
// over the generator alphabet as an e-th root.
long long brute_max_exponent(const Presentation& p, const Word& w) {
    std::vector<Letter> alphabet;
    for (std::size_t v = 0; v < p.size(); ++v)
        for (long long e = -9; e <= 9; ++e) {
            if (e == 0) continue;
            if (p.kind(v).type == KindType::InfiniteCyclic)
                alphabet.push_back(make_letter(p, v, {e, {}}));
            else if (p.kind(v).type == KindType::FiniteCyclic && e >= 1 &&
                     e < p.kind(v).order)
                alphabet.push_back(make_letter(p, v, {e, {}}));
        }
    const std::size_t L = normalize(p, w).size();
    for (long long e = static_cast<long long>(L); e >= 2; --e) {
        if (L % static_cast<std::size_t>(e) != 0) continue;
        std::vector<Word> cands;
        oracle::enumerate_words(p, alphabet, L / static_cast<std::size_t>(e), cands);
        for (const auto& c : cands)
            if (c.size() == L / static_cast<std::size_t>(e) && equal(p, power(p, c, e), w))
                return e;
    }
    return 1;
}

}  // namespace

TEST_CASE("pure factor decomposition") {
    const auto pe = Presentation::raag(SimplicialGraph({"u", "v"}, {{"u", "v"}}));
    auto f = pure_factor_decomposition(pe, W(pe, "u v"));
    CHECK(f.singleton_factors.size() == 2);
    CHECK(f.pure_factors.empty());

    const auto pf = f2();
    f = pure_factor_decomposition(pf, W(pf, "a b a^-1 b^-1"));
    CHECK(f.singleton_factors.empty());
    REQUIRE(f.pure_factors.size() == 1);
    CHECK(f.pure_factors[0].exponent == 1);
    CHECK(brute_max_exponent(pf, W(pf, "a b a^-1 b^-1")) == 1);

    f = pure_factor_decomposition(pf, W(pf, "a b a b a b"));
    REQUIRE(f.pure_factors.size() == 1);
    CHECK(f.pure_factors[0].exponent == 3);
    CHECK(equal(pf, f.pure_factors[0].root, W(pf, "a b")));

    CHECK_THROWS_AS(pure_factor_decomposition(pf, Word{}), std::invalid_argument);

    Prng rng(47);
    for (int t = 0; t < 150; ++t) {
        const auto p = oracle::random_presentation(rng);
        const Word g = oracle::random_nontrivial_word(p, rng, 6);
        const auto dec = pure_factor_decomposition(p, g);
        CHECK(equal(p, reassemble(p, dec), g));
        for (const auto& pfac : dec.pure_factors) {
            CHECK(pfac.root.size() >= 2);
            CHECK(is_cyclically_reduced(p, pfac.root));
            CHECK(pfac.exponent >= 1);
        }
        // Factors of a conjugate are cyclically conjugate to the originals.
        const Word h = oracle::random_word(p, rng, 3);
        const auto dec2 = pure_factor_decomposition(p, conjugate(p, h, g));
        REQUIRE(dec2.pure_factors.size() == dec.pure_factors.size());
        REQUIRE(dec2.singleton_factors.size() == dec.singleton_factors.size());
        for (const auto& pf1 : dec.pure_factors) {
            bool matched = false;
            for (const auto& pf2 : dec2.pure_factors)
                if (pf1.exponent == pf2.exponent && conjugate_cyclic(p, pf1.root, pf2.root))
                    matched = true;
            CHECK(matched);
        }
    }

    // Root exponents against the brute-force search on cyclic-kind words.
    for (int t = 0; t < 60; ++t) {
        const auto p = oracle::random_presentation(rng, 3, false);
        Word g = oracle::random_nontrivial_word(p, rng, 3);
        g = power(p, g, rng.next_range(1, 3));
        const auto core = cyclically_reduce(p, g).core;
        if (core.empty()) continue;
        const auto dec = pure_factor_decomposition(p, core);
        if (dec.pure_factors.size() == 1 && dec.singleton_factors.empty() &&
            core.size() <= 6) {
            CHECK(dec.pure_factors[0].exponent == brute_max_exponent(p, core));
        }
    }
}

TEST_CASE("centralizers") {
    const auto p2 = Presentation::raag(opposite_path(2));
    auto z = centralizer_description(p2, W(p2, "v0"));
    CHECK(z.dg == std::set<std::size_t>{p2.graph().index_of("v2")});
    REQUIRE(z.singletons.size() == 1);
    CHECK(z.singletons[0].whole_vertex_group);

    const auto pf = f2();
    z = centralizer_description(pf, W(pf, "a b"));
    CHECK(z.dg.empty());
    CHECK(z.singletons.empty());
    REQUIRE(z.pure_factors.size() == 1);
    CHECK(in_centralizer(pf, z, W(pf, "a b a b")));
    CHECK(!in_centralizer(pf, z, W(pf, "a")));

    const auto path = Presentation::raag(
        SimplicialGraph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}));
    z = centralizer_description(path, W(path, "b"));
    CHECK(z.dg == std::set<std::size_t>{path.graph().index_of("a"),
                                        path.graph().index_of("c")});

    // commutes(g,h) agrees with membership in the centralizer
    // parametrization on random pairs.
    Prng rng(53);
    int positives = 0;
    for (int t = 0; t < 250; ++t) {
        const auto p = oracle::random_presentation(rng, 4);
        const Word g = oracle::random_nontrivial_word(p, rng, 4);
        Word h = oracle::random_word(p, rng, 4);
        if (t % 3 == 0) {  // bias towards commuting pairs
            h = power(p, g, rng.next_range(1, 2));
            if (t % 6 == 0) h = conjugate(p, oracle::random_word(p, rng, 2), h);
        }
        const auto zd = centralizer_description(p, g);
        const bool direct = commutes(p, g, h);
        CHECK(direct == in_centralizer(p, zd, h));
        positives += direct;
    }
    CHECK(positives > 20);
}

TEST_CASE("pure factor chains") {
    const auto pf = f2();
    const Word comm = W(pf, "a b a^-1 b^-1");
    Chain c = chain_make(pf, {{1, comm}});
    Chain out = pure_factor_chain(pf, c);
    REQUIRE(out.terms.size() == 1);
    CHECK(out.terms[0].first == 1);
    CHECK(conjugate_cyclic(pf, out.terms[0].second, comm));
    CHECK(!conjugate_to_inverse(pf, comm));
    CHECK(!oracle::brute_conjugate(pf, comm, inverse(pf, comm), 5));

    const auto pe = Presentation::raag(SimplicialGraph({"u", "v"}, {{"u", "v"}}));
    out = pure_factor_chain(pe, chain_make(pe, {{1, W(pe, "u v")}}));
    CHECK(out == chain_make(pe, {{1, W(pe, "u")}, {1, W(pe, "v")}}));

    const auto pc = Presentation::racg(SimplicialGraph({"u", "v"}, {}));
    out = pure_factor_chain(pc, chain_make(pc, {{1, W(pc, "u v")}}));
    CHECK(out.zero());

    // u + v - uv over an edge collapses into the zero chain.
    auto test = is_vertex_chain_equivalent(
        pe, chain_make(pe, {{1, W(pe, "u")}, {1, W(pe, "v")}, {-1, W(pe, "u v")}}));
    CHECK(test.is_vertex_chain);
    CHECK(test.witness.zero());

    CHECK(!is_vertex_chain_equivalent(pf, chain_make(pf, {{1, comm}})).is_vertex_chain);
}

TEST_CASE("racg zero scl") {
    const auto pc = Presentation::racg(SimplicialGraph({"u", "v", "w"}, {}));
    CHECK(racg_zero_scl(pc, W(pc, "u v")));
    CHECK(racg_zero_scl(pc, power(pc, W(pc, "u v"), 3)));
    // u v w is NOT conjugate to its inverse w v u (rotations of uvw are
    // uvw, vwu, wuv only); the brute-force conjugator search is the
    // authority and agrees.
    CHECK(!racg_zero_scl(pc, W(pc, "u v w")));
    CHECK(!oracle::brute_conjugate(pc, W(pc, "u v w"), W(pc, "w v u"), 4));
    CHECK(!conjugate_cyclic(pc, W(pc, "u v w"), W(pc, "w v u")));

    CHECK_THROWS_AS(racg_zero_scl(f2(), Word{}), std::invalid_argument);

    // Elements of the form (involution)(involution) always come back true.
    Prng rng(59);
    for (int t = 0; t < 80; ++t) {
        const auto g = random_graph(int(rng.next_range(2, 5)), 0.4, rng.next_u64());
        const auto p = Presentation::racg(g);
        auto involution = [&]() {
            const std::size_t v = rng.next_below(p.size());
            const Word x = oracle::random_word(p, rng, 2);
            return conjugate(p, x, W(p, p.graph().name(v)));
        };
        const Word prod = mul(p, involution(), involution());
        if (!normalize(p, prod).empty()) CHECK(racg_zero_scl(p, prod));
    }
}

TEST_CASE("sigma invariance") {
    // sigma_gamma is unchanged by every equivalence move.
    Prng rng(61);
    int checked = 0;
    for (int t = 0; t < 600 && checked < 120; ++t) {
        const auto p = oracle::random_presentation(rng, 4);
        Chain c = chain_make(p, {{rng.next_range(-2, 2), oracle::random_word(p, rng, 4)},
                                 {rng.next_range(-2, 2), oracle::random_word(p, rng, 4)}});
        // Collect candidate primitive factors from the chain itself.
        std::vector<Word> gammas;
        for (const auto& [k, w] : c.terms)
            for (const auto& pfac : pure_factor_decomposition(p, w).pure_factors)
                if (!conjugate_to_inverse(p, pfac.root)) gammas.push_back(pfac.root);
        if (gammas.empty()) continue;

        EquivalenceMove mv;
        const Word g = oracle::random_nontrivial_word(p, rng, 3);
        switch (rng.next_range(0, 2)) {
            case 0:
                mv = {EquivalenceMove::Kind::Power, rng.next_bernoulli(0.5), g, {},
                      rng.next_range(1, 3)};
                break;
            case 1:
                mv = {EquivalenceMove::Kind::Conjugate, rng.next_bernoulli(0.5), g,
                      oracle::random_word(p, rng, 2), 1};
                break;
            default: {
                const Word h = power(p, g, rng.next_range(1, 2));
                mv = {EquivalenceMove::Kind::SplitCommuting, rng.next_bernoulli(0.5), g, h, 1};
                break;
            }
        }
        const Chain moved = apply_equivalence_move(p, c, mv);
        for (const auto& gamma : gammas) CHECK(sigma(p, c, gamma) == sigma(p, moved, gamma));
        ++checked;
    }
    CHECK(checked >= 100);
}
