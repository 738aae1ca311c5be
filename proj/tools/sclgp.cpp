#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "sclgp/cm.hpp"
#include "sclgp/io.hpp"
#include "sclgp/qm.hpp"
#include "sclgp/scl.hpp"
#include "sclgp/stats.hpp"

using nlohmann::ordered_json;
using namespace sclgp;

namespace {

std::set<std::size_t> parse_lambda(const Presentation& p, const std::string& csv) {
    std::set<std::size_t> out;
    std::stringstream ss(csv);
    std::string v;
    while (std::getline(ss, v, ',')) {
        if (!v.empty()) out.insert(p.graph().index_of(v));
    }
    return out;
}

std::map<std::string, Rat> parse_weights(const std::vector<std::string>& specs) {
    std::map<std::string, Rat> w;
    for (const auto& s : specs) {
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--weight expects v=p/q, got \"" + s + "\"");
        w[s.substr(0, eq)] = parse_rat(s.substr(eq + 1));
    }
    return w;
}

ordered_json stability_json(const WeightedStability& ws) {
    ordered_json j;
    j["value"] = rat_str(ws.value);
    ordered_json m = ordered_json::object();
    for (const auto& [v, x] : ws.measure.weights) m[v] = rat_str(x);
    j["stable_measure"] = m;
    ordered_json cover = ordered_json::array();
    for (const auto& [q, y] : ws.cover.weights)
        cover.push_back({{"clique", q}, {"weight", rat_str(y)}});
    j["clique_cover"] = cover;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stable commutator length in graph products"};
    app.require_subcommand(1);

    std::string pres_path, graph_path, chain_path, word_text, lambda_csv, format = "text";
    std::vector<std::string> weight_specs;
    bool auto_weights = false;
    int m_param = 3, vertices = 12, rank = 2, threads = 1;
    long long samples = 10000, power_n = 100;
    std::uint64_t seed = 1;
    std::string p_str = "1/2", brooks_word, element_word;
    std::string d_str = "-2", beta_str = "-0.2", mu_str = "2.164", c1_str = "0.3",
                c2_str = "-0.14";
    bool raw = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    auto* c_norm = app.add_subcommand("normalize", "canonical reduced form of a word");
    c_norm->add_option("--pres", pres_path)->required();
    c_norm->add_option("--word", word_text)->required();
    add_format(c_norm);

    auto* c_cyc = app.add_subcommand("cyclic-reduce", "cyclically reduced core and conjugator");
    c_cyc->add_option("--pres", pres_path)->required();
    c_cyc->add_option("--word", word_text)->required();
    add_format(c_cyc);

    auto* c_pf = app.add_subcommand("pure-factors", "pure factor decomposition");
    c_pf->add_option("--pres", pres_path)->required();
    c_pf->add_option("--word", word_text)->required();
    add_format(c_pf);

    auto* c_cent = app.add_subcommand("centralizer", "centralizer description");
    c_cent->add_option("--pres", pres_path)->required();
    c_cent->add_option("--word", word_text)->required();
    add_format(c_cent);

    auto* c_cm = app.add_subcommand("cm-reduce", "canonical CM normal form");
    c_cm->add_option("--pres", pres_path)->required();
    c_cm->add_option("--lambda", lambda_csv, "comma-separated subgraph vertices")->required();
    c_cm->add_option("--word", word_text)->required();
    add_format(c_cm);

    auto* c_fsn = app.add_subcommand("fsn", "fractional stability number");
    c_fsn->add_option("--graph", graph_path)->required();
    add_format(c_fsn);

    auto* c_vc = app.add_subcommand("scl-vertex-chain", "exact scl of a vertex chain");
    c_vc->add_option("--pres", pres_path)->required();
    c_vc->add_option("--chain", chain_path)->required();
    c_vc->add_option("--weight", weight_specs, "per-vertex scl weight v=p/q");
    c_vc->add_flag("--auto-weights", auto_weights, "use built-in constants via gap machinery");
    add_format(c_vc);

    auto* c_dc = app.add_subcommand("double-chain", "scl of the double chain of a graph");
    c_dc->add_option("--graph", graph_path)->required();
    add_format(c_dc);

    auto* c_dg = app.add_subcommand("delta-gamma", "opposite path length Delta(Gamma)");
    c_dg->add_option("--graph", graph_path)->required();

    auto* c_gap = app.add_subcommand("gap", "spectral-gap certificate for an integral chain");
    c_gap->add_option("--pres", pres_path)->required();
    c_gap->add_option("--chain", chain_path)->required();
    c_gap->add_option("--weight", weight_specs, "per-vertex scl weight v=p/q");

    auto* c_delta = app.add_subcommand("delta-chain", "the delta_m chain and its scl bounds");
    c_delta->add_option("--m", m_param, "opposite path length")->required();
    c_delta->add_option("--pres", pres_path, "presentation over Delta_m (default: RAAG)");
    add_format(c_delta);

    auto* c_brooks = app.add_subcommand("brooks-bound", "Bavard lower bound from a Brooks map");
    c_brooks->add_option("--rank", rank, "free group rank");
    c_brooks->add_option("--brooks-word", brooks_word)->required();
    c_brooks->add_option("--element", element_word)->required();
    c_brooks->add_option("--power", power_n, "homogenization power N");
    add_format(c_brooks);

    auto* c_sfsn = app.add_subcommand("sample-fsn", "fsn histogram over random graphs (CSV)");
    c_sfsn->add_option("--vertices", vertices);
    c_sfsn->add_option("--p", p_str, "edge probability (rational or decimal)");
    c_sfsn->add_option("--samples", samples);
    c_sfsn->add_option("--seed", seed);
    c_sfsn->add_option("--threads", threads);

    auto* c_sx = app.add_subcommand("sample-x", "X-distribution sampler (CSV histogram)");
    c_sx->add_option("--d", d_str);
    c_sx->add_option("--beta", beta_str);
    c_sx->add_option("--mu", mu_str);
    c_sx->add_option("--c1", c1_str);
    c_sx->add_option("--c2", c2_str);
    c_sx->add_option("--samples", samples);
    c_sx->add_option("--seed", seed);
    c_sx->add_option("--threads", threads);
    c_sx->add_flag("--raw", raw, "emit one sample per line instead of the histogram");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_norm) {
            const Presentation p = read_presentation_file(pres_path);
            const Word w = normalize(p, parse_word(p, word_text));
            if (format == "json") {
                ordered_json j{{"word", word_str(p, w)}, {"syllable_length", w.size()}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << word_str(p, w) << "\n";
            }
        } else if (*c_cyc) {
            const Presentation p = read_presentation_file(pres_path);
            const auto r = cyclically_reduce(p, parse_word(p, word_text));
            if (format == "json") {
                ordered_json j{{"conjugator", word_str(p, r.conjugator)},
                               {"core", word_str(p, r.core)}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "conjugator: " << word_str(p, r.conjugator) << "\n"
                          << "core: " << word_str(p, r.core) << "\n";
            }
        } else if (*c_pf) {
            const Presentation p = read_presentation_file(pres_path);
            const auto f = pure_factor_decomposition(p, parse_word(p, word_text));
            ordered_json j;
            j["conjugator"] = word_str(p, f.conjugator);
            ordered_json singles = ordered_json::array();
            for (const auto& l : f.singleton_factors) singles.push_back(word_str(p, Word{l}));
            j["singleton_factors"] = singles;
            ordered_json pures = ordered_json::array();
            for (const auto& pf : f.pure_factors)
                pures.push_back({{"root", word_str(p, pf.root)}, {"exponent", pf.exponent}});
            j["pure_factors"] = pures;
            if (format == "json") {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "conjugator: " << word_str(p, f.conjugator) << "\n";
                for (const auto& l : f.singleton_factors)
                    std::cout << "singleton: " << word_str(p, Word{l}) << "\n";
                for (const auto& pf : f.pure_factors)
                    std::cout << "factor: (" << word_str(p, pf.root) << ")^" << pf.exponent
                              << "\n";
            }
        } else if (*c_cent) {
            const Presentation p = read_presentation_file(pres_path);
            const auto z = centralizer_description(p, parse_word(p, word_text));
            ordered_json j;
            j["conjugator"] = word_str(p, z.conjugator);
            ordered_json singles = ordered_json::array();
            for (const auto& s : z.singletons) {
                ordered_json e{{"factor", word_str(p, Word{s.factor})},
                               {"whole_vertex_group", s.whole_vertex_group}};
                if (!s.whole_vertex_group) e["free_root"] = free_word_str(s.free_root);
                singles.push_back(e);
            }
            j["singletons"] = singles;
            ordered_json roots = ordered_json::array();
            for (const auto& pf : z.pure_factors) roots.push_back(word_str(p, pf.root));
            j["roots"] = roots;
            ordered_json dg = ordered_json::array();
            for (std::size_t v : z.dg) dg.push_back(p.graph().name(v));
            j["d_g"] = dg;
            std::cout << j.dump(2) << "\n";
        } else if (*c_cm) {
            const Presentation p = read_presentation_file(pres_path);
            const auto nf =
                cm_normal_form(p, parse_lambda(p, lambda_csv), parse_word(p, word_text));
            ordered_json j;
            j["conjugator"] = word_str(p, nf.conjugator);
            ordered_json seq = ordered_json::array();
            for (const auto& h : nf.cm_sequence) seq.push_back(word_str(p, h));
            j["cm_sequence"] = seq;
            j["tail"] = word_str(p, nf.tail);
            ordered_json chain = ordered_json::array();
            for (const auto& lam : nf.subgraph_chain) {
                ordered_json names = ordered_json::array();
                for (std::size_t v : lam) names.push_back(p.graph().name(v));
                chain.push_back(names);
            }
            j["subgraph_chain"] = chain;
            std::cout << j.dump(2) << "\n";
        } else if (*c_fsn) {
            const auto ws = fsn_full(read_graph_file(graph_path));
            if (format == "json")
                std::cout << stability_json(ws).dump(2) << "\n";
            else
                std::cout << rat_str(ws.value) << "\n";
        } else if (*c_vc) {
            const Presentation p = read_presentation_file(pres_path);
            const Chain c = read_chain_file(p, chain_path);
            if (auto_weights) {
                const GapCertificate cert = gap_certificate(p, c, nullptr);
                std::cout << certificate_json(p, cert) << "\n";
            } else {
                const auto ws = vertex_chain_scl(p, c, parse_weights(weight_specs));
                if (format == "json")
                    std::cout << stability_json(ws).dump(2) << "\n";
                else
                    std::cout << rat_str(ws.value) << "\n";
            }
        } else if (*c_dc) {
            const auto r = double_chain_scl(read_graph_file(graph_path));
            if (format == "json") {
                ordered_json j{{"value", rat_str(r.value)},
                               {"chain", chain_str(r.pres, r.chain)}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << rat_str(r.value) << "\n";
            }
        } else if (*c_dg) {
            std::cout << opposite_path_length(read_graph_file(graph_path)) << "\n";
        } else if (*c_gap) {
            const Presentation p = read_presentation_file(pres_path);
            const Chain c = read_chain_file(p, chain_path);
            std::map<std::string, Rat> w;
            const bool have_w = !weight_specs.empty();
            if (have_w) w = parse_weights(weight_specs);
            std::cout << certificate_json(p, gap_certificate(p, c, have_w ? &w : nullptr))
                      << "\n";
        } else if (*c_delta) {
            Presentation p = pres_path.empty() ? Presentation::raag(opposite_path(m_param))
                                               : read_presentation_file(pres_path);
            const auto r = delta_chain(p);
            if (format == "json") {
                ordered_json j{{"m", r.m},
                               {"chain", chain_str(p, r.chain)},
                               {"lower", rat_str(r.lower)},
                               {"upper", rat_str(r.upper)}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "chain: " << chain_str(p, r.chain) << "\n"
                          << "scl in [" << rat_str(r.lower) << ", " << rat_str(r.upper) << "]\n";
            }
        } else if (*c_brooks) {
            const FreeWord w = parse_free_word(brooks_word, rank);
            const FreeWord g = parse_free_word(element_word, rank);
            const auto phi = brooks_qm(w);
            const auto bracket = homogenize_bracket(phi, g, power_n);
            const Rat bound = bavard_lower_bound({{1, bracket}}, 2 * phi.defect_bound);
            ordered_json j{{"brooks_word", free_word_str(w)},
                           {"element", free_word_str(g)},
                           {"power", power_n},
                           {"estimate", rat_str(bracket.estimate)},
                           {"halfwidth", rat_str(bracket.halfwidth)},
                           {"scl_lower_bound", rat_str(bound)}};
            if (format == "json")
                std::cout << j.dump(2) << "\n";
            else
                std::cout << "scl >= " << rat_str(bound) << "\n";
        } else if (*c_sfsn) {
            const double p = parse_rat(p_str).get_d();
            const Histogram h = fsn_histogram(vertices, p, samples, seed, threads);
            write_csv(std::cout, h);
        } else if (*c_sx) {
            XParams params{parse_rat(d_str), parse_rat(beta_str), parse_rat(mu_str),
                           parse_rat(c1_str), parse_rat(c2_str)};
            const auto values = sample_x(params, samples, seed, threads);
            if (raw) {
                for (const auto& v : values) std::cout << rat_str_frac(v) << "\n";
            } else {
                write_csv(std::cout, histogram_of(values));
            }
        }
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
