#include "sclgp/io.hpp"

#include <fstream>
#include <sstream>

#include "sclgp/qm.hpp"

namespace sclgp {

namespace {

// Line-counting reader so errors can cite positions.
struct LineReader {
    std::istream& in;
    int line = 0;

    bool next(std::string& out) {
        while (std::getline(in, out)) {
            ++line;
            if (!out.empty() && out.back() == '\r') out.pop_back();
            return true;
        }
        return false;
    }
    std::string expect(const std::string& what) {
        std::string s;
        if (!next(s)) throw ParseError(line + 1, "unexpected end of file, expected " + what);
        return s;
    }
};

SimplicialGraph read_graph_body(LineReader& r) {
    std::istringstream head(r.expect("\"n m\" header"));
    long long n = -1, m = -1;
    head >> n >> m;
    if (n < 0 || m < 0) throw ParseError(r.line, "expected \"n m\" header");
    std::vector<std::string> names;
    for (long long i = 0; i < n; ++i) {
        std::istringstream ls(r.expect("vertex name"));
        std::string v;
        ls >> v;
        if (v.empty()) throw ParseError(r.line, "empty vertex name");
        names.push_back(v);
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (long long i = 0; i < m; ++i) {
        std::istringstream ls(r.expect("edge \"u v\""));
        std::string u, v;
        ls >> u >> v;
        if (u.empty() || v.empty()) throw ParseError(r.line, "expected edge \"u v\"");
        edges.emplace_back(u, v);
    }
    try {
        return SimplicialGraph(names, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(r.line, e.what());
    }
}

}  // namespace

SimplicialGraph read_graph(std::istream& in) {
    LineReader r{in};
    return read_graph_body(r);
}

void write_graph(std::ostream& os, const SimplicialGraph& g) {
    os << g.size() << " " << g.edge_count() << "\n";
    for (const auto& v : g.vertex_names()) os << v << "\n";
    for (const auto& [i, j] : g.edges()) os << g.name(i) << " " << g.name(j) << "\n";
}

Presentation read_presentation(std::istream& in) {
    LineReader r{in};
    SimplicialGraph g = read_graph_body(r);
    std::vector<VertexKind> kinds(g.size());
    std::vector<bool> seen(g.size(), false);
    for (std::size_t i = 0; i < g.size(); ++i) {
        std::istringstream ls(r.expect("vertex kind line"));
        std::string v, kind;
        ls >> v >> kind;
        std::size_t idx;
        try {
            idx = g.index_of(v);
        } catch (const std::invalid_argument& e) {
            throw ParseError(r.line, e.what());
        }
        if (seen[idx]) throw ParseError(r.line, "duplicate kind for vertex " + v);
        seen[idx] = true;
        try {
            if (kind == "Z") {
                kinds[idx] = VertexKind::Z();
            } else if (kind.rfind("Z/", 0) == 0) {
                kinds[idx] = VertexKind::Zn(std::stoi(kind.substr(2)));
            } else if (kind == "F") {
                int k = 0;
                ls >> k;
                kinds[idx] = VertexKind::F(k);
            } else {
                throw std::invalid_argument("unknown kind \"" + kind + "\"");
            }
        } catch (const std::exception& e) {
            throw ParseError(r.line, std::string("bad vertex kind: ") + e.what());
        }
    }
    return Presentation(std::move(g), std::move(kinds));
}

void write_presentation(std::ostream& os, const Presentation& p) {
    write_graph(os, p.graph());
    for (std::size_t v = 0; v < p.size(); ++v) {
        os << p.graph().name(v) << " ";
        switch (p.kind(v).type) {
            case KindType::InfiniteCyclic:
                os << "Z";
                break;
            case KindType::FiniteCyclic:
                os << "Z/" << p.kind(v).order;
                break;
            case KindType::Free:
                os << "F " << p.kind(v).rank;
                break;
        }
        os << "\n";
    }
}

Word parse_word(const Presentation& p, const std::string& text, int line) {
    std::vector<std::string> tokens;
    {
        std::istringstream in(text);
        std::string t;
        while (in >> t) tokens.push_back(t);
    }
    if (tokens.size() == 1 && tokens[0] == "1" && !p.graph().has_vertex("1")) return {};
    Word w;
    for (const std::string& tok : tokens) {
        const auto caret = tok.find('^');
        const auto colon = tok.find(':');
        try {
            if (colon != std::string::npos) {
                const std::string v = tok.substr(0, colon);
                const std::size_t idx = p.graph().index_of(v);
                if (p.kind(idx).type != KindType::Free)
                    throw std::invalid_argument("vertex " + v + " is not of Free kind");
                VGElem e;
                e.fword = parse_free_word(tok.substr(colon + 1), p.kind(idx).rank);
                w.push_back(make_letter(p, idx, std::move(e)));
            } else {
                const std::string v = caret == std::string::npos ? tok : tok.substr(0, caret);
                const std::size_t idx = p.graph().index_of(v);
                if (p.kind(idx).type == KindType::Free)
                    throw std::invalid_argument("vertex " + v + " needs \"v:word\" syntax");
                VGElem e;
                e.exp = caret == std::string::npos ? 1 : std::stoll(tok.substr(caret + 1));
                w.push_back(make_letter(p, idx, std::move(e)));
            }
        } catch (const std::exception& e) {
            throw ParseError(line, "bad letter \"" + tok + "\": " + e.what());
        }
    }
    return w;
}

Chain read_chain(const Presentation& p, std::istream& in) {
    LineReader r{in};
    std::vector<std::pair<long long, Word>> terms;
    std::string s;
    while (r.next(s)) {
        if (s.empty() || s[0] == '#') continue;
        const auto tab = s.find('\t');
        if (tab == std::string::npos) throw ParseError(r.line, "expected \"coeff<TAB>word\"");
        long long k;
        try {
            k = std::stoll(s.substr(0, tab));
        } catch (const std::exception&) {
            throw ParseError(r.line, "bad coefficient \"" + s.substr(0, tab) + "\"");
        }
        terms.emplace_back(k, parse_word(p, s.substr(tab + 1), r.line));
    }
    return chain_make(p, std::move(terms));
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return f;
}

}  // namespace

SimplicialGraph read_graph_file(const std::string& path) {
    auto f = open_or_throw(path);
    return read_graph(f);
}

Presentation read_presentation_file(const std::string& path) {
    auto f = open_or_throw(path);
    return read_presentation(f);
}

Chain read_chain_file(const Presentation& p, const std::string& path) {
    auto f = open_or_throw(path);
    return read_chain(p, f);
}

}  // namespace sclgp
