#ifndef SCLGP_IO_HPP
#define SCLGP_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "sclgp/chain.hpp"
#include "sclgp/graph.hpp"
#include "sclgp/presentation.hpp"
#include "sclgp/word.hpp"

namespace sclgp {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

/// Graph text format: "n m", n vertex-name lines, m "u v" lines.
SimplicialGraph read_graph(std::istream& in);
void write_graph(std::ostream& os, const SimplicialGraph& g);

/// Presentation file: the graph section followed by one kind line per
/// vertex: "v Z" | "v Z/n" | "v F k".
Presentation read_presentation(std::istream& in);
void write_presentation(std::ostream& os, const Presentation& p);

/// Word syntax: whitespace-separated letters "v^k" (cyclic kinds; bare "v"
/// means v^1) or "v:w" (Free kind, w over x1..xk / X1..Xk or a..z / A..Z).
/// "1" denotes the empty word.
Word parse_word(const Presentation& p, const std::string& text, int line = 0);

/// Chain file: one term per line, "coeff<TAB>word"; blank lines and lines
/// starting with '#' are skipped.
Chain read_chain(const Presentation& p, std::istream& in);

SimplicialGraph read_graph_file(const std::string& path);
Presentation read_presentation_file(const std::string& path);
Chain read_chain_file(const Presentation& p, const std::string& path);

}  // namespace sclgp

#endif
