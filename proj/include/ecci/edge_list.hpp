#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "ecci/graph.hpp"

namespace ecci {

// Text edge-list format: first line "n m", then m lines "u v" or "u v w"
// (0-based ids, whitespace separated). Anything else, including trailing
// junk, is a parse error.
inline Graph parse_edge_list(std::istream& in) {
    std::string line;
    long long lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            return true;
        }
        return false;
    };
    if (!next_line()) throw ParseError("empty input, expected header 'n m'");
    long long n = 0, m = 0;
    {
        std::istringstream hdr(line);
        std::string extra;
        if (!(hdr >> n >> m) || (hdr >> extra)) {
            throw ParseError("line 1: header must be exactly 'n m'");
        }
        if (n < 0 || m < 0) throw ParseError("line 1: negative counts");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_line()) {
            throw ParseError("expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        }
        std::istringstream row(line);
        long long u = 0, v = 0, w = 1;
        std::string extra;
        if (!(row >> u >> v)) {
            throw ParseError("line " + std::to_string(lineno) + ": expected 'u v' or 'u v w'");
        }
        if (row >> w) {
            if (row >> extra) {
                throw ParseError("line " + std::to_string(lineno) + ": trailing junk");
            }
        } else {
            w = 1;
        }
        if (u < INT32_MIN || u > INT32_MAX || v < INT32_MIN || v > INT32_MAX) {
            throw ParseError("line " + std::to_string(lineno) + ": vertex id out of range");
        }
        edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
    }
    std::string extra;
    if (in >> extra) throw ParseError("trailing junk after the last edge");
    if (n > INT32_MAX) throw ParseError("vertex count too large");
    return Graph(static_cast<int>(n), edges);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v;
        if (g.weighted()) out << ' ' << e.w;
        out << '\n';
    }
}

} // namespace ecci
