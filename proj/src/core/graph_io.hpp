#pragma once

#include <string>
#include <string_view>

#include "core/graph.hpp"

namespace planex {

// graph6: the standard printable format (see nauty's formats.txt). Only the
// plain graph6 body is accepted; an optional ">>graph6<<" header is stripped.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// JSON edge list: {"n": int, "edges": [[u, v], ...]}. Edges are emitted in
// sorted order, so to_json(from_json(s)) is canonical.
Graph graph_from_json(std::string_view text);
std::string graph_to_json(const Graph& g);

/// Parses the graph descriptors used by the CLI:
///   P5, C6, K4, K2,7, M3 (matching), S4 (star), icosahedron, icosahedron-
///   blowup(<descriptor>,<k>)
///   g6:<graph6 body>
///   {"n":..,"edges":..}           inline JSON
/// Throws Error(Parse) on anything else.
Graph parse_graph_descriptor(std::string_view descriptor);

}  // namespace planex
