#pragma once

#include "kvpoly/graph.hpp"
#include "kvpoly/webcore.hpp"

#include <iosfwd>
#include <string>

namespace kvpoly {

// Closed tangled trivalent diagrams, one record per line:
//   T3s >a >b >c        source, three outgoing edges counterclockwise
//   T3k <a <b <c        sink
//   X+ / X- / X         crossing as in diagram files (under strand at 1, 3)
//   O                   free circle
// Every label appears once as >a and once as <a. # starts a comment.
Assembly parse_web(std::istream& in);
Assembly parse_web(const std::string& text);

// Closed web of an oriented diagram whose vertices all have adjacent ins:
// each vertex becomes a sink joined to a source (the H web), crossings stay.
Diagram web_of_graph(const GraphDiagram& g);

// Random closed web with crossings, built from a random diagram of `size`
// nodes (std::mt19937_64 seeded with `seed`).
Diagram random_closed_web(uint64_t seed, int size);

}  // namespace kvpoly
