#pragma once

#include "kvpoly/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kvpoly {

enum class MoveKind { RI, RII, RIII, RIV_a, RIV_b, RV_a, RV_b };
enum class MoveDirection { Apply, Undo };

// A move at a site. Sites are darts of the diagram:
//   RI apply   {d}     kinks on the edge leaving d; option bit 0 picks the
//                      side, bit 1 makes the first kink pass over first
//   RI undo    {a}     a is the outer dart of the first of two kinks
//   RII apply  {d, f}  edges leaving d and f, both on the face left of d;
//                      option 1 puts the edge of f on top
//   RII undo   {a}     a dart of a two-sided face between two crossings
//   RIII       {a}     a dart of a triangular face of three crossings
//   RIV_a/b    {a}     a dart at the vertex of a triangular face whose other
//                      side passes over (a) or under (b) both crossings
//   RV_a/b     {a}     apply: the vertex of a is turned over about the axis
//                      between slots a and a+1 and the two opposite ones;
//                      the legs at a+1, a+2 pass over (a) or under (b).
//                      undo: a is the leg of a turned vertex as produced by
//                      apply.
// RIII and RIV are their own inverses and use Apply only.
struct MoveSpec {
    MoveKind move = MoveKind::RI;
    MoveDirection direction = MoveDirection::Apply;
    std::vector<int> site;
    int option = 0;
    std::string str() const;
};

const char* move_name(MoveKind k);

// Throws std::invalid_argument when the site does not match the move.
GraphDiagram apply_move(const GraphDiagram& g, const MoveSpec& spec);
std::vector<MoveSpec> enumerate_move_sites(const GraphDiagram& g);

struct RandomOptions {
    bool oriented = true;
    double vertex_fraction = 0.4;
    // Only vertices whose two strands pass straight through (adjacent ins).
    bool adjacent_only = false;
};

// Connected planar diagram with `size` nodes grown by pinching pairs of edges
// that share a face; size 0 gives the unknot. Deterministic in the seed
// (std::mt19937_64).
GraphDiagram random_diagram(uint64_t seed, int size, const RandomOptions& opts = {});

}  // namespace kvpoly
