#pragma once

#include "kvpoly/graph.hpp"
#include "kvpoly/qscalar.hpp"
#include "kvpoly/webcore.hpp"

namespace kvpoly {

// Oriented invariant with edge color two_n. Crossings become clasped cable
// crossings; a vertex with adjacent ins becomes the diamond web whose middle
// ladder carries `variant_k` strands (default two_n / 2); an alternating
// vertex becomes the double-clasp term splitting the cable in halves.
Scalar kv_oriented(const GraphDiagram& g, int two_n, int variant_k = -1);
// Singular-link form: any edge color m, every vertex with adjacent ins,
// vertices replaced by the full ladder.
Scalar kv_singular(const GraphDiagram& g, int m);
// Unoriented invariant: (n, n) double clasp on every edge, crossings as grids
// of the triple cables, vertices as white square plus black square.
Scalar kv_unoriented(const GraphDiagram& g, int n);

// Multiplies an oriented value by the curl factor that cancels the writhe,
// giving the ambient-isotopy normalisation.
Scalar writhe_normalized(const GraphDiagram& g, int color, const Scalar& value);

// The closed webs behind the invariants, before reduction.
Assembly oriented_web(const GraphDiagram& g, int color, int variant_k, bool singular);
Assembly unoriented_web(const GraphDiagram& g, int n);

// Standard diagrams.
GraphDiagram unknot(bool oriented = true);
// Closure of a two-strand row of `vertices` rigid vertices followed by
// `crossings` positive crossings. Both strands run the same way.
GraphDiagram twist_closure(int vertices, int crossings);
// The same closure without orientation.
GraphDiagram twist_closure_unoriented(int vertices, int crossings);

}  // namespace kvpoly
