#pragma once

#include "kvpoly/clasps.hpp"

// Engine-side builders for local configurations with closed-form
// coefficients. Each returns the evaluated web in the disk; the caller
// compares against the closed forms in oracles.
namespace kvpoly::local {

// Clasp followed by its top n-k strands crossing its bottom k strands.
WebSum clasp_with_crossing(int n, int k, bool top_over);
// Clasp with its bottom k strands closed into loops.
WebSum clasp_partial_closure(int n, int k);
// Clasp followed by a curl of the whole cable; positive crossing when asked.
WebSum clasp_with_curl(int n, bool positive);
// (n, n) double clasp followed by a crossing of its two cables, then clasps.
WebSum double_clasp_with_crossing(int n, bool positive);
WebSum double_clasp_with_diamond(int n);
// Source triangle whose two right legs cross before reaching their clasps.
WebSum triangle_with_crossing(int n, bool positive);
WebSum triangle_with_legs(int n);

// Colored skein pieces.
WebSum skein_expansion(int n, bool positive);
WebSum triangle_bubble(int n);
WebSum triangle_square(int n);
WebSum triangle_square_expansion(int n);
Scalar clasp_loop(int n);
Scalar double_clasp_loop(int n);

// l full twists of two antiparallel clasped n-cables.
WebSum full_twists(int n, int l);
// Web with k straight strands on top and bottom and n - k turning back.
WebSum twist_basis_term(int n, int k);
// The bubble configuration and its reduced terms.
WebSum bubble(int n, int m, int k, int l);
WebSum bubble_term(int n, int m, int k, int l, int t);

}  // namespace kvpoly::local
