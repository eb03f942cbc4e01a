#pragma once

#include "kvpoly/qscalar.hpp"

#include <utility>
#include <vector>

// Closed-form coefficients and closed-graph values. Nothing here touches the
// web engine; only qscalar arithmetic is used.
namespace kvpoly::oracles {

using Expansion = std::vector<std::pair<int, Scalar>>;

// Clasped n-colored circle.
Scalar loop_value(int n);
// Circle carrying the (n, n) double clasp.
Scalar double_loop_value(int n);

// `sign` is the sign of the exponent in the displayed coefficient.
Scalar clasp_crossing_coeff(int n, int k, int sign);
Scalar partial_closure_coeff(int n, int k);
Scalar clasp_curl_coeff(int n, int sign);
Scalar double_clasp_crossing_coeff(int n, int sign);
Scalar vertex_crossing_coeff(int n, int sign);

// Coefficients of the diamond webs in the expansion of a crossing of two
// clasped n-cables; sign +1 for the positive crossing. Indexed by the
// diamond size k.
Expansion colored_skein_coeffs(int n, int sign);

// All chains n >= k_1 >= ... >= k_l >= 0, in lexicographic order.
std::vector<std::vector<int>> twist_chains(int n, int l);
// l full twists of two antiparallel clasped n-cables, as coefficients of the
// webs with k_l straight strands per side, indexed by k_l.
Expansion full_twist_expansion(int n, int l);

Scalar bubble_coeff(int n, int m, int k, int l, int t);
// Indexed by t over the admissible range; empty when the range is empty.
Expansion bubble_expansion(int n, int m, int k, int l);

Scalar st_oriented(int k, int l, int m);
// The closed form for the unoriented two-strand graph with one vertex and 2l
// crossings, in its final q-binomial form and in the intermediate quantum
// binomial form. The two must agree.
Scalar st_unoriented(int l, int n);
Scalar st_unoriented_bracket_form(int l, int n);

}  // namespace kvpoly::oracles
