#include <doctest.h>

#include "kvpoly/oracles.hpp"

using namespace kvpoly;
using namespace kvpoly::oracles;

namespace {

Scalar vp(int e) { return Scalar::v_pow(e); }
Scalar qi(int n) { return Scalar(quantum_int(n)); }

Scalar lookup(const Expansion& e, int k) {
    for (const auto& [i, c] : e)
        if (i == k) return c;
    return Scalar();
}

}  // namespace

TEST_CASE("loop values") {
    CHECK(loop_value(0) == Scalar(1));
    CHECK(loop_value(1) == vp(6) + Scalar(1) + vp(-6));
    CHECK(loop_value(2) == (vp(6) + Scalar(1) + vp(-6)) * (vp(6) + vp(-6)));
    CHECK(double_loop_value(0) == Scalar(1));
    CHECK(double_loop_value(1) == qi(2) * qi(4));
    CHECK(double_loop_value(2) == qi(3) * qi(3) * qi(6) / qi(2));
}

TEST_CASE("clasp coefficients") {
    for (int n = 0; n <= 3; ++n) CHECK(clasp_crossing_coeff(n, 0, 1) == Scalar(1));
    CHECK(clasp_crossing_coeff(2, 1, 1) == vp(2));
    CHECK(clasp_crossing_coeff(3, 1, -1) == vp(-4));
    CHECK_THROWS(clasp_crossing_coeff(2, 3, 1));
    for (int n = 0; n <= 3; ++n) CHECK(partial_closure_coeff(n, 0) == Scalar(1));
    CHECK(partial_closure_coeff(1, 1) == qi(3));
    CHECK(partial_closure_coeff(2, 1) == vp(6) + vp(-6));
    CHECK_THROWS(partial_closure_coeff(1, 2));
    CHECK(clasp_curl_coeff(1, 1) == vp(8));
    CHECK(clasp_curl_coeff(1, -1) == vp(-8));
    CHECK(clasp_curl_coeff(2, 1) == vp(20));
}

TEST_CASE("twist coefficients") {
    CHECK(double_clasp_crossing_coeff(1, -1) == -vp(-1));
    CHECK(double_clasp_crossing_coeff(2, 1) == vp(4));
    CHECK(vertex_crossing_coeff(1, -1) == -vp(-4));
}

TEST_CASE("colored skein coefficients at color one are the elementary bracket") {
    auto p = colored_skein_coeffs(1, 1), m = colored_skein_coeffs(1, -1);
    REQUIRE(p.size() == 2);
    REQUIRE(m.size() == 2);
    CHECK(lookup(p, 0) == vp(2));
    CHECK(lookup(p, 1) == -vp(-1));
    CHECK(lookup(m, 0) == vp(-2));
    CHECK(lookup(m, 1) == -vp(1));
    auto p2 = colored_skein_coeffs(2, 1);
    CHECK(lookup(p2, 1) == -vp(-1) * (Scalar(1) + vp(6)));
    CHECK(lookup(p2, 2) == vp(-4));
}

TEST_CASE("twist chains") {
    CHECK(twist_chains(3, 0).size() == 1);
    CHECK(twist_chains(2, 1).size() == 3);
    // monotone chains of length l below n: binom(n + l, l)
    CHECK(twist_chains(2, 2).size() == 6);
    CHECK(twist_chains(3, 2).size() == 10);
    for (const auto& c : twist_chains(3, 3))
        for (size_t i = 1; i < c.size(); ++i) CHECK(c[i] <= c[i - 1]);
}

TEST_CASE("full twist expansion") {
    for (int n = 0; n <= 3; ++n) {
        auto e = full_twist_expansion(n, 0);
        REQUIRE(e.size() == 1);
        CHECK(e[0].first == n);
        CHECK(e[0].second == Scalar(1));
    }
    CHECK(full_twist_expansion(1, 1).size() == 2);
    CHECK(full_twist_expansion(2, 1).size() == 3);
}

TEST_CASE("bubble expansion") {
    for (int n = 0; n <= 2; ++n)
        for (int m = 0; m <= 2; ++m) {
            auto e = bubble_expansion(n, m, 0, 0);
            REQUIRE(e.size() == 1);
            CHECK(e[0].first == 0);
            CHECK(e[0].second == Scalar(1));
        }
    // one admissible t for k = l = n = m = 1: [1 1]^4 [3 1] / [1 1]^4
    auto e = bubble_expansion(1, 1, 1, 1);
    REQUIRE(e.size() == 1);
    CHECK(e[0].first == 1);
    CHECK(e[0].second == qi(3));
    CHECK(bubble_expansion(2, 1, 1, 0).size() == 1);
    CHECK_THROWS(bubble_coeff(1, 1, 1, 1, 0));
}

TEST_CASE("closed forms for the two-strand graphs") {
    CHECK(st_oriented(1, 0, 1) == qi(2));
    CHECK(st_oriented(1, 1, 1) == -vp(-4) * qi(2));
    CHECK(st_oriented(1, 1, 1).str() == "-1*v^-7 + -1*v^-1");
    CHECK(st_oriented(2, 2, 2) == vp(-20) * qi(3) * qi(3));
    CHECK(st_unoriented(0, 0) == Scalar(2));
    CHECK(st_unoriented(1, 0) == Scalar(2));
    for (int l = 0; l <= 2; ++l)
        for (int n = 0; n <= 3; ++n) {
            CAPTURE(l);
            CAPTURE(n);
            CHECK(st_unoriented(l, n) == st_unoriented_bracket_form(l, n));
        }
}
