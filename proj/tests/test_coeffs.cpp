#include <doctest.h>

#include "kvpoly/identities.hpp"
#include "kvpoly/oracles.hpp"

using namespace kvpoly;
using namespace kvpoly::local;
namespace orc = kvpoly::oracles;

TEST_CASE("clasp absorbs a crossing of its strands") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(clasp_with_crossing(n, k, true) == *clasp(n) * orc::clasp_crossing_coeff(n, k, 1));
            CHECK(clasp_with_crossing(n, k, false) == *clasp(n) * orc::clasp_crossing_coeff(n, k, -1));
        }
}

TEST_CASE("partial closure of a clasp") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(clasp_partial_closure(n, k) == *clasp(n - k) * orc::partial_closure_coeff(n, k));
        }
}

TEST_CASE("clasped curl") {
    for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        CHECK(clasp_with_curl(n, true) == *clasp(n) * orc::clasp_curl_coeff(n, 1));
        CHECK(clasp_with_curl(n, false) == *clasp(n) * orc::clasp_curl_coeff(n, -1));
    }
}

TEST_CASE("double clasp absorbs a crossing") {
    // the oracle sign is the sign of the exponent; a positive crossing lowers it
    for (int n = 1; n <= 2; ++n) {  // n = 3 takes minutes
        CAPTURE(n);
        WebSum rhs = double_clasp_with_diamond(n);
        CHECK(double_clasp_with_crossing(n, true) == rhs * orc::double_clasp_crossing_coeff(n, -1));
        CHECK(double_clasp_with_crossing(n, false) == rhs * orc::double_clasp_crossing_coeff(n, 1));
    }
}

TEST_CASE("triangle absorbs a crossing of two legs") {
    for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        WebSum rhs = triangle_with_legs(n);
        CHECK(triangle_with_crossing(n, true) == rhs * orc::vertex_crossing_coeff(n, -1));
        CHECK(triangle_with_crossing(n, false) == rhs * orc::vertex_crossing_coeff(n, 1));
    }
}

TEST_CASE("full twists of antiparallel clasped cables") {
    for (int n = 1; n <= 2; ++n)
        for (int l = 0; l <= 2; ++l) {
            CAPTURE(n);
            CAPTURE(l);
            WebSum rhs;
            for (const auto& [k, c] : orc::full_twist_expansion(n, l)) rhs += twist_basis_term(n, k) * c;
            CHECK(full_twists(n, l) == rhs);
        }
}

TEST_CASE("bubble between two clasps") {
    for (int n = 1; n <= 2; ++n)
        for (int m = 1; m <= 2; ++m)
            for (int k = 0; k <= std::min(n, m); ++k)
                for (int l = 0; l <= std::min(n, m); ++l) {
                    CAPTURE(n);
                    CAPTURE(m);
                    CAPTURE(k);
                    CAPTURE(l);
                    WebSum rhs;
                    for (const auto& [t, c] : orc::bubble_expansion(n, m, k, l)) rhs += bubble_term(n, m, k, l, t) * c;
                    CHECK(bubble(n, m, k, l) == rhs);
                }
}
