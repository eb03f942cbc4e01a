#include <doctest.h>

#include "support/clasp_configs.hpp"

using namespace kvpoly;
using namespace kvpoly::testing;

TEST_CASE("clasp(1) is a strand and clasp(2) has two terms") {
    CHECK(clasp(1)->terms.size() == 1);
    auto c2 = clasp(2);
    REQUIRE(c2->terms.size() == 2);
    Scalar half = Scalar(1) / Scalar(quantum_int(2));
    bool found_identity = false, found_h = false;
    for (const auto& [c, d] : c2->terms) {
        if (d.live_vertex_count() == 0) {
            found_identity = c == Scalar(1);
        } else {
            found_h = c == -half && d.live_vertex_count() == 2;
        }
    }
    CHECK(found_identity);
    CHECK(found_h);
}

TEST_CASE("clasps are idempotent") {
    for (int n = 1; n <= 4; ++n) CHECK(compose_clasps(n) == *clasp(n));
}

TEST_CASE("clasps kill turnbacks") {
    for (int n = 2; n <= 4; ++n)
        for (int top = 0; top <= n - 2; ++top) CHECK(clasp_turnback(n, top).is_zero());
}

TEST_CASE("double clasp basics") {
    CHECK(*double_clasp(0, 2) == *clasp(2));
    CHECK(*double_clasp(2, 0) == rotated(*clasp(2), 2));
    CHECK(double_clasp(1, 1)->terms.size() == 2);
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) CHECK(double_clasp_cap(n, m).is_zero());
}
