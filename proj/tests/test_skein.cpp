#include <doctest.h>

#include "kvpoly/clasps.hpp"
#include "kvpoly/identities.hpp"
#include "support/local_configs.hpp"

using namespace kvpoly;
using namespace kvpoly::local;

namespace {

Scalar vp(int e) { return Scalar::v_pow(e); }

WebSum skein_rhs(int n, bool positive) {
    WebSum rhs;
    for (int k = 0; k <= n; ++k) {
        int e = positive ? 2 * n * n - 6 * n * k + 3 * k * k : -2 * n * n + 3 * k * k;
        Scalar c = vp(e) * Scalar(q_binom(n, k));
        if (k % 2) c = -c;
        Assembly a = diamond_web(n, k);
        a.factor *= c;
        rhs += evaluate(a);
    }
    return rhs;
}

}  // namespace

TEST_CASE("crossing of clasped cables expands over diamond webs") {
    for (int n = 1; n <= 2; ++n) {
        CAPTURE(n);
        CHECK(evaluate(crossing_web(n, true)) == skein_rhs(n, true));
        CHECK(evaluate(crossing_web(n, false)) == skein_rhs(n, false));
    }
}

TEST_CASE("square of triangles splits into double clasp terms") {
    for (int n = 1; n <= 2; ++n) {
        CAPTURE(n);
        CHECK(triangle_square(n) == triangle_square_expansion(n));
    }
}

TEST_CASE("triangle bubble is a multiple of the clasp") {
    for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        CHECK(triangle_bubble(n) == *clasp(n) * Scalar(quantum_int(n + 1)));
    }
}

TEST_CASE("clasped loop") {
    for (int n = 1; n <= 4; ++n) {
        CAPTURE(n);
        CHECK(clasp_loop(n) == Scalar(quantum_int(n + 1) * quantum_int(n + 2), quantum_int(2)));
    }
}

TEST_CASE("oracle skein coefficients match the direct formula") {
    for (int n = 1; n <= 2; ++n) {
        CAPTURE(n);
        CHECK(skein_expansion(n, true) == skein_rhs(n, true));
        CHECK(skein_expansion(n, false) == skein_rhs(n, false));
    }
}

TEST_CASE("skein relation survives closing both sides") {
    using namespace kvpoly::testing;
    for (int n = 1; n <= 2; ++n)
        for (bool positive : {true, false}) {
            CAPTURE(n);
            CAPTURE(positive);
            auto side = [n](const Assembly& w) { return side_closure(w, n); };
            CHECK(skein_holds(n, positive, side));
            // the closure sees the crossing sign
            CHECK(side(crossing_web(n, true)) != side(crossing_web(n, false)));
            for (int j = 0; j <= n; ++j) {
                CAPTURE(j);
                auto paired = [n, j](const Assembly& w) { return diamond_closure(w, n, j); };
                CHECK(skein_holds(n, positive, paired));
                CHECK_FALSE(paired(crossing_web(n, positive)).is_zero());
            }
        }
}
