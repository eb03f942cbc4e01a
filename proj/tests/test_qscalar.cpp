#include <doctest.h>

#include "kvpoly/qscalar.hpp"

#include <random>

using namespace kvpoly;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, int max_terms) {
    std::map<int, mpz_class> t;
    const int n = 1 + static_cast<int>(rng() % max_terms);
    for (int i = 0; i < n; ++i) t[static_cast<int>(rng() % 13) - 6] += static_cast<long>(rng() % 7) - 3;
    LaurentPoly p = LaurentPoly::from_terms(t);
    return p.is_zero() ? LaurentPoly(1) : p;
}

// Denominators in practice are products of quantum integers; mix those with
// arbitrary factors so cancellation paths get exercised.
LaurentPoly random_den(std::mt19937_64& rng) {
    LaurentPoly d = quantum_int(1 + static_cast<int>(rng() % 5));
    if (rng() % 2) d *= quantum_int(2 + static_cast<int>(rng() % 4));
    if (rng() % 3 == 0) d *= random_poly(rng, 3);
    return d;
}

const std::vector<mpq_class> points = {mpq_class(2), mpq_class(3, 2), mpq_class(-5, 3), mpq_class(7, 11)};

}  // namespace

TEST_CASE("laurent polynomial arithmetic") {
    const LaurentPoly a = LaurentPoly::parse("1*v^-2 + 3 + -2*v^5");
    CHECK(a.str() == "1*v^-2 + 3 + -2*v^5");
    CHECK(a.low() == -2);
    CHECK(a.high() == 5);
    CHECK((a - a).is_zero());
    CHECK(quantum_int(3).str() == "1*v^-6 + 1 + 1*v^6");
    CHECK(quantum_int(2) * quantum_int(2) == quantum_int(3) + LaurentPoly(1));
    auto q = LaurentPoly::divexact(quantum_int(2) * quantum_int(5), quantum_int(5));
    REQUIRE(q);
    CHECK(*q == quantum_int(2));
    CHECK_FALSE(LaurentPoly::divexact(quantum_int(3), quantum_int(2)));
}

TEST_CASE("scalar arithmetic agrees with evaluation at rational points") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        CAPTURE(trial);
        LaurentPoly an = random_poly(rng, 5), ad = random_den(rng);
        LaurentPoly bn = random_poly(rng, 5), bd = random_den(rng);
        bool usable = true;
        for (const auto& x : points) usable = usable && ad.eval(x) != 0 && bd.eval(x) != 0 && bn.eval(x) != 0;
        if (!usable) continue;
        const Scalar a(an, ad), b(bn, bd);
        const Scalar sum = a + b, diff = a - b, prod = a * b, quot = a / b;
        for (const auto& x : points) {
            const mpq_class ax = an.eval(x) / ad.eval(x), bx = bn.eval(x) / bd.eval(x);
            CHECK(sum.eval(x) == ax + bx);
            CHECK(diff.eval(x) == ax - bx);
            CHECK(prod.eval(x) == ax * bx);
            CHECK(quot.eval(x) == ax / bx);
        }
    }
}

TEST_CASE("scalars have a unique normal form") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        CAPTURE(trial);
        const LaurentPoly n = random_poly(rng, 4), d = random_den(rng), c = random_poly(rng, 3);
        const Scalar plain(n, d), scaled(n * c, d * c);
        CHECK(plain == scaled);
        CHECK(plain.num() == scaled.num());
        CHECK(plain.den() == scaled.den());
        CHECK(Scalar::parse(plain.str()) == plain);
        CHECK((plain - scaled).is_zero());
        if (!plain.is_zero()) CHECK((plain / plain).is_one());
    }
    // a quotient that is secretly a Laurent polynomial comes back as one
    const Scalar s(quantum_int(6), quantum_int(2));
    REQUIRE(s.as_laurent());
    CHECK(*s.as_laurent() == LaurentPoly::parse("1*v^-12 + 1 + 1*v^12"));
    CHECK(Scalar(LaurentPoly(-2), LaurentPoly::monomial(4, 3)) == Scalar(LaurentPoly::monomial(-1, -3), LaurentPoly(2)));
}
