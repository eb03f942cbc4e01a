#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kvpoly {

// Laurent polynomial in v = q^{1/6} with integer coefficients.
// Dense storage: coefficient of v^(lo + i) is c[i]; c is trimmed so that
// c.front() and c.back() are nonzero, and the zero polynomial has c empty.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long value);
    static LaurentPoly monomial(long coeff, int exp);
    static LaurentPoly from_terms(const std::map<int, mpz_class>& terms);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return c_.size() == 1; }
    bool is_constant() const { return c_.size() == 1 && lo_ == 0; }
    int low() const { return lo_; }
    int high() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    int degree_span() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class coeff(int exp) const;
    std::map<int, mpz_class> terms() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const mpz_class& k);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.lo_ == b.lo_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly shifted(int k) const;
    LaurentPoly pow(unsigned k) const;
    // Exact quotient a / b in Z[v, v^-1], or nullopt when b does not divide a.
    static std::optional<LaurentPoly> divexact(const LaurentPoly& a, const LaurentPoly& b);
    mpz_class content() const;
    LaurentPoly divided_by(const mpz_class& k) const;  // k must divide every coefficient
    // Value at a rational point (used by numeric cross-checks).
    mpq_class eval(const mpq_class& v) const;
    std::string str() const;
    static LaurentPoly parse(const std::string& s);

private:
    friend class Scalar;
    friend LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);
    void trim();
    int lo_ = 0;
    std::vector<mpz_class> c_;
};

// gcd in Z[v] of the monomial-free parts, normalized with positive leading coefficient.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Element of Q(v), stored as a normalized fraction num/den.
class Scalar {
public:
    Scalar() : num_(0), den_(1) {}
    Scalar(long value) : num_(value), den_(1) {}
    Scalar(LaurentPoly p) : num_(std::move(p)), den_(1) {}
    Scalar(LaurentPoly num, LaurentPoly den);
    static Scalar v_pow(int e) { return Scalar(LaurentPoly::monomial(1, e)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }
    std::optional<LaurentPoly> as_laurent() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar pow(int k) const;
    mpq_class eval(const mpq_class& v) const;
    std::string str() const;
    // Fractional-q pretty form (q^{e/6}); not the machine contract.
    std::string q_str() const;
    static Scalar parse(const std::string& s);

private:
    void normalize();
    void tidy();
    LaurentPoly num_;
    LaurentPoly den_;
};

// Quantum and q-combinatorial coefficients.
LaurentPoly quantum_int(int n);
LaurentPoly quantum_factorial(int n);
LaurentPoly quantum_binom(int n, int k);
LaurentPoly q_pochhammer(int k);
LaurentPoly q_binom(int n, int k);
LaurentPoly q_multinomial(int n, const std::vector<int>& parts);

}  // namespace kvpoly
