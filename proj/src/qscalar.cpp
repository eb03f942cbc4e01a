#include "kvpoly/qscalar.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace kvpoly {

using Coeffs = std::vector<mpz_class>;

namespace {

void trim_vec(Coeffs& c, int& lo) {
    size_t first = 0;
    while (first < c.size() && c[first] == 0) ++first;
    if (first == c.size()) {
        c.clear();
        lo = 0;
        return;
    }
    size_t last = c.size();
    while (c[last - 1] == 0) --last;
    if (first > 0 || last < c.size()) {
        c = Coeffs(c.begin() + first, c.begin() + last);
        lo += static_cast<int>(first);
    }
}

mpz_class content_of(const Coeffs& c) {
    mpz_class g = 0;
    for (const auto& x : c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void divide_content(Coeffs& c, const mpz_class& g) {
    if (g == 1) return;
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b in Z[x] (coefficients low to high).
Coeffs prem(Coeffs a, const Coeffs& b) {
    const size_t nb = b.size();
    const mpz_class& lb = b.back();
    while (a.size() >= nb && !a.empty()) {
        mpz_class la = a.back();
        size_t shift = a.size() - nb;
        for (auto& x : a) x *= lb;
        for (size_t i = 0; i < nb; ++i) a[shift + i] -= la * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

Coeffs primitive(Coeffs a) {
    divide_content(a, content_of(a));
    return a;
}

}  // namespace

LaurentPoly::LaurentPoly(long value) {
    if (value != 0) c_.emplace_back(value);
}

LaurentPoly LaurentPoly::monomial(long coeff, int exp) {
    LaurentPoly p;
    if (coeff != 0) {
        p.c_.emplace_back(coeff);
        p.lo_ = exp;
    }
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, mpz_class>& terms) {
    LaurentPoly p;
    if (terms.empty()) return p;
    p.lo_ = terms.begin()->first;
    p.c_.assign(terms.rbegin()->first - p.lo_ + 1, mpz_class(0));
    for (const auto& [e, k] : terms) p.c_[e - p.lo_] += k;
    p.trim();
    return p;
}

bool LaurentPoly::is_one() const { return c_.size() == 1 && lo_ == 0 && c_[0] == 1; }

mpz_class LaurentPoly::coeff(int exp) const {
    if (exp < lo_ || exp > high()) return 0;
    return c_[exp - lo_];
}

std::map<int, mpz_class> LaurentPoly::terms() const {
    std::map<int, mpz_class> out;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) out.emplace(lo_ + static_cast<int>(i), c_[i]);
    return out;
}

void LaurentPoly::trim() { trim_vec(c_, lo_); }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int nlo = std::min(lo_, o.lo_);
    int nhi = std::max(high(), o.high());
    if (nlo < lo_ || nhi > high()) {
        Coeffs c(nhi - nlo + 1);
        for (size_t i = 0; i < c_.size(); ++i) c[lo_ - nlo + i].swap(c_[i]);
        c_.swap(c);
        lo_ = nlo;
    }
    for (size_t i = 0; i < o.c_.size(); ++i) c_[o.lo_ - lo_ + i] += o.c_[i];
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.lo_ = a.lo_ + b.lo_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    r.trim();
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const mpz_class& k) {
    if (k == 0) {
        c_.clear();
        lo_ = 0;
        return *this;
    }
    for (auto& x : c_) x *= k;
    return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.lo_ += k;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly r(1), base = *this;
    while (k) {
        if (k & 1) r *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return r;
}

std::optional<LaurentPoly> LaurentPoly::divexact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return LaurentPoly();
    const size_t na = a.c_.size(), nb = b.c_.size();
    if (na < nb) return std::nullopt;
    const size_t nq = na - nb + 1;
    Coeffs rem = a.c_;
    LaurentPoly q;
    q.c_.assign(nq, mpz_class(0));
    q.lo_ = a.lo_ - b.lo_;
    const mpz_class& lb = b.c_.back();
    mpz_class t;
    for (size_t i = nq; i-- > 0;) {
        mpz_class& top = rem[i + nb - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (size_t j = 0; j < nb; ++j) mpz_submul(rem[i + j].get_mpz_t(), t.get_mpz_t(), b.c_[j].get_mpz_t());
        q.c_[i] = t;
    }
    for (size_t i = 0; i + 1 < nb; ++i)
        if (rem[i] != 0) return std::nullopt;
    q.trim();
    return q;
}

mpz_class LaurentPoly::content() const { return content_of(c_); }

LaurentPoly LaurentPoly::divided_by(const mpz_class& k) const {
    LaurentPoly r = *this;
    divide_content(r.c_, k);
    return r;
}

mpq_class LaurentPoly::eval(const mpq_class& v) const {
    if (is_zero()) return 0;
    if (v == 0) throw std::domain_error("evaluation of a Laurent polynomial at 0");
    // Horner from the top, then scale by v^lo.
    mpq_class acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * v + mpq_class(c_[i]);
    mpq_class scale = 1;
    mpq_class base = lo_ >= 0 ? v : mpq_class(1) / v;
    for (int i = 0; i < std::abs(lo_); ++i) scale *= base;
    return acc * scale;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        int e = lo_ + static_cast<int>(i);
        out += c_[i].get_str();
        if (e != 0) out += "*v^" + std::to_string(e);
    }
    return out;
}

LaurentPoly LaurentPoly::parse(const std::string& s) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw std::invalid_argument("empty polynomial string");
    std::map<int, mpz_class> terms;
    size_t pos = 0;
    while (pos <= t.size()) {
        size_t next = t.find('+', pos);
        std::string term = t.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (term.empty()) throw std::invalid_argument("malformed polynomial: " + s);
        int e = 0;
        std::string cs = term;
        auto star = term.find('*');
        if (star != std::string::npos) {
            cs = term.substr(0, star);
            std::string rest = term.substr(star + 1);
            if (rest.rfind("v^", 0) != 0) throw std::invalid_argument("malformed term: " + term);
            e = std::stoi(rest.substr(2));
        } else if (term == "v" || term.rfind("v^", 0) == 0) {
            cs = "1";
            e = term == "v" ? 1 : std::stoi(term.substr(2));
        }
        mpz_class k;
        if (k.set_str(cs, 10) != 0) throw std::invalid_argument("bad coefficient: " + cs);
        terms[e] += k;
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    for (auto it = terms.begin(); it != terms.end();)
        it = it->second == 0 ? terms.erase(it) : std::next(it);
    return from_terms(terms);
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly();
    Coeffs x = a.c_, y = b.c_;
    mpz_class g = 0;
    mpz_gcd(g.get_mpz_t(), content_of(x).get_mpz_t(), content_of(y).get_mpz_t());
    if (x.empty() || y.empty()) {
        LaurentPoly r;
        r.c_ = primitive(x.empty() ? y : x);
        if (r.c_.back() < 0)
            for (auto& c : r.c_) c = -c;
        for (auto& c : r.c_) c *= g;
        return r;
    }
    x = primitive(std::move(x));
    y = primitive(std::move(y));
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        if (y.size() == 1) {
            x = Coeffs{1};
            break;
        }
        Coeffs r = prem(x, y);
        x = std::move(y);
        y = r.empty() ? r : primitive(std::move(r));
    }
    if (x.back() < 0)
        for (auto& c : x) c = -c;
    for (auto& c : x) c *= g;
    LaurentPoly r;
    r.c_ = std::move(x);
    r.trim();
    return r;
}

namespace {

// Denominators in this library are products of quantum integers, so their
// irreducible factors are cyclotomic polynomials in v. Factoring each
// distinct denominator once turns gcds into trial divisions.

const LaurentPoly& cyclotomic(int d) {
    static thread_local std::vector<LaurentPoly> cache;
    if (static_cast<int>(cache.size()) <= d) cache.resize(d + 1);
    if (cache[d].is_zero()) {
        LaurentPoly p = LaurentPoly::monomial(1, d) - LaurentPoly(1);
        for (int e = 1; e < d; ++e)
            if (d % e == 0) p = *LaurentPoly::divexact(p, cyclotomic(e));
        cache[d] = std::move(p);
    }
    return cache[d];
}

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    if (n > 1) r -= r / n;
    return r;
}

// Cyclotomic factorisation (index, multiplicity); empty optional when the
// polynomial has another factor.
using Factors = std::optional<std::vector<std::pair<int, int>>>;

Factors factor_cyclotomic(LaurentPoly p) {
    p = p.shifted(-p.low());
    std::vector<std::pair<int, int>> f;
    int deg = p.degree_span();
    // phi(d) >= sqrt(d / 2), so larger indices cannot fit
    for (int d = 1; deg > 0 && d <= 2 * deg * deg; ++d) {
        if (euler_phi(d) > deg) continue;
        int e = 0;
        while (auto q = LaurentPoly::divexact(p, cyclotomic(d))) {
            p = std::move(*q);
            ++e;
        }
        if (e) {
            f.emplace_back(d, e);
            deg = p.degree_span();
        }
    }
    if (deg > 0) return std::nullopt;
    return f;
}

struct CoeffHash {
    size_t operator()(const std::vector<long>& v) const {
        size_t h = v.size();
        for (long x : v) h = h * 1000003u ^ std::hash<long>()(x);
        return h;
    }
};

const Factors* factors_of(const LaurentPoly& den) {
    static thread_local std::unordered_map<std::vector<long>, Factors, CoeffHash> cache;
    std::vector<long> key;
    key.reserve(den.coeffs().size());
    for (const auto& c : den.coeffs()) {
        if (!c.fits_slong_p()) return nullptr;
        key.push_back(c.get_si());
    }
    auto it = cache.find(key);
    if (it == cache.end()) {
        if (cache.size() > 100000) cache.clear();
        it = cache.emplace(std::move(key), factor_cyclotomic(den)).first;
    }
    return &it->second;
}

// Common factor of two polynomials, without a monomial part.
LaurentPoly common_factor(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly g = poly_gcd(a, b);
    return g.shifted(-g.low());
}

// Common factor of x and a denominator.
LaurentPoly common_with_den(const LaurentPoly& x, const LaurentPoly& den) {
    const Factors* f = factors_of(den);
    if (!f || !*f) return common_factor(x, den);
    LaurentPoly g(1), r = x;
    for (auto [d, e] : **f)
        for (int i = 0; i < e; ++i) {
            auto q = LaurentPoly::divexact(r, cyclotomic(d));
            if (!q) break;
            r = std::move(*q);
            g *= cyclotomic(d);
        }
    return g;
}

LaurentPoly common_of_dens(const LaurentPoly& a, const LaurentPoly& b) {
    const Factors* fa = factors_of(a);
    const Factors* fb = factors_of(b);
    if (!fa || !*fa || !fb || !*fb) return common_factor(a, b);
    LaurentPoly g(1);
    for (auto [d, e] : **fa)
        for (auto [d2, e2] : **fb)
            if (d == d2) g *= cyclotomic(d).pow(static_cast<unsigned>(std::min(e, e2)));
    return g;
}

// Divides x and the denominator y by their common factor.
void cancel(LaurentPoly& x, LaurentPoly& y) {
    if (y.is_monomial() || x.is_monomial()) return;
    LaurentPoly g = common_with_den(x, y);
    if (g.is_monomial()) return;
    x = *LaurentPoly::divexact(x, g);
    y = *LaurentPoly::divexact(y, g);
}

}  // namespace

Scalar::Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    normalize();
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    if (den_.is_one()) return;
    if (den_.is_monomial()) {
        num_.lo_ -= den_.lo_;
        den_.lo_ = 0;
    } else {
        num_.lo_ -= den_.lo_;
        den_.lo_ = 0;
        if (auto q = LaurentPoly::divexact(num_, den_)) {
            num_ = std::move(*q);
            den_ = LaurentPoly(1);
            return;
        }
        LaurentPoly g = common_with_den(num_, den_);
        if (g.c_.size() > 1) {
            num_ = *LaurentPoly::divexact(num_, g);
            den_ = *LaurentPoly::divexact(den_, g);
        }
    }
    tidy();
}

// Final step of normalisation once num and den are coprime over Q[v].
void Scalar::tidy() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    num_.lo_ -= den_.lo_;
    den_.lo_ = 0;
    mpz_class cn = num_.content(), cd = den_.content(), g;
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (g != 1) {
        divide_content(num_.c_, g);
        divide_content(den_.c_, g);
    }
    if (den_.c_.front() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

std::optional<LaurentPoly> Scalar::as_laurent() const {
    if (den_.is_one()) return num_;
    return std::nullopt;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    // both operands are reduced, so only a factor shared by the two
    // denominators can survive in the sum
    if (o.den_.is_one()) {
        num_ += o.num_ * den_;
        tidy();
        return *this;
    }
    if (den_.is_one()) {
        num_ = num_ * o.den_ + o.num_;
        den_ = o.den_;
        tidy();
        return *this;
    }
    LaurentPoly g = common_of_dens(den_, o.den_);
    if (g.is_monomial()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        tidy();
        return *this;
    }
    LaurentPoly b = *LaurentPoly::divexact(den_, g), d = *LaurentPoly::divexact(o.den_, g);
    num_ = num_ * d + o.num_ * b;
    cancel(num_, g);
    den_ = b * d * g;
    tidy();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = Scalar();
    if (o.den_.is_one() && den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    // cross cancellation keeps the result reduced
    LaurentPoly c = o.num_, d = o.den_;
    cancel(num_, d);
    cancel(c, den_);
    num_ *= c;
    den_ *= d;
    tidy();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("division by zero scalar");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

Scalar Scalar::pow(int k) const {
    if (k < 0) return Scalar(1) / pow(-k);
    return Scalar(num_.pow(k), den_.pow(k));
}

mpq_class Scalar::eval(const mpq_class& v) const {
    mpq_class d = den_.eval(v);
    if (d == 0) throw std::domain_error("pole at evaluation point");
    return num_.eval(v) / d;
}

std::string Scalar::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

namespace {
std::string q_poly_str(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, k] : p.terms()) {
        if (!out.empty()) out += " + ";
        out += k.get_str();
        if (e == 0) continue;
        int g = std::gcd(std::abs(e), 6);
        int a = e / g, b = 6 / g;
        out += b == 1 ? "*q^" + std::to_string(a) : "*q^(" + std::to_string(a) + "/" + std::to_string(b) + ")";
    }
    return out;
}
}  // namespace

std::string Scalar::q_str() const {
    if (den_.is_one()) return q_poly_str(num_);
    return "(" + q_poly_str(num_) + ") / (" + q_poly_str(den_) + ")";
}

Scalar Scalar::parse(const std::string& s) {
    auto slash = s.find(") / (");
    if (slash == std::string::npos) return Scalar(LaurentPoly::parse(s));
    auto open = s.find('(');
    auto close = s.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close <= slash)
        throw std::invalid_argument("malformed scalar: " + s);
    return Scalar(LaurentPoly::parse(s.substr(open + 1, slash - open - 1)),
                  LaurentPoly::parse(s.substr(slash + 5, close - slash - 5)));
}

LaurentPoly quantum_int(int n) {
    if (n < 0) throw std::invalid_argument("quantum_int: negative argument");
    std::map<int, mpz_class> t;
    for (int j = 0; j < n; ++j) t[3 * (n - 1 - 2 * j)] += 1;
    return LaurentPoly::from_terms(t);
}

LaurentPoly quantum_factorial(int n) {
    if (n < 0) throw std::invalid_argument("quantum_factorial: negative argument");
    LaurentPoly r(1);
    for (int i = 2; i <= n; ++i) r *= quantum_int(i);
    return r;
}

namespace {
LaurentPoly must_divide(const LaurentPoly& a, const LaurentPoly& b, const char* what) {
    auto q = LaurentPoly::divexact(a, b);
    if (!q) throw std::logic_error(std::string(what) + ": nonzero remainder");
    return *q;
}
}  // namespace

LaurentPoly quantum_binom(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("quantum_binom: need 0 <= k <= n");
    return must_divide(quantum_factorial(n), quantum_factorial(k) * quantum_factorial(n - k), "quantum_binom");
}

LaurentPoly q_pochhammer(int k) {
    if (k < 0) throw std::invalid_argument("q_pochhammer: negative argument");
    LaurentPoly r(1);
    for (int l = 1; l <= k; ++l) r *= LaurentPoly(1) - LaurentPoly::monomial(1, 6 * l);
    return r;
}

LaurentPoly q_binom(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("q_binom: need 0 <= k <= n");
    return must_divide(q_pochhammer(n), q_pochhammer(k) * q_pochhammer(n - k), "q_binom");
}

LaurentPoly q_multinomial(int n, const std::vector<int>& parts) {
    long sum = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("q_multinomial: negative part");
        sum += p;
    }
    if (n < 0 || sum != n) throw std::invalid_argument("q_multinomial: parts must sum to n");
    LaurentPoly den(1);
    for (int p : parts) den *= q_pochhammer(p);
    return must_divide(q_pochhammer(n), den, "q_multinomial");
}

}  // namespace kvpoly
