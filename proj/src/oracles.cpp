#include "kvpoly/oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace kvpoly::oracles {

namespace {

Scalar qi(int n) { return Scalar(quantum_int(n)); }
Scalar qb(int n, int k) { return Scalar(quantum_binom(n, k)); }
Scalar gb(int n, int k) { return Scalar(q_binom(n, k)); }
Scalar poch(int k) { return Scalar(q_pochhammer(k)); }
// q^(a/6)
Scalar qpow6(int a) { return Scalar::v_pow(a); }
Scalar sgn(int k) { return Scalar(k % 2 ? -1 : 1); }

void need(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

void chains_rec(int l, int hi, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == l) {
        out.push_back(cur);
        return;
    }
    for (int k = 0; k <= hi; ++k) {
        cur.push_back(k);
        chains_rec(l, k, cur, out);
        cur.pop_back();
    }
}

// q^{n-k_l} q^{sum(k_i^2+2k_i)} (q)_n/(q)_{k_l} multinomial(n; k'_1..k'_l, k_l)
Scalar chain_weight(int n, const std::vector<int>& ks) {
    const int kl = ks.empty() ? n : ks.back();
    int e = 6 * (n - kl);
    std::vector<int> parts;
    int prev = n;
    for (int k : ks) {
        e += 6 * (k * k + 2 * k);
        parts.push_back(prev - k);
        prev = k;
    }
    parts.push_back(kl);
    return qpow6(e) * poch(n) / poch(kl) * Scalar(q_multinomial(n, parts));
}

}  // namespace

Scalar loop_value(int n) {
    need(n >= 0, "loop_value: negative color");
    return qi(n + 1) * qi(n + 2) / qi(2);
}

Scalar double_loop_value(int n) {
    need(n >= 0, "double_loop_value: negative color");
    return qi(n + 1) * qi(n + 1) * qi(2 * n + 2) / qi(2);
}

Scalar clasp_crossing_coeff(int n, int k, int sign) {
    need(0 <= k && k <= n, "clasp_crossing_coeff: need 0 <= k <= n");
    return qpow6(sign * 2 * k * (n - k));
}

Scalar partial_closure_coeff(int n, int k) {
    need(0 <= k && k <= n, "partial_closure_coeff: need 0 <= k <= n");
    return qi(n + 1) * qi(n + 2) / (qi(n - k + 1) * qi(n - k + 2));
}

Scalar clasp_curl_coeff(int n, int sign) { return qpow6(sign * 2 * (n * n + 3 * n)); }

Scalar double_clasp_crossing_coeff(int n, int sign) { return sgn(n) * qpow6(sign * n * n); }

Scalar vertex_crossing_coeff(int n, int sign) { return sgn(n) * qpow6(sign * (n * n + 3 * n)); }

Expansion colored_skein_coeffs(int n, int sign) {
    need(n >= 1, "colored_skein_coeffs: color must be positive");
    Expansion out;
    for (int k = 0; k <= n; ++k) {
        int e = sign > 0 ? 2 * n * n - 6 * n * k + 3 * k * k : -2 * n * n + 3 * k * k;
        out.emplace_back(k, sgn(k) * qpow6(e) * gb(n, k));
    }
    return out;
}

std::vector<std::vector<int>> twist_chains(int n, int l) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    chains_rec(l, n, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

Expansion full_twist_expansion(int n, int l) {
    need(n >= 0 && l >= 0, "full_twist_expansion: negative argument");
    std::vector<Scalar> acc(n + 1);
    for (const auto& ks : twist_chains(n, l)) {
        const int kl = ks.empty() ? n : ks.back();
        acc[kl] += chain_weight(n, ks);
    }
    Scalar pre = qpow6(-4 * l * (n * n + 3 * n));
    Expansion out;
    for (int k = 0; k <= n; ++k)
        if (!acc[k].is_zero()) out.emplace_back(k, pre * acc[k]);
    return out;
}

Scalar bubble_coeff(int n, int m, int k, int l, int t) {
    need(0 <= k && k <= std::min(n, m) && 0 <= l && l <= std::min(n, m), "bubble_coeff: bad k or l");
    need(std::max(k, l) <= t && t <= std::min({k + l, n, m}), "bubble_coeff: t out of range");
    Scalar num = qb(n, t) * qb(m, t) * qb(t, k) * qb(t, l) * qb(n + m - t + 2, n + m - k - l + 2);
    Scalar den = qb(n, k) * qb(m, k) * qb(n, l) * qb(m, l);
    return num / den;
}

Expansion bubble_expansion(int n, int m, int k, int l) {
    Expansion out;
    for (int t = std::max(k, l); t <= std::min({k + l, n, m}); ++t) out.emplace_back(t, bubble_coeff(n, m, k, l, t));
    return out;
}

Scalar st_oriented(int k, int l, int m) {
    need(k >= 0 && l >= 0 && m >= 0, "st_oriented: negative argument");
    return sgn(l * m) * qpow6(-l * (m * m + 3 * m)) * qi(m + 1).pow(k);
}

Scalar st_unoriented(int l, int n) {
    need(l >= 0 && n >= 0, "st_unoriented: negative argument");
    Scalar sum;
    for (const auto& ks : twist_chains(n, l)) {
        const int kl = ks.empty() ? n : ks.back();
        Scalar w = chain_weight(n, ks);
        for (int s = 0; s <= kl; ++s) {
            Scalar term = sgn(s) * qpow6(6 * (s * (n - kl) - kl) + 3 * (s * s + 3 * s));
            term *= gb(n, s) * gb(n + 2, kl - s) / (gb(2 * n + 1, s) * gb(n, kl));
            sum += w * term;
        }
    }
    return Scalar(2) * qpow6(-12 * l * (n * n + 2 * n)) * sum * double_loop_value(n);
}

Scalar st_unoriented_bracket_form(int l, int n) {
    need(l >= 0 && n >= 0, "st_unoriented: negative argument");
    Scalar sum;
    for (const auto& ks : twist_chains(n, l)) {
        const int kl = ks.empty() ? n : ks.back();
        Scalar inner;
        for (int s = 0; s <= kl; ++s)
            inner += sgn(s) * qb(n, s) * qb(n + 2, kl - s) / (qb(2 * n + 1, s) * qb(n, kl));
        sum += chain_weight(n, ks) * inner;
    }
    return Scalar(2) * qpow6(-12 * l * (n * n + 2 * n)) * sum * double_loop_value(n);
}

}  // namespace kvpoly::oracles
