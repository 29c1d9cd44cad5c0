#pragma once

// Arbitrary-degree polynomials over GF(2), bit-packed 64 bits per word
// (bit i of word i/64 is the coefficient of x^i). Only what the modulus
// searches and the ring construction need: no interface polish.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace egk::gf2x {

using Poly = std::vector<uint64_t>;

inline int deg(const Poly& p) {
    for (size_t w = p.size(); w-- > 0;)
        if (p[w]) return int(w) * 64 + 63 - __builtin_clzll(p[w]);
    return -1;
}

inline bool get_bit(const Poly& p, int i) {
    size_t w = size_t(i) / 64;
    return w < p.size() && ((p[w] >> (i % 64)) & 1u);
}

inline void set_bit(Poly& p, int i) {
    size_t w = size_t(i) / 64;
    if (w >= p.size()) p.resize(w + 1, 0);
    p[w] |= uint64_t(1) << (i % 64);
}

inline bool is_zero(const Poly& p) {
    for (uint64_t w : p)
        if (w) return false;
    return true;
}

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// dst ^= src * x^shift
inline void xor_shifted(Poly& dst, const Poly& src, int shift) {
    int ws = shift / 64, bs = shift % 64;
    size_t need = src.size() + size_t(ws) + 1;
    if (dst.size() < need) dst.resize(need, 0);
    if (bs == 0) {
        for (size_t i = 0; i < src.size(); ++i) dst[i + ws] ^= src[i];
    } else {
        uint64_t carry = 0;
        for (size_t i = 0; i < src.size(); ++i) {
            dst[i + ws] ^= (src[i] << bs) | carry;
            carry = src[i] >> (64 - bs);
        }
        dst[src.size() + ws] ^= carry;
    }
}

// a mod f, in place. Plain long division from the top bit.
inline void mod_inplace(Poly& a, const Poly& f) {
    int df = deg(f);
    for (int da = deg(a); da >= df; da = deg(a)) {
        xor_shifted(a, f, da - df);
        // xor_shifted may have grown the vector with zero words
        trim(a);
        if (a.empty()) break;
    }
}

inline Poly mul(const Poly& a, const Poly& b) {
    Poly out;
    int db = deg(b);
    for (int i = 0; i <= db; ++i)
        if (get_bit(b, i)) xor_shifted(out, a, i);
    trim(out);
    return out;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& f) {
    Poly out = mul(a, b);
    mod_inplace(out, f);
    return out;
}

// Squaring spreads bits to even positions.
inline Poly sqmod(const Poly& a, const Poly& f) {
    int da = deg(a);
    if (da < 0) return {};
    Poly out(size_t(2 * da) / 64 + 2, 0);
    for (int i = 0; i <= da; ++i)
        if (get_bit(a, i)) out[size_t(2 * i) / 64] |= uint64_t(1) << ((2 * i) % 64);
    trim(out);
    mod_inplace(out, f);
    return out;
}

inline Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!is_zero(b)) {
        mod_inplace(a, b);
        std::swap(a, b);
    }
    return a;
}

inline Poly x_poly() {
    return Poly{2};
}

// Irreducibility over GF(2): x^(2^n) == x mod f and gcd(x^(2^(n/p)) - x, f) = 1
// for every prime p | n. A prefix of the squaring chain doubles as a cheap
// small-factor screen (any factor of degree d <= 8 shows up in the gcd at
// step d), which discards most candidates before the full chain runs.
inline bool is_irreducible(const Poly& f) {
    int n = deg(f);
    if (n <= 0) return false;
    if (!get_bit(f, 0)) return false;  // divisible by x
    if (n == 1) return true;
    int wt = 0;
    for (uint64_t w : f) wt += __builtin_popcountll(w);
    if (wt % 2 == 0) return false;  // divisible by x + 1

    std::vector<int> checkpoints;  // n/p for prime p | n
    int nn = n;
    for (int p = 2; p * p <= nn; ++p)
        if (nn % p == 0) {
            checkpoints.push_back(n / p);
            while (nn % p == 0) nn /= p;
        }
    if (nn > 1) checkpoints.push_back(n / nn);

    Poly t = x_poly();
    Poly x = x_poly();
    int screen = n > 24 ? 8 : 0;
    for (int i = 1; i <= n; ++i) {
        t = sqmod(t, f);
        bool need_gcd = i <= screen;
        for (int c : checkpoints) need_gcd |= (c == i);
        if (need_gcd && i < n) {
            Poly d = t;
            size_t need = x.size();
            if (d.size() < need) d.resize(need, 0);
            d[0] ^= x[0];
            Poly g = gcd(d, f);
            if (deg(g) != 0) return false;
        }
    }
    // t == x^(2^n) mod f must equal x
    Poly d = t;
    if (d.size() < x.size()) d.resize(x.size(), 0);
    d[0] ^= x[0];
    trim(d);
    return is_zero(d);
}

// Lexicographically smallest irreducible of degree n: candidates are
// x^n + p(x) ordered by the integer value of p read from the constant term
// upward. Only p with constant term 1 and even popcount survive the
// divisibility quick checks, so the scan walks those directly.
inline Poly find_smallest_irreducible(int n) {
    if (n == 1) {
        Poly f;
        set_bit(f, 1);
        set_bit(f, 0);
        return f;  // x + 1
    }
    for (uint64_t low = 1;; low += 2) {
        if (__builtin_popcountll(low) % 2 != 0) continue;
        Poly f;
        f.resize(size_t(n) / 64 + 1, 0);
        f[0] = low;
        set_bit(f, n);
        if (is_irreducible(f)) return f;
    }
}

}  // namespace egk::gf2x
