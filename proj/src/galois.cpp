#include "egk/galois.hpp"

#include <cassert>
#include <stdexcept>

#include "gf2x.hpp"

#if defined(__PCLMUL__)
#include <wmmintrin.h>
#endif

namespace egk {
namespace {

FieldElement mask_for(int m) {
    FieldElement r;
    if (m >= 64) {
        r.lo = ~uint64_t(0);
        r.hi = m == 128 ? ~uint64_t(0) : (uint64_t(1) << (m - 64)) - 1;
    } else {
        r.lo = (uint64_t(1) << m) - 1;
    }
    return r;
}

int fe_lead(FieldElement v) {
    if (v.hi) return 127 - __builtin_clzll(v.hi);
    if (v.lo) return 63 - __builtin_clzll(v.lo);
    return -1;
}

FieldElement xtime(const FieldParams& fp, FieldElement v) {
    bool ov = v.bit(unsigned(fp.m - 1));
    FieldElement r{v.lo << 1, (v.hi << 1) | (v.lo >> 63)};
    r.lo &= fp.mask().lo;
    r.hi &= fp.mask().hi;
    if (ov) r ^= fp.modulus_low;
    return r;
}

void build_nibble_table(const FieldParams& fp, FieldElement b, FieldElement t[16]) {
    t[0] = FieldElement{};
    t[1] = b;
    t[2] = xtime(fp, b);
    t[4] = xtime(fp, t[2]);
    t[8] = xtime(fp, t[4]);
    for (unsigned n = 3; n < 16; ++n) {
        if (n == 4 || n == 8) continue;
        t[n] = t[n & (n - 1)] ^ t[n & (~n + 1)];
    }
}

// Reduce a polynomial of degree <= 2m-2 (four words) using the fold tables;
// the result occupies words 0..1 masked to m bits.
FieldElement reduce_wide(const FieldParams& fp, uint64_t w[4]) {
    for (size_t s = fp.fold.size(); s-- > 0;) {
        int pos = fp.m + int(4 * s);
        int idx = pos >> 6, off = pos & 63;
        unsigned nib;
        if (off <= 60) {
            nib = unsigned(w[idx] >> off) & 15u;
            w[idx] &= ~(uint64_t(15) << off);
        } else {
            int lowbits = 64 - off;
            nib = (unsigned(w[idx] >> off) | unsigned(w[idx + 1] << lowbits)) & 15u;
            w[idx] &= ~(uint64_t(15) << off);
            w[idx + 1] &= ~(uint64_t(15) >> lowbits);
        }
        if (nib) {
            const FieldElement& f = fp.fold[s][nib];
            w[0] ^= f.lo;
            w[1] ^= f.hi;
        }
    }
    FieldElement r{w[0], w[1]};
    r.lo &= fp.mask().lo;
    r.hi &= fp.mask().hi;
    return r;
}

constexpr std::array<uint16_t, 256> make_spread() {
    std::array<uint16_t, 256> t{};
    for (unsigned b = 0; b < 256; ++b) {
        uint16_t v = 0;
        for (unsigned i = 0; i < 8; ++i)
            if (b & (1u << i)) v |= uint16_t(1) << (2 * i);
        t[b] = v;
    }
    return t;
}
constexpr auto kSpread = make_spread();

uint64_t spread32(uint32_t x) {
    return uint64_t(kSpread[x & 0xff]) | uint64_t(kSpread[(x >> 8) & 0xff]) << 16 |
           uint64_t(kSpread[(x >> 16) & 0xff]) << 32 | uint64_t(kSpread[x >> 24]) << 48;
}

#if defined(__PCLMUL__)
void clmul_product(FieldElement a, FieldElement b, uint64_t w[4]) {
    __m128i va = _mm_set_epi64x(int64_t(a.hi), int64_t(a.lo));
    __m128i vb = _mm_set_epi64x(int64_t(b.hi), int64_t(b.lo));
    __m128i p0 = _mm_clmulepi64_si128(va, vb, 0x00);
    __m128i p1 = _mm_xor_si128(_mm_clmulepi64_si128(va, vb, 0x01), _mm_clmulepi64_si128(va, vb, 0x10));
    __m128i p2 = _mm_clmulepi64_si128(va, vb, 0x11);
    alignas(16) uint64_t t0[2], t1[2], t2[2];
    _mm_store_si128(reinterpret_cast<__m128i*>(t0), p0);
    _mm_store_si128(reinterpret_cast<__m128i*>(t1), p1);
    _mm_store_si128(reinterpret_cast<__m128i*>(t2), p2);
    w[0] = t0[0];
    w[1] = t0[1] ^ t1[0];
    w[2] = t2[0] ^ t1[1];
    w[3] = t2[1];
}
#endif

}  // namespace

FieldElement find_irreducible(int m) {
    if (m < 1 || m > 128) throw std::invalid_argument("field degree out of range");
    gf2x::Poly f = gf2x::find_smallest_irreducible(m);
    FieldElement low{f[0], f.size() > 1 ? f[1] : 0};
    FieldElement msk = mask_for(m);
    low.lo &= msk.lo;
    low.hi &= msk.hi;
    return low;
}

void FieldParams::init() {
    if (m < 1 || m > 128) throw std::invalid_argument("field degree out of range");
    mask_ = mask_for(m);
    gf2x::Poly f{modulus_low.lo, modulus_low.hi};
    gf2x::set_bit(f, m);
    if (!gf2x::is_irreducible(f)) throw std::invalid_argument("modulus not irreducible");
    size_t folds = m >= 2 ? size_t((m - 2) / 4) + 1 : 1;
    fold.resize(folds);
    build_nibble_table(*this, modulus_low, fold[0].data());
    // fold[0][1] must be x^m mod f = modulus_low; the table construction
    // gives exactly that since t[1] = b.
    for (size_t s = 1; s < folds; ++s)
        for (unsigned n = 0; n < 16; ++n) {
            FieldElement t = fold[s - 1][n];
            for (int i = 0; i < 4; ++i) t = xtime(*this, t);
            fold[s][n] = t;
        }
}

FieldParams::FieldParams(int m_) : m(m_), modulus_low(find_irreducible(m_)) { init(); }

FieldParams::FieldParams(int m_, FieldElement low) : m(m_), modulus_low(low) { init(); }

FieldElement field_mul(const FieldParams& fp, FieldElement a, FieldElement b) {
    uint64_t w[4];
#if defined(__PCLMUL__)
    clmul_product(a, b, w);
#else
    FieldElement t[16];
    build_nibble_table(fp, b, t);
    // Horner over a's nibbles: acc = acc*x^4 + nib*b, folding the x^4
    // overflow at position m through fold[0]. The accumulator needs a third
    // word only transiently; t entries are already reduced.
    uint64_t lo = 0, hi = 0;
    int nibs = (fp.m + 3) / 4;
    for (int s = nibs - 1; s >= 0; --s) {
        uint64_t ex = hi >> 60;
        hi = (hi << 4) | (lo >> 60);
        lo <<= 4;
        unsigned ov;
        int pos = fp.m;
        if (pos < 64) {
            ov = unsigned((lo >> pos) & 15u);
            lo &= ~(uint64_t(15) << pos);
        } else if (pos <= 124) {
            ov = unsigned((hi >> (pos - 64)) & 15u);
            hi &= ~(uint64_t(15) << (pos - 64));
        } else if (pos < 128) {
            // overflow nibble straddles into the transient third word
            int off = pos - 64;
            ov = unsigned(((hi >> off) | (ex << (64 - off))) & 15u);
            hi &= ~(uint64_t(15) << off);
        } else {
            ov = unsigned(ex & 15u);
        }
        const FieldElement& f = fp.fold[0][ov];
        lo ^= f.lo;
        hi ^= f.hi;
        unsigned nib = unsigned((s < 16 ? a.lo >> (4 * s) : a.hi >> (4 * (s - 16))) & 15u);
        lo ^= t[nib].lo;
        hi ^= t[nib].hi;
    }
    w[0] = lo;
    w[1] = hi;
    w[2] = w[3] = 0;
#endif
    return reduce_wide(fp, w);
}

FieldElement field_sq(const FieldParams& fp, FieldElement a) {
    uint64_t w[4];
    w[0] = spread32(uint32_t(a.lo));
    w[1] = spread32(uint32_t(a.lo >> 32));
    w[2] = spread32(uint32_t(a.hi));
    w[3] = spread32(uint32_t(a.hi >> 32));
    return reduce_wide(fp, w);
}

FieldElement field_inv(const FieldParams& fp, FieldElement a) {
    assert(!a.is_zero());
    if (fp.m == 1) return a;
    // a^(2^m - 2) = prod_{i=1}^{m-1} a^(2^i)
    FieldElement p = a, r{};
    for (int i = 1; i < fp.m; ++i) {
        p = field_sq(fp, p);
        r = i == 1 ? p : field_mul(fp, r, p);
    }
    assert((field_mul(fp, r, a) == FieldElement{1, 0}));
    return r;
}

FieldElement frobenius(const FieldParams& fp, FieldElement a, unsigned i) {
    i %= unsigned(fp.m);
    for (unsigned s = 0; s < i; ++s) a = field_sq(fp, a);
    return a;
}

bool trace(const FieldParams& fp, FieldElement a) {
    FieldElement acc = a, t = a;
    for (int i = 1; i < fp.m; ++i) {
        t = field_sq(fp, t);
        acc ^= t;
    }
    assert(acc.hi == 0 && acc.lo <= 1);
    return acc.lo & 1;
}

void fe_to_bytes(const FieldParams& fp, FieldElement a, uint8_t* out) {
    size_t n = fp.byte_size();
    for (size_t i = 0; i < n; ++i)
        out[i] = uint8_t(i < 8 ? a.lo >> (8 * i) : a.hi >> (8 * (i - 8)));
}

bool fe_from_bytes(const FieldParams& fp, const uint8_t* in, FieldElement& out) {
    size_t n = fp.byte_size();
    FieldElement r;
    for (size_t i = 0; i < n; ++i) {
        uint64_t b = in[i];
        if (i < 8)
            r.lo |= b << (8 * i);
        else
            r.hi |= b << (8 * (i - 8));
    }
    if ((r.lo & ~fp.mask().lo) || (r.hi & ~fp.mask().hi)) return false;
    out = r;
    return true;
}

NormalBasis find_normal_basis(const FieldParams& fp) {
    const int m = fp.m;
    FieldElement tv;  // bit r = Tr(x^r), so Tr(y) = parity(y & tv)
    for (int r = 0; r < m; ++r) {
        FieldElement xr;
        xr.set_bit(unsigned(r));
        if (trace(fp, xr)) tv.set_bit(unsigned(r));
    }
    auto tr_fast = [&](FieldElement y) {
        return (__builtin_popcountll(y.lo & tv.lo) + __builtin_popcountll(y.hi & tv.hi)) & 1;
    };

    // Smallest element (integer order) with independent conjugates. The m
    // conjugates of y sum to Tr(y), so trace-0 elements are never normal;
    // scan only trace-1 elements, starting at the smallest one. (For even m
    // the lowest trace-1 monomial can sit near the top of the field, which
    // puts the answer far beyond where a scan from 1 could ever reach.)
    std::vector<FieldElement> conj(static_cast<size_t>(m));
    int tb = tv.lo ? __builtin_ctzll(tv.lo) : 64 + __builtin_ctzll(tv.hi);
    uint64_t clo = tb < 64 ? uint64_t(1) << tb : 0;
    uint64_t chi = tb < 64 ? 0 : uint64_t(1) << (tb - 64);
    for (;;) {
        FieldElement cand{clo, chi};
        if ((cand.lo & ~fp.mask().lo) || (cand.hi & ~fp.mask().hi))
            throw std::logic_error("normal basis search exhausted the field");
        bool indep = tr_fast(cand) != 0;
        if (indep) {
            conj[0] = cand;
            for (int i = 1; i < m; ++i) conj[size_t(i)] = field_sq(fp, conj[size_t(i - 1)]);
            std::vector<FieldElement> slot(128);
            for (int i = 0; i < m && indep; ++i) {
                FieldElement v = conj[size_t(i)];
                for (;;) {
                    int l = fe_lead(v);
                    if (l < 0) {
                        indep = false;
                        break;
                    }
                    if (slot[size_t(l)].is_zero()) {
                        slot[size_t(l)] = v;
                        break;
                    }
                    v ^= slot[size_t(l)];
                }
            }
        }
        if (indep) break;
        if (++clo == 0) ++chi;
    }

    // Dual basis from the trace bilinear form: M[i][r] = Tr(conj_i * x^r),
    // column j of M^-1 gives the polynomial-basis coordinates of dual_j.
    // rows: [ M row | inverse row ], two FieldElements each
    std::vector<std::array<FieldElement, 2>> rows(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        FieldElement p = conj[size_t(i)], row;
        for (int r = 0; r < m; ++r) {
            if (tr_fast(p)) row.set_bit(unsigned(r));
            p = xtime(fp, p);
        }
        rows[size_t(i)][0] = row;
        rows[size_t(i)][1].set_bit(unsigned(i));
    }
    for (int c = 0; c < m; ++c) {
        int piv = -1;
        for (int r = c; r < m; ++r)
            if (rows[size_t(r)][0].bit(unsigned(c))) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::logic_error("trace form degenerate");
        std::swap(rows[size_t(c)], rows[size_t(piv)]);
        for (int r = 0; r < m; ++r)
            if (r != c && rows[size_t(r)][0].bit(unsigned(c))) {
                rows[size_t(r)][0] ^= rows[size_t(c)][0];
                rows[size_t(r)][1] ^= rows[size_t(c)][1];
            }
    }
    NormalBasis nb;
    nb.conj = std::move(conj);
    nb.dual.assign(size_t(m), FieldElement{});
    for (int j = 0; j < m; ++j) {
        FieldElement d;
        for (int r = 0; r < m; ++r)
            if (rows[size_t(r)][1].bit(unsigned(j))) d.set_bit(unsigned(r));
        nb.dual[size_t(j)] = d;
    }
    return nb;
}

std::vector<uint8_t> coordinates(const FieldParams& fp, FieldElement a,
                                 const std::vector<FieldElement>& basis) {
    const int m = fp.m;
    if (int(basis.size()) != m) throw std::invalid_argument("basis length != m");
    // Solve B c = a where column i of B is basis[i]; row r of the augmented
    // system packs the r-th bit of every basis element plus the r-th bit of a.
    std::vector<FieldElement> rows(static_cast<size_t>(m));
    std::vector<uint8_t> rhs(static_cast<size_t>(m));
    for (int r = 0; r < m; ++r) {
        for (int i = 0; i < m; ++i)
            if (basis[size_t(i)].bit(unsigned(r))) rows[size_t(r)].set_bit(unsigned(i));
        rhs[size_t(r)] = a.bit(unsigned(r));
    }
    std::vector<uint8_t> out(static_cast<size_t>(m));
    for (int c = 0; c < m; ++c) {
        int piv = -1;
        for (int r = c; r < m; ++r)
            if (rows[size_t(r)].bit(unsigned(c))) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::invalid_argument("dependent basis");
        std::swap(rows[size_t(c)], rows[size_t(piv)]);
        std::swap(rhs[size_t(c)], rhs[size_t(piv)]);
        for (int r = 0; r < m; ++r)
            if (r != c && rows[size_t(r)].bit(unsigned(c))) {
                rows[size_t(r)] ^= rows[size_t(c)];
                rhs[size_t(r)] ^= rhs[size_t(c)];
            }
    }
    for (int i = 0; i < m; ++i) out[size_t(i)] = rhs[size_t(i)];
    return out;
}

}  // namespace egk
