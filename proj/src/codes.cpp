#include "egk/codes.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace egk {

namespace {

void row_swap(MatrixBase& a, int r1, int r2) {
    if (r1 == r2) return;
    uint64_t* w1 = a.words.data() + size_t(r1) * size_t(a.wpr);
    uint64_t* w2 = a.words.data() + size_t(r2) * size_t(a.wpr);
    for (int i = 0; i < a.wpr; ++i) std::swap(w1[i], w2[i]);
}

void row_xor(MatrixBase& a, int dst, int src) {
    uint64_t* wd = a.words.data() + size_t(dst) * size_t(a.wpr);
    const uint64_t* ws = a.words.data() + size_t(src) * size_t(a.wpr);
    for (int i = 0; i < a.wpr; ++i) wd[i] ^= ws[i];
}

DecodeOutcome fail(DecodeFailure reason) {
    DecodeOutcome o;
    o.ok = false;
    o.reason = reason;
    return o;
}

}  // namespace

std::pair<VectorExt, MatrixBase> canonicalize_generator(const FieldParams& fp,
                                                        const VectorExt& g, int t) {
    const int n = int(g.size());
    const int m = fp.m;
    if (t < 1 || t > std::min(n, m))
        throw std::invalid_argument("canonicalize_generator: t out of range");

    // Row j of the left block is the bit expansion of g_j; the right block
    // accumulates the row operations. Reducing rows of the transpose is the
    // same as reducing columns of the coordinate matrix of g.
    MatrixBase aug(n, m + n);
    for (int j = 0; j < n; ++j) {
        for (int b = 0; b < m; ++b) {
            uint64_t w = b < 64 ? g[size_t(j)].lo : g[size_t(j)].hi;
            if ((w >> (b & 63)) & 1) aug.set(j, b, true);
        }
        aug.set(j, m + j, true);
    }
    int rank = 0;
    for (int c = 0; c < m && rank < n; ++c) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (aug.get(r, c)) { piv = r; break; }
        if (piv < 0) continue;
        row_swap(aug, rank, piv);
        for (int r = 0; r < n; ++r)
            if (r != rank && aug.get(r, c)) row_xor(aug, r, rank);
        ++rank;
    }
    if (rank != t)
        throw std::invalid_argument("canonicalize_generator: rank weight of g is not t");

    VectorExt gp(static_cast<size_t>(n));
    for (int j = 0; j < t; ++j) {
        FieldElement e;
        for (int b = 0; b < m; ++b)
            if (aug.get(j, b)) e.set_bit(unsigned(b));
        gp[size_t(j)] = e;
    }
    MatrixBase trans(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (aug.get(j, m + i)) trans.set(j, i, true);
    return {std::move(gp), mb_transpose(trans)};
}

EGCode make_eg_code(const FieldParams& fp, VectorExt g, int k, int t) {
    EGCode code;
    code.g = std::move(g);
    code.n = int(code.g.size());
    code.k = k;
    code.t = t;
    if (k < 1 || k > t || t > std::min(code.n, fp.m))
        throw std::invalid_argument("make_eg_code: need 1 <= k <= t <= min(n, m)");
    if (rank_weight(code.g) != t)
        throw std::invalid_argument("make_eg_code: rank weight of g is not t");

    auto canon = canonicalize_generator(fp, code.g, t);
    code.g_prime = std::move(canon.first);
    code.P = std::move(canon.second);

    if (t == fp.m) {
        code.nb = find_normal_basis(fp);
        VectorExt head(code.g_prime.begin(), code.g_prime.begin() + t);
        MatrixBase a = coordinate_matrix(fp, head, code.nb.conj);
        auto inv = mb_inverse(a);
        if (!inv) throw std::logic_error("make_eg_code: canonical coordinates not invertible");
        code.a_inv = std::move(*inv);
    }
    return code;
}

EGKCode make_egk_code(const FieldParams& fp, EGCode c1, EGCode c2) {
    EGKCode code;
    code.c1 = std::move(c1);
    code.c2 = std::move(c2);
    MatrixExt g1 = eg_generator_matrix(fp, code.c1);
    MatrixExt g2 = eg_generator_matrix(fp, code.c2);
    code.G = kronecker(fp, g1, g2);
    code.info_set = information_set(fp, g1);
    return code;
}

MatrixExt eg_generator_matrix(const FieldParams& fp, const EGCode& code) {
    return moore_matrix(fp, code.g, code.k);
}

const MatrixExt& egk_generator_matrix(const EGKCode& code) { return code.G; }

VectorExt eg_encode(const FieldParams& fp, const EGCode& code, const VectorExt& msg) {
    if (int(msg.size()) != code.k) throw std::invalid_argument("eg_encode: message length");
    LinearizedPoly f = msg;
    qp_trim(f);
    VectorExt out(size_t(code.n));
    for (int j = 0; j < code.n; ++j) out[size_t(j)] = qp_eval(fp, f, code.g[size_t(j)]);
    return out;
}

int eg_decoding_radius(const EGCode& code) { return (code.t - code.k) / 2; }

int eg_radius_paper_bound(const EGCode& code) {
    return std::min(code.t - code.k, (code.n - code.k) / 2);
}

EgkRegime egk_regime(const FieldParams& fp, const EGKCode& code) {
    if (code.c1.k == code.c1.t && code.c2.t == fp.m) return EgkRegime::case1;
    if (code.c1.t * code.c2.t <= fp.m) return EgkRegime::case2;
    return EgkRegime::unchecked;
}

int egk_decoding_radius(const FieldParams& fp, const EGKCode& code) {
    switch (egk_regime(fp, code)) {
        case EgkRegime::case1:
            return (code.c2.t - code.c2.k) / 2;
        case EgkRegime::case2:
            return ((code.c1.t - code.c1.k + 1) * (code.c2.t - code.c2.k + 1) - 1) / 2;
        default:
            throw std::domain_error("egk_decoding_radius: unchecked parameter regime");
    }
}

DecodeOutcome eg_decode(const FieldParams& fp, const EGCode& code, const VectorExt& y) {
    const int m = fp.m;
    if (code.t != m) throw std::invalid_argument("eg_decode: transform decoder needs t = m");
    if (int(y.size()) != code.n) throw std::invalid_argument("eg_decode: received word length");

    // Move to the canonical coordinates (zero columns beyond t carry no
    // information), then rewrite against the normal basis so position i holds
    // f(alpha^[i]) plus an error of the same rank weight.
    VectorExt yp = vec_mul_base(y, code.P);
    yp.resize(size_t(m));
    VectorExt yt = vec_mul_base(yp, code.a_inv);

    // Dual-basis transform: linearity gives Y = f + E with E the transform of
    // the error vector, whose image spans at most rank-many dimensions. Any
    // annihilator of that image yields a key equation the remainder chain on
    // (x^[m] - x, Y) solves.
    LinearizedPoly yhat = inverse_q_transform(fp, yt, code.nb);

    LinearizedPoly a(size_t(m) + 1);
    a[0].set_bit(0);
    a[size_t(m)].set_bit(0);
    const int d_stop = (m + code.k) / 2;
    LeeaResult chain = leea(fp, a, yhat, d_stop);
    if (qp_deg(chain.u) < 0) return fail(DecodeFailure::rank_error);

    QuotRem qr = ldiv(fp, chain.r, chain.u);
    if (!qr.r.empty()) return fail(DecodeFailure::remainder_nonzero);
    if (qp_deg(qr.q) >= code.k) return fail(DecodeFailure::radius_exceeded);
    assert(qp_add(sym_mul(fp, chain.u, qr.q), chain.r).empty());

    DecodeOutcome out;
    out.ok = true;
    out.message.assign(size_t(code.k), FieldElement{});
    for (size_t i = 0; i < qr.q.size(); ++i) out.message[i] = qr.q[i];
    return out;
}

DecodeOutcome egk_decode(const FieldParams& fp, const EGKCode& code, const VectorExt& y) {
    const int n1 = code.c1.n, n2 = code.c2.n;
    const int k1 = code.c1.k, k2 = code.c2.k;
    if (int(y.size()) != n1 * n2) throw std::invalid_argument("egk_decode: received word length");

    // Each column block of the product codeword is a c2 codeword whose
    // message is a field combination of the plaintext rows; decoding the
    // blocks of an information set leaves an invertible k1 x k1 system.
    MatrixExt rhs(k1, k2);
    for (int s = 0; s < k1; ++s) {
        const int j = code.info_set[size_t(s)];
        VectorExt block(y.begin() + ptrdiff_t(j) * n2, y.begin() + ptrdiff_t(j + 1) * n2);
        DecodeOutcome o = eg_decode(fp, code.c2, block);
        if (!o.ok) {
            o.block = j;
            return o;
        }
        for (int c = 0; c < k2; ++c) rhs.at(s, c) = o.message[size_t(c)];
    }

    MatrixExt g1 = eg_generator_matrix(fp, code.c1);
    MatrixExt sys(k1, k1);
    for (int s = 0; s < k1; ++s)
        for (int i = 0; i < k1; ++i) sys.at(s, i) = g1.at(i, code.info_set[size_t(s)]);
    auto sol = solve_linear(fp, sys, rhs);
    if (!sol) return fail(DecodeFailure::rank_error);

    DecodeOutcome out;
    out.ok = true;
    out.message.resize(size_t(k1) * size_t(k2));
    for (int i = 0; i < k1; ++i)
        for (int c = 0; c < k2; ++c) out.message[size_t(i) * size_t(k2) + size_t(c)] = sol->at(i, c);
    return out;
}

}  // namespace egk
