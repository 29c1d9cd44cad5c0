#include "egk/qpoly.hpp"

#include <cassert>
#include <stdexcept>

namespace egk {

int qp_deg(const LinearizedPoly& f) {
    for (int i = int(f.size()) - 1; i >= 0; --i)
        if (!f[size_t(i)].is_zero()) return i;
    return -1;
}

void qp_trim(LinearizedPoly& f) { f.resize(size_t(qp_deg(f) + 1)); }

LinearizedPoly qp_add(LinearizedPoly f, const LinearizedPoly& g) {
    if (f.size() < g.size()) f.resize(g.size());
    for (size_t i = 0; i < g.size(); ++i) f[i] ^= g[i];
    qp_trim(f);
    return f;
}

LinearizedPoly qp_monomial(FieldElement c, int i) {
    if (c.is_zero()) return {};
    LinearizedPoly f(size_t(i) + 1);
    f[size_t(i)] = c;
    return f;
}

FieldElement qp_eval(const FieldParams& fp, const LinearizedPoly& f, FieldElement a) {
    FieldElement acc, p = a;
    for (size_t i = 0; i < f.size(); ++i) {
        if (!f[i].is_zero()) acc ^= field_mul(fp, f[i], p);
        p = field_sq(fp, p);
    }
    return acc;
}

LinearizedPoly sym_mul(const FieldParams& fp, const LinearizedPoly& f,
                       const LinearizedPoly& g) {
    int df = qp_deg(f), dg = qp_deg(g);
    if (df < 0 || dg < 0) return {};
    LinearizedPoly out(size_t(df + dg) + 1);
    // gc holds g^[i], advanced by one squaring per row of the outer loop
    LinearizedPoly gc(g.begin(), g.begin() + dg + 1);
    for (int i = 0; i <= df; ++i) {
        if (i > 0)
            for (auto& c : gc) c = field_sq(fp, c);
        if (f[size_t(i)].is_zero()) continue;
        for (int j = 0; j <= dg; ++j) {
            if (gc[size_t(j)].is_zero()) continue;
            out[size_t(i + j)] ^= field_mul(fp, f[size_t(i)], gc[size_t(j)]);
        }
    }
    qp_trim(out);
    return out;
}

LinearizedPoly reduce_mod_xm(const FieldParams& fp, LinearizedPoly f) {
    const int m = fp.m;
    for (int i = int(f.size()) - 1; i >= m; --i) {
        f[size_t(i % m)] ^= f[size_t(i)];
        f[size_t(i)] = FieldElement{};
    }
    qp_trim(f);
    return f;
}

QuotRem rdiv(const FieldParams& fp, const LinearizedPoly& a, const LinearizedPoly& b) {
    int db = qp_deg(b);
    if (db < 0) throw std::domain_error("rdiv by zero polynomial");
    LinearizedPoly r = a;
    qp_trim(r);
    int dr = qp_deg(r);
    LinearizedPoly q(dr >= db ? size_t(dr - db) + 1 : 0);
    FieldElement lead_inv = field_inv(fp, b[size_t(db)]);
    while (dr >= db) {
        int d = dr - db;
        // (t x^[d]) (x) b has leading coefficient t * b_lead^[d]
        FieldElement t = field_mul(fp, r[size_t(dr)], frobenius(fp, lead_inv, unsigned(d)));
        q[size_t(d)] ^= t;
        for (int j = 0; j <= db; ++j)
            r[size_t(d + j)] ^= field_mul(fp, t, frobenius(fp, b[size_t(j)], unsigned(d)));
        qp_trim(r);
        dr = qp_deg(r);
    }
    qp_trim(q);
    return {std::move(q), std::move(r)};
}

QuotRem ldiv(const FieldParams& fp, const LinearizedPoly& a, const LinearizedPoly& b) {
    const int m = fp.m;
    int db = qp_deg(b);
    if (db < 0) throw std::domain_error("ldiv by zero polynomial");
    int da = qp_deg(a);
    if (da < db) return {{}, a};
    // Coefficient k of b (x) q is sum over i of b_i * (q_{k-i})^[i]; walking k
    // downward, the only unknown is q_{k-db} under the GF(2)-linear bijection
    // t -> b_db * t^[db], inverted once as an m x m bit matrix.
    MatrixBase phi(m, m);
    for (int c = 0; c < m; ++c) {
        FieldElement e;
        e.set_bit(unsigned(c));
        FieldElement img = field_mul(fp, b[size_t(db)], frobenius(fp, e, unsigned(db)));
        for (int r = 0; r < m; ++r)
            if (img.bit(unsigned(r))) phi.set(r, c, true);
    }
    auto phi_inv = mb_inverse(phi);
    if (!phi_inv.has_value()) throw std::logic_error("ldiv leading map not invertible");
    LinearizedPoly q(size_t(da - db) + 1);
    for (int k = da; k >= db; --k) {
        FieldElement rhs = size_t(k) < a.size() ? a[size_t(k)] : FieldElement{};
        for (int i = 0; i < db; ++i) {
            int j = k - i;
            if (j < 0 || j > da - db) continue;
            if (b[size_t(i)].is_zero() || q[size_t(j)].is_zero()) continue;
            rhs ^= field_mul(fp, b[size_t(i)], frobenius(fp, q[size_t(j)], unsigned(i)));
        }
        FieldElement t;
        for (int rr = 0; rr < m; ++rr) {
            const uint64_t* row = phi_inv->words.data() + size_t(rr) * size_t(phi_inv->wpr);
            uint64_t acc = row[0] & rhs.lo;
            if (phi_inv->wpr > 1) acc ^= row[1] & rhs.hi;
            if (__builtin_parityll(acc)) t.set_bit(unsigned(rr));
        }
        q[size_t(k - db)] = t;
    }
    qp_trim(q);
    LinearizedPoly r = qp_add(a, sym_mul(fp, b, q));
    assert(qp_deg(r) < db);
    return {std::move(q), std::move(r)};
}

#ifndef NDEBUG
bool leea_invariant(const FieldParams& fp, const LeeaResult& res, const LinearizedPoly& a,
                    const LinearizedPoly& b) {
    return qp_add(qp_add(sym_mul(fp, res.u, b), sym_mul(fp, res.v, a)), res.r).empty();
}
#endif

LeeaResult leea(const FieldParams& fp, const LinearizedPoly& a, const LinearizedPoly& b,
                int d_stop) {
    if (d_stop <= 0) throw std::invalid_argument("leea needs d_stop > 0");
    LinearizedPoly one = qp_monomial(FieldElement{1, 0}, 0);
    LinearizedPoly r_prev = a, r_cur = b;
    LinearizedPoly u_prev, u_cur = one;
    LinearizedPoly v_prev = one, v_cur;
    qp_trim(r_prev);
    qp_trim(r_cur);
    if (qp_deg(r_prev) < d_stop) {
        LeeaResult out{r_prev, u_prev, v_prev};
        assert(leea_invariant(fp, out, a, b));
        return out;
    }
    for (;;) {
        if (qp_deg(r_cur) < d_stop) {
            LeeaResult out{r_cur, u_cur, v_cur};
            assert(leea_invariant(fp, out, a, b));
            return out;
        }
        QuotRem qr = rdiv(fp, r_prev, r_cur);
        LinearizedPoly u_next = qp_add(u_prev, sym_mul(fp, qr.q, u_cur));
        LinearizedPoly v_next = qp_add(v_prev, sym_mul(fp, qr.q, v_cur));
        r_prev = std::move(r_cur);
        r_cur = std::move(qr.r);
        u_prev = std::move(u_cur);
        u_cur = std::move(u_next);
        v_prev = std::move(v_cur);
        v_cur = std::move(v_next);
    }
}

LinearizedPoly q_transform(const FieldParams& fp, const LinearizedPoly& f,
                           const NormalBasis& nb) {
    LinearizedPoly out(size_t(fp.m));
    for (int j = 0; j < fp.m; ++j) out[size_t(j)] = qp_eval(fp, f, nb.conj[size_t(j)]);
    qp_trim(out);
    return out;
}

LinearizedPoly inverse_q_transform(const FieldParams& fp, const LinearizedPoly& F,
                                   const NormalBasis& nb) {
    LinearizedPoly out(size_t(fp.m));
    for (int i = 0; i < fp.m; ++i) out[size_t(i)] = qp_eval(fp, F, nb.dual[size_t(i)]);
    qp_trim(out);
    return out;
}

LinearizedPoly fast_sym_mul(const FieldParams& fp, const LinearizedPoly& f,
                            const LinearizedPoly& g, const NormalBasis& nb) {
    // (f o g)(alpha^[i]) = f(g(alpha^[i])), so composing the evaluations of g
    // through f gives the transform of the reduced product.
    LinearizedPoly h(size_t(fp.m));
    for (int i = 0; i < fp.m; ++i)
        h[size_t(i)] = qp_eval(fp, f, qp_eval(fp, g, nb.conj[size_t(i)]));
    qp_trim(h);
    return inverse_q_transform(fp, h, nb);
}

std::vector<FieldElement> multipoint_eval(const FieldParams& fp, const LinearizedPoly& f,
                                          const std::vector<FieldElement>& points,
                                          const NormalBasis& nb) {
    // f(p_j) for p_j = sum_i g_ij alpha^[i] is sum_i g_ij f(alpha^[i]): one
    // bit-matrix product of the transform coordinates with the point
    // coordinates, both over the conjugate basis.
    VectorExt ft(size_t(fp.m));
    for (int j = 0; j < fp.m; ++j) ft[size_t(j)] = qp_eval(fp, f, nb.conj[size_t(j)]);
    MatrixBase fmat = coordinate_matrix(fp, ft, nb.conj);
    MatrixBase gmat = coordinate_matrix(fp, points, nb.conj);
    MatrixBase prod = mb_mul(fmat, gmat);
    VectorExt conj(nb.conj.begin(), nb.conj.end());
    return vec_mul_base(conj, prod);
}

}  // namespace egk
