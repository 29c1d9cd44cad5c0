#pragma once

#include <vector>

#include "egk/galois.hpp"
#include "egk/rank_linalg.hpp"

namespace egk {

/// coeffs[i] multiplies x^[i] = x^(2^i); operations return trimmed results
/// (no trailing zero coefficients), so vector equality is polynomial equality.
using LinearizedPoly = std::vector<FieldElement>;

/// q-degree; -1 stands in for the zero polynomial and compares below every
/// attainable degree
int qp_deg(const LinearizedPoly& f);
void qp_trim(LinearizedPoly& f);
LinearizedPoly qp_add(LinearizedPoly f, const LinearizedPoly& g);
/// c * x^[i]
LinearizedPoly qp_monomial(FieldElement c, int i);

FieldElement qp_eval(const FieldParams& fp, const LinearizedPoly& f, FieldElement a);

/// symbolic product f(g(x)), plain composition with no index folding
LinearizedPoly sym_mul(const FieldParams& fp, const LinearizedPoly& f,
                       const LinearizedPoly& g);
/// fold coefficient i >= m onto i mod m (x^[m] and x agree as maps)
LinearizedPoly reduce_mod_xm(const FieldParams& fp, LinearizedPoly f);

struct QuotRem {
    LinearizedPoly q, r;
};

/// a = q (x) b + r with deg r < deg b
QuotRem rdiv(const FieldParams& fp, const LinearizedPoly& a, const LinearizedPoly& b);
/// a = b (x) q + r with deg r < deg b
QuotRem ldiv(const FieldParams& fp, const LinearizedPoly& a, const LinearizedPoly& b);

struct LeeaResult {
    LinearizedPoly r, u, v;
};

/// Euclidean remainder chain on (a, b) with cofactors, stopping at the first
/// triple whose remainder has q-degree < d_stop; r = u (x) b + v (x) a holds
/// exactly for the returned triple (asserted per step in debug builds)
LeeaResult leea(const FieldParams& fp, const LinearizedPoly& a, const LinearizedPoly& b,
                int d_stop);

/// F_j = f(alpha^[j]) for j = 0..m-1
LinearizedPoly q_transform(const FieldParams& fp, const LinearizedPoly& f,
                           const NormalBasis& nb);
/// f_i = F(dual^[i]); exact inverse of q_transform
LinearizedPoly inverse_q_transform(const FieldParams& fp, const LinearizedPoly& F,
                                   const NormalBasis& nb);

/// sym_mul followed by reduce_mod_xm, computed through the transform domain
LinearizedPoly fast_sym_mul(const FieldParams& fp, const LinearizedPoly& f,
                            const LinearizedPoly& g, const NormalBasis& nb);

/// evaluations of f at each point, via one bit-matrix product
std::vector<FieldElement> multipoint_eval(const FieldParams& fp, const LinearizedPoly& f,
                                          const std::vector<FieldElement>& points,
                                          const NormalBasis& nb);

}  // namespace egk
