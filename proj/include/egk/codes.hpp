#pragma once

#include <utility>
#include <vector>

#include "egk/qpoly.hpp"
#include "egk/rank_linalg.hpp"

namespace egk {

/// Evaluation code of the q-polynomials of q-degree < k on the entries of g,
/// with rank_weight(g) = t. Carries the canonical form and, when t = m, the
/// precomputed basis-change data the transform decoder needs.
struct EGCode {
    VectorExt g;
    int n = 0, k = 0, t = 0;
    VectorExt g_prime;  // g * P: first t entries independent, rest zero
    MatrixBase P;
    NormalBasis nb;      // filled when t == m
    MatrixBase a_inv;    // inverse of the conjugate-coordinates of g_prime
};

/// Product code of two component EG codes over the same field.
struct EGKCode {
    EGCode c1, c2;
    MatrixExt G;                // kronecker generator, k1 k2 x n1 n2
    std::vector<int> info_set;  // information set of the c1 generator
};

enum class EgkRegime { case1, case2, unchecked };

enum class DecodeFailure { remainder_nonzero, radius_exceeded, rank_error };

struct DecodeOutcome {
    bool ok = false;
    VectorExt message;
    DecodeFailure reason = DecodeFailure::rank_error;
    int block = -1;  // failing block for product-code decoding
};

/// invertible P over GF(2) with g * P = (g'_1, ..., g'_t, 0, ..., 0), the
/// first t entries GF(2)-independent; throws when rank_weight(g) != t
std::pair<VectorExt, MatrixBase> canonicalize_generator(const FieldParams& fp,
                                                        const VectorExt& g, int t);

/// validates 1 <= k <= t <= min(n, m) and rank_weight(g) = t
EGCode make_eg_code(const FieldParams& fp, VectorExt g, int k, int t);
EGKCode make_egk_code(const FieldParams& fp, EGCode c1, EGCode c2);

MatrixExt eg_generator_matrix(const FieldParams& fp, const EGCode& code);
const MatrixExt& egk_generator_matrix(const EGKCode& code);

VectorExt eg_encode(const FieldParams& fp, const EGCode& code, const VectorExt& msg);

/// guaranteed radius of the transform decoder
int eg_decoding_radius(const EGCode& code);
/// the looser published capability min{t-k, floor((n-k)/2)}, informational
int eg_radius_paper_bound(const EGCode& code);

EgkRegime egk_regime(const FieldParams& fp, const EGKCode& code);
/// throws std::domain_error when the regime is unchecked
int egk_decoding_radius(const FieldParams& fp, const EGKCode& code);

/// transform-domain decoding; requires code.t == m
DecodeOutcome eg_decode(const FieldParams& fp, const EGCode& code, const VectorExt& y);
/// information-set block decoding against c2 plus a k1 x k1 solve
DecodeOutcome egk_decode(const FieldParams& fp, const EGKCode& code, const VectorExt& y);

}  // namespace egk
