#pragma once

#include <cstdint>
#include <vector>

#include "egk/rank_linalg.hpp"

namespace egk {

/// Coefficient vector of a polynomial in F_{2^m}[X] / (N(X)), length n.
using RingElement = VectorExt;

/// Quotient ring modulus data. N(X) has GF(2) coefficients, bit-packed 64
/// per word (bit i of word i/64 is the coefficient of X^i), and is checked
/// irreducible at construction. xpow caches X^(n+s) mod N for the reducer.
struct RingParams {
    int n = 0;
    std::vector<uint64_t> modulus;
    std::vector<std::vector<uint64_t>> xpow;
};

/// Ring with the lexicographically smallest irreducible N of degree n,
/// cached per degree.
RingParams make_ring(int n);
/// Explicit modulus; must be irreducible of degree n.
RingParams make_ring(int n, std::vector<uint64_t> modulus);

RingElement ring_mul(const FieldParams& fp, const RingParams& rp, const RingElement& u,
                     const RingElement& v);

/// n x n matrix whose row i is X^i * v(X) mod N(X)
MatrixExt ideal_matrix(const FieldParams& fp, const RingParams& rp, const RingElement& v);

/// column j of the result is ring_mul(z, column j of mat)
MatrixExt vec_ring_mat_mul(const FieldParams& fp, const RingParams& rp, const RingElement& z,
                           const MatrixExt& mat);

/// column j of the result is the j-th length-a chunk of v
MatrixExt fold(const VectorExt& v, int a);
VectorExt unfold(const MatrixExt& mat);

}  // namespace egk
