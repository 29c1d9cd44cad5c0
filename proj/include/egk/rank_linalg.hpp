#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "egk/galois.hpp"

namespace egk {

/// Row vector over GF(2^m).
using VectorExt = std::vector<FieldElement>;

/// Dense row-major matrix over GF(2^m).
struct MatrixExt {
    int rows = 0, cols = 0;
    std::vector<FieldElement> data;

    MatrixExt() = default;
    MatrixExt(int r, int c)
        : rows(r), cols(c), data(static_cast<size_t>(r) * static_cast<size_t>(c)) {}
    FieldElement& at(int r, int c) {
        return data[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)];
    }
    const FieldElement& at(int r, int c) const {
        return data[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)];
    }
    bool operator==(const MatrixExt&) const = default;
};

/// Dense bit matrix over GF(2), one row = wpr 64-bit words.
struct MatrixBase {
    int rows = 0, cols = 0;
    int wpr = 0;
    std::vector<uint64_t> words;

    MatrixBase() = default;
    MatrixBase(int r, int c)
        : rows(r), cols(c), wpr((c + 63) / 64),
          words(static_cast<size_t>(r) * static_cast<size_t>(wpr)) {}
    bool get(int r, int c) const {
        return (words[static_cast<size_t>(r) * size_t(wpr) + size_t(c >> 6)] >> (c & 63)) & 1;
    }
    void set(int r, int c, bool v) {
        uint64_t& w = words[static_cast<size_t>(r) * size_t(wpr) + size_t(c >> 6)];
        uint64_t bit = uint64_t(1) << (c & 63);
        w = v ? (w | bit) : (w & ~bit);
    }
    bool operator==(const MatrixBase&) const = default;
};

MatrixBase mb_identity(int n);
MatrixBase mb_mul(const MatrixBase& a, const MatrixBase& b);
MatrixBase mb_transpose(const MatrixBase& a);
int mb_rank(MatrixBase a);
/// nullopt when singular; throws when not square
std::optional<MatrixBase> mb_inverse(const MatrixBase& a);

MatrixExt me_identity(int n);
MatrixExt me_mul(const FieldParams& fp, const MatrixExt& a, const MatrixExt& b);
MatrixExt me_add(MatrixExt a, const MatrixExt& b);

VectorExt vec_add(VectorExt a, const VectorExt& b);
VectorExt vec_scale(const FieldParams& fp, FieldElement c, const VectorExt& v);
/// row vector times extension-field matrix
VectorExt vec_mul_ext(const FieldParams& fp, const VectorExt& v, const MatrixExt& a);
/// row vector times bit matrix: out_j = xor of v_i over set p(i,j)
VectorExt vec_mul_base(const VectorExt& v, const MatrixBase& p);

/// m x n bit matrix whose column j expands v_j over the given basis
MatrixBase coordinate_matrix(const FieldParams& fp, const VectorExt& v,
                             const std::vector<FieldElement>& basis);
/// rank of the coordinate matrix; independent of the basis choice
int rank_weight(const VectorExt& v);
/// reduced echelon basis of the GF(2)-span of the entries, ascending leads
std::vector<FieldElement> support_basis(const VectorExt& v);

MatrixExt kronecker(const FieldParams& fp, const MatrixExt& a, const MatrixExt& b);
/// k x n matrix with row i = g^[i] entry-wise
MatrixExt moore_matrix(const FieldParams& fp, const VectorExt& g, int k);

/// any X with AX = b (free variables zeroed), or nullopt when inconsistent;
/// throws on dimension mismatch
std::optional<MatrixExt> solve_linear(const FieldParams& fp, const MatrixExt& a,
                                      const MatrixExt& b);

/// lexicographically first column set whose submatrix is invertible;
/// throws when g1 is not full row rank
std::vector<int> information_set(const FieldParams& fp, const MatrixExt& g1);

/// min rank weight over all nonzero messages, enumerated exhaustively;
/// throws std::length_error when m * rows > 24
int min_rank_distance_bruteforce(const FieldParams& fp, const MatrixExt& g);

}  // namespace egk
