#include "egk/rank_linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace egk {

namespace {

int fe_lead(FieldElement v) {
    if (v.hi) return 127 - __builtin_clzll(v.hi);
    if (v.lo) return 63 - __builtin_clzll(v.lo);
    return -1;
}

void row_xor(MatrixBase& m, int dst, int src) {
    uint64_t* d = m.words.data() + static_cast<size_t>(dst) * size_t(m.wpr);
    const uint64_t* s = m.words.data() + static_cast<size_t>(src) * size_t(m.wpr);
    for (int w = 0; w < m.wpr; ++w) d[w] ^= s[w];
}

void row_swap(MatrixBase& m, int a, int b) {
    if (a == b) return;
    uint64_t* pa = m.words.data() + static_cast<size_t>(a) * size_t(m.wpr);
    uint64_t* pb = m.words.data() + static_cast<size_t>(b) * size_t(m.wpr);
    for (int w = 0; w < m.wpr; ++w) std::swap(pa[w], pb[w]);
}

// reduced echelon form in place over the first pivot_cols columns;
// returns the pivot column list
std::vector<int> mb_rref(MatrixBase& m, int pivot_cols) {
    std::vector<int> pivots;
    int row = 0;
    for (int c = 0; c < pivot_cols && row < m.rows; ++c) {
        int piv = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.get(r, c)) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        row_swap(m, row, piv);
        for (int r = 0; r < m.rows; ++r)
            if (r != row && m.get(r, c)) row_xor(m, r, row);
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

}  // namespace

MatrixBase mb_identity(int n) {
    MatrixBase m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

MatrixBase mb_mul(const MatrixBase& a, const MatrixBase& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mb_mul dimension mismatch");
    MatrixBase out(a.rows, b.cols);
    for (int r = 0; r < a.rows; ++r) {
        uint64_t* dst = out.words.data() + static_cast<size_t>(r) * size_t(out.wpr);
        for (int i = 0; i < a.cols; ++i)
            if (a.get(r, i)) {
                const uint64_t* src = b.words.data() + static_cast<size_t>(i) * size_t(b.wpr);
                for (int w = 0; w < b.wpr; ++w) dst[w] ^= src[w];
            }
    }
    return out;
}

MatrixBase mb_transpose(const MatrixBase& a) {
    MatrixBase out(a.cols, a.rows);
    for (int r = 0; r < a.rows; ++r)
        for (int c = 0; c < a.cols; ++c)
            if (a.get(r, c)) out.set(c, r, true);
    return out;
}

int mb_rank(MatrixBase a) { return int(mb_rref(a, a.cols).size()); }

std::optional<MatrixBase> mb_inverse(const MatrixBase& a) {
    if (a.rows != a.cols) throw std::invalid_argument("mb_inverse needs a square matrix");
    const int n = a.rows;
    MatrixBase aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.set(r, c, a.get(r, c));
        aug.set(r, n + r, true);
    }
    if (int(mb_rref(aug, n).size()) != n) return std::nullopt;
    MatrixBase inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.set(r, c, aug.get(r, n + c));
    return inv;
}

MatrixExt me_identity(int n) {
    MatrixExt m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldElement{1, 0};
    return m;
}

MatrixExt me_mul(const FieldParams& fp, const MatrixExt& a, const MatrixExt& b) {
    if (a.cols != b.rows) throw std::invalid_argument("me_mul dimension mismatch");
    MatrixExt out(a.rows, b.cols);
    for (int r = 0; r < a.rows; ++r)
        for (int i = 0; i < a.cols; ++i) {
            FieldElement s = a.at(r, i);
            if (s.is_zero()) continue;
            for (int c = 0; c < b.cols; ++c)
                out.at(r, c) ^= field_mul(fp, s, b.at(i, c));
        }
    return out;
}

MatrixExt me_add(MatrixExt a, const MatrixExt& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("me_add dimension mismatch");
    for (size_t i = 0; i < a.data.size(); ++i) a.data[i] ^= b.data[i];
    return a;
}

VectorExt vec_add(VectorExt a, const VectorExt& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add length mismatch");
    for (size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
    return a;
}

VectorExt vec_scale(const FieldParams& fp, FieldElement c, const VectorExt& v) {
    VectorExt out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = field_mul(fp, c, v[i]);
    return out;
}

VectorExt vec_mul_ext(const FieldParams& fp, const VectorExt& v, const MatrixExt& a) {
    if (int(v.size()) != a.rows) throw std::invalid_argument("vec_mul_ext length mismatch");
    VectorExt out(static_cast<size_t>(a.cols));
    for (int i = 0; i < a.rows; ++i) {
        if (v[size_t(i)].is_zero()) continue;
        for (int c = 0; c < a.cols; ++c)
            out[size_t(c)] ^= field_mul(fp, v[size_t(i)], a.at(i, c));
    }
    return out;
}

VectorExt vec_mul_base(const VectorExt& v, const MatrixBase& p) {
    if (int(v.size()) != p.rows) throw std::invalid_argument("vec_mul_base length mismatch");
    VectorExt out(static_cast<size_t>(p.cols));
    for (int i = 0; i < p.rows; ++i)
        for (int c = 0; c < p.cols; ++c)
            if (p.get(i, c)) out[size_t(c)] ^= v[size_t(i)];
    return out;
}

MatrixBase coordinate_matrix(const FieldParams& fp, const VectorExt& v,
                             const std::vector<FieldElement>& basis) {
    const int m = fp.m;
    const int n = int(v.size());
    if (int(basis.size()) != m) throw std::invalid_argument("basis length != m");
    // One elimination for all columns: rows of [B | V] indexed by bit
    // position, where column i of B is basis[i] and column j of V is v_j.
    MatrixBase aug(m, m + n);
    for (int r = 0; r < m; ++r) {
        for (int i = 0; i < m; ++i)
            if (basis[size_t(i)].bit(unsigned(r))) aug.set(r, i, true);
        for (int j = 0; j < n; ++j)
            if (v[size_t(j)].bit(unsigned(r))) aug.set(r, m + j, true);
    }
    if (int(mb_rref(aug, m).size()) != m) throw std::invalid_argument("dependent basis");
    MatrixBase out(m, n);
    for (int r = 0; r < m; ++r)
        for (int j = 0; j < n; ++j)
            if (aug.get(r, m + j)) out.set(r, j, true);
    return out;
}

int rank_weight(const VectorExt& v) {
    // slot-based elimination on the raw bit patterns, which are the
    // coordinates over the polynomial basis
    FieldElement slot[128] = {};
    int rank = 0;
    for (FieldElement x : v) {
        for (;;) {
            int l = fe_lead(x);
            if (l < 0) break;
            if (slot[l].is_zero()) {
                slot[l] = x;
                ++rank;
                break;
            }
            x ^= slot[l];
        }
    }
    return rank;
}

std::vector<FieldElement> support_basis(const VectorExt& v) {
    FieldElement slot[128] = {};
    for (FieldElement x : v) {
        for (;;) {
            int l = fe_lead(x);
            if (l < 0) break;
            if (slot[l].is_zero()) {
                slot[l] = x;
                break;
            }
            x ^= slot[l];
        }
    }
    // back-eliminate to reduced form, then emit by ascending lead
    for (int l = 127; l >= 0; --l) {
        if (slot[l].is_zero()) continue;
        for (int h = 127; h > l; --h)
            if (!slot[h].is_zero() && slot[h].bit(unsigned(l))) slot[h] ^= slot[l];
    }
    std::vector<FieldElement> out;
    for (int l = 0; l < 128; ++l)
        if (!slot[l].is_zero()) out.push_back(slot[l]);
    return out;
}

MatrixExt kronecker(const FieldParams& fp, const MatrixExt& a, const MatrixExt& b) {
    MatrixExt out(a.rows * b.rows, a.cols * b.cols);
    for (int ra = 0; ra < a.rows; ++ra)
        for (int ca = 0; ca < a.cols; ++ca) {
            FieldElement s = a.at(ra, ca);
            if (s.is_zero()) continue;
            for (int rb = 0; rb < b.rows; ++rb)
                for (int cb = 0; cb < b.cols; ++cb)
                    out.at(ra * b.rows + rb, ca * b.cols + cb) =
                        field_mul(fp, s, b.at(rb, cb));
        }
    return out;
}

MatrixExt moore_matrix(const FieldParams& fp, const VectorExt& g, int k) {
    if (k < 1 || k > fp.m) throw std::invalid_argument("moore_matrix needs 1 <= k <= m");
    MatrixExt out(k, int(g.size()));
    for (int j = 0; j < out.cols; ++j) out.at(0, j) = g[size_t(j)];
    for (int i = 1; i < k; ++i)
        for (int j = 0; j < out.cols; ++j)
            out.at(i, j) = field_sq(fp, out.at(i - 1, j));
    return out;
}

std::optional<MatrixExt> solve_linear(const FieldParams& fp, const MatrixExt& a,
                                      const MatrixExt& b) {
    if (a.rows != b.rows) throw std::invalid_argument("solve_linear dimension mismatch");
    MatrixExt aug(a.rows, a.cols + b.cols);
    for (int r = 0; r < a.rows; ++r) {
        for (int c = 0; c < a.cols; ++c) aug.at(r, c) = a.at(r, c);
        for (int c = 0; c < b.cols; ++c) aug.at(r, a.cols + c) = b.at(r, c);
    }
    std::vector<int> pivots;
    int row = 0;
    for (int c = 0; c < a.cols && row < aug.rows; ++c) {
        int piv = -1;
        for (int r = row; r < aug.rows; ++r)
            if (!aug.at(r, c).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < aug.cols; ++j) std::swap(aug.at(row, j), aug.at(piv, j));
        FieldElement inv = field_inv(fp, aug.at(row, c));
        for (int j = c; j < aug.cols; ++j) aug.at(row, j) = field_mul(fp, inv, aug.at(row, j));
        for (int r = 0; r < aug.rows; ++r) {
            if (r == row) continue;
            FieldElement f = aug.at(r, c);
            if (f.is_zero()) continue;
            for (int j = c; j < aug.cols; ++j)
                aug.at(r, j) ^= field_mul(fp, f, aug.at(row, j));
        }
        pivots.push_back(c);
        ++row;
    }
    for (int r = row; r < aug.rows; ++r)
        for (int c = 0; c < b.cols; ++c)
            if (!aug.at(r, a.cols + c).is_zero()) return std::nullopt;
    MatrixExt x(a.cols, b.cols);
    for (size_t i = 0; i < pivots.size(); ++i)
        for (int c = 0; c < b.cols; ++c)
            x.at(pivots[i], c) = aug.at(int(i), a.cols + c);
    return x;
}

std::vector<int> information_set(const FieldParams& fp, const MatrixExt& g1) {
    MatrixExt work = g1;
    std::vector<int> cols;
    int row = 0;
    for (int c = 0; c < work.cols && row < work.rows; ++c) {
        int piv = -1;
        for (int r = row; r < work.rows; ++r)
            if (!work.at(r, c).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < work.cols; ++j) std::swap(work.at(row, j), work.at(piv, j));
        FieldElement inv = field_inv(fp, work.at(row, c));
        for (int j = 0; j < work.cols; ++j) work.at(row, j) = field_mul(fp, inv, work.at(row, j));
        for (int r = 0; r < work.rows; ++r) {
            if (r == row) continue;
            FieldElement f = work.at(r, c);
            if (f.is_zero()) continue;
            for (int j = 0; j < work.cols; ++j)
                work.at(r, j) ^= field_mul(fp, f, work.at(row, j));
        }
        cols.push_back(c);
        ++row;
    }
    if (row != g1.rows) throw std::invalid_argument("information_set needs full row rank");
    return cols;
}

int min_rank_distance_bruteforce(const FieldParams& fp, const MatrixExt& g) {
    const int k = g.rows, n = g.cols, m = fp.m;
    if (m * k > 24) throw std::length_error("min_rank_distance_bruteforce instance too large");
    if (k < 1 || n < 1) throw std::invalid_argument("empty generator");
    // Gray-code walk over all nonzero messages: flipping message bit
    // i*m + b xors x^b * row_i into the running codeword.
    std::vector<VectorExt> term(static_cast<size_t>(k * m));
    for (int i = 0; i < k; ++i)
        for (int b = 0; b < m; ++b) {
            FieldElement xb;
            xb.set_bit(unsigned(b));
            VectorExt t(static_cast<size_t>(n));
            for (int j = 0; j < n; ++j) t[size_t(j)] = field_mul(fp, xb, g.at(i, j));
            term[size_t(i * m + b)] = std::move(t);
        }
    VectorExt cw(static_cast<size_t>(n));
    int best = m;
    uint32_t total = uint32_t(1) << (m * k);
    for (uint32_t i = 1; i < total; ++i) {
        int j = __builtin_ctz(i);
        for (int c = 0; c < n; ++c) cw[size_t(c)] ^= term[size_t(j)][size_t(c)];
        best = std::min(best, rank_weight(cw));
        if (best == 0) break;
    }
    return best;
}

}  // namespace egk
