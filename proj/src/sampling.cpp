#include "egk/sampling.hpp"

#include <stdexcept>

namespace egk {

namespace {

constexpr int kRetryCap = 256;

[[noreturn]] void retry_exhausted(const char* what) {
    throw std::runtime_error(std::string("sampling: retry cap exceeded for ") + what);
}

// w independent field elements (a support basis)
std::vector<FieldElement> draw_support(const FieldParams& fp, Expander& e, int w) {
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        std::vector<FieldElement> sup(static_cast<size_t>(w));
        for (auto& s : sup) s = e.uniform_element(fp);
        if (rank_weight(sup) == w) return sup;
    }
    retry_exhausted("support basis");
}

// rows x cols bit matrix from the stream, bits column-major LSB-first
MatrixBase draw_bit_matrix(Expander& e, int rows, int cols) {
    size_t nbits = size_t(rows) * size_t(cols);
    std::vector<uint8_t> bytes = e.expand((nbits + 7) / 8);
    MatrixBase mat(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) {
            size_t bit = size_t(j) * size_t(rows) + size_t(i);
            if ((bytes[bit / 8] >> (bit % 8)) & 1) mat.set(i, j, true);
        }
    return mat;
}

MatrixBase draw_full_rank_matrix(Expander& e, int rows, int cols) {
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        MatrixBase mat = draw_bit_matrix(e, rows, cols);
        if (mb_rank(mat) == std::min(rows, cols)) return mat;
    }
    retry_exhausted("full-rank coefficient matrix");
}

// column j of coeff selects the support combination for entry j
VectorExt combine(const std::vector<FieldElement>& sup, const MatrixBase& coeff) {
    VectorExt out(static_cast<size_t>(coeff.cols));
    for (int j = 0; j < coeff.cols; ++j)
        for (int l = 0; l < coeff.rows; ++l)
            if (coeff.get(l, j)) out[size_t(j)] ^= sup[size_t(l)];
    return out;
}

}  // namespace

Expander::Expander(const Seed& seed, uint8_t domain) {
    xof_.absorb(seed.data(), seed.size());
    xof_.absorb(&domain, 1);
}

std::vector<uint8_t> Expander::expand(size_t nbytes) {
    std::vector<uint8_t> out(nbytes);
    xof_.squeeze(out.data(), nbytes);
    return out;
}

FieldElement Expander::uniform_element(const FieldParams& fp) {
    std::vector<uint8_t> bytes = expand(fp.byte_size());
    FieldElement out;
    for (size_t i = 0; i < bytes.size(); ++i) {
        if (i < 8)
            out.lo |= uint64_t(bytes[i]) << (8 * i);
        else
            out.hi |= uint64_t(bytes[i]) << (8 * (i - 8));
    }
    out.lo &= fp.mask().lo;
    out.hi &= fp.mask().hi;
    return out;
}

VectorExt Expander::uniform_vector(const FieldParams& fp, int n) {
    VectorExt out(static_cast<size_t>(n));
    for (auto& e : out) e = uniform_element(fp);
    return out;
}

VectorExt sample_weight_vector(const FieldParams& fp, Expander& e, int n, int w) {
    if (w < 0 || w > std::min(n, fp.m))
        throw std::invalid_argument("sample_weight_vector: w > min(n, m)");
    if (w == 0) return VectorExt(static_cast<size_t>(n));
    std::vector<FieldElement> sup = draw_support(fp, e, w);
    MatrixBase coeff = draw_full_rank_matrix(e, w, n);
    return combine(sup, coeff);
}

VectorExt sample_generator(const FieldParams& fp, Expander& e, int n, int t) {
    return sample_weight_vector(fp, e, n, t);
}

VectorExt sample_blockwise(const FieldParams& fp, Expander& e, const std::vector<int>& lengths,
                           const std::vector<int>& weights) {
    if (lengths.size() != weights.size())
        throw std::invalid_argument("sample_blockwise: list lengths differ");
    int total_w = 0;
    for (size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 0 || weights[i] > std::min(lengths[i], fp.m))
            throw std::invalid_argument("sample_blockwise: infeasible block weight");
        total_w += weights[i];
    }
    if (total_w > fp.m) throw std::invalid_argument("sample_blockwise: total weight exceeds m");

    std::vector<FieldElement> sup =
        total_w ? draw_support(fp, e, total_w) : std::vector<FieldElement>{};
    VectorExt out;
    int offset = 0;
    for (size_t i = 0; i < lengths.size(); ++i) {
        const int n = lengths[i], w = weights[i];
        if (w == 0) {
            out.insert(out.end(), size_t(n), FieldElement{});
            continue;
        }
        std::vector<FieldElement> sub(sup.begin() + offset, sup.begin() + offset + w);
        MatrixBase coeff = draw_full_rank_matrix(e, w, n);
        VectorExt block = combine(sub, coeff);
        out.insert(out.end(), block.begin(), block.end());
        offset += w;
    }
    return out;
}

std::tuple<MatrixExt, MatrixExt, MatrixExt> sample_nh(const FieldParams& fp, Expander& e, int a,
                                                      int b, int c, int d, int w1, int w2) {
    if (w1 < 0 || w1 > w2 || w2 > fp.m) throw std::invalid_argument("sample_nh: need w1 <= w2 <= m");
    if (w2 > a * c || w1 > a * (b + d)) throw std::invalid_argument("sample_nh: weights too large");

    std::vector<FieldElement> v2 = draw_support(fp, e, w2);
    // V1 = T * V2 for a full-rank w1 x w2 selector
    MatrixBase select = draw_full_rank_matrix(e, w1, w2);
    std::vector<FieldElement> v1(static_cast<size_t>(w1));
    for (int i = 0; i < w1; ++i)
        for (int j = 0; j < w2; ++j)
            if (select.get(i, j)) v1[size_t(i)] ^= v2[size_t(j)];

    // M1 and M3 share one coefficient matrix so their joint weight is exact
    MatrixBase joint = draw_full_rank_matrix(e, w1, a * (b + d));
    VectorExt flat13 = combine(v1, joint);
    MatrixBase mid = draw_full_rank_matrix(e, w2, a * c);
    VectorExt flat2 = combine(v2, mid);

    auto unflatten = [a](const FieldElement* p, int cols) {
        MatrixExt out(a, cols);
        for (int j = 0; j < cols; ++j)
            for (int i = 0; i < a; ++i) out.at(i, j) = p[size_t(j) * size_t(a) + size_t(i)];
        return out;
    };
    MatrixExt m1 = unflatten(flat13.data(), b);
    MatrixExt m3 = unflatten(flat13.data() + size_t(a) * size_t(b), d);
    MatrixExt m2 = unflatten(flat2.data(), c);
    return {std::move(m1), std::move(m2), std::move(m3)};
}

}  // namespace egk
