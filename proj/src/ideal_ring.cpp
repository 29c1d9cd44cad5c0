#include "egk/ideal_ring.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "gf2x.hpp"

namespace egk {

namespace {

RingParams build(int n, gf2x::Poly modulus) {
    if (n < 1) throw std::invalid_argument("make_ring: degree must be positive");
    if (gf2x::deg(modulus) != n) throw std::invalid_argument("make_ring: modulus degree");
    if (!gf2x::is_irreducible(modulus)) throw std::invalid_argument("make_ring: modulus reducible");

    RingParams rp;
    rp.n = n;
    rp.modulus = std::move(modulus);
    rp.xpow.reserve(size_t(n) - 1);
    gf2x::Poly cur = rp.modulus;
    gf2x::Poly top;
    gf2x::set_bit(top, n);
    for (size_t i = 0; i < top.size() && i < cur.size(); ++i) cur[i] ^= top[i];
    gf2x::trim(cur);  // X^n mod N
    for (int s = 0; s + 1 < n; ++s) {
        gf2x::Poly row = cur;
        row.resize(size_t(n + 63) / 64, 0);
        rp.xpow.push_back(row);
        // cur = X * cur mod N
        gf2x::Poly next;
        gf2x::xor_shifted(next, cur, 1);
        gf2x::trim(next);
        if (gf2x::get_bit(next, n)) {
            for (size_t i = 0; i < next.size() && i < rp.modulus.size(); ++i)
                next[i] ^= rp.modulus[i];
            gf2x::trim(next);
        }
        cur = std::move(next);
    }
    return rp;
}

}  // namespace

RingParams make_ring(int n) {
    static std::map<int, gf2x::Poly> cache;
    static std::mutex mtx;
    gf2x::Poly mod;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, gf2x::find_smallest_irreducible(n)).first;
        mod = it->second;
    }
    return build(n, std::move(mod));
}

RingParams make_ring(int n, std::vector<uint64_t> modulus) { return build(n, std::move(modulus)); }

RingElement ring_mul(const FieldParams& fp, const RingParams& rp, const RingElement& u,
                     const RingElement& v) {
    const int n = rp.n;
    if (int(u.size()) != n || int(v.size()) != n)
        throw std::invalid_argument("ring_mul: operand length");
    VectorExt acc(size_t(2 * n - 1));
    for (int i = 0; i < n; ++i) {
        if (u[size_t(i)].is_zero()) continue;
        for (int j = 0; j < n; ++j)
            acc[size_t(i + j)] ^= field_mul(fp, u[size_t(i)], v[size_t(j)]);
    }
    for (int s = 2 * n - 2; s >= n; --s) {
        FieldElement c = acc[size_t(s)];
        if (c.is_zero()) continue;
        const auto& row = rp.xpow[size_t(s - n)];
        for (size_t w = 0; w < row.size(); ++w) {
            uint64_t bits = row[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                acc[w * 64 + size_t(b)] ^= c;
            }
        }
    }
    acc.resize(size_t(n));
    return acc;
}

MatrixExt ideal_matrix(const FieldParams& fp, const RingParams& rp, const RingElement& v) {
    (void)fp;
    const int n = rp.n;
    if (int(v.size()) != n) throw std::invalid_argument("ideal_matrix: operand length");
    MatrixExt out(n, n);
    VectorExt row = v;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out.at(i, j) = row[size_t(j)];
        if (i + 1 == n) break;
        // row = X * row mod N; the overflow coefficient re-enters on the
        // low bits of the modulus
        FieldElement top = row[size_t(n - 1)];
        for (int j = n - 1; j > 0; --j) row[size_t(j)] = row[size_t(j - 1)];
        row[0] = FieldElement{};
        if (!top.is_zero())
            for (int b = 0; b < n; ++b)
                if ((rp.modulus[size_t(b) / 64] >> (b % 64)) & 1) row[size_t(b)] ^= top;
    }
    return out;
}

MatrixExt vec_ring_mat_mul(const FieldParams& fp, const RingParams& rp, const RingElement& z,
                           const MatrixExt& mat) {
    if (mat.rows != rp.n) throw std::invalid_argument("vec_ring_mat_mul: row count");
    MatrixExt out(mat.rows, mat.cols);
    RingElement col(size_t(rp.n));
    for (int j = 0; j < mat.cols; ++j) {
        for (int i = 0; i < mat.rows; ++i) col[size_t(i)] = mat.at(i, j);
        RingElement prod = ring_mul(fp, rp, z, col);
        for (int i = 0; i < mat.rows; ++i) out.at(i, j) = prod[size_t(i)];
    }
    return out;
}

MatrixExt fold(const VectorExt& v, int a) {
    if (a < 1 || v.size() % size_t(a) != 0) throw std::invalid_argument("fold: length");
    const int b = int(v.size()) / a;
    MatrixExt out(a, b);
    for (int j = 0; j < b; ++j)
        for (int i = 0; i < a; ++i) out.at(i, j) = v[size_t(j) * size_t(a) + size_t(i)];
    return out;
}

VectorExt unfold(const MatrixExt& mat) {
    VectorExt v(size_t(mat.rows) * size_t(mat.cols));
    for (int j = 0; j < mat.cols; ++j)
        for (int i = 0; i < mat.rows; ++i)
            v[size_t(j) * size_t(mat.rows) + size_t(i)] = mat.at(i, j);
    return v;
}

}  // namespace egk
