#include "egk/schemes.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>
#include <stdexcept>
#include <string>

#include "egk/hash.hpp"

namespace egk {

namespace {

struct RowSpec {
    SchemeKind s;
    int z, n1, k1, n2, k2, m, r, t1, t2, wx, wy, w1, w2, we, sec;
};

constexpr RowSpec kRows[] = {
    {SchemeKind::bwe, 0, 10, 3, 59, 5, 53, 21, 3, 53, 3, 3, 3, 3, 3, 128},
    {SchemeKind::bwe, 0, 10, 3, 83, 7, 79, 36, 3, 79, 4, 4, 4, 4, 4, 192},
    {SchemeKind::bwe, 0, 10, 3, 113, 3, 113, 55, 3, 113, 5, 5, 5, 5, 5, 256},
    {SchemeKind::multi_nh, 0, 6, 3, 86, 3, 85, 28, 3, 85, 4, 4, 3, 4, 0, 128},
    {SchemeKind::multi_nh, 0, 6, 3, 99, 3, 97, 45, 3, 97, 5, 5, 4, 5, 0, 192},
    {SchemeKind::multi_nh, 0, 11, 4, 116, 4, 116, 56, 4, 116, 5, 5, 5, 6, 0, 256},
    {SchemeKind::multi_ur, 3, 6, 3, 86, 3, 85, 22, 3, 85, 3, 3, 3, 4, 0, 128},
    {SchemeKind::multi_ur, 3, 6, 3, 92, 3, 91, 41, 3, 91, 4, 4, 4, 9, 0, 192},
    {SchemeKind::multi_ur, 3, 6, 4, 117, 4, 116, 56, 4, 116, 5, 5, 5, 6, 0, 256},
};
constexpr int kRowCount = int(sizeof(kRows) / sizeof(kRows[0]));

size_t stream_bytes(size_t bits) { return (bits + 7) / 8; }

int error_budget(const SchemeParams& p) {
    if (p.scheme == SchemeKind::bwe) return p.wx * p.w2 + p.wy * p.w1 + p.we;
    return (p.wx + p.wy) * p.w1 + p.w2;
}

[[noreturn]] void bad_params(const std::string& what) {
    throw std::invalid_argument("scheme parameters: " + what);
}

// ---------------------------------------------------------------------------
// bit streams

struct BitWriter {
    std::vector<uint8_t> bytes;
    size_t nbits = 0;

    void put_bit(bool b) {
        if (nbits % 8 == 0) bytes.push_back(0);
        if (b) bytes.back() |= uint8_t(1u << (nbits % 8));
        ++nbits;
    }
    void put_element(const FieldParams& fp, FieldElement a) {
        for (int b = 0; b < fp.m; ++b) put_bit(a.bit(unsigned(b)));
    }
    void put_vector(const FieldParams& fp, const VectorExt& v) {
        for (const FieldElement& a : v) put_element(fp, a);
    }
    void align() { nbits = bytes.size() * 8; }
};

[[noreturn]] void bad_format(size_t offset, const std::string& what) {
    throw std::runtime_error("malformed input at byte " + std::to_string(offset) + ": " + what);
}

struct BitReader {
    const uint8_t* data;
    size_t nbytes;
    size_t nbits = 0;

    BitReader(const uint8_t* d, size_t len) : data(d), nbytes(len) {}

    bool get_bit() {
        if (nbits >= nbytes * 8) bad_format(nbytes, "truncated stream");
        bool b = (data[nbits / 8] >> (nbits % 8)) & 1;
        ++nbits;
        return b;
    }
    FieldElement get_element(const FieldParams& fp) {
        FieldElement a{};
        for (int b = 0; b < fp.m; ++b)
            if (get_bit()) a.set_bit(unsigned(b));
        return a;
    }
    VectorExt get_vector(const FieldParams& fp, int n) {
        VectorExt v(static_cast<size_t>(n));
        for (FieldElement& a : v) a = get_element(fp);
        return v;
    }
    // consume zero padding up to the next byte boundary
    void align() {
        while (nbits % 8 != 0)
            if (get_bit()) bad_format(nbits / 8, "nonzero padding bit");
    }
    void finish() {
        align();
        if (nbits != nbytes * 8) bad_format(nbits / 8, "trailing bytes");
    }
};

// canonical encoding of a rank-weight-t vector: echelonized support basis,
// then the t x n coefficient bit matrix row by row
void put_weight_vector(BitWriter& w, const FieldParams& fp, const VectorExt& v, int t) {
    std::vector<FieldElement> sup = support_basis(v);
    if (int(sup.size()) != t) throw std::logic_error("weight-t vector has wrong rank");
    const int n = int(v.size());

    // solve sup * C = v column by column over GF(2)
    MatrixBase aug(fp.m, t + n);
    for (int l = 0; l < t; ++l)
        for (int b = 0; b < fp.m; ++b) aug.set(b, l, sup[size_t(l)].bit(unsigned(b)));
    for (int j = 0; j < n; ++j)
        for (int b = 0; b < fp.m; ++b) aug.set(b, t + j, v[size_t(j)].bit(unsigned(b)));
    for (int col = 0; col < t; ++col) {
        int piv = -1;
        for (int rr = col; rr < fp.m; ++rr)
            if (aug.get(rr, col)) {
                piv = rr;
                break;
            }
        assert(piv >= 0);
        if (piv != col)
            std::swap_ranges(aug.words.begin() + size_t(piv) * size_t(aug.wpr),
                             aug.words.begin() + size_t(piv + 1) * size_t(aug.wpr),
                             aug.words.begin() + size_t(col) * size_t(aug.wpr));
        for (int rr = 0; rr < fp.m; ++rr) {
            if (rr == col || !aug.get(rr, col)) continue;
            for (int word = 0; word < aug.wpr; ++word)
                aug.words[size_t(rr) * size_t(aug.wpr) + size_t(word)] ^=
                    aug.words[size_t(col) * size_t(aug.wpr) + size_t(word)];
        }
    }

    for (int l = 0; l < t; ++l) w.put_element(fp, sup[size_t(l)]);
    for (int l = 0; l < t; ++l)
        for (int j = 0; j < n; ++j) w.put_bit(aug.get(l, t + j));
}

VectorExt get_weight_vector(BitReader& r, const FieldParams& fp, int n, int t) {
    std::vector<FieldElement> sup(static_cast<size_t>(t));
    for (FieldElement& a : sup) a = r.get_element(fp);
    MatrixBase supbits(fp.m, t);
    for (int l = 0; l < t; ++l)
        for (int b = 0; b < fp.m; ++b) supbits.set(b, l, sup[size_t(l)].bit(unsigned(b)));
    if (mb_rank(supbits) != t) bad_format(r.nbits / 8, "dependent support basis");

    VectorExt v(static_cast<size_t>(n));
    for (int l = 0; l < t; ++l)
        for (int j = 0; j < n; ++j)
            if (r.get_bit()) v[size_t(j)] = v[size_t(j)] ^ sup[size_t(l)];
    return v;
}

// ---------------------------------------------------------------------------
// shared derivations

struct CodeContext {
    FieldParams fp;
    EGKCode code;
};

CodeContext make_context(const SchemeParams& p, const VectorExt& g1, const VectorExt& g2) {
    FieldParams fp(p.m);
    EGCode c1 = make_eg_code(fp, g1, p.k1, p.t1);
    EGCode c2 = make_eg_code(fp, g2, p.k2, p.t2);
    return {fp, make_egk_code(fp, std::move(c1), std::move(c2))};
}

struct BwePublicData {
    VectorExt g1, g2, h;
};

BwePublicData bwe_expand_public(const FieldParams& fp, const SchemeParams& p, const Seed& seed2) {
    Expander e(seed2, kDomainKeygenPublic);
    BwePublicData d;
    d.g1 = sample_generator(fp, e, p.n1, p.t1);
    d.g2 = sample_generator(fp, e, p.n2, p.t2);
    d.h = e.uniform_vector(fp, p.n);
    return d;
}

// the blockwise sampler fixes one joint support, so secrets regenerate as a
// pair even when only the second half is needed
std::pair<VectorExt, VectorExt> expand_secret_pair(const FieldParams& fp, const Seed& seed1,
                                                   int len, int wx, int wy) {
    Expander e(seed1, kDomainKeygenSecret);
    VectorExt both = sample_blockwise(fp, e, {len, len}, {wx, wy});
    VectorExt x(both.begin(), both.begin() + len);
    VectorExt y(both.begin() + len, both.end());
    return {std::move(x), std::move(y)};
}

MatrixExt unflatten(const VectorExt& v, int rows, int cols) {
    MatrixExt out(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) out.at(i, j) = v[size_t(j) * size_t(rows) + size_t(i)];
    return out;
}

std::pair<MatrixExt, MatrixExt> expand_secret_matrices(const FieldParams& fp, const Seed& seed1,
                                                       int rows, int cols, int wx, int wy) {
    auto [xf, yf] = expand_secret_pair(fp, seed1, rows * cols, wx, wy);
    return {unflatten(xf, rows, cols), unflatten(yf, rows, cols)};
}

void check_message(const SchemeParams& p, const VectorExt& msg) {
    if (int(msg.size()) != p.k) throw std::invalid_argument("message length mismatch");
}

// ---------------------------------------------------------------------------
// BWE

KeyPair bwe_keygen(const SchemeParams& p, const Seed& seed1, const Seed& seed2) {
    FieldParams fp(p.m);
    auto [x, y] = expand_secret_pair(fp, seed1, p.n, p.wx, p.wy);
    BwePublicData pub = bwe_expand_public(fp, p, seed2);
    RingParams rp = make_ring(p.n);
    VectorExt s = vec_add(std::move(x), ring_mul(fp, rp, pub.h, y));
    KeyPair kp;
    kp.pk = {p, BwePublicKey{seed2, std::move(s)}};
    kp.sk = {p, seed1};
    return kp;
}

BweCiphertext bwe_encrypt(const SchemeParams& p, const BwePublicKey& pk, const VectorExt& msg,
                          const Seed& theta) {
    FieldParams fp(p.m);
    BwePublicData pub = bwe_expand_public(fp, p, pk.seed2);
    CodeContext ctx = make_context(p, pub.g1, pub.g2);
    RingParams rp = make_ring(p.n);

    Expander e(theta, kDomainEncryption);
    VectorExt blocks = sample_blockwise(fp, e, {p.n, p.n, p.n}, {p.w1, p.we, p.w2});
    VectorExt r1(blocks.begin(), blocks.begin() + p.n);
    VectorExt err(blocks.begin() + p.n, blocks.begin() + 2 * p.n);
    VectorExt r2(blocks.begin() + 2 * p.n, blocks.end());

    BweCiphertext c;
    c.u = vec_add(std::move(r1), ring_mul(fp, rp, pub.h, r2));
    VectorExt mg = vec_mul_ext(fp, msg, egk_generator_matrix(ctx.code));
    c.v = vec_add(vec_add(std::move(mg), ring_mul(fp, rp, pk.s, r2)), err);
    return c;
}

DecodeOutcome bwe_decrypt(const SchemeParams& p, const SecretKey& sk, const BwePublicKey& pk,
                          const BweCiphertext& c) {
    FieldParams fp(p.m);
    auto [x, y] = expand_secret_pair(fp, sk.seed1, p.n, p.wx, p.wy);
    (void)x;
    BwePublicData pub = bwe_expand_public(fp, p, pk.seed2);
    CodeContext ctx = make_context(p, pub.g1, pub.g2);
    RingParams rp = make_ring(p.n);
    VectorExt noisy = vec_add(ring_mul(fp, rp, y, c.u), c.v);
    return egk_decode(fp, ctx.code, noisy);
}

// ---------------------------------------------------------------------------
// Multi-NH

KeyPair nh_keygen(const SchemeParams& p, const Seed& seed1, const Seed& seed2) {
    FieldParams fp(p.m);
    auto [x, y] = expand_secret_pair(fp, seed1, p.n2, p.wx, p.wy);
    Expander e(seed2, kDomainKeygenPublic);
    NhPublicKey pk;
    pk.g1 = sample_generator(fp, e, p.n1, p.t1);
    pk.g2 = sample_generator(fp, e, p.n2, p.t2);
    pk.h = e.uniform_vector(fp, p.n2);
    RingParams rp = make_ring(p.n2);
    pk.s = vec_add(std::move(x), ring_mul(fp, rp, pk.h, y));
    KeyPair kp;
    kp.pk = {p, std::move(pk)};
    kp.sk = {p, seed1};
    return kp;
}

NhCiphertext nh_encrypt(const SchemeParams& p, const NhPublicKey& pk, const VectorExt& msg,
                        const Seed& theta) {
    FieldParams fp(p.m);
    CodeContext ctx = make_context(p, pk.g1, pk.g2);
    RingParams rp = make_ring(p.n2);

    Expander e(theta, kDomainEncryption);
    auto [r1, err, r2] = sample_nh(fp, e, p.n2, p.n1, p.n1, p.n1, p.w1, p.w2);

    NhCiphertext c;
    c.u = me_add(std::move(r1), vec_ring_mat_mul(fp, rp, pk.h, r2));
    MatrixExt mg = fold(vec_mul_ext(fp, msg, egk_generator_matrix(ctx.code)), p.n2);
    c.v = me_add(me_add(std::move(mg), vec_ring_mat_mul(fp, rp, pk.s, r2)), err);
    return c;
}

DecodeOutcome nh_decrypt(const SchemeParams& p, const SecretKey& sk, const NhPublicKey& pk,
                         const NhCiphertext& c) {
    FieldParams fp(p.m);
    auto [x, y] = expand_secret_pair(fp, sk.seed1, p.n2, p.wx, p.wy);
    (void)x;
    CodeContext ctx = make_context(p, pk.g1, pk.g2);
    RingParams rp = make_ring(p.n2);
    VectorExt noisy = unfold(me_add(vec_ring_mat_mul(fp, rp, y, c.u), c.v));
    return egk_decode(fp, ctx.code, noisy);
}

// ---------------------------------------------------------------------------
// Multi-UR

KeyPair ur_keygen(const SchemeParams& p, const Seed& seed1, const Seed& seed2) {
    FieldParams fp(p.m);
    auto [x, y] = expand_secret_matrices(fp, seed1, p.z, p.n1, p.wx, p.wy);
    Expander e(seed2, kDomainKeygenPublic);
    UrPublicKey pk;
    pk.g1 = sample_generator(fp, e, p.n1, p.t1);
    pk.g2 = sample_generator(fp, e, p.n2, p.t2);
    pk.h = unflatten(e.uniform_vector(fp, p.z * p.z), p.z, p.z);
    pk.s = me_add(std::move(x), me_mul(fp, pk.h, y));
    KeyPair kp;
    kp.pk = {p, std::move(pk)};
    kp.sk = {p, seed1};
    return kp;
}

UrCiphertext ur_encrypt(const SchemeParams& p, const UrPublicKey& pk, const VectorExt& msg,
                        const Seed& theta) {
    FieldParams fp(p.m);
    CodeContext ctx = make_context(p, pk.g1, pk.g2);

    Expander e(theta, kDomainEncryption);
    auto [r1, err, r2] = sample_nh(fp, e, p.n2, p.z, p.n1, p.z, p.w1, p.w2);

    UrCiphertext c;
    c.u = me_add(std::move(r1), me_mul(fp, r2, pk.h));
    MatrixExt mg = fold(vec_mul_ext(fp, msg, egk_generator_matrix(ctx.code)), p.n2);
    c.v = me_add(me_add(std::move(mg), me_mul(fp, r2, pk.s)), err);
    return c;
}

DecodeOutcome ur_decrypt(const SchemeParams& p, const SecretKey& sk, const UrPublicKey& pk,
                         const UrCiphertext& c) {
    FieldParams fp(p.m);
    auto [x, y] = expand_secret_matrices(fp, sk.seed1, p.z, p.n1, p.wx, p.wy);
    (void)x;
    CodeContext ctx = make_context(p, pk.g1, pk.g2);
    VectorExt noisy = unfold(me_add(me_mul(fp, c.u, y), c.v));
    return egk_decode(fp, ctx.code, noisy);
}

// ---------------------------------------------------------------------------
// KEM hashing

constexpr uint8_t kTagTheta = 0x47;
constexpr uint8_t kTagCommit = 0x48;
constexpr uint8_t kTagKey = 0x4B;

std::array<uint8_t, 64> tagged_hash(uint8_t tag, const std::vector<uint8_t>& a,
                                    const std::vector<uint8_t>& b = {}) {
    std::vector<uint8_t> buf;
    buf.reserve(1 + a.size() + b.size());
    buf.push_back(tag);
    buf.insert(buf.end(), a.begin(), a.end());
    buf.insert(buf.end(), b.begin(), b.end());
    return sha512(buf.data(), buf.size());
}

std::vector<uint8_t> ct_payload(const SchemeParams& p, const Ciphertext& c) {
    std::vector<uint8_t> bytes = serialize_ct(p, c);
    return std::vector<uint8_t>(bytes.begin() + 8, bytes.end());
}

// ---------------------------------------------------------------------------
// headers

constexpr size_t kHeaderLen = 8;
constexpr char kMagic[6] = {'R', 'Q', 'C', 'E', 'G', 'K'};

void put_header(std::vector<uint8_t>& out, const SchemeParams& p) {
    out.insert(out.end(), kMagic, kMagic + 6);
    out.push_back(uint8_t(p.scheme));
    out.push_back(uint8_t(p.row_id));
}

// validates the header and resolves the row; `expect` pins scheme and row
SchemeParams read_header(const std::vector<uint8_t>& bytes, const SchemeParams* expect) {
    if (bytes.size() < kHeaderLen) bad_format(bytes.size(), "missing header");
    if (std::memcmp(bytes.data(), kMagic, 6) != 0) bad_format(0, "bad magic");
    uint8_t scheme = bytes[6], row = bytes[7];
    if (scheme < 1 || scheme > 3) bad_format(6, "unknown scheme id");
    if (expect) {
        if (scheme != uint8_t(expect->scheme)) bad_format(6, "scheme id mismatch");
        if (row != uint8_t(expect->row_id)) bad_format(7, "row id mismatch");
        return *expect;
    }
    if (row < 1 || row > kRowCount)
        bad_format(7, "unknown row id (custom rows need explicit parameters)");
    SchemeParams p = params_for_row(row);
    if (scheme != uint8_t(p.scheme)) bad_format(6, "scheme id mismatch");
    return p;
}

PublicKey parse_pk(const SchemeParams& p, const std::vector<uint8_t>& bytes) {
    if (bytes.size() != kHeaderLen + pk_bytes(p)) bad_format(bytes.size(), "bad key length");
    FieldParams fp(p.m);
    PublicKey pk;
    pk.params = p;
    switch (p.scheme) {
        case SchemeKind::bwe: {
            BwePublicKey b;
            std::copy(bytes.begin() + kHeaderLen, bytes.begin() + kHeaderLen + 40,
                      b.seed2.begin());
            BitReader r(bytes.data() + kHeaderLen + 40, bytes.size() - kHeaderLen - 40);
            b.s = r.get_vector(fp, p.n);
            r.finish();
            pk.key = std::move(b);
            break;
        }
        case SchemeKind::multi_nh: {
            BitReader r(bytes.data() + kHeaderLen, bytes.size() - kHeaderLen);
            NhPublicKey b;
            b.g1 = get_weight_vector(r, fp, p.n1, p.t1);
            b.g2 = get_weight_vector(r, fp, p.n2, p.t2);
            b.h = r.get_vector(fp, p.n2);
            b.s = r.get_vector(fp, p.n2);
            r.finish();
            pk.key = std::move(b);
            break;
        }
        case SchemeKind::multi_ur: {
            BitReader r(bytes.data() + kHeaderLen, bytes.size() - kHeaderLen);
            UrPublicKey b;
            b.g1 = get_weight_vector(r, fp, p.n1, p.t1);
            b.g2 = get_weight_vector(r, fp, p.n2, p.t2);
            b.h = unflatten(r.get_vector(fp, p.z * p.z), p.z, p.z);
            b.s = unflatten(r.get_vector(fp, p.z * p.n1), p.z, p.n1);
            r.finish();
            pk.key = std::move(b);
            break;
        }
    }
    return pk;
}

void put_matrix(BitWriter& w, const FieldParams& fp, const MatrixExt& a) {
    for (int j = 0; j < a.cols; ++j)
        for (int i = 0; i < a.rows; ++i) w.put_element(fp, a.at(i, j));
}

MatrixExt get_matrix(BitReader& r, const FieldParams& fp, int rows, int cols) {
    return unflatten(r.get_vector(fp, rows * cols), rows, cols);
}

}  // namespace

// ---------------------------------------------------------------------------
// parameters

SchemeParams params_for_row(int id) {
    if (id < 1 || id > kRowCount) throw std::invalid_argument("unknown parameter row");
    const RowSpec& r = kRows[id - 1];
    SchemeParams p;
    p.scheme = r.s;
    p.row_id = id;
    p.z = r.z;
    p.n1 = r.n1;
    p.k1 = r.k1;
    p.n2 = r.n2;
    p.k2 = r.k2;
    p.m = r.m;
    p.n = r.n1 * r.n2;
    p.k = r.k1 * r.k2;
    p.r = r.r;
    p.t1 = r.t1;
    p.t2 = r.t2;
    p.wx = r.wx;
    p.wy = r.wy;
    p.w1 = r.w1;
    p.w2 = r.w2;
    p.we = r.we;
    p.security_level = r.sec;
    validate_params(p);
    return p;
}

const std::vector<int>& registry_rows() {
    static const std::vector<int> rows = [] {
        std::vector<int> v;
        for (int i = 1; i <= kRowCount; ++i) v.push_back(i);
        return v;
    }();
    return rows;
}

int scheme_radius(const SchemeParams& p) {
    if (p.k1 == p.t1 && p.t2 == p.m) return (p.t2 - p.k2) / 2;
    if (p.t1 * p.t2 <= p.m) return ((p.t1 - p.k1 + 1) * (p.t2 - p.k2 + 1) - 1) / 2;
    throw std::domain_error("no decoding guarantee for this code shape");
}

void validate_params(const SchemeParams& p) {
    if (p.m < 1 || p.m > 128) bad_params("m out of range");
    if (p.n1 < 1 || p.n2 < 1 || p.k1 < 1 || p.k2 < 1) bad_params("dimensions must be positive");
    if (p.n != p.n1 * p.n2) bad_params("n != n1 * n2");
    if (p.k != p.k1 * p.k2) bad_params("k != k1 * k2");
    if (p.k1 > p.t1 || p.t1 > std::min(p.n1, p.m)) bad_params("t1 out of range");
    if (p.k2 > p.t2 || p.t2 > std::min(p.n2, p.m)) bad_params("t2 out of range");
    if (p.wx < 0 || p.wy < 0 || p.w1 < 0 || p.w2 < 0 || p.we < 0) bad_params("negative weight");
    int radius;
    try {
        radius = scheme_radius(p);
    } catch (const std::domain_error&) {
        bad_params("code shape has no decoding guarantee");
    }
    if (p.r != error_budget(p)) bad_params("r does not match the error-weight budget");
    if (p.r > radius) bad_params("error budget exceeds the decoding radius");
    switch (p.scheme) {
        case SchemeKind::bwe:
            if (p.wx + p.wy > p.m) bad_params("key support exceeds m");
            if (p.w1 + p.we + p.w2 > p.m) bad_params("encryption support exceeds m");
            break;
        case SchemeKind::multi_nh:
        case SchemeKind::multi_ur:
            if (p.wx + p.wy > p.m) bad_params("key support exceeds m");
            if (p.w1 > p.w2) bad_params("w1 exceeds w2");
            if (p.w2 > p.m) bad_params("w2 exceeds m");
            if (p.scheme == SchemeKind::multi_ur && p.z < 1) bad_params("z must be positive");
            break;
    }
}

size_t pk_bytes(const SchemeParams& p) {
    size_t m = size_t(p.m);
    switch (p.scheme) {
        case SchemeKind::bwe:
            return 40 + stream_bytes(m * size_t(p.n));
        case SchemeKind::multi_nh:
            return stream_bytes(m * size_t(p.t1 + p.t2 + 2 * p.n2) + size_t(p.t1) * size_t(p.n1) +
                                size_t(p.t2) * size_t(p.n2));
        case SchemeKind::multi_ur:
            return stream_bytes(m * size_t(p.t1 + p.t2 + p.z * p.z + p.z * p.n1) +
                                size_t(p.t1) * size_t(p.n1) + size_t(p.t2) * size_t(p.n2));
    }
    throw std::logic_error("unreachable");
}

size_t ct_bytes(const SchemeParams& p) {
    size_t m = size_t(p.m);
    switch (p.scheme) {
        case SchemeKind::bwe:
        case SchemeKind::multi_nh:
            return 2 * stream_bytes(m * size_t(p.n));
        case SchemeKind::multi_ur:
            return stream_bytes(m * size_t(p.n2) * size_t(p.z + p.n1));
    }
    throw std::logic_error("unreachable");
}

size_t sk_bytes(const SchemeParams&) { return 40; }

// ---------------------------------------------------------------------------
// unified operations

KeyPair keygen(const SchemeParams& p, const Seed& seed1, const Seed& seed2) {
    validate_params(p);
    switch (p.scheme) {
        case SchemeKind::bwe:
            return bwe_keygen(p, seed1, seed2);
        case SchemeKind::multi_nh:
            return nh_keygen(p, seed1, seed2);
        case SchemeKind::multi_ur:
            return ur_keygen(p, seed1, seed2);
    }
    throw std::logic_error("unreachable");
}

Ciphertext encrypt(const SchemeParams& p, const PublicKey& pk, const VectorExt& msg,
                   const Seed& theta) {
    check_message(p, msg);
    Ciphertext c;
    switch (p.scheme) {
        case SchemeKind::bwe:
            c.ct = bwe_encrypt(p, std::get<BwePublicKey>(pk.key), msg, theta);
            break;
        case SchemeKind::multi_nh:
            c.ct = nh_encrypt(p, std::get<NhPublicKey>(pk.key), msg, theta);
            break;
        case SchemeKind::multi_ur:
            c.ct = ur_encrypt(p, std::get<UrPublicKey>(pk.key), msg, theta);
            break;
    }
    return c;
}

DecodeOutcome decrypt(const SchemeParams& p, const SecretKey& sk, const PublicKey& pk,
                      const Ciphertext& c) {
    switch (p.scheme) {
        case SchemeKind::bwe:
            return bwe_decrypt(p, sk, std::get<BwePublicKey>(pk.key),
                               std::get<BweCiphertext>(c.ct));
        case SchemeKind::multi_nh:
            return nh_decrypt(p, sk, std::get<NhPublicKey>(pk.key), std::get<NhCiphertext>(c.ct));
        case SchemeKind::multi_ur:
            return ur_decrypt(p, sk, std::get<UrPublicKey>(pk.key), std::get<UrCiphertext>(c.ct));
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// KEM

std::vector<uint8_t> pack_message(const SchemeParams& p, const VectorExt& msg) {
    check_message(p, msg);
    FieldParams fp(p.m);
    BitWriter w;
    w.put_vector(fp, msg);
    return std::move(w.bytes);
}

KemOutput kem_encapsulate(const SchemeParams& p, const PublicKey& pk, const Seed& seed) {
    if (size_t(p.k) * size_t(p.m) < 256) throw std::domain_error("plaintext space too small");
    FieldParams fp(p.m);
    Expander e(seed, kDomainKemMessage);
    VectorExt msg = e.uniform_vector(fp, p.k);
    std::vector<uint8_t> mb = pack_message(p, msg);

    std::array<uint8_t, 64> g = tagged_hash(kTagTheta, mb);
    Seed theta{};
    std::copy(g.begin(), g.begin() + 40, theta.begin());

    KemOutput out;
    out.c = encrypt(p, pk, msg, theta);
    out.d = tagged_hash(kTagCommit, mb);
    out.key = tagged_hash(kTagKey, mb, ct_payload(p, out.c));
    return out;
}

std::optional<std::array<uint8_t, 64>> kem_decapsulate(const SchemeParams& p, const SecretKey& sk,
                                                       const PublicKey& pk, const Ciphertext& c,
                                                       const std::array<uint8_t, 64>& d) {
    DecodeOutcome out = decrypt(p, sk, pk, c);
    if (!out.ok) return std::nullopt;
    std::vector<uint8_t> mb = pack_message(p, out.message);

    std::array<uint8_t, 64> g = tagged_hash(kTagTheta, mb);
    Seed theta{};
    std::copy(g.begin(), g.begin() + 40, theta.begin());

    std::vector<uint8_t> received = ct_payload(p, c);
    Ciphertext redo = encrypt(p, pk, out.message, theta);
    if (ct_payload(p, redo) != received) return std::nullopt;
    if (tagged_hash(kTagCommit, mb) != d) return std::nullopt;
    return tagged_hash(kTagKey, mb, received);
}

// ---------------------------------------------------------------------------
// serialization

std::vector<uint8_t> serialize_pk(const PublicKey& pk) {
    const SchemeParams& p = pk.params;
    FieldParams fp(p.m);
    std::vector<uint8_t> out;
    put_header(out, p);
    switch (p.scheme) {
        case SchemeKind::bwe: {
            const auto& b = std::get<BwePublicKey>(pk.key);
            out.insert(out.end(), b.seed2.begin(), b.seed2.end());
            BitWriter w;
            w.put_vector(fp, b.s);
            out.insert(out.end(), w.bytes.begin(), w.bytes.end());
            break;
        }
        case SchemeKind::multi_nh: {
            const auto& b = std::get<NhPublicKey>(pk.key);
            BitWriter w;
            put_weight_vector(w, fp, b.g1, p.t1);
            put_weight_vector(w, fp, b.g2, p.t2);
            w.put_vector(fp, b.h);
            w.put_vector(fp, b.s);
            out.insert(out.end(), w.bytes.begin(), w.bytes.end());
            break;
        }
        case SchemeKind::multi_ur: {
            const auto& b = std::get<UrPublicKey>(pk.key);
            BitWriter w;
            put_weight_vector(w, fp, b.g1, p.t1);
            put_weight_vector(w, fp, b.g2, p.t2);
            put_matrix(w, fp, b.h);
            put_matrix(w, fp, b.s);
            out.insert(out.end(), w.bytes.begin(), w.bytes.end());
            break;
        }
    }
    assert(out.size() == kHeaderLen + pk_bytes(p));
    return out;
}

std::vector<uint8_t> serialize_ct(const SchemeParams& p, const Ciphertext& c) {
    FieldParams fp(p.m);
    std::vector<uint8_t> out;
    put_header(out, p);
    BitWriter w;
    switch (p.scheme) {
        case SchemeKind::bwe: {
            const auto& b = std::get<BweCiphertext>(c.ct);
            w.put_vector(fp, b.u);
            w.align();
            w.put_vector(fp, b.v);
            break;
        }
        case SchemeKind::multi_nh: {
            const auto& b = std::get<NhCiphertext>(c.ct);
            put_matrix(w, fp, b.u);
            w.align();
            put_matrix(w, fp, b.v);
            break;
        }
        case SchemeKind::multi_ur: {
            const auto& b = std::get<UrCiphertext>(c.ct);
            put_matrix(w, fp, b.u);
            put_matrix(w, fp, b.v);
            break;
        }
    }
    out.insert(out.end(), w.bytes.begin(), w.bytes.end());
    assert(out.size() == kHeaderLen + ct_bytes(p));
    return out;
}

std::vector<uint8_t> serialize_sk(const SecretKey& sk) {
    std::vector<uint8_t> out;
    put_header(out, sk.params);
    out.insert(out.end(), sk.seed1.begin(), sk.seed1.end());
    assert(out.size() == kHeaderLen + sk_bytes(sk.params));
    return out;
}

PublicKey deserialize_pk(const std::vector<uint8_t>& bytes) {
    return parse_pk(read_header(bytes, nullptr), bytes);
}

PublicKey deserialize_pk(const std::vector<uint8_t>& bytes, const SchemeParams& p) {
    return parse_pk(read_header(bytes, &p), bytes);
}

Ciphertext deserialize_ct(const SchemeParams& p, const std::vector<uint8_t>& bytes) {
    read_header(bytes, &p);
    if (bytes.size() != kHeaderLen + ct_bytes(p)) bad_format(bytes.size(), "bad ciphertext length");
    FieldParams fp(p.m);
    BitReader r(bytes.data() + kHeaderLen, bytes.size() - kHeaderLen);
    Ciphertext c;
    switch (p.scheme) {
        case SchemeKind::bwe: {
            BweCiphertext b;
            b.u = r.get_vector(fp, p.n);
            r.align();
            b.v = r.get_vector(fp, p.n);
            r.finish();
            c.ct = std::move(b);
            break;
        }
        case SchemeKind::multi_nh: {
            NhCiphertext b;
            b.u = get_matrix(r, fp, p.n2, p.n1);
            r.align();
            b.v = get_matrix(r, fp, p.n2, p.n1);
            r.finish();
            c.ct = std::move(b);
            break;
        }
        case SchemeKind::multi_ur: {
            UrCiphertext b;
            b.u = get_matrix(r, fp, p.n2, p.z);
            b.v = get_matrix(r, fp, p.n2, p.n1);
            r.finish();
            c.ct = std::move(b);
            break;
        }
    }
    return c;
}

SecretKey deserialize_sk(const std::vector<uint8_t>& bytes) {
    SchemeParams p = read_header(bytes, nullptr);
    if (bytes.size() != kHeaderLen + sk_bytes(p)) bad_format(bytes.size(), "bad key length");
    SecretKey sk;
    sk.params = p;
    std::copy(bytes.begin() + kHeaderLen, bytes.end(), sk.seed1.begin());
    return sk;
}

SecretKey deserialize_sk(const std::vector<uint8_t>& bytes, const SchemeParams& p) {
    read_header(bytes, &p);
    if (bytes.size() != kHeaderLen + sk_bytes(p)) bad_format(bytes.size(), "bad key length");
    SecretKey sk;
    sk.params = p;
    std::copy(bytes.begin() + kHeaderLen, bytes.end(), sk.seed1.begin());
    return sk;
}

}  // namespace egk
