#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "egk/schemes.hpp"

using namespace egk;

namespace {

Seed make_seed(uint8_t base) {
    Seed s{};
    for (size_t i = 0; i < s.size(); ++i) s[i] = uint8_t(base + i);
    return s;
}

Seed seed_from(uint64_t counter, uint8_t tag) {
    Seed s{};
    for (int i = 0; i < 8; ++i) s[size_t(i)] = uint8_t(counter >> (8 * i));
    s[39] = tag;
    return s;
}

VectorExt random_message(const SchemeParams& p, uint64_t counter) {
    FieldParams fp(p.m);
    Expander e(seed_from(counter, 0x7f), kDomainKemMessage);
    return e.uniform_vector(fp, p.k);
}

std::string to_hex(const std::vector<uint8_t>& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

// reconstructs the decoder input error term of a BWE trial from the seeds
VectorExt bwe_error_term(const SchemeParams& p, const Seed& seed1, const Seed& seed2,
                         const Seed& theta) {
    FieldParams fp(p.m);
    Expander es(seed1, kDomainKeygenSecret);
    VectorExt xy = sample_blockwise(fp, es, {p.n, p.n}, {p.wx, p.wy});
    VectorExt x(xy.begin(), xy.begin() + p.n);
    VectorExt y(xy.begin() + p.n, xy.end());

    Expander ee(theta, kDomainEncryption);
    VectorExt blk = sample_blockwise(fp, ee, {p.n, p.n, p.n}, {p.w1, p.we, p.w2});
    VectorExt r1(blk.begin(), blk.begin() + p.n);
    VectorExt ev(blk.begin() + p.n, blk.begin() + 2 * p.n);
    VectorExt r2(blk.begin() + 2 * p.n, blk.end());

    RingParams rp = make_ring(p.n);
    (void)seed2;
    VectorExt term = vec_add(ring_mul(fp, rp, x, r2), ring_mul(fp, rp, y, r1));
    return vec_add(std::move(term), ev);
}

const std::map<int, std::pair<size_t, size_t>> kPublishedSizes = {
    {1, {3949, 7818}},  {2, {8237, 16394}}, {3, {16002, 31924}},
    {4, {3679, 10966}}, {5, {4816, 14406}}, {6, {6792, 37004}},
    {7, {2138, 8224}},  {8, {2426, 9419}},  {9, {3831, 15269}},
};

const std::map<int, int> kExpectedRadius = {
    {1, 24}, {2, 36}, {3, 55}, {4, 41}, {5, 47}, {6, 56}, {7, 41}, {8, 44}, {9, 56},
};

}  // namespace

TEST_CASE("registry rows validate and match the published sizes") {
    REQUIRE(registry_rows().size() == 9);
    for (int id : registry_rows()) {
        CAPTURE(id);
        SchemeParams p = params_for_row(id);
        CHECK(p.row_id == id);
        CHECK(p.n == p.n1 * p.n2);
        CHECK(p.k == p.k1 * p.k2);
        CHECK(pk_bytes(p) == kPublishedSizes.at(id).first);
        CHECK(ct_bytes(p) == kPublishedSizes.at(id).second);
        CHECK(sk_bytes(p) == 40);
        CHECK(scheme_radius(p) == kExpectedRadius.at(id));
        CHECK(p.r <= scheme_radius(p));
    }
    CHECK_THROWS_AS(params_for_row(0), std::invalid_argument);
    CHECK_THROWS_AS(params_for_row(10), std::invalid_argument);
}

TEST_CASE("parameter validation rejects broken rows") {
    SchemeParams p = params_for_row(1);
    SchemeParams q = p;
    q.n = p.n + 1;
    CHECK_THROWS_AS(validate_params(q), std::invalid_argument);
    q = p;
    q.r = p.r + 1;
    CHECK_THROWS_AS(validate_params(q), std::invalid_argument);
    q = p;
    q.t2 = p.m - 1;  // drops the decoding guarantee entirely
    CHECK_THROWS_AS(validate_params(q), std::invalid_argument);
    q = p;
    q.wx = p.m;
    CHECK_THROWS_AS(validate_params(q), std::invalid_argument);
    q = params_for_row(4);
    q.w1 = q.w2 + 1;
    CHECK_THROWS_AS(validate_params(q), std::invalid_argument);
}

TEST_CASE("BWE round trip recovers the message and respects the budget") {
    SchemeParams p = params_for_row(1);
    FieldParams fp(p.m);
    for (uint64_t trial = 0; trial < 8; ++trial) {
        CAPTURE(trial);
        Seed seed1 = seed_from(trial, 0x01);
        Seed seed2 = seed_from(trial, 0x02);
        Seed theta = seed_from(trial, 0x03);
        KeyPair kp = keygen(p, seed1, seed2);
        VectorExt msg = random_message(p, trial);
        Ciphertext c = encrypt(p, kp.pk, msg, theta);
        DecodeOutcome out = decrypt(p, kp.sk, kp.pk, c);
        REQUIRE(out.ok);
        CHECK(out.message == msg);

        VectorExt err = bwe_error_term(p, seed1, seed2, theta);
        CHECK(rank_weight(err) <= p.r);

        // v - y.u must equal mG + err
        const auto& ct = std::get<BweCiphertext>(c.ct);
        Expander es(seed1, kDomainKeygenSecret);
        VectorExt xy = sample_blockwise(fp, es, {p.n, p.n}, {p.wx, p.wy});
        VectorExt y(xy.begin() + p.n, xy.end());
        RingParams rp = make_ring(p.n);
        VectorExt noisy = vec_add(ring_mul(fp, rp, y, ct.u), ct.v);

        Expander ep(seed2, kDomainKeygenPublic);
        VectorExt g1 = sample_generator(fp, ep, p.n1, p.t1);
        VectorExt g2 = sample_generator(fp, ep, p.n2, p.t2);
        EGKCode code = make_egk_code(fp, make_eg_code(fp, g1, p.k1, p.t1),
                                     make_eg_code(fp, g2, p.k2, p.t2));
        VectorExt mg = vec_mul_ext(fp, msg, egk_generator_matrix(code));
        CHECK(vec_add(noisy, mg) == err);
    }
}

TEST_CASE("Multi-NH round trip recovers the message and respects the budget") {
    SchemeParams p = params_for_row(4);
    FieldParams fp(p.m);
    for (uint64_t trial = 0; trial < 8; ++trial) {
        CAPTURE(trial);
        Seed seed1 = seed_from(trial, 0x11);
        Seed seed2 = seed_from(trial, 0x12);
        Seed theta = seed_from(trial, 0x13);
        KeyPair kp = keygen(p, seed1, seed2);
        VectorExt msg = random_message(p, trial + 100);
        Ciphertext c = encrypt(p, kp.pk, msg, theta);
        DecodeOutcome out = decrypt(p, kp.sk, kp.pk, c);
        REQUIRE(out.ok);
        CHECK(out.message == msg);

        // decoder input = mG + (x.R2 - y.R1 + E), weight within budget
        const auto& pk = std::get<NhPublicKey>(kp.pk.key);
        const auto& ct = std::get<NhCiphertext>(c.ct);
        Expander es(seed1, kDomainKeygenSecret);
        VectorExt xy = sample_blockwise(fp, es, {p.n2, p.n2}, {p.wx, p.wy});
        VectorExt y(xy.begin() + p.n2, xy.end());
        RingParams rp = make_ring(p.n2);
        VectorExt noisy = unfold(me_add(vec_ring_mat_mul(fp, rp, y, ct.u), ct.v));

        EGKCode code = make_egk_code(fp, make_eg_code(fp, pk.g1, p.k1, p.t1),
                                     make_eg_code(fp, pk.g2, p.k2, p.t2));
        VectorExt mg = vec_mul_ext(fp, msg, egk_generator_matrix(code));
        VectorExt err = vec_add(noisy, mg);
        CHECK(rank_weight(err) <= p.r);
    }
}

TEST_CASE("Multi-UR round trip recovers the message and respects the budget") {
    SchemeParams p = params_for_row(7);
    FieldParams fp(p.m);
    for (uint64_t trial = 0; trial < 8; ++trial) {
        CAPTURE(trial);
        Seed seed1 = seed_from(trial, 0x21);
        Seed seed2 = seed_from(trial, 0x22);
        Seed theta = seed_from(trial, 0x23);
        KeyPair kp = keygen(p, seed1, seed2);
        VectorExt msg = random_message(p, trial + 200);
        Ciphertext c = encrypt(p, kp.pk, msg, theta);
        DecodeOutcome out = decrypt(p, kp.sk, kp.pk, c);
        REQUIRE(out.ok);
        CHECK(out.message == msg);

        const auto& pk = std::get<UrPublicKey>(kp.pk.key);
        const auto& ct = std::get<UrCiphertext>(c.ct);
        Expander es(seed1, kDomainKeygenSecret);
        VectorExt xy = sample_blockwise(fp, es, {p.z * p.n1, p.z * p.n1}, {p.wx, p.wy});
        VectorExt yf(xy.begin() + p.z * p.n1, xy.end());
        MatrixExt y(p.z, p.n1);
        for (int j = 0; j < p.n1; ++j)
            for (int i = 0; i < p.z; ++i) y.at(i, j) = yf[size_t(j) * size_t(p.z) + size_t(i)];
        VectorExt noisy = unfold(me_add(me_mul(fp, ct.u, y), ct.v));

        EGKCode code = make_egk_code(fp, make_eg_code(fp, pk.g1, p.k1, p.t1),
                                     make_eg_code(fp, pk.g2, p.k2, p.t2));
        VectorExt mg = vec_mul_ext(fp, msg, egk_generator_matrix(code));
        VectorExt err = vec_add(noisy, mg);
        CHECK(rank_weight(err) <= p.r);
    }
}

TEST_CASE("every registry row round-trips at least once") {
    for (int id : registry_rows()) {
        CAPTURE(id);
        SchemeParams p = params_for_row(id);
        KeyPair kp = keygen(p, seed_from(uint64_t(id), 0x31), seed_from(uint64_t(id), 0x32));
        VectorExt msg = random_message(p, uint64_t(id) + 300);
        Ciphertext c = encrypt(p, kp.pk, msg, seed_from(uint64_t(id), 0x33));
        DecodeOutcome out = decrypt(p, kp.sk, kp.pk, c);
        REQUIRE(out.ok);
        CHECK(out.message == msg);
    }
}

TEST_CASE("keygen and encrypt are deterministic in the seeds") {
    SchemeParams p = params_for_row(4);
    Seed s1 = make_seed(0x00), s2 = make_seed(0x40), th = make_seed(0x60);
    KeyPair a = keygen(p, s1, s2);
    KeyPair b = keygen(p, s1, s2);
    CHECK(serialize_pk(a.pk) == serialize_pk(b.pk));
    VectorExt msg = random_message(p, 42);
    CHECK(serialize_ct(p, encrypt(p, a.pk, msg, th)) == serialize_ct(p, encrypt(p, b.pk, msg, th)));
}

TEST_CASE("KEM encapsulation and decapsulation agree on honest runs") {
    for (int id : {1, 4, 7}) {
        CAPTURE(id);
        SchemeParams p = params_for_row(id);
        KeyPair kp = keygen(p, seed_from(uint64_t(id), 0x41), seed_from(uint64_t(id), 0x42));
        for (uint64_t trial = 0; trial < 4; ++trial) {
            KemOutput enc = kem_encapsulate(p, kp.pk, seed_from(trial, uint8_t(0x50 + id)));
            auto dec = kem_decapsulate(p, kp.sk, kp.pk, enc.c, enc.d);
            REQUIRE(dec.has_value());
            CHECK(*dec == enc.key);
        }
    }
}

TEST_CASE("KEM rejects tampered ciphertexts and commitments") {
    SchemeParams p = params_for_row(1);
    KeyPair kp = keygen(p, make_seed(0x05), make_seed(0x45));
    KemOutput enc = kem_encapsulate(p, kp.pk, make_seed(0x85));

    std::vector<uint8_t> wire = serialize_ct(p, enc.c);
    for (size_t pos : {size_t(8), wire.size() / 2, wire.size() - 1}) {
        std::vector<uint8_t> bad = wire;
        bad[pos] ^= 0x01;
        Ciphertext forged = deserialize_ct(p, bad);
        CHECK_FALSE(kem_decapsulate(p, kp.sk, kp.pk, forged, enc.d).has_value());
    }

    std::array<uint8_t, 64> bad_d = enc.d;
    bad_d[0] ^= 0x80;
    CHECK_FALSE(kem_decapsulate(p, kp.sk, kp.pk, enc.c, bad_d).has_value());
}

TEST_CASE("serialization round-trips bytes and values") {
    for (int id : {1, 4, 7}) {
        CAPTURE(id);
        SchemeParams p = params_for_row(id);
        KeyPair kp = keygen(p, seed_from(uint64_t(id), 0x61), seed_from(uint64_t(id), 0x62));
        VectorExt msg = random_message(p, uint64_t(id) + 400);
        Ciphertext c = encrypt(p, kp.pk, msg, seed_from(uint64_t(id), 0x63));

        std::vector<uint8_t> pkb = serialize_pk(kp.pk);
        std::vector<uint8_t> skb = serialize_sk(kp.sk);
        std::vector<uint8_t> ctb = serialize_ct(p, c);
        CHECK(pkb.size() == 8 + pk_bytes(p));
        CHECK(skb.size() == 8 + sk_bytes(p));
        CHECK(ctb.size() == 8 + ct_bytes(p));

        PublicKey pk2 = deserialize_pk(pkb);
        SecretKey sk2 = deserialize_sk(skb);
        Ciphertext c2 = deserialize_ct(p, ctb);
        CHECK(serialize_pk(pk2) == pkb);
        CHECK(serialize_sk(sk2) == skb);
        CHECK(serialize_ct(p, c2) == ctb);
        CHECK(sk2.seed1 == kp.sk.seed1);

        // a deserialized key pair must still decrypt
        DecodeOutcome out = decrypt(p, sk2, pk2, c2);
        REQUIRE(out.ok);
        CHECK(out.message == msg);
    }
}

TEST_CASE("deserialization reports malformed input with an offset") {
    SchemeParams p = params_for_row(1);
    KeyPair kp = keygen(p, make_seed(0x07), make_seed(0x47));
    std::vector<uint8_t> pkb = serialize_pk(kp.pk);

    std::vector<uint8_t> bad = pkb;
    bad[0] = 'X';
    CHECK_THROWS_WITH_AS(deserialize_pk(bad), doctest::Contains("bad magic"), std::runtime_error);

    bad = pkb;
    bad[6] = 9;
    CHECK_THROWS_AS(deserialize_pk(bad), std::runtime_error);

    bad = pkb;
    bad[7] = 0;  // custom row id lacks table parameters
    CHECK_THROWS_AS(deserialize_pk(bad), std::runtime_error);

    bad = pkb;
    bad.pop_back();
    CHECK_THROWS_WITH_AS(deserialize_pk(bad), doctest::Contains("length"), std::runtime_error);

    bad = pkb;
    bad.back() |= 0x80;  // the last byte of row 1 holds 6 padding bits
    CHECK_THROWS_WITH_AS(deserialize_pk(bad), doctest::Contains("padding"), std::runtime_error);

    // ciphertext: flipping a padding bit inside the first stream must be caught
    VectorExt msg = random_message(p, 7);
    std::vector<uint8_t> ctb = serialize_ct(p, encrypt(p, kp.pk, msg, make_seed(0x67)));
    bad = ctb;
    bad[8 + (size_t(p.m) * size_t(p.n) + 7) / 8 - 1] |= 0x80;
    CHECK_THROWS_WITH_AS(deserialize_ct(p, bad), doctest::Contains("padding"), std::runtime_error);

    std::vector<uint8_t> skb = serialize_sk(kp.sk);
    bad = skb;
    bad[6] = uint8_t(SchemeKind::multi_nh);
    CHECK_THROWS_AS(deserialize_sk(bad), std::runtime_error);
}

TEST_CASE("pk scheme and row ids survive the wire format") {
    for (int id : {2, 5, 8}) {
        CAPTURE(id);
        SchemeParams p = params_for_row(id);
        KeyPair kp = keygen(p, seed_from(uint64_t(id), 0x71), seed_from(uint64_t(id), 0x72));
        PublicKey pk2 = deserialize_pk(serialize_pk(kp.pk));
        CHECK(pk2.params.row_id == id);
        CHECK(pk2.params.scheme == p.scheme);
        SecretKey sk2 = deserialize_sk(serialize_sk(kp.sk));
        CHECK(sk2.params.row_id == id);
    }
}

TEST_CASE("golden fixtures stay stable") {
    for (int id : {1, 4, 7}) {
        CAPTURE(id);
        std::string path = std::string(EGK_GOLDEN_DIR) + "/row" + std::to_string(id) + ".txt";
        std::ifstream in(path);
        REQUIRE_MESSAGE(in.good(), "missing fixture ", path);
        std::map<std::string, std::string> want;
        std::string label, hex;
        while (in >> label >> hex) want[label] = hex;
        REQUIRE(want.size() == 5);

        SchemeParams p = params_for_row(id);
        Seed seed1 = make_seed(0x00), seed2 = make_seed(0x40), seedm = make_seed(0x80);
        KeyPair kp = keygen(p, seed1, seed2);
        KemOutput enc = kem_encapsulate(p, kp.pk, seedm);

        CHECK(to_hex(serialize_pk(kp.pk)) == want.at("pk"));
        CHECK(to_hex(serialize_sk(kp.sk)) == want.at("sk"));
        CHECK(to_hex(serialize_ct(p, enc.c)) == want.at("ct"));
        CHECK(to_hex({enc.d.begin(), enc.d.end()}) == want.at("d"));
        CHECK(to_hex({enc.key.begin(), enc.key.end()}) == want.at("key"));
    }
}
