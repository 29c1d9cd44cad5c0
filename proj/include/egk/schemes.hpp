#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "egk/codes.hpp"
#include "egk/ideal_ring.hpp"
#include "egk/sampling.hpp"

namespace egk {

enum class SchemeKind : uint8_t { bwe = 1, multi_nh = 2, multi_ur = 3 };

/// One parameter row: the published tables use ids 1-3 (BWE), 4-6 (Multi-NH),
/// 7-9 (Multi-UR); id 0 marks a custom set.
struct SchemeParams {
    SchemeKind scheme = SchemeKind::bwe;
    int row_id = 0;
    int n1 = 0, k1 = 0, n2 = 0, k2 = 0;
    int m = 0, n = 0, k = 0;
    int r = 0;       // error-weight budget the decoder input must satisfy
    int t1 = 0, t2 = 0;
    int wx = 0, wy = 0, w1 = 0, w2 = 0;
    int we = 0;      // BWE third block weight; unused otherwise
    int z = 0;       // Multi-UR matrix dimension; unused otherwise
    int security_level = 0;
};

SchemeParams params_for_row(int id);
/// all registry ids, in table order
const std::vector<int>& registry_rows();
/// throws std::invalid_argument when a SchemeParams invariant fails
void validate_params(const SchemeParams& p);
/// guaranteed product-code decoding radius for the row's code regime
int scheme_radius(const SchemeParams& p);

/// serialized payload sizes in bytes (the published table values); the file
/// header adds 8 bytes on top
size_t pk_bytes(const SchemeParams& p);
size_t ct_bytes(const SchemeParams& p);
size_t sk_bytes(const SchemeParams& p);

struct BwePublicKey {
    Seed seed2{};    // regenerates (g1, g2, h)
    VectorExt s;
};
struct BweCiphertext {
    VectorExt u, v;
};
struct NhPublicKey {
    VectorExt g1, g2, h, s;
};
struct NhCiphertext {
    MatrixExt u, v;
};
struct UrPublicKey {
    VectorExt g1, g2;
    MatrixExt h, s;
};
struct UrCiphertext {
    MatrixExt u, v;
};

struct PublicKey {
    SchemeParams params;
    std::variant<BwePublicKey, NhPublicKey, UrPublicKey> key;
};
struct SecretKey {
    SchemeParams params;
    Seed seed1{};
};
struct Ciphertext {
    std::variant<BweCiphertext, NhCiphertext, UrCiphertext> ct;
};
struct KeyPair {
    PublicKey pk;
    SecretKey sk;
};

KeyPair keygen(const SchemeParams& p, const Seed& seed1, const Seed& seed2);
Ciphertext encrypt(const SchemeParams& p, const PublicKey& pk, const VectorExt& msg,
                   const Seed& theta);
/// failure outcomes surface the decoder's reason; honest ciphertexts never fail
DecodeOutcome decrypt(const SchemeParams& p, const SecretKey& sk, const PublicKey& pk,
                      const Ciphertext& c);

struct KemOutput {
    Ciphertext c;
    std::array<uint8_t, 64> d{};  // commitment to the message
    std::array<uint8_t, 64> key{};
};

KemOutput kem_encapsulate(const SchemeParams& p, const PublicKey& pk, const Seed& seed);
/// explicit rejection: nullopt unless the re-encryption and commitment match
std::optional<std::array<uint8_t, 64>> kem_decapsulate(const SchemeParams& p,
                                                       const SecretKey& sk, const PublicKey& pk,
                                                       const Ciphertext& c,
                                                       const std::array<uint8_t, 64>& d);

/// message as a dense bit string of k * m bits (hash input ordering)
std::vector<uint8_t> pack_message(const SchemeParams& p, const VectorExt& msg);

// Byte formats: 8-byte header ("RQCEGK", scheme id, row id) then the payload
// whose length pk_bytes/ct_bytes/sk_bytes reports. Deserialization throws
// std::runtime_error with the offending byte offset on malformed input.
std::vector<uint8_t> serialize_pk(const PublicKey& pk);
std::vector<uint8_t> serialize_ct(const SchemeParams& p, const Ciphertext& c);
std::vector<uint8_t> serialize_sk(const SecretKey& sk);
/// single-argument forms resolve parameters from the header row id and so
/// reject custom rows; pass the parameters explicitly for those
PublicKey deserialize_pk(const std::vector<uint8_t>& bytes);
PublicKey deserialize_pk(const std::vector<uint8_t>& bytes, const SchemeParams& p);
Ciphertext deserialize_ct(const SchemeParams& p, const std::vector<uint8_t>& bytes);
SecretKey deserialize_sk(const std::vector<uint8_t>& bytes);
SecretKey deserialize_sk(const std::vector<uint8_t>& bytes, const SchemeParams& p);

}  // namespace egk
