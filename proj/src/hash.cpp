#include "egk/hash.hpp"

#include <cstring>

namespace egk {

namespace {

inline uint64_t rotl(uint64_t x, int s) { return (x << s) | (x >> (64 - s)); }

constexpr uint64_t kKeccakRc[24] = {
    0x0000000000000001ull, 0x0000000000008082ull, 0x800000000000808aull,
    0x8000000080008000ull, 0x000000000000808bull, 0x0000000080000001ull,
    0x8000000080008081ull, 0x8000000000008009ull, 0x000000000000008aull,
    0x0000000000000088ull, 0x0000000080008009ull, 0x000000008000000aull,
    0x000000008000808bull, 0x800000000000008bull, 0x8000000000008089ull,
    0x8000000000008003ull, 0x8000000000008002ull, 0x8000000000000080ull,
    0x000000000000800aull, 0x800000008000000aull, 0x8000000080008081ull,
    0x8000000000008080ull, 0x0000000080000001ull, 0x8000000080008008ull,
};
constexpr int kRotc[24] = {1,  3,  6,  10, 15, 21, 28, 36, 45, 55, 2,  14,
                           27, 41, 56, 8,  25, 43, 62, 18, 39, 61, 20, 44};
constexpr int kPiln[24] = {10, 7,  11, 17, 18, 3, 5,  16, 8,  21, 24, 4,
                           15, 23, 19, 13, 12, 2, 20, 14, 22, 9,  6,  1};

void keccakf(std::array<uint64_t, 25>& st) {
    for (int round = 0; round < 24; ++round) {
        uint64_t c[5], d;
        for (int x = 0; x < 5; ++x)
            c[x] = st[size_t(x)] ^ st[size_t(x + 5)] ^ st[size_t(x + 10)] ^ st[size_t(x + 15)] ^
                   st[size_t(x + 20)];
        for (int x = 0; x < 5; ++x) {
            d = c[(x + 4) % 5] ^ rotl(c[(x + 1) % 5], 1);
            for (int y = 0; y < 25; y += 5) st[size_t(x + y)] ^= d;
        }
        uint64_t t = st[1];
        for (int i = 0; i < 24; ++i) {
            int j = kPiln[i];
            uint64_t bc = st[size_t(j)];
            st[size_t(j)] = rotl(t, kRotc[i]);
            t = bc;
        }
        for (int y = 0; y < 25; y += 5) {
            uint64_t row[5];
            for (int x = 0; x < 5; ++x) row[x] = st[size_t(x + y)];
            for (int x = 0; x < 5; ++x)
                st[size_t(x + y)] = row[x] ^ (~row[(x + 1) % 5] & row[(x + 2) % 5]);
        }
        st[0] ^= kKeccakRc[round];
    }
}

constexpr size_t kShakeRate = 136;

}  // namespace

void Shake256::absorb(const uint8_t* data, size_t len) {
    if (squeezing_) {
        // restarting absorption after squeezing is a caller bug; keep the
        // class misuse-proof by folding the input into a fresh sponge state
        *this = Shake256{};
    }
    for (size_t i = 0; i < len; ++i) {
        state_[pos_ / 8] ^= uint64_t(data[i]) << (8 * (pos_ % 8));
        if (++pos_ == kShakeRate) {
            keccakf(state_);
            pos_ = 0;
        }
    }
}

void Shake256::squeeze(uint8_t* out, size_t len) {
    if (!squeezing_) {
        state_[pos_ / 8] ^= uint64_t(0x1f) << (8 * (pos_ % 8));
        state_[(kShakeRate - 1) / 8] ^= uint64_t(0x80) << (8 * ((kShakeRate - 1) % 8));
        keccakf(state_);
        pos_ = 0;
        squeezing_ = true;
    }
    for (size_t i = 0; i < len; ++i) {
        if (pos_ == kShakeRate) {
            keccakf(state_);
            pos_ = 0;
        }
        out[i] = uint8_t(state_[pos_ / 8] >> (8 * (pos_ % 8)));
        ++pos_;
    }
}

namespace {

constexpr uint64_t kSha512K[80] = {
    0x428a2f98d728ae22ull, 0x7137449123ef65cdull, 0xb5c0fbcfec4d3b2full, 0xe9b5dba58189dbbcull,
    0x3956c25bf348b538ull, 0x59f111f1b605d019ull, 0x923f82a4af194f9bull, 0xab1c5ed5da6d8118ull,
    0xd807aa98a3030242ull, 0x12835b0145706fbeull, 0x243185be4ee4b28cull, 0x550c7dc3d5ffb4e2ull,
    0x72be5d74f27b896full, 0x80deb1fe3b1696b1ull, 0x9bdc06a725c71235ull, 0xc19bf174cf692694ull,
    0xe49b69c19ef14ad2ull, 0xefbe4786384f25e3ull, 0x0fc19dc68b8cd5b5ull, 0x240ca1cc77ac9c65ull,
    0x2de92c6f592b0275ull, 0x4a7484aa6ea6e483ull, 0x5cb0a9dcbd41fbd4ull, 0x76f988da831153b5ull,
    0x983e5152ee66dfabull, 0xa831c66d2db43210ull, 0xb00327c898fb213full, 0xbf597fc7beef0ee4ull,
    0xc6e00bf33da88fc2ull, 0xd5a79147930aa725ull, 0x06ca6351e003826full, 0x142929670a0e6e70ull,
    0x27b70a8546d22ffcull, 0x2e1b21385c26c926ull, 0x4d2c6dfc5ac42aedull, 0x53380d139d95b3dfull,
    0x650a73548baf63deull, 0x766a0abb3c77b2a8ull, 0x81c2c92e47edaee6ull, 0x92722c851482353bull,
    0xa2bfe8a14cf10364ull, 0xa81a664bbc423001ull, 0xc24b8b70d0f89791ull, 0xc76c51a30654be30ull,
    0xd192e819d6ef5218ull, 0xd69906245565a910ull, 0xf40e35855771202aull, 0x106aa07032bbd1b8ull,
    0x19a4c116b8d2d0c8ull, 0x1e376c085141ab53ull, 0x2748774cdf8eeb99ull, 0x34b0bcb5e19b48a8ull,
    0x391c0cb3c5c95a63ull, 0x4ed8aa4ae3418acbull, 0x5b9cca4f7763e373ull, 0x682e6ff3d6b2b8a3ull,
    0x748f82ee5defb2fcull, 0x78a5636f43172f60ull, 0x84c87814a1f0ab72ull, 0x8cc702081a6439ecull,
    0x90befffa23631e28ull, 0xa4506cebde82bde9ull, 0xbef9a3f7b2c67915ull, 0xc67178f2e372532bull,
    0xca273eceea26619cull, 0xd186b8c721c0c207ull, 0xeada7dd6cde0eb1eull, 0xf57d4f7fee6ed178ull,
    0x06f067aa72176fbaull, 0x0a637dc5a2c898a6ull, 0x113f9804bef90daeull, 0x1b710b35131c471bull,
    0x28db77f523047d84ull, 0x32caab7b40c72493ull, 0x3c9ebe0a15c9bebcull, 0x431d67c49c100d4cull,
    0x4cc5d4becb3e42b6ull, 0x597f299cfc657e2aull, 0x5fcb6fab3ad6faecull, 0x6c44198c4a475817ull,
};

inline uint64_t rotr(uint64_t x, int s) { return (x >> s) | (x << (64 - s)); }

void sha512_block(uint64_t h[8], const uint8_t* p) {
    uint64_t w[80];
    for (int i = 0; i < 16; ++i) {
        w[i] = 0;
        for (int b = 0; b < 8; ++b) w[i] = (w[i] << 8) | p[8 * i + b];
    }
    for (int i = 16; i < 80; ++i) {
        uint64_t s0 = rotr(w[i - 15], 1) ^ rotr(w[i - 15], 8) ^ (w[i - 15] >> 7);
        uint64_t s1 = rotr(w[i - 2], 19) ^ rotr(w[i - 2], 61) ^ (w[i - 2] >> 6);
        w[i] = w[i - 16] + s0 + w[i - 7] + s1;
    }
    uint64_t a = h[0], b = h[1], c = h[2], d = h[3];
    uint64_t e = h[4], f = h[5], g = h[6], hh = h[7];
    for (int i = 0; i < 80; ++i) {
        uint64_t s1 = rotr(e, 14) ^ rotr(e, 18) ^ rotr(e, 41);
        uint64_t ch = (e & f) ^ (~e & g);
        uint64_t t1 = hh + s1 + ch + kSha512K[i] + w[i];
        uint64_t s0 = rotr(a, 28) ^ rotr(a, 34) ^ rotr(a, 39);
        uint64_t maj = (a & b) ^ (a & c) ^ (b & c);
        uint64_t t2 = s0 + maj;
        hh = g;
        g = f;
        f = e;
        e = d + t1;
        d = c;
        c = b;
        b = a;
        a = t1 + t2;
    }
    h[0] += a;
    h[1] += b;
    h[2] += c;
    h[3] += d;
    h[4] += e;
    h[5] += f;
    h[6] += g;
    h[7] += hh;
}

}  // namespace

std::array<uint8_t, 64> sha512(const uint8_t* data, size_t len) {
    uint64_t h[8] = {0x6a09e667f3bcc908ull, 0xbb67ae8584caa73bull, 0x3c6ef372fe94f82bull,
                     0xa54ff53a5f1d36f1ull, 0x510e527fade682d1ull, 0x9b05688c2b3e6c1full,
                     0x1f83d9abfb41bd6bull, 0x5be0cd19137e2179ull};
    size_t full = len / 128;
    for (size_t i = 0; i < full; ++i) sha512_block(h, data + 128 * i);

    uint8_t tail[256] = {};
    size_t rem = len - 128 * full;
    std::memcpy(tail, data + 128 * full, rem);
    tail[rem] = 0x80;
    size_t blocks = rem < 112 ? 1 : 2;
    uint64_t bits = uint64_t(len) * 8;
    for (int b = 0; b < 8; ++b) tail[128 * blocks - 1 - size_t(b)] = uint8_t(bits >> (8 * b));
    for (size_t i = 0; i < blocks; ++i) sha512_block(h, tail + 128 * i);

    std::array<uint8_t, 64> out;
    for (int i = 0; i < 8; ++i)
        for (int b = 0; b < 8; ++b) out[size_t(8 * i + b)] = uint8_t(h[i] >> (56 - 8 * b));
    return out;
}

}  // namespace egk
