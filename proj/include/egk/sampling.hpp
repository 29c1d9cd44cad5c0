#pragma once

#include <array>
#include <cstdint>
#include <tuple>
#include <vector>

#include "egk/hash.hpp"
#include "egk/rank_linalg.hpp"

namespace egk {

using Seed = std::array<uint8_t, 40>;

/// Deterministic byte stream keyed by (seed, domain): SHAKE-256 of
/// seed || domain, squeezed incrementally. Copy to branch a stream.
class Expander {
  public:
    Expander(const Seed& seed, uint8_t domain);
    std::vector<uint8_t> expand(size_t nbytes);

    FieldElement uniform_element(const FieldParams& fp);
    VectorExt uniform_vector(const FieldParams& fp, int n);

  private:
    Shake256 xof_;
};

// protocol stream tags
inline constexpr uint8_t kDomainKeygenSecret = 0x01;
inline constexpr uint8_t kDomainKeygenPublic = 0x02;
inline constexpr uint8_t kDomainEncryption = 0x03;
inline constexpr uint8_t kDomainKemMessage = 0x04;

/// vector with rank weight exactly w; rejection-sampled support basis and
/// full-rank coefficient matrix (retry cap 256 each)
VectorExt sample_weight_vector(const FieldParams& fp, Expander& e, int n, int w);

/// alias with the generator-sampling name used by key generation
VectorExt sample_generator(const FieldParams& fp, Expander& e, int n, int t);

/// concatenated blocks of exact weights with pairwise-disjoint supports
VectorExt sample_blockwise(const FieldParams& fp, Expander& e, const std::vector<int>& lengths,
                           const std::vector<int>& weights);

/// (M1, M2, M3) of widths (b, c, d), all with a rows: M2 entries span a
/// w2-dimensional support, M1 and M3 jointly span a w1-dimensional subspace
/// of it, every weight exact
std::tuple<MatrixExt, MatrixExt, MatrixExt> sample_nh(const FieldParams& fp, Expander& e, int a,
                                                      int b, int c, int d, int w1, int w2);

}  // namespace egk
