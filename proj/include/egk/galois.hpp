#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace egk {

/// Element of GF(2^m), m <= 128, in the polynomial basis: bit i (word i/64,
/// bit i%64 of lo/hi) is the coefficient of x^i. Byte encoding is
/// ceil(m/8) bytes little-endian with zero padding in the top bits.
struct FieldElement {
    uint64_t lo = 0, hi = 0;

    bool operator==(const FieldElement&) const = default;
    bool is_zero() const { return (lo | hi) == 0; }
    bool bit(unsigned i) const {
        return ((i < 64 ? lo >> i : hi >> (i - 64)) & 1u) != 0;
    }
    void set_bit(unsigned i) {
        if (i < 64)
            lo |= uint64_t(1) << i;
        else
            hi |= uint64_t(1) << (i - 64);
    }
    FieldElement operator^(FieldElement o) const { return {lo ^ o.lo, hi ^ o.hi}; }
    FieldElement& operator^=(FieldElement o) {
        lo ^= o.lo;
        hi ^= o.hi;
        return *this;
    }
};

/// Integer order on representations; used wherever "smallest element" is a
/// tie-break rule (normal basis search).
inline bool int_less(FieldElement a, FieldElement b) {
    return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
}

/// Low part of the lexicographically smallest irreducible polynomial of
/// degree m over GF(2) (the modulus is x^m + returned value). Candidates are
/// compared by the integer value of their coefficient string read from the
/// constant term upward.
FieldElement find_irreducible(int m);

/// Field context: modulus plus the reduction tables every operation uses.
struct FieldParams {
    int m = 0;
    FieldElement modulus_low;  // modulus = x^m + modulus_low

    /// Smallest irreducible modulus of degree m.
    explicit FieldParams(int m);
    /// Explicit modulus; must be irreducible of the stated degree.
    FieldParams(int m, FieldElement modulus_low);

    size_t byte_size() const { return size_t(m + 7) / 8; }
    FieldElement mask() const { return mask_; }

    // nib * x^(m+4s) mod modulus, for the product reducer
    std::vector<std::array<FieldElement, 16>> fold;

private:
    FieldElement mask_;
    void init();
};

inline FieldElement field_add(FieldElement a, FieldElement b) { return a ^ b; }
FieldElement field_mul(const FieldParams& fp, FieldElement a, FieldElement b);
FieldElement field_sq(const FieldParams& fp, FieldElement a);
/// pre: a != 0
FieldElement field_inv(const FieldParams& fp, FieldElement a);
/// a^(2^i); i may exceed m (reduced mod m, since a^(2^m) = a)
FieldElement frobenius(const FieldParams& fp, FieldElement a, unsigned i);
/// Tr(a) over GF(2)
bool trace(const FieldParams& fp, FieldElement a);

void fe_to_bytes(const FieldParams& fp, FieldElement a, uint8_t* out);
/// false if the padding bits above m are not zero
bool fe_from_bytes(const FieldParams& fp, const uint8_t* in, FieldElement& out);

/// Normal basis alpha^[0..m): alpha is the smallest element (integer order)
/// whose conjugates are GF(2)-independent. dual[j] satisfies
/// Tr(conj[i] * dual[j]) = delta_ij and equals dual[0]^[j].
struct NormalBasis {
    std::vector<FieldElement> conj;
    std::vector<FieldElement> dual;
    FieldElement alpha() const { return conj[0]; }
};

NormalBasis find_normal_basis(const FieldParams& fp);

/// Expansion of a over a GF(2)-independent basis of length m: a = sum of
/// basis[i] over the set bits. Throws on a dependent basis.
std::vector<uint8_t> coordinates(const FieldParams& fp, FieldElement a,
                                 const std::vector<FieldElement>& basis);

}  // namespace egk
