#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "egk/sampling.hpp"

using namespace egk;

namespace {

Seed test_seed(uint8_t fill) {
    Seed s{};
    for (size_t i = 0; i < s.size(); ++i) s[i] = uint8_t(fill + i);
    return s;
}

VectorExt matrix_entries(const MatrixExt& m) {
    VectorExt v;
    v.reserve(size_t(m.rows) * size_t(m.cols));
    for (int j = 0; j < m.cols; ++j)
        for (int i = 0; i < m.rows; ++i) v.push_back(m.at(i, j));
    return v;
}

}  // namespace

TEST_CASE("expander streams are deterministic and domain-separated") {
    Seed s = test_seed(0x10);
    Expander a(s, kDomainKeygenSecret);
    Expander b(s, kDomainKeygenSecret);
    REQUIRE(a.expand(333) == b.expand(333));

    Expander c(s, kDomainKeygenPublic);
    Expander d(s, kDomainEncryption);
    CHECK(Expander(s, kDomainKeygenSecret).expand(64) != c.expand(64));
    CHECK(Expander(s, kDomainKeygenPublic).expand(64) != d.expand(64));

    Expander inc(s, kDomainKemMessage);
    auto one = inc.expand(40);
    auto two = inc.expand(60);
    Expander oneshot(s, kDomainKemMessage);
    auto all = oneshot.expand(100);
    one.insert(one.end(), two.begin(), two.end());
    REQUIRE(one == all);

    Expander empty_req(s, kDomainKemMessage);
    CHECK(empty_req.expand(0).empty());
}

TEST_CASE("uniform elements respect the field mask") {
    FieldParams fp(53);
    Seed s = test_seed(0x22);
    Expander e(s, kDomainKeygenPublic);
    for (int i = 0; i < 200; ++i) {
        FieldElement x = e.uniform_element(fp);
        CHECK((x.lo & ~fp.mask().lo) == 0);
        CHECK(x.hi == 0);
    }
    FieldParams wide(116);
    Expander e2(s, kDomainKeygenPublic);
    bool any_hi = false;
    for (int i = 0; i < 50; ++i) {
        FieldElement x = e2.uniform_element(wide);
        CHECK((x.hi & ~wide.mask().hi) == 0);
        any_hi = any_hi || x.hi != 0;
    }
    CHECK(any_hi);
}

TEST_CASE("exact-weight vectors across a parameter grid") {
    FieldParams fp(13);
    Seed s = test_seed(0x33);
    Expander e(s, kDomainEncryption);
    for (int n : {5, 13, 20})
        for (int w = 0; w <= std::min(n, 13); w += 2)
            for (int trial = 0; trial < 25; ++trial) {
                VectorExt v = sample_weight_vector(fp, e, n, w);
                REQUIRE(int(v.size()) == n);
                REQUIRE(rank_weight(v) == w);
            }
    VectorExt zero = sample_weight_vector(fp, e, 9, 0);
    for (const auto& x : zero) CHECK(x.is_zero());
    VectorExt full = sample_weight_vector(fp, e, 13, 13);
    CHECK(rank_weight(full) == 13);
    CHECK_THROWS_AS(sample_weight_vector(fp, e, 5, 6), std::invalid_argument);
    CHECK_THROWS_AS(sample_weight_vector(fp, e, 20, 14), std::invalid_argument);
}

TEST_CASE("samplers are pure functions of seed, domain, call sequence") {
    FieldParams fp(53);
    Seed s = test_seed(0x44);
    Expander a(s, kDomainKeygenSecret);
    Expander b(s, kDomainKeygenSecret);
    REQUIRE(sample_weight_vector(fp, a, 59, 21) == sample_weight_vector(fp, b, 59, 21));
    REQUIRE(sample_blockwise(fp, a, {10, 10}, {2, 3}) ==
            sample_blockwise(fp, b, {10, 10}, {2, 3}));
    REQUIRE(a.expand(32) == b.expand(32));

    Expander g(s, kDomainKeygenPublic);
    Expander h(s, kDomainKeygenPublic);
    REQUIRE(sample_generator(fp, g, 59, 53) == sample_weight_vector(fp, h, 59, 53));
}

TEST_CASE("blockwise samples have disjoint supports and exact weights") {
    FieldParams fp(13);
    Seed s = test_seed(0x55);
    Expander e(s, kDomainEncryption);
    for (int trial = 0; trial < 40; ++trial) {
        VectorExt v = sample_blockwise(fp, e, {8, 11}, {2, 3});
        REQUIRE(v.size() == 19);
        VectorExt b1(v.begin(), v.begin() + 8);
        VectorExt b2(v.begin() + 8, v.end());
        REQUIRE(rank_weight(b1) == 2);
        REQUIRE(rank_weight(b2) == 3);
        // trivial span intersection shows up as additive rank
        REQUIRE(rank_weight(v) == 5);
    }

    // single block collapses to the plain sampler, stream-for-stream
    Expander p(s, kDomainKeygenSecret);
    Expander q(s, kDomainKeygenSecret);
    REQUIRE(sample_blockwise(fp, p, {9}, {4}) == sample_weight_vector(fp, q, 9, 4));

    CHECK_THROWS_AS(sample_blockwise(fp, e, {8, 8}, {7, 7}), std::invalid_argument);
    CHECK_THROWS_AS(sample_blockwise(fp, e, {3, 8}, {4, 2}), std::invalid_argument);
    CHECK_THROWS_AS(sample_blockwise(fp, e, {3, 8}, {2}), std::invalid_argument);

    FieldParams big(53);
    Expander be(s, kDomainKeygenSecret);
    VectorExt xy = sample_blockwise(big, be, {590, 590}, {3, 3});
    VectorExt x(xy.begin(), xy.begin() + 590);
    VectorExt y(xy.begin() + 590, xy.end());
    CHECK(rank_weight(x) == 3);
    CHECK(rank_weight(y) == 3);
    CHECK(rank_weight(xy) == 6);
}

TEST_CASE("non-homogeneous triples nest their supports") {
    FieldParams fp(85);
    Seed s = test_seed(0x66);
    Expander e(s, kDomainEncryption);
    for (int trial = 0; trial < 30; ++trial) {
        auto [m1, m2, m3] = sample_nh(fp, e, 86, 6, 6, 6, 3, 4);
        REQUIRE(m1.rows == 86);
        REQUIRE(m1.cols == 6);
        REQUIRE(m2.cols == 6);
        REQUIRE(m3.cols == 6);
        VectorExt outer = matrix_entries(m2);
        VectorExt inner = matrix_entries(m1);
        VectorExt e3 = matrix_entries(m3);
        inner.insert(inner.end(), e3.begin(), e3.end());
        REQUIRE(rank_weight(inner) == 3);
        REQUIRE(rank_weight(outer) == 4);
        // containment: adjoining the outer support adds nothing new
        VectorExt both = inner;
        both.insert(both.end(), outer.begin(), outer.end());
        REQUIRE(rank_weight(both) == 4);
    }

    auto [a1, a2, a3] = sample_nh(fp, e, 10, 2, 3, 2, 3, 3);
    VectorExt inner = matrix_entries(a1);
    VectorExt e3 = matrix_entries(a3);
    inner.insert(inner.end(), e3.begin(), e3.end());
    VectorExt outer = matrix_entries(a2);
    VectorExt both = inner;
    both.insert(both.end(), outer.begin(), outer.end());
    REQUIRE(rank_weight(inner) == 3);
    REQUIRE(rank_weight(outer) == 3);
    REQUIRE(rank_weight(both) == 3);

    CHECK_THROWS_AS(sample_nh(fp, e, 10, 2, 3, 2, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(sample_nh(fp, e, 10, 2, 3, 2, 3, 86), std::invalid_argument);
    CHECK_THROWS_AS(sample_nh(fp, e, 2, 1, 1, 1, 1, 3), std::invalid_argument);
}
