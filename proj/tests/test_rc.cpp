#include "doctest.h"
#include "dkr/rc.hpp"
#include "fixtures.hpp"

#include <map>
#include <set>
#include <stdexcept>

using namespace dkr;

namespace {
Weight lam(int n, std::vector<int> c) { return weight_from_lambda(n, c); }

// Brute-force count of partitions of total into parts of any size.
int partition_count(int total, int max_part) {
    if (total == 0) return 1;
    int c = 0;
    for (int k = 1; k <= std::min(total, max_part); ++k) c += partition_count(total - k, k);
    return c;
}
}  // namespace

TEST_CASE("l_vector") {
    CHECK(l_vector(4, parse_spec("KR:1,KR:1,KR:2,KR:2,KR:2", 4)) == lam(4, {2, 3, 0, 0}));
    CHECK(l_vector(5, parse_spec("KR:5,KR:2,KR:1,KR:1,KR:1", 5)) == lam(5, {3, 1, 0, 0, 1}));
    CHECK(l_vector(5, parse_spec("E:5", 5)) == omega_weight(5, 5));
    CHECK(l_vector(5, parse_spec("E:4", 5)) == omega_weight(5, 5, true));
    CHECK(l_vector(5, parse_spec("HatNm1", 5)) == lam(5, {0, 0, 0, 1, 1}));
}

TEST_CASE("config_sizes") {
    const TensorSpec B = parse_spec("KR:1,KR:1,KR:2,KR:2,KR:2", 4);
    CHECK(*config_sizes(4, lam(4, {0, 1, 0, 0}), B) == std::vector<int>{4, 6, 3, 3});
    CHECK(*config_sizes(4, l_vector(4, B), B) == std::vector<int>{0, 0, 0, 0});
    // L - lambda outside the root lattice
    CHECK_FALSE(config_sizes(4, lam(4, {1, 1, 0, 0}), B));
    // negative coefficient
    CHECK_FALSE(config_sizes(4, lam(4, {3, 3, 0, 0}), B));
    // the spinor example
    CHECK(*config_sizes(5, lam(5, {2, 0, 0, 1, 0}), parse_spec("KR:5,KR:2,KR:1,KR:1,KR:1", 5)) ==
          std::vector<int>{2, 3, 3, 1, 2});
}

TEST_CASE("vacancy numbers of the delta example") {
    const RiggedConfig rc = fixtures::delta_example();
    CHECK(vacancy(rc, 2, 1) == 1);
    CHECK(vacancy(rc, 2, 2) == 0);
    CHECK(vacancy(rc, 4, 3) == 0);
    CHECK(vacancy(rc, 1, 1) == 0);
    CHECK(vacancy(rc, 1, 2) == 0);
    CHECK(vacancy(rc, 3, 1) == 0);
    CHECK(vacancy(rc, 3, 2) == 0);
    RiggedConfig e = RiggedConfig::empty(4, lam(4, {1, 0, 0, 0}), parse_spec("KR:1", 4));
    for (int i = 1; i <= 5; ++i) CHECK(vacancy(e, 1, i) == 1);
}

TEST_CASE("validity") {
    RiggedConfig rc = fixtures::delta_example();
    CHECK(is_valid_rc(rc));
    rc.part(2)[2].rig = 2;  // a length-1 row, p = 1
    rc.normalize();
    CHECK_FALSE(is_valid_rc(rc));
    CHECK(is_valid_rc(RiggedConfig::empty(4, Weight(4), {})));
    CHECK(is_singular(fixtures::delta_example(), 2, 1));
    CHECK(is_singular(fixtures::delta_example(), 1, 1));
    RiggedConfig s = fixtures::spinor_example();
    CHECK(is_valid_rc(s));
    CHECK(vacancy(s, 1, 2) == 2);
    CHECK_FALSE(is_singular(s, 1, 2));
}

TEST_CASE("cc and theta") {
    const RiggedConfig rc = fixtures::delta_example();
    CHECK(cc(rc) == 10);
    CHECK(cc(RiggedConfig::empty(4, Weight(4), {})) == 0);
    CHECK(theta(theta(rc)) == rc);
    CHECK(cc(emb_rc(fixtures::spinor_example())) == 2 * cc(fixtures::spinor_example()));

    // cc(theta x) + cc(x) = 2 cc(shape) + sum m_i p_i
    const int n = 4;
    const TensorSpec B = parse_spec("KR:1,KR:1", n);
    auto all = enumerate_rc(n, Weight(n), B);
    REQUIRE(!all.empty());
    for (const auto& x : all) {
        const auto shapes = x.shapes();
        int mp = 0;
        for (int a = 1; a <= n; ++a)
            for (const Row& r : x.part(a)) mp += vacancy(x, a, r.len);
        CHECK(cc(theta(x)) + cc(x) == 2 * cc_shape(n, shapes) + mp);
    }
}

TEST_CASE("theta of a singular configuration has zero riggings") {
    for (const auto& x : enumerate_rc(4, weight_from_lambda(4, {0, 1, 0, 0}), parse_spec("KR:1,KR:1,KR:2,KR:2,KR:2", 4))) {
        bool all_singular = true;
        for (int a = 1; a <= 4; ++a)
            for (const Row& r : x.part(a)) all_singular &= r.rig == vacancy(x, a, r.len);
        if (!all_singular) continue;
        for (const auto& p : theta(x).nu)
            for (const Row& r : p) CHECK(r.rig == 0);
    }
}

TEST_CASE("enumeration") {
    const int n = 4;
    const TensorSpec B = parse_spec("KR:1,KR:1,KR:2,KR:2,KR:2", n);
    auto all = enumerate_rc(n, weight_from_lambda(n, {0, 1, 0, 0}), B);
    CHECK(std::find(all.begin(), all.end(), fixtures::delta_example()) != all.end());
    CHECK(std::set<RiggedConfig>(all.begin(), all.end()).size() == all.size());
    for (const auto& x : all) REQUIRE(is_valid_rc(x));
    CHECK(enumerate_rc(n, l_vector(n, B), B).size() == 1);
    CHECK(enumerate_rc(n, lam(n, {1, 1, 0, 0}), B).empty());

    // Shapes without the vacancy filter are all partitions of the sizes.
    auto sizes = *config_sizes(n, weight_from_lambda(n, {0, 1, 0, 0}), B);
    int total = 1;
    for (int c : sizes) total *= partition_count(c, c);
    CHECK(static_cast<int>(admissible_shapes(n, weight_from_lambda(n, {0, 1, 0, 0}), B).size()) <= total);
}

TEST_CASE("vacancy convexity holds on enumerated configurations") {
    // -p_{i-1} + 2 p_i - p_{i+1} = -sum_b (a_a|a_b) m_i^(b) + delta_{i,1} L^a, with p_0 = 0
    const int n = 4;
    for (const char* spec : {"KR:1,KR:2,KR:3", "KR:2,KR:2,KR:4", "KR:1,KR:1,KR:1"}) {
        const TensorSpec B = parse_spec(spec, n);
        const auto lc = l_coeffs(n, B);
        std::map<std::vector<int>, int> seen;
        for (int a1 = 0; a1 <= 3; ++a1)
            for (int a2 = 0; a2 <= 2; ++a2)
                for (const auto& shapes : admissible_shapes(n, weight_from_lambda(n, {a1, a2, 0, 0}), B)) {
                    RiggedConfig x = RiggedConfig::empty(n, Weight(n), B);
                    for (int a = 1; a <= n; ++a)
                        for (int len : shapes[a - 1]) x.part(a).push_back({len, 0});
                    for (int a = 1; a <= n; ++a)
                        for (int i = 1; i <= 6; ++i) {
                            int lhs = -(i == 1 ? 0 : vacancy(n, lc, shapes, a, i - 1)) + 2 * vacancy(n, lc, shapes, a, i) -
                                      vacancy(n, lc, shapes, a, i + 1);
                            int rhs = i == 1 ? lc[a - 1] : 0;
                            for (int b = 1; b <= n; ++b) rhs -= cartan_pairing(n, a, b) * x.m(b, i);
                            REQUIRE(lhs == rhs);
                        }
                }
    }
}

TEST_CASE("emb_rc doubles and inverts") {
    const RiggedConfig s = fixtures::spinor_example();
    RiggedConfig d = emb_rc(s);
    CHECK(d.B == parse_spec("E:5,KR:2,KR:2,KR:1,KR:1,KR:1,KR:1,KR:1,KR:1", 5));
    CHECK(d.part(1) == RiggedPartition{{4, 2}});
    CHECK(d.part(2) == RiggedPartition{{4, 0}, {2, 0}});
    CHECK(d.part(5) == RiggedPartition{{4, 0}});
    CHECK(is_valid_rc(d));
    CHECK(emb_rc_inverse(d, s.B) == s);
    d.part(1)[0].rig = 3;
    CHECK_THROWS_AS(emb_rc_inverse(d, s.B), std::logic_error);
    RiggedConfig e = RiggedConfig::empty(4, Weight(4), {});
    CHECK(emb_rc(e) == e);
}
