#include "doctest.h"
#include "dkr/bijection.hpp"
#include "dkr/energy.hpp"
#include "fixtures.hpp"

#include <map>
#include <array>
#include <functional>
#include <set>
#include <stdexcept>

using namespace dkr;

namespace {
Column top(std::vector<int> v) { return Column::from_top(v); }

RiggedConfig make(int n, std::vector<int> lam, const char* spec, std::vector<RiggedPartition> nu) {
    RiggedConfig rc = RiggedConfig::empty(n, weight_from_lambda(n, lam), parse_spec(spec, n));
    rc.nu = std::move(nu);
    rc.normalize();
    return rc;
}

// Dominant weights reachable as L - (nonnegative root combination), by brute force.
std::vector<Weight> dominant_below(int n, const TensorSpec& B) {
    std::vector<Weight> out;
    const Weight L = l_vector(n, B);
    std::vector<int> c(n, 0);
    const int top_level = 2 * static_cast<int>(B.size()) + 2;
    std::function<void(int)> rec = [&](int a) {
        if (a == n) {
            Weight w = L;
            for (int b = 1; b <= n; ++b) w -= c[b - 1] * simple_root(n, b);
            if (is_dominant(w)) out.push_back(w);
            return;
        }
        for (c[a] = 0; c[a] <= top_level; ++c[a]) rec(a + 1);
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}
}  // namespace

TEST_CASE("delta on the D_4 example") {
    DeltaResult d = delta(fixtures::delta_example());
    CHECK(d.letter == -3);
    CHECK(d.trace.ell == std::vector<int>{kInf, 1, 1, 1, 3});
    CHECK(d.trace.ellbar[1] == kInf);
    CHECK(d.trace.ellbar[2] == kInf);
    RiggedConfig want = make(4, {0, 1, 0, 0}, "KR:1,KR:2,KR:2,KR:2",
                             {{{2, 0}, {1, 0}}, {{2, 0}, {2, 0}, {1, 1}}, {{2, 0}}, {{2, 1}}});
    want.lambda = weight_from_lambda(4, {0, 1, 0, 0}) - letter_weight(4, -3);
    CHECK(d.rc == want);
    CHECK(vacancy(d.rc, 3, 2) == 1);
    CHECK(vacancy(d.rc, 4, 2) == 1);
    CHECK(delta_inv(d.rc, -3) == fixtures::delta_example());
}

TEST_CASE("delta on trivial inputs") {
    RiggedConfig e = RiggedConfig::empty(4, weight_from_lambda(4, {1, 0, 0, 0}), parse_spec("KR:1", 4));
    DeltaResult d = delta(e);
    CHECK(d.letter == 1);
    CHECK(d.rc == RiggedConfig::empty(4, Weight(4), {}));
    CHECK(delta_inv(RiggedConfig::empty(4, Weight(4), {}), 1) == e);
    CHECK_THROWS_AS(delta(fixtures::spinor_example()), std::invalid_argument);
}

TEST_CASE("Phi on the D_4 example") {
    const RiggedConfig rc = fixtures::delta_example();
    CHECK(phi(rc).str() == "3̅ ⊗ 4̅ ⊗ 43 ⊗ 1̅1 ⊗ 21");
    CHECK(phi_tilde(rc).str() == "3̅ ⊗ 4̅ ⊗ 1̅1 ⊗ 43 ⊗ 21");
    CHECK(tensor_energy(4, phi_tilde(rc)).value == 10);
    CHECK(phi_inv(4, phi(rc)) == rc);
    CHECK(phi_tilde(theta(rc)) == phi(rc));
}

TEST_CASE("delta_s reproduces the spinor table") {
    const RiggedConfig s = fixtures::spinor_example();
    SpinorResult r = delta_s(s);
    std::vector<Letter> letters;
    for (const auto& st : r.steps) letters.push_back(st.letter);
    CHECK(letters == std::vector<Letter>{-2, -5, 4, 3, 1});
    CHECK(r.column == top({-2, -5, 4, 3, 1}));
    CHECK(r.rc.lambda == weight_from_lambda(5, {1, 1, 0, 0, 0}));
    CHECK(r.rc.B == parse_spec("KR:2,KR:1,KR:1,KR:1", 5));
    CHECK(r.rc.nu == std::vector<RiggedPartition>{{{2, 1}}, {{1, 0}, {1, 0}}, {{1, 0}, {1, 0}}, {{1, 0}}, {{1, 0}}});
    CHECK(vacancy(r.rc, 1, 2) == 1);

    // rows of the table as (partition, rows of (length, vacancy, rigging))
    using Entry = std::vector<std::vector<std::array<int, 3>>>;
    const std::vector<Entry> table = {
        {{{4, 4, 2}}, {{4, 0, 0}, {2, 0, 0}}, {{4, 0, 0}, {2, 0, 0}}, {{2, 0, 0}}, {{4, 0, 0}}},
        {{{4, 3, 2}}, {{3, 0, 0}, {2, 0, 0}}, {{3, 0, 0}, {2, 0, 0}}, {{2, 1, 0}}, {{3, 0, 0}}},
        {{{4, 3, 2}}, {{3, 0, 0}, {2, 0, 0}}, {{3, 0, 0}, {2, 1, 0}}, {{2, 0, 0}}, {{2, 0, 0}}},
        {{{4, 3, 2}}, {{3, 0, 0}, {2, 1, 0}}, {{2, 0, 0}, {2, 0, 0}}, {{2, 0, 0}}, {{2, 0, 0}}},
        {{{4, 3, 2}}, {{2, 0, 0}, {2, 0, 0}}, {{2, 0, 0}, {2, 0, 0}}, {{2, 0, 0}}, {{2, 0, 0}}},
        {{{4, 2, 2}}, {{2, 0, 0}, {2, 0, 0}}, {{2, 0, 0}, {2, 0, 0}}, {{2, 0, 0}}, {{2, 0, 0}}},
    };
    REQUIRE(r.table.size() == table.size());
    for (size_t row = 0; row < table.size(); ++row) {
        const RiggedConfig& got = r.table[row];
        for (int a = 1; a <= 5; ++a) {
            const auto& want = table[row][a - 1];
            REQUIRE(got.part(a).size() == want.size());
            for (size_t j = 0; j < want.size(); ++j) {
                CHECK(got.part(a)[j].len == want[j][0]);
                CHECK(vacancy(got, a, want[j][0]) == want[j][1]);
                CHECK(got.part(a)[j].rig == want[j][2]);
            }
        }
    }
    CHECK(delta_s_inv(r.rc, r.column, Label::kr(5)) == s);
    CHECK(phi_inv(5, phi(s)) == s);
}

TEST_CASE("delta_s on a lone spinor") {
    for (int n = 4; n <= 6; ++n) {
        std::vector<int> lam(n, 0);
        lam[n - 1] = 1;
        RiggedConfig e = RiggedConfig::empty(n, weight_from_lambda(n, lam), {Label::kr(n)});
        SpinorResult r = delta_s(e);
        std::vector<int> want;
        for (int v = n; v >= 1; --v) want.push_back(v);
        CHECK(r.column == top(want));
        CHECK(r.rc == RiggedConfig::empty(n, Weight(n), {}));
    }
}

TEST_CASE("tj keeps vacancy numbers") {
    const int n = 5;
    for (const char* spec : {"KR:3,KR:1", "HatNm1,KR:2", "E:5,KR:1", "E:4,KR:2"}) {
        const TensorSpec B = parse_spec(spec, n);
        for (const Weight& w : dominant_below(n, B))
            for (const auto& rc : enumerate_rc(n, w, B)) {
                RiggedConfig t = tj(rc);
                REQUIRE(is_valid_rc(t));
                for (int a = 1; a <= n; ++a)
                    for (int i = 1; i <= 4; ++i) REQUIRE(vacancy(t, a, i) == vacancy(rc, a, i));
                REQUIRE(tj_inv(t, B[0]) == rc);
            }
    }
    RiggedConfig one = RiggedConfig::empty(4, weight_from_lambda(4, {1, 0, 0, 0}), parse_spec("KR:1", 4));
    CHECK(tj(one) == one);
}

TEST_CASE("bj adds strings of rigging zero") {
    const int n = 4;
    const TensorSpec B = parse_spec("KR:1,KR:2", n);
    for (const Weight& w : dominant_below(n, B))
        for (const auto& rc : enumerate_rc(n, w, B)) {
            RiggedConfig b = bj(rc);
            CHECK(b.B == parse_spec("KR:1,KR:1,KR:1", n));
            CHECK(b.m(1, 1) == rc.m(1, 1) + 1);
            bool zero = false;
            for (const Row& r : b.part(1)) zero |= r.len == 1 && r.rig == 0;
            CHECK(zero);
        }
}

TEST_CASE("delta_inv agrees with inverting the delta table") {
    const int n = 4;
    for (const char* spec : {"KR:1,KR:1,KR:2,KR:2,KR:2", "KR:1,KR:3,KR:4", "KR:1,KR:2,KR:3", "KR:1,KR:1,KR:1,KR:1"}) {
        const TensorSpec B = parse_spec(spec, n);
        std::map<std::pair<RiggedConfig, Letter>, RiggedConfig> table;
        for (const Weight& w : dominant_below(n, B))
            for (const auto& rc : enumerate_rc(n, w, B)) {
                DeltaResult d = delta(rc);
                REQUIRE(d.rc.lambda == rc.lambda - letter_weight(n, d.letter));
                REQUIRE(table.emplace(std::make_pair(d.rc, d.letter), rc).second);
            }
        for (const auto& [key, rc] : table) REQUIRE(delta_inv(key.first, key.second) == rc);
        // a letter that is not in the table has no preimage
        const TensorSpec rest(B.begin() + 1, B.end());
        for (const Weight& w : dominant_below(n, rest))
            for (const auto& rc : enumerate_rc(n, w, rest))
                for (Letter v : {1, 2, 3, 4, -4, -3, -2, -1}) {
                    if (!is_dominant(w + letter_weight(n, v))) continue;
                    bool in_table = table.count({rc, v}) > 0;
                    if (in_table) continue;
                    CHECK_THROWS_AS(delta_inv(rc, v), std::domain_error);
                }
    }
}

TEST_CASE("path maps") {
    const int n = 4;
    TensorElement p{{Label::kr(2), Label::kr(1)}, {top({2, 1}), top({3})}};
    TensorElement s = ts(n, p);
    CHECK(s.str() == "2 ⊗ 1 ⊗ 3");
    CHECK(s.labels == parse_spec("KR:1,KR:1,KR:1", n));
    CHECK(lh(p).str() == "3");
    CHECK(rh(n, p).str() == "21");
    CHECK(rh(n, TensorElement{{Label::kr(1), Label::kr(1)}, {top({-1}), top({1})}}).str() == "1");
    const int m = 6;
    TensorElement q{{Label::kr(1), Label::kr(4)}, {top({1}), top({-2, -3, 3, 1})}};
    CHECK(bs(m, q).str() == "1 ⊗ 2̅3̅3 ⊗ 1");
    CHECK(bs(m, q) == dual_star(ts(m, dual_star(q, m)), m));
    TensorElement e = emb_p(n, TensorElement{{Label::kr(1)}, {top({1})}});
    CHECK(e.str() == "1 ⊗ 1");
}
