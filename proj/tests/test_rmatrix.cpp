#include "doctest.h"
#include "dkr/rmatrix.hpp"

#include <stdexcept>

using namespace dkr;

namespace {
Column top(std::vector<int> v) { return Column::from_top(v); }

std::vector<Label> kr_labels(int n) {
    std::vector<Label> out;
    for (int k = 1; k <= n; ++k) out.push_back(Label::kr(k));
    return out;
}

// R(b2 (x) b1) and H(b2 (x) b1) for columns given top to bottom.
std::pair<std::string, int> rh(int n, int k2, std::vector<int> c2, int k1, std::vector<int> c1) {
    const Crystal& A = get_crystal(n, Label::kr(k2));
    const Crystal& B = get_crystal(n, Label::kr(k1));
    int x = A.at(top(c2)) * B.size() + B.at(top(c1));
    int y = compute_r(n, Label::kr(k2), Label::kr(k1)).map[x];
    std::string img = B.elems[y / A.size()].str() + " ⊗ " + A.elems[y % A.size()].str();
    return {img, local_energy(n, Label::kr(k2), Label::kr(k1)).h[x]};
}
}  // namespace

TEST_CASE("R commutes with every e_i, f_i") {
    for (int n = 4; n <= 5; ++n)
        for (Label a : kr_labels(n))
            for (Label b : kr_labels(n)) {
                if (n == 5 && a.k + b.k > 6) continue;  // keep the run short
                CHECK(check_r(compute_r(n, a, b)).empty());
            }
}

TEST_CASE("R is an involution and fixes u (x) u") {
    const int n = 4;
    for (Label a : kr_labels(n))
        for (Label b : kr_labels(n)) {
            const RMap& r = compute_r(n, a, b);
            const RMap& s = compute_r(n, b, a);
            for (int x = 0; x < static_cast<int>(r.map.size()); ++x) REQUIRE(s.map[r.map[x]] == x);
            const Crystal& A = get_crystal(n, a);
            const Crystal& B = get_crystal(n, b);
            CHECK(r.map[A.u * B.size() + B.u] == B.u * A.size() + A.u);
            if (a == b)
                for (int x = 0; x < static_cast<int>(r.map.size()); ++x) REQUIRE(r.map[x] == x);
        }
}

TEST_CASE("local energy is invariant under R and classical arrows") {
    const int n = 4;
    for (Label a : kr_labels(n))
        for (Label b : kr_labels(n)) {
            const Crystal& A = get_crystal(n, a);
            const Crystal& B = get_crystal(n, b);
            const HMap& h = local_energy(n, a, b);
            const HMap& g = local_energy(n, b, a);
            const RMap& r = compute_r(n, a, b);
            CHECK(h.h[A.u * B.size() + B.u] == 0);
            for (int x = 0; x < static_cast<int>(h.h.size()); ++x) {
                REQUIRE(g.h[r.map[x]] == h.h[x]);
                for (int i = 1; i <= n; ++i) {
                    int y = pair_f(A, B, x, i);
                    if (y >= 0) REQUIRE(h.h[y] == h.h[x]);
                }
            }
        }
}

TEST_CASE("R and H on highest elements of B^{2,1} (x) B^{3,1}, D_5") {
    const int n = 5;
    // Case 1 of the highest weight tables: [1..l | k+1..p | pbar..qbar | lbar..rbar] (x) [1..k]
    // goes to the same column with k' in place of k, H = k' - l.
    CHECK(rh(n, 2, {5, 4}, 3, {3, 2, 1}) == std::make_pair(std::string("543 ⊗ 21"), 2));
    CHECK(rh(n, 2, {-4, 4}, 3, {3, 2, 1}) == std::make_pair(std::string("4̅43 ⊗ 21"), 2));
    CHECK(rh(n, 2, {-5, 4}, 3, {3, 2, 1}) == std::make_pair(std::string("5̅43 ⊗ 21"), 2));
    CHECK(rh(n, 2, {4, 1}, 3, {3, 2, 1}) == std::make_pair(std::string("431 ⊗ 21"), 1));
    CHECK(rh(n, 2, {2, 1}, 3, {3, 2, 1}) == std::make_pair(std::string("321 ⊗ 21"), 0));
    // l = 1, p = k, q = k + 1, r = 1: k - q is odd, so the second row applies.
    CHECK(rh(n, 2, {-1, 1}, 3, {3, 2, 1}) == std::make_pair(std::string("1̅31 ⊗ 21"), 1));
}

TEST_CASE("apply_r counts positions from the right") {
    const int n = 4;
    TensorElement t{{Label::kr(1), Label::kr(2), Label::kr(1)}, {top({-3}), top({4, 3}), top({1})}};
    TensorElement u = apply_r(n, t, 1);
    CHECK(u.labels == std::vector<Label>{Label::kr(1), Label::kr(1), Label::kr(2)});
    CHECK(apply_r(n, u, 1) == t);
    CHECK_THROWS_AS(apply_r(n, t, 3), std::out_of_range);
}
