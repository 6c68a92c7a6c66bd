#include "doctest.h"
#include "dkr/rootdata.hpp"

using namespace dkr;

TEST_CASE("simple roots and fundamental weights") {
    CHECK(simple_root(4, 1).eps2 == std::vector<int>{2, -2, 0, 0});
    CHECK(simple_root(4, 4).eps2 == std::vector<int>{0, 0, 2, 2});
    CHECK(simple_root(5, 5).eps2 == std::vector<int>{0, 0, 0, 2, 2});
    CHECK(fundamental_weight(4, 2).eps2 == std::vector<int>{2, 2, 0, 0});
    CHECK(fundamental_weight(4, 4).eps2 == std::vector<int>{1, 1, 1, 1});
    CHECK(fundamental_weight(5, 4).eps2 == std::vector<int>{1, 1, 1, 1, -1});
    CHECK_THROWS(simple_root(4, 0));
    CHECK_THROWS(fundamental_weight(4, 5));
    CHECK_THROWS(check_rank(3));
}

TEST_CASE("omega weights") {
    CHECK(omega_weight(4, 3).eps2 == std::vector<int>{2, 2, 2, 0});
    CHECK(omega_weight(4, 4, true).eps2 == std::vector<int>{2, 2, 2, -2});
    CHECK_THROWS(omega_weight(4, 3, true));
    for (int n = 4; n <= 7; ++n) {
        Weight d = omega_weight(n, n) - omega_weight(n, n, true);
        Weight want(n);
        want.eps2[n - 1] = 4;
        CHECK(d == want);
    }
}

TEST_CASE("cartan pairing") {
    CHECK(cartan_pairing(4, 2, 4) == -1);
    CHECK(cartan_pairing(4, 3, 4) == 0);
    CHECK(cartan_pairing(5, 1, 1) == 2);
    for (int n = 4; n <= 7; ++n)
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                CHECK(cartan_pairing(n, a, b) == cartan_pairing(n, b, a));
                // (alpha_a | alpha_b) from coordinates, and via the Lambda-expansion of alpha_b
                CHECK(inner4(simple_root(n, a), simple_root(n, b)) == 4 * cartan_pairing(n, a, b));
                CHECK(pair_alpha_with(n, a, simple_root(n, b)) == cartan_pairing(n, a, b));
            }
}

TEST_CASE("lambda basis") {
    Weight w = weight_from_lambda(4, {2, 3, 0, 0});
    CHECK(pair_alpha_with(4, 1, w) == 2);
    CHECK(pair_alpha_with(4, 2, fundamental_weight(4, 2)) == 1);
    CHECK(pair_alpha_with(4, 4, omega_weight(4, 4, true)) == 0);
    CHECK(is_dominant(fundamental_weight(4, 2)));
    CHECK_FALSE(is_dominant(fundamental_weight(4, 1) - fundamental_weight(4, 2)));
    CHECK(is_dominant(Weight(4)));
    Weight half(std::vector<int>{1, 0, 0, 0});
    CHECK_FALSE(half.lambda_coeffs().has_value());
    for (int n = 4; n <= 6; ++n)
        for (int a = 1; a <= n; ++a) {
            auto c = fundamental_weight(n, a).lambda();
            for (int b = 1; b <= n; ++b) CHECK(c[b - 1] == (a == b));
        }
    CHECK(weight_from_lambda(5, {2, 0, 0, 1, 0}).str() == "2L1+L4");
}
