#include "doctest.h"
#include "dkr/energy.hpp"
#include "dkr/fermionic.hpp"
#include "dkr/rc.hpp"

#include <algorithm>

using namespace dkr;

namespace {
QPolynomial poly(std::map<int, long long> c) { return QPolynomial{std::move(c)}; }

// Sum of q^cc over every rigged configuration, riggings enumerated one by one.
QPolynomial brute_m(int n, const Weight& lambda, const TensorSpec& B) {
    QPolynomial out;
    for (const RiggedConfig& rc : enumerate_rc(n, lambda, B)) out += QPolynomial::monomial(cc(rc));
    return out;
}

struct Cell {
    int n;
    std::vector<int> lambda;
    const char* B;
};

const std::vector<Cell> small_cells = {
    {4, {0, 0, 0, 0}, "KR:1,KR:1"},     {4, {0, 1, 0, 0}, "KR:1,KR:1"},      {4, {1, 0, 0, 0}, "KR:1,KR:2"},
    {4, {0, 0, 1, 1}, "KR:3,KR:4"},     {4, {1, 0, 0, 0}, "KR:1,KR:1,KR:1"}, {4, {0, 0, 0, 0}, "KR:2,KR:2"},
    {4, {0, 0, 0, 2}, "KR:4,KR:4,KR:2"}, {5, {1, 0, 0, 0, 1}, "KR:5,KR:1"},  {5, {0, 0, 0, 0, 1}, "KR:5,KR:1,KR:1"},
};
}  // namespace

TEST_CASE("qbinomial") {
    CHECK(qbinomial(1, 1) == poly({{0, 1}, {1, 1}}));
    for (int p = 0; p <= 5; ++p) CHECK(qbinomial(0, p) == poly({{0, 1}}));
    CHECK(qbinomial(2, 2) == poly({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
    CHECK(qbinomial(2, 2).str() == "1 + q + 2q^2 + q^3 + q^4");
    // symmetric in m, p and C(m+p, m) at q = 1
    CHECK(qbinomial(3, 4) == qbinomial(4, 3));
    CHECK(qbinomial(3, 4).at_one() == 35);
}

TEST_CASE("X = M on the D_4 example cell") {
    const int n = 4;
    Weight lambda = weight_from_lambda(n, {0, 1, 0, 0});
    TensorSpec B = parse_spec("KR:1,KR:1,KR:2,KR:2,KR:2", n);
    XMReport r = verify_xm(n, lambda, B);
    CHECK(r.equal);
    CHECK(r.differing_exponents.empty());
    CHECK(r.x.coeff(10) >= 1);
}

TEST_CASE("m_sum equals the rigging-by-rigging sum") {
    for (const Cell& c : small_cells) {
        CAPTURE(c.B);
        Weight lambda = weight_from_lambda(c.n, c.lambda);
        TensorSpec B = parse_spec(c.B, c.n);
        QPolynomial m = m_sum(c.n, lambda, B);
        CHECK(m == brute_m(c.n, lambda, B));
        CHECK(m.at_one() == static_cast<long long>(enumerate_rc(c.n, lambda, B).size()));
        QPolynomial x = x_sum(c.n, lambda, B);
        CHECK(x.at_one() == static_cast<long long>(enumerate_paths(c.n, lambda, B).size()));
        CHECK(x == m);
    }
}

TEST_CASE("lambda = L and infeasible lambda") {
    const int n = 4;
    for (const char* s : {"KR:1", "KR:2,KR:1", "KR:4,KR:3,KR:1"}) {
        TensorSpec B = parse_spec(s, n);
        Weight L = l_vector(n, B);
        CHECK(x_sum(n, L, B) == poly({{0, 1}}));
        CHECK(m_sum(n, L, B) == x_sum(n, L, B));
    }
    // 2 Lambda_1 - Lambda_1 is not in the root lattice.
    TensorSpec B = parse_spec("KR:1,KR:1", n);
    Weight lambda = weight_from_lambda(n, {1, 0, 0, 0});
    CHECK(m_sum(n, lambda, B).is_zero());
    CHECK(x_sum(n, lambda, B).is_zero());
}

TEST_CASE("X(0, B^{1,1} (x) B^{1,1}) is the energy of its only path") {
    const int n = 4;
    TensorSpec B = parse_spec("KR:1,KR:1", n);
    Weight zero = weight_from_lambda(n, {0, 0, 0, 0});
    auto paths = enumerate_paths(n, zero, B);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].str() == "1̅ ⊗ 1");
    QPolynomial x = x_sum(n, zero, B);
    CHECK(x == QPolynomial::monomial(tensor_energy(n, paths[0]).value));
    CHECK(x == poly({{2, 1}}));
}

TEST_CASE("X is invariant under permuting the factors") {
    const int n = 4;
    TensorSpec B = parse_spec("KR:1,KR:2,KR:4", n);
    std::sort(B.begin(), B.end());
    Weight L = l_vector(n, B);
    std::vector<Weight> lambdas = {L, L - simple_root(n, 1), L - simple_root(n, 4) - simple_root(n, 2),
                                   weight_from_lambda(n, {0, 1, 0, 1}), weight_from_lambda(n, {0, 0, 0, 1})};
    for (const Weight& lambda : lambdas) {
        QPolynomial ref = x_sum(n, lambda, B);
        TensorSpec P = B;
        do {
            CHECK(x_sum(n, lambda, P) == ref);
        } while (std::next_permutation(P.begin(), P.end()));
    }
}
