#include "dkr/rootdata.hpp"

#include <cstdlib>
#include <stdexcept>

namespace dkr {

int check_rank(int n) {
    if (n < 4) throw std::invalid_argument("rank must satisfy n >= 4, got " + std::to_string(n));
    return n;
}

static void check_index(int n, int i) {
    if (i < 1 || i > n)
        throw std::out_of_range("node index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

std::optional<std::vector<int>> Weight::lambda_coeffs() const {
    const int n = rank();
    std::vector<int> c(n);
    for (int a = 0; a < n; ++a) {
        int twice = (a < n - 1) ? eps2[a] - eps2[a + 1] : eps2[n - 2] + eps2[n - 1];
        if (twice % 2 != 0) return std::nullopt;
        c[a] = twice / 2;
    }
    // The map eps2 -> c is injective; make sure c really reproduces eps2
    // (it fails for weights outside the weight lattice).
    if (weight_from_lambda(n, c) != *this) return std::nullopt;
    return c;
}

std::vector<int> Weight::lambda() const {
    auto c = lambda_coeffs();
    if (!c) throw std::domain_error("weight " + str() + " is not in the weight lattice");
    return *c;
}

Weight& Weight::operator+=(const Weight& o) {
    if (o.eps2.size() != eps2.size()) throw std::invalid_argument("weight rank mismatch");
    for (size_t i = 0; i < eps2.size(); ++i) eps2[i] += o.eps2[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    if (o.eps2.size() != eps2.size()) throw std::invalid_argument("weight rank mismatch");
    for (size_t i = 0; i < eps2.size(); ++i) eps2[i] -= o.eps2[i];
    return *this;
}

std::string Weight::str() const {
    auto c = lambda_coeffs();
    std::string s;
    if (!c) {
        s = "eps2(";
        for (size_t i = 0; i < eps2.size(); ++i) s += (i ? "," : "") + std::to_string(eps2[i]);
        return s + ")";
    }
    for (size_t a = 0; a < c->size(); ++a) {
        int x = (*c)[a];
        if (x == 0) continue;
        if (x < 0) s += "-";
        else if (!s.empty()) s += "+";
        if (std::abs(x) != 1) s += std::to_string(std::abs(x));
        s += "L" + std::to_string(a + 1);
    }
    return s.empty() ? "0" : s;
}

Weight weight_from_lambda(int n, const std::vector<int>& coeffs) {
    if (static_cast<int>(coeffs.size()) != n) throw std::invalid_argument("lambda coefficient count != n");
    Weight w(n);
    for (int a = 1; a <= n; ++a) {
        if (coeffs[a - 1] == 0) continue;
        w += coeffs[a - 1] * fundamental_weight(n, a);
    }
    return w;
}

Weight simple_root(int n, int i) {
    check_index(n, i);
    Weight w(n);
    if (i < n) {
        w.eps2[i - 1] = 2;
        w.eps2[i] = -2;
    } else {
        w.eps2[n - 2] = 2;
        w.eps2[n - 1] = 2;
    }
    return w;
}

Weight fundamental_weight(int n, int i) {
    check_index(n, i);
    Weight w(n);
    if (i <= n - 2) {
        for (int j = 0; j < i; ++j) w.eps2[j] = 2;
    } else {
        for (int j = 0; j < n; ++j) w.eps2[j] = 1;
        if (i == n - 1) w.eps2[n - 1] = -1;
    }
    return w;
}

Weight omega_weight(int n, int i, bool barred) {
    check_index(n, i);
    if (barred && i != n) throw std::invalid_argument("omega-bar exists only for i = n");
    if (barred) return 2 * fundamental_weight(n, n - 1);
    if (i <= n - 2) return fundamental_weight(n, i);
    if (i == n - 1) return fundamental_weight(n, n - 1) + fundamental_weight(n, n);
    return 2 * fundamental_weight(n, n);
}

int cartan_pairing(int n, int a, int b) {
    check_index(n, a);
    check_index(n, b);
    if (a == b) return 2;
    if (a > b) std::swap(a, b);
    if (b == n) return a == n - 2 ? -1 : 0;
    return b - a == 1 ? -1 : 0;
}

int pair_alpha_with(int n, int a, const Weight& w) {
    check_index(n, a);
    if (w.rank() != n) throw std::invalid_argument("weight rank mismatch");
    auto c = w.lambda_coeffs();
    if (!c) throw std::domain_error("weight lacks a fundamental-weight expansion");
    return (*c)[a - 1];
}

bool is_dominant(const Weight& w) {
    auto c = w.lambda_coeffs();
    if (!c) return false;
    for (int x : *c)
        if (x < 0) return false;
    return true;
}

int inner4(const Weight& x, const Weight& y) {
    int s = 0;
    for (size_t i = 0; i < x.eps2.size(); ++i) s += x.eps2[i] * y.eps2[i];
    return s;
}

}  // namespace dkr
