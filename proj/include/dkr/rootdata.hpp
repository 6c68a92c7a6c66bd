#pragma once

#include <optional>
#include <string>
#include <vector>

namespace dkr {

// Rank of D_n; the fork at node n-2 needs n >= 4.
int check_rank(int n);

// A weight held by its epsilon coordinates, doubled so that spin weights stay
// integral.
struct Weight {
    std::vector<int> eps2;

    Weight() = default;
    explicit Weight(int n) : eps2(n, 0) {}
    explicit Weight(std::vector<int> e) : eps2(std::move(e)) {}

    int rank() const { return static_cast<int>(eps2.size()); }

    // Coefficients in the fundamental-weight basis, if the weight lies in
    // their integral span.
    std::optional<std::vector<int>> lambda_coeffs() const;
    std::vector<int> lambda() const;  // throws when not integral

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(int c, Weight a) {
        for (int& x : a.eps2) x *= c;
        return a;
    }
    bool operator==(const Weight&) const = default;
    auto operator<=>(const Weight&) const = default;

    std::string str() const;  // "2L1+L4" style
};

Weight weight_from_lambda(int n, const std::vector<int>& coeffs);

Weight simple_root(int n, int i);
Weight fundamental_weight(int n, int i);
// omega_i, or omega-bar_n when barred (only for i = n).
Weight omega_weight(int n, int i, bool barred = false);

int cartan_pairing(int n, int a, int b);
int pair_alpha_with(int n, int a, const Weight& w);

bool is_dominant(const Weight& w);

// 4*(x|y), so that products of doubled coordinates stay integral.
int inner4(const Weight& x, const Weight& y);

}  // namespace dkr
