#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dkr/crystal.hpp"
#include "dkr/rootdata.hpp"

namespace dkr {

struct Row {
    int len = 0;
    int rig = 0;
    bool operator==(const Row&) const = default;
    auto operator<=>(const Row&) const = default;
};

// Rows sorted by (len, rig) descending; compared as multisets.
using RiggedPartition = std::vector<Row>;
using Shape = std::vector<int>;  // partition, parts descending

struct RiggedConfig {
    int n = 0;
    Weight lambda;
    TensorSpec B;
    std::vector<RiggedPartition> nu;  // nu[a-1] for a = 1..n

    static RiggedConfig empty(int n, const Weight& lambda, const TensorSpec& B);

    RiggedPartition& part(int a) { return nu[a - 1]; }
    const RiggedPartition& part(int a) const { return nu[a - 1]; }
    void normalize();
    int m(int a, int i) const;  // rows of length i in nu^(a)
    std::vector<Shape> shapes() const;
    std::string str() const;

    bool operator==(const RiggedConfig& o) const = default;
    auto operator<=>(const RiggedConfig& o) const {
        if (auto c = n <=> o.n; c != 0) return c;
        if (auto c = lambda <=> o.lambda; c != 0) return c;
        if (auto c = B <=> o.B; c != 0) return c;
        return nu <=> o.nu;
    }
};

// Coefficients of L in the Lambda basis. B^{a,1} gives Lambda_a, HatNm1 gives
// omega_{n-1} = Lambda_{n-1} + Lambda_n, E:n gives omega_n = 2 Lambda_n and
// E:n-1 gives omegabar_n = 2 Lambda_{n-1}. HatN / HatBarN count like E:n / E:n-1.
std::vector<int> l_coeffs(int n, const TensorSpec& B);
Weight l_vector(int n, const TensorSpec& B);

// |nu^(a)| for a = 1..n, or nullopt when L - lambda is not a nonnegative
// integral combination of simple roots.
std::optional<std::vector<int>> config_sizes(int n, const Weight& lambda, const TensorSpec& B);

// p_i^(a) for the given shapes and L coefficients.
int vacancy(int n, const std::vector<int>& lc, const std::vector<Shape>& shapes, int a, int i);
int vacancy(const RiggedConfig& rc, int a, int i);

bool is_admissible(int n, const std::vector<int>& lc, const std::vector<Shape>& shapes);
bool is_admissible(const RiggedConfig& rc);
// Admissible, size constraint satisfied, and every rigging in [0, p].
bool is_valid_rc(const RiggedConfig& rc);

// All admissible shapes for (lambda, B) in a fixed order.
std::vector<std::vector<Shape>> admissible_shapes(int n, const Weight& lambda, const TensorSpec& B);
// Sorted.
std::vector<RiggedConfig> enumerate_rc(int n, const Weight& lambda, const TensorSpec& B);

// cc without the riggings, i.e. the quadratic form on the shapes.
int cc_shape(int n, const std::vector<Shape>& shapes);
int cc(const RiggedConfig& rc);

RiggedConfig theta(const RiggedConfig& rc);
bool is_singular(const RiggedConfig& rc, int a, int i);

// Doubles every length and rigging, lambda and the factors of B:
// KR(a) (a <= n-2) -> KR(a), KR(a); KR(n) -> E:n; KR(n-1) -> E:n-1.
TensorSpec double_spec(int n, const TensorSpec& B);
RiggedConfig emb_rc(const RiggedConfig& rc);
// Inverse of emb_rc; throws when a length, rigging or lambda is odd.
RiggedConfig emb_rc_inverse(const RiggedConfig& rc, const TensorSpec& B);

}  // namespace dkr
