#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dkr/crystal.hpp"

namespace dkr {

// R : B1 (x) B2 -> B2 (x) B1 on flat pair indices (x = i1 * |B2| + i2).
struct RMap {
    int n = 0;
    Label b1, b2;
    std::vector<int> map;
};

// Local energy H on B2 (x) B1, normalized by H(u(B2) (x) u(B1)) = 0.
struct HMap {
    int n = 0;
    Label b2, b1;
    std::vector<int> h;
};

// Memoized. When DKR_CACHE_DIR is set the maps are also read from and written
// to JSON files there.
const RMap& compute_r(int n, Label b1, Label b2);
const HMap& local_energy(int n, Label b2, Label b1);

// R acting on factors i+1, i counted from the right (position 1 = rightmost).
TensorElement apply_r(int n, const TensorElement& t, int i);
// Same on index form; pos is counted from the left (factors pos, pos+1).
void apply_r_at(int n, Tensor& t, int pos);
int local_energy_at(int n, const Tensor& t, int pos);

// Direct check that R commutes with all e_i, f_i; returns violations.
std::vector<std::string> check_r(const RMap& r);

}  // namespace dkr
