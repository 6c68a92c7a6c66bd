#pragma once

#include <string>
#include <vector>

#include "dkr/crystal.hpp"

namespace dkr {

struct EnergyTerm {
    bool local = true;  // H term (i, j) or factor term (j)
    int i = 0, j = 0;   // positions from the right, 1-based
    int value = 0;
};

struct EnergyReport {
    int value = 0;
    std::vector<EnergyTerm> terms;
};

// D_{B^{k,1}}: j for b in the classical component B(Lambda_{k-2j}). Spinors
// give 0. Hat labels use the same component count.
int factor_energy(const Column& b, int n, Label lab);

// Rewrites hat and E factors as KR tensors: HatNm1 -> KR(n) (x) KR(n-1),
// HatN and E:n -> KR(n) (x) KR(n), HatBarN and E:n-1 -> KR(n-1) (x) KR(n-1).
// E columns are treated as the hat columns they are.
TensorElement expand_to_kr(int n, const TensorElement& t);

// D_B of the DNY formula, positions counted from the right. Hat and E factors
// are expanded first.
EnergyReport tensor_energy(int n, const TensorElement& t);
int tensor_energy_value(int n, const Tensor& t);

}  // namespace dkr
