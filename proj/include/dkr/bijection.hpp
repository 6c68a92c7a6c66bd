#pragma once

#include <climits>
#include <vector>

#include "dkr/crystal.hpp"
#include "dkr/rc.hpp"

namespace dkr {

constexpr int kInf = INT_MAX;

// Lengths selected by delta; kInf when unset. ell[a] for a = 1..n and
// ellbar[a] for a = 1..n-2 (index 0 and the rest unused).
struct DeltaTrace {
    std::vector<int> ell, ellbar;
};

struct DeltaResult {
    RiggedConfig rc;
    Letter letter = 0;
    DeltaTrace trace;
};

Weight letter_weight(int n, Letter v);

// delta removes the leftmost B^{1,1}; delta_tilde = theta . delta . theta on
// the rightmost B^{1,1}.
DeltaResult delta(const RiggedConfig& rc);
DeltaResult delta_tilde(const RiggedConfig& rc);
// Preimage of (rc, letter) under delta; throws std::domain_error when there is none.
RiggedConfig delta_inv(const RiggedConfig& rc, Letter letter);

// Splitting of the leftmost factor: KR(k) (2 <= k <= n-2) -> KR(1), KR(k-1);
// HatNm1 -> KR(1), KR(n-2); E:n, E:n-1 -> KR(1), HatNm1. KR(1) is left as is.
// The result of splitting lab, or nullopt if lab cannot be split.
std::optional<std::pair<Label, Label>> split_label(int n, Label lab);
RiggedConfig tj(const RiggedConfig& rc);
// Undoes tj; the leftmost factor of the result is lab.
RiggedConfig tj_inv(const RiggedConfig& rc, Label lab);
// Same on the rightmost factor: B' (x) lab -> B' (x) B-hat^{k-1,1} (x) B^{1,1}.
RiggedConfig bj(const RiggedConfig& rc);

struct SpinorResult {
    RiggedConfig rc;
    Column column;
    std::vector<DeltaResult> steps;    // the n delta results on the doubled side
    std::vector<RiggedConfig> table;  // emb_rc(rc) followed by the configuration after each step
};
SpinorResult delta_s(const RiggedConfig& rc);
RiggedConfig delta_s_inv(const RiggedConfig& rc, const Column& column, Label lab);

// Paths. Factors are stored leftmost first.
TensorElement ts(int n, const TensorElement& p);
TensorElement bs(int n, const TensorElement& p);
TensorElement lh(const TensorElement& p);
// Drops the rightmost factor; what is left need not be highest, so it is
// raised to the top of its classical component, as * o lh o * does.
TensorElement rh(int n, const TensorElement& p);
TensorElement raise_to_highest(int n, const TensorElement& p);
TensorElement emb_p(int n, const TensorElement& p);
// E factors weigh as the hat columns they are, so emb_p doubles the weight.
Weight path_weight(int n, const TensorElement& p);

TensorElement phi(const RiggedConfig& rc);
TensorElement phi_tilde(const RiggedConfig& rc);
RiggedConfig phi_inv(int n, const TensorElement& p);

// Phi with the delta traces of every delta application, in order.
TensorElement phi_traced(const RiggedConfig& rc, std::vector<DeltaResult>* trace);

}  // namespace dkr
