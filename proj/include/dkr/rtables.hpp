#pragma once

#include <string>
#include <vector>

#include "dkr/crystal.hpp"

namespace dkr {

// One tabulated value of the R-matrix on a highest element of
// B^{k',1} (x) B^{k,1}, k' <= k, with the tabulated local energy.
struct OracleEntry {
    std::string case_id;  // "1", "2a", ..., "5b", "k'|n", "k'|n-1", "n|n", "n-1|n-1", "n-1|n"
    int row = 0;          // 1-based row of the case, in printed order
    std::string params;
    TensorElement input, output;
    int h = 0;
    std::string error;  // set when no row applies or the row cannot be written down
    bool swapped = false;  // image of a printed entry under n <-> nbar
};

// Every element the tables produce for B^{kp,1} (x) B^{k,1} in rank n, kp <= k.
// Inputs are only kept when both columns are elements of the crystals; whether
// they are highest is left to the caller. For k' = k the printed rows are
// returned as they stand even though R is the identity there.
std::vector<OracleEntry> oracle_cases(int n, int kp, int k);

}  // namespace dkr
