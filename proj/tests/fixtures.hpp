#pragma once

#include "dkr/rc.hpp"

namespace fixtures {

// The D_4 configuration of the delta example: lambda = Lambda_2,
// B = (B^{1,1})^2 (x) (B^{2,1})^3.
inline dkr::RiggedConfig delta_example() {
    using namespace dkr;
    RiggedConfig rc = RiggedConfig::empty(4, weight_from_lambda(4, {0, 1, 0, 0}), parse_spec("KR:1,KR:1,KR:2,KR:2,KR:2", 4));
    rc.part(1) = {{2, 0}, {1, 0}, {1, 0}};
    rc.part(2) = {{2, 0}, {2, 0}, {1, 1}, {1, 1}};
    rc.part(3) = {{2, 0}, {1, 0}};
    rc.part(4) = {{3, 0}};
    rc.normalize();
    return rc;
}

// The D_5 configuration of the spinor example: lambda = 2 Lambda_1 + Lambda_4,
// B = B^{5,1} (x) B^{2,1} (x) (B^{1,1})^3.
inline dkr::RiggedConfig spinor_example() {
    using namespace dkr;
    RiggedConfig rc = RiggedConfig::empty(5, weight_from_lambda(5, {2, 0, 0, 1, 0}), parse_spec("KR:5,KR:2,KR:1,KR:1,KR:1", 5));
    rc.part(1) = {{2, 1}};
    rc.part(2) = {{2, 0}, {1, 0}};
    rc.part(3) = {{2, 0}, {1, 0}};
    rc.part(4) = {{1, 0}};
    rc.part(5) = {{2, 0}};
    rc.normalize();
    return rc;
}

}  // namespace fixtures
