#include "doctest.h"
#include "dkr/verify.hpp"

#include <algorithm>

using namespace dkr;

namespace {
void require_ok(const Suite& s) {
    for (const Check& c : s.checks) {
        CAPTURE(c.name);
        CAPTURE(c.samples.empty() ? std::string() : c.samples.front());
        CHECK(c.passed());
        CHECK(c.cases > 0);
    }
}
}  // namespace

TEST_CASE("sweep cells") {
    auto specs = specs_up_to({Label::kr(1), Label::kr(2)}, 2);
    CHECK(specs.size() == 6);
    auto w = feasible_weights(4, parse_spec("KR:1,KR:1", 4));
    CHECK(w.size() == 3);  // 2 Lambda_1, Lambda_2, 0
    CHECK(sweep_cells(4, 1).size() == 5);  // KR:2 has lambda = Lambda_2 and 0
}

TEST_CASE("small sweep passes every suite") {
    auto cells = sweep_cells(4, 2);
    require_ok(check_bijection(cells, 2));
    require_ok(check_stat(cells, 2));
    require_ok(check_xm(cells, 2));
    require_ok(check_corresp(cells, 2));
    require_ok(check_emb(cells, 2));
    Suite lem = check_lemmas(cells, 2);
    for (const Check& c : lem.checks) CHECK(c.passed());
}

TEST_CASE("stat on the D_4 example cell reports 10") {
    Check c = verify_stat(4, weight_from_lambda(4, {0, 1, 0, 0}), parse_spec("KR:1,KR:1,KR:2,KR:2,KR:2", 4));
    CHECK(c.ok());
    REQUIRE(c.notes.size() == 1);
    CHECK(c.notes[0].find(" 10:") != std::string::npos);
}

TEST_CASE("a failing cell is reported, not thrown") {
    Check c("demo");
    c.expect(true, [] { return "unused"; });
    c.expect(false, [] { return "first"; });
    CHECK(c.cases == 2);
    CHECK(c.failures == 1);
    CHECK(c.samples == std::vector<std::string>{"first"});
    c.gating = false;
    CHECK(c.passed());
}

TEST_CASE("printed R-matrix table oracle for n = 5") {
    Suite s = check_rtables(5);
    CHECK(s.get("every highest element is tabulated").ok());
    CHECK(s.get("tabulated R agrees with the computed R").ok());
    // The only H disagreements are case 1 row 1 with k' = k.
    const Check& h = s.get("tabulated H agrees with the computed H");
    CHECK(h.failures == 5);
    for (const std::string& x : h.samples) CHECK(x.find("case 1 row 1") != std::string::npos);
    // 2b and 5b need n >= 7.
    CHECK(s.get("all cases and spinor tables are exercised").failures == 2);
}
