#pragma once

#include <deque>
#include <functional>
#include <string>
#include <vector>

#include "dkr/crystal.hpp"
#include "dkr/rc.hpp"

namespace dkr {

// Outcome of one property over many inputs. Only the first few failures keep
// a description.
struct Check {
    std::string name;
    long cases = 0;
    long failures = 0;
    bool gating = true;  // false: reported, but not part of Suite::ok
    std::vector<std::string> samples;
    std::vector<std::string> notes;  // informational, not failures

    Check() = default;
    explicit Check(std::string nm) : name(std::move(nm)) {}

    void expect(bool ok, const std::function<std::string()>& what);
    void fail(const std::string& what);
    bool ok() const { return failures == 0; }
    bool passed() const { return !gating || ok(); }
    void merge(const Check& o);
};

// Checks in a fixed order, looked up by name.
struct Suite {
    std::deque<Check> checks;  // references stay valid as checks are added
    Check& get(const std::string& name);
    void merge(const Suite& o);
    bool ok() const;
};

struct Cell {
    int n = 0;
    TensorSpec B;
    Weight lambda;
};

// Every sequence of 1..max_factors labels drawn from labels.
std::vector<TensorSpec> specs_up_to(const std::vector<Label>& labels, int max_factors);
// Dominant lambda with config_sizes(lambda, B) defined, sorted.
std::vector<Weight> feasible_weights(int n, const TensorSpec& B);
// Cells over KR(1..n) with at most max_factors factors.
std::vector<Cell> sweep_cells(int n, int max_factors);

// Per-cell properties. threads = 0 picks the hardware concurrency.
Suite check_bijection(const std::vector<Cell>& cells, unsigned threads = 0);  // Phi bijective, inverses
Suite check_stat(const std::vector<Cell>& cells, unsigned threads = 0);       // cc = D(Phi-tilde)
Suite check_xm(const std::vector<Cell>& cells, unsigned threads = 0);         // X = M
Suite check_lemmas(const std::vector<Cell>& cells, unsigned threads = 0);     // commutations, cc and D under splitting, traces
Suite check_corresp(const std::vector<Cell>& cells, unsigned threads = 0);    // the six squares
Suite check_emb(const std::vector<Cell>& cells, unsigned threads = 0);        // Phi o emb_rc = emb_p o Phi, D doubling

// cc(tj(rc)) - cc(rc) and D(bs(b)) - D(b) with hat and E factors at the split end, and the
// one-factor identity D(bs(b)) - D(b) = 1, for rank n with at most
// extra other factors.
Suite check_hat_lemmas(int n, int extra);

// cc(rc) = D(Phi-tilde(rc)) over RC(lambda, B); the notes hold the value histogram.
Check verify_stat(int n, const Weight& lambda, const TensorSpec& B);

// f_0 = sigma f_1 sigma, e_0 = sigma e_1 sigma on B^{k,1}, k <= n-2.
Check check_affine_sigma(int n);
// The hat isomorphisms commute with every f_i, e_i, 0 <= i <= n.
Check check_hat_isos(int n);
// The tabulated R-matrix and H on highest elements of B^{k',1} (x) B^{k,1},
// k' <= k <= n, against compute_r and local_energy.
Suite check_rtables(int n);
// Printed fill/drop values and drop(fill(b)) = b on B(omega_l) columns for n = 4, 5.
Suite check_fill_drop();

}  // namespace dkr
