#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dkr/columns.hpp"
#include "dkr/rootdata.hpp"

namespace dkr {

// KR(k) is B^{k,1}; KR(n-1), KR(n) are the spinor crystals. The hat kinds are
// the height n-1 / n column sets, and EN, ENm1 the images of the spinor
// crystals under emb_B inside HatN and HatBarN.
enum class Kind { KR, HatNm1, HatN, HatBarN, EN, ENm1 };

struct Label {
    Kind kind = Kind::KR;
    int k = 1;  // column height of the elements

    static Label kr(int k) { return {Kind::KR, k}; }
    static Label of(int n, Kind kind);
    static Label parse(const std::string& s, int n);  // "KR:2", "HatNm1", "HatN", "HatBarN", "E:n", "E:n-1"

    std::string str(int n) const;
    bool is_spinor(int n) const { return kind == Kind::KR && k >= n - 1; }
    bool operator==(const Label&) const = default;
    auto operator<=>(const Label&) const = default;
};

// Column-level operations. Null results are std::nullopt.
bool in_label(const Column& b, int n, Label lab);
std::vector<Column> enumerate_columns(int n, Label lab);  // direct predicate enumeration, sorted
Column highest_column(int n, Label lab);                  // u(B)

std::optional<Column> column_f(const Column& b, int n, Label lab, int i);
std::optional<Column> column_e(const Column& b, int n, Label lab, int i);
int column_eps(const Column& b, int n, Label lab, int i);
int column_phi(const Column& b, int n, Label lab, int i);
Weight column_weight(const Column& b, int n);

std::optional<Column> affine_f0(const Column& b, int n, Label lab);
std::optional<Column> affine_e0(const Column& b, int n, Label lab);

Column sigma(const Column& b, int n, Label lab);
int classical_component(const Column& b, int n, Label lab);

// Letter-wise dual; the column is reversed. Labels are preserved.
Letter dual_letter(int n, Letter v);
Column dual_column(const Column& b, int n);
int tau(int n, int i);

// A finite affine crystal with all operators tabulated. -1 encodes null.
struct Crystal {
    int n = 0;
    Label label;
    std::vector<Column> elems;
    std::unordered_map<Column, int, ColumnHash> index;
    std::vector<std::vector<int>> f, e;          // [i][b], i = 0..n
    std::vector<std::vector<int8_t>> eps, phi;  // [i][b]
    std::vector<Weight> wt;
    int u = 0;

    int size() const { return static_cast<int>(elems.size()); }
    int find(const Column& c) const {
        auto it = index.find(c);
        return it == index.end() ? -1 : it->second;
    }
    int at(const Column& c) const;  // throws when absent
};

// Built on first use and then shared read-only.
const Crystal& get_crystal(int n, Label lab);

// BFS closure of u(B) under all f_i, e_i, 0 <= i <= n, from the column-level ops.
std::vector<Column> bfs_closure(int n, Label lab);

// Crystal axioms: e/f inverse pairs, eps/phi string lengths and the weight
// relation phi - eps = <h_i, wt> (level zero for i = 0). Returns a list of
// violations, empty when everything holds.
std::vector<std::string> check_axioms(const Crystal& c);

// ---- tensor products -------------------------------------------------------

using TensorSpec = std::vector<Label>;  // B_L ... B_1, leftmost first

std::string spec_str(const TensorSpec& B, int n);
TensorSpec parse_spec(const std::string& s, int n);

struct TensorElement {
    std::vector<Label> labels;  // leftmost factor b_L first
    std::vector<Column> cols;

    int size() const { return static_cast<int>(cols.size()); }
    std::string str() const;  // "3̅ ⊗ 4̅ ⊗ 43"
    bool operator==(const TensorElement&) const = default;
    auto operator<=>(const TensorElement&) const = default;
};

// Index form of a tensor element, used in the hot loops.
struct Tensor {
    std::vector<const Crystal*> cr;
    std::vector<int> idx;

    static Tensor from(int n, const TensorElement& t);
    TensorElement element() const;
};

int tensor_eps(const Tensor& t, int i);
int tensor_phi(const Tensor& t, int i);
// Factor position (0 = leftmost) that f_i (resp. e_i) acts on, or -1.
int tensor_f_pos(const Tensor& t, int i);
int tensor_e_pos(const Tensor& t, int i);
bool tensor_f(Tensor& t, int i);  // in place; false when null
bool tensor_e(Tensor& t, int i);
Weight tensor_weight(const Tensor& t);
bool is_classically_highest(const Tensor& t);

// Two-factor helpers on L (x) R with flat index x = iL * |R| + iR.
int pair_f(const Crystal& L, const Crystal& R, int x, int i);
int pair_e(const Crystal& L, const Crystal& R, int x, int i);
int pair_eps(const Crystal& L, const Crystal& R, int x, int i);
int pair_phi(const Crystal& L, const Crystal& R, int x, int i);

// All classically highest elements of B grouped by weight.
std::vector<std::vector<int>> highest_elements(int n, const TensorSpec& B);
std::vector<TensorElement> enumerate_paths(int n, const Weight& lambda, const TensorSpec& B);

TensorElement dual_star(const TensorElement& t, int n);

// ---- hat isomorphisms and the doubling embedding ---------------------------

// Classical and affine isomorphism Hat -> B1 (x) B2 where (B1, B2) is
// (KR n, KR n-1), (KR n, KR n) or (KR n-1, KR n-1), as flat pair indices.
struct HatIso {
    Label hat, left, right;
    std::vector<int> to_pair;
    std::vector<int> from_pair;
};
const HatIso& hat_iso(int n, Kind hat);

// emb_B on B^{k,1}. For k <= n-2 the image is a flat pair index into
// B^{k,1} (x) B^{k,1}; for spinors an index into HatN (k = n) or HatBarN
// (k = n-1).
struct Embedding {
    Label source;
    Label target;  // KR(k) for the pair form, HatN/HatBarN for spinors
    std::vector<int> image;
};
const Embedding& emb_b(int n, int k);

}  // namespace dkr
