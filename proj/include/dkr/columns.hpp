#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace dkr {

// Letters are nonzero integers: v > 0 is the unbarred letter v, v < 0 is the
// barred letter |v|.
using Letter = int;

enum class Order { Less, Equal, Greater, Incomparable };

// Position in the chain 1 < ... < n-1 < {n, nbar} < (n-1)bar < ... < 1bar.
// n and nbar get n and n+1 respectively, which is only meaningful when they
// are compared against other letters.
int letter_pos(int n, Letter v);
Order compare(int n, Letter a, Letter b);
void check_letter(int n, Letter v);
std::string letter_str(Letter v);  // "3", "-3"

struct Column {
    std::vector<Letter> m;  // m[0] is the bottom entry m_1

    Column() = default;
    explicit Column(std::vector<Letter> bottom_to_top) : m(std::move(bottom_to_top)) {}
    static Column from_top(const std::vector<Letter>& top_to_bottom);

    int height() const { return static_cast<int>(m.size()); }
    bool empty() const { return m.empty(); }
    bool contains(Letter v) const;
    int row_of(Letter v) const;  // 1-based row of the lowest occurrence, 0 if absent
    Letter at(int row) const { return m[row - 1]; }
    std::vector<Letter> to_top() const;

    std::string str() const;  // paper abbreviation, e.g. "3̄61"

    bool operator==(const Column&) const = default;
    auto operator<=>(const Column&) const = default;
};

struct ColumnHash {
    size_t operator()(const Column& c) const noexcept;
};

// Rows hold a matching pair only when m_a = p, m_b = pbar and a < b.
int dist(const Column& col, int a, int b);

// dist of the pair (pbar, p) if both letters occur. For p = n the pair sits in
// an alternating run and the closest two occurrences are used.
std::optional<int> pair_dist(const Column& col, int n, int p);

struct ColumnVerdict {
    bool cond1 = false;
    bool cond2 = false;
};
ColumnVerdict validate_column(const Column& col, int n);

enum class HeightN { Omega, OmegaBar };
bool validate_height_n(const Column& col, int n, HeightN variant);

enum class Spinor { N, NMinus1 };  // B(Lambda_n), B(Lambda_{n-1})
bool validate_spinor(const Column& col, int n, Spinor variant);

// Order in which a pair (n, nbar) is placed when fill has to insert one. It
// only happens for the shifted fills used on height-n hat columns.
enum class ForkOrder { NBelow, NBarBelow };

Column fill(const Column& col, int k, int n, ForkOrder fork = ForkOrder::NBelow);
Column drop(const Column& col, int n);

// Shifted variants: shift 2 gives the tilde maps, shift 1 the hat maps.
Column fill_shifted(const Column& col, int k, int n, int shift, ForkOrder fork = ForkOrder::NBelow);
Column drop_shifted(const Column& col, int n, int shift);

// Every filling the dist conditions admit, without taking the minimal pair at
// each step; the first entry is not necessarily fill(). Used to resolve the
// fork letters on height-n hat columns.
std::vector<Column> fill_all(const Column& col, int k, int n);
std::vector<Column> fill_shifted_all(const Column& col, int k, int n, int shift);

// Inserts v at its sorted position. Not meant for n or nbar.
Column insert_sorted(const Column& col, int n, Letter v);

}  // namespace dkr
