#include "dkr/columns.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace dkr {

void check_letter(int n, Letter v) {
    if (v == 0 || std::abs(v) > n)
        throw std::out_of_range("letter " + std::to_string(v) + " outside the D_" + std::to_string(n) + " alphabet");
}

int letter_pos(int n, Letter v) { return v > 0 ? v : 2 * n + 1 + v; }

Order compare(int n, Letter a, Letter b) {
    if (a == b) return Order::Equal;
    if (std::abs(a) == n && std::abs(b) == n) return Order::Incomparable;
    return letter_pos(n, a) < letter_pos(n, b) ? Order::Less : Order::Greater;
}

std::string letter_str(Letter v) { return std::to_string(v); }

Column Column::from_top(const std::vector<Letter>& top) { return Column(std::vector<Letter>(top.rbegin(), top.rend())); }

std::vector<Letter> Column::to_top() const { return {m.rbegin(), m.rend()}; }

bool Column::contains(Letter v) const { return std::find(m.begin(), m.end(), v) != m.end(); }

int Column::row_of(Letter v) const {
    auto it = std::find(m.begin(), m.end(), v);
    return it == m.end() ? 0 : static_cast<int>(it - m.begin()) + 1;
}

std::string Column::str() const {
    if (m.empty()) return "()";
    bool wide = std::any_of(m.begin(), m.end(), [](Letter v) { return std::abs(v) >= 10; });
    std::string s;
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        if (wide && !s.empty()) s += ' ';
        for (char ch : std::to_string(std::abs(*it))) {
            s += ch;
            if (*it < 0) s += "̅";
        }
    }
    return s;
}

size_t ColumnHash::operator()(const Column& c) const noexcept {
    size_t h = 1469598103934665603ull;
    for (Letter v : c.m) h = (h ^ static_cast<size_t>(v + 64)) * 1099511628211ull;
    return h;
}

int dist(const Column& col, int a, int b) {
    if (a < 1 || b < 1 || a > col.height() || b > col.height() || a >= b || col.at(a) <= 0 ||
        col.at(b) != -col.at(a))
        throw std::invalid_argument("rows " + std::to_string(a) + "," + std::to_string(b) + " of " + col.str() +
                                    " do not hold a pair (p, pbar)");
    return col.height() + 1 + a - b;
}

std::optional<int> pair_dist(const Column& col, int n, int p) {
    const int l = col.height();
    if (p != n) {
        int a = col.row_of(p), b = col.row_of(-p);
        if (!a || !b || a > b) return std::nullopt;
        return l + 1 + a - b;
    }
    int best = 0;
    for (int a = 1; a <= l; ++a) {
        if (std::abs(col.at(a)) != n) continue;
        for (int b = 1; b <= l; ++b)
            if (col.at(b) == -col.at(a) && (!best || std::abs(a - b) < best)) best = std::abs(a - b);
    }
    if (!best) return std::nullopt;
    return l + 1 - best;
}

ColumnVerdict validate_column(const Column& col, int n) {
    for (Letter v : col.m) check_letter(n, v);
    ColumnVerdict v;
    v.cond1 = true;
    for (int j = 1; j < col.height(); ++j) {
        Letter x = col.at(j), y = col.at(j + 1);
        if (std::abs(x) == n && y == -x) continue;
        if (compare(n, x, y) != Order::Less) {
            v.cond1 = false;
            break;
        }
    }
    v.cond2 = true;
    for (int p = 1; p <= n; ++p) {
        auto d = pair_dist(col, n, p);
        if (d && *d > p) v.cond2 = false;
    }
    return v;
}

bool validate_height_n(const Column& col, int n, HeightN variant) {
    if (col.height() != n) throw std::invalid_argument("height-n check on column " + col.str());
    const int want_n = variant == HeightN::Omega ? 0 : 1;  // parity of n-j at an entry n
    for (int j = 1; j <= n; ++j) {
        if (col.at(j) == n && (n - j) % 2 != want_n) return false;
        if (col.at(j) == -n && (n - j) % 2 == want_n) return false;
    }
    return true;
}

bool validate_spinor(const Column& col, int n, Spinor variant) {
    if (col.height() != n) throw std::invalid_argument("spinor check on column " + col.str());
    for (Letter v : col.m) check_letter(n, v);
    for (int j = 1; j < n; ++j)
        if (compare(n, col.at(j), col.at(j + 1)) != Order::Less) return false;
    for (int p = 1; p <= n; ++p)
        if (col.contains(p) && col.contains(-p)) return false;
    return validate_height_n(col, n, variant == Spinor::N ? HeightN::Omega : HeightN::OmegaBar);
}

Column insert_sorted(const Column& col, int n, Letter v) {
    const int pv = letter_pos(n, v);
    std::vector<Letter> out;
    out.reserve(col.m.size() + 1);
    bool done = false;
    for (Letter x : col.m) {
        if (!done && letter_pos(n, x) > pv) {
            out.push_back(v);
            done = true;
        }
        out.push_back(x);
    }
    if (!done) out.push_back(v);
    return Column(std::move(out));
}

static Column insert_pair(const Column& col, int n, int i, ForkOrder fork) {
    if (i < n) return insert_sorted(insert_sorted(col, n, i), n, -i);
    std::vector<Letter> out;
    bool done = false;
    auto put = [&] {
        out.push_back(fork == ForkOrder::NBelow ? n : -n);
        out.push_back(fork == ForkOrder::NBelow ? -n : n);
        done = true;
    };
    for (Letter x : col.m) {
        if (!done && letter_pos(n, x) > n) put();
        out.push_back(x);
    }
    if (!done) put();
    return Column(std::move(out));
}

Column fill(const Column& col, int k, int n, ForkOrder fork) {
    const int l = col.height();
    if (k < l || (k - l) % 2 != 0)
        throw std::invalid_argument("fill of " + col.str() + " to height " + std::to_string(k) + ": parity mismatch");
    Column cur = col;
    int prev = 0;
    for (int j = 1; j <= (k - l) / 2; ++j) {
        bool found = false;
        for (int i = prev + 1; i <= n && !found; ++i) {
            if (cur.contains(i) || cur.contains(-i)) continue;
            Column cand = insert_pair(cur, n, i, fork);
            if (*pair_dist(cand, n, i) < i + j) continue;
            bool ok = true;
            for (int a = i + 1; a <= n && ok; ++a) {
                auto d = pair_dist(cand, n, a);
                if (d && *d > a + j) ok = false;
            }
            if (!ok) continue;
            cur = std::move(cand);
            prev = i;
            found = true;
        }
        if (!found)
            throw std::domain_error("fill of " + col.str() + " to height " + std::to_string(k) +
                                    ": no admissible pair at step " + std::to_string(j));
    }
    return cur;
}

static void fill_rec(const Column& cur, int l, int k, int n, int j, int prev, std::vector<Column>& out) {
    if (cur.height() == k) {
        if (std::find(out.begin(), out.end(), cur) == out.end()) out.push_back(cur);
        return;
    }
    for (int i = prev + 1; i <= n; ++i) {
        if (i < n && (cur.contains(i) || cur.contains(-i))) continue;
        for (ForkOrder fo : {ForkOrder::NBelow, ForkOrder::NBarBelow}) {
            if (i < n && fo == ForkOrder::NBarBelow) continue;
            Column cand = insert_pair(cur, n, i, fo);
            if (!validate_column(cand, n).cond1) continue;
            if (*pair_dist(cand, n, i) < i + j) continue;
            bool ok = true;
            for (int a = i + 1; a <= n && ok; ++a) {
                auto d = pair_dist(cand, n, a);
                if (d && *d > a + j) ok = false;
            }
            if (ok) fill_rec(cand, l, k, n, j + 1, i, out);
        }
    }
}

std::vector<Column> fill_all(const Column& col, int k, int n) {
    const int l = col.height();
    if (k < l || (k - l) % 2 != 0)
        throw std::invalid_argument("fill of " + col.str() + " to height " + std::to_string(k) + ": parity mismatch");
    std::vector<Column> out;
    fill_rec(col, l, k, n, 1, 0, out);
    return out;
}

Column drop(const Column& col, int n) {
    std::vector<int> removed;
    int prev = 0;
    for (int j = 1;; ++j) {
        int hit = 0;
        for (int i = prev + 1; i <= n; ++i) {
            auto d = pair_dist(col, n, i);
            if (d && *d >= i + j) {
                hit = i;
                break;
            }
        }
        if (!hit) break;
        removed.push_back(hit);
        prev = hit;
    }
    if (removed.empty()) return col;
    std::vector<Letter> out;
    std::vector<int> fork_left(2, 0);  // one n and one nbar still to remove
    for (int r : removed)
        if (r == n) fork_left = {1, 1};
    for (Letter x : col.m) {
        int a = std::abs(x);
        if (a == n && fork_left[x > 0 ? 0 : 1]) {
            --fork_left[x > 0 ? 0 : 1];
            continue;
        }
        if (a != n && std::find(removed.begin(), removed.end(), a) != removed.end()) continue;
        out.push_back(x);
    }
    return Column(std::move(out));
}

static Column relabel(const Column& col, int by) {
    Column out = col;
    for (Letter& v : out.m) v = v > 0 ? v + by : v - by;
    return out;
}

static void check_shift(const Column& col, int shift) {
    if (shift != 1 && shift != 2) throw std::invalid_argument("shift must be 1 or 2");
    for (Letter v : col.m)
        if (std::abs(v) <= shift)
            throw std::invalid_argument("shifted map applied to " + col.str() + " which contains a letter <= " +
                                        std::to_string(shift));
}

Column fill_shifted(const Column& col, int k, int n, int shift, ForkOrder fork) {
    check_shift(col, shift);
    return relabel(fill(relabel(col, -shift), k, n - shift, fork), shift);
}

std::vector<Column> fill_shifted_all(const Column& col, int k, int n, int shift) {
    check_shift(col, shift);
    std::vector<Column> out;
    for (const Column& c : fill_all(relabel(col, -shift), k, n - shift)) out.push_back(relabel(c, shift));
    return out;
}

Column drop_shifted(const Column& col, int n, int shift) {
    check_shift(col, shift);
    return relabel(drop(relabel(col, -shift), n - shift), shift);
}

}  // namespace dkr
