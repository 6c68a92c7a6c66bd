// Tabulated R-matrix and local energy on highest elements of
// B^{k',1} (x) B^{k,1}, k' <= k. Columns are written in segment notation:
// [a1..a2 | a3..a4 | ...] lists the entries bottom to top, an unbarred
// segment x..y is x, x+1, ..., y and a barred one xbar..ybar is
// xbar, (x-1)bar, ..., ybar; segments running the wrong way are empty.
//
// A piece "..p | pbar.." with p >= n stands for an alternating run of
// 2(p-n+1) letters n, nbar starting with the letter o (p = n, o = n is the
// plain reading). For k <= n-2 the tables are closed up under the diagram
// automorphism n <-> nbar, which fixes B^{k,1} and commutes with R and H.
#include "dkr/rtables.hpp"

#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace dkr {

namespace {

bool even(int x) { return x % 2 == 0; }

struct Col {
    int n;
    std::vector<Letter> m;
    bool bad = false;

    explicit Col(int rank) : n(rank) {}

    void push(Letter v) {
        if (v == 0 || std::abs(v) > n)
            bad = true;
        else
            m.push_back(v);
    }
    Col& up(int lo, int hi) {
        for (int v = lo; v <= hi; ++v) push(v);
        return *this;
    }
    Col& down(int x, int y) {  // xbar..ybar
        for (int v = x; v >= y; --v) push(-v);
        return *this;
    }
    Col& let(Letter v) {
        push(v);
        return *this;
    }
    Col& alt(Letter first, int len) {
        for (int i = 0; i < len; ++i) push(i % 2 ? -first : first);
        return *this;
    }
    // lo..hi | hibar..qbar
    Col& pb(int lo, int hi, int q, Letter o) {
        if (hi < n || (hi == n && o == n)) return up(lo, hi).down(hi, q);
        if (q > n) bad = true;
        return up(lo, n - 1).alt(o, 2 * (hi - n + 1)).down(n - 1, q);
    }
    Column col() const { return Column(m); }
};

// Output under construction: halves of odd numbers mark the row as unusable.
struct Half {
    bool odd = false;
    int operator()(int x) {
        if (!even(x)) odd = true;
        return x / 2;
    }
};

struct Row {
    int row;
    Col left, right;
    int h;
    bool odd;
};

class Gen {
public:
    Gen(int n, int kp, int k, Label lk, Label lkp) : n_(n), kp_(kp), k_(k), lk_(lk), lkp_(lkp) {}

    // Input u' (x) u; the row list is evaluated only when the input is valid.
    template <class Rows>
    void add(const std::string& id, const std::string& params, const Col& up, const Col& u, Rows rows) {
        if (up.bad || u.bad) return;
        Column a = up.col(), b = u.col();
        if (a.height() != lkp_.k && !(lkp_.is_spinor(n_) && a.height() == n_)) return;
        if (!in_label(a, n_, lkp_) || !in_label(b, n_, lk_)) return;
        TensorElement in{{lkp_, lk_}, {a, b}};
        std::vector<Row> rs = rows();
        if (rs.empty()) {
            push({id, 0, params, in, {}, 0, "no row applies"});
            return;
        }
        for (const Row& r : rs) {
            OracleEntry e{id, r.row, params, in, {}, r.h, ""};
            if (r.odd)
                e.error = "odd numerator";
            else if (r.left.bad || r.right.bad)
                e.error = "letter out of range";
            else {
                e.output = TensorElement{{lk_, lkp_}, {r.left.col(), r.right.col()}};
                if (!in_label(e.output.cols[0], n_, lk_) || !in_label(e.output.cols[1], n_, lkp_))
                    e.error = "image is not an element";
            }
            push(std::move(e));
        }
    }

    std::vector<OracleEntry> take() { return std::move(out_); }

private:
    void push(OracleEntry e) {
        auto key = std::make_tuple(e.case_id, e.row, e.input, e.output, e.h, e.error);
        if (seen_.insert(key).second) out_.push_back(std::move(e));
    }

    int n_, kp_, k_;
    Label lk_, lkp_;
    std::vector<OracleEntry> out_;
    std::set<std::tuple<std::string, int, TensorElement, TensorElement, int, std::string>> seen_;
};

std::string fmt(std::initializer_list<std::pair<const char*, int>> kv) {
    std::ostringstream os;
    bool first = true;
    for (auto& [k, v] : kv) {
        os << (first ? "" : " ") << k << "=" << v;
        first = false;
    }
    return os.str();
}

Column swap_n(const Column& c, int n) {
    Column out = c;
    for (Letter& v : out.m)
        if (std::abs(v) == n) v = -v;
    return out;
}

TensorElement swap_n(const TensorElement& t, int n) {
    TensorElement out = t;
    for (Column& c : out.cols) c = swap_n(c, n);
    return out;
}

// Case 4 has the most rows; defined after regular().
std::vector<Row> case4(int n, int kp, int k, int l, int r, int p, int q, int a, int b, int d, Letter o);

// 1 <= k' <= k <= n-2.
void regular(int n, int kp, int k, Gen& g) {
    const int pmax = 2 * n;
    auto C = [n] { return Col(n); };

    // Case 1
    for (int l = 0; l <= kp; ++l)
        for (int p = k; p <= pmax; ++p)
            for (int q = 1; q <= p + 1; ++q)
                for (int r = 1; r <= l + 1; ++r)
                    for (Letter o : {n, -n}) {
                        if (p < n && o != n) continue;
                        Col up = C().up(1, l).pb(k + 1, p, q, o).down(l, r);
                        g.add("1", fmt({{"l", l}, {"p", p}, {"q", q}, {"r", r}, {"o", o}}), up, C().up(1, k), [&] {
                            std::vector<Row> rs;
                            if (p == k && even(k - q))
                                rs.push_back({1, C().up(1, l + 1).pb(kp + 1, k - 1, q, o).down(l + 1, r), C().up(1, kp),
                                              kp - l, false});
                            else
                                rs.push_back({2, C().up(1, l).pb(kp + 1, p, q, o).down(l, r), C().up(1, kp), kp - l, false});
                            return rs;
                        });
                    }

    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= a; ++b) {
            Col u = C().up(1, a).down(a, b);

            // Case 2a
            for (int l = 1; l <= kp; ++l)
                for (int r = 1; r <= l + 1; ++r) {
                    int d = l - r + 1;
                    g.add("2a", fmt({{"l", l}, {"r", r}, {"a", a}, {"b", b}}), C().up(1, l).down(l, r), u, [&] {
                        std::vector<Row> rs;
                        Half h;
                        if (kp < b && b <= a - d)
                            rs.push_back({1, C().up(1, a - d).down(a - d, b).down(kp, r), C().up(1, kp), kp - l, false});
                        if (kp < b && a - d < b)
                            rs.push_back({2, C().up(1, a - b + l + 1).up(kp + 1, b - 1).down(a - b + l + 1, r),
                                          C().up(1, kp), kp - l, false});
                        if (b <= kp && even(k + kp)) {
                            h = Half();
                            int x = h(k - kp + 2 * l), y = h(kp + b - 1), e = kp - h(b + r - 2);
                            rs.push_back({3, C().up(1, x).down(x, r), C().up(1, y).down(y, b), e, h.odd});
                        }
                        if (b <= kp && !even(k + kp)) {
                            h = Half();
                            int x = h(k - kp + 2 * l + 1), y = h(kp + b), e = kp - h(b + r - 3);
                            rs.push_back({4, C().up(1, b - 1).up(b + 1, x).down(x, r), C().up(1, y).down(y, b + 1), e,
                                          h.odd});
                        }
                        return rs;
                    });
                }

            // Case 2b
            for (int l = 1; l <= kp; ++l)
                for (int r = b + 1; r <= l; ++r)
                    for (int q = 1; q < b; ++q)
                        g.add("2b", fmt({{"l", l}, {"r", r}, {"q", q}, {"a", a}, {"b", b}}),
                              C().up(1, l).down(l, r).down(b - 1, q), u, [&] {
                                  std::vector<Row> rs;
                                  Half h;
                                  if (even(k + kp)) {
                                      int x = h(k - kp + 2 * l), y = h(kp + b - 1), e = kp - h(r + q - 2);
                                      rs.push_back({1, C().up(1, x).down(x, r).down(b - 1, q), C().up(1, y).down(y, b), e,
                                                    h.odd});
                                  } else {
                                      int x = h(k - kp + 2 * l + 1), y = h(kp + b), e = kp - h(r + q - 3);
                                      rs.push_back({2, C().up(1, b - 1).up(b + 1, x).down(x, r).down(b - 1, q),
                                                    C().up(1, y).down(y, b), e, h.odd});
                                  }
                                  return rs;
                              });

            // Case 3
            for (int l = 0; l + 2 <= b; ++l)
                for (int r = 1; r <= l + 1; ++r)
                    for (int p = b; p <= n; ++p) {
                        int d = l - r + 1;
                        g.add("3", fmt({{"l", l}, {"r", r}, {"p", p}, {"a", a}, {"b", b}}), C().up(1, l).up(b, p).down(l, r),
                              u, [&] {
                                  std::vector<Row> rs;
                                  Half h;
                                  if (k < p)
                                      rs.push_back({1, C().up(1, l).up(kp - k + b, p).down(l, r),
                                                    C().up(1, kp - k + a).down(kp - k + a, kp - k + b), kp - k + a - l,
                                                    false});
                                  if (kp <= p && p <= k && even(k + p)) {
                                      h = Half();
                                      int x = h(k + p - 2 * d), y = h(kp + l + d), e = h(kp - r + 1);
                                      rs.push_back({2, C().up(1, x).down(x, p + 1).down(l + d, r),
                                                    C().up(1, y).down(y, l + d + 1), e, h.odd});
                                  }
                                  if (kp <= p && p <= k && !even(k + p)) {
                                      h = Half();
                                      int x = h(k + p - 2 * d + 1), y = h(kp + l + d + 1), e = h(kp - r + 2);
                                      rs.push_back({3, C().up(1, l + d).up(l + d + 2, x).down(x, p + 1).down(l + d, r),
                                                    C().up(1, y).down(y, l + d + 2), e, h.odd});
                                  }
                                  if (p < kp && even(k + kp)) {
                                      h = Half();
                                      int x = h(k + kp - 2 * d), y = h(kp + b - 1), e = h(kp - b + 2 * d + 1);
                                      rs.push_back({4, C().up(1, x).down(x, p + 1).down(b - 1, r), C().up(1, y).down(y, b), e,
                                                    h.odd});
                                  }
                                  if (p < kp && !even(k + kp)) {
                                      h = Half();
                                      int x = h(k + kp - 2 * d + 1), y = h(kp + b), e = h(kp - b + 2 * d + 2);
                                      rs.push_back({5, C().up(1, b - 1).up(b + 1, x).down(x, p + 1).down(b - 1, r),
                                                    C().up(1, y).down(y, b + 1), e, h.odd});
                                  }
                                  return rs;
                              });
                    }

            // Case 4
            for (int l = 0; l <= kp; ++l)
                for (int r = 1; r <= l + 1; ++r)
                    for (int p = b; p <= pmax; ++p)
                        for (int q = 1; q <= p; ++q)
                            for (Letter o : {n, -n}) {
                                if (p < n && o != n) continue;
                                int d = l - r + 1;
                                Col up = C().up(1, l).pb(b, p, q, o).down(l, r);
                                g.add("4", fmt({{"l", l}, {"r", r}, {"p", p}, {"q", q}, {"a", a}, {"b", b}, {"o", o}}), up, u,
                                      [&] { return case4(n, kp, k, l, r, p, q, a, b, d, o); });
                            }

            // Case 5a
            for (int l = 0; l <= kp; ++l)
                for (int q = 1; q < b; ++q)
                    g.add("5a", fmt({{"l", l}, {"q", q}, {"a", a}, {"b", b}}), C().up(1, l).down(b - 1, q), u, [&] {
                        std::vector<Row> rs;
                        Half h;
                        if (q > l + 1 && even(kp - l))
                            rs.push_back({1, C().up(1, l).pb(kp + 1, a, q, n), C().up(1, kp), kp - l, false});
                        if (q > l + 1 && !even(kp - l))
                            rs.push_back({2, C().up(1, l + 1).pb(kp + 1, a - 1, q, n).down(l + 1, l + 1), C().up(1, kp),
                                          kp - l, false});
                        if (q <= l + 1 && l + 1 < b && even(k + kp)) {
                            h = Half();
                            int x = h(k + 2 * b - kp - 2), y = h(kp + b - 1);
                            int e = even(b - l) ? h(2 * kp - l - q + 3) : h(2 * kp - l - q + 1);
                            rs.push_back({3, C().up(1, l).pb(b, x, q, n), C().up(1, y).down(y, b), e, h.odd});
                        }
                        if (q <= l + 1 && l + 1 < b && !even(k + kp) && even(b - l)) {
                            h = Half();
                            int x = h(k + 2 * b - kp - 3), y = h(kp + b - 2), e = h(2 * kp - l - q + 2);
                            rs.push_back({4, C().up(1, l).pb(b - 1, x, q, n), C().up(1, y).down(y, b - 1), e, h.odd});
                        }
                        if (q <= l + 1 && l + 1 < b && !even(k + kp) && !even(b - l)) {
                            h = Half();
                            int x = h(k + 2 * b - kp - 1), y = h(kp + b), e = h(2 * kp - l - q + 2);
                            rs.push_back({5, C().up(1, l).pb(b + 1, x, q, n), C().up(1, y).down(y, b + 1), e, h.odd});
                        }
                        if (q <= l + 1 && b <= l + 1 && even(k + kp)) {
                            h = Half();
                            int x = h(k + 2 * l - kp), y = h(kp + b - 1), e = h(kp + b - 2 * q + 1);
                            rs.push_back({6, C().up(1, x).down(x, l + 1).down(b - 1, q), C().up(1, y).down(y, b), e, h.odd});
                        }
                        if (q <= l + 1 && b <= l + 1 && !even(k + kp)) {
                            h = Half();
                            int x = h(k + 2 * l - kp + 1), y = h(kp + b), e = h(kp + b - 2 * q + 2);
                            rs.push_back({7, C().up(1, b - 1).up(b + 1, x).down(x, l + 1).down(b - 1, q),
                                          C().up(1, y).down(y, b + 1), e, h.odd});
                        }
                        return rs;
                    });

            // Case 5b
            for (int l = 1; l <= kp; ++l)
                for (int r = 1; r <= l; ++r)
                    for (int q = l + 2; q < b; ++q) {
                        int d = l - r + 1;
                        g.add("5b", fmt({{"l", l}, {"r", r}, {"q", q}, {"a", a}, {"b", b}}),
                              C().up(1, l).down(b - 1, q).down(l, r), u, [&] {
                                  std::vector<Row> rs;
                                  Half h;
                                  if (q >= l + d + 2) {
                                      if (even(kp - r) && a - b >= d - 1)
                                          rs.push_back({1, C().up(1, l + d + 1).pb(kp + 1, a - 1 - d, q, n).down(l + d + 1, r),
                                                        C().up(1, kp), kp - l, false});
                                      if (!even(kp - r) && a - b >= d - 1)
                                          rs.push_back({2, C().up(1, l + d).pb(kp + 1, a - d, q, n).down(l + d, r),
                                                        C().up(1, kp), kp - l, false});
                                      if (even(kp - r) && a - b < d - 1)
                                          rs.push_back({3,
                                                        C().up(1, l + a - b + 2).pb(kp + 1, b - 2, q, n).down(l + a - b + 2, r),
                                                        C().up(1, kp), kp - l, false});
                                      if (!even(kp - r) && a - b < d - 1)
                                          rs.push_back({4,
                                                        C().up(1, l + a - b + 1).pb(kp + 1, b - 1, q, n).down(l + a - b + 1, r),
                                                        C().up(1, kp), kp - l, false});
                                  }
                                  if (l + d + 1 >= q && q > l + 1) {
                                      if (even(r - q)) {
                                          h = Half();
                                          int y = h(kp + b - 1), s = h(q - r), t = h(q - r - 2);
                                          int e = even(kp - r) ? h(2 * kp - r - q + 4) : h(2 * kp - r - q + 2);
                                          if (a - b >= t)
                                              rs.push_back({5, C().up(1, q - 1).pb(b, a - s, r, n), C().up(1, y).down(y, b), e,
                                                            h.odd});
                                          else {
                                              int z = a - b + h(q + r);
                                              rs.push_back({6, C().up(1, z).down(b - 1, q).down(z, r), C().up(1, y).down(y, b),
                                                            e, h.odd});
                                          }
                                      } else if (even(kp - r)) {
                                          h = Half();
                                          int y = h(kp + b - 2), e = h(2 * kp - r - q + 3);
                                          if (a - b >= h(q - r - 3))
                                              rs.push_back({7, C().up(1, q - 1).pb(b - 1, a - h(q - r + 1), r, n),
                                                            C().up(1, y).down(y, b - 1), e, h.odd});
                                          else {
                                              int z = a - b + h(q + r + 1);
                                              rs.push_back({8, C().up(1, z).down(b - 2, q).down(z, r),
                                                            C().up(1, y).down(y, b - 1), e, h.odd});
                                          }
                                      } else {
                                          h = Half();
                                          int y = h(kp + b), e = h(2 * kp - r - q + 3);
                                          if (a - b >= h(q - r - 1))
                                              rs.push_back({9, C().up(1, q - 1).pb(b + 1, a - h(q - r - 1), r, n),
                                                            C().up(1, y).down(y, b + 1), e, h.odd});
                                          else {
                                              int z = a - b + h(q + r - 1);
                                              rs.push_back({10, C().up(1, z).down(b, q).down(z, r),
                                                            C().up(1, y).down(y, b + 1), e, h.odd});
                                          }
                                      }
                                  }
                                  return rs;
                              });
                    }
        }
}

std::vector<Row> case4(int n, int kp, int k, int l, int r, int p, int q, int a, int b, int d, Letter o) {
    auto C = [n] { return Col(n); };
    std::vector<Row> rs;
    Half h;
    const bool kpe = even(k + p), pqe = even(p - q), kke = even(k + kp), ble = even(b - l);
    auto right = [&](int top, int bot) { return C().up(1, top).down(top, bot); };

    if (k < p)
        rs.push_back({1, C().up(1, l).pb(kp - k + b, p, q, o).down(l, r), right(kp - k + a, kp - k + b), kp - k + a - l, false});

    if (k - 2 * d < p && p <= k && kp < p) {
        h = Half();
        if (kpe && pqe) {
            int x = h(2 * l + k - p + 2), y = h(2 * kp + b - p - 1), e = kp - l + h(b - p - 1);
            rs.push_back({2, C().up(1, x).pb(kp + b - p, p - 1, q, o).down(x, r), right(y, kp + b - p), e, h.odd});
        } else if (!kpe && pqe) {
            int x = h(2 * l + k - p + 1), y = h(2 * kp + b - p), e = kp - l + h(b - p);
            rs.push_back({3, C().up(1, x).pb(kp + b - p + 1, p, q, o).down(x, r), right(y, kp + b - p + 1), e, h.odd});
        } else if (kpe && !pqe) {
            int x = h(2 * l + k - p), y = h(2 * kp + b - p - 1), e = kp - l + h(b - p - 1);
            rs.push_back({4, C().up(1, x).pb(kp + b - p, p, q, o).down(x, r), right(y, kp + b - p), e, h.odd});
        } else {
            int x = h(2 * l + k - p - 1), y = h(2 * kp + b - p), e = kp - l + h(b - p);
            rs.push_back({5, C().up(1, x).pb(kp + b - p + 1, p + 1, q, o).down(x, r), right(y, kp + b - p + 1), e, h.odd});
        }
    }

    if (kp < p && p <= k - 2 * d) {
        h = Half();
        if (kpe && pqe) {
            int x = h(k + p - 2 * d - 2), y = h(2 * kp + b - p - 1), e = kp - l + h(b - p - 1);
            rs.push_back({6, C().up(1, l + 1 + d).pb(kp + b - p, x, q, o).down(l + 1 + d, r), right(y, kp + b - p), e, h.odd});
        } else if (!kpe && pqe) {
            int x = h(k + p - 2 * d - 1), y = h(2 * kp + b - p), e = kp - l + h(b - p);
            rs.push_back(
                {7, C().up(1, l + 1 + d).pb(kp + b - p + 1, x, q, o).down(l + 1 + d, r), right(y, kp + b - p + 1), e, h.odd});
        } else if (kpe && !pqe) {
            int x = h(k + p - 2 * d), y = h(2 * kp + b - p - 1), e = kp - l + h(b - p - 1);
            rs.push_back({8, C().up(1, l + d).pb(kp + b - p, x, q, o).down(l + d, r), right(y, kp + b - p), e, h.odd});
        } else {
            int x = h(k + p - 2 * d + 1), y = h(2 * kp + b - p), e = kp - l + h(b - p);
            rs.push_back({9, C().up(1, l + d).pb(kp + b - p + 1, x, q, o).down(l + d, r), right(y, kp + b - p + 1), e, h.odd});
        }
    }

    // second page
    const int e42 = pqe ? 2 * kp - r - q + 4 : 2 * kp - r - q + 2;
    if (k + kp - 2 * d < 2 * p && p <= kp && kke) {
        h = Half();
        int x = h(2 * l + k - kp), y = h(kp + b - 1), e = h(e42);
        rs.push_back({10, C().up(1, x).pb(b, p, q, o).down(x, r), right(y, b), e, h.odd});
    }
    if (k + kp - 2 * d + 1 < 2 * p && p <= kp && !kke && pqe) {
        h = Half();
        int x = h(2 * l + k - kp + 1), y = h(kp + b - 2), e = h(2 * kp - r - q + 3);
        rs.push_back({11, C().up(1, x).pb(b - 1, p - 1, q, o).down(x, r), right(y, b - 1), e, h.odd});
    }
    if (k + kp - 2 * d - 1 < 2 * p && p <= kp && !kke && !pqe) {
        h = Half();
        int x = h(2 * l + k - kp - 1), y = h(kp + b), e = h(2 * kp - r - q + 3);
        rs.push_back({12, C().up(1, x).pb(b + 1, p + 1, q, o).down(x, r), right(y, b + 1), e, h.odd});
    }
    const int z = l + p - kp + d;
    if (kp < p + d && 2 * (p + d) <= k + kp && p <= kp && kke) {
        h = Half();
        int x = h(k + kp - 2 * d), y = h(kp + b - 1), e = h(e42);
        rs.push_back({13, C().up(1, z).pb(b, x, q, o).down(z, r), right(y, b), e, h.odd});
    }
    if (kp < p + d && 2 * (p + d) <= k + kp + 1 && p <= kp && !kke && pqe) {
        h = Half();
        int x = h(k + kp - 2 * d - 1), y = h(kp + b - 2), e = h(2 * kp - r - q + 3);
        rs.push_back({14, C().up(1, z).pb(b - 1, x, q, o).down(z, r), right(y, b - 1), e, h.odd});
    }
    if (kp < p + d && 2 * (p + d) <= k + kp - 1 && p <= kp && !kke && !pqe) {
        h = Half();
        int x = h(k + kp - 2 * d + 1), y = h(kp + b), e = h(2 * kp - r - q + 3);
        rs.push_back({15, C().up(1, z).pb(b + 1, x, q, o).down(z, r), right(y, b + 1), e, h.odd});
    }
    if (p <= kp - d && kke) {
        h = Half();
        int x = h(k + 2 * p - kp), y = h(kp + b - 1);
        int e = ble ? h(2 * kp - r - q + 4) : h(2 * kp - r - q + 2);
        rs.push_back({16, C().up(1, l).pb(b, x, q, o).down(l, r), right(y, b), e, h.odd});
    }
    if (p <= kp - d && !kke && ble) {
        h = Half();
        int x = h(k + 2 * p - kp - 1), y = h(kp + b - 2), e = h(2 * kp - r - q + 3);
        rs.push_back({17, C().up(1, l).pb(b - 1, x, q, o).down(l, r), right(y, b - 1), e, h.odd});
    }
    if (p <= kp - d && !kke && !ble) {
        h = Half();
        int x = h(k + 2 * p - kp + 1), y = h(kp + b), e = h(2 * kp - r - q + 3);
        rs.push_back({18, C().up(1, l).pb(b + 1, x, q, o).down(l, r), right(y, b + 1), e, h.odd});
    }
    return rs;
}

// B^{k',1} (x) B^{n,1}, k' <= n-2. The alternating piece starts with nbar at
// the bottom and has length m.
void spin_right(int n, int kp, Gen& g) {
    auto C = [n] { return Col(n); };
    for (int l = 0; l <= kp; ++l)
        for (int r = 1; r <= l + 1; ++r)
            for (int m = 0; m <= kp; ++m) {
                int d = l - r + 1;
                Col up = C().up(1, l).alt(-n, m).down(l, r);
                g.add("k'|n", fmt({{"l", l}, {"r", r}, {"m", m}}), up, C().up(1, n), [&] {
                    std::vector<Row> rs;
                    Half h;
                    if (even(m)) {
                        int y = h(kp + l + d), e = h(kp - l + d);
                        rs.push_back({1, C().up(1, r - 1).up(l + d + 1, n).down(l + d, r), C().up(1, y).down(y, l + d + 1), e,
                                      h.odd});
                    } else {
                        int y = h(kp + l + d + 1), e = h(kp - l + d + 1);
                        rs.push_back({2, C().up(1, r - 1).up(l + d + 2, n - 1).let(-n).down(l + d + 1, r),
                                      C().up(1, y).down(y, l + d + 2), e, h.odd});
                    }
                    return rs;
                });
            }
}

}  // namespace

std::vector<OracleEntry> oracle_cases(int n, int kp, int k) {
    if (kp < 1 || kp > k || k > n) throw std::invalid_argument("oracle_cases: need 1 <= k' <= k <= n");
    auto C = [n] { return Col(n); };
    Gen g(n, kp, k, Label::kr(k), Label::kr(kp));
    if (k <= n - 2) {
        regular(n, kp, k, g);
        std::vector<OracleEntry> out = g.take();
        const size_t literal = out.size();
        for (size_t i = 0; i < literal; ++i) {
            OracleEntry e = out[i];
            e.input = swap_n(e.input, n);
            if (e.error.empty()) e.output = swap_n(e.output, n);
            if (e.input == out[i].input && e.output == out[i].output) continue;
            e.swapped = true;
            out.push_back(std::move(e));
        }
        return out;
    } else if (kp <= n - 2 && k == n) {
        spin_right(n, kp, g);
    } else if (kp <= n - 2) {
        // B^{k',1} (x) B^{n-1,1}: n and nbar interchanged.
        Gen gn(n, kp, n, Label::kr(n), Label::kr(kp));
        spin_right(n, kp, gn);
        std::vector<OracleEntry> out = gn.take();
        for (OracleEntry& e : out) {
            e.case_id = "k'|n-1";
            e.input = swap_n(e.input, n);
            e.input.labels = {Label::kr(kp), Label::kr(n - 1)};
            if (e.error.empty()) {
                e.output = swap_n(e.output, n);
                e.output.labels = {Label::kr(n - 1), Label::kr(kp)};
                if (!in_label(e.output.cols[0], n, Label::kr(n - 1))) e.error = "image is not an element";
            }
        }
        // The swap can only lose elements, never create invalid inputs.
        std::erase_if(out, [&](const OracleEntry& e) { return !in_label(e.input.cols[1], n, Label::kr(n - 1)); });
        return out;
    } else if (kp == k) {
        // R = id with H = l; for n-1 the letters n and nbar are interchanged.
        for (int l = 0; 2 * l <= n; ++l) {
            Col up = C().up(1, n - 2 * l).down(n, n - 2 * l + 1), u = C().up(1, n);
            if (k == n - 1) {
                up = Col(n);
                for (Letter v : swap_n(C().up(1, n - 2 * l).down(n, n - 2 * l + 1).col(), n).m) up.let(v);
                u = Col(n);
                u.up(1, n - 1).let(-n);
            }
            std::string id = k == n ? "n|n" : "n-1|n-1";
            g.add(id, fmt({{"l", l}}), up, u, [&] { return std::vector<Row>{{1, up, u, l, false}}; });
        }
    } else {
        // B^{n-1,1} (x) B^{n,1}
        for (int l = 0; 2 * l < n; ++l)
            g.add("n-1|n", fmt({{"l", l}}), C().up(1, n - 2 * l - 1).down(n, n - 2 * l), C().up(1, n), [&] {
                return std::vector<Row>{
                    {1, C().up(1, n - 2 * l - 1).let(n).down(n - 1, n - 2 * l), C().up(1, n - 1).let(-n), l, false}};
            });
    }
    return g.take();
}

}  // namespace dkr
