#include "dkr/crystal.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dkr {

// ---- labels ----------------------------------------------------------------

Label Label::of(int n, Kind kind) {
    switch (kind) {
        case Kind::HatNm1: return {kind, n - 1};
        case Kind::HatN:
        case Kind::HatBarN:
        case Kind::EN:
        case Kind::ENm1: return {kind, n};
        case Kind::KR: break;
    }
    throw std::invalid_argument("Label::of needs a non-KR kind");
}

Label Label::parse(const std::string& s, int n) {
    if (s.rfind("KR:", 0) == 0) {
        int k = std::stoi(s.substr(3));
        if (k < 1 || k > n) throw std::invalid_argument("KR height out of range in label " + s);
        return kr(k);
    }
    if (s == "HatNm1") return of(n, Kind::HatNm1);
    if (s == "HatN") return of(n, Kind::HatN);
    if (s == "HatBarN") return of(n, Kind::HatBarN);
    if (s == "E:n" || s == "E:" + std::to_string(n)) return of(n, Kind::EN);
    if (s == "E:n-1" || s == "E:" + std::to_string(n - 1)) return of(n, Kind::ENm1);
    throw std::invalid_argument("unknown crystal label '" + s + "'");
}

std::string Label::str(int n) const {
    switch (kind) {
        case Kind::KR: return "KR:" + std::to_string(k);
        case Kind::HatNm1: return "HatNm1";
        case Kind::HatN: return "HatN";
        case Kind::HatBarN: return "HatBarN";
        case Kind::EN: return "E:" + std::to_string(n);
        case Kind::ENm1: return "E:" + std::to_string(n - 1);
    }
    return "?";
}

std::string spec_str(const TensorSpec& B, int n) {
    std::string s;
    for (size_t j = 0; j < B.size(); ++j) s += (j ? "," : "") + B[j].str(n);
    return s;
}

TensorSpec parse_spec(const std::string& s, int n) {
    TensorSpec B;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) B.push_back(Label::parse(item, n));
    return B;
}

// ---- membership and enumeration -------------------------------------------

static bool is_e_kind(Label lab) { return lab.kind == Kind::EN || lab.kind == Kind::ENm1; }

static int column_height(int n, Label lab) {
    // KR(n-1) elements are height-n spinor columns.
    if (lab.kind == Kind::KR && lab.k == n - 1) return n;
    return lab.k;
}

// Height-n hat columns: the B(omega_n) (or B(omegabar_n)) columns, plus the
// height-n fillings of B(omega_{n-2}), B(omega_{n-4}), ... columns.
static bool in_height_n_hat(const Column& b, int n, HeightN variant) {
    ColumnVerdict v = validate_column(b, n);
    if (!v.cond1) return false;
    if (v.cond2) return validate_height_n(b, n, variant);
    Column d = drop(b, n);
    if (d.height() == n || !validate_column(d, n).cond2) return false;
    try {
        return fill(d, n, n) == b;
    } catch (const std::domain_error&) {
        return false;
    }
}

bool in_label(const Column& b, int n, Label lab) {
    for (Letter v : b.m)
        if (v == 0 || std::abs(v) > n) return false;
    if (b.height() != column_height(n, lab)) return false;
    switch (lab.kind) {
        case Kind::KR:
            if (lab.k == n) return validate_spinor(b, n, Spinor::N);
            if (lab.k == n - 1) return validate_spinor(b, n, Spinor::NMinus1);
            return validate_column(b, n).cond1;
        case Kind::HatNm1: return validate_column(b, n).cond1;
        case Kind::HatN:
        case Kind::HatBarN: return in_height_n_hat(b, n, lab.kind == Kind::HatN ? HeightN::Omega : HeightN::OmegaBar);
        case Kind::EN:
        case Kind::ENm1: return get_crystal(n, lab).find(b) >= 0;
    }
    return false;
}

static void sc1_sequences(int n, int k, std::vector<Letter>& cur, std::vector<Column>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.emplace_back(cur);
        return;
    }
    for (int p = 1; p <= 2 * n; ++p) {
        Letter y = p <= n ? p : p - 2 * n - 1;
        if (!cur.empty()) {
            Letter x = cur.back();
            bool fork = std::abs(x) == n && y == -x;
            if (!fork && compare(n, x, y) != Order::Less) continue;
        }
        cur.push_back(y);
        sc1_sequences(n, k, cur, out);
        cur.pop_back();
    }
}

std::vector<Column> enumerate_columns(int n, Label lab) {
    check_rank(n);
    if (is_e_kind(lab)) return get_crystal(n, lab).elems;
    std::vector<Column> all, out;
    std::vector<Letter> cur;
    sc1_sequences(n, column_height(n, lab), cur, all);
    for (auto& c : all) {
        if (in_label(c, n, lab)) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Column highest_column(int n, Label lab) {
    std::vector<Letter> m;
    int h = column_height(n, lab);
    for (int v = 1; v <= h; ++v) m.push_back(v);
    if ((lab.kind == Kind::KR && lab.k == n - 1) || lab.kind == Kind::HatBarN || lab.kind == Kind::ENm1)
        m[n - 1] = -n;
    return Column(m);
}

// ---- letters of the vector representation --------------------------------

static int phi_letter(int n, Letter v, int i) {
    if (i < n) return (v == i || v == -(i + 1)) ? 1 : 0;
    return (v == n - 1 || v == n) ? 1 : 0;
}
static int eps_letter(int n, Letter v, int i) {
    if (i < n) return (v == i + 1 || v == -i) ? 1 : 0;
    return (v == -n || v == -(n - 1)) ? 1 : 0;
}
static Letter f_letter(int n, Letter v, int i) {
    if (i < n) return v == i ? i + 1 : -i;
    return v == n - 1 ? -n : -(n - 1);
}
static Letter e_letter(int n, Letter v, int i) {
    if (i < n) return v == i + 1 ? i : -(i + 1);
    return v == -n ? n - 1 : n;
}

// Signature of the word m_k (x) ... (x) m_1. Returns the row acted on, or 0.
struct LetterSig {
    int f_row = 0, e_row = 0, eps = 0, phi = 0;
};
static LetterSig letter_signature(const Column& b, int n, int i) {
    LetterSig s;
    std::vector<int> plus, minus;  // rows
    for (int r = b.height(); r >= 1; --r) {
        Letter v = b.at(r);
        if (phi_letter(n, v, i)) {
            if (!plus.empty()) plus.pop_back();
            else minus.push_back(r);
        }
        if (eps_letter(n, v, i)) plus.push_back(r);
    }
    s.phi = static_cast<int>(minus.size());
    s.eps = static_cast<int>(plus.size());
    if (!minus.empty()) s.f_row = minus.back();
    if (!plus.empty()) s.e_row = plus.front();
    return s;
}

static Column sorted_spinor(std::vector<Letter> m, int n) {
    std::sort(m.begin(), m.end(), [n](Letter a, Letter b) { return letter_pos(n, a) < letter_pos(n, b); });
    return Column(std::move(m));
}

static bool spinor_can(const Column& b, int n, int i, bool lower) {
    if (i < n) return lower ? (b.contains(i) && b.contains(-(i + 1))) : (b.contains(i + 1) && b.contains(-i));
    return lower ? (b.contains(n - 1) && b.contains(n)) : (b.contains(-n) && b.contains(-(n - 1)));
}

static Column spinor_apply(const Column& b, int n, int i, bool lower) {
    std::vector<Letter> m = b.m;
    for (Letter& v : m) {
        if (i < n) {
            if (lower) {
                if (v == i) v = i + 1;
                else if (v == -(i + 1)) v = -i;
            } else {
                if (v == i + 1) v = i;
                else if (v == -i) v = -(i + 1);
            }
        } else {
            if (lower) {
                if (v == n - 1) v = -n;
                else if (v == n) v = -(n - 1);
            } else {
                if (v == -n) v = n - 1;
                else if (v == -(n - 1)) v = n;
            }
        }
    }
    return sorted_spinor(std::move(m), n);
}

static void check_i(int n, int i) {
    if (i < 0 || i > n) throw std::out_of_range("crystal color " + std::to_string(i) + " outside 0.." + std::to_string(n));
}

std::optional<Column> column_f(const Column& b, int n, Label lab, int i) {
    check_i(n, i);
    if (is_e_kind(lab)) {
        const Crystal& c = get_crystal(n, lab);
        int y = c.f[i][c.at(b)];
        if (y < 0) return std::nullopt;
        return c.elems[y];
    }
    if (i == 0) return affine_f0(b, n, lab);
    if (lab.is_spinor(n)) {
        if (!spinor_can(b, n, i, true)) return std::nullopt;
        return spinor_apply(b, n, i, true);
    }
    LetterSig s = letter_signature(b, n, i);
    if (!s.f_row) return std::nullopt;
    Column out = b;
    out.m[s.f_row - 1] = f_letter(n, out.m[s.f_row - 1], i);
    return out;
}

std::optional<Column> column_e(const Column& b, int n, Label lab, int i) {
    check_i(n, i);
    if (is_e_kind(lab)) {
        const Crystal& c = get_crystal(n, lab);
        int y = c.e[i][c.at(b)];
        if (y < 0) return std::nullopt;
        return c.elems[y];
    }
    if (i == 0) return affine_e0(b, n, lab);
    if (lab.is_spinor(n)) {
        if (!spinor_can(b, n, i, false)) return std::nullopt;
        return spinor_apply(b, n, i, false);
    }
    LetterSig s = letter_signature(b, n, i);
    if (!s.e_row) return std::nullopt;
    Column out = b;
    out.m[s.e_row - 1] = e_letter(n, out.m[s.e_row - 1], i);
    return out;
}

static int string_length(const Column& b, int n, Label lab, int i, bool lower) {
    int cnt = 0;
    std::optional<Column> cur = b;
    while ((cur = lower ? column_f(*cur, n, lab, i) : column_e(*cur, n, lab, i))) {
        if (++cnt > 4 * n + 8) throw std::logic_error("unbounded " + std::to_string(i) + "-string at " + b.str());
    }
    return cnt;
}

int column_eps(const Column& b, int n, Label lab, int i) {
    check_i(n, i);
    if (i == 0 || is_e_kind(lab)) return string_length(b, n, lab, i, false);
    if (lab.is_spinor(n)) return spinor_can(b, n, i, false) ? 1 : 0;
    return letter_signature(b, n, i).eps;
}

int column_phi(const Column& b, int n, Label lab, int i) {
    check_i(n, i);
    if (i == 0 || is_e_kind(lab)) return string_length(b, n, lab, i, true);
    if (lab.is_spinor(n)) return spinor_can(b, n, i, true) ? 1 : 0;
    return letter_signature(b, n, i).phi;
}

static Weight column_weight_scaled(const Column& b, int n, int unit) {
    Weight w(n);
    for (Letter v : b.m) w.eps2[std::abs(v) - 1] += v > 0 ? unit : -unit;
    return w;
}

Weight column_weight(const Column& b, int n) { return column_weight_scaled(b, n, 2); }

static Weight label_weight(const Column& b, int n, Label lab) {
    return column_weight_scaled(b, n, lab.is_spinor(n) ? 1 : 2);
}

// ---- affine operators ------------------------------------------------------

namespace {

struct Parts {
    int top = 0;  // 0 none, 1 = 1bar, 2 = 2bar, 3 = 1bar 2bar
    int bot = 0;  // 0 none, 1 = "1", 2 = "2", 3 = "21"
    Column x;
};

Parts decompose(const Column& b) {
    Parts p;
    int k = b.height(), lo = 1, hi = k;
    if (k >= 1 && b.at(1) == 1) {
        if (k >= 2 && b.at(2) == 2) p.bot = 3, lo = 3;
        else p.bot = 1, lo = 2;
    } else if (k >= 1 && b.at(1) == 2) {
        p.bot = 2, lo = 2;
    }
    if (hi >= lo && b.at(hi) == -1) {
        if (hi - 1 >= lo && b.at(hi - 1) == -2) p.top = 3, hi -= 2;
        else p.top = 1, hi -= 1;
    } else if (hi >= lo && b.at(hi) == -2) {
        p.top = 2, hi -= 1;
    }
    p.x = Column(std::vector<Letter>(b.m.begin() + (lo - 1), b.m.begin() + hi));
    return p;
}

Column cat(std::vector<Letter> below, const Column& mid, std::vector<Letter> above) {
    std::vector<Letter> m = std::move(below);
    m.insert(m.end(), mid.m.begin(), mid.m.end());
    m.insert(m.end(), above.begin(), above.end());
    return Column(std::move(m));
}

bool affine_domain(int n, Label lab) {
    return (lab.kind == Kind::KR && lab.k <= n - 2) || lab.kind == Kind::HatNm1 || lab.kind == Kind::HatN ||
           lab.kind == Kind::HatBarN;
}

// Fill used by the case formulas. On height-n hat columns the greedy fill can
// put a fork letter where the set does not allow it; then every admissible
// filling is tried and the unique one landing in the set with the right weight
// is kept.
struct Filler {
    int n;
    bool all;
    std::vector<Column> fill(const Column& c, int k) const {
        return all ? fill_all(c, k, n) : std::vector<Column>{dkr::fill(c, k, n)};
    }
    std::vector<Column> fill_shifted(const Column& c, int k, int shift) const {
        return all ? fill_shifted_all(c, k, n, shift) : std::vector<Column>{dkr::fill_shifted(c, k, n, shift)};
    }
};

std::vector<Column> cat_all(std::vector<Letter> below, const std::vector<Column>& mids, std::vector<Letter> above) {
    std::vector<Column> out;
    for (const Column& c : mids) out.push_back(cat(below, c, above));
    return out;
}

// sign = +1 for f_0 (weight moves by eps_1 + eps_2), -1 for e_0.
template <class Fn>
std::optional<Column> in_set(const Column& b, int n, Label lab, int sign, Fn fn) {
    const bool height_n = lab.kind == Kind::HatN || lab.kind == Kind::HatBarN;
    std::vector<Column> r;
    try {
        r = fn(Filler{n, false});
    } catch (const std::domain_error&) {
        if (!height_n) throw;
        r = {Column()};  // fall through to the full search
    }
    if (r.empty()) return std::nullopt;
    if (!height_n) {
        if (!in_label(r[0], n, lab))
            throw std::logic_error("affine operator left the set " + lab.str(n) + " with " + r[0].str());
        return r[0];
    }
    Weight want = column_weight(b, n);
    want.eps2[0] += 2 * sign;
    want.eps2[1] += 2 * sign;
    auto good = [&](const Column& c) { return in_label(c, n, lab) && column_weight(c, n) == want; };
    if (good(r[0])) return r[0];
    std::optional<Column> hit;
    for (const Column& c : fn(Filler{n, true})) {
        if (!good(c)) continue;
        if (hit && *hit != c) throw std::logic_error("ambiguous affine image of " + b.str() + " in " + lab.str(n));
        hit = c;
    }
    return hit;
}

}  // namespace

std::optional<Column> affine_f0(const Column& b, int n, Label lab) {
    if (!in_label(b, n, lab)) throw std::invalid_argument(b.str() + " is not an element of " + lab.str(n));
    if (lab.is_spinor(n)) {
        if (!(b.at(n) == -1 && b.at(n - 1) == -2)) return std::nullopt;
        return cat({1, 2}, Column(std::vector<Letter>(b.m.begin(), b.m.begin() + (n - 2))), {});
    }
    if (is_e_kind(lab)) return column_f(b, n, lab, 0);
    if (!affine_domain(n, lab)) throw std::invalid_argument("no affine structure for " + lab.str(n));
    const int k = b.height();
    Parts p = decompose(b);
    return in_set(b, n, lab, 1, [&](const Filler& F) -> std::vector<Column> {
        if (p.top == 3) {
            switch (p.bot) {
                case 0: return F.fill(drop_shifted(p.x, n, 2), k);
                case 2: return cat_all({2}, F.fill_shifted(p.x, k - 1, 2), {});
                case 1: return cat_all({1}, F.fill_shifted(p.x, k - 1, 2), {});
                case 3: return cat_all({1, 2}, F.fill_shifted(p.x, k - 2, 2), {});
            }
        }
        if (p.top == 1 && p.bot == 0) return F.fill(cat({2}, drop_shifted(p.x, n, 2), {}), k);
        if (p.top == 2 && p.bot == 0) return F.fill(cat({1}, drop_shifted(p.x, n, 2), {}), k);
        if (p.top == 1 && p.bot == 1 && drop_shifted(p.x, n, 2) == p.x) return {cat({1, 2}, p.x, {})};
        return {};
    });
}

std::optional<Column> affine_e0(const Column& b, int n, Label lab) {
    if (!in_label(b, n, lab)) throw std::invalid_argument(b.str() + " is not an element of " + lab.str(n));
    if (lab.is_spinor(n)) {
        if (!(b.at(1) == 1 && b.at(2) == 2)) return std::nullopt;
        return cat({}, Column(std::vector<Letter>(b.m.begin() + 2, b.m.end())), {-2, -1});
    }
    if (is_e_kind(lab)) return column_e(b, n, lab, 0);
    if (!affine_domain(n, lab)) throw std::invalid_argument("no affine structure for " + lab.str(n));
    const int k = b.height();
    Parts p = decompose(b);
    return in_set(b, n, lab, -1, [&](const Filler& F) -> std::vector<Column> {
        if (p.bot == 3) {
            switch (p.top) {
                case 0: return F.fill(drop_shifted(p.x, n, 2), k);
                case 2: return cat_all({}, F.fill_shifted(p.x, k - 1, 2), {-2});
                case 1: return cat_all({}, F.fill_shifted(p.x, k - 1, 2), {-1});
                case 3: return cat_all({}, F.fill_shifted(p.x, k - 2, 2), {-2, -1});
            }
        }
        if (p.top == 0 && p.bot == 1) return F.fill(cat({}, drop_shifted(p.x, n, 2), {-2}), k);
        if (p.top == 0 && p.bot == 2) return F.fill(cat({}, drop_shifted(p.x, n, 2), {-1}), k);
        if (p.top == 1 && p.bot == 1 && drop_shifted(p.x, n, 2) == p.x) return {cat({}, p.x, {-2, -1})};
        return {};
    });
}

Column sigma(const Column& b, int n, Label lab) {
    if (!(lab.kind == Kind::KR && lab.k <= n - 2) || !in_label(b, n, lab))
        throw std::invalid_argument("sigma is defined on B^{k,1}, k <= n-2; got " + b.str() + " in " + lab.str(n));
    const int k = b.height();
    bool one = b.contains(1), onebar = b.contains(-1);
    if (one != onebar) {
        Column rest;
        for (Letter v : b.m)
            if (std::abs(v) != 1) rest.m.push_back(v);
        return insert_sorted(rest, n, one ? -1 : 1);
    }
    if (one) {
        Column x(std::vector<Letter>(b.m.begin() + 1, b.m.end() - 1));
        return fill_shifted(drop(x, n), k, n, 1);
    }
    return fill(drop_shifted(b, n, 1), k, n);
}

int classical_component(const Column& b, int n, Label lab) {
    if (lab.kind != Kind::KR) throw std::invalid_argument("classical_component expects a KR label");
    if (lab.k >= n - 1) return lab.k;
    return drop(b, n).height();
}

// ---- duality ---------------------------------------------------------------

Letter dual_letter(int n, Letter v) {
    if (std::abs(v) == n && n % 2 == 1) return v;
    return -v;
}

Column dual_column(const Column& b, int n) {
    Column out;
    for (auto it = b.m.rbegin(); it != b.m.rend(); ++it) out.m.push_back(dual_letter(n, *it));
    return out;
}

int tau(int n, int i) {
    if (n % 2 == 1 && i == n - 1) return n;
    if (n % 2 == 1 && i == n) return n - 1;
    return i;
}

// ---- tabulated crystals ----------------------------------------------------

int Crystal::at(const Column& c) const {
    int x = find(c);
    if (x < 0) throw std::invalid_argument(c.str() + " is not an element of " + label.str(n));
    return x;
}

static void fill_strings(Crystal& c, int i) {
    const int N = c.size();
    c.eps[i].assign(N, 0);
    c.phi[i].assign(N, 0);
    for (int b = 0; b < N; ++b) {
        int cnt = 0;
        for (int y = c.e[i][b]; y >= 0; y = c.e[i][y])
            if (++cnt > 255) throw std::logic_error("cyclic e-string in " + c.label.str(c.n));
        c.eps[i][b] = static_cast<int8_t>(cnt);
        cnt = 0;
        for (int y = c.f[i][b]; y >= 0; y = c.f[i][y])
            if (++cnt > 255) throw std::logic_error("cyclic f-string in " + c.label.str(c.n));
        c.phi[i][b] = static_cast<int8_t>(cnt);
    }
}

static std::unique_ptr<Crystal> build_plain(int n, Label lab) {
    auto c = std::make_unique<Crystal>();
    c->n = n;
    c->label = lab;
    c->elems = enumerate_columns(n, lab);
    const int N = c->size();
    for (int b = 0; b < N; ++b) c->index.emplace(c->elems[b], b);
    c->f.assign(n + 1, std::vector<int>(N, -1));
    c->e.assign(n + 1, std::vector<int>(N, -1));
    c->eps.assign(n + 1, {});
    c->phi.assign(n + 1, {});
    for (int b = 0; b < N; ++b) {
        const Column& col = c->elems[b];
        c->wt.push_back(label_weight(col, n, lab));
        for (int i = 0; i <= n; ++i) {
            if (auto y = column_f(col, n, lab, i)) c->f[i][b] = c->at(*y);
            if (auto y = column_e(col, n, lab, i)) c->e[i][b] = c->at(*y);
        }
    }
    for (int i = 0; i <= n; ++i) {
        if (i == 0) {
            fill_strings(*c, 0);
            continue;
        }
        c->eps[i].resize(N);
        c->phi[i].resize(N);
        for (int b = 0; b < N; ++b) {
            c->eps[i][b] = static_cast<int8_t>(column_eps(c->elems[b], n, lab, i));
            c->phi[i][b] = static_cast<int8_t>(column_phi(c->elems[b], n, lab, i));
        }
    }
    c->u = c->at(highest_column(n, lab));
    return c;
}

static std::unique_ptr<Crystal> build_e(int n, Label lab) {
    const int k = lab.kind == Kind::EN ? n : n - 1;
    const Embedding& emb = emb_b(n, k);
    const Crystal& hat = get_crystal(n, emb.target);
    auto c = std::make_unique<Crystal>();
    c->n = n;
    c->label = lab;
    std::vector<int> members = emb.image;
    std::sort(members.begin(), members.end(),
              [&](int a, int b) { return hat.elems[a] < hat.elems[b]; });
    for (int h : members) c->elems.push_back(hat.elems[h]);
    const int N = c->size();
    for (int b = 0; b < N; ++b) c->index.emplace(c->elems[b], b);
    c->f.assign(n + 1, std::vector<int>(N, -1));
    c->e.assign(n + 1, std::vector<int>(N, -1));
    c->eps.assign(n + 1, std::vector<int8_t>(N));
    c->phi.assign(n + 1, std::vector<int8_t>(N));
    for (int b = 0; b < N; ++b) {
        int h = hat.at(c->elems[b]);
        Weight w = hat.wt[h];  // emb doubles weights
        for (int& x : w.eps2) x /= 2;
        c->wt.push_back(w);
        for (int i = 0; i <= n; ++i) {
            int y = hat.f[i][h];
            if (y >= 0) {
                y = hat.f[i][y];
                if (y < 0) throw std::logic_error("E element with odd phi in " + lab.str(n));
                c->f[i][b] = c->at(hat.elems[y]);
            }
            y = hat.e[i][h];
            if (y >= 0) {
                y = hat.e[i][y];
                if (y < 0) throw std::logic_error("E element with odd eps in " + lab.str(n));
                c->e[i][b] = c->at(hat.elems[y]);
            }
            c->eps[i][b] = static_cast<int8_t>(hat.eps[i][h] / 2);
            c->phi[i][b] = static_cast<int8_t>(hat.phi[i][h] / 2);
        }
    }
    c->u = c->at(highest_column(n, lab));
    return c;
}

namespace {
std::recursive_mutex registry_mutex;
std::map<std::pair<int, Label>, std::unique_ptr<Crystal>> registry;
}  // namespace

const Crystal& get_crystal(int n, Label lab) {
    check_rank(n);
    std::lock_guard<std::recursive_mutex> lock(registry_mutex);
    auto key = std::make_pair(n, lab);
    auto it = registry.find(key);
    if (it != registry.end()) return *it->second;
    if (lab.kind == Kind::KR && (lab.k < 1 || lab.k > n)) throw std::invalid_argument("bad KR label");
    auto c = is_e_kind(lab) ? build_e(n, lab) : build_plain(n, lab);
    return *registry.emplace(key, std::move(c)).first->second;
}

std::vector<Column> bfs_closure(int n, Label lab) {
    Column start = highest_column(n, lab);
    std::set<Column> seen{start};
    std::queue<Column> q;
    q.push(start);
    while (!q.empty()) {
        Column b = q.front();
        q.pop();
        for (int i = 0; i <= n; ++i)
            for (bool lower : {true, false}) {
                auto y = lower ? column_f(b, n, lab, i) : column_e(b, n, lab, i);
                if (y && seen.insert(*y).second) q.push(*y);
            }
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::string> check_axioms(const Crystal& c) {
    std::vector<std::string> bad;
    const int n = c.n;
    for (int b = 0; b < c.size(); ++b) {
        for (int i = 0; i <= n; ++i) {
            const std::string where = c.elems[b].str() + " color " + std::to_string(i);
            int y = c.f[i][b];
            if (y >= 0 && c.e[i][y] != b) bad.push_back("e(f(b)) != b at " + where);
            y = c.e[i][b];
            if (y >= 0 && c.f[i][y] != b) bad.push_back("f(e(b)) != b at " + where);
            int len = 0;
            for (int z = c.e[i][b]; z >= 0; z = c.e[i][z]) ++len;
            if (len != c.eps[i][b]) bad.push_back("eps mismatch at " + where);
            len = 0;
            for (int z = c.f[i][b]; z >= 0; z = c.f[i][z]) ++len;
            if (len != c.phi[i][b]) bad.push_back("phi mismatch at " + where);
            const Weight& w = c.wt[b];
            int h = i ? pair_alpha_with(n, i, w) : -(w.eps2[0] + w.eps2[1]) / 2;
            if (c.phi[i][b] - c.eps[i][b] != h) bad.push_back("phi - eps != <h_i, wt> at " + where);
            if (c.f[i][b] >= 0) {
                Weight d = w - c.wt[c.f[i][b]];
                Weight want = i ? simple_root(n, i) : Weight(n);
                if (i == 0) {
                    // alpha_0 restricted to the classical weights is -theta = -(e1 + e2)
                    want.eps2[0] = -2;
                    want.eps2[1] = -2;
                }
                if (d != want) bad.push_back("wt(b) - wt(f b) != alpha_i at " + where);
            }
        }
    }
    return bad;
}

// ---- tensor products -------------------------------------------------------

std::string TensorElement::str() const {
    std::string s;
    for (size_t j = 0; j < cols.size(); ++j) s += (j ? " ⊗ " : "") + cols[j].str();
    return s;
}

Tensor Tensor::from(int n, const TensorElement& t) {
    Tensor out;
    for (int j = 0; j < t.size(); ++j) {
        const Crystal& c = get_crystal(n, t.labels[j]);
        out.cr.push_back(&c);
        out.idx.push_back(c.at(t.cols[j]));
    }
    return out;
}

TensorElement Tensor::element() const {
    TensorElement t;
    for (size_t j = 0; j < idx.size(); ++j) {
        t.labels.push_back(cr[j]->label);
        t.cols.push_back(cr[j]->elems[idx[j]]);
    }
    return t;
}

namespace {
// Reduced signature over factors left to right.
struct TensorSig {
    int eps = 0, phi = 0, f_pos = -1, e_pos = -1;
};
TensorSig tensor_signature(const Tensor& t, int i) {
    TensorSig s;
    std::vector<std::pair<int, int>> plus;  // (factor, count) stack of unmatched +
    int plus_total = 0;
    for (int j = 0; j < static_cast<int>(t.idx.size()); ++j) {
        int m = t.cr[j]->phi[i][t.idx[j]];
        while (m > 0 && plus_total > 0) {
            int take = std::min(m, plus.back().second);
            plus.back().second -= take;
            plus_total -= take;
            m -= take;
            if (plus.back().second == 0) plus.pop_back();
        }
        if (m > 0) {
            s.phi += m;
            s.f_pos = j;
        }
        int p = t.cr[j]->eps[i][t.idx[j]];
        if (p > 0) {
            plus.emplace_back(j, p);
            plus_total += p;
        }
    }
    s.eps = plus_total;
    if (!plus.empty()) s.e_pos = plus.front().first;
    return s;
}
}  // namespace

int tensor_eps(const Tensor& t, int i) { return tensor_signature(t, i).eps; }
int tensor_phi(const Tensor& t, int i) { return tensor_signature(t, i).phi; }
int tensor_f_pos(const Tensor& t, int i) { return tensor_signature(t, i).f_pos; }
int tensor_e_pos(const Tensor& t, int i) { return tensor_signature(t, i).e_pos; }

bool tensor_f(Tensor& t, int i) {
    int j = tensor_f_pos(t, i);
    if (j < 0) return false;
    t.idx[j] = t.cr[j]->f[i][t.idx[j]];
    return true;
}

bool tensor_e(Tensor& t, int i) {
    int j = tensor_e_pos(t, i);
    if (j < 0) return false;
    t.idx[j] = t.cr[j]->e[i][t.idx[j]];
    return true;
}

Weight tensor_weight(const Tensor& t) {
    Weight w(t.cr.empty() ? 0 : t.cr[0]->n);
    for (size_t j = 0; j < t.idx.size(); ++j) w += t.cr[j]->wt[t.idx[j]];
    return w;
}

bool is_classically_highest(const Tensor& t) {
    if (t.cr.empty()) return true;
    for (int i = 1; i <= t.cr[0]->n; ++i)
        if (tensor_e_pos(t, i) >= 0) return false;
    return true;
}

int pair_f(const Crystal& L, const Crystal& R, int x, int i) {
    const int N = R.size(), a = x / N, b = x % N;
    if (L.eps[i][a] >= R.phi[i][b]) {
        int y = L.f[i][a];
        return y < 0 ? -1 : y * N + b;
    }
    return a * N + R.f[i][b];
}

int pair_e(const Crystal& L, const Crystal& R, int x, int i) {
    const int N = R.size(), a = x / N, b = x % N;
    if (L.eps[i][a] > R.phi[i][b]) return L.e[i][a] * N + b;
    int y = R.e[i][b];
    return y < 0 ? -1 : a * N + y;
}

int pair_eps(const Crystal& L, const Crystal& R, int x, int i) {
    const int N = R.size(), a = x / N, b = x % N;
    return R.eps[i][b] + std::max(0, L.eps[i][a] - R.phi[i][b]);
}

int pair_phi(const Crystal& L, const Crystal& R, int x, int i) {
    const int N = R.size(), a = x / N, b = x % N;
    return L.phi[i][a] + std::max(0, R.phi[i][b] - L.eps[i][a]);
}

std::vector<std::vector<int>> highest_elements(int n, const TensorSpec& B) {
    std::vector<const Crystal*> cr;
    for (Label lab : B) cr.push_back(&get_crystal(n, lab));
    const int L = static_cast<int>(B.size());
    std::vector<std::vector<int>> out;
    if (L == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> idx(L);
    // Extend from the right: b (x) suffix is highest iff the suffix is and
    // eps_i(b) <= phi_i(suffix) for every i.
    auto rec = [&](auto&& self, int pos, const std::vector<int>& suffix_phi) -> void {
        if (pos < 0) {
            out.push_back(idx);
            return;
        }
        const Crystal& c = *cr[pos];
        std::vector<int> next(n + 1);
        for (int b = 0; b < c.size(); ++b) {
            bool ok = true;
            for (int i = 1; i <= n && ok; ++i) ok = c.eps[i][b] <= suffix_phi[i];
            if (!ok) continue;
            for (int i = 1; i <= n; ++i) next[i] = c.phi[i][b] + suffix_phi[i] - c.eps[i][b];
            idx[pos] = b;
            self(self, pos - 1, next);
        }
    };
    rec(rec, L - 1, std::vector<int>(n + 1, 0));
    return out;
}

std::vector<TensorElement> enumerate_paths(int n, const Weight& lambda, const TensorSpec& B) {
    std::vector<TensorElement> out;
    for (const auto& idx : highest_elements(n, B)) {
        Tensor t;
        for (size_t j = 0; j < B.size(); ++j) t.cr.push_back(&get_crystal(n, B[j]));
        t.idx = idx;
        if (B.empty() ? lambda == Weight(n) : tensor_weight(t) == lambda) out.push_back(t.element());
    }
    std::sort(out.begin(), out.end());
    return out;
}

TensorElement dual_star(const TensorElement& t, int n) {
    TensorElement out;
    for (int j = t.size() - 1; j >= 0; --j) {
        out.labels.push_back(t.labels[j]);
        out.cols.push_back(dual_column(t.cols[j], n));
    }
    return out;
}

// ---- hat isomorphisms ------------------------------------------------------

static std::pair<Label, Label> hat_factors(int n, Kind hat) {
    switch (hat) {
        case Kind::HatNm1: return {Label::kr(n), Label::kr(n - 1)};
        case Kind::HatN: return {Label::kr(n), Label::kr(n)};
        case Kind::HatBarN: return {Label::kr(n - 1), Label::kr(n - 1)};
        default: throw std::invalid_argument("hat_iso needs HatNm1, HatN or HatBarN");
    }
}

const HatIso& hat_iso(int n, Kind hat) {
    static std::recursive_mutex mu;
    static std::map<std::pair<int, Kind>, std::unique_ptr<HatIso>> cache;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto key = std::make_pair(n, hat);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;

    auto [left, right] = hat_factors(n, hat);
    const Crystal& H = get_crystal(n, Label::of(n, hat));
    const Crystal& Lc = get_crystal(n, left);
    const Crystal& Rc = get_crystal(n, right);
    const int P = Lc.size() * Rc.size();
    if (H.size() != P) throw std::logic_error("hat crystal size differs from the tensor square");

    auto pair_weight = [&](int x) { return Lc.wt[x / Rc.size()] + Rc.wt[x % Rc.size()]; };
    std::map<Weight, std::vector<int>> hw_hat, hw_pair;
    for (int b = 0; b < H.size(); ++b) {
        bool top = true;
        for (int i = 1; i <= n && top; ++i) top = H.eps[i][b] == 0;
        if (top) hw_hat[H.wt[b]].push_back(b);
    }
    for (int x = 0; x < P; ++x) {
        bool top = true;
        for (int i = 1; i <= n && top; ++i) top = pair_eps(Lc, Rc, x, i) == 0;
        if (top) hw_pair[pair_weight(x)].push_back(x);
    }
    if (hw_hat.size() != hw_pair.size()) throw std::logic_error("hat and tensor differ in classical components");

    auto iso = std::make_unique<HatIso>();
    iso->hat = Label::of(n, hat);
    iso->left = left;
    iso->right = right;
    iso->to_pair.assign(H.size(), -1);
    iso->from_pair.assign(P, -1);
    std::queue<int> q;
    for (auto& [w, hs] : hw_hat) {
        auto it = hw_pair.find(w);
        if (it == hw_pair.end() || hs.size() != 1 || it->second.size() != 1)
            throw std::logic_error("classical components of the hat are not matched uniquely at weight " + w.str());
        iso->to_pair[hs[0]] = it->second[0];
        iso->from_pair[it->second[0]] = hs[0];
        q.push(hs[0]);
    }
    while (!q.empty()) {
        int b = q.front();
        q.pop();
        int x = iso->to_pair[b];
        for (int i = 1; i <= n; ++i) {
            int fb = H.f[i][b], fx = pair_f(Lc, Rc, x, i);
            if ((fb < 0) != (fx < 0)) throw std::logic_error("hat isomorphism: f_" + std::to_string(i) + " mismatch");
            if (fb < 0) continue;
            if (iso->to_pair[fb] < 0) {
                iso->to_pair[fb] = fx;
                iso->from_pair[fx] = fb;
                q.push(fb);
            } else if (iso->to_pair[fb] != fx) {
                throw std::logic_error("hat isomorphism is inconsistent");
            }
        }
    }
    for (int b = 0; b < H.size(); ++b)
        if (iso->to_pair[b] < 0) throw std::logic_error("hat isomorphism does not cover " + H.elems[b].str());
    return *cache.emplace(key, std::move(iso)).first->second;
}

// ---- emb_B -----------------------------------------------------------------

const Embedding& emb_b(int n, int k) {
    static std::recursive_mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<Embedding>> cache;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto key = std::make_pair(n, k);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
    if (k < 1 || k > n) throw std::invalid_argument("emb_b: height out of range");

    const Crystal& src = get_crystal(n, Label::kr(k));
    auto emb = std::make_unique<Embedding>();
    emb->source = Label::kr(k);
    const bool spin = k >= n - 1;
    emb->target = spin ? Label::of(n, k == n ? Kind::HatN : Kind::HatBarN) : Label::kr(k);
    const Crystal& T = get_crystal(n, emb->target);
    auto tf = [&](int x, int i) { return spin ? T.f[i][x] : pair_f(T, T, x, i); };
    auto te = [&](int x, int i) { return spin ? T.e[i][x] : pair_e(T, T, x, i); };

    emb->image.assign(src.size(), -1);
    emb->image[src.u] = spin ? T.u : T.u * T.size() + T.u;
    std::queue<int> q;
    q.push(src.u);
    while (!q.empty()) {
        int b = q.front();
        q.pop();
        int x = emb->image[b];
        for (int i = 0; i <= n; ++i)
            for (bool lower : {true, false}) {
                int y = lower ? src.f[i][b] : src.e[i][b];
                if (y < 0) continue;
                int z = lower ? tf(x, i) : te(x, i);
                if (z >= 0) z = lower ? tf(z, i) : te(z, i);
                if (z < 0) throw std::logic_error("emb_b: doubled operator undefined");
                if (emb->image[y] < 0) {
                    emb->image[y] = z;
                    q.push(y);
                } else if (emb->image[y] != z) {
                    throw std::logic_error("emb_b: inconsistent image");
                }
            }
    }
    for (int b = 0; b < src.size(); ++b)
        if (emb->image[b] < 0) throw std::logic_error("emb_b: unreached element");
    return *cache.emplace(key, std::move(emb)).first->second;
}

}  // namespace dkr
