#include "dkr/bijection.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dkr {

Weight letter_weight(int n, Letter v) {
    check_letter(n, v);
    Weight w(n);
    w.eps2[std::abs(v) - 1] = v > 0 ? 2 : -2;
    return w;
}

namespace {

constexpr int kMark = -1;  // rigging of a row whose label is set after the update

struct Vac {
    int n;
    std::vector<int> lc;
    std::vector<Shape> shapes;
    Vac(const RiggedConfig& rc) : n(rc.n), lc(l_coeffs(rc.n, rc.B)), shapes(rc.shapes()) {}
    int operator()(int a, int i) const { return vacancy(n, lc, shapes, a, i); }
};

int singular_count(const RiggedConfig& rc, const Vac& p, int a, int i) {
    const int v = p(a, i);
    int c = 0;
    for (const Row& r : rc.part(a)) c += r.len == i && r.rig == v;
    return c;
}

// Smallest length i >= lo in nu^(a) with a singular row (two of them when i == twice_at).
int find_singular(const RiggedConfig& rc, const Vac& p, int a, int lo, int twice_at = kInf) {
    std::set<int> lens;
    for (const Row& r : rc.part(a))
        if (r.len >= lo) lens.insert(r.len);
    for (int i : lens)
        if (singular_count(rc, p, a, i) >= (i == twice_at ? 2 : 1)) return i;
    return kInf;
}

void remove_row(RiggedPartition& part, Row row) {
    auto it = std::find(part.begin(), part.end(), row);
    if (it == part.end()) throw std::logic_error("row to remove is missing");
    part.erase(it);
}

// Sets every marked row to the vacancy number of its length, then normalizes.
void resingularize(RiggedConfig& rc) {
    Vac p(rc);
    for (int a = 1; a <= rc.n; ++a)
        for (Row& r : rc.part(a))
            if (r.rig == kMark) r.rig = p(a, r.len);
    rc.normalize();
}

void check_box(const RiggedConfig& rc, const char* what) {
    if (!is_valid_rc(rc)) throw std::logic_error(std::string(what) + " produced an invalid rigged configuration " + rc.str());
}

DeltaResult delta_at(const RiggedConfig& rc, size_t pos) {
    const int n = rc.n;
    if (pos >= rc.B.size() || rc.B[pos] != Label::kr(1))
        throw std::invalid_argument("delta: the factor to remove is not B^{1,1}");
    Vac p(rc);
    DeltaTrace tr{std::vector<int>(n + 1, kInf), std::vector<int>(n + 1, kInf)};
    auto& ell = tr.ell;
    auto& ellbar = tr.ellbar;
    Letter b = 0;
    int prev = 1;
    for (int a = 1; a <= n - 2 && !b; ++a) {
        int i = find_singular(rc, p, a, prev);
        if (i == kInf) b = a;
        else ell[a] = prev = i;
    }
    if (!b) {
        int i = find_singular(rc, p, n - 1, prev);
        int j = find_singular(rc, p, n, prev);
        if (i == kInf && j == kInf) {
            b = n - 1;
        } else if (j == kInf) {
            ell[n - 1] = i;
            b = n;
        } else if (i == kInf) {
            ell[n] = j;
            b = -n;
        } else {
            ell[n - 1] = i;
            ell[n] = j;
            prev = std::max(i, j);
            for (int a = n - 2; a >= 1 && !b; --a) {
                int k = find_singular(rc, p, a, prev, ell[a]);
                if (k == kInf) b = -(a + 1);
                else ellbar[a] = prev = k;
            }
            if (!b) b = -1;
        }
    }

    RiggedConfig out = rc;
    out.B.erase(out.B.begin() + static_cast<long>(pos));
    out.lambda = rc.lambda - letter_weight(n, b);
    for (int a = 1; a <= n; ++a)
        for (int l : {ell[a], a <= n - 2 ? ellbar[a] : kInf}) {
            if (l == kInf) continue;
            remove_row(out.part(a), {l, p(a, l)});
            if (l > 1) out.part(a).push_back({l - 1, kMark});
        }
    resingularize(out);
    check_box(out, "delta");
    return {std::move(out), b, std::move(tr)};
}

// Which lengths delta selects for a given output letter.
void selection_pattern(int n, Letter b, std::vector<bool>& has_ell, std::vector<bool>& has_bar) {
    has_ell.assign(n + 1, false);
    has_bar.assign(n + 1, false);
    if (b > 0 && b <= n - 1) {
        for (int a = 1; a < b; ++a) has_ell[a] = true;
        return;
    }
    for (int a = 1; a <= n - 2; ++a) has_ell[a] = true;
    if (b == n) {
        has_ell[n - 1] = true;
        return;
    }
    if (b == -n) {
        has_ell[n] = true;
        return;
    }
    has_ell[n - 1] = has_ell[n] = true;
    // b = -(s+1) stops the second scan at a = s
    const int stop = -b - 1;
    for (int a = n - 2; a > stop; --a) has_bar[a] = true;
}

}  // namespace

DeltaResult delta(const RiggedConfig& rc) {
    if (rc.B.empty()) throw std::invalid_argument("delta: empty tensor product");
    return delta_at(rc, 0);
}

DeltaResult delta_tilde(const RiggedConfig& rc) {
    if (rc.B.empty()) throw std::invalid_argument("delta_tilde: empty tensor product");
    DeltaResult d = delta_at(theta(rc), rc.B.size() - 1);
    d.rc = theta(d.rc);
    return d;
}

RiggedConfig delta_inv(const RiggedConfig& rc, Letter b) {
    const int n = rc.n;
    check_letter(n, b);
    Vac p(rc);
    std::vector<bool> has_ell, has_bar;
    selection_pattern(n, b, has_ell, has_bar);

    // Reverse scan: the last selected string comes first; each step takes the
    // longest singular row of nu~^(a) whose lengthened size stays within the
    // bound, or a new row of length 1.
    RiggedConfig work = rc;
    std::vector<int> ell(n + 1, kInf), ellbar(n + 1, kInf);
    auto pick = [&](int a, int bound) {
        int best = 0;
        Row best_row{0, 0};
        for (const Row& r : work.part(a)) {
            if (r.rig == kMark || r.len + 1 > bound) continue;
            if (r.rig == p(a, r.len) && r.len > best) {
                best = r.len;
                best_row = r;
            }
        }
        if (best > 0) remove_row(work.part(a), best_row);
        work.part(a).push_back({best + 1, kMark});
        return best + 1;
    };
    int bound = kInf;
    for (int a = 1; a <= n - 2; ++a)
        if (has_bar[a]) bound = ellbar[a] = pick(a, bound);
    const int fork_bound = bound;
    if (has_ell[n]) ell[n] = pick(n, fork_bound);
    if (has_ell[n - 1]) ell[n - 1] = pick(n - 1, fork_bound);
    bound = std::min(ell[n], ell[n - 1]);
    if (!has_ell[n] && !has_ell[n - 1]) bound = kInf;
    for (int a = n - 2; a >= 1; --a)
        if (has_ell[a]) bound = ell[a] = pick(a, bound);

    RiggedConfig out = work;
    out.B.insert(out.B.begin(), Label::kr(1));
    out.lambda = rc.lambda + letter_weight(n, b);
    resingularize(out);
    if (!is_valid_rc(out)) throw std::domain_error("delta_inv: letter " + letter_str(b) + " has no preimage");
    DeltaResult d = delta(out);
    if (d.letter != b || d.rc != rc) throw std::domain_error("delta_inv: letter " + letter_str(b) + " has no preimage");
    return out;
}

std::optional<std::pair<Label, Label>> split_label(int n, Label lab) {
    switch (lab.kind) {
        case Kind::KR:
            if (lab.k >= 2 && lab.k <= n - 2) return std::make_pair(Label::kr(1), Label::kr(lab.k - 1));
            return std::nullopt;
        case Kind::HatNm1: return std::make_pair(Label::kr(1), Label::kr(n - 2));
        case Kind::EN:
        case Kind::ENm1: return std::make_pair(Label::kr(1), Label::of(n, Kind::HatNm1));
        default: return std::nullopt;
    }
}

namespace {

// Partitions that tj extends for a factor of kind lab.
std::vector<int> tj_range(int n, Label lab) {
    std::vector<int> r;
    switch (lab.kind) {
        case Kind::KR:
            for (int a = 1; a < lab.k; ++a) r.push_back(a);
            break;
        case Kind::HatNm1:
            for (int a = 1; a <= n - 2; ++a) r.push_back(a);
            break;
        case Kind::EN:
            for (int a = 1; a <= n - 1; ++a) r.push_back(a);
            break;
        case Kind::ENm1:
            for (int a = 1; a <= n - 2; ++a) r.push_back(a);
            r.push_back(n);
            break;
        default: break;
    }
    return r;
}

// Splits B[pos]; the B^{1,1} goes to the left of the rest when left is set.
RiggedConfig split_at(const RiggedConfig& rc, size_t pos, bool left) {
    const int n = rc.n;
    if (pos >= rc.B.size()) throw std::invalid_argument("tj: empty tensor product");
    const Label lab = rc.B[pos];
    if (lab == Label::kr(1)) return rc;
    auto sp = split_label(n, lab);
    if (!sp) throw std::invalid_argument("tj: factor " + lab.str(n) + " cannot be split");
    RiggedConfig out = rc;
    out.B[pos] = left ? sp->first : sp->second;
    out.B.insert(out.B.begin() + static_cast<long>(pos) + 1, left ? sp->second : sp->first);
    for (int a : tj_range(n, lab)) out.part(a).push_back({1, kMark});
    resingularize(out);
    return out;
}

}  // namespace

RiggedConfig tj(const RiggedConfig& rc) { return split_at(rc, 0, true); }

RiggedConfig bj(const RiggedConfig& rc) {
    if (rc.B.empty()) throw std::invalid_argument("bj: empty tensor product");
    return theta(split_at(theta(rc), rc.B.size() - 1, false));
}

RiggedConfig tj_inv(const RiggedConfig& rc, Label lab) {
    const int n = rc.n;
    if (lab == Label::kr(1)) {
        if (rc.B.empty() || rc.B[0] != lab) throw std::invalid_argument("tj_inv: leftmost factor mismatch");
        return rc;
    }
    auto sp = split_label(n, lab);
    if (!sp || rc.B.size() < 2 || rc.B[0] != sp->first || rc.B[1] != sp->second)
        throw std::invalid_argument("tj_inv: factors do not come from " + lab.str(n));
    Vac p(rc);
    RiggedConfig out = rc;
    for (int a : tj_range(n, lab)) {
        auto& part = out.part(a);
        auto it = std::find(part.begin(), part.end(), Row{1, p(a, 1)});
        if (it == part.end()) throw std::domain_error("tj_inv: no singular string of length 1 in partition " + std::to_string(a));
        part.erase(it);
    }
    out.B.erase(out.B.begin());
    out.B[0] = lab;
    out.normalize();
    return out;
}

SpinorResult delta_s(const RiggedConfig& rc) {
    const int n = rc.n;
    if (rc.B.empty() || !rc.B[0].is_spinor(n)) throw std::invalid_argument("delta_s: leftmost factor is not a spinor");
    const Label lab = rc.B[0];
    SpinorResult res;
    RiggedConfig cur = emb_rc(rc);
    res.table.push_back(cur);
    std::vector<Letter> letters;
    for (int step = 0; step < n; ++step) {
        DeltaResult d = delta(tj(cur));
        letters.push_back(d.letter);
        cur = d.rc;
        res.table.push_back(cur);
        res.steps.push_back(std::move(d));
    }
    std::reverse(letters.begin(), letters.end());  // bottom entry m_1 first
    res.column = Column(letters);
    res.rc = emb_rc_inverse(cur, TensorSpec(rc.B.begin() + 1, rc.B.end()));
    if (!in_label(res.column, n, lab))
        throw std::logic_error("delta_s: " + res.column.str() + " is not an element of " + lab.str(n));
    return res;
}

RiggedConfig delta_s_inv(const RiggedConfig& rc, const Column& column, Label lab) {
    const int n = rc.n;
    if (!lab.is_spinor(n) || !in_label(column, n, lab))
        throw std::invalid_argument("delta_s_inv: " + column.str() + " is not an element of " + lab.str(n));
    RiggedConfig cur = emb_rc(rc);
    for (int k = 1; k <= n; ++k) {
        cur = delta_inv(cur, column.at(k));
        if (k == 1) continue;
        Label target = k <= n - 2 ? Label::kr(k)
                       : k == n - 1 ? Label::of(n, Kind::HatNm1)
                                    : Label::of(n, lab.k == n ? Kind::EN : Kind::ENm1);
        cur = tj_inv(cur, target);
    }
    TensorSpec B{lab};
    B.insert(B.end(), rc.B.begin(), rc.B.end());
    return emb_rc_inverse(cur, B);
}

// ---- paths -------------------------------------------------------------------

TensorElement lh(const TensorElement& p) {
    if (p.cols.empty()) throw std::invalid_argument("lh: empty path");
    TensorElement out = p;
    out.labels.erase(out.labels.begin());
    out.cols.erase(out.cols.begin());
    return out;
}

TensorElement raise_to_highest(int n, const TensorElement& p) {
    Tensor t = Tensor::from(n, p);
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 1; i <= n && !moved; ++i) moved = tensor_e(t, i);
    }
    return t.element();
}

TensorElement rh(int n, const TensorElement& p) {
    if (p.cols.empty()) throw std::invalid_argument("rh: empty path");
    TensorElement out = p;
    out.labels.pop_back();
    out.cols.pop_back();
    return raise_to_highest(n, out);
}

TensorElement ts(int n, const TensorElement& p) {
    if (p.cols.empty()) throw std::invalid_argument("ts: empty path");
    if (p.labels[0] == Label::kr(1)) return p;
    auto sp = split_label(n, p.labels[0]);
    if (!sp) throw std::invalid_argument("ts: factor " + p.labels[0].str(n) + " cannot be split");
    const Column& c = p.cols[0];
    Column rest(std::vector<Letter>(c.m.begin(), c.m.end() - 1));
    TensorElement out = p;
    out.labels[0] = sp->first;
    out.cols[0] = Column({c.m.back()});
    out.labels.insert(out.labels.begin() + 1, sp->second);
    out.cols.insert(out.cols.begin() + 1, rest);
    return out;
}

TensorElement bs(int n, const TensorElement& p) {
    if (p.cols.empty()) throw std::invalid_argument("bs: empty path");
    const int L = p.size();
    if (p.labels[L - 1] == Label::kr(1)) return p;
    auto sp = split_label(n, p.labels[L - 1]);
    if (!sp) throw std::invalid_argument("bs: factor " + p.labels[L - 1].str(n) + " cannot be split");
    const Column& c = p.cols[L - 1];
    TensorElement out = p;
    out.labels[L - 1] = sp->second;
    out.cols[L - 1] = Column(std::vector<Letter>(c.m.begin() + 1, c.m.end()));
    out.labels.push_back(sp->first);
    out.cols.push_back(Column({c.m.front()}));
    return out;
}

TensorElement emb_p(int n, const TensorElement& p) {
    TensorElement out;
    for (int j = 0; j < p.size(); ++j) {
        const Label lab = p.labels[j];
        if (lab.kind != Kind::KR) throw std::invalid_argument("emb_p: only KR factors embed");
        const Embedding& e = emb_b(n, lab.k);
        const int b = get_crystal(n, lab).at(p.cols[j]);
        const Crystal& T = get_crystal(n, e.target);
        if (lab.is_spinor(n)) {
            out.labels.push_back(Label::of(n, lab.k == n ? Kind::EN : Kind::ENm1));
            out.cols.push_back(T.elems[e.image[b]]);
        } else {
            const int x = e.image[b];
            out.labels.push_back(lab);
            out.cols.push_back(T.elems[x / T.size()]);
            out.labels.push_back(lab);
            out.cols.push_back(T.elems[x % T.size()]);
        }
    }
    return out;
}

Weight path_weight(int n, const TensorElement& p) {
    Weight w(n);
    for (int j = 0; j < p.size(); ++j) {
        Weight c = column_weight(p.cols[j], n);
        if (p.labels[j].is_spinor(n))
            for (int& x : c.eps2) x /= 2;  // spinor letters carry eps/2
        w += c;
    }
    return w;
}

namespace {

TensorElement phi_rec(const RiggedConfig& rc, std::vector<DeltaResult>* trace) {
    const int n = rc.n;
    TensorElement out;
    if (rc.B.empty()) {
        if (rc.lambda != Weight(n)) throw std::logic_error("phi: empty tensor product with nonzero weight");
        return out;
    }
    const Label lab = rc.B[0];
    if (lab == Label::kr(1)) {
        DeltaResult d = delta(rc);
        out = phi_rec(d.rc, trace);
        out.labels.insert(out.labels.begin(), lab);
        out.cols.insert(out.cols.begin(), Column({d.letter}));
        if (trace) trace->insert(trace->begin(), std::move(d));
        return out;
    }
    if (lab.is_spinor(n)) {
        SpinorResult s = delta_s(rc);
        out = phi_rec(s.rc, trace);
        out.labels.insert(out.labels.begin(), lab);
        out.cols.insert(out.cols.begin(), s.column);
        if (trace)
            for (auto it = s.steps.rbegin(); it != s.steps.rend(); ++it) trace->insert(trace->begin(), std::move(*it));
        return out;
    }
    DeltaResult d = delta(tj(rc));
    out = phi_rec(d.rc, trace);
    Column c = out.cols[0];
    c.m.push_back(d.letter);
    if (!in_label(c, n, lab)) throw std::logic_error("phi: assembled column " + c.str() + " is not in " + lab.str(n));
    out.labels[0] = lab;
    out.cols[0] = c;
    if (trace) trace->insert(trace->begin(), std::move(d));
    return out;
}

}  // namespace

TensorElement phi(const RiggedConfig& rc) { return phi_rec(rc, nullptr); }

TensorElement phi_traced(const RiggedConfig& rc, std::vector<DeltaResult>* trace) {
    if (trace) trace->clear();
    return phi_rec(rc, trace);
}

TensorElement phi_tilde(const RiggedConfig& rc) { return phi(theta(rc)); }

RiggedConfig phi_inv(int n, const TensorElement& p) {
    if (p.cols.empty()) return RiggedConfig::empty(n, Weight(n), {});
    const Label lab = p.labels[0];
    if (!in_label(p.cols[0], n, lab)) throw std::invalid_argument("phi_inv: " + p.cols[0].str() + " is not in " + lab.str(n));
    if (lab == Label::kr(1)) return delta_inv(phi_inv(n, lh(p)), p.cols[0].at(1));
    if (lab.is_spinor(n)) return delta_s_inv(phi_inv(n, lh(p)), p.cols[0], lab);
    TensorElement q = ts(n, p);
    if (!in_label(q.cols[1], n, q.labels[1])) throw std::domain_error("phi_inv: path is not in the image of ts");
    return tj_inv(phi_inv(n, q), lab);
}

}  // namespace dkr
