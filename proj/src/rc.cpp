#include "dkr/rc.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace dkr {

RiggedConfig RiggedConfig::empty(int n, const Weight& lambda, const TensorSpec& B) {
    check_rank(n);
    RiggedConfig rc;
    rc.n = n;
    rc.lambda = lambda;
    rc.B = B;
    rc.nu.assign(n, {});
    return rc;
}

void RiggedConfig::normalize() {
    for (auto& p : nu) std::sort(p.begin(), p.end(), std::greater<>());
}

int RiggedConfig::m(int a, int i) const {
    int c = 0;
    for (const Row& r : part(a)) c += r.len == i;
    return c;
}

std::vector<Shape> RiggedConfig::shapes() const {
    std::vector<Shape> s(n);
    for (int a = 0; a < n; ++a)
        for (const Row& r : nu[a]) s[a].push_back(r.len);
    for (auto& x : s) std::sort(x.begin(), x.end(), std::greater<>());
    return s;
}

std::string RiggedConfig::str() const {
    std::ostringstream os;
    for (int a = 1; a <= n; ++a) {
        if (a > 1) os << " | ";
        os << "(";
        bool first = true;
        for (const Row& r : part(a)) {
            os << (first ? "" : " ") << r.len << ":" << r.rig;
            first = false;
        }
        os << ")";
    }
    return os.str();
}

std::vector<int> l_coeffs(int n, const TensorSpec& B) {
    std::vector<int> c(n, 0);
    for (Label lab : B) {
        switch (lab.kind) {
            case Kind::KR: c[lab.k - 1] += 1; break;
            case Kind::HatNm1:
                c[n - 2] += 1;
                c[n - 1] += 1;
                break;
            case Kind::HatN:
            case Kind::EN: c[n - 1] += 2; break;
            case Kind::HatBarN:
            case Kind::ENm1: c[n - 2] += 2; break;
        }
    }
    return c;
}

Weight l_vector(int n, const TensorSpec& B) { return weight_from_lambda(n, l_coeffs(n, B)); }

std::optional<std::vector<int>> config_sizes(int n, const Weight& lambda, const TensorSpec& B) {
    const Weight v = l_vector(n, B) - lambda;
    // Triangular solve on doubled coordinates: the partial sums give 2 c_a for
    // a <= n-2, and the last two rows give 4 c_{n-1}, 4 c_n.
    std::vector<int> twice(n);
    int acc = 0;
    for (int a = 0; a < n - 2; ++a) twice[a] = acc += v.eps2[a];
    const int x = v.eps2[n - 2], y = v.eps2[n - 1];
    const int four_nm1 = x - y + twice[n - 3], four_n = x + y + twice[n - 3];
    if (four_nm1 % 4 || four_n % 4) return std::nullopt;
    std::vector<int> c(n);
    for (int a = 0; a < n - 2; ++a) {
        if (twice[a] % 2) return std::nullopt;
        c[a] = twice[a] / 2;
    }
    c[n - 2] = four_nm1 / 4;
    c[n - 1] = four_n / 4;
    Weight back(n);
    for (int a = 1; a <= n; ++a) back += c[a - 1] * simple_root(n, a);
    if (back != v) return std::nullopt;
    for (int x2 : c)
        if (x2 < 0) return std::nullopt;
    return c;
}

static int q_boxes(const Shape& s, int i) {
    int q = 0;
    for (int j : s) q += std::min(i, j);
    return q;
}

int vacancy(int n, const std::vector<int>& lc, const std::vector<Shape>& shapes, int a, int i) {
    int p = lc[a - 1];
    for (int b = 1; b <= n; ++b) {
        int c = cartan_pairing(n, a, b);
        if (c) p -= c * q_boxes(shapes[b - 1], i);
    }
    return p;
}

int vacancy(const RiggedConfig& rc, int a, int i) {
    return vacancy(rc.n, l_coeffs(rc.n, rc.B), rc.shapes(), a, i);
}

bool is_admissible(int n, const std::vector<int>& lc, const std::vector<Shape>& shapes) {
    for (int a = 1; a <= n; ++a) {
        int last = 0;
        for (int i : shapes[a - 1]) {
            if (i == last) continue;
            last = i;
            if (vacancy(n, lc, shapes, a, i) < 0) return false;
        }
    }
    return true;
}

bool is_admissible(const RiggedConfig& rc) { return is_admissible(rc.n, l_coeffs(rc.n, rc.B), rc.shapes()); }

bool is_valid_rc(const RiggedConfig& rc) {
    if (static_cast<int>(rc.nu.size()) != rc.n) return false;
    auto sizes = config_sizes(rc.n, rc.lambda, rc.B);
    if (!sizes) return false;
    const auto shapes = rc.shapes();
    for (int a = 0; a < rc.n; ++a) {
        int s = 0;
        for (int i : shapes[a]) {
            if (i < 1) return false;
            s += i;
        }
        if (s != (*sizes)[a]) return false;
    }
    const auto lc = l_coeffs(rc.n, rc.B);
    if (!is_admissible(rc.n, lc, shapes)) return false;
    for (int a = 1; a <= rc.n; ++a)
        for (const Row& r : rc.part(a)) {
            int p = vacancy(rc.n, lc, shapes, a, r.len);
            if (r.rig < 0 || r.rig > p) return false;
        }
    return true;
}

static void partitions(int total, int max_part, Shape& cur, std::vector<Shape>& out) {
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(total, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions(total - k, k, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<Shape>> admissible_shapes(int n, const Weight& lambda, const TensorSpec& B) {
    std::vector<std::vector<Shape>> out;
    auto sizes = config_sizes(n, lambda, B);
    if (!sizes) return out;
    std::vector<std::vector<Shape>> per(n);
    for (int a = 0; a < n; ++a) {
        Shape cur;
        partitions((*sizes)[a], (*sizes)[a], cur, per[a]);
    }
    const auto lc = l_coeffs(n, B);
    std::vector<Shape> pick(n);
    std::function<void(int)> rec = [&](int a) {
        if (a == n) {
            if (is_admissible(n, lc, pick)) out.push_back(pick);
            return;
        }
        for (const Shape& s : per[a]) {
            pick[a] = s;
            rec(a + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<RiggedConfig> enumerate_rc(int n, const Weight& lambda, const TensorSpec& B) {
    std::vector<RiggedConfig> out;
    const auto lc = l_coeffs(n, B);
    for (const auto& shapes : admissible_shapes(n, lambda, B)) {
        // One block per (a, length): m riggings, nonincreasing, in [0, p].
        struct Block {
            int a, len, m, p;
        };
        std::vector<Block> blocks;
        for (int a = 1; a <= n; ++a) {
            const Shape& s = shapes[a - 1];
            for (size_t j = 0; j < s.size();) {
                size_t k = j;
                while (k < s.size() && s[k] == s[j]) ++k;
                blocks.push_back({a, s[j], static_cast<int>(k - j), vacancy(n, lc, shapes, a, s[j])});
                j = k;
            }
        }
        RiggedConfig rc = RiggedConfig::empty(n, lambda, B);
        std::function<void(size_t)> rec = [&](size_t bi) {
            if (bi == blocks.size()) {
                RiggedConfig c = rc;
                c.normalize();
                out.push_back(std::move(c));
                return;
            }
            const Block& bl = blocks[bi];
            std::function<void(int, int)> fill = [&](int left, int top) {
                if (left == 0) {
                    rec(bi + 1);
                    return;
                }
                for (int x = top; x >= 0; --x) {
                    rc.part(bl.a).push_back({bl.len, x});
                    fill(left - 1, x);
                    rc.part(bl.a).pop_back();
                }
            };
            fill(bl.m, bl.p);
        };
        rec(0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int cc_shape(int n, const std::vector<Shape>& shapes) {
    int twice = 0;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            int c = cartan_pairing(n, a, b);
            if (!c) continue;
            for (int j : shapes[a - 1])
                for (int k : shapes[b - 1]) twice += c * std::min(j, k);
        }
    return twice / 2;
}

int cc(const RiggedConfig& rc) {
    int s = cc_shape(rc.n, rc.shapes());
    for (const auto& p : rc.nu)
        for (const Row& r : p) s += r.rig;
    return s;
}

RiggedConfig theta(const RiggedConfig& rc) {
    RiggedConfig out = rc;
    const auto lc = l_coeffs(rc.n, rc.B);
    const auto shapes = rc.shapes();
    for (int a = 1; a <= rc.n; ++a)
        for (Row& r : out.part(a)) r.rig = vacancy(rc.n, lc, shapes, a, r.len) - r.rig;
    out.normalize();
    return out;
}

bool is_singular(const RiggedConfig& rc, int a, int i) {
    const int p = vacancy(rc, a, i);
    for (const Row& r : rc.part(a))
        if (r.len == i && r.rig == p) return true;
    return false;
}

TensorSpec double_spec(int n, const TensorSpec& B) {
    TensorSpec out;
    for (Label lab : B) {
        if (lab.kind != Kind::KR) throw std::invalid_argument("double_spec: only KR factors can be doubled");
        if (lab.k == n) out.push_back(Label::of(n, Kind::EN));
        else if (lab.k == n - 1) out.push_back(Label::of(n, Kind::ENm1));
        else {
            out.push_back(lab);
            out.push_back(lab);
        }
    }
    return out;
}

RiggedConfig emb_rc(const RiggedConfig& rc) {
    RiggedConfig out = rc;
    out.lambda = 2 * rc.lambda;
    out.B = double_spec(rc.n, rc.B);
    for (auto& p : out.nu)
        for (Row& r : p) {
            r.len *= 2;
            r.rig *= 2;
        }
    return out;
}

RiggedConfig emb_rc_inverse(const RiggedConfig& rc, const TensorSpec& B) {
    if (double_spec(rc.n, B) != rc.B) throw std::invalid_argument("emb_rc_inverse: tensor factors do not match");
    RiggedConfig out = rc;
    out.B = B;
    for (int& x : out.lambda.eps2) {
        if (x % 2) throw std::logic_error("emb_rc_inverse: lambda is not divisible by 2");
        x /= 2;
    }
    for (auto& p : out.nu)
        for (Row& r : p) {
            if (r.len % 2 || r.rig % 2) throw std::logic_error("emb_rc_inverse: odd length or rigging");
            r.len /= 2;
            r.rig /= 2;
        }
    return out;
}

}  // namespace dkr
