#include "dkr/fermionic.hpp"

#include <mutex>
#include <set>

#include "dkr/energy.hpp"
#include "dkr/rc.hpp"

namespace dkr {

QPolynomial QPolynomial::monomial(int e, long long c) {
    QPolynomial p;
    if (c) p.coeffs[e] = c;
    return p;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    for (const auto& [e, c] : o.coeffs) {
        long long& x = coeffs[e];
        x += c;
        if (x == 0) coeffs.erase(e);
    }
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial r;
    for (const auto& [e1, c1] : a.coeffs)
        for (const auto& [e2, c2] : b.coeffs) r.coeffs[e1 + e2] += c1 * c2;
    std::erase_if(r.coeffs, [](const auto& kv) { return kv.second == 0; });
    return r;
}

QPolynomial QPolynomial::shifted(int e) const {
    QPolynomial r;
    for (const auto& [k, c] : coeffs) r.coeffs[k + e] = c;
    return r;
}

long long QPolynomial::at_one() const {
    long long s = 0;
    for (const auto& kv : coeffs) s += kv.second;
    return s;
}

long long QPolynomial::coeff(int e) const {
    auto it = coeffs.find(e);
    return it == coeffs.end() ? 0 : it->second;
}

std::string QPolynomial::str() const {
    if (coeffs.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : coeffs) {
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        long long a = c < 0 ? -c : c;
        if (e == 0) {
            s += std::to_string(a);
            continue;
        }
        if (a != 1) s += std::to_string(a);
        s += "q";
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

QPolynomial qbinomial(int m, int p) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, QPolynomial> memo;
    if (m < 0 || p < 0) return {};
    if (m == 0 || p == 0) return QPolynomial::monomial(0);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({m, p});
        if (it != memo.end()) return it->second;
    }
    // [m+p, m] = [m+p-1, m-1] + q^m [m+p-1, m]
    QPolynomial r = qbinomial(m - 1, p) + qbinomial(m, p - 1).shifted(m);
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(std::make_pair(m, p), r);
    return r;
}

QPolynomial x_sum(int n, const Weight& lambda, const TensorSpec& B) {
    QPolynomial x;
    for (const auto& b : enumerate_paths(n, lambda, B)) x += QPolynomial::monomial(tensor_energy(n, b).value);
    return x;
}

QPolynomial m_sum(int n, const Weight& lambda, const TensorSpec& B) {
    QPolynomial total;
    const auto lc = l_coeffs(n, B);
    for (const auto& shapes : admissible_shapes(n, lambda, B)) {
        QPolynomial term = QPolynomial::monomial(cc_shape(n, shapes));
        for (int a = 1; a <= n; ++a) {
            std::map<int, int> mult;
            for (int i : shapes[a - 1]) ++mult[i];
            for (const auto& [i, m] : mult) term = term * qbinomial(m, vacancy(n, lc, shapes, a, i));
        }
        total += term;
    }
    return total;
}

XMReport verify_xm(int n, const Weight& lambda, const TensorSpec& B) {
    XMReport r;
    r.x = x_sum(n, lambda, B);
    r.m = m_sum(n, lambda, B);
    r.equal = r.x == r.m;
    std::set<int> exps;
    for (const auto& kv : r.x.coeffs) exps.insert(kv.first);
    for (const auto& kv : r.m.coeffs) exps.insert(kv.first);
    for (int e : exps)
        if (r.x.coeff(e) != r.m.coeff(e)) r.differing_exponents.push_back(e);
    return r;
}

}  // namespace dkr
