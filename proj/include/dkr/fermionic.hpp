#pragma once

#include <map>
#include <string>
#include <vector>

#include "dkr/crystal.hpp"
#include "dkr/rootdata.hpp"

namespace dkr {

// Exact polynomial in q; only nonzero coefficients are stored.
struct QPolynomial {
    std::map<int, long long> coeffs;

    static QPolynomial monomial(int e, long long c = 1);
    QPolynomial& operator+=(const QPolynomial& o);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    QPolynomial shifted(int e) const;  // q^e * this
    long long at_one() const;
    long long coeff(int e) const;
    bool is_zero() const { return coeffs.empty(); }
    std::string str() const;  // "1 + q + 2q^2"
    bool operator==(const QPolynomial&) const = default;
};

// [m+p choose m]_q by the Gaussian recurrence.
QPolynomial qbinomial(int m, int p);

QPolynomial x_sum(int n, const Weight& lambda, const TensorSpec& B);
QPolynomial m_sum(int n, const Weight& lambda, const TensorSpec& B);

struct XMReport {
    QPolynomial x, m;
    bool equal = false;
    std::vector<int> differing_exponents;
};
XMReport verify_xm(int n, const Weight& lambda, const TensorSpec& B);

}  // namespace dkr
