#include "hyperarr/poincare.hpp"

#include <algorithm>

#include "hyperarr/errors.hpp"
#include "hyperarr/kernels.hpp"
#include "hyperarr/matroid.hpp"

namespace hyperarr {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::one_plus_t_pow(std::size_t k) {
    IntPolynomial p({BigInt(1)});
    const IntPolynomial f({BigInt(1), BigInt(1)});
    for (std::size_t i = 0; i < k; ++i) p = p * f;
    return p;
}

IntPolynomial monomial(std::size_t d, long coefficient) {
    std::vector<BigInt> c(d + 1, BigInt(0));
    c[d] = coefficient;
    return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::evaluate(const BigInt& t) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

IntPolynomial IntPolynomial::divide_by_one_plus_t(BigInt& remainder) const {
    if (coeffs_.empty()) {
        remainder = 0;
        return {};
    }
    // Horner at the root t = -1, from the top coefficient down.
    std::vector<BigInt> q(coeffs_.size() - 1);
    BigInt carry = 0;
    for (std::size_t d = coeffs_.size(); d-- > 0;) {
        carry = coeffs_[d] - carry;
        if (d > 0) q[d - 1] = carry;
    }
    remainder = carry;
    return IntPolynomial(std::move(q));
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        if (d) s += " + ";
        s += coeffs_[d].get_str();
        if (d == 1) s += " t";
        if (d > 1) s += " t^" + std::to_string(d);
    }
    return s;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial poincare(const Arrangement& a, std::size_t max_n, Exec exec) {
    if (a.size() > std::min(max_n, kMaxSubsetTableN))
        throw Error(ErrorKind::ResourceLimit, "Whitney expansion needs n <= " +
                                                  std::to_string(std::min(max_n, kMaxSubsetTableN)));
    const auto counts = exec == Exec::Parallel ? kernels::whitney_coefficients_parallel(a)
                                               : kernels::whitney_coefficients_serial(a);
    std::vector<BigInt> coeffs;
    for (auto c : counts) coeffs.emplace_back(static_cast<long>(c));
    return IntPolynomial(std::move(coeffs));
}

BigInt chamber_count_zaslavsky(const Arrangement& a, std::size_t max_n) {
    return poincare(a, max_n).evaluate(BigInt(1));
}

bool divisible_by_one_plus_t_squared(const IntPolynomial& p) {
    BigInt r1, r2;
    const auto q = p.divide_by_one_plus_t(r1);
    if (r1 != 0) return false;
    q.divide_by_one_plus_t(r2);
    return r2 == 0;
}

bool is_decomposable_poincare(const Arrangement& a, std::size_t max_n) {
    return divisible_by_one_plus_t_squared(poincare(a, max_n));
}

}  // namespace hyperarr
