#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hyperarr/arrangement.hpp"
#include "hyperarr/execution.hpp"
#include "hyperarr/rational.hpp"

namespace hyperarr {

/// Integer polynomial, coeffs[d] is the coefficient of t^d; no trailing zeros.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    /// (1 + t)^k
    static IntPolynomial one_plus_t_pow(std::size_t k);

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    BigInt coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : BigInt(0); }
    BigInt evaluate(const BigInt& t) const;

    /// Synthetic division by (1 + t): quotient, with the remainder in `remainder`.
    IntPolynomial divide_by_one_plus_t(BigInt& remainder) const;

    /// "c0 + c1 t + c2 t^2 + ..." with every coefficient shown.
    std::string to_string() const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// t^d
IntPolynomial monomial(std::size_t d, long coefficient = 1);

/// Poincare polynomial by the Whitney subset expansion
///   pi(A, t) = sum over B subset of A of (-1)^{|B| - r(B)} t^{r(B)}.
/// Throws Error(ResourceLimit) for n > max_n.
IntPolynomial poincare(const Arrangement& a, std::size_t max_n = 20, Exec exec = Exec::Parallel);

/// pi(A, 1), the number of chambers.
BigInt chamber_count_zaslavsky(const Arrangement& a, std::size_t max_n = 20);

/// True iff (1 + t)^2 divides pi(A, t).
bool is_decomposable_poincare(const Arrangement& a, std::size_t max_n = 20);
bool divisible_by_one_plus_t_squared(const IntPolynomial& p);

}  // namespace hyperarr
