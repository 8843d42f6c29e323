#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace rimsurg {

/// Integer Laurent polynomial sum c_i t^(low + i). Stored trimmed: no zero
/// leading or trailing coefficients; the zero polynomial has no coefficients.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    LaurentPolynomial(std::vector<mpz_class> coeffs, long low = 0);
    static LaurentPolynomial constant(long c) { return LaurentPolynomial({mpz_class(c)}, 0); }
    static LaurentPolynomial monomial(long c, long exp) { return LaurentPolynomial({mpz_class(c)}, exp); }

    bool is_zero() const { return c_.empty(); }
    long low() const { return low_; }
    long high() const { return low_ + static_cast<long>(c_.size()) - 1; }
    const std::vector<mpz_class>& coefficients() const { return c_; }
    mpz_class coefficient(long exp) const;

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-() const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return *this = *this + o; }

    /// Exact quotient; throws std::domain_error when o does not divide *this.
    LaurentPolynomial exact_div(const LaurentPolynomial& o) const;

    /// Shifted so the lowest exponent is 0 and the leading coefficient is positive.
    LaurentPolynomial normalized() const;
    mpz_class evaluate(long t) const;
    /// Coefficients symmetric under t -> 1/t (after normalization).
    bool is_palindromic() const;

    /// "2t^2-3t+2"
    std::string to_string() const;
    /// {"base_exponent": low, "coefficients": [...]}
    nlohmann::json to_json() const;

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

private:
    void trim();

    std::vector<mpz_class> c_;
    long low_ = 0;
};

/// Determinant over Z[t, t^-1] by fraction-free elimination.
LaurentPolynomial laurent_determinant(std::vector<std::vector<LaurentPolynomial>> m);

}  // namespace rimsurg
