#ifndef DGS_POLYNOMIAL_HPP
#define DGS_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "dgs/matrix.hpp"

namespace dgs {

/// Dense univariate polynomial over Z, constant term first.
///
/// Always canonical: no trailing zero coefficients, so the zero polynomial
/// has an empty coefficient list and degree -1.
class IntPolynomial {
   public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);
    IntPolynomial(std::initializer_list<long> coefficients);

    static IntPolynomial constant(const BigInt& c);
    static IntPolynomial monomial(const BigInt& c, std::size_t degree);
    static IntPolynomial x() { return monomial(1, 1); }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    /// Coefficient of x^i; zero past the degree.
    const BigInt& coeff(std::size_t i) const;
    const BigInt& leading() const;
    std::span<const BigInt> coefficients() const noexcept { return c_; }

    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const BigInt& scalar);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
    friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
    friend IntPolynomial operator*(const BigInt& s, IntPolynomial a) { return a *= s; }
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

   private:
    void trim();

    std::vector<BigInt> c_;
};

struct DivRem {
    IntPolynomial quotient;
    IntPolynomial remainder;
};

/// Long division in Z[x]. Every quotient coefficient must be an integer
/// (always true for monic divisors); otherwise throws InexactDivision.
DivRem divrem(const IntPolynomial& a, const IntPolynomial& b);

/// a / b, requiring a zero remainder.
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);

IntPolynomial derivative(const IntPolynomial& p);
BigInt evaluate(const IntPolynomial& p, const BigInt& at);
/// p(a*x + b), expanded.
IntPolynomial substitute_linear(const IntPolynomial& p, const BigInt& a, const BigInt& b);
IntPolynomial pow(const IntPolynomial& p, unsigned e);

/// p(A) for a square integer matrix.
BigMatrix evaluate_at_matrix(const IntPolynomial& p, const BigMatrix& a);

BigInt content(const IntPolynomial& p);
/// p / content(p) with positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& p);

/// Largest absolute coefficient.
BigInt height(const IntPolynomial& p);

// Text form is canonical descending order with explicit signs, e.g.
// "x^8 - x^5 - x^3 - x - 1". The parser also accepts '*' between a
// coefficient and x, and arbitrary term order.
std::string to_string(const IntPolynomial& p);
IntPolynomial parse_polynomial(const std::string& text);

/// JSON coefficient array, constant term first.
std::string to_json_array(const IntPolynomial& p);
/// Accepts a JSON coefficient array (numbers or decimal strings) or the text form.
IntPolynomial parse_polynomial_any(const std::string& text);

}  // namespace dgs

#endif
