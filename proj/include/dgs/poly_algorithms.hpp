#ifndef DGS_POLY_ALGORITHMS_HPP
#define DGS_POLY_ALGORITHMS_HPP

#include <string>
#include <vector>

#include "dgs/polynomial.hpp"

namespace dgs {

/// d-th cyclotomic polynomial, by exact division of x^d - 1 by the
/// cyclotomic factors of its proper divisors.
IntPolynomial cyclotomic(unsigned d);

unsigned long euler_phi(unsigned long n);
std::vector<unsigned> divisors(unsigned n);

/// gcd over Q via the subresultant remainder sequence, normalised to a
/// primitive polynomial with positive leading coefficient. gcd(f, 0) is
/// primitive_part(f); both zero is an InvalidArgument.
IntPolynomial gcd_over_Q(const IntPolynomial& f, const IntPolynomial& g);

/// Euclidean gcd after reducing coefficients mod 2. Result has 0/1
/// coefficients and is monic.
IntPolynomial gcd_over_F2(const IntPolynomial& f, const IntPolynomial& g);

/// Coefficients reduced into {0, 1}.
IntPolynomial reduce_mod2(const IntPolynomial& f);

enum class Field { Q, F2 };

/// gcd(f, f') has degree 0 over the chosen field. Over F2 a true verdict
/// implies squarefree over Q; if reduction mod 2 lowers the degree the F2
/// test is inconclusive and reports false.
bool is_squarefree(const IntPolynomial& f, Field field);

struct PerronCertificate {
    bool holds = false;
    BigInt lhs;  // |a_1|
    BigInt rhs;  // 1 + |a_2| + ... + |a_n|
    bool nonzero_constant = false;
};

/// Perron's sufficient irreducibility test for monic f of degree >= 2.
/// Requires a_n != 0 as well as |a_1| > 1 + |a_2| + ... + |a_n|.
/// `holds == false` is inconclusive, not a proof of reducibility.
PerronCertificate perron_irreducible(const IntPolynomial& f);

enum class BrauerForm { FormF, FormG, Neither };

std::string to_string(BrauerForm form);

struct BrauerCertificate {
    BrauerForm form = BrauerForm::Neither;
    /// The a_i read off f (f = x^m -/+ a_1 x^{m-1} -/+ ... ).
    std::vector<BigInt> a;
    /// FormG only: +1 or -1 for the sign in front of the bracket.
    int sign = 0;
    /// FormG with m >= 2: the written clause a_2 = a_3 = ... = a_{2m} = 0
    /// contradicts a_3 > 0. Classification uses the even-index reading.
    bool literal_clause_conflict = false;
    std::string detail;
};

/// Classifies a monic f as one of the two coefficient shapes known to be
/// irreducible over Q:
///   FormF: x^m - a_1 x^{m-1} - ... - a_m, a_i > 0, a_1 >= a_2 >= ... >= a_m, m >= 2
///   FormG: x^{2m+1} +/- (a_1 x^{2m} + ... + a_{2m+1}), a_even = 0,
///          a_1 > a_3 > ... > a_{2m+1} > 0
BrauerCertificate brauer_form(const IntPolynomial& f);

}  // namespace dgs

#endif
