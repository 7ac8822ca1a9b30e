#ifndef DGS_DISTINCT_HPP
#define DGS_DISTINCT_HPP

#include <utility>
#include <vector>

#include "dgs/families.hpp"
#include "dgs/poly_algorithms.hpp"

namespace dgs {

/// gcd(f, f') over Q or F2, with the verdict it certifies.
struct GcdCertificate {
    Field field = Field::Q;
    IntPolynomial f;
    IntPolynomial derivative;  // reduced mod 2 for F2
    IntPolynomial gcd;
    /// gcd has degree 0. Over F2 this also needs deg(f mod 2) = deg f.
    bool squarefree = false;
    /// F2 only: reduction mod 2 dropped the degree, so nothing follows.
    bool degree_dropped = false;
};

GcdCertificate distinct_by_gcd(const IntPolynomial& f, Field field);

/// Psi of ADW_n or RADW_n (odd n = 2k+1) divided by the cubic x^3 - x - k
/// (ADW) or x^3 - 2x - k (RADW), then the cofactor split into cyclotomic
/// factors by repeated exact trial division.
struct CyclotomicFactorization {
    IntPolynomial polynomial;
    IntPolynomial cubic;
    IntPolynomial cubic_remainder;
    bool cubic_divides = false;
    IntPolynomial cofactor;
    /// (d, multiplicity) of each Phi_d dividing the cofactor, ascending d.
    std::vector<std::pair<unsigned, int>> found;
    /// What is left once every cyclotomic factor is removed; +-1 when complete.
    IntPolynomial residue;
    bool complete = false;
    /// The index set {d | 2n, d > 2} written next to the product.
    std::vector<unsigned> claimed;
    bool claimed_matches = false;
    /// Complete, every multiplicity 1, cubic squarefree and coprime to the cofactor.
    bool distinct_roots = false;
};

/// Only ADW and RADW of odd order are supported; others are InvalidArgument.
CyclotomicFactorization cyclotomic_factorization(const FamilySpec& spec);

}  // namespace dgs

#endif
