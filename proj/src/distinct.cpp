#include "dgs/distinct.hpp"

#include "dgs/spectra.hpp"

namespace dgs {

GcdCertificate distinct_by_gcd(const IntPolynomial& f, Field field) {
    if (f.degree() < 1) fail(ErrorKind::InvalidArgument, "squarefree test needs degree >= 1");
    GcdCertificate cert;
    cert.field = field;
    cert.f = f;
    if (field == Field::Q) {
        cert.derivative = derivative(f);
        cert.gcd = gcd_over_Q(f, cert.derivative);
        cert.squarefree = cert.gcd.degree() == 0;
        return cert;
    }
    const IntPolynomial reduced = reduce_mod2(f);
    cert.derivative = reduce_mod2(derivative(reduced));
    cert.degree_dropped = reduced.degree() < f.degree();
    cert.gcd = gcd_over_F2(reduced, cert.derivative);
    cert.squarefree = !cert.degree_dropped && cert.gcd.degree() == 0;
    return cert;
}

CyclotomicFactorization cyclotomic_factorization(const FamilySpec& spec) {
    const bool adw = spec.family == Family::ADW;
    if ((!adw && spec.family != Family::RADW) || spec.complemented || spec.n % 2 == 0)
        fail(ErrorKind::InvalidArgument, "cyclotomic factorization is only available for ADW and RADW of odd order");
    validate(spec);

    CyclotomicFactorization out;
    const long k = spec.k();
    out.polynomial = charpoly_exact(build_family(spec));
    out.cubic = adw ? IntPolynomial{-k, -1, 0, 1} : IntPolynomial{-k, -2, 0, 1};
    DivRem qr = divrem(out.polynomial, out.cubic);
    out.cubic_remainder = qr.remainder;
    out.cubic_divides = qr.remainder.is_zero();

    for (unsigned d : divisors(static_cast<unsigned>(2 * spec.n)))
        if (d > 2) out.claimed.push_back(d);
    if (!out.cubic_divides) return out;

    out.cofactor = qr.quotient;
    IntPolynomial rest = out.cofactor;
    // phi(d) >= sqrt(d/2), so no cyclotomic factor of degree <= D has d > 2 D^2.
    const unsigned bound = static_cast<unsigned>(2 * std::max(1, rest.degree()) * std::max(1, rest.degree()));
    for (unsigned d = 1; d <= bound && rest.degree() > 0; ++d) {
        const IntPolynomial phi = cyclotomic(d);
        if (phi.degree() > rest.degree()) continue;
        int mult = 0;
        for (;;) {
            DivRem step = divrem(rest, phi);
            if (!step.remainder.is_zero()) break;
            rest = std::move(step.quotient);
            ++mult;
        }
        if (mult > 0) out.found.emplace_back(d, mult);
    }
    out.residue = rest;
    out.complete = rest.degree() == 0 && (rest.coeff(0) == 1 || rest.coeff(0) == -1);

    std::vector<unsigned> found_set;
    bool simple = true;
    for (const auto& [d, mult] : out.found) {
        found_set.push_back(d);
        simple = simple && mult == 1;
    }
    out.claimed_matches = out.complete && simple && found_set == out.claimed;
    out.distinct_roots = out.complete && simple && is_squarefree(out.cubic, Field::Q) &&
                         (out.cofactor.degree() == 0 || gcd_over_Q(out.cubic, out.cofactor).degree() == 0);
    return out;
}

}  // namespace dgs
