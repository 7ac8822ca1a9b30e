#include <map>

#include "dgs/poly_algorithms.hpp"

namespace dgs {

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

IntPolynomial cyclotomic(unsigned d) {
    if (d == 0) fail(ErrorKind::InvalidArgument, "cyclotomic index must be positive");
    std::map<unsigned, IntPolynomial> phi;
    for (unsigned e : divisors(d)) {
        IntPolynomial p = IntPolynomial::monomial(1, e) - IntPolynomial{1};
        for (unsigned f : divisors(e))
            if (f < e) p = exact_divide(p, phi.at(f));
        ensure(p.is_monic() && static_cast<unsigned long>(p.degree()) == euler_phi(e),
               "cyclotomic polynomial " + std::to_string(e) + " has wrong shape");
        phi.emplace(e, std::move(p));
    }
    return phi.at(d);
}

}  // namespace dgs
