#include <cstdlib>
#include <string>

#include "dgs/spectra.hpp"

namespace dgs {

int enumeration_cap_from_env() {
    const char* raw = std::getenv("DIGRAPH_SPECTRA_CAP");
    if (!raw || !*raw) return kDefaultEnumerationCap;
    try {
        std::size_t used = 0;
        int cap = std::stoi(raw, &used);
        if (used == std::string(raw).size() && cap >= 1) return cap;
    } catch (const std::exception&) {
    }
    fail(ErrorKind::InvalidParameter, std::string("DIGRAPH_SPECTRA_CAP is not a positive integer: '") + raw + "'");
}

IntPolynomial charpoly_exact(const Digraph& d) {
    const std::size_t n = static_cast<std::size_t>(d.order());
    const BigMatrix a = d.adjacency();
    std::vector<BigInt> coeff(n + 1, BigInt(0));
    coeff[n] = 1;
    // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
    BigMatrix m(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += coeff[n - k + 1];
        BigInt tr = (a * m).trace();
        ensure(mpz_divisible_ui_p(tr.get_mpz_t(), k) != 0, "Faddeev-LeVerrier trace not divisible by " + std::to_string(k));
        mpz_divexact_ui(tr.get_mpz_t(), tr.get_mpz_t(), k);
        coeff[n - k] = -tr;
    }
    return IntPolynomial(std::move(coeff));
}

}  // namespace dgs
