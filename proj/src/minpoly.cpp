#include "dgs/spectra.hpp"

namespace dgs {

namespace {

struct KrylovRow {
    std::vector<BigInt> vec;    // reduced Krylov vector, length n^2
    std::vector<BigInt> combo;  // vec = sum combo[t] * vec(A^t)
    std::size_t pivot = 0;
};

void remove_content(std::vector<BigInt>& v, std::vector<BigInt>& t) {
    BigInt g(0);
    for (const auto* part : {&v, &t}) {
        for (const auto& x : *part) {
            if (x == 0) continue;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g == 1) return;
        }
    }
    if (g <= 1) return;
    for (auto* part : {&v, &t})
        for (auto& x : *part) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

IntPolynomial minimal_polynomial(const Digraph& d) {
    const std::size_t n = static_cast<std::size_t>(d.order());
    const BigMatrix a = d.adjacency();
    std::vector<KrylovRow> basis;
    BigMatrix power = BigMatrix::identity(n);

    for (std::size_t j = 0; j <= n; ++j) {
        std::vector<BigInt> w(power.values().begin(), power.values().end());
        std::vector<BigInt> combo(j + 1, BigInt(0));
        combo[j] = 1;
        for (const KrylovRow& b : basis) {
            if (w[b.pivot] == 0) continue;
            const BigInt scale_w = b.vec[b.pivot];
            const BigInt scale_b = w[b.pivot];
            for (std::size_t i = 0; i < w.size(); ++i) w[i] = scale_w * w[i] - scale_b * b.vec[i];
            for (std::size_t t = 0; t < combo.size(); ++t) {
                combo[t] *= scale_w;
                if (t < b.combo.size()) combo[t] -= scale_b * b.combo[t];
            }
            remove_content(w, combo);
        }

        std::size_t pivot = 0;
        while (pivot < w.size() && w[pivot] == 0) ++pivot;
        if (pivot == w.size()) {
            // sum combo[t] A^t = 0 with combo[j] != 0: scale to monic.
            const BigInt lead = combo[j];
            ensure(lead != 0, "Krylov dependency lost its leading term");
            for (auto& c : combo) {
                ensure(mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t()) != 0,
                       "minimal polynomial of an integer matrix is not integral");
                mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), lead.get_mpz_t());
            }
            return IntPolynomial(std::move(combo));
        }
        basis.push_back({std::move(w), std::move(combo), pivot});
        power = power * a;
    }
    fail(ErrorKind::InternalError, "no Krylov dependency within n+1 powers");
}

bool is_non_derogatory(const Digraph& d) { return minimal_polynomial(d).degree() == d.order(); }

}  // namespace dgs
