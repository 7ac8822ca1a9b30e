#include <algorithm>
#include <utility>

#include "dgs/poly_algorithms.hpp"

namespace dgs {

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b, all in Z[x].
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    const int db = b.degree();
    int steps = a.degree() - db + 1;
    IntPolynomial r = a;
    const BigInt& lead = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        IntPolynomial shift = IntPolynomial::monomial(r.leading(), r.degree() - db) * b;
        r = r * lead - shift;
        --steps;
    }
    for (; steps > 0; --steps) r *= lead;
    return r;
}

IntPolynomial divide_by_constant(const IntPolynomial& p, const BigInt& c) {
    std::vector<BigInt> out(p.coefficients().begin(), p.coefficients().end());
    for (auto& v : out) {
        ensure(mpz_divisible_p(v.get_mpz_t(), c.get_mpz_t()) != 0, "subresultant division was not exact");
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    }
    return IntPolynomial(std::move(out));
}

BigInt power(const BigInt& b, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
}

using F2Poly = std::vector<unsigned char>;

void trim(F2Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

F2Poly to_f2(const IntPolynomial& f) {
    F2Poly out;
    for (const auto& c : f.coefficients()) out.push_back(mpz_odd_p(c.get_mpz_t()) ? 1 : 0);
    trim(out);
    return out;
}

F2Poly f2_mod(F2Poly a, const F2Poly& b) {
    const std::size_t db = b.size() - 1;
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] ^= b[i];
        trim(a);
    }
    return a;
}

}  // namespace

IntPolynomial gcd_over_Q(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() && g.is_zero()) fail(ErrorKind::InvalidArgument, "gcd of two zero polynomials");
    if (f.is_zero()) return primitive_part(g);
    if (g.is_zero()) return primitive_part(f);

    IntPolynomial a = primitive_part(f);
    IntPolynomial b = primitive_part(g);
    if (a.degree() < b.degree()) std::swap(a, b);

    BigInt gg(1), h(1);
    while (true) {
        const unsigned long delta = static_cast<unsigned long>(a.degree() - b.degree());
        IntPolynomial r = pseudo_remainder(a, b);
        if (r.is_zero()) return primitive_part(b);
        if (r.degree() == 0) return IntPolynomial{1};
        a = std::move(b);
        b = divide_by_constant(r, gg * power(h, delta));
        gg = a.leading();
        if (delta == 0) continue;
        BigInt num = power(gg, delta);
        BigInt den = power(h, delta - 1);
        ensure(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0, "subresultant scale was not exact");
        mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
}

IntPolynomial reduce_mod2(const IntPolynomial& f) {
    F2Poly p = to_f2(f);
    return IntPolynomial(std::vector<BigInt>(p.begin(), p.end()));
}

IntPolynomial gcd_over_F2(const IntPolynomial& f, const IntPolynomial& g) {
    F2Poly a = to_f2(f), b = to_f2(g);
    if (a.empty() && b.empty()) fail(ErrorKind::BothZeroMod2, "both polynomials vanish mod 2");
    while (!b.empty()) {
        F2Poly r = f2_mod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return IntPolynomial(std::vector<BigInt>(a.begin(), a.end()));
}

bool is_squarefree(const IntPolynomial& f, Field field) {
    if (f.degree() < 1) fail(ErrorKind::InvalidArgument, "squarefree test needs degree >= 1");
    if (field == Field::Q) return gcd_over_Q(f, derivative(f)).degree() == 0;
    if (reduce_mod2(f).degree() != f.degree()) return false;
    return gcd_over_F2(f, derivative(f)).degree() == 0;
}

}  // namespace dgs
