#include <sstream>

#include "dgs/poly_algorithms.hpp"

namespace dgs {

namespace {

void require_monic(const IntPolynomial& f, const char* who) {
    if (f.degree() < 2) fail(ErrorKind::InvalidArgument, std::string(who) + " needs degree >= 2");
    if (!f.is_monic()) fail(ErrorKind::NotMonic, std::string(who) + ": " + to_string(f));
}

}  // namespace

PerronCertificate perron_irreducible(const IntPolynomial& f) {
    require_monic(f, "Perron criterion");
    const int n = f.degree();
    PerronCertificate cert;
    cert.lhs = abs(f.coeff(n - 1));
    cert.rhs = 1;
    for (int i = 2; i <= n; ++i) cert.rhs += abs(f.coeff(n - i));
    cert.nonzero_constant = f.coeff(0) != 0;
    cert.holds = cert.nonzero_constant && cert.lhs > cert.rhs;
    return cert;
}

std::string to_string(BrauerForm form) {
    switch (form) {
        case BrauerForm::FormF: return "FormF";
        case BrauerForm::FormG: return "FormG";
        case BrauerForm::Neither: return "Neither";
    }
    return "Neither";
}

BrauerCertificate brauer_form(const IntPolynomial& f) {
    require_monic(f, "Brauer classification");
    const int m = f.degree();
    BrauerCertificate cert;

    // FormF: a_i = -coeff(m - i), all positive and non-increasing.
    {
        std::vector<BigInt> a;
        bool ok = true;
        for (int i = 1; i <= m; ++i) {
            a.push_back(-f.coeff(m - i));
            if (a.back() <= 0) ok = false;
            if (i > 1 && a[i - 1] > a[i - 2]) ok = false;
        }
        if (ok) {
            cert.form = BrauerForm::FormF;
            cert.a = std::move(a);
            cert.detail = "a_i > 0 and non-increasing";
            return cert;
        }
    }

    // FormG: odd degree 2k+1, bracket sign taken from a_1.
    if (m % 2 == 1) {
        const int k = (m - 1) / 2;
        const BigInt& top = f.coeff(m - 1);
        if (top != 0) {
            const int sign = top > 0 ? 1 : -1;
            std::vector<BigInt> a;
            for (int i = 1; i <= m; ++i) a.push_back(sign * f.coeff(m - i));
            bool ok = true;
            std::ostringstream why;
            for (int i = 2; i <= m; i += 2) {
                if (a[i - 1] != 0) {
                    ok = false;
                    why << "a_" << i << " != 0; ";
                }
            }
            for (int i = 1; i <= m; i += 2) {
                if (a[i - 1] <= 0) {
                    ok = false;
                    why << "a_" << i << " <= 0; ";
                }
                if (i >= 3 && a[i - 1] >= a[i - 3]) {
                    ok = false;
                    why << "a_" << i - 2 << " <= a_" << i << "; ";
                }
            }
            if (ok) {
                cert.form = BrauerForm::FormG;
                cert.sign = sign;
                cert.a = std::move(a);
                cert.literal_clause_conflict = k >= 2;
                cert.detail = "even-indexed a_i vanish, odd-indexed strictly decreasing and positive";
                if (cert.literal_clause_conflict) cert.detail += " (written clause also lists a_3 = 0)";
                return cert;
            }
            cert.detail = why.str();
        }
    }
    if (cert.detail.empty()) cert.detail = "matches neither coefficient shape";
    return cert;
}

}  // namespace dgs
