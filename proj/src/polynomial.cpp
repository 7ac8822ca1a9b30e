#include "dgs/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json_util.hpp"

namespace dgs {

namespace {
const BigInt kZero(0);
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
    c_.reserve(coefficients.size());
    for (long v : coefficients) c_.emplace_back(v);
    trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t degree) {
    std::vector<BigInt> v(degree + 1, BigInt(0));
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPolynomial::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : kZero; }

const BigInt& IntPolynomial::leading() const {
    if (c_.empty()) fail(ErrorKind::InvalidArgument, "zero polynomial has no leading coefficient");
    return c_.back();
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), BigInt(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), BigInt(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
    if (c_.empty() || rhs.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<BigInt> out(c_.size() + rhs.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
    }
    c_ = std::move(out);
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
    for (auto& v : c_) v *= scalar;
    trim();
    return *this;
}

DivRem divrem(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    const int db = b.degree();
    std::vector<BigInt> rem(a.coefficients().begin(), a.coefficients().end());
    if (a.degree() < db) return {IntPolynomial(), a};
    std::vector<BigInt> quo(a.degree() - db + 1, BigInt(0));
    const BigInt& lead = b.leading();
    for (int i = a.degree(); i >= db; --i) {
        BigInt& top = rem[i];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            fail(ErrorKind::InexactDivision, "quotient of " + to_string(a) + " by " + to_string(b) + " is not integral");
        BigInt q = top / lead;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
        quo[i - db] = q;
    }
    return {IntPolynomial(std::move(quo)), IntPolynomial(std::move(rem))};
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero())
        fail(ErrorKind::InexactDivision, to_string(b) + " does not divide " + to_string(a) + " (remainder " + to_string(r) + ")");
    return q;
}

IntPolynomial derivative(const IntPolynomial& p) {
    if (p.degree() < 1) return {};
    std::vector<BigInt> out(p.degree());
    for (int i = 1; i <= p.degree(); ++i) out[i - 1] = p.coeff(i) * i;
    return IntPolynomial(std::move(out));
}

BigInt evaluate(const IntPolynomial& p, const BigInt& at) {
    BigInt acc(0);
    for (int i = p.degree(); i >= 0; --i) acc = acc * at + p.coeff(i);
    return acc;
}

IntPolynomial substitute_linear(const IntPolynomial& p, const BigInt& a, const BigInt& b) {
    const IntPolynomial lin(std::vector<BigInt>{b, a});
    IntPolynomial acc;
    for (int i = p.degree(); i >= 0; --i) {
        acc *= lin;
        acc += IntPolynomial::constant(p.coeff(i));
    }
    return acc;
}

IntPolynomial pow(const IntPolynomial& p, unsigned e) {
    IntPolynomial result{1};
    IntPolynomial base = p;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

BigMatrix evaluate_at_matrix(const IntPolynomial& p, const BigMatrix& a) {
    const std::size_t n = a.size();
    BigMatrix acc(n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * a;
        for (std::size_t r = 0; r < n; ++r) acc(r, r) += p.coeff(i);
    }
    return acc;
}

BigInt content(const IntPolynomial& p) {
    BigInt g(0);
    for (const auto& v : p.coefficients()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    BigInt g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<BigInt> out(p.coefficients().begin(), p.coefficients().end());
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(out));
}

BigInt height(const IntPolynomial& p) {
    BigInt h(0);
    for (const auto& v : p.coefficients()) h = std::max<BigInt>(h, abs(v));
    return h;
}

std::string to_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const BigInt& c = p.coeff(i);
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) out << mag;
        if (i >= 1) out << 'x';
        if (i >= 2) out << '^' << i;
    }
    return out.str();
}

IntPolynomial parse_polynomial(const std::string& text) {
    // Normalise: drop whitespace, map the unicode minus sign to '-'.
    std::string s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char ch = static_cast<unsigned char>(text[i]);
        if (ch == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            s.push_back('-');
            i += 2;
        } else if (!std::isspace(ch)) {
            s.push_back(static_cast<char>(ch));
        }
    }
    if (s.empty()) fail(ErrorKind::ParseError, "empty polynomial");

    auto bad = [&](const std::string& why) -> void { fail(ErrorKind::ParseError, "'" + text + "': " + why); };
    std::vector<BigInt> coeffs;
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            bad("expected '+' or '-' at offset " + std::to_string(pos));
        }
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        BigInt c(1);
        bool have_digits = pos > start;
        if (have_digits) c = BigInt(s.substr(start, pos - start));
        std::size_t deg = 0;
        if (pos < s.size() && s[pos] == '*') {
            if (!have_digits) bad("'*' without a coefficient");
            ++pos;
            if (pos >= s.size() || s[pos] != 'x') bad("expected 'x' after '*'");
        }
        if (pos < s.size() && s[pos] == 'x') {
            ++pos;
            deg = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::size_t e0 = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos == e0) bad("missing exponent");
                deg = std::stoul(s.substr(e0, pos - e0));
            }
        } else if (!have_digits) {
            bad("empty term");
        }
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, BigInt(0));
        coeffs[deg] += sign * c;
    }
    return IntPolynomial(std::move(coeffs));
}

std::string to_json_array(const IntPolynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : p.coefficients()) arr.push_back(detail::bigint_json(v));
    return arr.dump();
}

IntPolynomial parse_polynomial_any(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        nlohmann::json arr;
        try {
            arr = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            fail(ErrorKind::ParseError, e.what());
        }
        std::vector<BigInt> coeffs;
        for (const auto& v : arr) coeffs.push_back(detail::json_bigint(v));
        return IntPolynomial(std::move(coeffs));
    }
    return parse_polynomial(text);
}

}  // namespace dgs
