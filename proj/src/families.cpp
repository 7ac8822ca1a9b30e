#include "dgs/families.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "dgs/poly_algorithms.hpp"

namespace dgs {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 20> kNames{{
    {Family::DCn, "DCn"},
    {Family::DCn_i_nmi, "DCn_i_nmi"},
    {Family::DCn_i_kmi, "DCn_i_kmi"},
    {Family::DCn_i_kpjpi, "DCn_i_kpjpi"},
    {Family::DCn_tips, "DCn_tips"},
    {Family::DCn_m, "DCn_m"},
    {Family::ADF, "ADF"},
    {Family::ADF_loops, "ADF_loops"},
    {Family::PDF, "PDF"},
    {Family::Xn_loops, "Xn_loops"},
    {Family::Yn_arcs_loops, "Yn_arcs_loops"},
    {Family::Zn_loop, "Zn_loop"},
    {Family::kDF, "kDF"},
    {Family::HDF, "HDF"},
    {Family::TDF, "TDF"},
    {Family::UDW, "UDW"},
    {Family::ADW, "ADW"},
    {Family::RADW, "RADW"},
    {Family::kDW, "kDW"},
    {Family::HDW, "HDW"},
}};

bool has_hub_loops(Family f) {
    switch (f) {
        case Family::ADF_loops:
        case Family::PDF:
        case Family::Xn_loops:
        case Family::Yn_arcs_loops:
        case Family::Zn_loop: return true;
        default: return false;
    }
}

bool uses_j(Family f) { return f == Family::DCn_i_kpjpi || f == Family::Zn_loop; }
bool uses_m(Family f) { return f == Family::DCn_m || f == Family::Xn_loops || f == Family::Yn_arcs_loops; }

[[noreturn]] void invalid(const FamilySpec& s, const std::string& why) {
    fail(ErrorKind::InvalidParameter, std::string(to_string(s.family)) + " n=" + std::to_string(s.n) + ": " + why);
}

void check_list(const FamilySpec& s, const std::vector<int>& v, const char* key, int lo, int hi) {
    if (v.empty()) invalid(s, std::string(key) + " must be non-empty");
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < lo || v[i] > hi)
            invalid(s, std::string(key) + " entry " + std::to_string(v[i]) + " outside " + std::to_string(lo) + ".." +
                           std::to_string(hi));
        if (i > 0 && v[i] <= v[i - 1]) invalid(s, std::string(key) + " must be strictly increasing");
    }
}

// Arc collectors for the three base shapes.
std::vector<Arc> cycle(int len) {
    std::vector<Arc> arcs;
    for (int i = 1; i < len; ++i) arcs.push_back({i, i + 1, 1});
    arcs.push_back({len, 1, 1});
    return arcs;
}

std::vector<Arc> fan_path(int n) {
    std::vector<Arc> arcs;
    for (int i = 2; i < n; ++i) arcs.push_back({i, i + 1, 1});
    return arcs;
}

Digraph build_base(const FamilySpec& s) {
    const int n = s.n;
    const int k = s.k();
    std::vector<Arc> arcs;
    switch (s.family) {
        case Family::DCn: arcs = cycle(n); break;
        case Family::DCn_i_nmi:
            // Chords whose ends are distinct and non-consecutive: i = 1..k-1.
            arcs = cycle(n);
            for (int i = 1; i <= k - 1; ++i) arcs.push_back({i, n - i, 1});
            break;
        case Family::DCn_i_kmi:
            arcs = cycle(n);
            for (int i = 1; i <= k / 2 - 1; ++i) arcs.push_back({i, k - i, 1});
            break;
        case Family::DCn_i_kpjpi:
            arcs = cycle(n);
            for (int i = 1; i <= k - s.j; ++i) arcs.push_back({i, k + s.j + i, 1});
            break;
        case Family::DCn_tips:
            arcs = cycle(n);
            for (int t : s.tips) arcs.push_back({n, t + 1, 1});
            break;
        case Family::DCn_m:
            arcs = cycle(n);
            for (int to = 3; to <= s.m; ++to)
                for (int from = 1; from < to - 1; ++from) arcs.push_back({from, to, 1});
            break;
        case Family::ADF:
        case Family::ADF_loops:
            arcs = fan_path(n);
            for (int i = 1; i <= k; ++i) {
                if (2 * i <= n) arcs.push_back({1, 2 * i, 1});
                if (2 * i + 1 <= n) arcs.push_back({2 * i + 1, 1, 1});
            }
            if (s.family == Family::ADF_loops) arcs.push_back({1, 1, n % 2 ? k + 1 : k});
            break;
        case Family::PDF:
        case Family::Xn_loops:
        case Family::Yn_arcs_loops:
        case Family::Zn_loop: {
            arcs = fan_path(n);
            int loops = s.family == Family::PDF || s.family == Family::Zn_loop ? 1 : s.m;
            arcs.push_back({1, 1, loops});
            for (int i = 2; i <= n; ++i) arcs.push_back({1, i, 1});
            arcs.push_back({n, 1, 1});
            if (s.family == Family::Yn_arcs_loops)
                for (int a : s.arcs) arcs.push_back({a, 1, 1});
            if (s.family == Family::Zn_loop) arcs.push_back({s.j, s.j, 1});
            break;
        }
        case Family::kDF:
            arcs = fan_path(n);
            for (int i = 2; i < n; ++i)
                if (i != k) arcs.push_back({1, i, 1});
            arcs.push_back({k, 1, 1});
            arcs.push_back({n, 1, 1});
            break;
        case Family::HDF:
            // Hub to 2..k; i = 1 would be a loop and is not drawn.
            arcs = fan_path(n);
            for (int i = 2; i <= k; ++i) arcs.push_back({1, i, 1});
            for (int i = k + 1; i <= n; ++i) arcs.push_back({i, 1, 1});
            break;
        case Family::TDF:
            arcs = fan_path(n);
            for (int i = 2; i < n; ++i) {
                if (i % 3 == 1)
                    arcs.push_back({i, 1, 1});
                else
                    arcs.push_back({1, i, 1});
            }
            arcs.push_back({n, 1, 1});
            break;
        case Family::UDW:
            arcs = cycle(n - 1);
            for (int i = 1; i < n; ++i) arcs.push_back({n, i, 1});
            break;
        case Family::ADW:
            arcs = cycle(n - 1);
            for (int i = 1; i <= k; ++i) {
                if (2 * i - 1 <= n - 1) arcs.push_back({n, 2 * i - 1, 1});
                if (2 * i <= n - 1) arcs.push_back({2 * i, n, 1});
            }
            break;
        case Family::RADW:
            arcs = cycle(n - 1);
            for (int i = 1; i <= k; ++i) {
                arcs.push_back({n, 2 * i, 1});
                arcs.push_back({2 * i - 1, n, 1});
            }
            arcs.push_back({n - 1, n, 1});
            break;
        case Family::kDW:
            arcs = cycle(n - 1);
            for (int i = 1; i < n; ++i)
                if (i != k) arcs.push_back({n, i, 1});
            arcs.push_back({k, n, 1});
            break;
        case Family::HDW:
            arcs = cycle(n - 1);
            for (int i = 1; i <= k; ++i) arcs.push_back({n, i, 1});
            for (int i = k + 1; i < n; ++i) arcs.push_back({i, n, 1});
            break;
    }
    return Digraph::build(n, arcs);
}

// Dense coefficient accumulator used to transcribe the closed forms.
class Terms {
   public:
    void add(long coeff, int exponent) {
        ensure(exponent >= 0, "negative exponent in closed form");
        if (static_cast<std::size_t>(exponent) >= c_.size()) c_.resize(exponent + 1, BigInt(0));
        c_[exponent] += coeff;
    }
    IntPolynomial poly() const { return IntPolynomial(c_); }

   private:
    std::vector<BigInt> c_;
};

IntPolynomial adf_odd(int k, int terms) {
    Terms t;
    t.add(1, 2 * k + 1);
    for (int i = 1; i <= terms; ++i) t.add(-i, 2 * (i - 1));
    return t.poly();
}

IntPolynomial base_closed_form(const FamilySpec& s) {
    const int n = s.n;
    const int k = s.k();
    Terms t;
    t.add(1, n);
    switch (s.family) {
        case Family::DCn: t.add(-1, 0); break;
        case Family::DCn_i_nmi:
            for (int i = 1; i <= k - 1; ++i) t.add(-1, n - (2 * i + 1));
            t.add(-1, 0);
            break;
        case Family::DCn_i_kmi:
            for (int i = 1; i <= k / 2 - 1; ++i) t.add(-1, k - (2 * i + 1));
            t.add(-1, 0);
            break;
        case Family::DCn_i_kpjpi:
            t.add(-(k - s.j), k + s.j - 1);
            t.add(-1, 0);
            break;
        case Family::DCn_tips:
            for (int tip : s.tips) t.add(-1, tip);
            t.add(-1, 0);
            break;
        case Family::DCn_m: return IntPolynomial::monomial(1, n) - pow(IntPolynomial{1, 1}, s.m - 2);
        case Family::ADF:
            if (n % 2) return adf_odd(k, k);
            return IntPolynomial::x() * adf_odd(k - 1, k - 1);
        case Family::ADF_loops:
            if (n % 2) return adf_odd(k, k + 1);
            return IntPolynomial::x() * adf_odd(k - 1, k);
        case Family::PDF:
            for (int i = 1; i <= n; ++i) t.add(-1, n - i);
            break;
        case Family::Xn_loops:
            t.add(-s.m, n - 1);
            for (int i = 0; i <= n - 2; ++i) t.add(-1, i);
            break;
        case Family::Yn_arcs_loops: {
            // Segment bounds 1 = n_0 < n_1 < ... < n_d < n_{d+1} = n, weights d+1 down to 1.
            const int d = static_cast<int>(s.arcs.size());
            std::vector<int> bounds{1};
            bounds.insert(bounds.end(), s.arcs.begin(), s.arcs.end());
            bounds.push_back(n);
            t.add(-s.m, n - 1);
            for (int seg = 0; seg <= d; ++seg)
                for (int i = bounds[seg] + 1; i <= bounds[seg + 1]; ++i) t.add(-(d + 1 - seg), n - i);
            break;
        }
        case Family::Zn_loop:
            t.add(-2, n - 1);
            for (int i = 0; i <= s.j - 3; ++i) t.add(-1, i);
            break;
        case Family::kDF:
            t.add(1, k - 2);
            for (int i = 3; i <= k; ++i) t.add(-2, n - i);
            for (int i = 0; i <= n - (k + 1); ++i) t.add(-1, i);
            break;
        case Family::HDF:
            if (n % 2) {
                t.add(-(k - 1), k - 1);
                for (int i = 1; i <= k - 1; ++i) {
                    t.add(-i, 2 * k - i - 1);
                    t.add(-i, i - 1);
                }
            } else {
                for (int i = 1; i <= k - 1; ++i) {
                    t.add(-i, 2 * k - i - 2);
                    t.add(-i, i - 1);
                }
            }
            break;
        case Family::TDF: {
            // Written in terms of n = 3K, 3K+1, 3K+2.
            const int K = n / 3;
            switch (n % 3) {
                case 0:
                    t.add(-1, 0);
                    for (int i = 1; i <= K - 1; ++i) {
                        t.add(-1, 3 * (K - i) - 2);
                        t.add(-(K - i), 3 * (K - i) - 1);
                        t.add(-((K - i) + 1), 3 * (K - i));
                    }
                    break;
                case 1:
                    for (int i = 1; i <= K; ++i) {
                        t.add(-((K - i) + 1), 3 * (K - i));
                        t.add(-((K - i) + 1), 3 * (K - i) + 1);
                    }
                    break;
                default:
                    for (int i = 1; i <= K; ++i) {
                        t.add(-1, 3 * (K - i));
                        t.add(-((K - i) + 1), 3 * (K - i) + 2);
                        t.add(-((K - i) + 2), 3 * (K - i) + 1);
                    }
                    break;
            }
            break;
        }
        case Family::UDW: t.add(-1, 1); break;
        case Family::ADW:
            if (n % 2) {
                t.add(-1, 1);
                for (int i = 0; i <= k - 1; ++i) t.add(-k, 2 * i);
            } else {
                t.add(-2, 1);
                for (int i = 2; i <= k - 1; ++i) t.add(-i, 2 * i - 1);
                for (int j = 2; j <= k; ++j) t.add(-(j - 1), 2 * (k - j));
            }
            break;
        case Family::RADW:
            t.add(-2, 1);
            for (int i = 0; i <= k - 1; ++i) t.add(-k, 2 * i);
            for (int i = 1; i <= k - 1; ++i) t.add(-1, 2 * i + 1);
            break;
        case Family::kDW:
            for (int i = 2; i <= n - 3; ++i) t.add(-1, i);
            t.add(-2, 1);
            t.add(-1, 0);
            break;
        case Family::HDW:
            t.add(-1, 1);
            if (n % 2) {
                for (int i = 1; i <= k - 1; ++i) {
                    t.add(-i, i - 1);
                    t.add(-i, 2 * k - (i + 1));
                }
                t.add(-k, k - 1);
            } else {
                for (int i = 1; i <= k - 1; ++i) {
                    t.add(-i, i - 1);
                    t.add(-i, 2 * k - (i + 2));
                }
            }
            break;
    }
    return t.poly();
}

}  // namespace

std::string_view to_string(Family f) {
    for (const auto& [fam, name] : kNames)
        if (fam == f) return name;
    return "?";
}

std::optional<Family> family_from_string(std::string_view name) {
    for (const auto& [fam, n] : kNames)
        if (n == name) return fam;
    return std::nullopt;
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> families = [] {
        std::vector<Family> v;
        for (const auto& entry : kNames) v.push_back(entry.first);
        return v;
    }();
    return families;
}

int min_order(Family f) {
    switch (f) {
        case Family::DCn_i_kpjpi:
        case Family::DCn_m:
        case Family::kDF:
        case Family::UDW:
        case Family::ADW:
        case Family::kDW:
        case Family::HDW: return 4;
        case Family::RADW: return 5;
        default: return 3;
    }
}

void validate(const FamilySpec& s) {
    const int n = s.n;
    const int k = s.k();
    if (n < min_order(s.family)) invalid(s, "n must be at least " + std::to_string(min_order(s.family)));
    if (s.complemented) {
        if (has_hub_loops(s.family)) invalid(s, "complement is only defined for loop-free families");
        if (s.family == Family::DCn && n < 5) invalid(s, "DCc needs n >= 5");
    }
    if (!uses_j(s.family) && s.j != 0) invalid(s, "parameter j does not apply");
    if (!uses_m(s.family) && s.m != 0) invalid(s, "parameter m does not apply");
    if (s.family != Family::DCn_tips && !s.tips.empty()) invalid(s, "parameter tips does not apply");
    if (s.family != Family::Yn_arcs_loops && !s.arcs.empty()) invalid(s, "parameter arcs does not apply");

    switch (s.family) {
        case Family::DCn_i_kpjpi:
            if (s.j < 1 || s.j > k - 1) invalid(s, "j must satisfy 1 <= j <= k-1 = " + std::to_string(k - 1));
            break;
        case Family::DCn_tips: check_list(s, s.tips, "tips", 1, n - 2); break;
        case Family::DCn_m:
            if (s.m < 3 || s.m > n - 1) invalid(s, "m must satisfy 3 <= m <= n-1");
            break;
        case Family::Xn_loops:
            if (s.m < 1) invalid(s, "m must be at least 1 (m-1 added loops)");
            break;
        case Family::Yn_arcs_loops:
            check_list(s, s.arcs, "arcs", 2, n - 1);
            if (s.m - 1 < static_cast<int>(s.arcs.size()))
                invalid(s, "needs m-1 >= d loops, d = " + std::to_string(s.arcs.size()));
            break;
        case Family::Zn_loop:
            if (s.j < 2 || s.j > n) invalid(s, "j must satisfy 2 <= j <= n");
            break;
        case Family::RADW:
            if (n % 2 == 0) invalid(s, "RADW is defined for odd n = 2k+1");
            break;
        default: break;
    }
}

Digraph build_family(const FamilySpec& spec) {
    validate(spec);
    Digraph d = build_base(spec);
    return spec.complemented ? complement(d) : d;
}

bool has_closed_form(const FamilySpec& spec) {
    return !spec.complemented || spec.family == Family::DCn || spec.family == Family::UDW;
}

IntPolynomial closed_form_charpoly(const FamilySpec& spec) {
    validate(spec);
    if (spec.complemented) {
        if (spec.family == Family::DCn) return complement_closed_form(ComplementKind::DCc, spec.n);
        if (spec.family == Family::UDW) return complement_closed_form(ComplementKind::UDWc, spec.n);
        invalid(spec, "no closed form for this complement");
    }
    return base_closed_form(spec);
}

IntPolynomial complement_closed_form(ComplementKind kind, int n) {
    const IntPolynomial x = IntPolynomial::x();
    auto linear = [&](long root) { return x - IntPolynomial::constant(root); };
    if (kind == ComplementKind::DCc) {
        if (n < 5) fail(ErrorKind::InvalidParameter, "DCc closed form needs n >= 5");
        IntPolynomial out = linear(n - 2);
        if (n % 2 == 0) out *= x;
        const unsigned lower = n % 2 ? 1u : 2u;
        for (unsigned d : divisors(static_cast<unsigned>(n)))
            if (d > lower) out *= substitute_linear(cyclotomic(d), -1, -1);
        return out;
    }
    if (n < 4) fail(ErrorKind::InvalidParameter, "UDWc closed form needs n >= 4");
    const int k = n / 2;
    if (n % 2 == 0) {
        IntPolynomial out = x * linear(2 * k - 3);
        for (unsigned d : divisors(static_cast<unsigned>(2 * k - 1)))
            if (d > 1) out *= substitute_linear(cyclotomic(2 * d), 1, 1);
        return out;
    }
    IntPolynomial out = x * x * linear(2 * k - 2);
    for (unsigned d : divisors(static_cast<unsigned>(2 * k)))
        if (d > 2) out *= substitute_linear(cyclotomic(2 * d), 1, 1);
    return out;
}

}  // namespace dgs
