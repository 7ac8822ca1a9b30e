#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "dgs/spectra.hpp"

namespace dgs {

int Ldsg::length() const {
    int total = 0;
    for (const auto& c : cycles) total += static_cast<int>(c.vertices.size());
    return total;
}

namespace {

// Canonical enumeration: candidate minimum vertices are visited in
// ascending order; a cycle started at v only uses unused vertices above v.
class LdsgEnumerator {
   public:
    LdsgEnumerator(const Digraph& d, int size) : d_(d), size_(size), used_(d.order() + 1, false) {}

    std::vector<Ldsg> run() {
        next_min(1, 0);
        return std::move(out_);
    }

   private:
    void next_min(int v, int covered) {
        if (covered == size_) {
            out_.push_back(current_);
            return;
        }
        if (v > d_.order()) return;
        int free_left = 0;
        for (int u = v; u <= d_.order(); ++u) free_left += used_[u] ? 0 : 1;
        if (free_left < size_ - covered) return;

        next_min(v + 1, covered);
        if (used_[v]) return;

        // path_ belongs to the enclosing cycle while this one is built.
        std::vector<int> outer = std::move(path_);
        used_[v] = true;
        path_.assign(1, v);
        extend(v, v, covered);
        used_[v] = false;
        path_ = std::move(outer);
    }

    void extend(int start, int tail, int covered) {
        const int len = static_cast<int>(path_.size());
        for (int w : d_.successors(tail)) {
            if (w == start) {
                if (covered + len > size_) continue;
                const int copies = len == 1 ? d_.multiplicity(start, start) : 1;
                for (int c = 1; c <= copies; ++c) {
                    current_.cycles.push_back({path_, len == 1 ? c : 0});
                    next_min(start + 1, covered + len);
                    current_.cycles.pop_back();
                }
            } else if (w > start && !used_[w] && covered + len + 1 <= size_) {
                used_[w] = true;
                path_.push_back(w);
                extend(start, w, covered);
                path_.pop_back();
                used_[w] = false;
            }
        }
    }

    const Digraph& d_;
    int size_;
    std::vector<bool> used_;
    std::vector<int> path_;
    Ldsg current_;
    std::vector<Ldsg> out_;
};

using Wide = __int128;

Wide checked_add(Wide a, Wide b) {
    Wide r;
    ensure(!__builtin_add_overflow(a, b, &r), "ldsg count overflow");
    return r;
}

Wide checked_mul(Wide a, Wide b) {
    Wide r;
    ensure(!__builtin_mul_overflow(a, b, &r), "ldsg count overflow");
    return r;
}

BigInt to_big(Wide v) {
    const bool neg = v < 0;
    unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    BigInt hi(static_cast<unsigned long>(mag >> 64));
    BigInt lo(static_cast<unsigned long>(mag & ~0ULL));
    BigInt out = (hi << 64) + lo;
    return neg ? BigInt(-out) : out;
}

constexpr int kHardSubsetLimit = 20;

}  // namespace

std::vector<Ldsg> enumerate_ldsgs(const Digraph& d, int size) {
    if (size < 1 || size > d.order())
        fail(ErrorKind::InvalidArgument, "ldsg size must be in 1.." + std::to_string(d.order()));
    return LdsgEnumerator(d, size).run();
}

IntPolynomial charpoly_ldsg(const Digraph& d, int cap) {
    const int n = d.order();
    if (n > cap || n > kHardSubsetLimit)
        fail(ErrorKind::TooLargeForEnumeration,
             "n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(std::min(cap, kHardSubsetLimit)));
    const std::uint32_t full = (1u << n) - 1u;
    const std::size_t states = std::size_t{1} << n;

    // paths[S*n + v]: simple paths from min(S) through exactly S, ending at v.
    std::vector<Wide> paths(states * n, 0);
    std::vector<Wide> cycles(states, 0);
    for (int s = 0; s < n; ++s) paths[(std::size_t{1} << s) * n + s] = 1;
    for (std::uint32_t set = 1; set <= full; ++set) {
        const int s = std::countr_zero(set);
        Wide closing = 0;
        for (int v = 0; v < n; ++v) {
            const Wide count = paths[std::size_t{set} * n + v];
            if (count == 0) continue;
            if (const int back = d.multiplicity(v + 1, s + 1)) closing = checked_add(closing, checked_mul(count, back));
            for (int w1 : d.successors(v + 1)) {
                const int w = w1 - 1;
                if (w <= s || (set >> w) & 1u) continue;
                Wide& slot = paths[std::size_t{set | (1u << w)} * n + w];
                slot = checked_add(slot, count);
            }
        }
        cycles[set] = closing;
    }

    // signed[S]: sum over ldsgs with vertex set S of (-1)^{p(L)}; the cycle
    // containing min(S) is peeled off first so each ldsg is counted once.
    std::vector<Wide> signed_count(states, 0);
    signed_count[0] = 1;
    std::vector<BigInt> a(n + 1, BigInt(0));
    for (std::uint32_t set = 1; set <= full; ++set) {
        const std::uint32_t low = set & (~set + 1u);
        const std::uint32_t rest = set ^ low;
        Wide total = 0;
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            const std::uint32_t cyc = sub | low;
            if (cycles[cyc] != 0 && signed_count[set ^ cyc] != 0)
                total = checked_add(total, checked_mul(-cycles[cyc], signed_count[set ^ cyc]));
            if (sub == 0) break;
        }
        signed_count[set] = total;
        a[std::popcount(set)] += to_big(total);
    }

    std::vector<BigInt> coeff(n + 1, BigInt(0));
    coeff[n] = 1;
    for (int i = 1; i <= n; ++i) coeff[n - i] = a[i];
    return IntPolynomial(std::move(coeff));
}

}  // namespace dgs
