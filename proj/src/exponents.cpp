#include "dgs/exponents.hpp"

#include <cstdint>

namespace dgs {

namespace {

// Square 0/1 matrix with bit-packed rows.
class BoolMatrix {
   public:
    explicit BoolMatrix(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

    static BoolMatrix of(const Digraph& d) {
        BoolMatrix m(d.order());
        for (const Arc& a : d.arcs()) m.set(a.from - 1, a.to - 1);
        return m;
    }

    static BoolMatrix identity(int n) {
        BoolMatrix m(n);
        for (int i = 0; i < n; ++i) m.set(i, i);
        return m;
    }

    bool get(int i, int j) const { return (row(i)[j / 64] >> (j % 64)) & 1u; }
    void set(int i, int j) { row(i)[j / 64] |= std::uint64_t{1} << (j % 64); }

    // (this * a): row i is the union of the rows of a selected by row i.
    BoolMatrix times(const BoolMatrix& a) const {
        BoolMatrix out(n_);
        for (int i = 0; i < n_; ++i) {
            std::uint64_t* dst = out.row(i);
            for (int k = 0; k < n_; ++k) {
                if (!get(i, k)) continue;
                const std::uint64_t* src = a.row(k);
                for (int w = 0; w < words_; ++w) dst[w] |= src[w];
            }
        }
        return out;
    }

    bool all_ones() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (!get(i, j)) return false;
        return true;
    }

    std::optional<std::pair<int, int>> first_zero() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (!get(i, j)) return std::make_pair(i + 1, j + 1);
        return std::nullopt;
    }

   private:
    std::uint64_t* row(int i) { return bits_.data() + static_cast<std::size_t>(i) * words_; }
    const std::uint64_t* row(int i) const { return bits_.data() + static_cast<std::size_t>(i) * words_; }

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

BoolMatrix bool_power(const Digraph& d, unsigned length) {
    const BoolMatrix a = BoolMatrix::of(d);
    BoolMatrix p = BoolMatrix::identity(d.order());
    for (unsigned s = 0; s < length; ++s) p = p.times(a);
    return p;
}

void check_vertex(const Digraph& d, int v) {
    if (v < 1 || v > d.order())
        fail(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(d.order()));
}

}  // namespace

bool is_primitive(const Digraph& d) { return is_strongly_connected(d) && cycle_gcd(d) == 1; }

ExponentResult exponent(const Digraph& d) {
    ExponentResult result;
    if (!is_primitive(d)) return result;
    result.primitive = true;

    const long long n = d.order();
    const long long cap = (n - 1) * (n - 1) + 1;
    const BoolMatrix a = BoolMatrix::of(d);
    BoolMatrix previous = BoolMatrix::identity(d.order());
    BoolMatrix current = a;
    for (long long e = 1; e <= cap; ++e) {
        if (current.all_ones()) {
            result.exponent = static_cast<int>(e);
            result.witness = previous.first_zero();
            ensure(current.times(a).all_ones(), "positivity lost at the power after the exponent");
            return result;
        }
        previous = current;
        current = current.times(a);
    }
    fail(ErrorKind::InternalError, "primitive digraph not positive by the Wielandt bound " + std::to_string(cap));
}

bool has_walk(const Digraph& d, int from, int to, unsigned length) {
    check_vertex(d, from);
    check_vertex(d, to);
    return bool_power(d, length).get(from - 1, to - 1);
}

std::vector<std::pair<int, int>> walk_gaps(const Digraph& d, unsigned length) {
    const BoolMatrix p = bool_power(d, length);
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < d.order(); ++i)
        for (int j = 0; j < d.order(); ++j)
            if (!p.get(i, j)) out.emplace_back(i + 1, j + 1);
    return out;
}

WalkListVerdict verify_walk_list(const Digraph& d, const std::vector<std::vector<int>>& walks, std::optional<int> length) {
    WalkListVerdict verdict;
    for (const auto& walk : walks) {
        WalkCheck check{walk, true, {}};
        if (walk.empty()) {
            check.valid = false;
            check.reason = "empty vertex sequence";
        } else if (length && static_cast<int>(walk.size()) - 1 != *length) {
            check.valid = false;
            check.reason = "length " + std::to_string(walk.size() - 1) + ", expected " + std::to_string(*length);
        } else {
            for (std::size_t s = 0; s < walk.size(); ++s) {
                if (walk[s] < 1 || walk[s] > d.order()) {
                    check.valid = false;
                    check.reason = "vertex " + std::to_string(walk[s]) + " out of range";
                    break;
                }
                if (s > 0 && !d.has_arc(walk[s - 1], walk[s])) {
                    check.valid = false;
                    check.reason = "no arc " + std::to_string(walk[s - 1]) + "->" + std::to_string(walk[s]);
                    break;
                }
            }
        }
        verdict.all_valid = verdict.all_valid && check.valid;
        verdict.checks.push_back(std::move(check));
    }
    return verdict;
}

std::vector<int> adf_template_walk(int n, int from, int to) {
    if (n < 7 || n % 2 == 0) fail(ErrorKind::InvalidArgument, "walk templates need odd n >= 7");
    if (from < 1 || from > n || to < 1 || to > n)
        fail(ErrorKind::IndexOutOfRange, "vertex outside 1.." + std::to_string(n));
    const int i = from, j = to;
    const bool i_even = i % 2 == 0, j_even = j % 2 == 0;
    if (i == 1 && j == 1) return {1, 2, 3, 1, 2, 3, 1, 2, 3, 1};
    if (i == 1) return j_even ? std::vector<int>{1, 2, 3, 1, 2, 3, 4, 5, 1, j} : std::vector<int>{1, 2, 3, 4, 5, 6, 7, 1, j - 1, j};
    if (j == 1) return i_even ? std::vector<int>{i, i + 1, 1, 2, 3, 4, 5, 6, 7, 1} : std::vector<int>{i, 1, 2, 3, 4, 5, 1, i - 1, i, 1};
    if (i_even && j_even) return {i, i + 1, 1, i, i + 1, 1, i, i + 1, 1, j};
    if (!i_even && !j_even) return {i, 1, 2, 3, 1, 2, 3, 1, j - 1, j};
    if (i_even) return {i, i + 1, 1, 2, 3, 4, 5, 1, j - 1, j};
    return {i, 1, 2, 3, 4, 5, 6, 7, 1, j};
}

std::vector<std::vector<int>> adf_template_walks(int n) {
    std::vector<std::vector<int>> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) out.push_back(adf_template_walk(n, i, j));
    return out;
}

}  // namespace dgs
