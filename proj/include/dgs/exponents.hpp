#ifndef DGS_EXPONENTS_HPP
#define DGS_EXPONENTS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgs/digraph.hpp"

namespace dgs {

struct ExponentResult {
    bool primitive = false;
    std::optional<int> exponent;
    /// Lexicographically smallest (from, to) with no walk of length
    /// exponent - 1. Absent when not primitive, or when A^{e-1} has no zero
    /// (only possible for n = 1).
    std::optional<std::pair<int, int>> witness;
};

/// Strongly connected with cycle gcd 1.
bool is_primitive(const Digraph& d);

/// Least e with A^e entrywise positive, found on boolean powers. Exceeding
/// the Wielandt bound (n-1)^2 + 1 is an internal error.
ExponentResult exponent(const Digraph& d);

/// Whether some walk of exactly `length` arcs goes from `from` to `to`.
bool has_walk(const Digraph& d, int from, int to, unsigned length);

/// All (from, to) with no walk of exactly `length` arcs, in lexicographic order.
std::vector<std::pair<int, int>> walk_gaps(const Digraph& d, unsigned length);

struct WalkCheck {
    std::vector<int> walk;
    bool valid = false;
    std::string reason;  // empty when valid
};

struct WalkListVerdict {
    bool all_valid = true;
    std::vector<WalkCheck> checks;
};

/// Checks each vertex sequence is a walk in d (consecutive vertices joined
/// by an arc), and has `length` arcs if given.
WalkListVerdict verify_walk_list(const Digraph& d, const std::vector<std::vector<int>>& walks,
                                 std::optional<int> length = std::nullopt);

/// Length-9 walk from `from` to `to` in ADF_n, odd n >= 7, following the
/// nine vertex-class templates (1 / even / odd endpoints). Where a template
/// leaves the step out of an even vertex i open as i+1 or i-1, i+1 is used:
/// an even vertex other than n has no other out-neighbour.
std::vector<int> adf_template_walk(int n, int from, int to);

/// adf_template_walk for every ordered pair, row by row.
std::vector<std::vector<int>> adf_template_walks(int n);

}  // namespace dgs

#endif
