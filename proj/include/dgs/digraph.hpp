#ifndef DGS_DIGRAPH_HPP
#define DGS_DIGRAPH_HPP

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "dgs/matrix.hpp"

namespace dgs {

/// One arc (from, to) with its multiplicity. Vertex labels are 1-based.
struct Arc {
    int from = 0;
    int to = 0;
    int multiplicity = 1;

    auto operator<=>(const Arc&) const = default;
};

/// Labeled digraph on vertices 1..n with an arc multiset.
///
/// Only self loops may carry multiplicity > 1. Values are immutable once
/// constructed; every query is const.
class Digraph {
   public:
    /// Validates and builds. Repeated self loops in `arcs` are merged by
    /// summing multiplicities; a repeated non-loop arc is rejected.
    static Digraph build(int n, std::span<const Arc> arcs);

    int order() const noexcept { return n_; }

    /// Multiplicity of arc (i, j); 1-based labels.
    int multiplicity(int i, int j) const;
    bool has_arc(int i, int j) const { return multiplicity(i, j) > 0; }

    /// Arcs sorted lexicographically by (from, to).
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    /// Total arc count, loops counted with multiplicity.
    long long arc_count() const noexcept;

    /// No loops and every multiplicity equal to 1.
    bool is_simple() const noexcept;

    /// Out-neighbours of i in ascending order (1-based).
    const std::vector<int>& successors(int i) const;

    BigMatrix adjacency() const;

    friend bool operator==(const Digraph& a, const Digraph& b) { return a.n_ == b.n_ && a.arcs_ == b.arcs_; }

   private:
    Digraph() = default;

    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<int> mult_;  // n*n, row-major, 0-based
    std::vector<std::vector<int>> succ_;
};

struct WalkCountMatrix {
    BigMatrix entries;
    unsigned power = 0;

    /// Walks of length `power` from i to j (1-based).
    const BigInt& at(int i, int j) const { return entries(i - 1, j - 1); }
};

/// J - I - A. Rejects digraphs with loops or multiplicities.
Digraph complement(const Digraph& d);

bool is_strongly_connected(const Digraph& d);

/// gcd of all directed cycle lengths, from BFS levels: gcd over arcs (u,v)
/// of |level(u) + 1 - level(v)|. Throws NotStronglyConnected otherwise.
int cycle_gcd(const Digraph& d);

/// Exact A^k.
WalkCountMatrix walk_count(const Digraph& d, unsigned k);

// Serialization. Text: "n" on line 1, then "i j" or "i j mult" per arc.
// JSON: {"arcs":[[i,j,mult],...],"n":n}. Output arcs are sorted.
std::string to_text(const Digraph& d);
std::string to_json(const Digraph& d);
Digraph parse_text(const std::string& text);
Digraph parse_json(const std::string& text);
/// Sniffs the format: a leading '{' selects JSON.
Digraph parse_digraph(const std::string& text);

}  // namespace dgs

#endif
