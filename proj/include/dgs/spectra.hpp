#ifndef DGS_SPECTRA_HPP
#define DGS_SPECTRA_HPP

#include <optional>
#include <utility>
#include <vector>

#include "dgs/digraph.hpp"
#include "dgs/polynomial.hpp"

namespace dgs {

inline constexpr int kDefaultEnumerationCap = 12;
inline constexpr int kDefaultTriangularSearchCap = 10;

/// Enumeration cap from DIGRAPH_SPECTRA_CAP if set and valid, else the default.
int enumeration_cap_from_env();

/// Characteristic polynomial |xI - A| by the Faddeev-LeVerrier trace
/// recursion over Z. Every division is checked for exactness.
IntPolynomial charpoly_exact(const Digraph& d);

/// One directed cycle of a linear subdigraph, listed from its smallest vertex.
/// For a self loop at a vertex with several loops, `loop_copy` says which
/// of the parallel loops is used (1-based); it is 0 for longer cycles.
struct LdsgCycle {
    std::vector<int> vertices;
    int loop_copy = 0;

    friend bool operator==(const LdsgCycle&, const LdsgCycle&) = default;
};

/// A set of vertex-disjoint directed cycles, sorted by minimum vertex.
struct Ldsg {
    std::vector<LdsgCycle> cycles;

    int length() const;
    int components() const { return static_cast<int>(cycles.size()); }

    friend bool operator==(const Ldsg&, const Ldsg&) = default;
};

/// All linear directed subgraphs covering exactly `size` vertices, each once.
std::vector<Ldsg> enumerate_ldsgs(const Digraph& d, int size);

/// x^n + sum a_i x^{n-i} with a_i the signed count of ldsgs on i vertices,
/// sum over L of (-1)^{p(L)}. Ldsgs are grouped by vertex set: a cycle
/// through the smallest vertex of the set times the signed count of the
/// rest. Throws TooLargeForEnumeration when n > cap.
IntPolynomial charpoly_ldsg(const Digraph& d, int cap = kDefaultEnumerationCap);

/// Monic annihilator of least degree, found on the Krylov sequence
/// vec(I), vec(A), vec(A^2), ... by fraction-free elimination.
IntPolynomial minimal_polynomial(const Digraph& d);

bool is_non_derogatory(const Digraph& d);

struct TriangularCertificate {
    int deleted_row = 0;  // 1-based
    int deleted_col = 0;
    /// (row, column) diagonal pairs; in this order the submatrix is lower
    /// triangular with nonzero diagonal (reverse it for upper triangular).
    std::vector<std::pair<int, int>> diagonal;
};

/// Deletes one row and one column and tries to permute rows and columns of
/// the rest into nonsingular triangular form. Search cap on n: TooLargeForSearch.
std::optional<TriangularCertificate> triangular_certificate(const Digraph& d, int cap = kDefaultTriangularSearchCap);

/// The same test for a fixed deleted row/column.
std::optional<TriangularCertificate> triangular_after_deletion(const Digraph& d, int row, int col);

}  // namespace dgs

#endif
