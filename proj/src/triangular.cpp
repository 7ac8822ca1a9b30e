#include "dgs/spectra.hpp"

namespace dgs {

// Peeling is exact here: a triangular arrangement always has a row with a
// single nonzero (its first row), and deleting a diagonal pair from a
// triangular matrix leaves a triangular matrix.
std::optional<TriangularCertificate> triangular_after_deletion(const Digraph& d, int row, int col) {
    const int n = d.order();
    if (row < 1 || row > n || col < 1 || col > n)
        fail(ErrorKind::IndexOutOfRange, "deleted row/column outside 1.." + std::to_string(n));
    std::vector<bool> row_left(n + 1, true), col_left(n + 1, true);
    row_left[row] = false;
    col_left[col] = false;

    TriangularCertificate cert{row, col, {}};
    for (int step = 0; step < n - 1; ++step) {
        bool found = false;
        for (int r = 1; r <= n && !found; ++r) {
            if (!row_left[r]) continue;
            int hits = 0, at = 0;
            for (int c : d.successors(r)) {
                if (!col_left[c]) continue;
                ++hits;
                at = c;
                if (hits > 1) break;
            }
            if (hits != 1) continue;
            cert.diagonal.emplace_back(r, at);
            row_left[r] = false;
            col_left[at] = false;
            found = true;
        }
        if (!found) return std::nullopt;
    }
    return cert;
}

std::optional<TriangularCertificate> triangular_certificate(const Digraph& d, int cap) {
    const int n = d.order();
    if (n > cap)
        fail(ErrorKind::TooLargeForSearch, "n = " + std::to_string(n) + " exceeds the search cap " + std::to_string(cap));
    for (int row = 1; row <= n; ++row)
        for (int col = 1; col <= n; ++col)
            if (auto cert = triangular_after_deletion(d, row, col)) return cert;
    return std::nullopt;
}

}  // namespace dgs
