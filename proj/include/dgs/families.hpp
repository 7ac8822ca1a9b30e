#ifndef DGS_FAMILIES_HPP
#define DGS_FAMILIES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dgs/digraph.hpp"
#include "dgs/polynomial.hpp"

namespace dgs {

// Directed cycles with chords (base cycle 1 -> 2 -> ... -> n -> 1), fans
// (path 2 -> ... -> n plus hub 1), wheels (cycle on 1..n-1 plus hub n), the
// loop-augmented fans, and the two complements with closed forms.
enum class Family {
    DCn,
    DCn_i_nmi,
    DCn_i_kmi,
    DCn_i_kpjpi,
    DCn_tips,
    DCn_m,
    ADF,
    ADF_loops,
    PDF,
    Xn_loops,
    Yn_arcs_loops,
    Zn_loop,
    kDF,
    HDF,
    TDF,
    UDW,
    ADW,
    RADW,
    kDW,
    HDW,
};

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view name);
const std::vector<Family>& all_families();

/// Parameterised family member. k = floor(n/2) is always derived, never stored.
struct FamilySpec {
    Family family = Family::DCn;
    int n = 0;
    int j = 0;              // DCn_i_kpjpi: 1..k-1; Zn_loop: loop vertex 2..n
    int m = 0;              // DCn_m: 3..n-1; Xn_loops: >= 1; Yn_arcs_loops: >= d+1
    std::vector<int> tips;  // DCn_tips: the n_t, ascending
    std::vector<int> arcs;  // Yn_arcs_loops: the n_i, ascending
    bool complemented = false;

    int k() const noexcept { return n / 2; }

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Smallest n for which the family is defined.
int min_order(Family f);

/// Throws InvalidParameter naming the violated constraint.
void validate(const FamilySpec& spec);

/// Canonical text: "family=DCn_tips n=8 tips=2,4". Complements of DCn and UDW
/// print as DCc and UDWc.
std::string to_string(const FamilySpec& spec);

/// Parses "key=value" tokens (family, n, j, m, tips, arcs, complement).
/// family=DCc / family=UDWc are shorthands for the complemented DCn / UDW.
FamilySpec parse_family_spec(const std::vector<std::string>& tokens);
FamilySpec parse_family_spec(const std::string& text);
FamilySpec parse_family_spec_json(const std::string& json_text);
std::string to_json(const FamilySpec& spec);

Digraph build_family(const FamilySpec& spec);

/// The published closed-form characteristic polynomial. Complemented specs
/// dispatch to complement_closed_form and only exist for DCn and UDW.
IntPolynomial closed_form_charpoly(const FamilySpec& spec);

/// Whether closed_form_charpoly is defined for this spec.
bool has_closed_form(const FamilySpec& spec);

enum class ComplementKind { DCc, UDWc };

/// DCc (n >= 5):  odd n:  (x-(n-2)) prod_{d|n,d>1} Phi_d(-(x+1))
///                even n: x(x-(n-2)) prod_{d|n,d>2} Phi_d(-(x+1))
/// UDWc (n >= 4): n=2k:   x prod_{d|2k-1,d>1} Phi_{2d}(x+1) (x-(2k-3))
///                n=2k+1: x^2 prod_{d|2k,d>2} Phi_{2d}(x+1) (x-(2k-2))
/// Evaluated exactly as written.
IntPolynomial complement_closed_form(ComplementKind kind, int n);

}  // namespace dgs

#endif
