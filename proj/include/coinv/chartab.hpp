#pragma once

#include <string>
#include <vector>

#include "coinv/cyclotomic.hpp"
#include "coinv/numeric.hpp"

namespace coinv::chartab {

/// Element of the dihedral group of order 2n, written rho^e phi^f with
/// the presentation rho^n = phi^2 = 1, phi^-1 rho phi = rho^-1. Also
/// used in cyclic mode, where only rotations appear.
struct GroupElement {
    bool reflection = false;  // f = 1
    int exponent = 0;         // e, reduced mod n

    static GroupElement identity() { return {false, 0}; }
    static GroupElement rotation(int e, int n);
    static GroupElement reflect(int e, int n);

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    std::string to_string() const;
};

GroupElement compose(const GroupElement& a, const GroupElement& b, int n);
GroupElement inverse(const GroupElement& g, int n);
/// All 2n elements: rotations rho^0..rho^(n-1), then reflections
/// rho^0 phi..rho^(n-1) phi. Class functions are indexed in this order.
std::vector<GroupElement> all_elements(int n);

struct ConjClass {
    GroupElement rep;
    int size = 0;
};
std::vector<ConjClass> conjugacy_classes(int n);

/// Character label: the four linear dihedral characters, the
/// two-dimensional family chi^h, or a cyclic character chi_i.
struct CharLabel {
    enum class Kind { Chi1, Chi2, Chi3, Chi4, TwoDim, Cyclic };
    Kind kind = Kind::Chi1;
    int index = 0;  // h for TwoDim, i for Cyclic

    static CharLabel chi1() { return {Kind::Chi1, 0}; }
    static CharLabel chi2() { return {Kind::Chi2, 0}; }
    static CharLabel chi3() { return {Kind::Chi3, 0}; }
    static CharLabel chi4() { return {Kind::Chi4, 0}; }
    static CharLabel two_dim(int h) { return {Kind::TwoDim, h}; }
    static CharLabel cyclic(int i) { return {Kind::Cyclic, i}; }

    friend auto operator<=>(const CharLabel&, const CharLabel&) = default;
    std::string to_string() const;
};

/// Validates a label against the group order; throws on chi3/chi4 with
/// odd n, out-of-range h, and the like. Extended labels chi^h with
/// floor((n-1)/2) < h <= n-1 are accepted here but flagged by
/// is_irreducible.
void validate_label(const CharLabel& label, int n);
bool is_irreducible(const CharLabel& label, int n);
int char_dimension(const CharLabel& label, int n);

/// The complete irreducible table for I2(n), in a fixed order.
std::vector<CharLabel> irreducible_labels(int n);

/// Exact character value; lives in Q(zeta_n).
Cyclotomic dihedral_char_value(const CharLabel& label, const GroupElement& g,
                               int n);

/// chi_i(a^ell) = zeta_n^(i ell) for the cyclic group Z_n.
Cyclotomic cyclic_char_value(int i, long ell, int n);

/// Class-function inner product (1/|G|) sum_g f(g) conj(h(g)). Vectors
/// of length 2n are read as dihedral class functions indexed as in
/// all_elements(n); vectors of length n as cyclic ones indexed by
/// a^0..a^(n-1). The result must be rational (true for sums and
/// differences of characters); otherwise throws.
Rational inner_product(const std::vector<Cyclotomic>& f,
                       const std::vector<Cyclotomic>& h, int n);

/// chi_i on a^0..a^(n-1), for use with inner_product in cyclic mode.
std::vector<Cyclotomic> cyclic_character_values(int i, int n);

/// Character of label as an element-indexed vector, matching
/// all_elements(n).
std::vector<Cyclotomic> character_values(const CharLabel& label, int n);

}  // namespace coinv::chartab
