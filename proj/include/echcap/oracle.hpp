#pragma once

#include <echcap/lattice.hpp>
#include <echcap/region.hpp>

namespace echcap {

// Closed-form ECH capacity sequence of the ellipsoid E(a,b): the (k+1)-st
// smallest value of {m a + n b : m, n >= 0}, with multiplicity. External
// cross-check for the lattice-path engine; never used inside it.
std::vector<Rational> ellipsoid_sequence(const Rational& a, const Rational& b, int K);

// Closed-form polydisk sequence: min{a m + b n : (m+1)(n+1) >= k+1}.
std::vector<Rational> polydisk_sequence(const Rational& a, const Rational& b, int K);

// Parameters of the intersection E(a,b) cap E(c,d) with a < b, c > d.
struct IntersectionParams {
    Rational a, b, c, d;
};

struct IntersectionR {
    Rational R;
    Point corner;
    // 2a >= R and 2d >= R; only then is R asserted to equal c_2 of the
    // intersection (and its enclosing-ball radius).
    bool hypothesis_met = false;
};

// R = (abc + bcd - acd - abd) / (bc - ad) and the interior corner where the
// two ellipse edges meet. Throws on violated parameter constraints.
IntersectionR intersection_R(const IntersectionParams& p);

}  // namespace echcap
