#pragma once

#include <string>

#include "rimsurg/knot.hpp"
#include "rimsurg/laurent.hpp"
#include "rimsurg/presentation.hpp"

namespace rimsurg {

/// Knot group with one generator per arc and one conjugation relator per
/// crossing, x_out = x_over^s x_in x_over^-s for crossing sign s. The
/// meridian is generator 0 (the marked arc). With this relator convention the
/// standard longitude (parallel to the knot, linking the meridian +1) is the
/// inverse of P * meridian^writhe, where P is the product of x_over^-s over the
/// undercrossings met from arc 0. Its meridian exponent sum is 0.
struct WirtingerPresentation {
    GroupPresentation group;

    const Word& meridian() const { return *group.meridian(); }
    const Word& longitude() const { return *group.longitude(); }
};

WirtingerPresentation wirtinger(const KnotDiagram& d);

/// Complement of a band tangle with the marked boundary loops. The presentation
/// carries meridian = a3 (the band meridian, i.e. a meridian of the knot the
/// band follows) and longitude = the core pushoff read along strand A.
struct TangleGroup {
    GroupPresentation group;
    Word a1, a2, a3;
};

TangleGroup tangle_wirtinger(const TangleDiagram& t);

/// Relator x_out^-1 x_over^s x_in x_over^-s.
Word wirtinger_relator(const Crossing& c);

/// Fox derivatives of the relators, abelianized by x_i -> t.
std::vector<std::vector<LaurentPolynomial>> alexander_matrix(const GroupPresentation& p);

/// Normalized Alexander polynomial from a maximal minor of the Alexander
/// matrix; a second minor is computed and must agree.
LaurentPolynomial alexander_polynomial(const KnotDiagram& d);

/// |Delta(-1)|, the knot determinant.
mpz_class knot_determinant(const KnotDiagram& d);

/// Arf invariant by the Levine congruence: 0 iff Delta(-1) = +-1 mod 8.
int arf_from_alexander(const LaurentPolynomial& delta);
int arf_invariant(const KnotDiagram& d);

struct NormalInvariantReport {
    int arf;
    bool normally_trivial;
    std::string class_label;
};

NormalInvariantReport normal_invariant_report(const KnotDiagram& d);
NormalInvariantReport normal_invariant_from_arf(int arf);

}  // namespace rimsurg
