#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rimsurg/invariants.hpp"
#include "rimsurg/knot.hpp"
#include "rimsurg/presentation.hpp"
#include "rimsurg/schreier.hpp"

namespace rimsurg {

using Matrix3 = std::array<std::array<long, 3>, 3>;

std::string format_matrix(const Matrix3& m);
nlohmann::json matrix_json(const Matrix3& m);

/// Gluing map in the basis {alpha, beta, mu_T} -> {S^1, mu_K, lambda_K}.
/// Third column (0,0,1) and upper-left block of determinant 1.
class GluingMatrix {
public:
    explicit GluingMatrix(const Matrix3& m);
    const Matrix3& matrix() const { return m_; }

private:
    Matrix3 m_;
};

/// Twist m times, roll n times: [[1,0,0],[m,1,0],[n,0,1]].
GluingMatrix gluing_matrix(long m, long n);

/// Empty when M is a valid gluing matrix.
std::vector<std::string> validate_gluing(const Matrix3& m);

enum class SurgeryKind { Rim, AnnulusRim };

std::string to_string(SurgeryKind k);
SurgeryKind parse_surgery_kind(const std::string& s);

/// Surgery parameters: pi_1 of the surface complement is Z_d; m twists and
/// n rolls in the gluing. `knot` is a builtin name or braid text.
struct SurgerySpec {
    std::string knot;
    long d = 1;
    long m = 0;
    long n = 0;
    SurgeryKind kind = SurgeryKind::Rim;
    /// Band framing for annulus rim surgery (the unknotted band has framing 0).
    int framing = 0;

    BraidWord braid() const { return resolve_knot(knot); }
    /// Throws std::invalid_argument on bad parameters.
    void validate() const;

    nlohmann::json to_json() const;
    static SurgerySpec from_json(const nlohmann::json& j);

    friend bool operator==(const SurgerySpec&, const SurgerySpec&) = default;
    friend bool operator<(const SurgerySpec& a, const SurgerySpec& b);
};

/// lambda^n mu^m, freely reduced. Throws if the peripheral words are missing.
Word twist_roll_conjugator(const GroupPresentation& g, long m, long n);
Word twist_roll_conjugator(const WirtingerPresentation& w, long m, long n);

/// Wirtinger presentation of the closure reduced by Tietze moves, meridian
/// and longitude rewritten along. Every surviving generator is an arc
/// generator.
GroupPresentation knot_group_presentation(const BraidWord& b);

/// <x_i | knot relators, mu^d, [x_i, w] for all i> with w = lambda^n mu^m,
/// over knot_group_presentation; meridian marked. Commuting with every
/// generator of a generating set is the same as being central.
GroupPresentation rim_surgery_group(const SurgerySpec& spec);

/// Band tangle group (Tietze-reduced) quotiented by a1^d, a3, a1 a2^-1 and
/// [x_i, w] with w = lambda_band^n a3^m; meridian marked as a1.
GroupPresentation annulus_rim_surgery_group(const SurgerySpec& spec);

/// The group a spec's verdict is about: rim or annulus by kind.
GroupPresentation surgery_group(const SurgerySpec& spec);

/// Surgery group together with the twist-roll word made central in it.
struct SurgeryPresentation {
    GroupPresentation group;
    Word central;
};
SurgeryPresentation build_surgery(const SurgerySpec& spec);

/// The band tangle used by an annulus spec.
TangleDiagram surgery_band(const SurgerySpec& spec);

/// Reidemeister-Schreier data for the kernel of the meridian-exponent map
/// onto Z_d, read from the d-cycle coset table of the knot group. Every
/// generator must have meridian exponent 1: relators need exponent sum 0
/// and the meridian exponent sum 1, otherwise std::invalid_argument.
SchreierPresentation meridian_kernel(const GroupPresentation& knot, long d);

/// pi_1 of the d-fold unbranched cover of the surgered complement:
/// the kernel with every lift of mu^d killed and s = w^-1 s w imposed on each
/// Schreier generator s, where w = mu^m lambda^n.
GroupPresentation unbranched_cover_group(const SurgerySpec& spec);

/// pi_1 of the d-fold branched cover of S^3 along the knot: the kernel with
/// all meridian lifts killed.
GroupPresentation branched_cover_group(const BraidWord& knot, long d);

/// pi_1 of the surgered branched cover: branched_cover_group, then the
/// automorphism relators.
GroupPresentation branched_cover_surgered_group(const SurgerySpec& spec);

/// Matrix [[m,d,0],[-gamma,beta,0],[0,0,1]] with d*gamma + m*beta = 1 and
/// 0 <= beta < d. Matching it against the general homology-sphere form forces
/// the correction terms b and alpha to vanish; both are recorded.
struct PlotnickMatrix {
    Matrix3 matrix;
    long gamma;
    long beta;
    long b;
    long alpha;

    long determinant() const;
};

/// Throws std::invalid_argument unless gcd(d, m) = 1 and d >= 1.
PlotnickMatrix plotnick_matrix(long d, long m);

long determinant3(const Matrix3& m);

}  // namespace rimsurg
