#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rimsurg/coset_enum.hpp"
#include "rimsurg/low_index.hpp"
#include "rimsurg/smith.hpp"

namespace rimsurg {

enum class VerdictKind { CertifiedCyclic, CertifiedNonCyclic, Inconclusive };

std::string to_string(VerdictKind k);

/// Which fact settled the verdict.
enum class Witness { None, Abelianization, MeridianIndex, CentralQuotientIndex, PermutationAction, GroupOrder };

std::string to_string(Witness w);

/// Three-valued answer to "is this group cyclic of order d, generated by the
/// meridian?" Every certified verdict records the completed enumeration,
/// abelianization or permutation action that proves it.
struct CyclicityVerdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    long d = 1;
    Witness witness = Witness::None;
    AbelianInvariants abelianization;
    /// The meridian generates the abelianization.
    bool meridian_generates_abelianization = false;
    /// Index of <meridian>, when that enumeration completed.
    std::optional<std::size_t> meridian_index;
    /// Index of <meridian, central words>, when that enumeration completed.
    std::optional<std::size_t> central_quotient_index;
    /// Number of supplied central words whose commutators with every
    /// generator are relators.
    std::size_t verified_central = 0;
    /// Transitive action of degree > 1 in which the meridian fixes point 0,
    /// on the group `action_presentation` (the group or its central quotient).
    std::optional<PermutationAction> action;
    std::optional<GroupPresentation> action_presentation;
    /// Group order (trivial-subgroup index), when that enumeration completed.
    std::optional<std::size_t> group_order;
    /// Statistics of the enumerations that ran, in order.
    std::vector<EnumerationStats> enumerations;
    std::size_t max_cosets = 0;
    bool timed_out = false;
    /// Size of the presentation actually enumerated.
    int generators = 0;
    std::size_t relators = 0;

    nlohmann::json to_json() const;
};

struct CertifyOptions {
    EnumerationLimits limits;
    /// After a non-cyclic index witness, also try to enumerate the group order.
    bool record_order = true;
    int tietze_budget = 64;
    /// Words claimed central. Each is used only if [x_i, w] is a relator for
    /// every generator x_i.
    std::vector<Word> central;
    /// Low-index search for a proper subgroup containing the meridian;
    /// max_index 0 disables it.
    LowIndexLimits low_index{12, 200000};
};

/// Decides whether p (with a distinguished meridian) presents Z_d:
///  1. abelianization must be Z_d, else non-cyclic;
///  2. index of <meridian>: 1 means cyclic, k > 1 means non-cyclic;
///  3. with verified central words W, the index of <meridian> in p / <W>:
///     1 means p is generated by commuting elements, hence Z_d; k > 1 means
///     <meridian> is proper;
///  4. a permutation action with the meridian in a proper point stabilizer;
///  5. the group order: d means cyclic, anything else non-cyclic;
///  6. otherwise inconclusive.
/// A proper <meridian> certifies non-cyclic only when the meridian generates
/// the abelianization. Throws std::invalid_argument if p has no meridian or
/// d < 1.
CyclicityVerdict certify_cyclic(const GroupPresentation& p, long d, const CertifyOptions& opts = {});
CyclicityVerdict certify_cyclic(const GroupPresentation& p, long d, std::size_t max_cosets);

/// True iff [x_i, w] is a relator of p (up to inversion) for every generator.
bool is_verified_central(const GroupPresentation& p, const Word& w);

}  // namespace rimsurg
