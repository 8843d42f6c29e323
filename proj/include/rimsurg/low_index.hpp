#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "rimsurg/presentation.hpp"

namespace rimsurg {

/// Action of a finitely presented group on {0..degree-1}, given by the
/// permutation image of each generator.
struct PermutationAction {
    int degree = 0;
    /// images[g][i] is the image of point i under generator g.
    std::vector<std::vector<int>> images;

    int apply(int point, const Word& w) const;
    /// Every relator acts trivially on every point.
    bool satisfies(const GroupPresentation& p) const;
    bool is_transitive() const;
    nlohmann::json to_json() const;
};

struct LowIndexLimits {
    int max_index = 8;
    /// Search nodes per index bound before giving up on that bound.
    std::size_t max_nodes = 200000;
};

/// Searches for a transitive action of degree 2..max_index in which every
/// word of `fixed` fixes point 0, i.e. a proper subgroup of index at most
/// max_index containing those words. Index bounds 2, 3, ... are searched in
/// turn. Returns nullopt if none was found within the node budgets.
std::optional<PermutationAction> find_proper_subgroup_action(const GroupPresentation& p,
                                                            const std::vector<Word>& fixed,
                                                            const LowIndexLimits& limits = {});

}  // namespace rimsurg
