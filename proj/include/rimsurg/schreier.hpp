#pragma once

#include <optional>
#include <vector>

#include "rimsurg/coset_enum.hpp"
#include "rimsurg/presentation.hpp"

namespace rimsurg {

/// Presentation of a finite-index subgroup H on Schreier generators, together
/// with the data needed to rewrite words of the parent group lying in H.
///
/// The transversal is the BFS spanning tree of the coset table, exploring
/// columns in order g0, g0^-1, g1, ... Each non-tree edge (c, g) gives the
/// Schreier generator rep(c) g rep(c g)^-1.
class SchreierPresentation {
public:
    SchreierPresentation(GroupPresentation parent, CosetTable table);

    const GroupPresentation& subgroup() const { return subgroup_; }
    const GroupPresentation& parent() const { return parent_; }
    const CosetTable& table() const { return table_; }
    std::size_t index() const { return table_.size(); }

    /// Transversal representative of each coset (parent generators).
    const std::vector<Word>& transversal() const { return reps_; }
    /// Schreier generator s as a word in the parent generators.
    const std::vector<Word>& generator_words() const { return gen_words_; }

    /// Rewrites w (which must lie in H) as a word in Schreier generators.
    /// Throws std::invalid_argument if w does not fix the subgroup coset.
    Word rewrite(const Word& w) const;
    /// Rewrites w read from the given coset; returns the word and end coset.
    Word rewrite_from(std::size_t coset, const Word& w, std::size_t& end) const;

private:
    GroupPresentation parent_;
    CosetTable table_;
    std::vector<Word> reps_;
    /// schreier_[c * ngens + g] = Schreier generator index for edge (c, g), or -1 for tree edges.
    std::vector<int> schreier_;
    std::vector<Word> gen_words_;
    GroupPresentation subgroup_;
};

/// Enumerates cosets of the subgroup generated by `subgroup` and rewrites.
/// Returns nullopt if enumeration overflows.
std::optional<SchreierPresentation> reidemeister_schreier(const GroupPresentation& p,
                                                          const std::vector<Word>& subgroup,
                                                          const EnumerationLimits& limits = {});

}  // namespace rimsurg
