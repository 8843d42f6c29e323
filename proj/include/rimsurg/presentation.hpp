#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rimsurg/word.hpp"

namespace rimsurg {

/// Finite presentation <x_0..x_{n-1} | relators> with optional peripheral words.
///
/// Relators are cyclically reduced on construction and empty ones dropped.
/// The meridian and longitude, when present, are checked against the
/// generator count.
class GroupPresentation {
public:
    GroupPresentation() = default;
    GroupPresentation(int generators, std::vector<Word> relators,
                      std::vector<std::string> names = {});

    int generator_count() const { return ngens_; }
    const std::vector<Word>& relators() const { return rels_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int gen) const { return names_.at(static_cast<std::size_t>(gen)); }

    const std::optional<Word>& meridian() const { return meridian_; }
    const std::optional<Word>& longitude() const { return longitude_; }
    void set_meridian(Word w);
    void set_longitude(Word w);
    void clear_peripheral();

    /// Sum of relator lengths.
    std::size_t total_length() const;
    std::size_t max_relator_length() const;

    /// Relators sorted by length, then lexicographically.
    std::vector<Word> normalized_relators() const;

    /// Throws std::out_of_range if w mentions a generator >= generator_count().
    void check_word(const Word& w) const;

    /// "a B a a" letter form, capital letter = inverse.
    std::string format_word(const Word& w) const;
    Word parse_word(const std::string& text) const;

    nlohmann::json to_json() const;
    static GroupPresentation from_json(const nlohmann::json& j);

private:
    int ngens_ = 0;
    std::vector<Word> rels_;
    std::vector<std::string> names_;
    std::optional<Word> meridian_;
    std::optional<Word> longitude_;
};

/// Default generator names: a..z for up to 26 generators, else x1..xN.
std::vector<std::string> default_generator_names(int count);

/// Homomorphism from a presentation on source_generators() generators,
/// given by the image word of each generator.
class GroupMap {
public:
    GroupMap(std::vector<Word> images, int target_generators);

    static GroupMap identity(int generators);
    /// g -> c^{-1} g c for every generator.
    static GroupMap conjugation(int generators, const Word& c);

    int source_generators() const { return static_cast<int>(images_.size()); }
    int target_generators() const { return target_; }
    const Word& image(int gen) const { return images_.at(static_cast<std::size_t>(gen)); }

    Word apply(const Word& w) const;

private:
    std::vector<Word> images_;
    int target_;
};

/// Adds the extra words as relators; peripheral data carried over.
GroupPresentation quotient(const GroupPresentation& p, const std::vector<Word>& extra);

struct TietzeOptions {
    int budget = 64;
    /// Maximum relator length allowed after a substitution; 0 means
    /// 10x the longest input relator.
    std::size_t max_relator_length = 0;
    /// Generators that must not be eliminated.
    std::vector<int> protect;
    /// Eliminations may grow the total relator length up to growth times the
    /// input total; 1 means the total never increases.
    double growth = 1.0;
};

/// Simplifies p to a presentation of an isomorphic group. Peripheral words are
/// rewritten through every elimination; a generator that is the whole meridian
/// is never eliminated.
GroupPresentation tietze_simplify(const GroupPresentation& p, const TietzeOptions& opts = {});
/// Same, also rewriting each tracked word into the new generators.
GroupPresentation tietze_simplify(const GroupPresentation& p, const TietzeOptions& opts, std::vector<Word>& tracked);
GroupPresentation tietze_simplify(const GroupPresentation& p, int budget);

}  // namespace rimsurg
