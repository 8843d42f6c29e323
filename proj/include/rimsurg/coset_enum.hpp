#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rimsurg/presentation.hpp"

namespace rimsurg {

inline constexpr std::size_t kDefaultMaxCosets = 100000;

/// Closed coset table. Row 0 is the subgroup coset. Column 2g is generator g,
/// column 2g+1 its inverse; entries are coset indices.
class CosetTable {
public:
    CosetTable(int generators, std::size_t rows, std::vector<std::int32_t> entries);

    int generator_count() const { return ngens_; }
    std::size_t size() const { return rows_; }
    std::int32_t act(std::size_t coset, int column) const {
        return entries_[coset * static_cast<std::size_t>(2 * ngens_) + static_cast<std::size_t>(column)];
    }
    /// Image of coset under a word (letters as in Word::letters()).
    std::size_t trace(std::size_t coset, const Word& w) const;

    /// Checks that entry (c, x) = c' iff (c', x^-1) = c for every entry.
    bool is_consistent() const;

    nlohmann::json to_json() const;

private:
    int ngens_;
    std::size_t rows_;
    std::vector<std::int32_t> entries_;
};

inline int column_of(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }
inline int inverse_column(int col) { return col ^ 1; }

struct EnumerationStats {
    std::size_t cosets_defined = 0;
    std::size_t max_live = 0;
    std::size_t coincidences = 0;
    std::size_t lookaheads = 0;
};

struct Complete {
    std::size_t index;
    EnumerationStats stats;
};

struct Overflow {
    std::size_t cosets_used;
    std::size_t limit;
    bool timed_out = false;
    EnumerationStats stats;
};

/// Outcome of a coset enumeration. Complete carries the closed table.
class EnumerationResult {
public:
    EnumerationResult(Complete c, CosetTable table) : outcome_(c), table_(std::move(table)) {}
    explicit EnumerationResult(Overflow o) : outcome_(o) {}

    bool complete() const { return std::holds_alternative<Complete>(outcome_); }
    std::size_t index() const { return std::get<Complete>(outcome_).index; }
    const Complete& completion() const { return std::get<Complete>(outcome_); }
    const Overflow& overflow() const { return std::get<Overflow>(outcome_); }
    const CosetTable& table() const { return *table_; }
    const EnumerationStats& stats() const;

private:
    std::variant<Complete, Overflow> outcome_;
    std::optional<CosetTable> table_;
};

enum class Strategy { HLT, Felsch };

struct EnumerationLimits {
    std::size_t max_cosets = kDefaultMaxCosets;
    Strategy strategy = Strategy::HLT;
    /// Wall-clock cutoff; nullopt means unbounded.
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Coset enumeration for the subgroup generated by `subgroup` in the group
/// presented by p: HLT with lookahead, or Felsch (deductions scanned against
/// relator conjugates, then every relator checked at every coset). Relators
/// are taken in normalized order so the run is deterministic. max_cosets
/// bounds the live table size.
EnumerationResult todd_coxeter(const GroupPresentation& p, const std::vector<Word>& subgroup,
                               const EnumerationLimits& limits = {});
EnumerationResult todd_coxeter(const GroupPresentation& p, const std::vector<Word>& subgroup,
                               std::size_t max_cosets);

}  // namespace rimsurg
