#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rimsurg/word.hpp"

namespace rimsurg {

/// Braid on `strands` strands. Letter i is the positive crossing of strands
/// i, i+1 (the strand entering at position i passes over); -i is its inverse.
/// The closure is required to be a knot.
class BraidWord {
public:
    BraidWord(int strands, std::vector<int> letters);

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }
    int writhe() const;

    /// Number of components of the closure.
    static int closure_components(int strands, const std::vector<int>& letters);

    /// "Bn: l1 l2 ..."
    std::string format() const;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    int strands_;
    std::vector<int> letters_;
};

BraidWord parse_braid(const std::string& text);

/// Connected sum realised on braids: b2 shifted right so that its first
/// strand is the last strand of b1.
BraidWord braid_connected_sum(const BraidWord& b1, const BraidWord& b2);

struct Crossing {
    int over;
    int under_in;
    int under_out;
    int sign;

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Oriented single-component diagram. Arcs are numbered 0..arc_count-1 in the
/// order met when travelling along the knot from the marked arc 0, so the
/// crossing ending arc i starts arc (i+1) mod arc_count.
class KnotDiagram {
public:
    KnotDiagram(std::vector<Crossing> crossings, int arc_count, std::optional<BraidWord> source = {});

    const std::vector<Crossing>& crossings() const { return crossings_; }
    int arc_count() const { return arcs_; }
    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int writhe() const;
    const std::optional<BraidWord>& source_braid() const { return source_; }

    /// Crossing passed under at the end of arc i.
    const Crossing& crossing_ending(int arc) const;

    nlohmann::json to_json() const;
    static KnotDiagram from_json(const nlohmann::json& j);

private:
    std::vector<Crossing> crossings_;
    int arcs_;
    std::optional<BraidWord> source_;
};

/// Closes b to the right. Arc 0 is the arc through the top of strand 1.
KnotDiagram braid_closure_diagram(const BraidWord& b);

/// Two-strand tangle in B^3: the boundary of a band knotted along a knot.
/// The strands are oriented as the boundary of the band, so they run
/// antiparallel. Strand A starts at the top-left boundary point, strand B ends
/// at the top-right one.
class TangleDiagram {
public:
    TangleDiagram(std::vector<Crossing> crossings, std::vector<std::vector<int>> strands, int clasp_pairs = 0,
                  std::vector<int> cable = {});

    const std::vector<Crossing>& crossings() const { return crossings_; }
    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int arc_count() const { return arcs_; }
    int writhe() const;
    /// Arc ids of each strand in orientation order.
    const std::vector<std::vector<int>>& strands() const { return strands_; }
    int clasp_pairs() const { return clasps_; }
    /// Braid letters on 2n strands this tangle was read from (empty if none).
    const std::vector<int>& cable() const { return cable_; }

    /// Boundary loops as words over arc generators: a1 around strand A,
    /// a2 around strand B, a3 = a1 a2^{-1} around both.
    Word a1() const;
    Word a2() const;
    Word a3() const;

    /// Crossing where `arc` passes under and ends, if any.
    std::optional<Crossing> crossing_ending(int arc) const;

    nlohmann::json to_json() const;

private:
    std::vector<Crossing> crossings_;
    std::vector<std::vector<int>> strands_;
    int arcs_ = 0;
    int clasps_ = 0;
    std::vector<int> cable_;
};

/// Doubles the knot into the boundary of a band with the given framing.
/// Each crossing becomes four; |framing - writhe| full twists (two crossings
/// each) are inserted at the top of the band.
TangleDiagram band_double(const KnotDiagram& d, int framing);

struct KnotTableEntry {
    std::string name;
    BraidWord braid;
    /// Coefficients of the normalized Alexander polynomial, constant term first.
    std::vector<long> alexander;
    int arf;
};

KnotTableEntry builtin_knot(const std::string& name);
std::vector<std::string> builtin_knot_names();

/// Builtin name or braid text ("B3: 1 -2 1 -2").
BraidWord resolve_knot(const std::string& text);

}  // namespace rimsurg
