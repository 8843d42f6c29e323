#include "rimsurg/knot.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rimsurg {

// ---------------------------------------------------------------- braids

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
    if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
    for (int l : letters_)
        if (l == 0 || std::abs(l) > strands - 1)
            throw std::invalid_argument("braid letter " + std::to_string(l) + " out of range for B" +
                                        std::to_string(strands));
    const int comps = closure_components(strands, letters_);
    if (comps != 1)
        throw std::invalid_argument("braid closure has " + std::to_string(comps) + " components");
}

int BraidWord::writhe() const {
    int w = 0;
    for (int l : letters_) w += l > 0 ? 1 : -1;
    return w;
}

int BraidWord::closure_components(int strands, const std::vector<int>& letters) {
    std::vector<int> perm(static_cast<std::size_t>(strands));
    std::iota(perm.begin(), perm.end(), 0);
    // perm[p] = bottom position of the strand entering at top position p
    std::vector<int> at(perm);  // at[pos] = strand currently at pos
    for (int l : letters) {
        const std::size_t i = static_cast<std::size_t>(std::abs(l) - 1);
        std::swap(at[i], at[i + 1]);
    }
    for (std::size_t pos = 0; pos < at.size(); ++pos) perm[static_cast<std::size_t>(at[pos])] = static_cast<int>(pos);
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (std::size_t t = s; !seen[t]; t = static_cast<std::size_t>(perm[t])) seen[t] = true;
    }
    return cycles;
}

std::string BraidWord::format() const {
    std::ostringstream out;
    out << 'B' << strands_ << ':';
    for (int l : letters_) out << ' ' << l;
    return out.str();
}

BraidWord parse_braid(const std::string& text) {
    std::istringstream in(text);
    std::string head;
    if (!(in >> head) || head.size() < 3 || (head[0] != 'B' && head[0] != 'b') || head.back() != ':')
        throw std::invalid_argument("expected braid of the form 'Bn: l1 l2 ...', got '" + text + "'");
    int strands = 0;
    try {
        std::size_t used = 0;
        strands = std::stoi(head.substr(1, head.size() - 2), &used);
        if (used != head.size() - 2) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed strand count '" + head + "'");
    }
    std::vector<int> letters;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || used == 0) throw std::invalid_argument("malformed braid token '" + tok + "'");
        letters.push_back(v);
    }
    return BraidWord(strands, std::move(letters));
}

BraidWord braid_connected_sum(const BraidWord& b1, const BraidWord& b2) {
    std::vector<int> letters = b1.letters();
    const int shift = b1.strands() - 1;
    for (int l : b2.letters()) letters.push_back(l > 0 ? l + shift : l - shift);
    return BraidWord(b1.strands() + b2.strands() - 1, std::move(letters));
}

// ---------------------------------------------------------------- braid walks

namespace {

// A braid-like picture: letters on positions, each strand
// walked down (+1) or up (-1).
struct Walker {
    const std::vector<int>& letters;

    // Over strand of letter l enters (top) at this position.
    static int over_top(int l) { return l > 0 ? std::abs(l) - 1 : std::abs(l); }
};

struct ArcBuilder {
    std::vector<Crossing> crossings;
    std::vector<int> visits;  // per crossing, bit 1 = over seen, bit 2 = under seen
    std::vector<int> over_dir, under_dir;

    explicit ArcBuilder(std::size_t n)
        : crossings(n, Crossing{-1, -1, -1, 0}), visits(n, 0), over_dir(n, 0), under_dir(n, 0) {}
};

// Walks one strand from (pos, level) in direction dir (+1 down, -1 up) until
// `stop` says so at a boundary level. Records over/under events with the arc
// ids met; `arc` is advanced at each undercrossing.
template <typename Stop>
void walk(const Walker& w, ArcBuilder& ab, int pos, int dir, int& arc, std::vector<int>& strand_arcs, Stop stop) {
    const auto L = static_cast<long>(w.letters.size());
    long level = dir > 0 ? 0 : L;
    strand_arcs.push_back(arc);
    while (true) {
        if (dir > 0 && level == L) {
            if (stop(pos, dir)) return;
            level = 0;
            continue;
        }
        if (dir < 0 && level == 0) {
            if (stop(pos, dir)) return;
            level = L;
            continue;
        }
        const std::size_t k = static_cast<std::size_t>(dir > 0 ? level : level - 1);
        const int l = w.letters[k];
        const int i = std::abs(l) - 1;
        level += dir;
        if (pos != i && pos != i + 1) continue;
        // Position of this strand at the top of letter k.
        const int top_pos = dir > 0 ? pos : (pos == i ? i + 1 : i);
        const int otop = Walker::over_top(l);
        const bool over = top_pos == otop;
        pos = pos == i ? i + 1 : i;
        Crossing& c = ab.crossings[k];
        if (over) {
            c.over = arc;
            ab.visits[k] |= 1;
            ab.over_dir[k] = dir;
        } else {
            ab.under_dir[k] = dir;
            c.under_in = arc;
            ++arc;
            c.under_out = arc;
            strand_arcs.push_back(arc);
            ab.visits[k] |= 2;
        }
    }
}

// Checks every crossing was passed over and under, then sets the signs: a
// braid letter's sign, flipped when exactly one strand runs upward.
void finish_crossings(const Walker& w, ArcBuilder& ab) {
    for (std::size_t k = 0; k < ab.crossings.size(); ++k) {
        if (ab.visits[k] != 3) throw std::logic_error("braid walk missed a crossing");
        ab.crossings[k].sign = (w.letters[k] > 0 ? 1 : -1) * ab.over_dir[k] * ab.under_dir[k];
    }
}

}  // namespace

// ---------------------------------------------------------------- knot diagrams

KnotDiagram::KnotDiagram(std::vector<Crossing> crossings, int arc_count, std::optional<BraidWord> source)
    : crossings_(std::move(crossings)), arcs_(arc_count), source_(std::move(source)) {
    const int c = crossing_count();
    if (c == 0) {
        if (arcs_ != 1) throw std::invalid_argument("crossingless diagram must have exactly one arc");
        return;
    }
    if (arcs_ != c) throw std::invalid_argument("knot diagram must have as many arcs as crossings");
    std::vector<int> as_in(static_cast<std::size_t>(c), 0), as_out(static_cast<std::size_t>(c), 0);
    for (const auto& x : crossings_) {
        for (int a : {x.over, x.under_in, x.under_out})
            if (a < 0 || a >= c) throw std::invalid_argument("crossing references unknown arc");
        if (x.sign != 1 && x.sign != -1) throw std::invalid_argument("crossing sign must be +1 or -1");
        if (x.under_out != (x.under_in + 1) % c)
            throw std::invalid_argument("arcs are not labelled consecutively along the knot");
        ++as_in[static_cast<std::size_t>(x.under_in)];
        ++as_out[static_cast<std::size_t>(x.under_out)];
    }
    for (int a = 0; a < c; ++a)
        if (as_in[static_cast<std::size_t>(a)] != 1 || as_out[static_cast<std::size_t>(a)] != 1)
            throw std::invalid_argument("arc " + std::to_string(a) + " must end and start exactly once");
}

int KnotDiagram::writhe() const {
    int w = 0;
    for (const auto& c : crossings_) w += c.sign;
    return w;
}

const Crossing& KnotDiagram::crossing_ending(int arc) const {
    for (const auto& c : crossings_)
        if (c.under_in == arc) return c;
    throw std::out_of_range("arc " + std::to_string(arc) + " ends at no crossing");
}

namespace {

nlohmann::json crossings_json(const std::vector<Crossing>& cs) {
    auto arr = nlohmann::json::array();
    for (const auto& c : cs)
        arr.push_back({{"over", c.over}, {"under_in", c.under_in}, {"under_out", c.under_out}, {"sign", c.sign}});
    return arr;
}

}  // namespace

nlohmann::json KnotDiagram::to_json() const {
    nlohmann::json j{{"crossings", crossings_json(crossings_)}, {"arcs", arcs_}, {"writhe", writhe()}};
    if (source_) j["braid"] = source_->format();
    return j;
}

KnotDiagram KnotDiagram::from_json(const nlohmann::json& j) {
    std::vector<Crossing> cs;
    for (const auto& c : j.at("crossings"))
        cs.push_back({c.at("over").get<int>(), c.at("under_in").get<int>(), c.at("under_out").get<int>(),
                      c.at("sign").get<int>()});
    std::optional<BraidWord> src;
    if (j.contains("braid")) src = parse_braid(j["braid"].get<std::string>());
    KnotDiagram d(std::move(cs), j.at("arcs").get<int>(), std::move(src));
    if (j.contains("writhe") && j["writhe"].get<int>() != d.writhe())
        throw std::invalid_argument("writhe does not match crossing signs");
    return d;
}

KnotDiagram braid_closure_diagram(const BraidWord& b) {
    const auto& letters = b.letters();
    const std::size_t c = letters.size();
    if (c == 0) return KnotDiagram({}, 1, b);
    Walker w{letters};
    ArcBuilder ab(c);
    int arc = 0;
    std::vector<int> arcs;
    walk(w, ab, 0, +1, arc, arcs, [](int pos, int) { return pos == 0; });
    finish_crossings(w, ab);
    // The last arc runs back through the top of strand 1: it is arc 0.
    const int n = arc;
    for (auto& x : ab.crossings) {
        if (x.over == n) x.over = 0;
        if (x.under_out == n) x.under_out = 0;
    }
    return KnotDiagram(std::move(ab.crossings), n, b);
}

// ---------------------------------------------------------------- tangles

TangleDiagram::TangleDiagram(std::vector<Crossing> crossings, std::vector<std::vector<int>> strands, int clasp_pairs,
                             std::vector<int> cable)
    : crossings_(std::move(crossings)), strands_(std::move(strands)), clasps_(clasp_pairs), cable_(std::move(cable)) {
    if (strands_.size() != 2) throw std::invalid_argument("band tangle must have exactly two strands");
    std::vector<int> owner;
    for (std::size_t s = 0; s < strands_.size(); ++s) {
        if (strands_[s].empty()) throw std::invalid_argument("tangle strand without arcs");
        for (int a : strands_[s]) {
            if (a < 0) throw std::invalid_argument("negative arc id");
            if (static_cast<std::size_t>(a) >= owner.size()) owner.resize(static_cast<std::size_t>(a) + 1, -1);
            if (owner[static_cast<std::size_t>(a)] != -1) throw std::invalid_argument("arc on two strands");
            owner[static_cast<std::size_t>(a)] = static_cast<int>(s);
        }
    }
    arcs_ = static_cast<int>(owner.size());
    for (int o : owner)
        if (o == -1) throw std::invalid_argument("arc ids are not contiguous");
    if (arcs_ != crossing_count() + 2) throw std::invalid_argument("tangle must have crossings + 2 arcs");
    std::vector<int> ends(static_cast<std::size_t>(arcs_), 0);
    for (const auto& x : crossings_) {
        for (int a : {x.over, x.under_in, x.under_out})
            if (a < 0 || a >= arcs_) throw std::invalid_argument("crossing references unknown arc");
        if (x.sign != 1 && x.sign != -1) throw std::invalid_argument("crossing sign must be +1 or -1");
        const auto& st = strands_[static_cast<std::size_t>(owner[static_cast<std::size_t>(x.under_in)])];
        auto it = std::find(st.begin(), st.end(), x.under_in);
        if (it + 1 == st.end() || *(it + 1) != x.under_out)
            throw std::invalid_argument("under arcs of a crossing are not consecutive on a strand");
        ++ends[static_cast<std::size_t>(x.under_in)];
    }
    for (const auto& st : strands_)
        for (std::size_t i = 0; i < st.size(); ++i)
            if (ends[static_cast<std::size_t>(st[i])] != (i + 1 < st.size() ? 1 : 0))
                throw std::invalid_argument("every interior arc must end at exactly one crossing");
}

int TangleDiagram::writhe() const {
    int w = 0;
    for (const auto& c : crossings_) w += c.sign;
    return w;
}

Word TangleDiagram::a1() const { return Word::generator(strands_[0].front()); }
Word TangleDiagram::a2() const { return Word::generator(strands_[1].back()); }
Word TangleDiagram::a3() const { return a1() * a2().inverse(); }

std::optional<Crossing> TangleDiagram::crossing_ending(int arc) const {
    for (const auto& c : crossings_)
        if (c.under_in == arc) return c;
    return std::nullopt;
}

nlohmann::json TangleDiagram::to_json() const {
    nlohmann::json j{{"crossings", crossings_json(crossings_)},
                     {"arcs", arcs_},
                     {"writhe", writhe()},
                     {"strands", strands_},
                     {"clasp_pairs", clasps_},
                     {"boundary", {{"a1", strands_[0].front()}, {"a2", strands_[1].back()}}}};
    if (!cable_.empty()) j["cable"] = cable_;
    return j;
}

TangleDiagram band_double(const KnotDiagram& d, int framing) {
    if (!d.source_braid())
        throw std::invalid_argument("band doubling needs a diagram built from a braid closure");
    const BraidWord& b = *d.source_braid();
    const int twists = framing - d.writhe();
    // Blackboard parallel of the braid; its closure is a two-component link.
    struct {
        int strands;
        std::vector<int> letters;
    } cab{2 * b.strands(), {}};
    for (int t = 0; t < 2 * std::abs(twists); ++t) cab.letters.push_back(twists > 0 ? 1 : -1);
    for (int l : b.letters()) {
        const int i = std::abs(l) - 1;
        const int e = l > 0 ? 1 : -1;
        for (int q : {2 * i + 2, 2 * i + 1, 2 * i + 3, 2 * i + 2}) cab.letters.push_back(e * q);
    }

    Walker w{cab.letters};
    ArcBuilder ab(cab.letters.size());
    int arc = 0;
    std::vector<int> strand_a, strand_b;
    // Strand A: from the top of position 0 down to the bottom of position 0.
    walk(w, ab, 0, +1, arc, strand_a, [](int pos, int) { return pos == 0; });
    ++arc;
    // Strand B: from the bottom of position 1 up to the top of position 1.
    walk(w, ab, 1, -1, arc, strand_b, [](int pos, int) { return pos == 1; });
    finish_crossings(w, ab);

    return TangleDiagram(std::move(ab.crossings), {strand_a, strand_b}, std::abs(twists), std::move(cab.letters));
}

// ---------------------------------------------------------------- knot table

namespace {

struct RawEntry {
    const char* name;
    const char* braid;
    std::vector<long> alexander;
    int arf;
};

const std::vector<RawEntry>& raw_table() {
    static const std::vector<RawEntry> table{
        {"unknot", "B1:", {1}, 0},
        {"3_1", "B2: 1 1 1", {1, -1, 1}, 1},
        {"4_1", "B3: 1 -2 1 -2", {1, -3, 1}, 1},
        {"5_1", "B2: 1 1 1 1 1", {1, -1, 1, -1, 1}, 1},
        {"5_2", "B3: 1 1 1 2 -1 2", {2, -3, 2}, 0},
    };
    return table;
}

}  // namespace

KnotTableEntry builtin_knot(const std::string& name) {
    for (const auto& e : raw_table())
        if (name == e.name) return {e.name, parse_braid(e.braid), e.alexander, e.arf};
    throw std::invalid_argument("unknown knot '" + name + "'");
}

std::vector<std::string> builtin_knot_names() {
    std::vector<std::string> out;
    for (const auto& e : raw_table()) out.emplace_back(e.name);
    return out;
}

BraidWord resolve_knot(const std::string& text) {
    if (!text.empty() && (text[0] == 'B' || text[0] == 'b') && text.find(':') != std::string::npos)
        return parse_braid(text);
    return builtin_knot(text).braid;
}

}  // namespace rimsurg
