#include "rimsurg/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rimsurg {

std::vector<std::string> default_generator_names(int count) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        if (count <= 26)
            names.emplace_back(1, static_cast<char>('a' + i));
        else
            names.push_back("x" + std::to_string(i + 1));
    }
    return names;
}

GroupPresentation::GroupPresentation(int generators, std::vector<Word> relators,
                                     std::vector<std::string> names)
    : ngens_(generators), names_(std::move(names)) {
    if (generators < 0) throw std::invalid_argument("negative generator count");
    if (names_.empty()) names_ = default_generator_names(generators);
    if (static_cast<int>(names_.size()) != generators)
        throw std::invalid_argument("generator name count mismatch");
    for (auto& r : relators) {
        check_word(r);
        Word c = r.cyclically_reduced();
        if (!c.empty()) rels_.push_back(std::move(c));
    }
}

void GroupPresentation::check_word(const Word& w) const {
    if (w.max_generator() >= ngens_)
        throw std::out_of_range("word uses generator " + std::to_string(w.max_generator()) +
                                " but presentation has " + std::to_string(ngens_));
}

void GroupPresentation::set_meridian(Word w) {
    check_word(w);
    meridian_ = std::move(w);
}

void GroupPresentation::set_longitude(Word w) {
    check_word(w);
    longitude_ = std::move(w);
}

void GroupPresentation::clear_peripheral() {
    meridian_.reset();
    longitude_.reset();
}

std::size_t GroupPresentation::total_length() const {
    std::size_t n = 0;
    for (const auto& r : rels_) n += r.length();
    return n;
}

std::size_t GroupPresentation::max_relator_length() const {
    std::size_t n = 0;
    for (const auto& r : rels_) n = std::max(n, r.length());
    return n;
}

std::vector<Word> GroupPresentation::normalized_relators() const {
    std::vector<Word> out = rels_;
    std::stable_sort(out.begin(), out.end());
    return out;
}

std::string GroupPresentation::format_word(const Word& w) const {
    check_word(w);
    std::string out;
    for (int l : w.letters()) {
        if (!out.empty()) out += ' ';
        std::string n = names_[static_cast<std::size_t>(std::abs(l) - 1)];
        if (l < 0 && !n.empty()) n[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(n[0])));
        out += n;
    }
    return out;
}

Word GroupPresentation::parse_word(const std::string& text) const {
    std::istringstream in(text);
    std::string tok;
    std::vector<int> letters;
    while (in >> tok) {
        bool inv = std::isupper(static_cast<unsigned char>(tok[0])) != 0;
        std::string key = tok;
        key[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(key[0])));
        auto it = std::find(names_.begin(), names_.end(), key);
        if (it == names_.end()) throw std::invalid_argument("unknown generator '" + tok + "'");
        int g = static_cast<int>(it - names_.begin()) + 1;
        letters.push_back(inv ? -g : g);
    }
    return free_reduce(letters);
}

nlohmann::json GroupPresentation::to_json() const {
    nlohmann::json j;
    j["generators"] = names_;
    auto rels = nlohmann::json::array();
    for (const auto& r : rels_) rels.push_back(format_word(r));
    j["relators"] = rels;
    if (meridian_) j["meridian"] = format_word(*meridian_);
    if (longitude_) j["longitude"] = format_word(*longitude_);
    return j;
}

GroupPresentation GroupPresentation::from_json(const nlohmann::json& j) {
    auto names = j.at("generators").get<std::vector<std::string>>();
    for (const auto& n : names)
        if (n.empty() || !std::islower(static_cast<unsigned char>(n[0])))
            throw std::invalid_argument("generator names must start with a lowercase letter");
    GroupPresentation shell(static_cast<int>(names.size()), {}, names);
    std::vector<Word> rels;
    for (const auto& r : j.at("relators")) rels.push_back(shell.parse_word(r.get<std::string>()));
    GroupPresentation p(static_cast<int>(names.size()), std::move(rels), names);
    if (j.contains("meridian")) p.set_meridian(shell.parse_word(j["meridian"].get<std::string>()));
    if (j.contains("longitude")) p.set_longitude(shell.parse_word(j["longitude"].get<std::string>()));
    return p;
}

GroupMap::GroupMap(std::vector<Word> images, int target_generators)
    : images_(std::move(images)), target_(target_generators) {
    for (const auto& w : images_)
        if (w.max_generator() >= target_) throw std::out_of_range("image uses invalid generator");
}

GroupMap GroupMap::identity(int generators) {
    std::vector<Word> im;
    for (int g = 0; g < generators; ++g) im.push_back(Word::generator(g));
    return GroupMap(std::move(im), generators);
}

GroupMap GroupMap::conjugation(int generators, const Word& c) {
    std::vector<Word> im;
    for (int g = 0; g < generators; ++g) im.push_back(Word::generator(g).conjugated_by(c));
    return GroupMap(std::move(im), generators);
}

Word GroupMap::apply(const Word& w) const {
    Word out;
    for (const auto& s : w.syllables()) {
        if (s.gen >= source_generators())
            throw std::out_of_range("generator " + std::to_string(s.gen) + " outside map source");
        out *= images_[static_cast<std::size_t>(s.gen)].pow(s.exp);
    }
    return out;
}

GroupPresentation quotient(const GroupPresentation& p, const std::vector<Word>& extra) {
    std::vector<Word> rels = p.relators();
    rels.insert(rels.end(), extra.begin(), extra.end());
    GroupPresentation q(p.generator_count(), std::move(rels), p.names());
    if (p.meridian()) q.set_meridian(*p.meridian());
    if (p.longitude()) q.set_longitude(*p.longitude());
    return q;
}

namespace {

// Working state for Tietze moves.
struct TietzeState {
    int ngens;
    std::vector<std::string> names;
    std::vector<Word> rels;
    std::optional<Word> meridian;
    std::optional<Word> longitude;
    std::vector<bool> protect;
    std::vector<Word> tracked;

    std::size_t total() const {
        std::size_t n = 0;
        for (const auto& r : rels) n += r.length();
        return n;
    }
};

void dedupe(TietzeState& st) {
    std::set<std::vector<int>> seen;
    std::vector<Word> kept;
    for (auto& r : st.rels) {
        Word c = r.cyclically_reduced();
        if (c.empty()) continue;
        if (seen.insert(canonical_relator(c)).second) kept.push_back(std::move(c));
    }
    st.rels = std::move(kept);
}

// Rewrites every word through g -> image, and renumbers generators above g.
Word substitute(const Word& w, int g, const Word& image) {
    Word out;
    for (const auto& s : w.syllables()) {
        if (s.gen == g)
            out *= image.pow(s.exp);
        else
            out *= Word::generator(s.gen > g ? s.gen - 1 : s.gen, s.exp);
    }
    return out;
}

Word shift_down(const Word& w, int g) {
    Word out;
    for (const auto& s : w.syllables()) out *= Word::generator(s.gen > g ? s.gen - 1 : s.gen, s.exp);
    return out;
}

// Solves relator r (containing g exactly once with exponent +-1) for g, with
// the result already expressed in the post-elimination numbering.
Word solve_for(const Word& r, int g) {
    const auto& syl = r.syllables();
    std::size_t at = 0;
    while (syl[at].gen != g) ++at;
    // r = u g^e v  =>  g^e = u^{-1} v^{-1}
    Word u(std::vector<Syllable>(syl.begin(), syl.begin() + static_cast<long>(at)));
    Word v(std::vector<Syllable>(syl.begin() + static_cast<long>(at) + 1, syl.end()));
    Word rhs = u.inverse() * v.inverse();
    if (syl[at].exp < 0) rhs = rhs.inverse();
    return shift_down(rhs, g);
}

bool try_eliminate(TietzeState& st, std::size_t max_len, std::size_t max_total) {
    const std::size_t old_total = st.total();

    struct Candidate {
        std::size_t estimate;
        int gen;
        std::size_t rel;
    };
    std::vector<Candidate> cands;
    for (int g = 0; g < st.ngens; ++g) {
        if (st.protect[static_cast<std::size_t>(g)]) continue;
        std::size_t occ = 0;
        for (const auto& r : st.rels)
            for (const auto& s : r.syllables())
                if (s.gen == g) occ += static_cast<std::size_t>(std::labs(s.exp));
        std::size_t best = std::numeric_limits<std::size_t>::max();
        std::size_t best_rel = 0;
        for (std::size_t i = 0; i < st.rels.size(); ++i) {
            const Word& r = st.rels[i];
            if (r.occurrences(g) != 1) continue;
            bool unit = false;
            for (const auto& s : r.syllables())
                if (s.gen == g) unit = std::labs(s.exp) == 1;
            if (!unit) continue;
            if (r.length() < best) {
                best = r.length();
                best_rel = i;
            }
        }
        if (best == std::numeric_limits<std::size_t>::max()) continue;
        std::size_t est = old_total - best + (occ - 1) * (best - 2);
        cands.push_back({est, g, best_rel});
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Candidate& a, const Candidate& b) {
                         return a.estimate != b.estimate ? a.estimate < b.estimate : a.gen > b.gen;
                     });

    for (const auto& c : cands) {
        const Word image = solve_for(st.rels[c.rel], c.gen);
        std::vector<Word> rels;
        std::size_t total = 0;
        bool ok = true;
        for (std::size_t i = 0; i < st.rels.size() && ok; ++i) {
            if (i == c.rel) continue;
            Word w = substitute(st.rels[i], c.gen, image).cyclically_reduced();
            if (w.length() > max_len) ok = false;
            total += w.length();
            if (!w.empty()) rels.push_back(std::move(w));
        }
        if (!ok || total > std::max(old_total, max_total)) continue;
        if (st.meridian) st.meridian = substitute(*st.meridian, c.gen, image);
        if (st.longitude) st.longitude = substitute(*st.longitude, c.gen, image);
        for (auto& w : st.tracked) w = substitute(w, c.gen, image);
        st.rels = std::move(rels);
        st.names.erase(st.names.begin() + c.gen);
        st.protect.erase(st.protect.begin() + c.gen);
        --st.ngens;
        return true;
    }
    return false;
}

// Finds u in the cyclic word s; returns the start offset or -1.
long find_cyclic(const std::vector<int>& s, const std::vector<int>& u) {
    const std::size_t n = s.size(), k = u.size();
    if (k == 0 || k > n) return -1;
    for (std::size_t p = 0; p < n; ++p) {
        std::size_t j = 0;
        while (j < k && s[(p + j) % n] == u[j]) ++j;
        if (j == k) return static_cast<long>(p);
    }
    return -1;
}

std::vector<int> invert_letters(const std::vector<int>& w) {
    std::vector<int> out(w.rbegin(), w.rend());
    for (int& l : out) l = -l;
    return out;
}

// Replaces a long piece of some relator occurring inside another relator by
// the inverse of the short complement.
bool try_substitute(TietzeState& st) {
    const std::size_t nrels = st.rels.size();
    for (std::size_t ri = 0; ri < nrels; ++ri) {
        const std::vector<int> r = st.rels[ri].letters();
        const std::size_t len = r.size();
        for (std::size_t si = 0; si < nrels; ++si) {
            if (si == ri) continue;
            std::vector<int> s = st.rels[si].letters();
            if (s.size() < len / 2 + 1) continue;
            for (std::size_t k = std::min(len, s.size()); k > len / 2; --k) {
                for (const auto& base : {r, invert_letters(r)}) {
                    for (std::size_t rot = 0; rot < len; ++rot) {
                        std::vector<int> u(k), v;
                        for (std::size_t j = 0; j < k; ++j) u[j] = base[(rot + j) % len];
                        for (std::size_t j = k; j < len; ++j) v.push_back(base[(rot + j) % len]);
                        long p = find_cyclic(s, u);
                        if (p < 0) continue;
                        std::vector<int> out = invert_letters(v);
                        for (std::size_t j = k; j < s.size(); ++j)
                            out.push_back(s[(static_cast<std::size_t>(p) + j) % s.size()]);
                        st.rels[si] = free_reduce(out).cyclically_reduced();
                        return true;
                    }
                }
            }
        }
    }
    return false;
}

}  // namespace

GroupPresentation tietze_simplify(const GroupPresentation& p, const TietzeOptions& opts) {
    std::vector<Word> none;
    return tietze_simplify(p, opts, none);
}

GroupPresentation tietze_simplify(const GroupPresentation& p, const TietzeOptions& opts, std::vector<Word>& tracked) {
    for (const auto& w : tracked) p.check_word(w);
    TietzeState st{p.generator_count(), p.names(), p.relators(), p.meridian(), p.longitude(),
                   std::vector<bool>(static_cast<std::size_t>(p.generator_count()), false), tracked};
    for (int g : opts.protect)
        if (g >= 0 && g < st.ngens) st.protect[static_cast<std::size_t>(g)] = true;
    if (st.meridian && st.meridian->syllables().size() == 1)
        st.protect[static_cast<std::size_t>(st.meridian->syllables()[0].gen)] = true;

    const std::size_t max_len =
        opts.max_relator_length ? opts.max_relator_length : 10 * std::max<std::size_t>(1, p.max_relator_length());
    // Pairwise substitution is quadratic in relator count and cubic in length.
    constexpr std::size_t kSubstitutionLimit = 2000;

    dedupe(st);
    const auto max_total = static_cast<std::size_t>(opts.growth * static_cast<double>(st.total()));
    for (int pass = 0; pass < opts.budget; ++pass) {
        if (try_eliminate(st, max_len, max_total)) {
            dedupe(st);
            continue;
        }
        if (st.total() <= kSubstitutionLimit && try_substitute(st)) {
            dedupe(st);
            continue;
        }
        break;
    }

    GroupPresentation out(st.ngens, std::move(st.rels), std::move(st.names));
    if (st.meridian) out.set_meridian(*st.meridian);
    if (st.longitude) out.set_longitude(*st.longitude);
    tracked = std::move(st.tracked);
    return out;
}

GroupPresentation tietze_simplify(const GroupPresentation& p, int budget) {
    TietzeOptions o;
    o.budget = budget;
    return tietze_simplify(p, o);
}

}  // namespace rimsurg
