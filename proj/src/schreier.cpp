#include "rimsurg/schreier.hpp"

#include <deque>
#include <stdexcept>

namespace rimsurg {

SchreierPresentation::SchreierPresentation(GroupPresentation parent, CosetTable table)
    : parent_(std::move(parent)), table_(std::move(table)) {
    const std::size_t n = table_.size();
    const int g = parent_.generator_count();
    if (table_.generator_count() != g) throw std::invalid_argument("coset table does not match presentation");

    // BFS spanning tree; tree edges are recorded in the forward direction.
    reps_.assign(n, Word{});
    std::vector<bool> seen(n, false);
    std::vector<char> tree(n * static_cast<std::size_t>(g), 0);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        const std::size_t c = queue.front();
        queue.pop_front();
        for (int col = 0; col < 2 * g; ++col) {
            const auto d = static_cast<std::size_t>(table_.act(c, col));
            if (seen[d]) continue;
            seen[d] = true;
            const int gen = col / 2;
            if (col % 2 == 0) {
                reps_[d] = reps_[c] * Word::generator(gen);
                tree[c * static_cast<std::size_t>(g) + static_cast<std::size_t>(gen)] = 1;
            } else {
                reps_[d] = reps_[c] * Word::generator(gen, -1);
                tree[d * static_cast<std::size_t>(g) + static_cast<std::size_t>(gen)] = 1;
            }
            queue.push_back(d);
        }
    }

    schreier_.assign(n * static_cast<std::size_t>(g), -1);
    for (std::size_t c = 0; c < n; ++c)
        for (int gen = 0; gen < g; ++gen) {
            const std::size_t k = c * static_cast<std::size_t>(g) + static_cast<std::size_t>(gen);
            if (tree[k]) continue;
            const auto d = static_cast<std::size_t>(table_.act(c, 2 * gen));
            schreier_[k] = static_cast<int>(gen_words_.size());
            gen_words_.push_back(reps_[c] * Word::generator(gen) * reps_[d].inverse());
        }

    std::vector<Word> rels;
    for (std::size_t c = 0; c < n; ++c)
        for (const auto& r : parent_.relators()) {
            std::size_t end = 0;
            Word w = rewrite_from(c, r, end);
            if (end != c) throw std::logic_error("relator does not close in the coset table");
            rels.push_back(std::move(w));
        }
    subgroup_ = GroupPresentation(static_cast<int>(gen_words_.size()), std::move(rels));
}

Word SchreierPresentation::rewrite_from(std::size_t coset, const Word& w, std::size_t& end) const {
    const auto g = static_cast<std::size_t>(parent_.generator_count());
    Word out;
    std::size_t c = coset;
    for (int l : w.letters()) {
        const int gen = std::abs(l) - 1;
        if (l > 0) {
            const int s = schreier_[c * g + static_cast<std::size_t>(gen)];
            if (s >= 0) out *= Word::generator(s);
            c = static_cast<std::size_t>(table_.act(c, 2 * gen));
        } else {
            const auto d = static_cast<std::size_t>(table_.act(c, 2 * gen + 1));
            const int s = schreier_[d * g + static_cast<std::size_t>(gen)];
            if (s >= 0) out *= Word::generator(s, -1);
            c = d;
        }
    }
    end = c;
    return out;
}

Word SchreierPresentation::rewrite(const Word& w) const {
    parent_.check_word(w);
    std::size_t end = 0;
    Word out = rewrite_from(0, w, end);
    if (end != 0) throw std::invalid_argument("word does not lie in the subgroup");
    return out;
}

std::optional<SchreierPresentation> reidemeister_schreier(const GroupPresentation& p,
                                                          const std::vector<Word>& subgroup,
                                                          const EnumerationLimits& limits) {
    auto res = todd_coxeter(p, subgroup, limits);
    if (!res.complete()) return std::nullopt;
    return SchreierPresentation(p, res.table());
}

}  // namespace rimsurg
