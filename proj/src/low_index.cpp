#include "rimsurg/low_index.hpp"

#include <stdexcept>

#include "rimsurg/coset_enum.hpp"

namespace rimsurg {

int PermutationAction::apply(int point, const Word& w) const {
    for (const auto& s : w.syllables()) {
        const auto& img = images.at(static_cast<std::size_t>(s.gen));
        if (s.exp > 0) {
            for (long i = 0; i < s.exp; ++i) point = img[static_cast<std::size_t>(point)];
        } else {
            std::vector<int> inv(img.size());
            for (std::size_t i = 0; i < img.size(); ++i) inv[static_cast<std::size_t>(img[i])] = static_cast<int>(i);
            for (long i = 0; i < -s.exp; ++i) point = inv[static_cast<std::size_t>(point)];
        }
    }
    return point;
}

bool PermutationAction::satisfies(const GroupPresentation& p) const {
    if (static_cast<int>(images.size()) != p.generator_count()) return false;
    for (const auto& img : images) {
        if (static_cast<int>(img.size()) != degree) return false;
        std::vector<bool> hit(static_cast<std::size_t>(degree), false);
        for (int v : img) {
            if (v < 0 || v >= degree || hit[static_cast<std::size_t>(v)]) return false;
            hit[static_cast<std::size_t>(v)] = true;
        }
    }
    for (const auto& r : p.relators())
        for (int i = 0; i < degree; ++i)
            if (apply(i, r) != i) return false;
    return true;
}

bool PermutationAction::is_transitive() const {
    if (degree == 0) return false;
    std::vector<bool> seen(static_cast<std::size_t>(degree), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        const int c = stack.back();
        stack.pop_back();
        for (const auto& img : images) {
            const int d = img[static_cast<std::size_t>(c)];
            if (seen[static_cast<std::size_t>(d)]) continue;
            seen[static_cast<std::size_t>(d)] = true;
            ++count;
            stack.push_back(d);
        }
    }
    return count == degree;
}

nlohmann::json PermutationAction::to_json() const { return {{"degree", degree}, {"images", images}}; }

namespace {

class LowIndexSearch {
public:
    LowIndexSearch(const GroupPresentation& p, const std::vector<Word>& fixed, const LowIndexLimits& limits)
        : ncols_(2 * p.generator_count()), limits_(limits) {
        if (limits.max_index < 2) throw std::invalid_argument("max_index must be at least 2");
        for (const auto& r : p.normalized_relators()) rels_.push_back(columns(r));
        for (const auto& w : fixed) {
            p.check_word(w);
            auto c = columns(w);
            if (!c.empty()) fixed_.push_back(std::move(c));
        }
    }

    std::optional<PermutationAction> run() {
        if (ncols_ == 0) return std::nullopt;
        std::vector<int> table(static_cast<std::size_t>(limits_.max_index * ncols_), -1);
        if (dfs(table, 1)) return found_;
        return std::nullopt;
    }

private:
    static std::vector<int> columns(const Word& w) {
        std::vector<int> out;
        for (int l : w.letters()) out.push_back(column_of(l));
        return out;
    }

    int& at(std::vector<int>& t, int c, int x) const { return t[static_cast<std::size_t>(c * ncols_ + x)]; }

    // Scans w from c; deduces a single missing entry. False on a contradiction.
    bool scan(std::vector<int>& t, int c, const std::vector<int>& w, bool& changed) const {
        int f = c, b = c;
        long i = 0, j = static_cast<long>(w.size()) - 1;
        while (i <= j && at(t, f, w[static_cast<std::size_t>(i)]) >= 0) f = at(t, f, w[static_cast<std::size_t>(i++)]);
        if (i > j) return f == b;
        while (j >= i && at(t, b, inverse_column(w[static_cast<std::size_t>(j)])) >= 0)
            b = at(t, b, inverse_column(w[static_cast<std::size_t>(j--)]));
        if (j < i) return f == b;
        if (i == j) {
            const int x = w[static_cast<std::size_t>(i)];
            at(t, f, x) = b;
            at(t, b, inverse_column(x)) = f;
            changed = true;
        }
        return true;
    }

    bool propagate(std::vector<int>& t, int n) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& w : fixed_)
                if (!scan(t, 0, w, changed)) return false;
            for (int c = 0; c < n; ++c)
                for (const auto& r : rels_)
                    if (!scan(t, c, r, changed)) return false;
        }
        return true;
    }

    bool dfs(std::vector<int>& t, int n) {
        if (++nodes_ > limits_.max_nodes) return false;
        if (!propagate(t, n)) return false;
        int c = 0, x = 0;
        bool open = false;
        for (c = 0; c < n && !open; ++c)
            for (x = 0; x < ncols_; ++x)
                if (at(t, c, x) < 0) {
                    open = true;
                    break;
                }
        if (!open) {
            if (n < 2) return false;
            found_.degree = n;
            found_.images.assign(static_cast<std::size_t>(ncols_ / 2), std::vector<int>(static_cast<std::size_t>(n)));
            for (int g = 0; g < ncols_ / 2; ++g)
                for (int i = 0; i < n; ++i) found_.images[static_cast<std::size_t>(g)][static_cast<std::size_t>(i)] = at(t, i, 2 * g);
            return true;
        }
        --c;
        const int xi = inverse_column(x);
        for (int d = 0; d < n; ++d) {
            if (at(t, d, xi) >= 0) continue;
            std::vector<int> next = t;
            at(next, c, x) = d;
            at(next, d, xi) = c;
            if (dfs(next, n)) return true;
            if (nodes_ > limits_.max_nodes) return false;
        }
        if (n < limits_.max_index) {
            std::vector<int> next = t;
            at(next, c, x) = n;
            at(next, n, xi) = c;
            if (dfs(next, n + 1)) return true;
        }
        return false;
    }

    int ncols_;
    LowIndexLimits limits_;
    std::vector<std::vector<int>> rels_;
    std::vector<std::vector<int>> fixed_;
    std::size_t nodes_ = 0;
    PermutationAction found_;
};

}  // namespace

std::optional<PermutationAction> find_proper_subgroup_action(const GroupPresentation& p,
                                                            const std::vector<Word>& fixed,
                                                            const LowIndexLimits& limits) {
    if (limits.max_index < 2) throw std::invalid_argument("max_index must be at least 2");
    for (int k = 2; k <= limits.max_index; ++k) {
        LowIndexLimits step = limits;
        step.max_index = k;
        if (auto a = LowIndexSearch(p, fixed, step).run()) return a;
    }
    return std::nullopt;
}

}  // namespace rimsurg
