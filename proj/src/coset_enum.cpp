#include "rimsurg/coset_enum.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rimsurg {

CosetTable::CosetTable(int generators, std::size_t rows, std::vector<std::int32_t> entries)
    : ngens_(generators), rows_(rows), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * static_cast<std::size_t>(2 * ngens_))
        throw std::invalid_argument("coset table shape mismatch");
}

std::size_t CosetTable::trace(std::size_t coset, const Word& w) const {
    if (w.max_generator() >= ngens_) throw std::out_of_range("word outside coset table generators");
    for (const auto& s : w.syllables()) {
        const int col = s.exp > 0 ? 2 * s.gen : 2 * s.gen + 1;
        for (long i = 0; i < std::labs(s.exp); ++i) coset = static_cast<std::size_t>(act(coset, col));
    }
    return coset;
}

bool CosetTable::is_consistent() const {
    const int ncols = 2 * ngens_;
    for (std::size_t c = 0; c < rows_; ++c)
        for (int x = 0; x < ncols; ++x) {
            const auto d = act(c, x);
            if (d < 0 || static_cast<std::size_t>(d) >= rows_) return false;
            if (act(static_cast<std::size_t>(d), inverse_column(x)) != static_cast<std::int32_t>(c)) return false;
        }
    return true;
}

nlohmann::json CosetTable::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    const int ncols = 2 * ngens_;
    for (std::size_t c = 0; c < rows_; ++c) {
        std::vector<std::int32_t> row;
        for (int x = 0; x < ncols; ++x) row.push_back(act(c, x));
        rows.push_back(row);
    }
    return {{"generators", ngens_}, {"columns", "g0, g0^-1, g1, g1^-1, ..."}, {"rows", rows}};
}

const EnumerationStats& EnumerationResult::stats() const {
    if (complete()) return std::get<Complete>(outcome_).stats;
    return std::get<Overflow>(outcome_).stats;
}

namespace {

constexpr std::int32_t kUndefined = -1;

class Enumerator {
public:
    Enumerator(const GroupPresentation& p, const std::vector<Word>& subgroup, const EnumerationLimits& limits)
        : ncols_(2 * p.generator_count()), limits_(limits) {
        if (limits.max_cosets < 1) throw std::invalid_argument("max_cosets must be at least 1");
        for (const auto& r : p.normalized_relators()) rels_.push_back(columns(r));
        for (const auto& w : subgroup) {
            p.check_word(w);
            auto cols = columns(w);
            if (!cols.empty()) subgroup_.push_back(std::move(cols));
        }
        if (limits.strategy == Strategy::Felsch) {
            felsch_ = true;
            conjugates_.resize(static_cast<std::size_t>(ncols_));
            std::set<std::vector<int>> seen;
            for (const auto& r : rels_)
                for (const auto& base : {r, inverse_columns(r)})
                    for (std::size_t k = 0; k < base.size(); ++k) {
                        std::vector<int> c(base.begin() + static_cast<long>(k), base.end());
                        c.insert(c.end(), base.begin(), base.begin() + static_cast<long>(k));
                        if (seen.insert(c).second) conjugates_[static_cast<std::size_t>(c[0])].push_back(c);
                    }
        }
        capacity_ = limits.max_cosets;
        const std::size_t initial = std::min<std::size_t>(capacity_, 1024);
        table_.assign(initial * static_cast<std::size_t>(ncols_), kUndefined);
        parent_.reserve(initial);
        new_coset();
    }

    EnumerationResult run() { return felsch_ ? run_felsch() : run_hlt(); }

private:
    enum class Status { Ok, Full, TimedOut };

    static std::vector<int> inverse_columns(const std::vector<int>& w) {
        std::vector<int> out(w.rbegin(), w.rend());
        for (int& x : out) x = inverse_column(x);
        return out;
    }

    EnumerationResult run_hlt() {
        std::size_t cur = 0;
        bool subgroup_done = false;
        while (true) {
            Status st = Status::Ok;
            if (!subgroup_done) {
                for (const auto& w : subgroup_) {
                    st = scan_and_fill(0, w);
                    if (st != Status::Ok) break;
                }
                if (st == Status::Ok) subgroup_done = true;
            } else if (cur >= top_) {
                return finish();
            } else if (alive(cur)) {
                for (const auto& r : rels_) {
                    st = scan_and_fill(static_cast<std::int32_t>(cur), r);
                    if (st != Status::Ok || !alive(cur)) break;
                }
                if (st == Status::Ok && alive(cur)) st = fill_row(static_cast<std::int32_t>(cur));
                if (st == Status::Ok) ++cur;
            } else {
                ++cur;
            }

            if (st == Status::TimedOut) return overflow(true);
            if (st == Status::Full) {
                ++stats_.lookaheads;
                lookahead();
                cur = compact(cur);
                if (top_ >= capacity_) return overflow(false);
            }
        }
    }

    EnumerationResult run_felsch() {
        for (const auto& w : subgroup_) {
            Status st = scan_and_fill(0, w);
            if (st == Status::TimedOut) return overflow(true);
            if (st == Status::Full) return overflow(false);
        }
        process_deductions();
        std::size_t cur = 0;
        while (true) {
            while (cur < top_ && (!alive(cur) || row_full(static_cast<std::int32_t>(cur)))) ++cur;
            if (cur >= top_) {
                if (verify()) return finish();
                // A dropped deduction left a relator unchecked somewhere.
                lookahead();
                process_deductions();
                cur = 0;
                continue;
            }
            const auto c = static_cast<std::int32_t>(cur);
            int x = 0;
            while (entry(c, x) != kUndefined) ++x;
            std::int32_t d;
            Status st = define(c, x, d);
            if (st == Status::Full) {
                ++stats_.lookaheads;
                cur = compact(cur);
                if (top_ >= capacity_) return overflow(false);
                continue;
            }
            if (st == Status::TimedOut) return overflow(true);
            push_deduction(c, x);
            process_deductions();
        }
    }

    bool row_full(std::int32_t c) {
        for (int x = 0; x < ncols_; ++x)
            if (entry(c, x) == kUndefined) return false;
        return true;
    }

    void push_deduction(std::int32_t c, int x) {
        if (!felsch_) return;
        if (deductions_.size() >= kMaxDeductions) {
            deductions_overflowed_ = true;
            return;
        }
        deductions_.emplace_back(c, x);
    }

    void process_deductions() {
        while (!deductions_.empty()) {
            auto [c, x] = deductions_.back();
            deductions_.pop_back();
            if (!alive(static_cast<std::size_t>(c))) continue;
            for (const auto& w : conjugates_[static_cast<std::size_t>(x)]) {
                if (!alive(static_cast<std::size_t>(c))) break;
                scan_only(c, w);
            }
            if (!alive(static_cast<std::size_t>(c))) continue;
            const std::int32_t d = entry(c, x);
            if (d == kUndefined || !alive(static_cast<std::size_t>(d))) continue;
            for (const auto& w : conjugates_[static_cast<std::size_t>(inverse_column(x))]) {
                if (!alive(static_cast<std::size_t>(d))) break;
                scan_only(d, w);
            }
        }
        if (deductions_overflowed_) {
            deductions_overflowed_ = false;
            lookahead();
            if (!deductions_.empty()) process_deductions();
        }
    }

    // Every subgroup generator closes at coset 0 and every relator at every coset.
    bool verify() {
        for (const auto& w : subgroup_)
            if (trace(0, w) != 0) return false;
        for (std::size_t c = 0; c < top_; ++c) {
            if (!alive(c)) continue;
            for (const auto& r : rels_)
                if (trace(static_cast<std::int32_t>(c), r) != static_cast<std::int32_t>(c)) return false;
        }
        return true;
    }

    std::int32_t trace(std::int32_t c, const std::vector<int>& w) {
        for (int x : w) {
            c = entry(c, x);
            if (c == kUndefined) return kUndefined;
        }
        return c;
    }

    std::vector<int> columns(const Word& w) const {
        std::vector<int> out;
        for (int l : w.letters()) out.push_back(column_of(l));
        return out;
    }

    std::int32_t& entry(std::int32_t c, int x) {
        return table_[static_cast<std::size_t>(c) * static_cast<std::size_t>(ncols_) + static_cast<std::size_t>(x)];
    }

    bool alive(std::size_t c) const { return parent_[c] == static_cast<std::int32_t>(c); }

    std::int32_t new_coset() {
        const auto c = static_cast<std::int32_t>(top_);
        if ((top_ + 1) * static_cast<std::size_t>(ncols_) > table_.size()) {
            const std::size_t rows = std::min(capacity_, std::max<std::size_t>(2 * top_, top_ + 1));
            table_.resize(rows * static_cast<std::size_t>(ncols_), kUndefined);
        }
        parent_.push_back(c);
        ++top_;
        ++live_;
        ++stats_.cosets_defined;
        stats_.max_live = std::max(stats_.max_live, live_);
        return c;
    }

    // Defines c^x as a fresh coset.
    Status define(std::int32_t c, int x, std::int32_t& out) {
        if (top_ >= capacity_) return Status::Full;
        if (limits_.deadline && (stats_.cosets_defined & 0xfff) == 0 &&
            std::chrono::steady_clock::now() > *limits_.deadline)
            return Status::TimedOut;
        out = new_coset();
        entry(c, x) = out;
        entry(out, inverse_column(x)) = c;
        return Status::Ok;
    }

    Status fill_row(std::int32_t c) {
        for (int x = 0; x < ncols_; ++x) {
            if (entry(c, x) != kUndefined) continue;
            std::int32_t d;
            Status st = define(c, x, d);
            if (st != Status::Ok) return st;
        }
        return Status::Ok;
    }

    // Scans word w from coset c, defining cosets to close every gap.
    Status scan_and_fill(std::int32_t c, const std::vector<int>& w) {
        if (w.empty()) return Status::Ok;
        std::int32_t f = c, b = c;
        long i = 0, j = static_cast<long>(w.size()) - 1;
        while (true) {
            while (i <= j && entry(f, w[static_cast<std::size_t>(i)]) != kUndefined) {
                f = entry(f, w[static_cast<std::size_t>(i)]);
                ++i;
            }
            if (i > j) {
                if (f != b) coincidence(f, b);
                return Status::Ok;
            }
            while (j >= i && entry(b, inverse_column(w[static_cast<std::size_t>(j)])) != kUndefined) {
                b = entry(b, inverse_column(w[static_cast<std::size_t>(j)]));
                --j;
            }
            if (j < i) {
                coincidence(f, b);
                return Status::Ok;
            }
            if (i == j) {
                deduce(f, w[static_cast<std::size_t>(i)], b);
                return Status::Ok;
            }
            std::int32_t d;
            Status st = define(f, w[static_cast<std::size_t>(i)], d);
            if (st != Status::Ok) return st;
        }
    }

    void deduce(std::int32_t f, int x, std::int32_t b) {
        const std::int32_t existing = entry(b, inverse_column(x));
        if (entry(f, x) == kUndefined && existing == kUndefined) {
            entry(f, x) = b;
            entry(b, inverse_column(x)) = f;
            push_deduction(f, x);
        } else {
            // One side already set elsewhere: the scan closes through a coincidence.
            if (entry(f, x) != kUndefined) coincidence(entry(f, x), b);
            else coincidence(existing, f);
        }
    }

    // Scan without defining; records deductions and coincidences only.
    void scan_only(std::int32_t c, const std::vector<int>& w) {
        if (w.empty()) return;
        std::int32_t f = c, b = c;
        long i = 0, j = static_cast<long>(w.size()) - 1;
        while (i <= j && entry(f, w[static_cast<std::size_t>(i)]) != kUndefined) {
            f = entry(f, w[static_cast<std::size_t>(i)]);
            ++i;
        }
        if (i > j) {
            if (f != b) coincidence(f, b);
            return;
        }
        while (j >= i && entry(b, inverse_column(w[static_cast<std::size_t>(j)])) != kUndefined) {
            b = entry(b, inverse_column(w[static_cast<std::size_t>(j)]));
            --j;
        }
        if (j < i)
            coincidence(f, b);
        else if (i == j)
            deduce(f, w[static_cast<std::size_t>(i)], b);
    }

    void lookahead() {
        for (const auto& w : subgroup_) scan_only(0, w);
        for (std::size_t c = 0; c < top_; ++c) {
            for (const auto& r : rels_) {
                if (!alive(c)) break;
                scan_only(static_cast<std::int32_t>(c), r);
            }
        }
    }

    std::int32_t rep(std::int32_t c) {
        std::int32_t r = c;
        while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
        while (parent_[static_cast<std::size_t>(c)] != r) {
            std::int32_t next = parent_[static_cast<std::size_t>(c)];
            parent_[static_cast<std::size_t>(c)] = r;
            c = next;
        }
        return r;
    }

    void merge(std::int32_t a, std::int32_t b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        queue_.push_back(b);
        --live_;
        ++stats_.coincidences;
    }

    void coincidence(std::int32_t a, std::int32_t b) {
        queue_.clear();
        merge(a, b);
        for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
            const std::int32_t e = queue_[qi];
            for (int x = 0; x < ncols_; ++x) {
                const std::int32_t f = entry(e, x);
                if (f == kUndefined) continue;
                entry(f, inverse_column(x)) = kUndefined;
                const std::int32_t e1 = rep(e), f1 = rep(f);
                if (entry(e1, x) != kUndefined)
                    merge(f1, entry(e1, x));
                else if (entry(f1, inverse_column(x)) != kUndefined)
                    merge(e1, entry(f1, inverse_column(x)));
                else {
                    entry(e1, x) = f1;
                    entry(f1, inverse_column(x)) = e1;
                    push_deduction(e1, x);
                }
            }
        }
    }

    // Renumbers live cosets consecutively, keeping their order. Returns the
    // new position of the first live coset at or after cur.
    std::size_t compact(std::size_t cur) {
        std::vector<std::int32_t> remap(top_, kUndefined);
        std::int32_t n = 0;
        std::size_t new_cur = static_cast<std::size_t>(-1);
        for (std::size_t c = 0; c < top_; ++c) {
            if (c >= cur && new_cur == static_cast<std::size_t>(-1) && alive(c)) new_cur = static_cast<std::size_t>(n);
            if (alive(c)) remap[c] = n++;
        }
        if (new_cur == static_cast<std::size_t>(-1)) new_cur = static_cast<std::size_t>(n);
        const auto cols = static_cast<std::size_t>(ncols_);
        for (std::size_t c = 0; c < top_; ++c) {
            if (remap[c] == kUndefined) continue;
            const auto dst = static_cast<std::size_t>(remap[c]);
            for (std::size_t x = 0; x < cols; ++x) {
                const std::int32_t v = table_[c * cols + x];
                table_[dst * cols + x] = v == kUndefined ? kUndefined : remap[static_cast<std::size_t>(v)];
            }
        }
        top_ = static_cast<std::size_t>(n);
        std::fill(table_.begin() + static_cast<long>(top_ * cols), table_.end(), kUndefined);
        parent_.resize(top_);
        for (std::size_t c = 0; c < top_; ++c) parent_[c] = static_cast<std::int32_t>(c);
        return new_cur;
    }

    EnumerationResult finish() {
        compact(0);
        std::vector<std::int32_t> entries(table_.begin(), table_.begin() + static_cast<long>(top_ * static_cast<std::size_t>(ncols_)));
        CosetTable t(ncols_ / 2, top_, std::move(entries));
        return EnumerationResult(Complete{top_, stats_}, std::move(t));
    }

    EnumerationResult overflow(bool timed_out) {
        return EnumerationResult(Overflow{top_, capacity_, timed_out, stats_});
    }

    static constexpr std::size_t kMaxDeductions = 1 << 20;

    int ncols_;
    EnumerationLimits limits_;
    bool felsch_ = false;
    std::vector<std::vector<std::vector<int>>> conjugates_;
    std::vector<std::pair<std::int32_t, int>> deductions_;
    bool deductions_overflowed_ = false;
    std::vector<std::vector<int>> rels_;
    std::vector<std::vector<int>> subgroup_;
    std::size_t capacity_ = 0;
    std::vector<std::int32_t> table_;
    std::vector<std::int32_t> parent_;
    std::vector<std::int32_t> queue_;
    std::size_t top_ = 0;
    std::size_t live_ = 0;
    EnumerationStats stats_;
};

}  // namespace

EnumerationResult todd_coxeter(const GroupPresentation& p, const std::vector<Word>& subgroup,
                               const EnumerationLimits& limits) {
    return Enumerator(p, subgroup, limits).run();
}

EnumerationResult todd_coxeter(const GroupPresentation& p, const std::vector<Word>& subgroup,
                               std::size_t max_cosets) {
    EnumerationLimits l;
    l.max_cosets = max_cosets;
    return todd_coxeter(p, subgroup, l);
}

}  // namespace rimsurg
