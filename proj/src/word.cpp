#include "rimsurg/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace rimsurg {

namespace {

int letter_key(int letter) {
    int g = std::abs(letter) - 1;
    return 2 * g + (letter < 0 ? 1 : 0);
}

std::vector<int> keys_of(const std::vector<int>& letters) {
    std::vector<int> out(letters.size());
    std::transform(letters.begin(), letters.end(), out.begin(), letter_key);
    return out;
}

}  // namespace

Word::Word(std::vector<Syllable> syllables) {
    syl_.reserve(syllables.size());
    for (const auto& s : syllables) {
        if (s.gen < 0) throw std::invalid_argument("negative generator index");
        push(s);
    }
}

Word Word::generator(int gen, long exp) {
    if (gen < 0) throw std::invalid_argument("negative generator index");
    Word w;
    w.push({gen, exp});
    return w;
}

Word Word::from_letters(const std::vector<int>& letters) { return free_reduce(letters); }

Word Word::from_letters(std::initializer_list<int> letters) {
    return free_reduce(std::vector<int>(letters));
}

void Word::push(Syllable s) {
    if (s.exp == 0) return;
    if (!syl_.empty() && syl_.back().gen == s.gen) {
        syl_.back().exp += s.exp;
        if (syl_.back().exp == 0) syl_.pop_back();
        return;
    }
    syl_.push_back(s);
}

std::vector<int> Word::letters() const {
    std::vector<int> out;
    out.reserve(length());
    for (const auto& s : syl_) {
        int l = s.exp > 0 ? s.gen + 1 : -(s.gen + 1);
        for (long i = 0; i < std::labs(s.exp); ++i) out.push_back(l);
    }
    return out;
}

std::size_t Word::length() const {
    std::size_t n = 0;
    for (const auto& s : syl_) n += static_cast<std::size_t>(std::labs(s.exp));
    return n;
}

long Word::exponent_sum(int gen) const {
    long e = 0;
    for (const auto& s : syl_)
        if (s.gen == gen) e += s.exp;
    return e;
}

long Word::exponent_sum() const {
    long e = 0;
    for (const auto& s : syl_) e += s.exp;
    return e;
}

std::size_t Word::occurrences(int gen) const {
    std::size_t n = 0;
    for (const auto& s : syl_)
        if (s.gen == gen) ++n;
    return n;
}

int Word::max_generator() const {
    int m = -1;
    for (const auto& s : syl_) m = std::max(m, s.gen);
    return m;
}

Word Word::inverse() const {
    Word w;
    w.syl_.reserve(syl_.size());
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) w.syl_.push_back({it->gen, -it->exp});
    return w;
}

Word Word::pow(long k) const {
    if (k == 0 || empty()) return {};
    const Word base = k > 0 ? *this : inverse();
    const long times = std::labs(k);
    Word out;
    for (long i = 0; i < times; ++i) out *= base;
    return out;
}

Word Word::conjugated_by(const Word& w) const { return w.inverse() * *this * w; }

Word Word::cyclically_reduced() const {
    std::vector<Syllable> s = syl_;
    std::size_t lo = 0, hi = s.size();
    while (hi - lo >= 2 && s[lo].gen == s[hi - 1].gen) {
        long e = s[lo].exp + s[hi - 1].exp;
        if (e == 0) {
            ++lo;
            --hi;
            continue;
        }
        s[lo].exp = e;
        --hi;
        break;
    }
    Word w;
    for (std::size_t i = lo; i < hi; ++i) w.push(s[i]);
    return w;
}

Word Word::operator*(const Word& rhs) const {
    Word w = *this;
    w *= rhs;
    return w;
}

Word& Word::operator*=(const Word& rhs) {
    syl_.reserve(syl_.size() + rhs.syl_.size());
    for (const auto& s : rhs.syl_) push(s);
    return *this;
}

bool operator<(const Word& a, const Word& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return keys_of(a.letters()) < keys_of(b.letters());
}

Word commutator(const Word& a, const Word& b) { return a.inverse() * b.inverse() * a * b; }

Word free_reduce(const std::vector<int>& letters) {
    Word w;
    for (int l : letters) {
        if (l == 0) throw std::invalid_argument("letter 0 is not a generator");
        w *= Word::generator(std::abs(l) - 1, l > 0 ? 1 : -1);
    }
    return w;
}

std::vector<int> canonical_relator(const Word& r) {
    const Word c = r.cyclically_reduced();
    std::vector<int> best;
    for (const Word& v : {c, c.inverse()}) {
        const std::vector<int> ls = keys_of(v.letters());
        const std::size_t n = ls.size();
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<int> rot(n);
            for (std::size_t j = 0; j < n; ++j) rot[j] = ls[(i + j) % n];
            if (best.empty() || rot < best) best = std::move(rot);
        }
    }
    return best;
}

}  // namespace rimsurg
