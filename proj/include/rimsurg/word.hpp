#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace rimsurg {

/// A power g^exp of a single generator; exp is never zero inside a Word.
struct Syllable {
    int gen = 0;
    long exp = 0;

    friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Freely reduced word over generators 0..n-1, stored run-length encoded.
///
/// Letters are exposed as signed integers: generator g is +(g+1), its inverse
/// -(g+1). The empty word is the identity.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Syllable> syllables);

    static Word generator(int gen, long exp = 1);
    static Word from_letters(const std::vector<int>& letters);
    static Word from_letters(std::initializer_list<int> letters);

    const std::vector<Syllable>& syllables() const { return syl_; }
    std::vector<int> letters() const;

    bool empty() const { return syl_.empty(); }
    std::size_t length() const;
    long exponent_sum(int gen) const;
    long exponent_sum() const;
    /// Number of syllables of generator gen (occurrences up to run-length).
    std::size_t occurrences(int gen) const;
    /// Largest generator index used, or -1 for the identity.
    int max_generator() const;

    Word inverse() const;
    Word pow(long k) const;
    /// Conjugate w^{-1} * this * w.
    Word conjugated_by(const Word& w) const;
    Word cyclically_reduced() const;

    Word operator*(const Word& rhs) const;
    Word& operator*=(const Word& rhs);

    friend bool operator==(const Word&, const Word&) = default;
    friend bool operator<(const Word& a, const Word& b);

private:
    void push(Syllable s);

    std::vector<Syllable> syl_;
};

/// Commutator [a, b] = a^{-1} b^{-1} a b.
Word commutator(const Word& a, const Word& b);

/// Free reduction of an arbitrary letter sequence.
Word free_reduce(const std::vector<int>& letters);

/// Canonical representative of the relator r up to cyclic permutation and
/// inversion. Used to detect duplicate relators.
std::vector<int> canonical_relator(const Word& r);

}  // namespace rimsurg
