#pragma once

// Reference computations that do not go through the library's algorithms.

#include <cstdlib>
#include <random>
#include <vector>

#include "rimsurg/knot.hpp"

namespace oracle {

using Poly = std::vector<long>;  // constant term first

inline Poly trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return trim(r);
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trim(r);
}

// Determinant by cofactor expansion along the first row.
inline Poly det(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return {1};
    if (n == 1) return m[0][0];
    Poly out;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Poly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        Poly term = mul(m[0][c], det(minor));
        if (c % 2) term = mul(term, {-1});
        out = add(out, term);
    }
    return out;
}

// Strips powers of t and fixes the sign so that the value at 1 is positive.
inline Poly normalize(Poly p) {
    p = trim(p);
    std::size_t lo = 0;
    while (lo < p.size() && p[lo] == 0) ++lo;
    p.erase(p.begin(), p.begin() + static_cast<long>(lo));
    long at1 = 0;
    for (long c : p) at1 += c;
    if (at1 < 0)
        for (long& c : p) c = -c;
    return p;
}

// det(V - t V^T)
inline Poly seifert_alexander(const std::vector<std::vector<long>>& v) {
    const std::size_t n = v.size();
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = trim({v[i][j], -v[j][i]});
    return normalize(det(m));
}

// Arf invariant of q(x) = x^T V x mod 2: the value taken by the majority.
inline int seifert_arf(const std::vector<std::vector<long>>& v) {
    const std::size_t n = v.size();
    long ones = 0;
    for (unsigned long x = 0; x < (1ul << n); ++x) {
        long q = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if ((x >> i & 1) && (x >> j & 1)) q += v[i][j];
        ones += std::labs(q) % 2;
    }
    return 2 * ones > (1l << n) ? 1 : 0;
}

struct SeifertFixture {
    const char* knot;
    std::vector<std::vector<long>> v;
};

inline std::vector<SeifertFixture> seifert_fixtures() {
    return {{"unknot", {}},
            {"3_1", {{-1, 1}, {0, -1}}},
            {"4_1", {{-1, 1}, {0, 1}}},
            {"5_1", {{-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}}},
            {"5_2", {{-1, 1}, {0, -2}}}};
}

// Random braid with at most max_letters letters whose closure is a knot.
inline rimsurg::BraidWord random_knot_braid(std::mt19937& rng, int max_letters) {
    for (;;) {
        const int strands = std::uniform_int_distribution<int>(1, 4)(rng);
        const int len = std::uniform_int_distribution<int>(0, max_letters)(rng);
        std::vector<int> letters;
        if (strands > 1)
            for (int i = 0; i < len; ++i) {
                int g = std::uniform_int_distribution<int>(1, strands - 1)(rng);
                letters.push_back(rng() % 2 ? g : -g);
            }
        if (rimsurg::BraidWord::closure_components(strands, letters) == 1) return {strands, letters};
    }
}

}  // namespace oracle
