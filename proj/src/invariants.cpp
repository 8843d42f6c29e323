#include "rimsurg/invariants.hpp"

#include <stdexcept>

namespace rimsurg {

Word wirtinger_relator(const Crossing& c) {
    const Word over = Word::generator(c.over, c.sign);
    return Word::generator(c.under_out, -1) * over * Word::generator(c.under_in) * over.inverse();
}

WirtingerPresentation wirtinger(const KnotDiagram& d) {
    const int n = d.arc_count();
    std::vector<Word> rels;
    for (const auto& c : d.crossings()) rels.push_back(wirtinger_relator(c));
    GroupPresentation g(n, std::move(rels));
    const Word mu = Word::generator(0);
    Word lambda;
    if (d.crossing_count() > 0) {
        for (int arc = 0; arc < n; ++arc) {
            const Crossing& c = d.crossing_ending(arc);
            lambda *= Word::generator(c.over, -c.sign);
        }
        lambda *= mu.pow(d.writhe());
    }
    g.set_meridian(mu);
    g.set_longitude(lambda.inverse());
    return {std::move(g)};
}

TangleGroup tangle_wirtinger(const TangleDiagram& t) {
    std::vector<Word> rels;
    for (const auto& c : t.crossings()) rels.push_back(wirtinger_relator(c));
    GroupPresentation g(t.arc_count(), std::move(rels));
    Word core;
    for (int arc : t.strands()[0])
        if (auto c = t.crossing_ending(arc)) core *= Word::generator(c->over, -c->sign);
    g.set_meridian(t.a3());
    g.set_longitude(core.inverse());
    return {std::move(g), t.a1(), t.a2(), t.a3()};
}

std::vector<std::vector<LaurentPolynomial>> alexander_matrix(const GroupPresentation& p) {
    const auto& rels = p.relators();
    std::vector<std::vector<LaurentPolynomial>> m(rels.size(),
                                                  std::vector<LaurentPolynomial>(static_cast<std::size_t>(p.generator_count())));
    for (std::size_t r = 0; r < rels.size(); ++r) {
        long prefix = 0;
        for (int l : rels[r].letters()) {
            const auto g = static_cast<std::size_t>(std::abs(l) - 1);
            if (l > 0) {
                m[r][g] += LaurentPolynomial::monomial(1, prefix);
                ++prefix;
            } else {
                --prefix;
                m[r][g] += LaurentPolynomial::monomial(-1, prefix);
            }
        }
    }
    return m;
}

namespace {

std::vector<std::vector<LaurentPolynomial>> minor(const std::vector<std::vector<LaurentPolynomial>>& m,
                                                  std::size_t skip_row, std::size_t skip_col) {
    std::vector<std::vector<LaurentPolynomial>> out;
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (r == skip_row) continue;
        std::vector<LaurentPolynomial> row;
        for (std::size_t c = 0; c < m[r].size(); ++c)
            if (c != skip_col) row.push_back(m[r][c]);
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace

LaurentPolynomial alexander_polynomial(const KnotDiagram& d) {
    const std::size_t c = static_cast<std::size_t>(d.crossing_count());
    if (c <= 1) return LaurentPolynomial::constant(1);
    const auto m = alexander_matrix(wirtinger(d).group);
    const LaurentPolynomial first = laurent_determinant(minor(m, c - 1, c - 1)).normalized();
    const LaurentPolynomial second = laurent_determinant(minor(m, 0, c - 1)).normalized();
    if (first != second)
        throw std::logic_error("Alexander minors disagree: " + first.to_string() + " vs " + second.to_string());
    return first;
}

mpz_class knot_determinant(const KnotDiagram& d) { return abs(alexander_polynomial(d).evaluate(-1)); }

int arf_from_alexander(const LaurentPolynomial& delta) {
    mpz_class v = abs(delta.evaluate(-1));
    const unsigned long r = mpz_fdiv_ui(v.get_mpz_t(), 8);
    if (r % 2 == 0) throw std::domain_error("even determinant: not a knot polynomial");
    return (r == 1 || r == 7) ? 0 : 1;
}

int arf_invariant(const KnotDiagram& d) { return arf_from_alexander(alexander_polynomial(d)); }

NormalInvariantReport normal_invariant_from_arf(int arf) {
    return {arf, arf == 0, std::to_string(arf) + "·PD(T')"};
}

NormalInvariantReport normal_invariant_report(const KnotDiagram& d) {
    return normal_invariant_from_arf(arf_invariant(d));
}

}  // namespace rimsurg
