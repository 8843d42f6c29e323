#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rimsurg/coset_enum.hpp"
#include "rimsurg/invariants.hpp"
#include "rimsurg/smith.hpp"
#include "rimsurg/surgery.hpp"

using namespace rimsurg;

namespace {

std::vector<long> coeffs(const LaurentPolynomial& p) {
    std::vector<long> out;
    for (const auto& c : p.coefficients()) out.push_back(c.get_si());
    return oracle::normalize(out);
}

LaurentPolynomial delta(const BraidWord& b) { return alexander_polynomial(braid_closure_diagram(b)); }

}  // namespace

TEST_CASE("Alexander polynomial and Arf against Seifert matrices") {
    for (const auto& f : oracle::seifert_fixtures()) {
        CAPTURE(f.knot);
        const auto d = delta(resolve_knot(f.knot));
        CHECK(coeffs(d) == oracle::seifert_alexander(f.v));
        CHECK(arf_invariant(braid_closure_diagram(resolve_knot(f.knot))) == oracle::seifert_arf(f.v));
        const auto e = builtin_knot(f.knot);
        CHECK(oracle::normalize(e.alexander) == oracle::seifert_alexander(f.v));
        CHECK(e.arf == oracle::seifert_arf(f.v));
    }
}

TEST_CASE("Alexander polynomials of random braids") {
    std::mt19937 rng(2026);
    for (int t = 0; t < 200; ++t) {
        const auto b = oracle::random_knot_braid(rng, 8);
        CAPTURE(b.format());
        const auto c = coeffs(delta(b));
        long at1 = 0;
        for (long x : c) at1 += x;
        CHECK(at1 == 1);
        auto r = c;
        std::reverse(r.begin(), r.end());
        CHECK(r == c);
    }
}

TEST_CASE("Alexander polynomial is multiplicative under connected sum") {
    const std::vector<std::string> names{"3_1", "4_1", "5_1", "5_2"};
    for (const auto& a : names)
        for (const auto& b : names) {
            const auto sum = braid_connected_sum(resolve_knot(a), resolve_knot(b));
            CHECK(coeffs(delta(sum)) == oracle::normalize(oracle::mul(coeffs(delta(resolve_knot(a))),
                                                                      coeffs(delta(resolve_knot(b))))));
        }
}

TEST_CASE("Arf from the determinant mod 8") {
    CHECK(arf_from_alexander(LaurentPolynomial::constant(1)) == 0);
    for (const auto& f : oracle::seifert_fixtures()) {
        const auto n = normal_invariant_report(braid_closure_diagram(resolve_knot(f.knot)));
        CHECK(n.normally_trivial == (oracle::seifert_arf(f.v) == 0));
    }
}

TEST_CASE("braid parsing round trip") {
    std::mt19937 rng(5);
    for (int t = 0; t < 50; ++t) {
        const auto b = oracle::random_knot_braid(rng, 10);
        CHECK(parse_braid(b.format()) == b);
    }
    CHECK_THROWS(parse_braid("B2: 1 1"));
    CHECK_THROWS(resolve_knot("9_99"));
}

TEST_CASE("knot groups carry a commuting meridian and longitude") {
    for (const auto& name : builtin_knot_names()) {
        CAPTURE(name);
        const GroupPresentation g = knot_group_presentation(resolve_knot(name));
        CHECK(g.meridian()->exponent_sum() == 1);
        CHECK(g.longitude()->exponent_sum() == 0);
        CHECK(abelian_invariants(g).free_rank == 1);
        // [mu, lambda] dies in every finite quotient; test one.
        const GroupPresentation q = quotient(g, {g.meridian()->pow(3)});
        auto r = todd_coxeter(q, {}, 200000);
        if (r.complete()) {
            CHECK(r.table().trace(0, commutator(*g.meridian(), *g.longitude())) == 0);
            for (std::size_t c = 0; c < r.table().size(); ++c)
                CHECK(r.table().trace(r.table().trace(c, *g.meridian()), *g.longitude()) ==
                      r.table().trace(r.table().trace(c, *g.longitude()), *g.meridian()));
        }
    }
}

TEST_CASE("presentations round trip through JSON") {
    const GroupPresentation g = knot_group_presentation(resolve_knot("5_2"));
    const GroupPresentation h = GroupPresentation::from_json(g.to_json());
    CHECK(h.relators() == g.relators());
    CHECK(*h.meridian() == *g.meridian());
    const KnotDiagram d = braid_closure_diagram(resolve_knot("4_1"));
    CHECK(KnotDiagram::from_json(d.to_json()).crossings() == d.crossings());
}
