#include <doctest.h>

#include <algorithm>
#include <random>

#include "rimsurg/coset_enum.hpp"
#include "rimsurg/cyclic.hpp"
#include "rimsurg/low_index.hpp"
#include "rimsurg/schreier.hpp"
#include "rimsurg/smith.hpp"

using namespace rimsurg;

namespace {

Word w(std::initializer_list<int> letters) { return Word::from_letters(letters); }

GroupPresentation s3() { return {2, {w({1, 1}), w({2, 2}), w({1, 2, 1, 2, 1, 2})}}; }
GroupPresentation quaternion() { return {2, {w({1, 1, 1, 1}), w({1, 1, -2, -2}), w({-2, 1, 2, 1})}}; }
GroupPresentation trefoil() { return {2, {w({1, 2, 1, -2, -1, -2})}}; }

std::size_t index_of(const GroupPresentation& p, const std::vector<Word>& h = {}) {
    auto r = todd_coxeter(p, h);
    REQUIRE(r.complete());
    return r.index();
}

}  // namespace

TEST_CASE("coset enumeration on small groups") {
    CHECK(index_of(s3()) == 6);
    CHECK(index_of(s3(), {w({1})}) == 3);
    CHECK(index_of(quaternion()) == 8);
    CHECK(index_of(quaternion(), {w({1})}) == 2);
    for (int d = 1; d <= 12; ++d) CHECK(index_of(GroupPresentation(1, {Word::generator(0, d)})) == static_cast<std::size_t>(d));
    CHECK(index_of(quotient(trefoil(), {w({1, 1})})) == 6);
}

TEST_CASE("Felsch agrees with HLT") {
    EnumerationLimits l;
    l.strategy = Strategy::Felsch;
    for (const auto& p : {s3(), quaternion(), quotient(trefoil(), {w({1, 1, 1})})}) {
        auto a = todd_coxeter(p, {});
        auto b = todd_coxeter(p, {}, l);
        REQUIRE(a.complete());
        REQUIRE(b.complete());
        CHECK(a.index() == b.index());
    }
}

TEST_CASE("index is invariant under relator permutation and generator relabeling") {
    std::mt19937 rng(7);
    for (const auto& p : {s3(), quaternion(), quotient(trefoil(), {w({1, 1, 1})})}) {
        const std::size_t base = index_of(p);
        auto rels = p.relators();
        for (int t = 0; t < 5; ++t) {
            std::shuffle(rels.begin(), rels.end(), rng);
            CHECK(index_of(GroupPresentation(2, rels)) == base);
        }
        const GroupMap swap({Word::generator(1), Word::generator(0)}, 2);
        std::vector<Word> swapped;
        for (const auto& r : p.relators()) swapped.push_back(swap.apply(r));
        CHECK(index_of(GroupPresentation(2, swapped)) == base);
    }
}

TEST_CASE("overflow is reported") {
    auto r = todd_coxeter(trefoil(), {}, 50);
    CHECK_FALSE(r.complete());
    CHECK(r.overflow().limit == 50);
}

TEST_CASE("Smith normal form decomposes random matrices") {
    std::mt19937 rng(11);
    for (int t = 0; t < 100; ++t) {
        const std::size_t rows = 1 + rng() % 20, cols = 1 + rng() % 20;
        IntMatrix a(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) a(i, j) = static_cast<long>(rng() % 21) - 10;
        const auto s = smith_normal_form(a);
        CHECK(s.U * a * s.V == s.D);
        CHECK(abs(s.U.determinant()) == 1);
        CHECK(abs(s.V.determinant()) == 1);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (i != j) CHECK(s.D(i, j) == 0);
        const auto diag = s.diagonal();
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
            CHECK(diag[i] >= 0);
            if (diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
            else CHECK(diag[i + 1] == 0);
        }
    }
}

TEST_CASE("abelian invariants") {
    CHECK(abelian_invariants(s3()).to_string() == AbelianInvariants{0, {2}}.to_string());
    CHECK(abelian_invariants(quaternion()).to_string() == AbelianInvariants{0, {2, 2}}.to_string());
    const auto t = abelian_invariants(trefoil());
    CHECK(t.free_rank == 1);
    CHECK(t.torsion.empty());
    for (const auto& p : {s3(), quaternion(), trefoil()})
        CHECK(abelian_invariants(tietze_simplify(p)).to_string() == abelian_invariants(p).to_string());
}

TEST_CASE("Reidemeister-Schreier rank in free groups") {
    std::mt19937 rng(3);
    int done = 0;
    while (done < 50) {
        const int g = 1 + static_cast<int>(rng() % 3);
        const int n = 1 + static_cast<int>(rng() % 6);
        std::vector<std::vector<int>> perms;
        for (int i = 0; i < g; ++i) {
            std::vector<int> p(static_cast<std::size_t>(n));
            std::iota(p.begin(), p.end(), 0);
            std::shuffle(p.begin(), p.end(), rng);
            perms.push_back(p);
        }
        PermutationAction act{n, perms};
        if (!act.is_transitive()) continue;
        std::vector<std::int32_t> entries;
        for (int c = 0; c < n; ++c)
            for (int i = 0; i < g; ++i) {
                const auto& p = perms[static_cast<std::size_t>(i)];
                entries.push_back(p[static_cast<std::size_t>(c)]);
                entries.push_back(static_cast<std::int32_t>(std::find(p.begin(), p.end(), c) - p.begin()));
            }
        const SchreierPresentation s(GroupPresentation(g, {}), CosetTable(g, static_cast<std::size_t>(n), entries));
        CHECK(s.subgroup().generator_count() == n * (g - 1) + 1);
        CHECK(s.subgroup().relators().empty());
        ++done;
    }
}

TEST_CASE("Reidemeister-Schreier rewrites subgroup elements") {
    const auto s = reidemeister_schreier(s3(), {w({1})});
    REQUIRE(s);
    CHECK(s->index() == 3);
    CHECK(index_of(s->subgroup()) == 2);
    CHECK_THROWS_AS(s->rewrite(w({2})), std::invalid_argument);
}

TEST_CASE("certify_cyclic examples") {
    GroupPresentation z3(1, {Word::generator(0, 3)});
    z3.set_meridian(Word::generator(0));
    CHECK(certify_cyclic(z3, 3).kind == VerdictKind::CertifiedCyclic);
    CHECK(certify_cyclic(z3, 2).witness == Witness::Abelianization);

    GroupPresentation t = quotient(trefoil(), {w({1, 1})});
    t.set_meridian(Word::generator(0));
    const auto v = certify_cyclic(t, 2);
    CHECK(v.kind == VerdictKind::CertifiedNonCyclic);
    CHECK(v.meridian_index == 3u);
    CHECK(v.group_order == 6u);

    GroupPresentation none(1, {});
    CHECK_THROWS_AS(certify_cyclic(none, 1), std::invalid_argument);
}

TEST_CASE("central words are verified before use") {
    GroupPresentation t = quotient(trefoil(), {w({1, 1})});
    t.set_meridian(Word::generator(0));
    CHECK_FALSE(is_verified_central(t, w({1})));
    GroupPresentation c = quotient(t, {commutator(w({1}), w({1})), commutator(w({2}), w({1}))});
    CHECK(is_verified_central(c, w({1})));
    CertifyOptions o;
    o.central = {w({1})};
    CHECK(certify_cyclic(t, 2, o).verified_central == 0);
    CHECK(certify_cyclic(c, 2, o).verified_central == 1);
}

TEST_CASE("low-index search") {
    const auto a = find_proper_subgroup_action(s3(), {w({1})});
    REQUIRE(a);
    CHECK(a->satisfies(s3()));
    CHECK(a->is_transitive());
    CHECK(a->degree >= 2);
    CHECK(a->apply(0, w({1})) == 0);

    GroupPresentation z5(1, {Word::generator(0, 5)});
    CHECK_FALSE(find_proper_subgroup_action(z5, {w({1})}));
    CHECK_FALSE(find_proper_subgroup_action(GroupPresentation(2, {w({1, 2, -1, -2}), w({1, 1, 1}), w({2})}), {w({1})}));
}
