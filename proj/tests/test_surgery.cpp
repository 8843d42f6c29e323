#include <doctest.h>

#include <random>

#include "rimsurg/coset_enum.hpp"
#include "rimsurg/cyclic.hpp"
#include "rimsurg/surgery.hpp"

using namespace rimsurg;

TEST_CASE("gluing matrices") {
    CHECK(format_matrix(gluing_matrix(1, 0).matrix()) == "[[1,0,0],[1,1,0],[0,0,1]]");
    CHECK(validate_gluing(gluing_matrix(3, -2).matrix()).empty());
    CHECK_FALSE(validate_gluing({{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}}).empty());
    CHECK_FALSE(validate_gluing({{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}}).empty());
}

TEST_CASE("Plotnick matrices") {
    CHECK(format_matrix(plotnick_matrix(2, 1).matrix) == "[[1,2,0],[0,1,0],[0,0,1]]");
    std::mt19937 rng(99);
    int done = 0;
    while (done < 100) {
        const long d = 1 + static_cast<long>(rng() % 1000), m = static_cast<long>(rng() % 1001);
        if (std::gcd(d, m) != 1) {
            CHECK_THROWS_AS(plotnick_matrix(d, m), std::invalid_argument);
            continue;
        }
        const auto p = plotnick_matrix(d, m);
        CHECK(p.determinant() == 1);
        CHECK(d * p.gamma + m * p.beta == 1);
        CHECK(p.b == 0);
        CHECK(p.alpha == 0);
        ++done;
    }
    CHECK_THROWS_AS(plotnick_matrix(4, 6), std::invalid_argument);
    CHECK_THROWS_AS(plotnick_matrix(0, 1), std::invalid_argument);
}

TEST_CASE("spec validation and JSON") {
    SurgerySpec s{"4_1", 3, 1, 2, SurgeryKind::AnnulusRim, 0};
    CHECK(SurgerySpec::from_json(s.to_json()) == s);
    CHECK_THROWS(SurgerySpec{"4_1", 0}.validate());
    CHECK_THROWS(SurgerySpec{"4_1", 2, -1}.validate());
    CHECK_THROWS(SurgerySpec{"nope", 2}.validate());
    CHECK_THROWS(parse_surgery_kind("torus"));
}

TEST_CASE("rim surgery groups") {
    auto verdict = [](const SurgerySpec& s) {
        const auto sp = build_surgery(s);
        CertifyOptions o;
        o.central = {sp.central};
        return certify_cyclic(sp.group, s.d, o);
    };
    CHECK(verdict({"3_1", 2, 1, 0}).kind == VerdictKind::CertifiedCyclic);
    const auto v = verdict({"3_1", 2, 2, 0});
    CHECK(v.kind == VerdictKind::CertifiedNonCyclic);
    CHECK(v.meridian_index == 3u);
    CHECK(v.group_order == 6u);
    CHECK(verdict({"unknot", 4, 2, 3}).kind == VerdictKind::CertifiedCyclic);
    CHECK(verdict({"4_1", 3, 1, 7}).kind == VerdictKind::CertifiedCyclic);
}

namespace {

CyclicityVerdict verdict_of(const SurgerySpec& s) {
    const auto sp = build_surgery(s);
    CertifyOptions o;
    o.central = {sp.central};
    return certify_cyclic(sp.group, s.d, o);
}

}  // namespace

TEST_CASE("non-cyclic witnesses are re-checkable") {
    const auto a = verdict_of({"4_1", 4, 1, 3});
    REQUIRE(a.kind == VerdictKind::CertifiedNonCyclic);
    REQUIRE(a.witness == Witness::PermutationAction);
    CHECK(a.action->satisfies(*a.action_presentation));
    CHECK(a.action->is_transitive());
    CHECK(a.action->degree > 1);
    CHECK(a.action->apply(0, *a.action_presentation->meridian()) == 0);
    CHECK(a.meridian_generates_abelianization);

    const auto c = verdict_of({"5_2", 3, 2, 2});
    REQUIRE(c.kind == VerdictKind::CertifiedNonCyclic);
    REQUIRE(c.witness == Witness::CentralQuotientIndex);
    CHECK(*c.central_quotient_index > 1);

    const auto m = verdict_of({"4_1", 4, 1, 1});
    REQUIRE(m.kind == VerdictKind::CertifiedNonCyclic);
    CHECK(m.meridian_index > 1u);
}

TEST_CASE("certainty is monotone in the coset limit") {
    const std::vector<SurgerySpec> specs{{"3_1", 3, 1, 2}, {"4_1", 5, 2, 1}, {"5_2", 4, 1, 3}, {"3_1", 2, 2, 0},
                                         {"5_1", 3, 3, 1}, {"4_1", 4, 1, 1}};
    for (const auto& s : specs) {
        const auto sp = build_surgery(s);
        bool cyc = false, non = false;
        for (std::size_t lim : {20u, 200u, 2000u, 100000u}) {
            CertifyOptions o;
            o.central = {sp.central};
            o.limits.max_cosets = lim;
            const auto k = certify_cyclic(sp.group, s.d, o).kind;
            cyc |= k == VerdictKind::CertifiedCyclic;
            non |= k == VerdictKind::CertifiedNonCyclic;
        }
        CHECK_FALSE((cyc && non));
    }
}

TEST_CASE("cover groups") {
    for (long d = 2; d <= 4; ++d) {
        const auto k = knot_group_presentation(resolve_knot("3_1"));
        const auto ker = meridian_kernel(k, d);
        CHECK(ker.index() == static_cast<std::size_t>(d));
    }
    // The 2-fold branched cover of a knot has |H_1| equal to the determinant.
    for (const auto& [name, det] : std::vector<std::pair<std::string, long>>{{"3_1", 3}, {"4_1", 5}, {"5_1", 5}, {"5_2", 7}}) {
        const auto a = abelian_invariants(branched_cover_group(resolve_knot(name), 2));
        CHECK(a.free_rank == 0);
        mpz_class prod = 1;
        for (const auto& t : a.torsion) prod *= t;
        CHECK(prod == det);
    }
    auto r = todd_coxeter(unbranched_cover_group({"3_1", 2, 1, 0}), {});
    REQUIRE(r.complete());
    CHECK(r.index() == 1);
    auto s = todd_coxeter(unbranched_cover_group({"3_1", 2, 2, 0}), {});
    REQUIRE(s.complete());
    CHECK(s.index() == 3);
}

TEST_CASE("band doubling") {
    for (const auto& name : builtin_knot_names()) {
        CAPTURE(name);
        const KnotDiagram k = braid_closure_diagram(resolve_knot(name));
        for (int framing : {0, 1, -2}) {
            const TangleDiagram t = band_double(k, framing);
            // Antiparallel edges: the four crossings doubling a crossing cancel in
            // sign, and each twist crossing is a clasp between the two edges.
            const int twist_letters = 2 * std::abs(framing - k.writhe());
            int twist_sign = 0;
            for (int c = 0; c < twist_letters; ++c) twist_sign += t.crossings()[static_cast<std::size_t>(c)].sign;
            CHECK(t.writhe() == twist_sign);
            CHECK(std::abs(twist_sign) == twist_letters);
            // Killing the band meridian leaves the loop through the band.
            const TangleGroup g = tangle_wirtinger(t);
            for (long d = 2; d <= 4; ++d) {
                auto r = todd_coxeter(tietze_simplify(quotient(g.group, {g.a3, g.a1.pow(d)})), {}, 100000);
                REQUIRE(r.complete());
                CHECK(r.index() == static_cast<std::size_t>(d));
            }
        }
    }
}

TEST_CASE("annulus rim surgery") {
    const auto g = annulus_rim_surgery_group({"unknot", 3, 0, 0, SurgeryKind::AnnulusRim});
    CHECK(certify_cyclic(g, 3).kind == VerdictKind::CertifiedCyclic);
    CHECK_THROWS(rim_surgery_group({"3_1", 2, 0, 0, SurgeryKind::AnnulusRim}));
    for (long d = 2; d <= 3; ++d)
        for (long m = 0; m <= 2; ++m) {
            const SurgerySpec s{"3_1", d, m, 1, SurgeryKind::AnnulusRim};
            CHECK(certify_cyclic(annulus_rim_surgery_group(s), d).kind == VerdictKind::CertifiedCyclic);
        }
}

TEST_CASE("peripheral orientation") {
    // +1 surgery on the right-handed trefoil is the Poincare sphere, -1 surgery
    // gives an infinite group.
    const auto g = knot_group_presentation(resolve_knot("3_1"));
    auto plus = todd_coxeter(quotient(g, {*g.meridian() * *g.longitude()}), {});
    REQUIRE(plus.complete());
    CHECK(plus.index() == 120);
    auto minus = todd_coxeter(quotient(g, {*g.meridian() * g.longitude()->inverse()}), {}, 20000);
    CHECK_FALSE(minus.complete());
}

TEST_CASE("trefoil with d | m - 6n") {
    // lambda = c mu^-6 with c central, so w = c^n mu^(m-6n) is central already
    // and the group is the trefoil group with mu^d killed.
    const auto v = verdict_of({"3_1", 5, 1, 1});
    CHECK(v.kind == VerdictKind::CertifiedNonCyclic);
    CHECK(v.group_order == 600u);
    CHECK(verdict_of({"3_1", 5, 1, 2}).kind == VerdictKind::CertifiedCyclic);
}
