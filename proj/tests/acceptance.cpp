// Acceptance checks. Usage: acceptance [criterion ...]; no argument runs all.
// Prints one PASS/FAIL line per criterion and exits nonzero if any failed.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "rimsurg/report.hpp"
#include "rimsurg/schreier.hpp"

using namespace rimsurg;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string secs(double s) {
    std::ostringstream o;
    o.precision(3);
    o << s << " s";
    return o.str();
}

std::vector<SurgerySpec> sweep(std::vector<std::string> knots, SweepRange d, SweepRange m, SweepRange n, bool coprime,
                               SurgeryKind kind = SurgeryKind::Rim) {
    Sweep s;
    s.knots = std::move(knots);
    s.d = d;
    s.m = m;
    s.n = n;
    s.coprime_only = coprime;
    s.kind = kind;
    return s.expand();
}

std::vector<SurgerySpec> criterion2_specs() { return sweep({"3_1", "4_1", "5_1", "5_2"}, {2, 5}, {1, 5}, {0, 5}, true); }
std::vector<SurgerySpec> criterion3_specs() { return sweep({"4_1"}, {2, 3}, {1, 1}, {0, 25}, false); }
std::vector<SurgerySpec> criterion4_specs() { return {{"3_1", 2, 0, 0}, {"3_1", 2, 2, 0}}; }

std::string name(const SurgerySpec& s) {
    std::ostringstream o;
    o << s.knot << (s.kind == SurgeryKind::AnnulusRim ? " annulus" : "") << " d=" << s.d << " m=" << s.m << " n=" << s.n;
    return o.str();
}

Outcome all_cyclic(const std::vector<SurgerySpec>& specs, double budget, double per_case = 0) {
    const auto t0 = Clock::now();
    std::map<std::string, int> counts;
    std::string first_bad;
    double worst = 0;
    for (const auto& s : specs) {
        const auto t = Clock::now();
        const Report r = certify(s);
        const double e = since(t);
        worst = std::max(worst, e);
        const bool ok = r.verdict.kind == VerdictKind::CertifiedCyclic && r.verdict.group_order == static_cast<std::size_t>(s.d) &&
                        (per_case == 0 || e < per_case);
        ++counts[to_string(r.verdict.kind)];
        if (!ok && first_bad.empty()) first_bad = name(s) + " -> " + to_string(r.verdict.kind) + "/" + to_string(r.verdict.witness);
    }
    const double total = since(t0);
    std::ostringstream o;
    o << specs.size() << " specs:";
    for (const auto& [k, v] : counts) o << ' ' << k << '=' << v;
    o << ", total " << secs(total) << ", worst " << secs(worst);
    if (!first_bad.empty()) o << ", first failure " << first_bad;
    return {first_bad.empty() && total < budget, o.str()};
}

Outcome criterion1() { return all_cyclic(sweep({"unknot"}, {1, 5}, {0, 3}, {0, 3}, false), 1e9, 1.0); }

Outcome criterion2() { return all_cyclic(criterion2_specs(), 600.0); }

Outcome criterion3() { return all_cyclic(criterion3_specs(), 120.0); }

Outcome criterion4() {
    bool ok = true;
    std::ostringstream o;
    for (const auto& s : criterion4_specs()) {
        const Report r = certify(s);
        const auto& v = r.verdict;
        o << name(s) << ": " << to_string(v.kind) << " [G:<mu>]=" << (v.meridian_index ? std::to_string(*v.meridian_index) : "?")
          << " |G|=" << (v.group_order ? std::to_string(*v.group_order) : "?") << "; ";
        ok = ok && v.kind == VerdictKind::CertifiedNonCyclic && v.meridian_index == 3u && v.group_order == 6u;
    }
    return {ok, o.str()};
}

Outcome criterion5() {
    std::vector<SurgerySpec> pool = criterion2_specs();
    for (const auto& s : criterion3_specs()) pool.push_back(s);
    std::vector<SurgerySpec> sample = criterion4_specs();
    std::mt19937 rng(20261019);
    std::shuffle(pool.begin(), pool.end(), rng);
    sample.insert(sample.end(), pool.begin(), pool.begin() + 18);
    int agree = 0, cyclic = 0;
    std::string bad;
    for (const auto& s : sample) {
        const Report r = certify(s);
        EnumerationLimits l;
        l.deadline = Clock::now() + std::chrono::seconds(60);
        const auto cover = todd_coxeter(unbranched_cover_group(s), {}, l);
        const bool trivial = cover.complete() && cover.index() == 1;
        const bool direct = r.verdict.kind == VerdictKind::CertifiedCyclic;
        cyclic += direct;
        if (trivial == direct)
            ++agree;
        else if (bad.empty())
            bad = name(s);
    }
    std::ostringstream o;
    o << agree << "/" << sample.size() << " agree (" << cyclic << " cyclic)";
    if (!bad.empty()) o << ", first disagreement " << bad;
    return {agree == static_cast<int>(sample.size()), o.str()};
}

Outcome criterion6() {
    auto specs = sweep({"3_1"}, {2, 3}, {0, 2}, {0, 2}, false, SurgeryKind::AnnulusRim);
    const auto control = sweep({"unknot"}, {1, 5}, {0, 3}, {0, 3}, false, SurgeryKind::AnnulusRim);
    specs.insert(specs.end(), control.begin(), control.end());
    return all_cyclic(specs, 1e9);
}

Outcome criterion7() {
    const std::map<std::string, std::vector<long>> expected{
        {"3_1", {1, -1, 1}}, {"4_1", {1, -3, 1}}, {"5_1", {1, -1, 1, -1, 1}}, {"5_2", {2, -3, 2}}};
    const std::map<std::string, int> arf{{"unknot", 0}, {"3_1", 1}, {"4_1", 1}, {"5_1", 1}, {"5_2", 0}};
    int failures = 0;
    for (const auto& f : oracle::seifert_fixtures()) {
        const auto inv = knot_invariants(resolve_knot(f.knot));
        std::vector<long> got;
        for (const auto& c : inv.alexander.coefficients()) got.push_back(c.get_si());
        got = oracle::normalize(got);
        if (got != oracle::seifert_alexander(f.v)) ++failures;
        if (expected.count(f.knot) && oracle::seifert_alexander(f.v) != oracle::normalize(expected.at(f.knot))) ++failures;
        if (inv.arf != oracle::seifert_arf(f.v) || inv.arf != arf.at(f.knot)) ++failures;
    }
    std::mt19937 rng(7);
    int random_failures = 0;
    for (int t = 0; t < 200; ++t) {
        const auto d = alexander_polynomial(braid_closure_diagram(oracle::random_knot_braid(rng, 8)));
        const auto at1 = d.evaluate(1);
        std::vector<mpz_class> c = d.coefficients(), r = c;
        std::reverse(r.begin(), r.end());
        if (abs(at1) != 1 || (r != c && r != std::vector<mpz_class>(c.size()))) ++random_failures;
        if (r != c) {
            bool neg = true;
            for (std::size_t i = 0; i < c.size(); ++i) neg = neg && r[i] == -c[i];
            if (!neg) ++random_failures;
        }
    }
    std::ostringstream o;
    o << "table failures " << failures << ", random braid failures " << random_failures << "/200";
    return {failures == 0 && random_failures == 0, o.str()};
}

Outcome criterion8() {
    auto w = [](std::initializer_list<int> l) { return Word::from_letters(l); };
    int failures = 0;
    auto idx = [](const GroupPresentation& p) {
        auto r = todd_coxeter(p, {});
        return r.complete() ? static_cast<long>(r.index()) : -1l;
    };
    failures += idx(GroupPresentation(2, {w({1, 1}), w({2, 2}), w({1, 2, 1, 2, 1, 2})})) != 6;
    for (long d = 1; d <= 20; ++d) failures += idx(GroupPresentation(1, {Word::generator(0, d)})) != d;
    failures += idx(GroupPresentation(2, {w({1, 1, 1, 1}), w({1, 1, -2, -2}), w({-2, 1, 2, 1})})) != 8;

    std::mt19937 rng(13);
    int snf_bad = 0;
    for (int t = 0; t < 100; ++t) {
        const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
        IntMatrix a(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) a(i, j) = static_cast<long>(rng() % 41) - 20;
        const auto s = smith_normal_form(a);
        bool ok = s.U * a * s.V == s.D && abs(s.U.determinant()) == 1 && abs(s.V.determinant()) == 1;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) ok = ok && (i == j || s.D(i, j) == 0);
        const auto diag = s.diagonal();
        for (std::size_t i = 0; i + 1 < diag.size(); ++i)
            ok = ok && (diag[i] == 0 ? diag[i + 1] == 0 : diag[i + 1] % diag[i] == 0);
        snf_bad += !ok;
    }

    int rs_bad = 0;
    for (int t = 0; t < 50;) {
        const int g = 1 + static_cast<int>(rng() % 3), n = 1 + static_cast<int>(rng() % 7);
        std::vector<std::vector<int>> perms;
        for (int i = 0; i < g; ++i) {
            std::vector<int> p(static_cast<std::size_t>(n));
            std::iota(p.begin(), p.end(), 0);
            std::shuffle(p.begin(), p.end(), rng);
            perms.push_back(p);
        }
        if (!PermutationAction{n, perms}.is_transitive()) continue;
        std::vector<std::int32_t> e;
        for (int c = 0; c < n; ++c)
            for (const auto& p : perms) {
                e.push_back(p[static_cast<std::size_t>(c)]);
                e.push_back(static_cast<std::int32_t>(std::find(p.begin(), p.end(), c) - p.begin()));
            }
        const SchreierPresentation s(GroupPresentation(g, {}), CosetTable(g, static_cast<std::size_t>(n), e));
        rs_bad += s.subgroup().generator_count() != n * (g - 1) + 1;
        ++t;
    }
    std::ostringstream o;
    o << "Todd-Coxeter failures " << failures << ", SNF failures " << snf_bad << "/100, Reidemeister-Schreier failures "
      << rs_bad << "/50";
    return {failures == 0 && snf_bad == 0 && rs_bad == 0, o.str()};
}

Outcome criterion9() {
    std::mt19937 rng(31);
    int good = 0, tried = 0;
    while (tried < 100) {
        const long d = 1 + static_cast<long>(rng() % 1000), m = 1 + static_cast<long>(rng() % 1000);
        if (std::gcd(d, m) != 1) continue;
        ++tried;
        const auto p = plotnick_matrix(d, m);
        good += p.determinant() == 1 && d * p.gamma + m * p.beta == 1;
    }
    bool rejects = true;
    for (auto [d, m] : std::vector<std::pair<long, long>>{{2, 4}, {6, 9}, {1000, 10}, {5, 0}}) {
        try {
            plotnick_matrix(d, m);
            rejects = false;
        } catch (const std::invalid_argument&) {
        }
    }
    std::ostringstream o;
    o << good << "/100 determinant 1, non-coprime " << (rejects ? "rejected" : "accepted");
    return {good == 100 && rejects, o.str()};
}

Outcome criterion10() {
    BatchConfig c;
    c.specs = criterion2_specs();
    for (const auto& v : {criterion3_specs(), criterion4_specs(),
                          sweep({"3_1"}, {2, 3}, {0, 2}, {0, 2}, false, SurgeryKind::AnnulusRim)})
        c.specs.insert(c.specs.end(), v.begin(), v.end());
    c.specs.push_back({"not-a-knot", 2});
    std::reverse(c.specs.begin(), c.specs.end());
    c.parallelism = 1;
    const auto t0 = Clock::now();
    const std::string a = batch(c).to_json().dump(2);
    const double t1 = since(t0);
    c.parallelism = 8;
    const auto t2 = Clock::now();
    const std::string b = batch(c).to_json().dump(2);
    std::ostringstream o;
    o << c.specs.size() << " specs, " << a.size() << " bytes, parallelism 1 " << secs(t1) << ", parallelism 8 "
      << secs(since(t2)) << (a == b ? ", identical" : ", DIFFERENT");
    return {a == b, o.str()};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"unknot neutrality", criterion1},
        {"coprime sweep over 3_1 4_1 5_1 5_2", criterion2},
        {"figure-eight m=1 sweep", criterion3},
        {"trefoil non-cyclic witness", criterion4},
        {"unbranched cover cross-validation", criterion5},
        {"annulus rim surgery", criterion6},
        {"invariant oracles", criterion7},
        {"algorithm oracles", criterion8},
        {"Plotnick matrices", criterion9},
        {"batch determinism", criterion10}};
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) which.push_back(std::stoi(argv[i]));
    if (which.empty())
        for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) which.push_back(i);
    bool all = true;
    for (int i : which) {
        if (i < 1 || i > static_cast<int>(criteria.size())) {
            std::cerr << "no criterion " << i << '\n';
            return 1;
        }
        const auto& [label, run] = criteria[static_cast<std::size_t>(i - 1)];
        Outcome out{false, ""};
        try {
            out = run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << i << " (" << label << "): " << out.detail << std::endl;
        all = all && out.pass;
    }
    return all ? 0 : 1;
}
