#include "rimsurg/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace rimsurg {

namespace {

nlohmann::json big_json(const mpz_class& v) {
    return v.fits_slong_p() ? nlohmann::json(v.get_si()) : nlohmann::json(v.get_str());
}

std::optional<std::string> env(const char* name) {
    const char* v = std::getenv(name);
    if (!v || !*v) return std::nullopt;
    return std::string(v);
}

}  // namespace

RunLimits RunLimits::from_environment() {
    RunLimits l;
    try {
        if (auto v = env("RIMSURG_MAX_COSETS")) l.max_cosets = std::stoull(*v);
        if (auto v = env("RIMSURG_TIMEOUT")) l.timeout_seconds = std::stod(*v);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("RIMSURG_MAX_COSETS / RIMSURG_TIMEOUT must be numbers");
    }
    l.validate();
    return l;
}

void RunLimits::validate() const {
    if (max_cosets == 0) throw std::invalid_argument("max_cosets must be positive");
    if (!(timeout_seconds >= 0)) throw std::invalid_argument("timeout must be non-negative");
}

nlohmann::json RunLimits::to_json() const { return {{"max_cosets", max_cosets}, {"timeout_seconds", timeout_seconds}}; }

bool KnotInvariants::alexander_trivial() const { return alexander == LaurentPolynomial::constant(1); }

nlohmann::json KnotInvariants::to_json() const {
    return {{"alexander", alexander.to_string()},
            {"alexander_coefficients", alexander.to_json()},
            {"determinant", big_json(determinant)},
            {"arf", arf},
            {"normal_invariant", normal.class_label}};
}

KnotInvariants knot_invariants(const BraidWord& b) {
    const KnotDiagram d = braid_closure_diagram(b);
    KnotInvariants k;
    k.alexander = alexander_polynomial(d);
    k.determinant = abs(k.alexander.evaluate(-1));
    k.arf = arf_from_alexander(k.alexander);
    k.normal = normal_invariant_from_arf(k.arf);
    return k;
}

nlohmann::json Conclusions::to_json() const {
    return {{"topological", topological},
            {"isotopy", isotopy ? nlohmann::json(*isotopy) : nlohmann::json()},
            {"smoothly_knotted", smoothly_knotted},
            {"smooth_note", smooth_note},
            {"normal_invariant", normal_invariant}};
}

Conclusions draw_conclusions(VerdictKind verdict, const KnotInvariants& inv) {
    Conclusions c;
    switch (verdict) {
        case VerdictKind::CertifiedCyclic:
            c.topological = kTopologicallyStandard;
            c.isotopy = kIsotopic;
            break;
        case VerdictKind::CertifiedNonCyclic: c.topological = kNotApplicable; break;
        case VerdictKind::Inconclusive: c.topological = kUndecided; break;
    }
    c.smoothly_knotted = !inv.alexander_trivial();
    c.smooth_note = kSmoothCondition;
    c.normal_invariant = "S(f) = " + inv.normal.class_label + (inv.normal.normally_trivial ? " (trivial)" : " (nontrivial)");
    return c;
}

nlohmann::json Report::to_json(bool include_timing) const {
    nlohmann::json j{{"schema", kReportSchema},
                     {"spec", spec.to_json()},
                     {"verdict", verdict.to_json()},
                     {"group", {{"generators", generators}, {"relators", relators}}},
                     {"invariants", invariants.to_json()},
                     {"conclusions", conclusions.to_json()},
                     {"limits", limits.to_json()}};
    if (include_timing) j["seconds"] = seconds;
    return j;
}

std::string Report::to_text() const {
    std::ostringstream o;
    o << "spec        " << spec.knot << ' ' << to_string(spec.kind) << " d=" << spec.d << " m=" << spec.m
      << " n=" << spec.n;
    if (spec.kind == SurgeryKind::AnnulusRim) o << " framing=" << spec.framing;
    o << "\nverdict     " << to_string(verdict.kind);
    if (verdict.kind == VerdictKind::CertifiedCyclic) o << " (Z_" << spec.d << ')';
    o << ", witness " << to_string(verdict.witness) << '\n';
    o << "group       " << generators << " generators, " << relators << " relators; enumerated "
      << verdict.generators << " generators, " << verdict.relators << " relators\n";
    o << "            abelianization " << verdict.abelianization.to_string();
    if (verdict.meridian_index) o << ", [G:<mu>] = " << *verdict.meridian_index;
    if (verdict.central_quotient_index) o << ", [G:<mu,w>] = " << *verdict.central_quotient_index;
    if (verdict.group_order) o << ", |G| = " << *verdict.group_order;
    if (verdict.action) o << ", action of degree " << verdict.action->degree << " with mu in a point stabilizer";
    o << '\n';
    o << "invariants  Delta = " << invariants.alexander.to_string() << ", |Delta(-1)| = " << invariants.determinant.get_str()
      << ", Arf = " << invariants.arf << '\n';
    o << "normal      " << conclusions.normal_invariant << '\n';
    o << "topology    " << conclusions.topological << '\n';
    if (conclusions.isotopy) o << "isotopy     " << *conclusions.isotopy << '\n';
    o << "smooth      " << (conclusions.smoothly_knotted ? "knotted (Delta != 1), " : "no criterion (Delta = 1), ")
      << conclusions.smooth_note << '\n';
    o << "limits      " << limits.max_cosets << " cosets, ";
    if (limits.timeout_seconds > 0)
        o << limits.timeout_seconds << " s";
    else
        o << "no timeout";
    if (verdict.timed_out) o << " (timed out)";
    o << "\ntime        " << seconds << " s\n";
    return o.str();
}

Report certify(const SurgerySpec& spec, const RunLimits& limits) {
    spec.validate();
    limits.validate();
    const auto start = std::chrono::steady_clock::now();
    Report r;
    r.spec = spec;
    r.limits = limits;
    const SurgeryPresentation sp = build_surgery(spec);
    r.generators = sp.group.generator_count();
    r.relators = sp.group.relators().size();
    CertifyOptions o;
    o.limits.max_cosets = limits.max_cosets;
    if (limits.timeout_seconds > 0)
        o.limits.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                        std::chrono::duration<double>(limits.timeout_seconds));
    if (!sp.central.empty()) o.central = {sp.central};
    r.verdict = certify_cyclic(sp.group, spec.d, o);
    r.invariants = knot_invariants(spec.braid());
    r.conclusions = draw_conclusions(r.verdict.kind, r.invariants);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

int exit_code(VerdictKind k) { return k == VerdictKind::Inconclusive ? 2 : 0; }

std::vector<SurgerySpec> Sweep::expand() const {
    for (const auto* r : {&d, &m, &n})
        if (r->hi < r->lo) throw std::invalid_argument("sweep range with hi < lo");
    std::vector<SurgerySpec> out;
    for (const auto& k : knots)
        for (long dv = d.lo; dv <= d.hi; ++dv)
            for (long mv = m.lo; mv <= m.hi; ++mv) {
                if (coprime_only && std::gcd(dv, mv) != 1) continue;
                for (long nv = n.lo; nv <= n.hi; ++nv) out.push_back({k, dv, mv, nv, kind, framing});
            }
    return out;
}

std::vector<SurgerySpec> BatchConfig::all_specs() const {
    std::vector<SurgerySpec> out = specs;
    for (const auto& s : sweeps) {
        auto e = s.expand();
        out.insert(out.end(), e.begin(), e.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void BatchConfig::validate() const {
    limits.validate();
    if (parallelism < 1) throw std::invalid_argument("parallelism must be at least 1");
}

namespace {

SweepRange parse_range(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("sweep lacks '") + key + "'");
    const auto& v = j.at(key);
    if (v.is_number_integer()) return {v.get<long>(), v.get<long>()};
    if (v.is_array() && v.size() == 2) return {v[0].get<long>(), v[1].get<long>()};
    throw std::invalid_argument(std::string("sweep '") + key + "' must be an integer or [lo, hi]");
}

}  // namespace

BatchConfig BatchConfig::from_json(const nlohmann::json& j, const RunLimits& defaults) {
    BatchConfig c;
    c.limits = defaults;
    if (j.contains("specs"))
        for (const auto& s : j.at("specs")) c.specs.push_back(SurgerySpec::from_json(s));
    if (j.contains("sweeps"))
        for (const auto& s : j.at("sweeps")) {
            Sweep w;
            w.knots = s.at("knots").get<std::vector<std::string>>();
            w.kind = parse_surgery_kind(s.value("kind", std::string("rim")));
            w.d = parse_range(s, "d");
            w.m = parse_range(s, "m");
            w.n = parse_range(s, "n");
            w.framing = s.value("framing", 0);
            w.coprime_only = s.value("coprime_only", false);
            c.sweeps.push_back(std::move(w));
        }
    c.limits.max_cosets = j.value("max_cosets", c.limits.max_cosets);
    c.limits.timeout_seconds = j.value("timeout_seconds", c.limits.timeout_seconds);
    c.parallelism = j.value("parallelism", 1);
    c.output = j.value("output", std::string());
    c.validate();
    return c;
}

nlohmann::json BatchResult::to_json() const {
    auto rows_json = nlohmann::json::array();
    for (const auto& r : rows) {
        if (r.report) {
            auto j = r.report->to_json(false);
            j.erase("schema");
            j.erase("limits");
            rows_json.push_back(std::move(j));
        } else {
            rows_json.push_back({{"spec", r.spec.to_json()}, {"error", r.error}});
        }
    }
    return {{"schema", kBatchSchema},
            {"limits", limits.to_json()},
            {"summary",
             {{"total", rows.size()},
              {"CertifiedCyclic", cyclic},
              {"CertifiedNonCyclic", noncyclic},
              {"Inconclusive", inconclusive},
              {"errors", errors}}},
            {"rows", rows_json}};
}

int BatchResult::exit_code() const {
    if (errors) return 1;
    return inconclusive ? 2 : 0;
}

BatchResult batch(const BatchConfig& config) {
    config.validate();
    const std::vector<SurgerySpec> specs = config.all_specs();
    BatchResult out;
    out.limits = config.limits;
    out.rows.resize(specs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) {
            BatchRow& row = out.rows[i];
            row.spec = specs[i];
            try {
                row.report = certify(specs[i], config.limits);
            } catch (const std::exception& e) {
                row.error = e.what();
            }
        }
    };
    const auto width = std::min<std::size_t>(static_cast<std::size_t>(config.parallelism), std::max<std::size_t>(specs.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < width; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& r : out.rows) {
        if (!r.report) {
            ++out.errors;
            continue;
        }
        switch (r.report->verdict.kind) {
            case VerdictKind::CertifiedCyclic: ++out.cyclic; break;
            case VerdictKind::CertifiedNonCyclic: ++out.noncyclic; break;
            case VerdictKind::Inconclusive: ++out.inconclusive; break;
        }
    }
    return out;
}

std::string explain(const SurgerySpec& spec) {
    spec.validate();
    std::ostringstream o;
    const BraidWord b = spec.braid();
    o << "knot " << spec.knot << " as the closure of " << b.format() << '\n';
    o << "gluing matrix (twist m=" << spec.m << ", roll n=" << spec.n << "): "
      << format_matrix(gluing_matrix(spec.m, spec.n).matrix()) << '\n';
    if (std::gcd(spec.d, spec.m) == 1) {
        const PlotnickMatrix p = plotnick_matrix(spec.d, spec.m);
        o << "Plotnick matrix: " << format_matrix(p.matrix) << " with Bezout pair gamma=" << p.gamma
          << ", beta=" << p.beta << " (d*gamma + m*beta = " << spec.d * p.gamma + spec.m * p.beta
          << "), b=" << p.b << ", alpha=" << p.alpha << ", det=" << p.determinant() << '\n';
    } else {
        o << "gcd(d, m) = " << std::gcd(spec.d, spec.m) << ": no Plotnick matrix\n";
    }
    const SurgeryPresentation sp = build_surgery(spec);
    const GroupPresentation& g = sp.group;
    if (spec.kind == SurgeryKind::Rim) {
        const GroupPresentation k = knot_group_presentation(b);
        o << "knot group (Wirtinger, Tietze-reduced): " << k.generator_count() << " generators, "
          << k.relators().size() << " relators\n";
        o << "  meridian mu = " << k.format_word(*k.meridian()) << ", longitude lambda = "
          << k.format_word(*k.longitude()) << '\n';
        o << "added relators:\n  mu^" << spec.d << " = " << k.format_word(k.meridian()->pow(spec.d)) << '\n';
    } else {
        o << "band along the knot with framing " << spec.framing << ", tangle group Tietze-reduced\n";
        o << "added relators:\n  a1^" << spec.d << "\n  a3\n  a1 a2^-1\n";
    }
    if (sp.central.empty())
        o << "  w = lambda^n mu^m is trivial, no commutators\n";
    else
        o << "  [x_i, w] for every generator x_i, w = lambda^" << spec.n << " mu^" << spec.m << " = "
          << g.format_word(sp.central) << '\n';
    if (spec.d == 1)
        o << "d = 1 kills the meridian; the knot group is normally generated by it, so the group is trivial\n";
    o << "surgery group: " << g.generator_count() << " generators, " << g.relators().size() << " relators\n";
    for (const auto& r : g.relators()) o << "  " << g.format_word(r) << '\n';
    return o.str();
}

}  // namespace rimsurg
