#include "rimsurg/surgery.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace rimsurg {

std::string format_matrix(const Matrix3& m) {
    std::ostringstream out;
    out << '[';
    for (std::size_t r = 0; r < 3; ++r) {
        out << (r ? ",[" : "[");
        for (std::size_t c = 0; c < 3; ++c) out << (c ? "," : "") << m[r][c];
        out << ']';
    }
    out << ']';
    return out.str();
}

nlohmann::json matrix_json(const Matrix3& m) {
    auto rows = nlohmann::json::array();
    for (const auto& r : m) rows.push_back({r[0], r[1], r[2]});
    return rows;
}

long determinant3(const Matrix3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::vector<std::string> validate_gluing(const Matrix3& m) {
    std::vector<std::string> out;
    if (m[0][2] != 0 || m[1][2] != 0 || m[2][2] != 1)
        out.push_back("third column must be (0,0,1): mu_T has to map to lambda_K");
    const long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (det != 1) out.push_back("upper-left block determinant is " + std::to_string(det) + ", expected 1");
    return out;
}

GluingMatrix::GluingMatrix(const Matrix3& m) : m_(m) {
    auto v = validate_gluing(m);
    if (!v.empty()) throw std::invalid_argument("invalid gluing matrix: " + v.front());
}

GluingMatrix gluing_matrix(long m, long n) { return GluingMatrix({{{1, 0, 0}, {m, 1, 0}, {n, 0, 1}}}); }

std::string to_string(SurgeryKind k) { return k == SurgeryKind::Rim ? "rim" : "annulus"; }

SurgeryKind parse_surgery_kind(const std::string& s) {
    if (s == "rim") return SurgeryKind::Rim;
    if (s == "annulus" || s == "annulus_rim") return SurgeryKind::AnnulusRim;
    throw std::invalid_argument("unknown surgery kind '" + s + "' (expected rim or annulus)");
}

void SurgerySpec::validate() const {
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    if (m < 0) throw std::invalid_argument("m must be non-negative");
    (void)braid();
}

nlohmann::json SurgerySpec::to_json() const {
    nlohmann::json j{{"knot", knot}, {"d", d}, {"m", m}, {"n", n}, {"kind", to_string(kind)}};
    if (kind == SurgeryKind::AnnulusRim) j["framing"] = framing;
    return j;
}

SurgerySpec SurgerySpec::from_json(const nlohmann::json& j) {
    SurgerySpec s;
    s.knot = j.at("knot").get<std::string>();
    s.d = j.at("d").get<long>();
    s.m = j.value("m", 0L);
    s.n = j.value("n", 0L);
    s.kind = parse_surgery_kind(j.value("kind", std::string("rim")));
    s.framing = j.value("framing", 0);
    return s;
}

bool operator<(const SurgerySpec& a, const SurgerySpec& b) {
    const auto ka = a.kind == SurgeryKind::Rim ? 0 : 1;
    const auto kb = b.kind == SurgeryKind::Rim ? 0 : 1;
    return std::tie(a.knot, ka, a.d, a.m, a.n, a.framing) < std::tie(b.knot, kb, b.d, b.m, b.n, b.framing);
}

Word twist_roll_conjugator(const GroupPresentation& g, long m, long n) {
    if (!g.meridian() || !g.longitude()) throw std::invalid_argument("presentation lacks peripheral words");
    return g.longitude()->pow(n) * g.meridian()->pow(m);
}

Word twist_roll_conjugator(const WirtingerPresentation& w, long m, long n) {
    return twist_roll_conjugator(w.group, m, n);
}

namespace {

std::vector<Word> commutators_with(int generators, const Word& w) {
    std::vector<Word> out;
    if (w.empty()) return out;
    for (int g = 0; g < generators; ++g) out.push_back(commutator(Word::generator(g), w));
    return out;
}

constexpr double kKnotGrowth = 4.0;

GroupPresentation knot_group(const SurgerySpec& spec) { return knot_group_presentation(spec.braid()); }

}  // namespace

GroupPresentation knot_group_presentation(const BraidWord& b) {
    TietzeOptions o;
    o.growth = kKnotGrowth;
    return tietze_simplify(wirtinger(braid_closure_diagram(b)).group, o);
}

namespace {

SurgeryPresentation rim_surgery(const SurgerySpec& spec) {
    spec.validate();
    if (spec.kind != SurgeryKind::Rim) throw std::invalid_argument("rim_surgery_group needs a rim spec");
    const GroupPresentation g = knot_group(spec);
    const Word w = twist_roll_conjugator(g, spec.m, spec.n);
    std::vector<Word> extra{g.meridian()->pow(spec.d)};
    auto comms = commutators_with(g.generator_count(), w);
    extra.insert(extra.end(), comms.begin(), comms.end());
    return {quotient(g, extra), w};
}

}  // namespace

GroupPresentation rim_surgery_group(const SurgerySpec& spec) { return rim_surgery(spec).group; }

TangleDiagram surgery_band(const SurgerySpec& spec) {
    return band_double(braid_closure_diagram(spec.braid()), spec.framing);
}

namespace {

SurgeryPresentation annulus_rim_surgery(const SurgerySpec& spec) {
    spec.validate();
    if (spec.kind != SurgeryKind::AnnulusRim) throw std::invalid_argument("annulus_rim_surgery_group needs an annulus spec");
    const TangleGroup t = tangle_wirtinger(surgery_band(spec));
    std::vector<Word> boundary{t.a1, t.a2, t.a3};
    TietzeOptions o;
    o.growth = kKnotGrowth;
    for (const auto& w : {t.a1, t.a2})
        for (const auto& syl : w.syllables()) o.protect.push_back(syl.gen);
    const GroupPresentation g = tietze_simplify(t.group, o, boundary);
    const Word& a1 = boundary[0];
    const Word& a2 = boundary[1];
    const Word& a3 = boundary[2];
    const Word w = twist_roll_conjugator(g, spec.m, spec.n);
    std::vector<Word> extra{a1.pow(spec.d), a3, a1 * a2.inverse()};
    auto comms = commutators_with(g.generator_count(), w);
    extra.insert(extra.end(), comms.begin(), comms.end());
    GroupPresentation q = quotient(g, extra);
    q.set_meridian(a1);
    return {std::move(q), w};
}

}  // namespace

GroupPresentation annulus_rim_surgery_group(const SurgerySpec& spec) { return annulus_rim_surgery(spec).group; }

SurgeryPresentation build_surgery(const SurgerySpec& spec) {
    return spec.kind == SurgeryKind::Rim ? rim_surgery(spec) : annulus_rim_surgery(spec);
}

GroupPresentation surgery_group(const SurgerySpec& spec) { return build_surgery(spec).group; }

SchreierPresentation meridian_kernel(const GroupPresentation& knot, long d) {
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    if (!knot.meridian() || knot.meridian()->exponent_sum() != 1)
        throw std::invalid_argument("meridian must have exponent sum 1");
    for (const auto& r : knot.relators())
        if (r.exponent_sum() != 0) throw std::invalid_argument("relator with nonzero exponent sum");
    const int g = knot.generator_count();
    const auto rows = static_cast<std::size_t>(d);
    std::vector<std::int32_t> entries;
    entries.reserve(rows * static_cast<std::size_t>(2 * g));
    for (long c = 0; c < d; ++c)
        for (int gen = 0; gen < g; ++gen) {
            entries.push_back(static_cast<std::int32_t>((c + 1) % d));
            entries.push_back(static_cast<std::int32_t>((c + d - 1) % d));
        }
    return SchreierPresentation(knot, CosetTable(g, rows, std::move(entries)));
}

namespace {

std::vector<Word> meridian_lifts(const SchreierPresentation& k, const Word& mu, long d) {
    std::vector<Word> out;
    const Word md = mu.pow(d);
    for (const auto& rep : k.transversal()) out.push_back(k.rewrite(rep * md * rep.inverse()));
    return out;
}

std::vector<Word> automorphism_relators(const SchreierPresentation& k, const Word& w) {
    std::vector<Word> out;
    const auto& words = k.generator_words();
    for (std::size_t s = 0; s < words.size(); ++s)
        out.push_back(Word::generator(static_cast<int>(s), -1) * k.rewrite(words[s].conjugated_by(w)));
    return out;
}

}  // namespace

GroupPresentation unbranched_cover_group(const SurgerySpec& spec) {
    spec.validate();
    const GroupPresentation w = knot_group(spec);
    const SchreierPresentation k = meridian_kernel(w, spec.d);
    const Word conj = w.meridian()->pow(spec.m) * w.longitude()->pow(spec.n);
    std::vector<Word> extra = meridian_lifts(k, *w.meridian(), spec.d);
    auto autos = automorphism_relators(k, conj);
    extra.insert(extra.end(), autos.begin(), autos.end());
    return quotient(k.subgroup(), extra);
}

GroupPresentation branched_cover_group(const BraidWord& knot, long d) {
    const GroupPresentation w = knot_group_presentation(knot);
    const SchreierPresentation k = meridian_kernel(w, d);
    return quotient(k.subgroup(), meridian_lifts(k, *w.meridian(), d));
}

GroupPresentation branched_cover_surgered_group(const SurgerySpec& spec) {
    spec.validate();
    const GroupPresentation w = knot_group(spec);
    const SchreierPresentation k = meridian_kernel(w, spec.d);
    const GroupPresentation branched = quotient(k.subgroup(), meridian_lifts(k, *w.meridian(), spec.d));
    const Word conj = w.meridian()->pow(spec.m) * w.longitude()->pow(spec.n);
    return quotient(branched, automorphism_relators(k, conj));
}

long PlotnickMatrix::determinant() const { return determinant3(matrix); }

namespace {

// Returns g = gcd(a, b) and x, y with a x + b y = g.
long extended_gcd(long a, long b, long& x, long& y) {
    long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        const long q = a / b;
        std::tie(a, b) = std::make_tuple(b, a - q * b);
        std::tie(x0, x1) = std::make_tuple(x1, x0 - q * x1);
        std::tie(y0, y1) = std::make_tuple(y1, y0 - q * y1);
    }
    x = x0;
    y = y0;
    return a;
}

}  // namespace

PlotnickMatrix plotnick_matrix(long d, long m) {
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    if (m < 0) throw std::invalid_argument("m must be non-negative");
    long x = 0, y = 0;
    const long g = extended_gcd(d, m, x, y);
    if (g != 1) throw std::invalid_argument("gcd(d, m) = " + std::to_string(g) + ", Plotnick matrix needs coprime d, m");
    // d x + m y = 1; shift to the representative with 0 <= beta < d.
    long beta = ((y % d) + d) % d;
    const long gamma = (1 - m * beta) / d;
    PlotnickMatrix p{{{{m, d, 0}, {-gamma, beta, 0}, {0, 0, 1}}}, gamma, beta, 0, 0};
    // -alpha*gamma + b*m = 0 and alpha*beta + b*d = 0 have coefficient
    // determinant -(d*gamma + m*beta) = -1, so the only solution is zero.
    const long sys_det = -gamma * d - m * beta;
    if (sys_det != -1 || d * gamma + m * beta != 1) throw std::logic_error("Bezout pair inconsistent");
    return p;
}

}  // namespace rimsurg
