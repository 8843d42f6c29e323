#include "rimsurg/cyclic.hpp"

#include <stdexcept>

namespace rimsurg {

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::CertifiedCyclic: return "CertifiedCyclic";
        case VerdictKind::CertifiedNonCyclic: return "CertifiedNonCyclic";
        case VerdictKind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string to_string(Witness w) {
    switch (w) {
        case Witness::None: return "none";
        case Witness::Abelianization: return "abelianization";
        case Witness::MeridianIndex: return "meridian_index";
        case Witness::CentralQuotientIndex: return "central_quotient_index";
        case Witness::PermutationAction: return "permutation_action";
        case Witness::GroupOrder: return "group_order";
    }
    return "?";
}

namespace {

nlohmann::json stats_json(const EnumerationStats& s) {
    return {{"cosets_defined", s.cosets_defined},
            {"max_live", s.max_live},
            {"coincidences", s.coincidences},
            {"lookaheads", s.lookaheads}};
}

nlohmann::json abelian_json(const AbelianInvariants& a) {
    auto tors = nlohmann::json::array();
    for (const auto& t : a.torsion) tors.push_back(t.fits_slong_p() ? nlohmann::json(t.get_si()) : nlohmann::json(t.get_str()));
    return {{"free_rank", a.free_rank}, {"torsion", tors}};
}

template <class T>
nlohmann::json opt_json(const std::optional<T>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json();
}

}  // namespace

nlohmann::json CyclicityVerdict::to_json() const {
    nlohmann::json j{{"verdict", to_string(kind)},
                     {"d", d},
                     {"witness", to_string(witness)},
                     {"abelianization", abelian_json(abelianization)},
                     {"meridian_generates_abelianization", meridian_generates_abelianization},
                     {"meridian_index", opt_json(meridian_index)},
                     {"central_quotient_index", opt_json(central_quotient_index)},
                     {"verified_central_words", verified_central},
                     {"group_order", opt_json(group_order)},
                     {"max_cosets", max_cosets},
                     {"timed_out", timed_out},
                     {"enumerated_generators", generators},
                     {"enumerated_relators", relators}};
    if (action) {
        j["action"] = action->to_json();
        j["action_presentation"] = action_presentation->to_json();
    }
    auto runs = nlohmann::json::array();
    for (const auto& s : enumerations) runs.push_back(stats_json(s));
    j["enumerations"] = runs;
    return j;
}

bool is_verified_central(const GroupPresentation& p, const Word& w) {
    p.check_word(w);
    for (int g = 0; g < p.generator_count(); ++g) {
        const GroupPresentation c(p.generator_count(), {commutator(Word::generator(g), w)});
        if (c.relators().empty()) continue;
        const Word& r = c.relators().front();
        const Word ri = GroupPresentation(p.generator_count(), {r.inverse()}).relators().front();
        bool found = false;
        for (const auto& s : p.relators())
            if (s == r || s == ri) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

namespace {

bool timed_out(const EnumerationResult& r) { return !r.complete() && r.overflow().timed_out; }

}  // namespace

CyclicityVerdict certify_cyclic(const GroupPresentation& p, long d, const CertifyOptions& opts) {
    if (!p.meridian()) throw std::invalid_argument("presentation has no distinguished meridian");
    if (d < 1) throw std::invalid_argument("d must be positive");

    CyclicityVerdict v;
    v.d = d;
    v.max_cosets = opts.limits.max_cosets;
    v.abelianization = abelian_invariants(p);
    if (!v.abelianization.is_cyclic_of_order(d)) {
        v.kind = VerdictKind::CertifiedNonCyclic;
        v.witness = Witness::Abelianization;
        return v;
    }
    const AbelianInvariants rest = abelian_invariants(quotient(p, {*p.meridian()}));
    v.meridian_generates_abelianization = rest.free_rank == 0 && rest.torsion.empty();

    std::vector<Word> central;
    for (const auto& w : opts.central)
        if (is_verified_central(p, w)) central.push_back(w);
    v.verified_central = central.size();

    TietzeOptions topts;
    topts.budget = opts.tietze_budget;
    const GroupPresentation q = tietze_simplify(p, topts, central);
    v.generators = q.generator_count();
    v.relators = q.relators().size();
    const Word& mu = *q.meridian();

    auto record_order = [&] {
        if (!opts.record_order) return;
        auto order = todd_coxeter(q, {}, opts.limits);
        v.enumerations.push_back(order.stats());
        if (order.complete()) v.group_order = order.index();
    };

    auto by_meridian = todd_coxeter(q, {mu}, opts.limits);
    v.enumerations.push_back(by_meridian.stats());
    if (by_meridian.complete()) {
        v.meridian_index = by_meridian.index();
        if (by_meridian.index() == 1) {
            v.kind = VerdictKind::CertifiedCyclic;
            v.witness = Witness::MeridianIndex;
            v.group_order = static_cast<std::size_t>(d);
            return v;
        }
        if (v.meridian_generates_abelianization) {
            v.kind = VerdictKind::CertifiedNonCyclic;
            v.witness = Witness::MeridianIndex;
            record_order();
            return v;
        }
    } else if (timed_out(by_meridian)) {
        v.timed_out = true;
        return v;
    }

    std::optional<GroupPresentation> reduced;
    if (!central.empty()) {
        reduced = tietze_simplify(quotient(q, central), topts);
        auto r = todd_coxeter(*reduced, {*reduced->meridian()}, opts.limits);
        v.enumerations.push_back(r.stats());
        if (r.complete()) {
            v.central_quotient_index = r.index();
            if (r.index() == 1) {
                v.kind = VerdictKind::CertifiedCyclic;
                v.witness = Witness::CentralQuotientIndex;
                v.group_order = static_cast<std::size_t>(d);
                return v;
            }
            if (v.meridian_generates_abelianization) {
                v.kind = VerdictKind::CertifiedNonCyclic;
                v.witness = Witness::CentralQuotientIndex;
                return v;
            }
        } else if (timed_out(r)) {
            v.timed_out = true;
            return v;
        }
    }

    if (v.meridian_generates_abelianization && opts.low_index.max_index >= 2) {
        const GroupPresentation& target = reduced ? *reduced : q;
        if (auto a = find_proper_subgroup_action(target, {*target.meridian()}, opts.low_index)) {
            v.kind = VerdictKind::CertifiedNonCyclic;
            v.witness = Witness::PermutationAction;
            v.action = std::move(a);
            v.action_presentation = target;
            return v;
        }
    }

    if (opts.limits.deadline && std::chrono::steady_clock::now() >= *opts.limits.deadline) {
        v.timed_out = true;
        return v;
    }
    auto order = todd_coxeter(q, {}, opts.limits);
    v.enumerations.push_back(order.stats());
    if (order.complete()) {
        v.group_order = order.index();
        v.kind = order.index() == static_cast<std::size_t>(d) ? VerdictKind::CertifiedCyclic
                                                               : VerdictKind::CertifiedNonCyclic;
        v.witness = Witness::GroupOrder;
        return v;
    }
    v.timed_out = order.overflow().timed_out;
    return v;
}

CyclicityVerdict certify_cyclic(const GroupPresentation& p, long d, std::size_t max_cosets) {
    CertifyOptions o;
    o.limits.max_cosets = max_cosets;
    return certify_cyclic(p, d, o);
}

}  // namespace rimsurg
