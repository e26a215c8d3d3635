#include "otn/json_io.hpp"

#include <stdexcept>

namespace otn {

Json printed(const std::vector<Term>& ts) {
    Json a = Json::array();
    for (Term t : ts) a.push_back(print(t));
    return a;
}

Json to_json(Term t) {
    switch (t.kind()) {
    case Kind::Zero: return {{"k", "0"}};
    case Kind::Stable: return {{"k", "S"}};
    case Kind::Sum: {
        Json c = Json::array();
        for (Term s : t.summands()) c.push_back(to_json(s));
        return {{"k", "sum"}, {"c", c}};
    }
    case Kind::Phi: return {{"k", "phi"}, {"c", {to_json(t.phi_b()), to_json(t.phi_g())}}};
    case Kind::Omega:
        switch (t.om_kind()) {
        case OmKind::One: return {{"k", "om"}, {"i", "1"}};
        case OmKind::Stable: return {{"k", "om"}, {"i", "S"}, {"n", t.om_offset()}};
        case OmKind::Kappa: return {{"k", "om"}, {"i", to_json(t.om_base())}, {"n", t.om_offset()}};
        }
        break;
    case Kind::Psi:
        return {{"k", "psi"}, {"c", {to_json(t.psi_pi()), to_json(t.psi_arg())}}, {"f", to_json(t.psi_fn())}};
    }
    throw std::logic_error("unknown node");
}

Json to_json(const FiniteFn& f) {
    Json a = Json::array();
    for (const auto& e : f.entries) a.push_back({to_json(e.arg), to_json(e.val)});
    return a;
}

FiniteFn fn_from_json(const Json& j) {
    FiniteFn f;
    for (const auto& p : j) f.entries.push_back({term_from_json(p.at(0)), term_from_json(p.at(1))});
    return f;
}

Term term_from_json(const Json& j) {
    const std::string k = j.at("k").get<std::string>();
    if (k == "0") return zero();
    if (k == "S") return stable();
    if (k == "sum") {
        std::vector<Term> parts;
        for (const auto& c : j.at("c")) parts.push_back(term_from_json(c));
        return make_sum(std::move(parts));
    }
    if (k == "phi") return make_phi(term_from_json(j.at("c").at(0)), term_from_json(j.at("c").at(1)));
    if (k == "om") {
        const Json& i = j.at("i");
        if (i.is_string() && i.get<std::string>() == "1") return omega_one();
        if (i.is_string() && i.get<std::string>() == "S") return omega_stable(j.at("n").get<int>());
        return omega_kappa(term_from_json(i), j.at("n").get<int>());
    }
    if (k == "psi") {
        FiniteFn f = j.contains("f") ? fn_from_json(j.at("f")) : FiniteFn{};
        return make_psi(term_from_json(j.at("c").at(0)), term_from_json(j.at("c").at(1)), std::move(f));
    }
    throw std::invalid_argument("unknown term tag " + k);
}

Json to_json(const Tnf& x) {
    Json a = Json::array();
    for (const auto& e : x.entries) a.push_back({to_json(e.b), to_json(e.xi), to_json(e.coeff)});
    return a;
}

Json to_json(const Verdict& v) {
    Json m = Json::array();
    for (const auto& e : v.m.entries) m.push_back({print(e.arg), print(e.val)});
    Json j = {{"accepted", v.accepted}, {"clause", v.clause}, {"m", m}};
    if (!v.reason.empty()) j["reason"] = v.reason;
    return j;
}

Json to_json(const KResult& k) {
    if (k.top) return {{"top", true}};
    return {{"top", false}, {"set", printed(k.elems)}};
}

Json to_json(const Universe& u, bool with_terms) {
    Json j = {{"n", u.n_param}, {"max_len", u.max_len}, {"count", u.terms.size()}, {"candidates", u.candidates}};
    if (with_terms) j["terms"] = printed(u.terms);
    return j;
}

Json to_json(const DistinguishedReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"alpha", print(c.alpha)},
                          {"alpha_plus", c.alpha_plus ? Json(print(*c.alpha_plus)) : Json("inf")},
                          {"equal", c.equal()},
                          {"missing", printed(c.missing)},
                          {"extra", printed(c.extra)}});
    return {{"all_equal", r.all_equal}, {"checks", checks}, {"truncated_universe", r.caveat}};
}

Json to_json(const CascadeReport& r) {
    Json levels = Json::array();
    for (const auto& l : r.levels)
        levels.push_back({{"n", l.n}, {"W", printed(l.w)}, {"C_count", l.c.size()}});
    return {{"ok", r.ok()}, {"levels", levels}, {"violations", r.violations}, {"truncated_universe", r.caveat}};
}

}  // namespace otn
