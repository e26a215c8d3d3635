#include "otn/order.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "otn/fn_calc.hpp"
#include "otn/theta.hpp"

namespace otn {

struct Caches {
    std::mutex mu;
    std::unordered_map<std::uint64_t, Ord> cmp;
    std::unordered_map<std::uint32_t, Verdict> verdicts;
};

System::System(int n) : n_(n), lambda_(omega_stable(n)), caches_(std::make_shared<Caches>()) {
    if (n < 1) throw IndexError("N must be positive");
}

const char* ord_symbol(Ord o) {
    switch (o) {
    case Ord::LT: return "<";
    case Ord::EQ: return "=";
    case Ord::GT: return ">";
    }
    return "?";
}

// ---------------------------------------------------------------- K sets

void KResult::merge(const KResult& o) {
    if (top) return;
    if (o.top) {
        top = true;
        elems.clear();
        return;
    }
    for (Term t : o.elems)
        if (std::find(elems.begin(), elems.end(), t) == elems.end()) elems.push_back(t);
}

bool KResult::below(const System& sys, Term gamma) const {
    if (top) return false;
    return std::all_of(elems.begin(), elems.end(), [&](Term t) { return lt(sys, t, gamma); });
}

namespace {

bool base_regular(Term pi) {
    return pi.is(Kind::Stable) || (pi.is(Kind::Omega) && pi.om_kind() != OmKind::Kappa);
}

KResult k_rec(const System& sys, const Membership& X, Term t) {
    KResult r;
    switch (t.kind()) {
    case Kind::Zero:
    case Kind::Stable: return r;
    case Kind::Omega:
        if (t.om_kind() != OmKind::Kappa || X(t)) return r;
        return KResult::Top();
    case Kind::Sum:
        for (Term s : t.summands()) r.merge(k_rec(sys, X, s));
        return r;
    case Kind::Phi:
        r.merge(k_rec(sys, X, t.phi_b()));
        r.merge(k_rec(sys, X, t.phi_g()));
        return r;
    case Kind::Psi: break;
    }
    if (X(t)) return r;
    const FiniteFn& f = t.psi_fn();
    if (f.empty() && !base_regular(t.psi_pi())) return KResult::Top();
    r.elems.push_back(t.psi_arg());
    r.merge(k_rec(sys, X, t.psi_arg()));
    r.merge(k_rec(sys, X, t.psi_pi()));
    for (Term y : f.k_set()) r.merge(k_rec(sys, X, y));
    return r;
}

// K_X(t) < gamma without materializing the set
bool k_rec_below(const System& sys, const Membership& X, Term t, Term gamma) {
    switch (t.kind()) {
    case Kind::Zero:
    case Kind::Stable: return true;
    case Kind::Omega: return t.om_kind() != OmKind::Kappa || X(t);
    case Kind::Sum:
        for (Term s : t.summands())
            if (!k_rec_below(sys, X, s, gamma)) return false;
        return true;
    case Kind::Phi: return k_rec_below(sys, X, t.phi_b(), gamma) && k_rec_below(sys, X, t.phi_g(), gamma);
    case Kind::Psi: break;
    }
    if (X(t)) return true;
    const FiniteFn& f = t.psi_fn();
    if (f.empty() && !base_regular(t.psi_pi())) return false;
    if (!lt(sys, t.psi_arg(), gamma)) return false;
    if (!k_rec_below(sys, X, t.psi_arg(), gamma)) return false;
    if (!k_rec_below(sys, X, t.psi_pi(), gamma)) return false;
    for (Term y : f.k_set())
        if (!k_rec_below(sys, X, y, gamma)) return false;
    return true;
}

Membership below_pred(const System& sys, Term delta) {
    return [&sys, delta](Term b) { return lt(sys, b, delta); };
}

}  // namespace

KResult k_set(const System& sys, const Membership& X, Term alpha) { return k_rec(sys, X, alpha); }

KResult k_below(const System& sys, Term delta, Term alpha) { return k_rec(sys, below_pred(sys, delta), alpha); }

bool in_hull(const System& sys, Term alpha, Term gamma, const Membership& X) {
    return k_rec_below(sys, X, alpha, gamma);
}

bool in_hull_below(const System& sys, Term alpha, Term gamma, Term delta) {
    return k_rec_below(sys, below_pred(sys, delta), alpha, gamma);
}

// ---------------------------------------------------------------- compare

namespace {

// constant layers: Om(1) < Om(kappa+n) < S < Om(S+n)
int layer(Term t) {
    if (t.is(Kind::Stable)) return 2;
    switch (t.om_kind()) {
    case OmKind::One: return 0;
    case OmKind::Kappa: return 1;
    case OmKind::Stable: return 3;
    }
    return 0;
}

Ord cmp_int(int a, int b) { return a < b ? Ord::LT : (a > b ? Ord::GT : Ord::EQ); }

Ord cmp_constants(const System& sys, Term a, Term b) {
    Ord o = cmp_int(layer(a), layer(b));
    if (o != Ord::EQ) return o;
    if (layer(a) == 1) {
        o = compare(sys, a.om_base(), b.om_base());
        if (o != Ord::EQ) return o;
    }
    return cmp_int(a.om_offset(), b.om_offset());
}

Ord cmp_psi_constant(const System& sys, Term psi, Term r) {
    if (compare(sys, psi.psi_pi(), r) != Ord::GT) return Ord::LT;
    if (r.is(Kind::Omega) && r.om_kind() == OmKind::Kappa)
        return compare(sys, psi, r.om_base()) == Ord::GT ? Ord::GT : Ord::LT;
    return Ord::GT;
}

bool all_in_hull(const System& sys, const std::vector<Term>& xs, Term gamma, Term delta) {
    return std::all_of(xs.begin(), xs.end(), [&](Term x) { return in_hull_below(sys, x, gamma, delta); });
}

bool lx_or_false(const System& sys, const FiniteFn& f, const FiniteFn& g) {
    try {
        return lx_less(sys, f, g, zero());
    } catch (const std::runtime_error&) {
        return false;
    }
}

// psi_pi^f(b) < psi_kappa^g(a), given rhs < pi and lhs < kappa
bool psi_less(const System& sys, Term lhs, Term rhs) {
    Term pi = lhs.psi_pi(), b = lhs.psi_arg();
    Term kappa = rhs.psi_pi(), a = rhs.psi_arg();
    const FiniteFn &f = lhs.psi_fn(), &g = rhs.psi_fn();
    Ord ab = compare(sys, b, a);
    if (ab == Ord::LT) {
        if (!lt(sys, lhs, kappa)) return false;
        std::vector<Term> xs = f.k_set();
        xs.push_back(pi);
        xs.push_back(b);
        return all_in_hull(sys, xs, a, rhs);
    }
    if (ab == Ord::GT) {
        std::vector<Term> ys = g.k_set();
        ys.push_back(kappa);
        ys.push_back(a);
        return !all_in_hull(sys, ys, b, lhs);
    }
    Ord pk = compare(sys, kappa, pi);
    if (pk == Ord::LT) return !in_hull_below(sys, kappa, b, lhs);
    if (pk == Ord::GT) return false;
    if (all_in_hull(sys, f.k_set(), a, rhs) && lx_or_false(sys, f, g)) return true;
    return !all_in_hull(sys, g.k_set(), b, lhs);
}

Ord cmp_atoms(const System& sys, Term a, Term b) {
    bool pa = a.is(Kind::Psi), pb = b.is(Kind::Psi);
    if (!pa && !pb) return cmp_constants(sys, a, b);
    if (pa && !pb) return cmp_psi_constant(sys, a, b);
    if (!pa && pb) return flip(cmp_psi_constant(sys, b, a));
    if (compare(sys, a.psi_pi(), b) != Ord::GT) return Ord::LT;
    if (compare(sys, b.psi_pi(), a) != Ord::GT) return Ord::GT;
    if (canonical_before(a, b)) return psi_less(sys, a, b) ? Ord::LT : Ord::GT;
    return psi_less(sys, b, a) ? Ord::GT : Ord::LT;
}

Ord cmp_phi_atom(const System& sys, Term phi, Term atom) {
    return lt(sys, phi.phi_b(), atom) && lt(sys, phi.phi_g(), atom) ? Ord::LT : Ord::GT;
}

Ord cmp_principal(const System& sys, Term x, Term y) {
    bool px = x.is(Kind::Phi), py = y.is(Kind::Phi);
    if (!px && !py) return cmp_atoms(sys, x, y);
    if (px && !py) return cmp_phi_atom(sys, x, y);
    if (!px && py) return flip(cmp_phi_atom(sys, y, x));
    Term b1 = x.phi_b(), g1 = x.phi_g(), b2 = y.phi_b(), g2 = y.phi_g();
    switch (compare(sys, b1, b2)) {
    case Ord::LT: return lt(sys, g1, y) ? Ord::LT : Ord::GT;
    case Ord::EQ: return compare(sys, g1, g2);
    case Ord::GT: return lt(sys, x, g2) ? Ord::LT : Ord::GT;
    }
    return Ord::EQ;
}

Ord compare_raw(const System& sys, Term a, Term b) {
    if (a.is_zero()) return Ord::LT;
    if (b.is_zero()) return Ord::GT;
    if (a.is(Kind::Sum) || b.is(Kind::Sum)) {
        std::vector<Term> xs = summands_of(a), ys = summands_of(b);
        for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
            Ord o = compare(sys, xs[i], ys[i]);
            if (o != Ord::EQ) return o;
        }
        return cmp_int(static_cast<int>(xs.size()), static_cast<int>(ys.size()));
    }
    return cmp_principal(sys, a, b);
}

}  // namespace

Ord compare(const System& sys, Term a, Term b) {
    if (a == b) return Ord::EQ;
    bool swapped = a.id() > b.id();
    if (swapped) std::swap(a, b);
    std::uint64_t key = (static_cast<std::uint64_t>(a.id()) << 32) | b.id();
    Caches& c = sys.caches();
    {
        std::lock_guard<std::mutex> lock(c.mu);
        auto it = c.cmp.find(key);
        if (it != c.cmp.end()) return swapped ? flip(it->second) : it->second;
    }
    Ord r = compare_raw(sys, a, b);
    // distinct terms never denote the same value
    if (r == Ord::EQ) r = canonical_before(a, b) ? Ord::LT : Ord::GT;
    {
        std::lock_guard<std::mutex> lock(c.mu);
        c.cmp.emplace(key, r);
    }
    return swapped ? flip(r) : r;
}

void sort_terms(const System& sys, std::vector<Term>& ts) {
    std::sort(ts.begin(), ts.end(), [&](Term x, Term y) { return lt(sys, x, y); });
}

void sort_unique(const System& sys, std::vector<Term>& ts) {
    sort_terms(sys, ts);
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
}

// ---------------------------------------------------------------- classes

bool is_regular(Term t) {
    return t.is(Kind::Stable) || t.is(Kind::Omega) || (t.is(Kind::Psi) && !t.psi_fn().empty());
}

bool in_psi_class(const System& sys, Term t) {
    return t.is(Kind::Psi) && !t.psi_fn().empty() && is_valid(sys, t);
}


bool below_gamma_succ(const System& sys, Term a, Term beta) {
    if (le(sys, a, beta)) return true;
    switch (a.kind()) {
    case Kind::Zero: return true;
    case Kind::Sum:
        return std::all_of(a.summands().begin(), a.summands().end(),
                           [&](Term s) { return below_gamma_succ(sys, s, beta); });
    case Kind::Phi: return below_gamma_succ(sys, a.phi_b(), beta) && below_gamma_succ(sys, a.phi_g(), beta);
    default: return false;
    }
}

std::vector<Term> e_below_S(const System& sys, Term t) {
    std::vector<Term> out;
    auto add_all = [&](const std::vector<Term>& xs) {
        for (Term x : xs)
            if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    };
    switch (t.kind()) {
    case Kind::Zero:
    case Kind::Stable: break;
    case Kind::Omega:
        if (t.om_kind() == OmKind::Kappa) out.push_back(t);
        break;
    case Kind::Sum:
        for (Term s : t.summands()) add_all(e_below_S(sys, s));
        break;
    case Kind::Phi:
        add_all(e_below_S(sys, t.phi_b()));
        add_all(e_below_S(sys, t.phi_g()));
        break;
    case Kind::Psi:
        if (!t.psi_fn().empty() || le(sys, t.psi_pi(), stable()))
            out.push_back(t);
        else
            add_all(e_below_S(sys, t.psi_arg()));
        break;
    }
    return out;
}

std::optional<Term> next_regular(const System& sys, Term alpha, const std::vector<Term>* universe) {
    if (lt(sys, alpha, omega_one())) return omega_one();
    if (!lt(sys, alpha, stable())) {
        for (int m = 1; m <= sys.n(); ++m)
            if (lt(sys, alpha, omega_stable(m))) return omega_stable(m);
        return std::nullopt;
    }
    std::optional<Term> best = stable();
    auto consider = [&](Term r) {
        if (lt(sys, alpha, r) && lt(sys, r, *best)) best = r;
    };
    if (alpha.is(Kind::Omega) && alpha.om_kind() == OmKind::Kappa && alpha.om_offset() < sys.n())
        consider(omega_kappa(alpha.om_base(), alpha.om_offset() + 1));
    if (universe)
        for (Term r : *universe)
            if (is_regular(r)) consider(r);
    return best;
}

// ---------------------------------------------------------------- validate

namespace {

Verdict accept(const char* clause, FiniteFn m = {}) {
    Verdict v;
    v.accepted = true;
    v.clause = clause;
    v.m = std::move(m);
    return v;
}

Verdict reject(const char* clause, std::string reason) {
    Verdict v;
    v.clause = clause;
    v.reason = std::move(reason);
    return v;
}

bool sub_ok(const System& sys, Term s, const char* clause, Verdict& out) {
    Verdict v = validate(sys, s);
    if (v.accepted) return true;
    out = reject(clause, "component " + print(s) + " rejected (clause " + v.clause + ": " + v.reason + ")");
    return false;
}

bool phi_fixed(const System& sys, Term b, Term g) {
    if (g.is(Kind::Phi)) return lt(sys, b, g.phi_b());
    if (is_atom(g)) return lt(sys, b, g);
    return false;
}

// entries ascending, values nonzero, components valid, finite-function coefficient shape
bool fn_ok(const System& sys, const FiniteFn& f, const char* clause, Verdict& out) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        const FnEntry& e = f.entries[i];
        if (i > 0 && !lt(sys, f.entries[i - 1].arg, e.arg)) {
            out = reject(clause, "degree arguments not strictly ascending");
            return false;
        }
        if (e.val.is_zero()) {
            out = reject(clause, "degree value 0 at " + print(e.arg));
            return false;
        }
        if (!sub_ok(sys, e.arg, clause, out) || !sub_ok(sys, e.val, clause, out)) return false;
        if (!lt(sys, e.arg, sys.lambda())) {
            out = reject(clause, "degree argument " + print(e.arg) + " not below Om(S+N)");
            return false;
        }
        try {
            if (!coeff_condition(to_tnf(sys, e.val))) {
                out = reject(clause, "coefficient condition fails for " + print(e.val));
                return false;
            }
        } catch (const RangeError&) {
            out = reject(clause, "no theta normal form for " + print(e.val));
            return false;
        }
    }
    return true;
}

Verdict validate_psi(const System& sys, Term t) {
    Term pi = t.psi_pi(), a = t.psi_arg();
    const FiniteFn& g = t.psi_fn();
    Verdict out;
    if (g.empty()) {
        if (!sub_ok(sys, pi, "5", out) || !sub_ok(sys, a, "5", out)) return out;
        if (!is_regular(pi)) return reject("5", print(pi) + " is not a regular term");
        if (!in_hull_below(sys, pi, a, t) || !in_hull_below(sys, a, a, t))
            return reject("5", "K_alpha(pi,a) < a fails");
        if (pi.is(Kind::Omega) && pi.om_kind() == OmKind::Kappa &&
            !below_gamma_succ(sys, a, omega_kappa(pi.om_base(), sys.n())))
            return reject("5", "argument not below Gamma_{Om(kappa+N)+1}");
        return accept("5");
    }
    if (pi.is(Kind::Stable)) {
        if (g.size() != 1) return reject("6", "psi_S needs a singleton degree function");
        if (!fn_ok(sys, g, "6", out) || !sub_ok(sys, a, "6", out)) return out;
        Term c = g.entries[0].arg, xi = g.entries[0].val;
        if (!in_hull_below(sys, xi, a, t) || !in_hull_below(sys, a, a, t) || !in_hull_below(sys, c, a, t))
            return reject("6", "K_alpha(xi,a,c) < a fails");
        return accept("6", g);
    }
    if (!sub_ok(sys, pi, "7", out) || !sub_ok(sys, a, "7", out)) return out;
    if (!in_psi_class(sys, pi)) return reject("7", print(pi) + " is not in Psi_N");
    if (!fn_ok(sys, g, "7", out)) return out;
    const FiniteFn& f = pi.psi_fn();
    std::vector<Term> cands{zero()};
    for (const FiniteFn* h : {&f, &g})
        for (const auto& e : h->entries)
            if (std::find(cands.begin(), cands.end(), e.arg) == cands.end()) cands.push_back(e.arg);
    bool found = false;
    for (const auto& ce : f.entries) {
        for (Term d : cands)
            if (lt(sys, d, ce.arg) && step_down_ok(sys, f, g, d, ce.arg)) {
                found = true;
                break;
            }
        if (found) break;
    }
    if (!found) return reject("7", "no admissible step-down from m(pi)");
    std::vector<Term> ks = f.k_set();
    for (Term y : g.k_set()) ks.push_back(y);
    ks.push_back(pi);
    ks.push_back(a);
    for (Term y : ks)
        if (!in_hull_below(sys, y, a, t)) return reject("7", "K_alpha(pi,a) u K_alpha(K(f) u K(g)) < a fails");
    for (Term y : g.k_set())
        for (Term e : e_below_S(sys, y))
            if (!lt(sys, e, t)) return reject("7", "E_S(K(g)) < alpha fails at " + print(e));
    return accept("7", g);
}

Verdict validate_raw(const System& sys, Term t) {
    Verdict out;
    switch (t.kind()) {
    case Kind::Zero:
    case Kind::Stable: return accept("1");
    case Kind::Omega:
        if (t.om_kind() == OmKind::One) return accept("1");
        if (t.om_offset() < 1 || t.om_offset() > sys.n())
            return reject(t.om_kind() == OmKind::Kappa ? "4" : "1", "offset outside 1..N");
        if (t.om_kind() == OmKind::Stable) return accept("1");
        if (!in_psi_class(sys, t.om_base())) return reject("4", print(t.om_base()) + " is not in Psi_N");
        return accept("4");
    case Kind::Sum: {
        const auto& ss = t.summands();
        if (ss.size() < 2) return reject("2", "sum with fewer than two summands");
        for (std::size_t i = 0; i < ss.size(); ++i) {
            if (!is_principal(ss[i])) return reject("2", "summand " + print(ss[i]) + " is not additively principal");
            if (!sub_ok(sys, ss[i], "2", out)) return out;
            if (i > 0 && lt(sys, ss[i - 1], ss[i])) return reject("2", "summands not weakly descending");
        }
        return accept("2");
    }
    case Kind::Phi: {
        Term b = t.phi_b(), g = t.phi_g();
        if (!sub_ok(sys, b, "3", out) || !sub_ok(sys, g, "3", out)) return out;
        if (phi_fixed(sys, b, g)) return reject("3", print(g) + " is a fixed point of phi_" + print(b));
        if (g.is_zero() && is_atom(b)) return reject("3", "phi(" + print(b) + ",0) collapses to " + print(b));
        return accept("3");
    }
    case Kind::Psi: return validate_psi(sys, t);
    }
    return reject("1", "unknown node");
}

}  // namespace

bool is_phi_normal(const System& sys, Term b, Term g) { return !phi_fixed(sys, b, g) && !(g.is_zero() && is_atom(b)); }

Verdict validate(const System& sys, Term t) {
    Caches& c = sys.caches();
    {
        std::lock_guard<std::mutex> lock(c.mu);
        auto it = c.verdicts.find(t.id());
        if (it != c.verdicts.end()) return it->second;
    }
    Verdict v;
    try {
        v = validate_raw(sys, t);
    } catch (const std::runtime_error& e) {
        v = reject("?", e.what());
    }
    {
        std::lock_guard<std::mutex> lock(c.mu);
        c.verdicts.emplace(t.id(), v);
    }
    return v;
}

}  // namespace otn
