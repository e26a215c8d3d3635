#include "otn/coeff.hpp"

#include <algorithm>
#include <functional>

namespace otn {

std::optional<Term> pd(Term t) {
    if (t.is(Kind::Psi)) return t.psi_pi();
    return std::nullopt;
}

bool prec(Term pi, Term kappa) {
    for (std::optional<Term> x = pd(pi); x; x = pd(*x))
        if (*x == kappa) return true;
    return false;
}

bool preceq(Term pi, Term kappa) { return pi == kappa || prec(pi, kappa); }

namespace {

void collect_e(Term t, std::vector<Term>& out) {
    switch (t.kind()) {
    case Kind::Zero:
    case Kind::Stable: return;
    case Kind::Omega:
        if (t.om_kind() == OmKind::Kappa) out.push_back(t.om_base());
        return;
    case Kind::Sum:
        for (Term s : t.summands()) collect_e(s, out);
        return;
    case Kind::Phi:
        collect_e(t.phi_b(), out);
        collect_e(t.phi_g(), out);
        return;
    case Kind::Psi: out.push_back(t); return;
    }
}

std::vector<Term> psi_parts(Term t) {
    std::vector<Term> xs{t.psi_pi(), t.psi_arg()};
    for (Term y : t.psi_fn().k_set()) xs.push_back(y);
    return xs;
}

using PsiRule = std::function<void(Term, std::vector<Term>&)>;

// lifts a rule for psi terms to all terms through E
void lift(Term t, const PsiRule& rule, std::vector<Term>& out) {
    std::vector<Term> es;
    collect_e(t, es);
    for (Term e : es) rule(e, out);
}

std::vector<Term> finish(const System& sys, std::vector<Term> v) {
    sort_unique(sys, v);
    return v;
}

}  // namespace

std::vector<Term> e_set(const System& sys, Term t) {
    std::vector<Term> out;
    collect_e(t, out);
    return finish(sys, std::move(out));
}

std::vector<Term> g_set(const System& sys, Term kappa, Term t) {
    PsiRule rule = [&](Term p, std::vector<Term>& out) {
        Term pi = p.psi_pi();
        if (preceq(pi, kappa)) {
            out.push_back(p);
        } else if (lt(sys, kappa, pi)) {
            for (Term x : psi_parts(p)) lift(x, rule, out);
        } else {
            lift(pi, rule, out);
        }
    };
    std::vector<Term> out;
    lift(t, rule, out);
    return finish(sys, std::move(out));
}

std::vector<Term> f_set(const System& sys, Term delta, Term t) {
    PsiRule rule = [&](Term p, std::vector<Term>& out) {
        if (lt(sys, p, delta)) {
            out.push_back(p);
            return;
        }
        for (Term x : psi_parts(p)) lift(x, rule, out);
    };
    std::vector<Term> out;
    lift(t, rule, out);
    return finish(sys, std::move(out));
}

std::vector<Term> k_tail(const System& sys, Term delta, Term t) {
    PsiRule rule = [&](Term p, std::vector<Term>& out) {
        if (lt(sys, p, delta)) return;
        out.push_back(p);
        for (Term x : psi_parts(p)) lift(x, rule, out);
    };
    std::vector<Term> out;
    lift(t, rule, out);
    return finish(sys, std::move(out));
}

}  // namespace otn
