#include "otn/theta.hpp"

#include <string>

namespace otn {

namespace {

bool is_fixed_for(const System& sys, Term b, Term g) {
    if (g.is(Kind::Phi)) return compare(sys, g.phi_b(), b) == Ord::GT;
    if (is_atom(g)) return compare(sys, b, g) == Ord::LT;
    return false;
}

}  // namespace

Term add(const System& sys, Term a, Term b) {
    std::vector<Term> rhs = summands_of(b);
    if (rhs.empty()) return a;
    std::vector<Term> lhs = summands_of(a);
    while (!lhs.empty() && lt(sys, lhs.back(), rhs.front())) lhs.pop_back();
    lhs.insert(lhs.end(), rhs.begin(), rhs.end());
    return make_sum(std::move(lhs));
}

Term succ(const System& sys, Term a) { return add(sys, a, one()); }

Term omega_pow(const System& sys, Term e) {
    if (is_atom(e)) return e;
    if (e.is(Kind::Phi) && !e.phi_b().is_zero()) return e;
    (void)sys;
    return make_phi(zero(), e);
}

Term phi_nf(const System& sys, Term b, Term g) {
    if (b.is_zero()) return omega_pow(sys, g);
    if (is_fixed_for(sys, b, g)) return g;
    if (g.is_zero() && is_atom(b)) return b;
    return make_phi(b, g);
}

Term exp_of(Term p) {
    if (p.is(Kind::Phi) && p.phi_b().is_zero()) return p.phi_g();
    if (!is_principal(p)) throw ShapeError("not additively principal: " + print(p));
    return p;
}

Term times_principal(const System& sys, Term p, Term x) {
    Term e = exp_of(p);
    std::vector<Term> out;
    for (Term s : summands_of(x)) out.push_back(omega_pow(sys, add(sys, e, exp_of(s))));
    return make_sum(std::move(out));
}

Term omega_times(const System& sys, Term x) { return times_principal(sys, omega(), x); }

Term lambda_times(const System& sys, Term x) { return times_principal(sys, sys.lambda(), x); }

Term osub(const System& sys, Term alpha, Term beta) {
    std::vector<Term> as = summands_of(alpha), bs = summands_of(beta);
    std::size_t i = 0;
    while (i < as.size() && i < bs.size() && as[i] == bs[i]) ++i;
    if (i < bs.size()) {
        if (i == as.size() || compare(sys, bs[i], as[i]) == Ord::GT)
            throw OrderError("cannot subtract " + print(beta) + " from " + print(alpha));
    }
    return make_sum(std::vector<Term>(as.begin() + static_cast<long>(i), as.end()));
}

Term theta_term(const System& sys, Term b, Term xi) {
    std::vector<Term> levels = summands_of(b);
    Term v = xi;
    for (auto it = levels.rbegin(); it != levels.rend(); ++it)
        v = phi_nf(sys, exp_of(*it), lambda_times(sys, v));
    return v;
}

namespace {

// Split e = lambda * zeta + r with r < lambda.
void split_exponent(const System& sys, Term e, Term& zeta, Term& r) {
    std::vector<Term> hi, lo;
    for (Term s : summands_of(e)) {
        if (lt(sys, s, sys.lambda()))
            lo.push_back(s);
        else
            hi.push_back(omega_pow(sys, osub(sys, exp_of(s), sys.lambda())));
    }
    zeta = make_sum(std::move(hi));
    r = make_sum(std::move(lo));
}

// lambda^zeta as a single entry (b, xi)
void power_entry(const System& sys, Term zeta, Term& b, Term& xi) {
    bool eps_above = zeta.is(Kind::Phi) && !zeta.phi_b().is_zero() &&
                     compare(sys, zeta, sys.lambda()) == Ord::GT;
    if (!eps_above) {
        b = one();
        xi = zeta;
        return;
    }
    Term level = zeta.phi_b();
    if (!lt(sys, level, sys.lambda()))
        throw RangeError("Veblen level not below Lambda in " + print(zeta));
    std::vector<Term> eta;
    for (Term s : summands_of(zeta.phi_g())) {
        Term e = exp_of(s);
        if (lt(sys, e, sys.lambda()))
            throw RangeError("no theta normal form for " + print(zeta));
        eta.push_back(omega_pow(sys, osub(sys, e, sys.lambda())));
    }
    Term arg = make_sum(std::move(eta));
    if (phi_nf(sys, level, lambda_times(sys, arg)) != zeta || !lt(sys, arg, zeta))
        throw RangeError("no theta normal form for " + print(zeta));
    b = omega_pow(sys, level);
    xi = arg;
}

}  // namespace

Tnf to_tnf(const System& sys, Term t) {
    Tnf out;
    for (Term s : summands_of(t)) {
        if (!is_principal(s)) throw RangeError("malformed summand in " + print(t));
        Term zeta, r;
        split_exponent(sys, exp_of(s), zeta, r);
        Term piece = omega_pow(sys, r);
        Term b, xi;
        power_entry(sys, zeta, b, xi);
        if (!out.empty() && out.entries.back().b == b && out.entries.back().xi == xi) {
            out.entries.back().coeff = add(sys, out.entries.back().coeff, piece);
            continue;
        }
        out.entries.push_back({b, xi, piece});
    }
    return out;
}

Term from_tnf(const System& sys, const Tnf& x) {
    Term v = zero();
    for (const auto& e : x.entries)
        v = add(sys, v, times_principal(sys, theta_term(sys, e.b, e.xi), e.coeff));
    return v;
}

bool decomposable(const System& sys, Term t) {
    try {
        to_tnf(sys, t);
        return true;
    } catch (const RangeError&) {
        return false;
    }
}

bool coeff_condition(const Tnf& x) {
    for (std::size_t i = 0; i + 1 < x.entries.size(); ++i)
        if (x.entries[i].coeff != one()) return false;
    if (x.empty()) return true;
    const TnfEntry& low = x.entries.back();
    return low.coeff == one() || low.b == one();
}

Tnf theta(const System& sys, Term b, const Tnf& xi) {
    return to_tnf(sys, theta_term(sys, b, from_tnf(sys, xi)));
}

Term theta_minus_term(const System& sys, Term c, Term zeta) {
    if (zeta.is_zero()) return zero();
    Tnf z = to_tnf(sys, zeta);
    if (z.size() != 1 || z.entries[0].coeff != one())
        throw ShapeError("theta_minus needs a single principal entry: " + print(zeta));
    Term b = z.entries[0].b, xi = z.entries[0].xi;
    if (!lt(sys, b, c)) return theta_term(sys, osub(sys, b, c), xi);
    if (xi.is_zero()) return zero();
    return theta_minus_term(sys, osub(sys, c, b), head_term(sys, xi));
}

Tnf theta_minus(const System& sys, Term c, const Tnf& zeta) {
    return to_tnf(sys, theta_minus_term(sys, c, from_tnf(sys, zeta)));
}

Tnf head(const Tnf& x) {
    if (x.empty()) throw ZeroError("head of 0");
    TnfEntry e = x.entries.front();
    e.coeff = one();
    return Tnf{{e}};
}

Tnf tail(const Tnf& x) {
    if (x.empty()) throw ZeroError("tail of 0");
    TnfEntry e = x.entries.back();
    e.coeff = one();
    return Tnf{{e}};
}

std::vector<Tnf> parts(const Tnf& x) {
    std::vector<Tnf> out;
    for (std::size_t k = 0; k <= x.size(); ++k)
        out.push_back(Tnf{std::vector<TnfEntry>(x.entries.begin(), x.entries.begin() + static_cast<long>(k))});
    return out;
}

Term head_term(const System& sys, Term t) { return from_tnf(sys, head(to_tnf(sys, t))); }
Term tail_term(const System& sys, Term t) { return from_tnf(sys, tail(to_tnf(sys, t))); }

std::vector<Term> parts_terms(const System& sys, Term t) {
    std::vector<Term> out;
    for (const Tnf& p : parts(to_tnf(sys, t))) out.push_back(from_tnf(sys, p));
    return out;
}

Term a_measure_term(const System& sys, Term t) {
    Term v = zero();
    for (const auto& e : to_tnf(sys, t).entries) {
        Term p = theta_term(sys, e.b, omega_times(sys, a_measure_term(sys, e.xi)));
        v = add(sys, v, times_principal(sys, p, e.coeff));
    }
    return v;
}

Tnf a_measure(const System& sys, const Tnf& x) {
    return to_tnf(sys, a_measure_term(sys, from_tnf(sys, x)));
}

bool below_plus_omega(const System& sys, Term x, Term base, Term t) {
    if (!is_principal(t)) throw ShapeError("bound step is not additively principal: " + print(t));
    Term bound = add(sys, base, omega_pow(sys, succ(sys, exp_of(t))));
    return lt(sys, x, bound);
}

}  // namespace otn
