#include "otn/properties.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "otn/closure_lab.hpp"
#include "otn/coeff.hpp"
#include "otn/fn_calc.hpp"
#include "otn/json_io.hpp"
#include "otn/order.hpp"
#include "otn/term.hpp"
#include "otn/theta.hpp"

namespace otn {

void SuiteResult::fail(const std::string& what) {
    ++violations;
    if (examples.size() < 8) examples.push_back(what);
}

void SuiteResult::note(const std::string& law, std::uint64_t n) { notes.push_back(law + ": " + std::to_string(n)); }

namespace {

using Clock = std::chrono::steady_clock;

struct Stopwatch {
    Clock::time_point start = Clock::now();
    double seconds() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
};

// Counts hypothesis-meeting instances of one law and reports them on destruction.
class Law {
public:
    Law(SuiteResult& r, std::string name) : r_(r), name_(std::move(name)) {}
    ~Law() {
        r_.notes.push_back(name_ + ": " + std::to_string(n_) + (bad_ ? ", " + std::to_string(bad_) + " failed" : ""));
    }
    Law(const Law&) = delete;
    Law& operator=(const Law&) = delete;

    void check(bool ok, const std::function<std::string()>& what) {
        ++n_;
        ++r_.checked;
        if (!ok) {
            ++bad_;
            r_.fail(name_ + ": " + what());
        }
    }

    // n instances of which bad fail
    void tally(std::uint64_t n, std::uint64_t bad, const std::function<std::string()>& what) {
        n_ += n;
        r_.checked += n;
        if (bad) {
            bad_ += bad;
            r_.violations += bad - 1;
            r_.fail(name_ + ": " + what() + " (" + std::to_string(bad) + " values of a)");
        }
    }

private:
    SuiteResult& r_;
    std::string name_;
    std::uint64_t n_ = 0;
    std::uint64_t bad_ = 0;
};

std::string show(const std::vector<Term>& ts) {
    std::string s = "{";
    for (std::size_t i = 0; i < ts.size(); ++i) s += (i ? ", " : "") + print(ts[i]);
    return s + "}";
}

// bit set over the ranks of a universe
using Bits = std::vector<std::uint8_t>;

Bits to_bits(const Universe& U, const std::vector<Term>& xs) {
    Bits b(U.terms.size(), 0);
    for (Term t : xs)
        if (U.contains(t)) b[U.rank(t)] = 1;
    return b;
}

std::vector<Term> from_bits(const Universe& U, const Bits& b) {
    std::vector<Term> out;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i]) out.push_back(U.terms[i]);
    return out;
}

bool bits_subset(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i]) return false;
    return true;
}

// masks the bits of terms below bound; nullopt keeps everything
Bits bits_below(const System& sys, const Universe& U, Bits b, std::optional<Term> bound) {
    if (!bound) return b;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] && !lt(sys, U.terms[i], *bound)) b[i] = 0;
    return b;
}

Bits random_bits(std::mt19937_64& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    Bits b(n, 0);
    for (auto& x : b) x = coin(rng) ? 1 : 0;
    return b;
}

// ---------------------------------------------------------------- theta pools

struct ThetaPool {
    std::vector<Term> subscripts;   // c, d and b arguments below Lambda
    std::vector<Term> principals;   // single-entry values with coefficient 1
    std::vector<Term> values;       // principals plus sums and multiples
    std::vector<Term> args;         // small arguments for composition
};

bool single_principal(const System& sys, Term t) {
    try {
        Tnf x = to_tnf(sys, t);
        return x.size() == 1 && x.entries[0].coeff == one();
    } catch (const std::runtime_error&) {
        return false;
    }
}

ThetaPool make_theta_pool(const System& sys) {
    ThetaPool p;
    Term w = omega(), two = add(sys, one(), one());
    Term w2 = omega_pow(sys, two), om1 = omega_one();
    p.subscripts = {zero(), one(), two, w, add(sys, w, one()), w2, om1, add(sys, om1, one())};
    std::vector<Term> bs{one(), w, w2, om1};
    std::vector<Term> small{zero(), one(), two, w, add(sys, w, one()), w2, om1};
    p.args = small;

    auto grow = [&](const std::vector<Term>& xis) {
        for (Term b : bs)
            for (Term xi : xis) {
                Term v = theta_term(sys, b, xi);
                if (!lt(sys, xi, v) || !single_principal(sys, v)) continue;
                if (std::find(p.principals.begin(), p.principals.end(), v) == p.principals.end())
                    p.principals.push_back(v);
            }
    };
    grow(small);
    std::vector<Term> layer1 = p.principals;
    std::vector<Term> xis2;
    for (Term v : layer1)
        if (!lt(sys, v, sys.lambda())) xis2.push_back(v);
    xis2.push_back(add(sys, layer1.front(), one()));
    grow(xis2);
    sort_unique(sys, p.principals);

    p.values = p.principals;
    p.values.push_back(zero());
    for (Term v : p.principals) {
        p.values.push_back(add(sys, v, v));
        p.values.push_back(times_principal(sys, v, w));
    }
    std::size_t lim = std::min<std::size_t>(p.principals.size(), 30);
    for (std::size_t i = 0; i < lim; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            Term hi = p.principals[i], lo = p.principals[j];
            p.values.push_back(add(sys, hi, lo));
            p.values.push_back(add(sys, add(sys, hi, lo), one()));
        }
    std::vector<Term> ok;
    for (Term v : p.values)
        if (decomposable(sys, v)) ok.push_back(v);
    sort_unique(sys, ok);
    p.values = ok;
    return p;
}

// ---------------------------------------------------------------- function pools

struct FnPool {
    std::vector<Term> points;     // candidate support points
    std::vector<Term> vals;       // candidate values
    std::vector<FiniteFn> fns;    // all functions with support within points
    std::vector<Term> targets;    // xi arguments for less_c
};

FnPool make_fn_pool(const System& sys) {
    FnPool p;
    Term w = omega(), two = add(sys, one(), one());
    p.points = {zero(), one(), w};
    Term lam = theta_term(sys, one(), one());
    p.vals = {one(),
              w,
              lam,
              add(sys, lam, one()),
              theta_term(sys, one(), two),
              theta_term(sys, one(), w),
              theta_term(sys, w, one()),
              add(sys, theta_term(sys, one(), two), lam)};
    std::vector<std::vector<FnEntry>> lists{{}};
    for (Term c : p.points) {
        std::vector<std::vector<FnEntry>> next = lists;
        for (const auto& l : lists)
            for (Term v : p.vals) {
                auto m = l;
                m.push_back({c, v});
                next.push_back(std::move(m));
            }
        lists = std::move(next);
    }
    for (auto& l : lists) p.fns.push_back(make_fn(sys, std::move(l)));

    p.targets = p.vals;
    p.targets.push_back(zero());
    p.targets.push_back(two);
    std::vector<Term> prin;
    for (Term v : p.vals)
        if (single_principal(sys, v)) prin.push_back(v);
    prin.push_back(theta_term(sys, two, one()));
    prin.push_back(theta_term(sys, one(), add(sys, lam, one())));
    sort_unique(sys, prin);
    for (std::size_t i = 0; i < prin.size(); ++i) {
        p.targets.push_back(prin[i]);
        for (std::size_t j = 0; j < i; ++j) p.targets.push_back(add(sys, prin[i], prin[j]));
    }
    sort_unique(sys, p.targets);
    return p;
}

std::string show_fn(const FiniteFn& f) { return print(f); }

Term hd_or_zero(const System& sys, Term t) { return t.is_zero() ? zero() : head_term(sys, t); }

Term first_summand(Term t) { return t.kind() == Kind::Sum ? t.summands().front() : t; }
Term last_summand(Term t) { return t.kind() == Kind::Sum ? t.summands().back() : t; }

// b + c keeps every summand of b
bool natural_sum(const System& sys, Term b, Term c) {
    return b.is_zero() || c.is_zero() || le(sys, first_summand(c), last_summand(b));
}

// theta_{-d} recovers eta from theta_d(eta); fails where Lambda * eta is a Veblen fixed point
bool theta_injective_at(const System& sys, Term d, Term eta) {
    if (d.is_zero()) return true;
    try {
        return theta_minus_term(sys, d, theta_term(sys, d, eta)) == eta;
    } catch (const std::runtime_error&) {
        return false;
    }
}

// every lift theta_{d-c}(f(d)) between support points, 0 included, is injective
bool collapse_free(const System& sys, const FiniteFn& f) {
    std::vector<Term> pts{zero()};
    for (Term c : f.support()) pts.push_back(c);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (!theta_injective_at(sys, osub(sys, pts[j], pts[i]), f.at(pts[j]))) return false;
    return true;
}

}  // namespace

// ---------------------------------------------------------------- 1 round trip

SuiteResult check_roundtrip(const std::vector<int>& ns, int max_len) {
    SuiteResult r;
    r.name = "roundtrip";
    Stopwatch sw;
    for (int n : ns) {
        System sys(n);
        Universe U = enumerate(sys, max_len);
        Law text(r, "parse(print(t)) = t, N=" + std::to_string(n));
        Law json(r, "json round trip, N=" + std::to_string(n));
        for (Term t : U.terms) {
            std::string s = print(t);
            text.check(parse(s, n) == t, [&] { return s; });
            json.check(term_from_json(Json::parse(to_json(t).dump())) == t, [&] { return s; });
        }
    }
    r.seconds = sw.seconds();
    return r;
}

// ---------------------------------------------------------------- 2 order laws

SuiteResult check_order_laws(int n, int max_len, std::uint64_t samples, std::uint64_t seed) {
    SuiteResult r;
    r.name = "order";
    Stopwatch sw;
    System sys(n);
    Universe U = enumerate(sys, max_len);
    const auto& T = U.terms;
    std::size_t m = T.size();
    std::vector<Ord> table(m * m);
    {
        Law irr(r, "irreflexive");
        Law tri(r, "trichotomy and antisymmetry");
        for (std::size_t i = 0; i < m; ++i) {
            irr.check(compare(sys, T[i], T[i]) == Ord::EQ && !lt(sys, T[i], T[i]), [&] { return print(T[i]); });
            for (std::size_t j = 0; j < m; ++j) table[i * m + j] = compare(sys, T[i], T[j]);
        }
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                Ord a = table[i * m + j], b = table[j * m + i];
                tri.check(a != Ord::EQ && b == flip(a), [&] { return print(T[i]) + " vs " + print(T[j]); });
            }
    }
    auto trans = [&](Law& law, std::size_t i, std::size_t j, std::size_t k) {
        bool ij = table[i * m + j] == Ord::LT, jk = table[j * m + k] == Ord::LT;
        if (ij && jk)
            law.check(table[i * m + k] == Ord::LT,
                      [&] { return print(T[i]) + " < " + print(T[j]) + " < " + print(T[k]); });
    };
    {
        Law law(r, "transitivity, sampled triples");
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, m - 1);
        for (std::uint64_t s = 0; s < samples; ++s) trans(law, pick(rng), pick(rng), pick(rng));
    }
    if (m <= 300) {
        Law law(r, "transitivity, all triples");
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k = 0; k < m; ++k) trans(law, i, j, k);
    } else {
        r.notes.push_back("universe has " + std::to_string(m) + " terms, exhaustive triples skipped");
    }
    {
        Law law(r, "sorted universe is strictly ascending");
        for (std::size_t i = 0; i + 1 < m; ++i)
            law.check(table[i * m + i + 1] == Ord::LT, [&] { return print(T[i]) + " , " + print(T[i + 1]); });
    }
    {
        Law law(r, "psi below its pi");
        for (Term t : T)
            if (t.is(Kind::Psi)) law.check(lt(sys, t, t.psi_pi()), [&] { return print(t); });
    }
    {
        Law law(r, "subterm of sum or phi below it");
        for (Term t : T) {
            if (t.is(Kind::Sum))
                for (Term s : t.summands()) law.check(lt(sys, s, t), [&] { return print(s) + " in " + print(t); });
            if (t.is(Kind::Phi)) {
                law.check(lt(sys, t.phi_b(), t) && lt(sys, t.phi_g(), t), [&] { return print(t); });
            }
        }
    }
    r.seconds = sw.seconds();
    return r;
}

// ---------------------------------------------------------------- 3 theta laws

SuiteResult check_theta_laws(int n) {
    SuiteResult r;
    r.name = "theta";
    Stopwatch sw;
    System sys(n);
    ThetaPool P = make_theta_pool(sys);
    std::uint64_t skipped = 0;
    auto guarded = [&](const std::function<void()>& body) {
        try {
            body();
        } catch (const RangeError&) {
            ++skipped;
        } catch (const std::exception& e) {
            r.fail(std::string("unexpected error: ") + e.what());
        }
    };

    // theta_minus table over subscripts x principals
    std::map<std::pair<std::size_t, std::size_t>, Term> tm;
    for (std::size_t ci = 0; ci < P.subscripts.size(); ++ci)
        for (std::size_t zi = 0; zi < P.principals.size(); ++zi)
            guarded([&] { tm[{ci, zi}] = theta_minus_term(sys, P.subscripts[ci], P.principals[zi]); });
    auto tmv = [&](std::size_t ci, std::size_t zi) -> std::optional<Term> {
        auto it = tm.find({ci, zi});
        if (it == tm.end()) return std::nullopt;
        return it->second;
    };

    {
        Law law(r, "theta_{-c}(z) <= z");
        for (std::size_t ci = 0; ci < P.subscripts.size(); ++ci)
            for (std::size_t zi = 0; zi < P.principals.size(); ++zi)
                if (auto v = tmv(ci, zi))
                    law.check(le(sys, *v, P.principals[zi]),
                              [&] { return print(P.subscripts[ci]) + " " + print(P.principals[zi]); });
    }
    {
        Law law(r, "z <= x implies theta_{-c}(z) <= theta_{-c}(x)");
        for (std::size_t ci = 0; ci < P.subscripts.size(); ++ci)
            for (std::size_t zi = 0; zi < P.principals.size(); ++zi)
                for (std::size_t xi = zi; xi < P.principals.size(); ++xi) {
                    auto a = tmv(ci, zi), b = tmv(ci, xi);
                    if (!a || !b) continue;
                    law.check(le(sys, *a, *b), [&] {
                        return print(P.subscripts[ci]) + " " + print(P.principals[zi]) + " " + print(P.principals[xi]);
                    });
                }
    }
    {
        Law law(r, "theta_c(theta_{-c}(z)) <= z when theta_{-c}(z) > 0");
        Law eq(r, "theta_c(theta_{-c}(z)) = z when c <= b0");
        std::uint64_t zero_branch = 0;
        for (std::size_t ci = 0; ci < P.subscripts.size(); ++ci)
            for (std::size_t zi = 0; zi < P.principals.size(); ++zi) {
                auto v = tmv(ci, zi);
                if (!v) continue;
                guarded([&] {
                    Term c = P.subscripts[ci], z = P.principals[zi];
                    Term back = theta_term(sys, c, *v);
                    auto what = [&] { return print(c) + " " + print(z) + " -> " + print(back); };
                    if (!v->is_zero())
                        law.check(le(sys, back, z), what);
                    else if (!le(sys, back, z))
                        ++zero_branch;
                    if (le(sys, c, to_tnf(sys, z).entries[0].b)) eq.check(back == z, what);
                });
            }
        r.note("zero-branch instances with theta_c(0) > z, outside the law", zero_branch);
    }
    {
        Law law(r, "theta_{-(b+c)}(z) = theta_{-c}(hd(theta_{-b}(z))) for c > 0");
        for (std::size_t bi = 0; bi < P.subscripts.size(); ++bi)
            for (std::size_t ci = 0; ci < P.subscripts.size(); ++ci) {
                Term b = P.subscripts[bi], c = P.subscripts[ci];
                if (c.is_zero()) continue;
                for (std::size_t zi = 0; zi < P.principals.size(); ++zi)
                    guarded([&] {
                        Term z = P.principals[zi];
                        Term lhs = theta_minus_term(sys, add(sys, b, c), z);
                        Term rhs = theta_minus_term(sys, c, hd_or_zero(sys, theta_minus_term(sys, b, z)));
                        law.check(lhs == rhs, [&] {
                            return "b=" + print(b) + " c=" + print(c) + " z=" + print(z) + ": " + print(lhs) +
                                   " vs " + print(rhs);
                        });
                    });
            }
    }
    {
        Law bound(r, "theta_d(eta) < z with theta_d injective at eta implies eta < theta_{-d}(z)");
        Law prin(r, "same, with d < b0: theta_{-d}(z) additively principal");
        std::uint64_t collapsed = 0, at_b0 = 0;
        std::vector<Term> etas;
        for (Term v : P.values)
            if (!v.is_zero()) etas.push_back(v);
        for (std::size_t di = 0; di < P.subscripts.size(); ++di) {
            Term d = P.subscripts[di];
            std::vector<std::optional<Term>> lifted;
            std::vector<char> injective;
            for (Term eta : etas) {
                std::optional<Term> x;
                bool inj = false;
                guarded([&] {
                    x = theta_term(sys, d, eta);
                    inj = theta_injective_at(sys, d, eta);
                });
                lifted.push_back(x);
                injective.push_back(inj ? 1 : 0);
            }
            for (std::size_t zi = 0; zi < P.principals.size(); ++zi) {
                auto down = tmv(di, zi);
                if (!down) continue;
                Term z = P.principals[zi];
                Term b0 = to_tnf(sys, z).entries[0].b;
                for (std::size_t ei = 0; ei < etas.size(); ++ei) {
                    if (!lifted[ei] || !lt(sys, *lifted[ei], z)) continue;
                    auto what = [&] {
                        return "d=" + print(d) + " eta=" + print(etas[ei]) + " z=" + print(z) + " -> " + print(*down);
                    };
                    if (!injective[ei]) {
                        if (!lt(sys, etas[ei], *down)) ++collapsed;
                        continue;
                    }
                    bound.check(lt(sys, etas[ei], *down), what);
                    if (lt(sys, d, b0))
                        prin.check(is_principal(*down), what);
                    else if (!is_principal(*down))
                        ++at_b0;
                }
            }
        }
        r.note("instances with theta_d collapsing at eta and the bound false, outside the law", collapsed);
        r.note("instances with d = b0 and a non-principal result, outside the law", at_b0);
    }
    {
        Law law(r, "theta_{b+c}(x) = theta_b(theta_c(x)) for a natural sum b+c");
        std::uint64_t absorbed = 0;
        std::vector<Term> xs = P.args;
        for (Term v : P.principals) xs.push_back(v);
        for (Term b : P.subscripts)
            for (Term c : P.subscripts)
                for (Term x : xs)
                    guarded([&] {
                        Term lhs = theta_term(sys, add(sys, b, c), x);
                        Term rhs = theta_term(sys, b, theta_term(sys, c, x));
                        if (!decomposable(sys, lhs)) throw RangeError("out of range");
                        if (!natural_sum(sys, b, c)) {
                            if (lhs != rhs) ++absorbed;
                            return;
                        }
                        law.check(lhs == rhs, [&] { return "b=" + print(b) + " c=" + print(c) + " x=" + print(x); });
                    });
        r.note("instances with b absorbed into c and the sides unequal, outside the law", absorbed);
    }
    {
        Law tnf(r, "from_tnf(to_tnf(x)) = x");
        for (Term v : P.values) tnf.check(from_tnf(sys, to_tnf(sys, v)) == v, [&] { return print(v); });
    }
    std::vector<std::optional<Term>> am;
    for (Term v : P.values) {
        std::optional<Term> a;
        guarded([&] { a = a_measure_term(sys, v); });
        am.push_back(a);
    }
    {
        Law law(r, "x < z implies a(x) < a(z)");
        for (std::size_t i = 0; i < P.values.size(); ++i)
            for (std::size_t j = i + 1; j < P.values.size(); ++j)
                if (am[i] && am[j])
                    law.check(lt(sys, *am[i], *am[j]), [&] { return print(P.values[i]) + " , " + print(P.values[j]); });
    }
    {
        Law law(r, "tl(a(x)) = a(tl(x))");
        for (std::size_t i = 0; i < P.values.size(); ++i) {
            if (P.values[i].is_zero() || !am[i]) continue;
            guarded([&] {
                Term lhs = tail_term(sys, *am[i]);
                Term rhs = a_measure_term(sys, tail_term(sys, P.values[i]));
                law.check(lhs == rhs, [&] { return print(P.values[i]) + ": " + print(lhs) + " vs " + print(rhs); });
            });
        }
    }
    {
        Law law(r, "a(theta_{-c}(x)) = theta_{-c}(a(x)) for c < b0");
        std::uint64_t base = 0;
        for (std::size_t ci = 0; ci < P.subscripts.size(); ++ci)
            for (std::size_t zi = 0; zi < P.principals.size(); ++zi) {
                auto v = tmv(ci, zi);
                if (!v) continue;
                guarded([&] {
                    Term c = P.subscripts[ci], z = P.principals[zi];
                    Term lhs = a_measure_term(sys, *v);
                    Term rhs = theta_minus_term(sys, c, a_measure_term(sys, z));
                    if (!lt(sys, c, to_tnf(sys, z).entries[0].b)) {
                        if (lhs != rhs) ++base;
                        return;
                    }
                    law.check(lhs == rhs, [&] {
                        return "c=" + print(c) + " x=" + print(z) + ": " + print(lhs) + " vs " + print(rhs);
                    });
                });
            }
        r.note("instances with c = b0 landing below Lambda and the sides unequal, outside the law", base);
    }
    r.notes.push_back("pool: " + std::to_string(P.principals.size()) + " principals, " +
                      std::to_string(P.values.size()) + " values, " + std::to_string(P.subscripts.size()) +
                      " subscripts");
    r.note("instances outside the theta range, skipped", skipped);
    r.seconds = sw.seconds();
    return r;
}

// ---------------------------------------------------------------- 4 less_c laws

SuiteResult check_less_c_laws(int n) {
    SuiteResult r;
    r.name = "less_c";
    Stopwatch sw;
    System sys(n);
    FnPool P = make_fn_pool(sys);
    std::vector<Term> cs = P.points;
    cs.push_back(add(sys, one(), one()));
    const auto& X = P.targets;   // ascending
    std::uint64_t collapsed = 0;
    Law upward(r, "f <^c x <= z implies f <^c z");
    Law zigzag(r, "f(c) < x and theta_d(f(c+d)) < tl(x), theta_d injective at f(c+d), imply f <^c x");
    for (const FiniteFn& f : P.fns)
        for (Term c : cs) {
            std::vector<char> holds(X.size());
            for (std::size_t i = 0; i < X.size(); ++i) holds[i] = less_c(sys, f, c, X[i]) ? 1 : 0;
            for (std::size_t i = 0; i < X.size(); ++i) {
                if (!holds[i]) continue;
                for (std::size_t j = i; j < X.size(); ++j)
                    upward.check(holds[j], [&] {
                        return show_fn(f) + " c=" + print(c) + " " + print(X[i]) + " <= " + print(X[j]);
                    });
            }
            for (std::size_t i = 0; i < X.size(); ++i) {
                Term x = X[i];
                if (!lt(sys, f.at(c), x)) continue;
                Term tl = tail_term(sys, x);
                bool hyp = true, injective = true;
                for (const auto& e : f.entries) {
                    if (!lt(sys, c, e.arg)) continue;
                    Term step = osub(sys, e.arg, c);
                    if (!lt(sys, theta_term(sys, step, e.val), tl)) hyp = false;
                    if (!theta_injective_at(sys, step, e.val)) injective = false;
                }
                if (hyp && !injective) {
                    if (!holds[i]) ++collapsed;
                    continue;
                }
                if (hyp) zigzag.check(holds[i], [&] { return show_fn(f) + " c=" + print(c) + " x=" + print(x); });
            }
        }
    r.note("zigzag instances with a collapsing theta_d and the conclusion false, outside the law", collapsed);
    r.notes.push_back("pool: " + std::to_string(P.fns.size()) + " functions, " + std::to_string(X.size()) + " targets");
    r.seconds = sw.seconds();
    return r;
}

// ---------------------------------------------------------------- 5 lx trichotomy

namespace {

// builds functions from the top support point down; lower values get tails above the lifts
std::vector<FiniteFn> irreducible_pool(const System& sys) {
    Term two = add(sys, one(), one()), w = omega();
    Term lam = theta_term(sys, one(), one());
    std::vector<Term> points{w, two, one(), zero()};
    std::vector<Term> base{one(), two, w, lam, add(sys, lam, one())};
    std::vector<std::vector<FnEntry>> partial{{}};
    for (Term c : points) {
        std::vector<std::vector<FnEntry>> next = partial;
        for (const auto& l : partial) {
            std::vector<Term> cands = base;
            if (!l.empty()) {
                const FnEntry& up = l.back();
                Term step = osub(sys, up.arg, c);
                Term t1 = theta_term(sys, step, succ(sys, up.val));
                Term t2 = theta_term(sys, step, add(sys, up.val, two));
                cands = {t1, t2, add(sys, t1, t1), add(sys, theta_term(sys, one(), succ(sys, t1)), t1), add(sys, t2, t1)};
            }
            for (Term v : cands) {
                auto m = l;
                m.push_back({c, v});
                next.push_back(std::move(m));
            }
        }
        partial = std::move(next);
    }
    std::vector<FiniteFn> out;
    for (auto& l : partial) {
        FiniteFn f = make_fn(sys, std::move(l));
        if (f.empty() || !is_irreducible(sys, f)) continue;
        if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

SuiteResult check_lx_trichotomy(int n) {
    SuiteResult r;
    r.name = "lx";
    Stopwatch sw;
    System sys(n);
    std::vector<FiniteFn> fs = irreducible_pool(sys);
    std::vector<Term> bs{zero(), one(), omega()};
    Law tri(r, "f^b != g^b implies exactly one of f <lx g, g <lx f");
    Law eq(r, "f^b = g^b implies neither");
    for (Term b : bs)
        for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t j = i; j < fs.size(); ++j) {
                bool fg = lx_less(sys, fs[i], fs[j], b), gf = lx_less(sys, fs[j], fs[i], b);
                bool same = restrict_from(sys, fs[i], b) == restrict_from(sys, fs[j], b);
                auto what = [&] {
                    return "b=" + print(b) + " " + show_fn(fs[i]) + " vs " + show_fn(fs[j]) +
                           (fg ? " f<g" : "") + (gf ? " g<f" : "");
                };
                if (same)
                    eq.check(!fg && !gf, what);
                else
                    tri.check(fg != gf, what);
            }
    r.notes.push_back("pool: " + std::to_string(fs.size()) + " irreducible functions");
    r.seconds = sw.seconds();
    return r;
}

// ---------------------------------------------------------------- 6 o monotonicity

SuiteResult check_o_monotone(int n) {
    SuiteResult r;
    r.name = "o";
    Stopwatch sw;
    System sys(n);
    std::vector<FiniteFn> fs = irreducible_pool(sys);
    std::vector<Term> o;
    for (const auto& f : fs) o.push_back(o_of(sys, f));
    std::vector<char> clean;
    for (const auto& f : fs) clean.push_back(collapse_free(sys, f) ? 1 : 0);
    auto is_clean = [&](const FiniteFn& f) { return collapse_free(sys, f); };
    std::uint64_t outside = 0;
    // runs a check only on collapse-free instances and counts literal failures among the rest
    auto scoped = [&](Law& law, bool in_scope, bool ok, const std::function<std::string()>& what) {
        if (in_scope)
            law.check(ok, what);
        else if (!ok)
            ++outside;
    };
    {
        Law law(r, "f <lx^0 g implies o(f) < o(g)");
        for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t j = 0; j < fs.size(); ++j)
                if (i != j && lx_less(sys, fs[i], fs[j], zero()))
                    scoped(law, clean[i] && clean[j], lt(sys, o[i], o[j]), [&] {
                        return show_fn(fs[i]) + " <lx " + show_fn(fs[j]) + " but o = " + print(o[i]) + " , " +
                               print(o[j]);
                    });
    }
    std::vector<Term> ds{zero(), one(), add(sys, one(), one()), omega()};
    {
        Law law(r, "step-down g from f implies o(g) < o(f)");
        for (std::size_t i = 0; i < fs.size(); ++i) {
            const FiniteFn& f = fs[i];
            for (Term c : f.support())
                for (Term d : ds) {
                    if (!lt(sys, d, c)) continue;
                    for (const FiniteFn& h : fs) {
                        FiniteFn g = concat(sys, f, h, d);
                        if (!step_down_ok(sys, f, g, d, c)) continue;
                        Term og = o_of(sys, g);
                        scoped(law, clean[i] && is_clean(g), lt(sys, og, o[i]), [&] {
                            return "f=" + show_fn(f) + " g=" + show_fn(g) + " d=" + print(d) + " c=" + print(c) +
                                   ": " + print(og) + " vs " + print(o[i]);
                        });
                    }
                }
        }
    }
    {
        Law law(r, "w * tl(a(g(d))) >= theta_{e-d}(o(g;e) + w) for adjacent d < e in supp(g)");
        std::uint64_t ties = 0;
        for (const auto& g : fs)
            for (std::size_t k = 0; k + 1 < g.entries.size(); ++k) {
                Term d = g.entries[k].arg, e = g.entries[k + 1].arg;
                Term lhs = omega_times(sys, tail_term(sys, a_measure_term(sys, g.entries[k].val)));
                Term rhs = theta_term(sys, osub(sys, e, d), add(sys, o_at(sys, g, e), omega()));
                scoped(law, is_clean(g), le(sys, rhs, lhs), [&] { return show_fn(g) + " d=" + print(d); });
                if (is_clean(g) && rhs == lhs) ++ties;
            }
        r.note("adjacent pairs where the two sides are equal", ties);
    }
    {
        Law law(r, "theta_{c-d}(o(g;c)+1) < o(g;d) for supp(g) ni d < c, g^c nonempty");
        std::vector<Term> cs = ds;
        for (const auto& g : fs)
            for (Term d : g.support())
                for (Term c : cs) {
                    if (!lt(sys, d, c) || restrict_from(sys, g, c).empty()) continue;
                    Term lhs = theta_term(sys, osub(sys, c, d), succ(sys, o_at(sys, g, c)));
                    scoped(law, is_clean(g), lt(sys, lhs, o_at(sys, g, d)),
                              [&] { return show_fn(g) + " d=" + print(d) + " c=" + print(c); });
                }
    }
    {
        Law law(r, "f <^d g(d) implies o(f;d) + w <= o(g;d), d in supp(g)");
        for (const auto& g : fs)
            for (Term d : g.support())
                for (const auto& f : fs) {
                    if (!less_c(sys, f, d, g.at(d))) continue;
                    scoped(law, is_clean(f) && is_clean(g), le(sys, add(sys, o_at(sys, f, d), omega()), o_at(sys, g, d)),
                              [&] { return show_fn(f) + " " + show_fn(g) + " d=" + print(d); });
                }
    }
    r.note("functions with a collapsing lift", std::count(clean.begin(), clean.end(), 0));
    r.note("instances involving a collapsing lift with the conclusion false, outside the laws", outside);
    r.seconds = sw.seconds();
    return r;
}

// ---------------------------------------------------------------- 7 hull duality

namespace {

bool base_regular(Term pi) {
    return pi.is(Kind::Stable) ||
           (pi.is(Kind::Omega) && (pi.om_kind() == OmKind::One || pi.om_kind() == OmKind::Stable));
}

// least fixpoint of the hull clauses inside U, in length order
Bits hull_oracle(const System& sys, const Universe& U, const Bits& X, Term gamma) {
    Bits in = X;
    std::vector<std::size_t> order(U.terms.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return U.terms[a].len() < U.terms[b].len(); });
    auto has = [&](Term t) { return U.contains(t) && in[U.rank(t)]; };
    for (std::size_t i : order) {
        if (in[i]) continue;
        Term t = U.terms[i];
        bool add = false;
        switch (t.kind()) {
        case Kind::Zero:
        case Kind::Stable: add = true; break;
        case Kind::Omega: add = t.om_kind() != OmKind::Kappa; break;
        case Kind::Sum: add = std::all_of(t.summands().begin(), t.summands().end(), has); break;
        case Kind::Phi: add = has(t.phi_b()) && has(t.phi_g()); break;
        case Kind::Psi: {
            bool shape = !t.psi_fn().empty() || base_regular(t.psi_pi());
            std::vector<Term> ks = t.psi_fn().k_set();
            add = shape && lt(sys, t.psi_arg(), gamma) && has(t.psi_pi()) && has(t.psi_arg()) &&
                  std::all_of(ks.begin(), ks.end(), has);
            break;
        }
        }
        if (add) in[i] = 1;
    }
    return in;
}

// adds the sum and phi components of members, recursively
void close_components(const Universe& U, Bits& X) {
    for (std::size_t i = U.terms.size(); i-- > 0;) {
        if (!X[i]) continue;
        std::vector<Term> stack{U.terms[i]};
        while (!stack.empty()) {
            Term t = stack.back();
            stack.pop_back();
            if (!t.is(Kind::Sum) && !t.is(Kind::Phi)) continue;
            for (Term s : imm_subterms(t))
                if (U.contains(s) && !X[U.rank(s)]) {
                    X[U.rank(s)] = 1;
                    stack.push_back(s);
                }
        }
    }
}

}  // namespace

SuiteResult check_hull_duality(int n, int max_len, int subsets, std::uint64_t seed) {
    SuiteResult r;
    r.name = "hull";
    Stopwatch sw;
    System sys(n);
    Universe U = enumerate(sys, max_len);
    std::size_t m = U.terms.size();
    std::mt19937_64 rng(seed);
    std::vector<double> density{0.0, 0.02, 0.05, 0.1, 0.2, 0.4};
    Law law(r, "in_hull agrees with the closure oracle");
    Law mono(r, "in_hull monotone in gamma");
    for (int s = 0; s < subsets; ++s) {
        Bits X = random_bits(rng, m, density[static_cast<std::size_t>(s) % density.size()]);
        close_components(U, X);
        Membership mem = [&](Term t) { return U.contains(t) && X[U.rank(t)] != 0; };
        std::vector<KResult> ks;
        for (Term a : U.terms) ks.push_back(k_set(sys, mem, a));
        std::vector<char> prev(m, 0);
        for (std::size_t g = 0; g < m; ++g) {
            Term gamma = U.terms[g];
            Bits oracle = hull_oracle(sys, U, X, gamma);
            for (std::size_t a = 0; a < m; ++a) {
                bool fast = ks[a].below(sys, gamma);
                law.check(fast == (oracle[a] != 0), [&] {
                    return "alpha=" + print(U.terms[a]) + " gamma=" + print(gamma) + " |X|=" +
                           std::to_string(std::count(X.begin(), X.end(), 1)) + (fast ? " K says in" : " K says out");
                });
                mono.check(!prev[a] || fast, [&] { return print(U.terms[a]) + " at " + print(gamma); });
                prev[a] = fast ? 1 : 0;
            }
        }
    }
    r.seconds = sw.seconds();
    return r;
}

// ---------------------------------------------------------------- 8 coefficient laws

SuiteResult check_coeff_laws(int n, int max_len) {
    SuiteResult r;
    r.name = "coeff";
    Stopwatch sw;
    System sys(n);
    Universe U = enumerate(sys, max_len);
    const auto& T = U.terms;
    std::size_t m = T.size();
    std::vector<std::vector<std::vector<Term>>> G(m, std::vector<std::vector<Term>>(m));
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t a = 0; a < m; ++a) G[k][a] = g_set(sys, T[k], T[a]);
    {
        Law g1(r, "G_k(a) <= a");
        Law eqg(r, "b in G_k(a) implies b prec k and len k < len b <= len a");
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t a = 0; a < m; ++a)
                for (Term b : G[k][a]) {
                    g1.check(le(sys, b, T[a]), [&] { return print(b) + " in G_" + print(T[k]) + "(" + print(T[a]) + ")"; });
                    eqg.check(prec(b, T[k]) && T[k].len() < b.len() && b.len() <= T[a].len(),
                              [&] { return print(b) + " in G_" + print(T[k]) + "(" + print(T[a]) + ")"; });
                }
    }
    auto subset = [](const std::vector<Term>& a, const std::vector<Term>& b) { return subset_of(a, b); };
    {
        Law law(r, "g preceq t and not g prec k imply G_k(t) within G_k(g)");
        for (std::size_t gi = 0; gi < m; ++gi)
            for (std::size_t ti = 0; ti < m; ++ti) {
                if (!preceq(T[gi], T[ti])) continue;
                for (std::size_t k = 0; k < m; ++k) {
                    if (prec(T[gi], T[k])) continue;
                    law.check(subset(G[k][ti], G[k][gi]), [&] {
                        return "g=" + print(T[gi]) + " t=" + print(T[ti]) + " k=" + print(T[k]);
                    });
                }
            }
    }
    // K_d(b) for all d, b
    std::vector<std::vector<KResult>> K(m, std::vector<KResult>(m));
    for (std::size_t d = 0; d < m; ++d)
        for (std::size_t b = 0; b < m; ++b) K[d][b] = k_below(sys, T[d], T[b]);
    std::vector<std::vector<std::vector<Term>>> F(m, std::vector<std::vector<Term>>(m));
    {
        Law law(r, "F_d(a) < d");
        for (std::size_t d = 0; d < m; ++d)
            for (std::size_t a = 0; a < m; ++a) {
                F[d][a] = f_set(sys, T[d], T[a]);
                for (Term x : F[d][a])
                    law.check(lt(sys, x, T[d]), [&] { return print(x) + " in F_" + print(T[d]) + "(" + print(T[a]) + ")"; });
            }
    }
    // Hull tests by rank: e < T[a] iff key(e) < 2a, with key 2*rank inside U and 2*pos-1 outside,
    // and K_al(e) < T[a] iff kmax(al, e) < 2a.
    auto key = [&](Term e) -> long {
        if (U.contains(e)) return 2 * static_cast<long>(U.rank(e));
        auto pos = std::partition_point(T.begin(), T.end(), [&](Term t) { return lt(sys, t, e); }) - T.begin();
        return 2 * static_cast<long>(pos) - 1;
    };
    const long kTop = 2 * static_cast<long>(m) + 1;
    std::unordered_map<Term, std::vector<long>> kmax_cache;
    auto kmax = [&](std::size_t al, Term e) -> long {
        auto it = kmax_cache.find(e);
        if (it == kmax_cache.end()) {
            std::vector<long> row(m);
            for (std::size_t d = 0; d < m; ++d) {
                KResult k = U.contains(e) ? K[d][U.rank(e)] : k_below(sys, T[d], e);
                long top = -1;
                if (k.top) top = kTop;
                else
                    for (Term x : k.elems) top = std::max(top, key(x));
                row[d] = top;
            }
            it = kmax_cache.emplace(e, std::move(row)).first;
        }
        return it->second[al];
    };
    // number of a in U with lo < 2a <= hi
    auto count_a = [&](long lo, long hi) -> std::uint64_t {
        long first = lo < 0 ? 0 : lo / 2 + 1;
        long last = hi < 0 ? -1 : std::min<long>(static_cast<long>(m) - 1, hi / 2);
        return last >= first ? static_cast<std::uint64_t>(last - first + 1) : 0;
    };
    {
        Law g2(r, "a in H_x(y) implies G_k(a) within H_x(y)");
        for (std::size_t x = 0; x < m; ++x) {
            std::vector<Term> gs;
            for (std::size_t k = 0; k < m; ++k) gs.insert(gs.end(), G[k][x].begin(), G[k][x].end());
            sort_unique(sys, gs);
            if (gs.empty()) continue;
            for (std::size_t al = 0; al < m; ++al) {
                long in_from = kmax(al, T[x]);
                for (Term b : gs) {
                    long need = kmax(al, b);
                    g2.tally(count_a(in_from, kTop), count_a(in_from, need), [&] {
                        return print(b) + " from G(" + print(T[x]) + "), alpha=" + print(T[al]);
                    });
                }
            }
        }
    }
    {
        Law g3(r, "b not in H_a(al) and K_d(b) < a give some g in F_d(b) with g < d, g not in H_a(al)");
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t d = 0; d < m; ++d) {
                long kd = kmax(d, T[b]);
                for (std::size_t al = 0; al < m; ++al) {
                    // a ranges over kd < 2a <= kmax(al, b); a witness g needs kmax(al, g) >= 2a
                    long out_to = kmax(al, T[b]);
                    long best = -1;
                    for (Term g : F[d][b])
                        if (lt(sys, g, T[d])) best = std::max(best, kmax(al, g));
                    g3.tally(count_a(kd, out_to), count_a(std::max(kd, best), out_to), [&] {
                        return "b=" + print(T[b]) + " d=" + print(T[d]) + " al=" + print(T[al]);
                    });
                }
            }
    }
    {
        Law law(r, "k_d(a) members are at least d");
        for (std::size_t d = 0; d < m; ++d)
            for (std::size_t a = 0; a < m; ++a)
                for (Term x : k_tail(sys, T[d], T[a]))
                    law.check(le(sys, T[d], x), [&] { return print(x) + " in k_" + print(T[d]) + "(" + print(T[a]) + ")"; });
    }
    r.seconds = sw.seconds();
    return r;
}

// ---------------------------------------------------------------- 9 closure laws

namespace {

struct ClosureTable {
    std::vector<Bits> by_alpha;   // C^alpha(X) for each alpha in U
};

ClosureTable closures(const System& sys, const Universe& U, const std::vector<Term>& X) {
    ClosureTable c;
    for (Term a : U.terms) c.by_alpha.push_back(to_bits(U, closure_c(sys, a, X, U)));
    return c;
}

// drops members gamma with gamma outside C^gamma(X) until none remain
std::vector<Term> prune(const System& sys, const Universe& U, std::vector<Term> X) {
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < X.size(); ++i) {
            std::vector<Term> c = closure_c(sys, X[i], X, U);
            if (std::find(c.begin(), c.end(), X[i]) == c.end()) {
                X.erase(X.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    return X;
}

bool self_closed(const System& sys, const Universe& U, const std::vector<Term>& X) {
    for (Term g : X) {
        std::vector<Term> c = closure_c(sys, g, X, U);
        if (std::find(c.begin(), c.end(), g) == c.end()) return false;
    }
    return true;
}

}  // namespace

SuiteResult check_closure_laws(int n, int max_len, int sets, std::uint64_t seed) {
    SuiteResult r;
    r.name = "closure";
    Stopwatch sw;
    System sys(n);
    Universe U = enumerate(sys, max_len);
    const auto& T = U.terms;
    std::size_t m = T.size();
    std::vector<std::optional<Term>> plus;
    for (Term a : T) plus.push_back(next_regular(sys, a, &T));
    std::mt19937_64 rng(seed);
    std::vector<double> density{0.05, 0.1, 0.2, 0.35};
    Law mono(r, "a <= b implies C^b(X) within C^a(X)");
    Law flat(r, "a < b < a^+ implies C^b(X) = C^a(X)");
    Law uv(r, "X below a = Y below a implies C^b(X) = C^b(Y) below b^+ for a <= b < a^+");
    Law seeds(r, "X below a within C^a(X)");
    std::uint64_t kept = 0;
    for (int s = 0; s < sets; ++s) {
        std::vector<Term> X = prune(sys, U, from_bits(U, random_bits(rng, m, density[static_cast<std::size_t>(s) % density.size()])));
        kept += X.size();
        ClosureTable C = closures(sys, U, X);
        Bits xb = to_bits(U, X);
        for (std::size_t a = 0; a < m; ++a) {
            seeds.check(bits_subset(bits_below(sys, U, xb, T[a]), C.by_alpha[a]), [&] { return print(T[a]); });
            for (std::size_t b = a; b < m; ++b) {
                mono.check(bits_subset(C.by_alpha[b], C.by_alpha[a]),
                           [&] { return "a=" + print(T[a]) + " b=" + print(T[b]) + " X=" + show(X); });
                if (b > a && (!plus[a] || lt(sys, T[b], *plus[a])))
                    flat.check(C.by_alpha[b] == C.by_alpha[a],
                               [&] { return "a=" + print(T[a]) + " b=" + print(T[b]) + " X=" + show(X); });
            }
        }
        // partner sets agreeing with X below a chosen alpha
        std::uniform_int_distribution<std::size_t> pick(0, m - 1);
        for (int t = 0; t < 10; ++t) {
            std::size_t a = pick(rng);
            std::vector<Term> Y = below(sys, X, T[a]);
            for (Term y : from_bits(U, random_bits(rng, m, 0.15)))
                if (!lt(sys, y, T[a])) Y.push_back(y);
            sort_unique(sys, Y);
            Y = prune(sys, U, Y);
            if (below(sys, Y, T[a]) != below(sys, X, T[a]) || !self_closed(sys, U, Y)) continue;
            for (std::size_t b = a; b < m; ++b) {
                if (plus[a] && !lt(sys, T[b], *plus[a])) break;
                Bits cy = to_bits(U, closure_c(sys, T[b], Y, U));
                uv.check(bits_below(sys, U, C.by_alpha[b], plus[b]) == bits_below(sys, U, cy, plus[b]), [&] {
                    return "a=" + print(T[a]) + " b=" + print(T[b]) + " X=" + show(X) + " Y=" + show(Y);
                });
            }
        }
    }
    r.note("members kept across pruned sets", kept);
    r.notes.push_back(kTruncationCaveat);
    r.seconds = sw.seconds();
    return r;
}

// ---------------------------------------------------------------- 10 cascade

SuiteResult check_cascade(const std::vector<int>& ns, int max_len, int seeds, std::uint64_t seed) {
    SuiteResult r;
    r.name = "cascade";
    Stopwatch sw;
    std::mt19937_64 rng(seed);
    for (int n : ns) {
        System sys(n);
        Universe U = enumerate(sys, max_len);
        std::vector<Term> small = below(sys, U.terms, stable());
        Law law(r, "cascade shadows hold, N=" + std::to_string(n));
        for (int s = 0; s <= seeds; ++s) {
            std::vector<Term> X;
            if (s > 0) X = from_bits(U, random_bits(rng, U.terms.size(), 0.1 + 0.05 * s));
            X = below(sys, X, stable());
            CascadeReport rep = cascade_report(sys, U, X);
            for (const auto& v : rep.violations) law.check(false, [&] { return v + " seed=" + show(X); });
            law.check(true, [] { return std::string(); });
        }
        r.note("terms below S in the N=" + std::to_string(n) + " universe", small.size());
    }
    r.notes.push_back(kTruncationCaveat);
    r.seconds = sw.seconds();
    return r;
}

// ---------------------------------------------------------------- 11 goldens

const std::vector<Golden>& universe_goldens() {
    static const std::vector<Golden> g{{1, 3, 29}, {1, 4, 29}, {2, 3, 46}};
    return g;
}

SuiteResult check_goldens() {
    SuiteResult r;
    r.name = "golden";
    Stopwatch sw;
    Law law(r, "universe counts match frozen values");
    for (const auto& g : universe_goldens()) {
        System sys(g.n);
        std::size_t got = enumerate(sys, g.max_len).terms.size();
        law.check(got == g.count, [&] {
            return "N=" + std::to_string(g.n) + " len<=" + std::to_string(g.max_len) + ": " + std::to_string(got) +
                   " != " + std::to_string(g.count);
        });
    }
    r.seconds = sw.seconds();
    return r;
}

// ---------------------------------------------------------------- dispatch

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"roundtrip", "order", "theta",   "less_c",  "lx",    "o",
                                                "hull",      "coeff", "closure", "cascade", "golden"};
    return names;
}

SuiteResult run_suite(const std::string& name, int max_len) {
    auto len = [&](int dflt) { return max_len > 0 ? max_len : dflt; };
    if (name == "roundtrip") return check_roundtrip({1, 2}, len(8));
    if (name == "order") return check_order_laws(1, len(6));
    if (name == "theta") return check_theta_laws(1);
    if (name == "less_c") return check_less_c_laws(1);
    if (name == "lx") return check_lx_trichotomy(1);
    if (name == "o") return check_o_monotone(1);
    if (name == "hull") return check_hull_duality(1, len(5));
    if (name == "coeff") return check_coeff_laws(1, len(5));
    if (name == "closure") return check_closure_laws(1, len(5));
    if (name == "cascade") return check_cascade({1, 2}, len(5));
    if (name == "golden") return check_goldens();
    throw std::invalid_argument("unknown suite " + name);
}

}  // namespace otn
