#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace otn {

enum class Kind : std::uint8_t { Zero, Stable, Sum, Phi, Omega, Psi };

// Omega index shapes: Om(1), Om(S+n), Om(kappa+n)
enum class OmKind : std::uint8_t { One, Stable, Kappa };

struct Node;

// Handle to an interned, immutable node. Equal terms share one node.
class Term {
public:
    Term() = default;
    explicit Term(const Node* n) : node_(n) {}

    const Node* node() const { return node_; }
    bool valid_handle() const { return node_ != nullptr; }

    Kind kind() const;
    bool is_zero() const { return kind() == Kind::Zero; }
    bool is(Kind k) const { return kind() == k; }

    // Sum
    const std::vector<Term>& summands() const;
    // Phi
    Term phi_b() const;
    Term phi_g() const;
    // Omega
    OmKind om_kind() const;
    int om_offset() const;
    Term om_base() const;   // kappa for Om(kappa+n)
    // Psi
    Term psi_pi() const;
    Term psi_arg() const;
    const struct FiniteFn& psi_fn() const;

    unsigned len() const;   // the length measure
    std::uint32_t id() const;
    std::size_t hash() const;
    std::uint64_t shape() const;   // structural hash, independent of interning order

    friend bool operator==(Term a, Term b) { return a.node_ == b.node_; }
    friend bool operator!=(Term a, Term b) { return a.node_ != b.node_; }

private:
    const Node* node_ = nullptr;
};

struct FnEntry {
    Term arg;
    Term val;
    friend bool operator==(const FnEntry& a, const FnEntry& b) {
        return a.arg == b.arg && a.val == b.val;
    }
};

// Finite function with entries kept ascending by argument.
struct FiniteFn {
    std::vector<FnEntry> entries;

    bool empty() const { return entries.empty(); }
    std::size_t size() const { return entries.size(); }
    Term at(Term c) const;            // 0 off the support
    bool in_supp(Term c) const;
    std::vector<Term> support() const;
    std::vector<Term> k_set() const;  // union of {c, f(c)}

    friend bool operator==(const FiniteFn& a, const FiniteFn& b) { return a.entries == b.entries; }
    friend bool operator!=(const FiniteFn& a, const FiniteFn& b) { return !(a == b); }
};

struct Node {
    explicit Node(Kind k, OmKind o = OmKind::One, int off = 0) : kind(k), om(o), offset(off) {}

    Kind kind;
    OmKind om = OmKind::One;
    int offset = 0;
    std::vector<Term> kids;
    FiniteFn fn;
    std::size_t hash = 0;
    std::uint64_t shape = 0;
    unsigned len = 0;
    std::uint32_t id = 0;
};

struct TermHash {
    std::size_t operator()(Term t) const { return std::hash<const void*>()(t.node()); }
};

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t p)
        : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

struct IndexError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// raw constructors; no normal-form checks
Term zero();
Term stable();
Term omega_one();
Term omega_stable(int n);
Term omega_kappa(Term kappa, int n);
Term make_sum(std::vector<Term> parts);   // flattens nested sums, drops nothing
Term make_phi(Term b, Term g);
Term make_psi(Term pi, Term a, FiniteFn f = {});
Term one();     // phi(0,0)
Term omega();   // phi(0,1)

bool is_base_constant(Term t);   // 0, Om(1), S, Om(S+n)
bool is_atom(Term t);            // S, Om(..), psi(..)
bool is_principal(Term t);       // atom or phi
std::vector<Term> summands_of(Term t);   // [] for 0, [t] for principal

Term parse(const std::string& text, int n_param);
std::string print(Term t);
std::string print(const FiniteFn& f);
unsigned ell(Term t);

std::vector<Term> imm_subterms(Term t);
std::vector<Term> all_subterms(Term t);   // reflexive-transitive, deduplicated

std::size_t interned_count();

// Total order on syntax that does not depend on interning order.
bool canonical_before(Term a, Term b);

}  // namespace otn

template <>
struct std::hash<otn::Term> {
    std::size_t operator()(otn::Term t) const { return otn::TermHash()(t); }
};
