#include "otn/term.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <unordered_set>

namespace otn {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t content_hash(const Node& n) {
    std::size_t h = static_cast<std::size_t>(n.kind);
    h = mix(h, static_cast<std::size_t>(n.om));
    h = mix(h, static_cast<std::size_t>(n.offset));
    for (Term k : n.kids) h = mix(h, k.id());
    for (const auto& e : n.fn.entries) {
        h = mix(h, e.arg.id());
        h = mix(h, e.val.id());
    }
    return h;
}

std::uint64_t shape_hash(const Node& n) {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ (static_cast<std::uint64_t>(n.kind) << 8);
    auto step = [&](std::uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0x100000001b3ULL;
    };
    step(static_cast<std::uint64_t>(n.om));
    step(static_cast<std::uint64_t>(n.offset));
    for (Term k : n.kids) step(k.shape());
    step(0xfeedULL);
    for (const auto& e : n.fn.entries) {
        step(e.arg.shape());
        step(e.val.shape());
    }
    return h;
}

struct ContentHash {
    std::size_t operator()(const Node* n) const { return n->hash; }
};

struct ContentEq {
    bool operator()(const Node* a, const Node* b) const {
        return a->kind == b->kind && a->om == b->om && a->offset == b->offset &&
               a->kids == b->kids && a->fn == b->fn;
    }
};

class Interner {
public:
    Term intern(Node proto) {
        proto.hash = content_hash(proto);
        proto.shape = shape_hash(proto);
        std::lock_guard<std::mutex> lock(mu_);
        auto it = table_.find(&proto);
        if (it != table_.end()) return Term(*it);
        proto.id = static_cast<std::uint32_t>(arena_.size());
        arena_.push_back(std::make_unique<Node>(std::move(proto)));
        const Node* p = arena_.back().get();
        table_.insert(p);
        return Term(p);
    }
    std::size_t size() {
        std::lock_guard<std::mutex> lock(mu_);
        return arena_.size();
    }

private:
    std::mutex mu_;
    std::vector<std::unique_ptr<Node>> arena_;
    std::unordered_set<const Node*, ContentHash, ContentEq> table_;
};

Interner& interner() {
    static Interner in;
    return in;
}

unsigned compute_len(const Node& n) {
    switch (n.kind) {
    case Kind::Zero:
    case Kind::Stable:
        return 1;
    case Kind::Sum: {
        unsigned s = static_cast<unsigned>(n.kids.size()) - 1;
        for (Term k : n.kids) s += k.len();
        return s;
    }
    case Kind::Phi:
        return 1 + n.kids[0].len() + n.kids[1].len();
    case Kind::Omega:
        if (n.om == OmKind::Kappa) return 1 + n.kids[0].len() + static_cast<unsigned>(n.offset);
        return 1;
    case Kind::Psi: {
        unsigned s = 1 + n.kids[0].len() + n.kids[1].len();
        for (const auto& e : n.fn.entries) s += e.arg.len() + e.val.len();
        return s;
    }
    }
    return 1;
}

Term make(Node proto) {
    proto.len = compute_len(proto);
    return interner().intern(std::move(proto));
}

}  // namespace

Kind Term::kind() const { return node_->kind; }
const std::vector<Term>& Term::summands() const { return node_->kids; }
Term Term::phi_b() const { return node_->kids[0]; }
Term Term::phi_g() const { return node_->kids[1]; }
OmKind Term::om_kind() const { return node_->om; }
int Term::om_offset() const { return node_->offset; }
Term Term::om_base() const { return node_->kids[0]; }
Term Term::psi_pi() const { return node_->kids[0]; }
Term Term::psi_arg() const { return node_->kids[1]; }
const FiniteFn& Term::psi_fn() const { return node_->fn; }
unsigned Term::len() const { return node_->len; }
std::uint32_t Term::id() const { return node_->id; }
std::size_t Term::hash() const { return node_->hash; }
std::uint64_t Term::shape() const { return node_->shape; }

Term FiniteFn::at(Term c) const {
    for (const auto& e : entries)
        if (e.arg == c) return e.val;
    return zero();
}

bool FiniteFn::in_supp(Term c) const {
    return std::any_of(entries.begin(), entries.end(), [&](const FnEntry& e) { return e.arg == c; });
}

std::vector<Term> FiniteFn::support() const {
    std::vector<Term> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.arg);
    return out;
}

std::vector<Term> FiniteFn::k_set() const {
    std::vector<Term> out;
    for (const auto& e : entries) {
        if (std::find(out.begin(), out.end(), e.arg) == out.end()) out.push_back(e.arg);
        if (std::find(out.begin(), out.end(), e.val) == out.end()) out.push_back(e.val);
    }
    return out;
}

Term zero() {
    static const Term z = make(Node{Kind::Zero});
    return z;
}

Term stable() {
    static const Term s = make(Node{Kind::Stable});
    return s;
}

Term omega_one() {
    static const Term o = make(Node{Kind::Omega, OmKind::One});
    return o;
}

Term omega_stable(int n) {
    Node p{Kind::Omega, OmKind::Stable, n};
    return make(std::move(p));
}

Term omega_kappa(Term kappa, int n) {
    Node p{Kind::Omega, OmKind::Kappa, n};
    p.kids = {kappa};
    return make(std::move(p));
}

Term make_sum(std::vector<Term> parts) {
    std::vector<Term> flat;
    for (Term t : parts) {
        if (t.is(Kind::Sum))
            flat.insert(flat.end(), t.summands().begin(), t.summands().end());
        else
            flat.push_back(t);
    }
    if (flat.empty()) return zero();
    if (flat.size() == 1) return flat[0];
    Node p{Kind::Sum};
    p.kids = std::move(flat);
    return make(std::move(p));
}

Term make_phi(Term b, Term g) {
    Node p{Kind::Phi};
    p.kids = {b, g};
    return make(std::move(p));
}

Term make_psi(Term pi, Term a, FiniteFn f) {
    Node p{Kind::Psi};
    p.kids = {pi, a};
    p.fn = std::move(f);
    return make(std::move(p));
}

Term one() {
    static const Term t = make_phi(zero(), zero());
    return t;
}

Term omega() {
    static const Term t = make_phi(zero(), one());
    return t;
}

bool is_base_constant(Term t) {
    switch (t.kind()) {
    case Kind::Zero:
    case Kind::Stable:
        return true;
    case Kind::Omega:
        return t.om_kind() != OmKind::Kappa;
    default:
        return false;
    }
}

bool is_atom(Term t) {
    return t.is(Kind::Stable) || t.is(Kind::Omega) || t.is(Kind::Psi);
}

bool is_principal(Term t) { return is_atom(t) || t.is(Kind::Phi); }

std::vector<Term> summands_of(Term t) {
    if (t.is_zero()) return {};
    if (t.is(Kind::Sum)) return t.summands();
    return {t};
}

std::size_t interned_count() { return interner().size(); }

// ---------------------------------------------------------------- parser

namespace {

class Parser {
public:
    Parser(const std::string& s, int n) : s_(s), n_(n) {}

    Term parse_all() {
        Term t = term();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return t;
    }

private:
    const std::string& s_;
    int n_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek_word(const char* w) {
        skip();
        std::size_t n = std::char_traits<char>::length(w);
        return s_.compare(pos_, n, w) == 0;
    }

    bool accept(const char* w) {
        if (!peek_word(w)) return false;
        pos_ += std::char_traits<char>::length(w);
        return true;
    }

    void expect(const char* w) {
        if (!accept(w)) fail(std::string("expected '") + w + "'");
    }

    Term term() {
        std::vector<Term> parts{primary()};
        while (accept("+")) parts.push_back(primary());
        return make_sum(std::move(parts));
    }

    Term primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        if (accept("phi(")) {
            Term b = term();
            expect(",");
            Term g = term();
            expect(")");
            return make_phi(b, g);
        }
        if (accept("psi")) return psi_rest();
        if (accept("Om(")) return omega_rest();
        if (accept("(")) {
            Term t = term();
            expect(")");
            return t;
        }
        char c = s_[pos_];
        if (c == '0') { ++pos_; return zero(); }
        if (c == '1') { ++pos_; return one(); }
        if (c == 'S') { ++pos_; return stable(); }
        if (c == 'w') {
            ++pos_;
            if (accept("^")) return make_phi(zero(), primary());
            return omega();
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Term psi_rest() {
        FiniteFn f;
        if (accept("[")) {
            do {
                Term c = term();
                expect(":");
                Term v = term();
                f.entries.push_back({c, v});
            } while (accept(","));
            expect("]");
        }
        expect("(");
        Term pi = term();
        expect(";");
        Term a = term();
        expect(")");
        return make_psi(pi, a, std::move(f));
    }

    int parse_nat(std::size_t from, std::size_t to) {
        std::size_t b = from, e = to;
        while (b < e && std::isspace(static_cast<unsigned char>(s_[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(s_[e - 1]))) --e;
        if (b == e) throw ParseError("missing Om offset", from);
        long v = 0;
        for (std::size_t i = b; i < e; ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s_[i]))) throw ParseError("bad Om offset", i);
            v = v * 10 + (s_[i] - '0');
            if (v > 1000000) throw ParseError("Om offset too large", i);
        }
        return static_cast<int>(v);
    }

    Term omega_rest() {
        std::size_t start = pos_;
        int depth = 0;
        std::size_t last_plus = std::string::npos;
        std::size_t i = pos_;
        for (; i < s_.size(); ++i) {
            char c = s_[i];
            if (c == '(' || c == '[') ++depth;
            else if (c == ')' || c == ']') {
                if (depth == 0) break;
                --depth;
            } else if (c == '+' && depth == 0) last_plus = i;
        }
        if (i >= s_.size()) fail("unterminated Om(");
        std::size_t close = i;
        std::string inner = s_.substr(start, close - start);
        auto trim = [](std::string x) {
            auto b = x.find_first_not_of(" \t\r\n");
            auto e = x.find_last_not_of(" \t\r\n");
            return b == std::string::npos ? std::string() : x.substr(b, e - b + 1);
        };
        if (trim(inner) == "1") {
            pos_ = close + 1;
            return omega_one();
        }
        if (last_plus == std::string::npos) fail("Om index must be 1, S+n or term+n");
        int n = parse_nat(last_plus + 1, close);
        if (n < 1 || n > n_)
            throw IndexError("Om offset " + std::to_string(n) + " outside 1.." + std::to_string(n_));
        std::string lhs = trim(s_.substr(start, last_plus - start));
        Term result;
        if (lhs == "S") {
            result = omega_stable(n);
        } else {
            std::string base_text = s_.substr(start, last_plus - start);
            Term kappa;
            try {
                kappa = Parser(base_text, n_).parse_all();
            } catch (const ParseError& e) {
                throw ParseError("malformed Om base", start + e.pos);
            }
            result = omega_kappa(kappa, n);
        }
        pos_ = close + 1;
        return result;
    }
};

bool needs_parens(Term t) { return t.is(Kind::Sum); }

void print_to(Term t, std::string& out);

void print_fn(const FiniteFn& f, std::string& out) {
    out += '[';
    bool first = true;
    for (const auto& e : f.entries) {
        if (!first) out += ',';
        first = false;
        print_to(e.arg, out);
        out += ':';
        print_to(e.val, out);
    }
    out += ']';
}

void print_to(Term t, std::string& out) {
    switch (t.kind()) {
    case Kind::Zero:
        out += '0';
        return;
    case Kind::Stable:
        out += 'S';
        return;
    case Kind::Sum: {
        bool first = true;
        for (Term s : t.summands()) {
            if (!first) out += '+';
            first = false;
            if (needs_parens(s)) {
                out += '(';
                print_to(s, out);
                out += ')';
            } else {
                print_to(s, out);
            }
        }
        return;
    }
    case Kind::Phi: {
        Term b = t.phi_b(), g = t.phi_g();
        if (b.is_zero()) {
            if (g.is_zero()) { out += '1'; return; }
            if (g == one()) { out += 'w'; return; }
            out += "w^";
            if (needs_parens(g)) {
                out += '(';
                print_to(g, out);
                out += ')';
            } else {
                print_to(g, out);
            }
            return;
        }
        out += "phi(";
        print_to(b, out);
        out += ',';
        print_to(g, out);
        out += ')';
        return;
    }
    case Kind::Omega:
        out += "Om(";
        if (t.om_kind() == OmKind::One) {
            out += '1';
        } else {
            if (t.om_kind() == OmKind::Stable) out += 'S';
            else print_to(t.om_base(), out);
            out += '+';
            out += std::to_string(t.om_offset());
        }
        out += ')';
        return;
    case Kind::Psi:
        out += "psi";
        if (!t.psi_fn().empty()) print_fn(t.psi_fn(), out);
        out += '(';
        print_to(t.psi_pi(), out);
        out += ';';
        print_to(t.psi_arg(), out);
        out += ')';
        return;
    }
}

}  // namespace

Term parse(const std::string& text, int n_param) {
    if (n_param < 1) throw IndexError("N must be positive");
    return Parser(text, n_param).parse_all();
}

std::string print(Term t) {
    std::string out;
    print_to(t, out);
    return out;
}

std::string print(const FiniteFn& f) {
    std::string out;
    print_fn(f, out);
    return out;
}

unsigned ell(Term t) { return t.len(); }

std::vector<Term> imm_subterms(Term t) {
    std::vector<Term> out;
    auto add = [&](Term x) {
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    };
    switch (t.kind()) {
    case Kind::Zero:
    case Kind::Stable:
        break;
    case Kind::Omega:
        if (t.om_kind() == OmKind::Kappa) add(t.om_base());
        break;
    case Kind::Sum:
        for (Term s : t.summands()) add(s);
        break;
    case Kind::Phi:
        add(t.phi_b());
        add(t.phi_g());
        break;
    case Kind::Psi:
        add(t.psi_pi());
        add(t.psi_arg());
        for (Term x : t.psi_fn().k_set()) add(x);
        break;
    }
    return out;
}

std::vector<Term> all_subterms(Term t) {
    std::vector<Term> out{t};
    std::unordered_set<Term> seen{t};
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (Term s : imm_subterms(out[i]))
            if (seen.insert(s).second) out.push_back(s);
    }
    return out;
}

bool canonical_before(Term a, Term b) {
    if (a == b) return false;
    if (a.len() != b.len()) return a.len() < b.len();
    if (a.shape() != b.shape()) return a.shape() < b.shape();
    return print(a) < print(b);
}

}  // namespace otn
