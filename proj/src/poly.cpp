#include "acmforge/poly.hpp"

#include <algorithm>
#include <cctype>

namespace acmforge {

Poly::Poly(Ring r, std::vector<Term> terms) : ring_(std::move(r)) {
    const Field& k = ring_->field;
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return mono_cmp(ring_->order, a.m, b.m) > 0;
    });
    t_.reserve(terms.size());
    for (auto& tm : terms) {
        if (!t_.empty() && t_.back().m == tm.m) {
            t_.back().c = k.add(t_.back().c, tm.c);
            if (k.is_zero(t_.back().c)) t_.pop_back();
        } else if (!k.is_zero(tm.c)) {
            t_.push_back(std::move(tm));
        }
    }
}

const Term& Poly::lead() const {
    ensure(!t_.empty(), "lead term of zero polynomial");
    return t_[0];
}

int Poly::degree() const {
    if (t_.empty()) return -1;
    // grevlex keeps the top-degree term first; other orders need a scan
    if (ring_->order == MonoOrder::grevlex) return t_[0].m.deg;
    int d = 0;
    for (const auto& tm : t_) d = std::max(d, static_cast<int>(tm.m.deg));
    return d;
}

bool Poly::is_homogeneous() const {
    if (t_.empty()) return true;
    for (const auto& tm : t_)
        if (tm.m.deg != t_[0].m.deg) return false;
    return true;
}

Poly p_raw(Ring r, std::vector<Term> sorted) {
    Poly p(std::move(r));
    p.t_ = std::move(sorted);
    return p;
}

bool same_ring(const Poly& a, const Poly& b) { return a.ring() == b.ring(); }

static void check_rings(const Poly& a, const Poly& b) {
    require(a.ring() && b.ring(), "operation on detached polynomial");
    require(a.ring() == b.ring(), "polynomials from different rings");
}

Poly p_zero(const Ring& r) { return Poly(r); }

Poly p_one(const Ring& r) { return p_const(r, r->field.one()); }

Poly p_const(const Ring& r, const Scalar& c) {
    if (r->field.is_zero(c)) return Poly(r);
    return p_raw(r, {Term{Monomial::one(), c}});
}

Poly p_var(const Ring& r, int i, int power) {
    require(i >= 0 && i < r->nvars(), "variable index out of range");
    if (power == 0) return p_one(r);
    return p_raw(r, {Term{Monomial::var(i, power), r->field.one()}});
}

Poly p_mono(const Ring& r, const Monomial& m, const Scalar& c) {
    if (r->field.is_zero(c)) return Poly(r);
    return p_raw(r, {Term{m, c}});
}

Poly p_add(const Poly& a, const Poly& b) {
    check_rings(a, b);
    const Ring& r = a.ring();
    const Field& k = r->field;
    std::vector<Term> out;
    out.reserve(a.terms().size() + b.terms().size());
    std::size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (i < ta.size() && j < tb.size()) {
        int c = mono_cmp(r->order, ta[i].m, tb[j].m);
        if (c > 0) {
            out.push_back(ta[i++]);
        } else if (c < 0) {
            out.push_back(tb[j++]);
        } else {
            Scalar s = k.add(ta[i].c, tb[j].c);
            if (!k.is_zero(s)) out.push_back(Term{ta[i].m, s});
            ++i, ++j;
        }
    }
    for (; i < ta.size(); ++i) out.push_back(ta[i]);
    for (; j < tb.size(); ++j) out.push_back(tb[j]);
    return p_raw(r, std::move(out));
}

Poly p_neg(const Poly& a) {
    const Field& k = a.ring()->field;
    std::vector<Term> out = a.terms();
    for (auto& tm : out) tm.c = k.neg(tm.c);
    return p_raw(a.ring(), std::move(out));
}

Poly p_sub(const Poly& a, const Poly& b) { return p_add(a, p_neg(b)); }

Poly p_scale(const Poly& a, const Scalar& c) {
    const Field& k = a.ring()->field;
    if (k.is_zero(c)) return Poly(a.ring());
    std::vector<Term> out = a.terms();
    for (auto& tm : out) tm.c = k.mul(tm.c, c);
    return p_raw(a.ring(), std::move(out));
}

Poly p_term_mul(const Poly& a, const Monomial& m, const Scalar& c) {
    const Field& k = a.ring()->field;
    if (k.is_zero(c)) return Poly(a.ring());
    std::vector<Term> out;
    out.reserve(a.terms().size());
    for (const auto& tm : a.terms()) out.push_back(Term{tm.m.mul(m), k.mul(tm.c, c)});
    // multiplying every monomial by m preserves relative order
    return p_raw(a.ring(), std::move(out));
}

Poly p_mul(const Poly& a, const Poly& b) {
    check_rings(a, b);
    Poly acc(a.ring());
    for (const auto& tm : b.terms()) acc = p_add(acc, p_term_mul(a, tm.m, tm.c));
    return acc;
}

Poly p_monic(const Poly& a) {
    if (a.is_zero()) return a;
    const Field& k = a.ring()->field;
    return p_scale(a, k.inv(a.lead().c));
}

bool p_eq(const Poly& a, const Poly& b) {
    check_rings(a, b);
    const Field& k = a.ring()->field;
    if (a.terms().size() != b.terms().size()) return false;
    for (std::size_t i = 0; i < a.terms().size(); ++i) {
        if (a.terms()[i].m != b.terms()[i].m) return false;
        if (!k.eq(a.terms()[i].c, b.terms()[i].c)) return false;
    }
    return true;
}

Poly p_div_exact(const Poly& a, const Poly& b) {
    check_rings(a, b);
    const Ring& r = a.ring();
    const Field& k = r->field;
    ensure(!b.is_zero(), "exact division by zero");
    Poly rem = a;
    std::vector<Term> q;
    while (!rem.is_zero()) {
        const Term& lt = rem.lead();
        ensure(b.lead().m.divides(lt.m), "inexact polynomial division");
        Monomial m = b.lead().m.quotient_of(lt.m);
        Scalar c = k.div(lt.c, b.lead().c);
        q.push_back(Term{m, c});
        rem = p_sub(rem, p_term_mul(b, m, c));
    }
    return Poly(r, std::move(q));
}

Poly p_derivative(const Poly& a, int var) {
    const Ring& r = a.ring();
    const Field& k = r->field;
    std::vector<Term> out;
    for (const auto& tm : a.terms()) {
        int e = tm.m.e[var];
        if (e == 0) continue;
        Scalar c = k.mul(tm.c, k.from_int(e));
        if (k.is_zero(c)) continue;
        Monomial m = tm.m;
        m.e[var] = static_cast<std::uint8_t>(e - 1);
        m.deg -= 1;
        out.push_back(Term{m, c});
    }
    return Poly(r, std::move(out));
}

Poly p_substitute(const Poly& a, const Ring& target, const std::vector<Poly>& images) {
    require(static_cast<int>(images.size()) == a.ring()->nvars(),
            "substitution image count mismatch");
    const Field& k = target->field;
    Poly acc(target);
    for (const auto& tm : a.terms()) {
        Poly prod = p_const(target, k.parse(a.ring()->field.str(tm.c)));
        for (int i = 0; i < a.ring()->nvars(); ++i) {
            for (int e = 0; e < tm.m.e[i]; ++e) prod = p_mul(prod, images[i]);
        }
        acc = p_add(acc, prod);
    }
    return acc;
}

Poly p_shift_vars(const Poly& a, const Ring& target, int shift) {
    std::vector<Term> out;
    out.reserve(a.terms().size());
    for (const auto& tm : a.terms()) {
        Monomial m;
        m.deg = tm.m.deg;
        for (int i = 0; i < kMaxVars; ++i) {
            if (tm.m.e[i] == 0) continue;
            int j = i + shift;
            require(j >= 0 && j < target->nvars(), "variable shift out of range");
            m.e[j] = tm.m.e[i];
        }
        out.push_back(Term{m, tm.c});
    }
    return Poly(target, std::move(out));
}

Scalar p_eval(const Poly& a, const std::vector<Scalar>& point) {
    const Field& k = a.ring()->field;
    require(static_cast<int>(point.size()) == a.ring()->nvars(), "evaluation point size mismatch");
    Scalar acc = k.zero();
    for (const auto& tm : a.terms()) {
        Scalar v = tm.c;
        for (int i = 0; i < a.ring()->nvars(); ++i)
            for (int e = 0; e < tm.m.e[i]; ++e) v = k.mul(v, point[i]);
        acc = k.add(acc, v);
    }
    return acc;
}

std::string p_str(const Poly& a) {
    if (a.is_zero()) return "0";
    const Ring& r = a.ring();
    const Field& k = r->field;
    std::string out;
    bool first = true;
    for (const auto& tm : a.terms()) {
        std::string cs = k.str(tm.c);
        bool negative = !cs.empty() && cs[0] == '-';
        if (first) {
            first = false;
            if (negative) {
                out += "-";
                cs = cs.substr(1);
            }
        } else {
            out += negative ? " - " : " + ";
            if (negative) cs = cs.substr(1);
        }
        std::string vars;
        for (int i = 0; i < r->nvars(); ++i) {
            if (tm.m.e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += r->vars[i];
            if (tm.m.e[i] > 1) vars += "^" + std::to_string(tm.m.e[i]);
        }
        if (vars.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += vars;
        } else {
            out += cs + "*" + vars;
        }
    }
    return out;
}

namespace {

struct PolyLexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool take(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw ParseError("expected number in '" + s + "'");
        return s.substr(start, pos - start);
    }
    std::string name() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '#'))
            ++pos;
        if (start == pos) throw ParseError("expected name in '" + s + "'");
        return s.substr(start, pos - start);
    }
};

}  // namespace

Poly p_parse(const Ring& r, const std::string& text) {
    const Field& k = r->field;
    PolyLexer lx{text};
    std::vector<Term> terms;
    bool first = true;
    while (true) {
        char c = lx.peek();
        if (c == '\0') break;
        int sign = 1;
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            ++lx.pos;
        } else if (!first) {
            throw ParseError("expected + or - in '" + text + "'");
        }
        first = false;
        // one product of factors: integer/fraction coefficients and var^exp
        Scalar coeff = k.from_int(sign);
        Monomial mono = Monomial::one();
        bool expect_factor = true;
        while (expect_factor) {
            char f = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(f))) {
                std::string num = lx.number();
                if (lx.take('/')) {
                    std::string den = lx.number();
                    coeff = k.mul(coeff, k.from_fraction(std::stoll(num), std::stoll(den)));
                } else {
                    coeff = k.mul(coeff, k.parse(num));
                }
            } else if (std::isalpha(static_cast<unsigned char>(f)) || f == '_' || f == '#') {
                std::string nm = lx.name();
                int idx = var_index(r, nm);
                int exp = 1;
                if (lx.take('^')) exp = std::stoi(lx.number());
                for (int e = 0; e < exp; ++e) mono = mono.mul(Monomial::var(idx));
            } else {
                throw ParseError("unexpected character '" + std::string(1, f) + "' in '" + text + "'");
            }
            expect_factor = lx.take('*');
        }
        terms.push_back(Term{mono, coeff});
    }
    require(!first || text.find_first_not_of(" \t") == std::string::npos,
            "empty polynomial text");
    return Poly(r, std::move(terms));
}

Poly p_random_homog(const Ring& r, int deg, Rng& rng) {
    std::vector<Term> terms;
    for (const auto& m : monomials_of_degree(r->nvars(), deg))
        terms.push_back(Term{m, r->field.sample(rng)});
    return Poly(r, std::move(terms));
}

}  // namespace acmforge
