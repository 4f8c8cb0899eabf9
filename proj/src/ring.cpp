#include "acmforge/ring.hpp"

#include <algorithm>
#include <set>

namespace acmforge {

Ring make_ring(const Field& k, std::vector<std::string> vars, MonoOrder order) {
    require(!vars.empty(), "ring needs at least one variable");
    require(static_cast<int>(vars.size()) <= kMaxVars,
            "too many variables (max " + std::to_string(kMaxVars) + ")");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        require(!v.empty(), "empty variable name");
        require(seen.insert(v).second, "duplicate variable name '" + v + "'");
    }
    return std::make_shared<RingRep>(RingRep{k, std::move(vars), order});
}

Ring extend_with_tag(const Ring& r, const std::string& tag_name) {
    std::vector<std::string> vars;
    vars.reserve(r->vars.size() + 1);
    vars.push_back(tag_name);
    for (const auto& v : r->vars) vars.push_back(v);
    return make_ring(r->field, std::move(vars), MonoOrder::elim_first);
}

int var_index(const Ring& r, const std::string& name) {
    for (int i = 0; i < r->nvars(); ++i)
        if (r->vars[i] == name) return i;
    throw ParseError("unknown variable '" + name + "'");
}

static void enumerate_rec(int nvars, int slot, int remaining, Monomial& cur,
                          std::vector<Monomial>& out) {
    if (slot == nvars - 1) {
        cur.e[slot] = static_cast<std::uint8_t>(remaining);
        cur.deg += remaining;
        out.push_back(cur);
        cur.deg -= remaining;
        cur.e[slot] = 0;
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur.e[slot] = static_cast<std::uint8_t>(e);
        cur.deg += e;
        enumerate_rec(nvars, slot + 1, remaining - e, cur, out);
        cur.deg -= e;
        cur.e[slot] = 0;
    }
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    require(nvars >= 1 && d >= 0 && d < 256, "bad monomial enumeration request");
    std::vector<Monomial> out;
    Monomial cur;
    enumerate_rec(nvars, 0, d, cur, out);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return mono_cmp(MonoOrder::grevlex, a, b) > 0;
    });
    return out;
}

}  // namespace acmforge
