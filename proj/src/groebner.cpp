#include "acmforge/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace acmforge {

namespace {

struct WorkElem {
    Vec g;
    Vec rep;    // g = sum rep[l] * input[l] (tracking only)
    int sugar;  // degree bound used for selection; exact degree when homogeneous
};

struct SPair {
    int i, j;
    int comp;
    Monomial lcm;
    int sugar;
};

// Shared driver for groebner() and syzygy_module(). When `track` is set the
// reps of every basis element and the zero-reduction transcripts are kept.
struct Buchberger {
    const FreeModule& amb;
    ModOrder ord;
    bool track;
    std::vector<WorkElem> elems;
    std::vector<VecLead> leads;
    FreeModule input_fm;
    std::vector<Vec> syz_out;

    std::set<std::pair<int, int>> pending;

    struct PairLess {
        const Buchberger* owner;
        bool operator()(const SPair& a, const SPair& b) const {
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            int c = mono_cmp(owner->ord.base, a.lcm, b.lcm);
            if (c != 0) return c < 0;
            if (a.comp != b.comp) return a.comp < b.comp;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };
    std::set<SPair, PairLess> queue;

    Buchberger(const FreeModule& a, ModOrderKind mk, bool tr)
        : amb(a), ord{mk, a.ring->order, {}}, track(tr), queue(PairLess{this}) {}

    // full normal form of (h, hrep, hsugar) against the current basis
    Vec reduce(Vec h, Vec* hrep, int* hsugar) {
        const Field& k = amb.ring->field;
        Vec rem(amb);
        while (!h.is_zero()) {
            VecLead lt = *v_lead(h, ord);
            int red = -1;
            for (std::size_t t = 0; t < elems.size(); ++t) {
                if (leads[t].comp == lt.comp && leads[t].term.m.divides(lt.term.m)) {
                    red = static_cast<int>(t);
                    break;
                }
            }
            if (red < 0) {
                rem[lt.comp] = p_add(rem[lt.comp], p_mono(amb.ring, lt.term.m, lt.term.c));
                h[lt.comp] = p_sub(h[lt.comp], p_mono(amb.ring, lt.term.m, lt.term.c));
                continue;
            }
            Monomial m = leads[red].term.m.quotient_of(lt.term.m);
            Scalar c = k.div(lt.term.c, leads[red].term.c);
            h = v_sub(h, v_term_mul(elems[red].g, m, c));
            if (hrep) *hrep = v_sub(*hrep, v_term_mul(elems[red].rep, m, c));
            if (hsugar) *hsugar = std::max(*hsugar, elems[red].sugar + m.deg);
        }
        return rem;
    }

    void add_pairs_with(int t) {
        for (int i = 0; i < t; ++i) {
            if (leads[i].comp != leads[t].comp) continue;
            Monomial l = leads[i].term.m.lcm(leads[t].term.m);
            int sugar =
                std::max(elems[i].sugar + l.deg - leads[i].term.m.deg,
                         elems[t].sugar + l.deg - leads[t].term.m.deg);
            // product criterion; valid for ideals only, not for higher-rank modules
            if (amb.rank() == 1 && leads[i].term.m.coprime(leads[t].term.m)) {
                // the S-pair reduces to zero and its syzygy is the Koszul relation
                if (track)
                    syz_out.push_back(v_sub(v_poly_mul(elems[i].rep, elems[t].g[0]),
                                            v_poly_mul(elems[t].rep, elems[i].g[0])));
                continue;
            }
            queue.insert(SPair{i, t, leads[i].comp, l, sugar});
            pending.insert({i, t});
        }
    }

    void append(Vec g, Vec rep, int sugar) {
        VecLead lt = *v_lead(g, ord);
        elems.push_back(WorkElem{std::move(g), std::move(rep), sugar});
        leads.push_back(lt);
        add_pairs_with(static_cast<int>(elems.size()) - 1);
    }

    bool chain_skippable(const SPair& p) const {
        for (std::size_t t = 0; t < elems.size(); ++t) {
            int k = static_cast<int>(t);
            if (k == p.i || k == p.j) continue;
            if (leads[t].comp != p.comp) continue;
            if (!leads[t].term.m.divides(p.lcm)) continue;
            auto key_ik = std::minmax(p.i, k);
            auto key_jk = std::minmax(p.j, k);
            if (pending.count({key_ik.first, key_ik.second})) continue;
            if (pending.count({key_jk.first, key_jk.second})) continue;
            return true;
        }
        return false;
    }

    void run(const std::vector<Vec>& gens) {
        const Field& k = amb.ring->field;
        input_fm.ring = amb.ring;
        for (const auto& v : gens) {
            int d = 0;
            if (v_is_homogeneous(v, amb)) {
                auto dd = v_degree(v, amb);
                if (dd) d = *dd;
            }
            input_fm.degs.push_back(d);
        }
        for (std::size_t l = 0; l < gens.size(); ++l) {
            if (gens[l].is_zero()) {
                if (track) syz_out.push_back(v_unit(input_fm, static_cast<int>(l)));
                continue;
            }
            int sugar = 0;
            if (v_is_homogeneous(gens[l], amb)) {
                sugar = *v_degree(gens[l], amb);
            } else {
                for (int i = 0; i < gens[l].rank(); ++i)
                    if (!gens[l][i].is_zero()) sugar = std::max(sugar, gens[l][i].degree());
            }
            append(gens[l], track ? v_unit(input_fm, static_cast<int>(l)) : Vec(input_fm),
                   sugar);
        }
        while (!queue.empty()) {
            SPair p = *queue.begin();
            queue.erase(queue.begin());
            pending.erase({p.i, p.j});
            if (chain_skippable(p)) continue;
            Monomial mi = leads[p.i].term.m.quotient_of(p.lcm);
            Monomial mj = leads[p.j].term.m.quotient_of(p.lcm);
            Scalar ci = k.inv(leads[p.i].term.c);
            Scalar cj = k.inv(leads[p.j].term.c);
            Vec h = v_sub(v_term_mul(elems[p.i].g, mi, ci), v_term_mul(elems[p.j].g, mj, cj));
            Vec hrep;
            if (track)
                hrep = v_sub(v_term_mul(elems[p.i].rep, mi, ci),
                             v_term_mul(elems[p.j].rep, mj, cj));
            int hsugar = p.sugar;
            Vec rem = reduce(std::move(h), track ? &hrep : nullptr, &hsugar);
            if (rem.is_zero()) {
                if (track && !hrep.is_zero()) syz_out.push_back(hrep);
            } else {
                append(std::move(rem), std::move(hrep), hsugar);
            }
        }
    }
};

}  // namespace

FreeModule free_module(const Ring& r, std::vector<int> degs) {
    return FreeModule{r, std::move(degs)};
}

Vec to_vec1(const Poly& p) {
    FreeModule f{p.ring(), {0}};
    Vec v(f);
    v[0] = p;
    return v;
}

std::vector<Vec> to_vec1(const Ring& r, const std::vector<Poly>& ps) {
    std::vector<Vec> out;
    FreeModule f{r, {0}};
    for (const auto& p : ps) {
        Vec v(f);
        if (p.ring()) v[0] = p;
        out.push_back(std::move(v));
    }
    return out;
}

GBResult groebner(const FreeModule& amb, const std::vector<Vec>& gens, ModOrderKind mk) {
    Buchberger bb(amb, mk, /*track=*/false);
    bb.run(gens);

    const Field& k = amb.ring->field;
    // minimal leads: sort ascending, keep elements whose lead no kept lead divides
    std::vector<int> order(bb.elems.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return bb.ord.cmp(bb.leads[a].comp, bb.leads[a].term.m, bb.leads[b].comp,
                          bb.leads[b].term.m) < 0;
    });
    std::vector<Vec> kept;
    std::vector<VecLead> kept_leads;
    for (int idx : order) {
        bool divisible = false;
        for (const auto& kl : kept_leads) {
            if (kl.comp == bb.leads[idx].comp && kl.term.m.divides(bb.leads[idx].term.m)) {
                divisible = true;
                break;
            }
        }
        if (!divisible) {
            kept.push_back(bb.elems[idx].g);
            kept_leads.push_back(bb.leads[idx]);
        }
    }

    // tail-reduce each against the others, then normalize to monic
    GBResult gb{amb, bb.ord, {}};
    for (std::size_t i = 0; i < kept.size(); ++i) {
        Buchberger red(amb, mk, false);
        for (std::size_t j = 0; j < kept.size(); ++j) {
            if (j == i) continue;
            // earlier passes rescale elements, so recompute leads from the
            // current values rather than reusing the cached ones
            red.elems.push_back(WorkElem{kept[j], Vec(), 0});
            red.leads.push_back(*v_lead(kept[j], bb.ord));
        }
        Vec lead_part(amb);
        lead_part[kept_leads[i].comp] =
            p_mono(amb.ring, kept_leads[i].term.m, kept_leads[i].term.c);
        Vec tail = v_sub(kept[i], lead_part);
        kept[i] = v_add(lead_part, red.reduce(std::move(tail), nullptr, nullptr));
        kept[i] = v_scale(kept[i], k.inv(kept_leads[i].term.c));
    }
    gb.basis = std::move(kept);
    return gb;
}

Vec normal_form(const Vec& v, const GBResult& gb, std::vector<Poly>* coeffs) {
    const Field& k = gb.amb.ring->field;
    Vec h = v;
    Vec rem(gb.amb);
    if (coeffs) coeffs->assign(gb.basis.size(), Poly(gb.amb.ring));
    std::vector<VecLead> leads;
    for (const auto& g : gb.basis) leads.push_back(*v_lead(g, gb.ord));
    while (!h.is_zero()) {
        VecLead lt = *v_lead(h, gb.ord);
        int red = -1;
        for (std::size_t t = 0; t < gb.basis.size(); ++t) {
            if (leads[t].comp == lt.comp && leads[t].term.m.divides(lt.term.m)) {
                red = static_cast<int>(t);
                break;
            }
        }
        if (red < 0) {
            rem[lt.comp] = p_add(rem[lt.comp], p_mono(gb.amb.ring, lt.term.m, lt.term.c));
            h[lt.comp] = p_sub(h[lt.comp], p_mono(gb.amb.ring, lt.term.m, lt.term.c));
            continue;
        }
        Monomial m = leads[red].term.m.quotient_of(lt.term.m);
        Scalar c = k.div(lt.term.c, leads[red].term.c);
        h = v_sub(h, v_term_mul(gb.basis[red], m, c));
        if (coeffs) (*coeffs)[red] = p_add((*coeffs)[red], p_mono(gb.amb.ring, m, c));
    }
    return rem;
}

std::vector<Vec> syzygy_module(const FreeModule& amb, const std::vector<Vec>& gens) {
    Buchberger bb(amb, ModOrderKind::top, /*track=*/true);
    bb.run(gens);

    // rewrite each input over the computed basis; I - V*U rows are syzygies
    std::vector<Vec> out = std::move(bb.syz_out);
    for (std::size_t l = 0; l < gens.size(); ++l) {
        if (gens[l].is_zero()) continue;  // already emitted e_l
        Vec h = gens[l];
        Vec acc = v_unit(bb.input_fm, static_cast<int>(l));
        // reduce to zero, accumulating acc -= q_k * rep_k
        const Field& k = amb.ring->field;
        while (!h.is_zero()) {
            VecLead lt = *v_lead(h, bb.ord);
            int red = -1;
            for (std::size_t t = 0; t < bb.elems.size(); ++t) {
                if (bb.leads[t].comp == lt.comp && bb.leads[t].term.m.divides(lt.term.m)) {
                    red = static_cast<int>(t);
                    break;
                }
            }
            ensure(red >= 0, "input failed to reduce against its own basis");
            Monomial m = bb.leads[red].term.m.quotient_of(lt.term.m);
            Scalar c = k.div(lt.term.c, bb.leads[red].term.c);
            h = v_sub(h, v_term_mul(bb.elems[red].g, m, c));
            acc = v_sub(acc, v_term_mul(bb.elems[red].rep, m, c));
        }
        if (!acc.is_zero()) out.push_back(std::move(acc));
    }
    return out;
}

TrackedBasis tracked_groebner(const FreeModule& amb, const std::vector<Vec>& gens) {
    Buchberger bb(amb, ModOrderKind::top, /*track=*/true);
    bb.run(gens);
    TrackedBasis tb;
    tb.amb = amb;
    tb.ord = bb.ord;
    tb.inputs = bb.input_fm;
    for (auto& e : bb.elems) {
        tb.basis.push_back(std::move(e.g));
        tb.rep.push_back(std::move(e.rep));
    }
    tb.leads = std::move(bb.leads);
    return tb;
}

std::optional<std::vector<Poly>> solve_in(const TrackedBasis& tb, const Vec& v) {
    const Field& k = tb.amb.ring->field;
    Vec h = v;
    Vec acc(tb.inputs);
    while (!h.is_zero()) {
        VecLead lt = *v_lead(h, tb.ord);
        int red = -1;
        for (std::size_t t = 0; t < tb.basis.size(); ++t) {
            if (tb.leads[t].comp == lt.comp && tb.leads[t].term.m.divides(lt.term.m)) {
                red = static_cast<int>(t);
                break;
            }
        }
        if (red < 0) return std::nullopt;
        Monomial m = tb.leads[red].term.m.quotient_of(lt.term.m);
        Scalar c = k.div(lt.term.c, tb.leads[red].term.c);
        h = v_sub(h, v_term_mul(tb.basis[red], m, c));
        acc = v_add(acc, v_term_mul(tb.rep[red], m, c));
    }
    std::vector<Poly> out;
    for (int l = 0; l < acc.rank(); ++l) out.push_back(acc[l]);
    return out;
}

std::vector<Poly> groebner_ideal(const Ring& r, const std::vector<Poly>& gens) {
    GBResult gb = groebner(free_module(r, {0}), to_vec1(r, gens));
    std::vector<Poly> out;
    for (const auto& v : gb.basis) out.push_back(v[0]);
    return out;
}

Poly nf_poly(const Poly& p, const Ring& r, const std::vector<Poly>& gb) {
    GBResult g{free_module(r, {0}), ModOrder{ModOrderKind::top, r->order, {}}, to_vec1(r, gb)};
    return normal_form(to_vec1(p), g)[0];
}

bool ideal_member(const Poly& p, const Ring& r, const std::vector<Poly>& gb) {
    return nf_poly(p, r, gb).is_zero();
}

bool ideal_equal(const Ring& r, const std::vector<Poly>& gb_a, const std::vector<Poly>& gb_b) {
    (void)r;
    if (gb_a.size() != gb_b.size()) return false;
    for (std::size_t i = 0; i < gb_a.size(); ++i)
        if (!p_eq(gb_a[i], gb_b[i])) return false;
    return true;
}

}  // namespace acmforge
