#include "acmforge/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "acmforge/errors.hpp"

namespace acmforge {

namespace {

std::vector<Poly> f_basis(const Poly& f) { return {p_monic(f)}; }

// degrees of a homogeneous generator list (zero vectors contribute 0)
std::vector<int> degrees_of(const FreeModule& amb, const std::vector<Vec>& gens) {
    std::vector<int> degs;
    degs.reserve(gens.size());
    for (const auto& g : gens) {
        auto d = v_degree(g, amb);
        degs.push_back(d ? *d : 0);
    }
    return degs;
}

bool entry_zero_mod(const Poly& p, const Over over, const Ring& r,
                    const std::vector<Poly>& fgb) {
    if (p.is_zero()) return true;
    if (over == Over::ambient) return false;
    return nf_poly(p, r, fgb).is_zero();
}

}  // namespace

PresentedModule make_presented(Over over, FreeModule gens, GradedMatrix rel, Poly f) {
    require(same_module(rel.tgt, gens), "relation matrix does not land in the generator module");
    if (over == Over::quotient) {
        require(!f.is_zero(), "quotient presentation needs a hypersurface equation");
        require(f.is_homogeneous(), "hypersurface equation must be homogeneous");
        require(f.ring() == gens.ring, "hypersurface equation lives in a different ring");
    }
    PresentedModule m;
    m.over = over;
    m.ring = gens.ring;
    m.f = std::move(f);
    m.gens = std::move(gens);
    m.rel = std::move(rel);
    return m;
}

PresentedModule cyclic_module(Over over, const Ring& r, const std::vector<Poly>& ideal_gens,
                              const Poly& f) {
    FreeModule f0 = free_module(r, {0});
    std::vector<Vec> cols;
    std::vector<int> src_degs;
    for (const auto& g : ideal_gens) {
        if (g.is_zero()) continue;
        require(g.is_homogeneous(), "cyclic module needs homogeneous ideal generators");
        cols.push_back(to_vec1(g));
        src_degs.push_back(g.degree());
    }
    GradedMatrix rel = make_matrix(f0, free_module(r, src_degs), std::move(cols));
    return make_presented(over, f0, std::move(rel), f);
}

PresentedModule present_submodule(Over over, const FreeModule& amb, const std::vector<Vec>& gens,
                                  const Poly& f) {
    std::vector<Vec> mingens = trim_generators(over, amb, gens, f);
    FreeModule f0 = free_module(amb.ring, degrees_of(amb, mingens));
    std::vector<Vec> rels = trim_generators(over, f0, relations_of(over, amb, mingens, f), f);
    GradedMatrix rel = make_matrix(f0, free_module(amb.ring, degrees_of(f0, rels)), rels);
    return make_presented(over, std::move(f0), std::move(rel), f);
}

Vec reduce_mod_f(const Vec& v, const Poly& f) {
    if (f.is_zero()) return v;
    const Ring r = f.ring();
    std::vector<Poly> fgb = f_basis(f);
    Vec out = v;
    for (int i = 0; i < out.rank(); ++i)
        if (!out[i].is_zero()) out[i] = nf_poly(out[i], r, fgb);
    return out;
}

std::vector<Vec> relations_of(Over over, const FreeModule& amb, const std::vector<Vec>& gens,
                              const Poly& f) {
    if (over == Over::ambient) return syzygy_module(amb, gens);

    require(!f.is_zero(), "quotient syzygies need the hypersurface equation");
    const int s = static_cast<int>(gens.size());
    std::vector<Vec> extended = gens;
    for (int i = 0; i < amb.rank(); ++i) extended.push_back(v_poly_mul(v_unit(amb, i), f));

    std::vector<Vec> raw = syzygy_module(amb, extended);
    FreeModule proj = free_module(amb.ring, degrees_of(amb, gens));
    std::vector<Vec> out;
    for (const auto& w : raw) {
        std::vector<Poly> head(w.rank() ? s : 0);
        for (int l = 0; l < s; ++l) head[l] = w[l];
        Vec v = reduce_mod_f(Vec(proj, std::move(head)), f);
        if (!v.is_zero()) out.push_back(std::move(v));
    }
    return out;
}

GBResult submodule_basis(Over over, const FreeModule& amb, const std::vector<Vec>& gens,
                         const Poly& f) {
    std::vector<Vec> all = gens;
    if (over == Over::quotient) {
        require(!f.is_zero(), "quotient membership needs the hypersurface equation");
        for (int i = 0; i < amb.rank(); ++i) all.push_back(v_poly_mul(v_unit(amb, i), f));
    }
    return groebner(amb, all);
}

bool submodule_member(const Vec& v, const GBResult& basis) {
    return normal_form(v, basis).is_zero();
}

std::vector<Vec> trim_generators(Over over, const FreeModule& amb, std::vector<Vec> gens,
                                 const Poly& f) {
    std::vector<Vec> live;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        ensure(v_is_homogeneous(g, amb), "generator trimming needs homogeneous input");
        live.push_back(over == Over::quotient ? reduce_mod_f(g, f) : std::move(g));
    }
    std::vector<std::size_t> order(live.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return *v_degree(live[a], amb) < *v_degree(live[b], amb);
    });

    std::vector<Vec> kept;
    GBResult span = submodule_basis(over, amb, kept, f);
    for (std::size_t idx : order) {
        if (live[idx].is_zero()) continue;
        if (submodule_member(live[idx], span)) continue;
        kept.push_back(live[idx]);
        span = submodule_basis(over, amb, kept, f);
    }
    return kept;
}

PresentedModule minimalize(const PresentedModule& m) {
    const Ring r = m.ring;
    const int nr = m.rel.rows();
    const int nc = m.rel.cols();
    std::vector<Poly> fgb;
    if (m.over == Over::quotient) fgb = f_basis(m.f);
    auto rmf = [&](const Poly& p) {
        return (fgb.empty() || p.is_zero()) ? p : nf_poly(p, r, fgb);
    };
    std::vector<std::vector<Poly>> a(nr, std::vector<Poly>(nc));
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) a[i][j] = rmf(m.rel.at(i, j));

    std::vector<bool> row_live(nr, true), col_live(nc, true);
    const Field& k = r->field;
    for (;;) {
        int pi = -1, pj = -1;
        for (int i = 0; i < nr && pi < 0; ++i) {
            if (!row_live[i]) continue;
            for (int j = 0; j < nc; ++j) {
                if (!col_live[j]) continue;
                if (a[i][j].is_unit()) {
                    pi = i;
                    pj = j;
                    break;
                }
            }
        }
        if (pi < 0) break;
        // Schur complement: remove generator pi and relation pj
        const Poly u = a[pi][pj];
        for (int i = 0; i < nr; ++i) {
            if (!row_live[i] || i == pi || a[i][pj].is_zero()) continue;
            Poly factor = p_scale(a[i][pj], k.inv(u.lead().c));
            for (int j = 0; j < nc; ++j) {
                if (!col_live[j] || j == pj) continue;
                a[i][j] = rmf(p_sub(a[i][j], p_mul(factor, a[pi][j])));
            }
        }
        row_live[pi] = false;
        col_live[pj] = false;
    }

    std::vector<int> gdegs, live_rows;
    for (int i = 0; i < nr; ++i)
        if (row_live[i]) {
            gdegs.push_back(m.gens.degs[i]);
            live_rows.push_back(i);
        }
    FreeModule gens = free_module(r, gdegs);

    std::vector<Vec> cols;
    std::vector<int> cdegs;
    for (int j = 0; j < nc; ++j) {
        if (!col_live[j]) continue;
        std::vector<Poly> comp;
        bool zero = true;
        for (int i : live_rows) {
            comp.push_back(a[i][j]);
            if (!a[i][j].is_zero()) zero = false;
        }
        if (zero) continue;
        cols.emplace_back(gens, std::move(comp));
        cdegs.push_back(m.rel.src.degs[j]);
    }
    GradedMatrix rel = make_matrix(gens, free_module(r, cdegs), std::move(cols));
    return make_presented(m.over, std::move(gens), std::move(rel), m.f);
}

namespace {

void check_complex(const Resolution& res) {
    std::vector<Poly> fgb;
    if (res.over == Over::quotient) fgb = f_basis(res.f);
    for (std::size_t k = 0; k < res.diff.size(); ++k) {
        for (const auto& c : res.diff[k].col)
            for (int i = 0; i < c.rank(); ++i)
                ensure(!c[i].is_unit(), "resolution differential has a unit entry");
        if (k + 1 == res.diff.size()) continue;
        GradedMatrix prod = compose(res.diff[k], res.diff[k + 1]);
        for (int i = 0; i < prod.rows(); ++i)
            for (int j = 0; j < prod.cols(); ++j)
                ensure(entry_zero_mod(prod.at(i, j), res.over, res.ring, fgb),
                       "consecutive differentials do not compose to zero");
    }
}

void detect_periodicity(Resolution& res) {
    if (res.over != Over::quotient || res.f.is_zero()) return;
    const int len = res.length();
    if (len < 3) return;
    const int d = res.f.degree();
    auto sorted_shift = [&](int k, int by) {
        std::vector<int> v = res.free_at(k).degs;
        for (int& x : v) x += by;
        std::sort(v.begin(), v.end());
        return v;
    };
    if (sorted_shift(len, 0) == sorted_shift(len - 2, d) &&
        sorted_shift(len - 1, 0) == sorted_shift(len - 3, d)) {
        res.periodic = true;
        res.period_shift = d;
    }
}

}  // namespace

Resolution minimal_resolution(const PresentedModule& m, int max_length) {
    require(max_length >= 1, "resolution length bound must be positive");
    PresentedModule mm = minimalize(m);

    Resolution res;
    res.over = mm.over;
    res.ring = mm.ring;
    res.f = mm.f;
    res.f0 = mm.gens;

    FreeModule cur_amb = mm.gens;
    std::vector<Vec> cur = trim_generators(mm.over, cur_amb, mm.rel.col, mm.f);

    while (!cur.empty()) {
        FreeModule fk = free_module(res.ring, degrees_of(cur_amb, cur));
        res.diff.push_back(make_matrix(cur_amb, fk, cur));
        if (mm.over == Over::ambient) {
            ensure(res.length() <= res.ring->nvars(),
                   "resolution over the polynomial ring exceeded the variable count");
        }
        std::vector<Vec> raw = relations_of(mm.over, cur_amb, cur, mm.f);
        if (mm.over == Over::quotient && res.length() == max_length) {
            res.truncated = !raw.empty();
            break;
        }
        cur_amb = fk;
        cur = trim_generators(mm.over, fk, std::move(raw), mm.f);
    }

    check_complex(res);
    detect_periodicity(res);
    return res;
}

Resolution minimal_resolution_over_s(const PresentedModule& m) {
    if (m.over == Over::ambient) return minimal_resolution(m);
    std::vector<Vec> cols = m.rel.col;
    std::vector<int> degs = m.rel.src.degs;
    const int d = m.f.degree();
    for (int i = 0; i < m.gens.rank(); ++i) {
        cols.push_back(v_poly_mul(v_unit(m.gens, i), m.f));
        degs.push_back(m.gens.degs[i] + d);
    }
    GradedMatrix rel = make_matrix(m.gens, free_module(m.ring, degs), std::move(cols));
    return minimal_resolution(make_presented(Over::ambient, m.gens, std::move(rel)));
}

int projective_dimension_s(const PresentedModule& m) {
    return minimal_resolution_over_s(m).length();
}

BettiTable betti_of(const Resolution& res) {
    BettiTable b;
    b.over = res.over;
    b.truncated = res.truncated;
    b.periodic = res.periodic;
    for (int k = 0; k <= res.length(); ++k)
        for (int d : res.free_at(k).degs) ++b.beta[{k, d}];
    return b;
}

std::string betti_grid(const BettiTable& b) {
    if (b.beta.empty()) return "0\n";
    int imax = 0, rmin = 0, rmax = 0;
    bool first = true;
    for (const auto& [ij, n] : b.beta) {
        (void)n;
        imax = std::max(imax, ij.first);
        int r = ij.second - ij.first;
        if (first) {
            rmin = rmax = r;
            first = false;
        } else {
            rmin = std::min(rmin, r);
            rmax = std::max(rmax, r);
        }
    }

    std::vector<long> total(imax + 1, 0);
    for (const auto& [ij, n] : b.beta) total[ij.first] += n;

    auto cell = [&](int i, int r) -> std::string {
        auto it = b.beta.find({i, r + i});
        return it == b.beta.end() ? "." : std::to_string(it->second);
    };
    std::vector<std::size_t> width(imax + 1);
    for (int i = 0; i <= imax; ++i) {
        width[i] = std::max(std::to_string(i).size(), std::to_string(total[i]).size());
        for (int r = rmin; r <= rmax; ++r) width[i] = std::max(width[i], cell(i, r).size());
    }
    std::size_t label = std::string("total:").size();
    for (int r = rmin; r <= rmax; ++r)
        label = std::max(label, std::to_string(r).size() + 1);

    std::ostringstream out;
    auto pad = [&](const std::string& s, std::size_t w) {
        for (std::size_t t = s.size(); t < w; ++t) out << ' ';
        out << s;
    };
    pad("", label);
    for (int i = 0; i <= imax; ++i) {
        out << "  ";
        pad(std::to_string(i), width[i]);
    }
    out << '\n';
    pad("total:", label);
    for (int i = 0; i <= imax; ++i) {
        out << "  ";
        pad(std::to_string(total[i]), width[i]);
    }
    out << '\n';
    for (int r = rmin; r <= rmax; ++r) {
        pad(std::to_string(r) + ":", label);
        for (int i = 0; i <= imax; ++i) {
            out << "  ";
            pad(cell(i, r), width[i]);
        }
        out << '\n';
    }
    return out.str();
}

std::string betti_json(const BettiTable& b) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& [ij, n] : b.beta) {
        nlohmann::ordered_json e;
        e["i"] = ij.first;
        e["j"] = ij.second;
        e["beta"] = n;
        entries.push_back(e);
    }
    nlohmann::ordered_json j;
    j["entries"] = std::move(entries);
    j["over"] = b.over == Over::quotient ? "quotient" : "ambient";
    j["periodic"] = b.periodic;
    j["truncated"] = b.truncated;
    return j.dump(2);
}

}  // namespace acmforge
