#include "acmforge/constructions.hpp"

#include <algorithm>

#include "acmforge/idealops.hpp"

namespace acmforge {

namespace {

std::string field_caveat(const Field& k) {
    if (k.kind() == FieldKind::rational)
        return "computed over Q: verdicts are exact in characteristic zero";
    return "computed over F_" + std::to_string(k.characteristic()) +
           ": non-splitness over a finite field transfers to characteristic zero "
           "only up to semicontinuity";
}

// generators of Hom(G, S_X) inside the dual of G's generator module:
// the kernel of the transposed presentation
std::vector<Vec> dual_generators(const PresentedModule& g) {
    FreeModule f0d = dual_module(g.gens);
    if (g.rel.cols() == 0) {
        std::vector<Vec> units;
        for (int i = 0; i < f0d.rank(); ++i) units.push_back(v_unit(f0d, i));
        return units;
    }
    GradedMatrix rt = transpose(g.rel);
    return trim_generators(Over::quotient, f0d,
                           relations_of(Over::quotient, rt.tgt, rt.col, g.f), g.f);
}

}  // namespace

QuestionCertificate question_certificate(const PresentedModule& g, bool subscheme_acm) {
    QuestionCertificate c;
    c.acm = subscheme_acm;
    c.caveat = field_caveat(g.ring->field);

    SplitResult sr = split_detect(g);
    c.split = sr.fully_split;
    c.line_twists = sr.line_twists;
    c.core_size = sr.core ? sr.core->phi.rows() : 0;

    if (c.split) {
        c.chain.push_back("split_detect: G is a sum of line bundles");
        c.q2 = "no obstruction found";
        c.q3 = "no obstruction found";
        return c;
    }
    c.chain.push_back("split_detect: a reduced factorization core of size " +
                      std::to_string(c.core_size) +
                      " remains, so G is not a sum of line bundles");
    if (!subscheme_acm) {
        c.q2 = "not evaluated: Y is not arithmetically Cohen-Macaulay";
        c.q3 = c.q2;
        return c;
    }
    c.chain.push_back("rule: if Y were X cap S for a pure codimension-two subvariety S of "
                      "P^n, G would be a sum of line bundles");
    c.q2 = "no pure codimension-two subvariety S of P^n has X cap S = Y";
    c.chain.push_back("rule: if the conormal sequence of Y in X split, G would be a sum of "
                      "line bundles");
    c.q3 = "the conormal sequence of Y in X does not split";
    return c;
}

Poly voisin_default_f(const Ring& r, int d) {
    require(r->nvars() == 5, "five variables expected");
    require(d >= 2, "degree must be at least two");
    if (d == 2) return p_parse(r, "x0*x4 + x1*x3 + x2^2");
    std::string tail = "x0*x4^" + std::to_string(d - 1);
    std::string head;
    for (int i = 0; i < 4; ++i)
        head += "x" + std::to_string(i) + "^" + std::to_string(d) + " + ";
    return p_parse(r, head + tail);
}

VoisinConfig voisin_build_with(const Ring& r, const Poly& f) {
    require(r->nvars() == 5, "five variables expected");
    require(!f.is_zero() && f.is_homogeneous() && f.degree() >= 2,
            "hypersurface equation must be homogeneous of degree at least two");

    std::vector<Poly> plane1 = {p_var(r, 0), p_var(r, 1)};
    std::vector<Poly> plane2 = {p_var(r, 2), p_var(r, 3)};
    std::vector<Poly> point = {p_var(r, 0), p_var(r, 1), p_var(r, 2), p_var(r, 3)};
    ensure(dimension_projective(r, ideal_sum(r, plane1, plane2)) == 0,
           "the two planes must meet in a single point");

    std::vector<Scalar> p(5, r->field.zero());
    p[4] = r->field.one();
    require(r->field.is_zero(p_eval(f, p)), "the hypersurface must pass through the point");
    require(!ideal_member(f, r, groebner_ideal(r, plane1)) &&
                !ideal_member(f, r, groebner_ideal(r, plane2)),
            "the hypersurface must not contain either plane");

    VoisinConfig cfg;
    cfg.ring = r;
    cfg.f = f;
    cfg.d = f.degree();
    cfg.smooth = hypersurface_smooth(f);
    cfg.i_sigma = ideal_intersect(r, plane1, plane2);
    cfg.i_z = ideal_sum(r, cfg.i_sigma, {f});
    cfg.i_y = ideal_saturate(r, cfg.i_z, point);

    PresentedModule m0 = present_submodule(Over::quotient, free_module(r, {0}),
                                           to_vec1(r, cfg.i_y), f);
    cfg.gen_degrees = m0.gens.degs;
    cfg.g = present_submodule(Over::quotient, m0.gens, m0.rel.col, f);
    cfg.cert = question_certificate(cfg.g, ideal_acm(r, cfg.i_y));
    return cfg;
}

VoisinConfig voisin_build(int d, std::uint64_t seed, int retries) {
    require(d >= 2, "degree must be at least two");
    Ring r = make_ring(Field::prime(kDefaultPrime), {"x0", "x1", "x2", "x3", "x4"});
    Rng rng(seed);
    Monomial apex = Monomial::var(4, d);
    std::vector<Poly> plane1 = {p_var(r, 0), p_var(r, 1)};
    std::vector<Poly> plane2 = {p_var(r, 2), p_var(r, 3)};

    for (int attempt = 0; attempt <= retries; ++attempt) {
        std::vector<Term> terms;
        for (const auto& m : monomials_of_degree(5, d)) {
            if (m == apex) continue;  // forces f(p) = 0
            terms.push_back(Term{m, r->field.sample(rng)});
        }
        Poly f(r, std::move(terms));
        if (f.is_zero()) continue;
        if (ideal_member(f, r, groebner_ideal(r, plane1))) continue;
        if (ideal_member(f, r, groebner_ideal(r, plane2))) continue;
        if (!hypersurface_smooth(f)) continue;
        return voisin_build_with(r, f);
    }
    throw RetryExhausted("no smooth degree-" + std::to_string(d) +
                         " hypersurface through the point found in " +
                         std::to_string(retries + 1) + " samples");
}

LinspaceResult linear_space_bundle(const Ring& ring, const Poly& f,
                                   const std::vector<Poly>& linear_forms) {
    require(!f.is_zero() && f.is_homogeneous() && f.degree() >= 2,
            "hypersurface equation must be homogeneous of degree at least two");
    require(!linear_forms.empty(), "the linear space needs at least one form");
    for (const auto& l : linear_forms)
        require(!l.is_zero() && l.is_homogeneous() && l.degree() == 1,
                "the linear space must be cut out by linear forms");

    // reduced GB of a linear ideal is a row-reduced independent basis
    std::vector<Poly> basis = groebner_ideal(ring, linear_forms);
    int codim = static_cast<int>(basis.size()) - 1;  // codimension inside X
    require(codim >= 2, "a divisorial linear section has no kernel stage");
    require(ideal_member(f, ring, basis), "the linear space must lie on the hypersurface");

    PresentedModule m = present_submodule(Over::quotient, free_module(ring, {0}),
                                          to_vec1(ring, basis), f);
    for (int step = 0; step < codim - 1; ++step) {
        ensure(m.rel.cols() > 0, "presentation terminated before the kernel stage");
        m = present_submodule(Over::quotient, m.gens, m.rel.col, f);
    }

    LinspaceResult out;
    out.r = codim;
    out.m = m;
    out.mcm = is_mcm(m);
    ensure(out.mcm, "the kernel of the length r-2 presentation must be maximal "
                    "Cohen-Macaulay");
    out.split = split_detect(m);
    out.caveat = field_caveat(ring->field);
    return out;
}

std::vector<int> kleiman_default_twists(const PresentedModule& g) {
    require(g.over == Over::quotient, "the bundle must live on the hypersurface");
    int cmin = *std::min_element(g.gens.degs.begin(), g.gens.degs.end());
    int m = 1 - cmin;  // smallest twist making every map entry nonconstant
    for (const Vec& u : dual_generators(g)) {
        std::optional<int> deg = v_degree(u, dual_module(g.gens));
        if (deg && *deg > m) m = *deg;  // keep every dual generator usable
    }
    return std::vector<int>(static_cast<size_t>(module_rank(g)) + 1, m);
}

KleimanResult kleiman_locus(const PresentedModule& g, std::vector<int> twists,
                            std::uint64_t seed, int retries) {
    require(g.over == Over::quotient, "the bundle must live on the hypersurface");
    require(is_mcm(g), "the bundle must be maximal Cohen-Macaulay");
    const Ring& r = g.ring;
    const Poly& f = g.f;
    int rank = module_rank(g);
    int k = rank + 1;
    if (twists.empty()) twists = kleiman_default_twists(g);
    require(static_cast<int>(twists.size()) == k,
            "need rank + 1 twists for the dependency construction");

    FreeModule f0d = dual_module(g.gens);
    std::vector<Vec> duals = dual_generators(g);
    std::vector<int> ddeg;
    for (const Vec& u : duals) {
        std::optional<int> deg = v_degree(u, f0d);
        ensure(deg.has_value(), "zero dual generator");
        ddeg.push_back(*deg);
    }

    Rng rng(seed);
    std::vector<Poly> irr = irrelevant_ideal(r);
    for (int attempt = 0; attempt <= retries; ++attempt) {
        std::vector<int> m(twists);
        for (int& mi : m) mi += attempt;

        std::vector<int> tdegs;
        for (int mi : m) tdegs.push_back(-mi);
        FreeModule t = free_module(r, tdegs);

        // sample one functional of degree m_i per row and assemble the map
        std::vector<std::vector<Poly>> rows;
        bool degenerate = false;
        for (int i = 0; i < k; ++i) {
            Vec phi(f0d);
            for (size_t j = 0; j < duals.size(); ++j) {
                if (m[i] - ddeg[j] < 0) continue;
                phi = v_add(phi, v_poly_mul(duals[j], p_random_homog(r, m[i] - ddeg[j], rng)));
            }
            phi = reduce_mod_f(phi, f);
            if (phi.is_zero()) degenerate = true;
            std::vector<Poly> row;
            for (int l = 0; l < g.gens.rank(); ++l) row.push_back(phi[l]);
            rows.push_back(std::move(row));
        }
        if (degenerate) continue;
        GradedMatrix map = make_matrix_from_entries(t, g.gens, rows);

        // dual of the cokernel: must be generated by a single functional
        FreeModule td = dual_module(t);
        GradedMatrix mt = transpose(map);
        std::vector<Vec> ker = trim_generators(
            Over::quotient, td, relations_of(Over::quotient, mt.tgt, mt.col, f), f);
        if (ker.size() != 1) continue;
        const Vec& gamma = ker[0];

        std::vector<Poly> q = {f};
        for (int i = 0; i < k; ++i)
            if (!gamma[i].is_zero()) q.push_back(gamma[i]);
        std::vector<Poly> i_y = ideal_saturate(r, q, irr);
        if (dimension_projective(r, i_y) != 1) continue;

        // minor ideal of the sampled map: the determinantal witness, and the
        // mandatory cross-check on the recovered ideal
        std::vector<Poly> minors;
        for_each_minor(map, k - 1, [&](const Poly& p) {
            if (!p.is_zero()) minors.push_back(p);
            return true;
        });
        std::vector<Poly> i_s = groebner_ideal(r, minors);
        std::vector<Poly> with_f(i_s);
        with_f.push_back(f);
        std::vector<Poly> sat_fit = ideal_saturate(r, with_f, irr);
        ensure(ideal_equal(r, groebner_ideal(r, i_y), groebner_ideal(r, sat_fit)),
               "dependency locus: minor ideal and dual recovery disagree");

        KleimanResult out;
        out.i_y = i_y;
        out.i_s = i_s;
        out.twists = m;
        out.retries_used = attempt;
        HilbertData hy = hilbert_of(cyclic_module(Over::ambient, r, i_y));
        out.deg_y = hy.degree;
        out.acm = ideal_acm(r, i_y);
        out.cert = question_certificate(g, out.acm);
        return out;
    }
    throw RetryExhausted("no codimension-two dependency locus in " +
                         std::to_string(retries + 1) + " attempts");
}

}  // namespace acmforge
