#include "acmforge/mcm.hpp"

#include <algorithm>

#include "acmforge/errors.hpp"
#include "acmforge/idealops.hpp"

namespace acmforge {

namespace {

int sum(const std::vector<int>& v) {
    int s = 0;
    for (int x : v) s += x;
    return s;
}

bool has_unit_entry(const GradedMatrix& a) {
    for (const auto& c : a.col)
        for (int i = 0; i < c.rank(); ++i)
            if (c[i].is_unit()) return true;
    return false;
}

// determinant of a scalar matrix over the coefficient field
Scalar scalar_det(const Field& k, std::vector<std::vector<Scalar>> m) {
    const int n = static_cast<int>(m.size());
    Scalar det = k.one();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!k.is_zero(m[i][col])) {
                piv = i;
                break;
            }
        if (piv < 0) return k.zero();
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = k.neg(det);
        }
        det = k.mul(det, m[col][col]);
        Scalar inv = k.inv(m[col][col]);
        for (int i = col + 1; i < n; ++i) {
            if (k.is_zero(m[i][col])) continue;
            Scalar factor = k.mul(m[i][col], inv);
            for (int j = col; j < n; ++j) m[i][j] = k.sub(m[i][j], k.mul(factor, m[col][j]));
        }
    }
    return det;
}

void check_det_law(const MatrixFactorization& mf, Rng* rng) {
    const int n = mf.phi.rows();
    if (n == 0) return;
    const Ring r = mf.f.ring();
    const int rank = mf_rank(mf);
    ensure(rank >= 0, "factor twists give a negative rank");

    if (n <= 8) {
        Poly det = determinant(mf.phi);
        ensure(!det.is_zero(), "matrix factor is singular");
        Poly rest = det;
        for (int t = 0; t < rank; ++t) rest = p_div_exact(rest, mf.f);
        ensure(rest.degree() == 0, "determinant is not a constant times f^rank");
        return;
    }

    // identity testing at random points: det(phi)(a) = c * f(a)^rank with one
    // constant c across samples
    Rng fallback(0);
    Rng& gen = rng ? *rng : fallback;
    const Field& k = r->field;
    Scalar c = k.zero();
    bool have_c = false;
    int samples = 0, attempts = 0;
    while (samples < 20) {
        ensure(++attempts <= 2000, "could not sample points off the hypersurface");
        std::vector<Scalar> point;
        for (int i = 0; i < r->nvars(); ++i) point.push_back(k.sample(gen));
        Scalar fv = p_eval(mf.f, point);
        if (k.is_zero(fv)) continue;  // need f(a) != 0 to read off the constant
        ++samples;
        std::vector<std::vector<Scalar>> num(n, std::vector<Scalar>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) num[i][j] = p_eval(mf.phi.at(i, j), point);
        Scalar dv = scalar_det(k, std::move(num));
        Scalar fpow = k.one();
        for (int t = 0; t < rank; ++t) fpow = k.mul(fpow, fv);
        Scalar ratio = k.div(dv, fpow);
        if (!have_c) {
            c = ratio;
            have_c = true;
            ensure(!k.is_zero(c), "matrix factor vanishes at a point off the hypersurface");
        } else {
            ensure(k.eq(c, ratio), "determinant is not a constant times f^rank");
        }
    }
}

}  // namespace

int mf_rank(const MatrixFactorization& mf) {
    const int d = mf.f.degree();
    require(d > 0, "factorized polynomial must be nonconstant");
    int diff = sum(mf.phi.src.degs) - sum(mf.phi.tgt.degs);
    ensure(diff % d == 0, "factor twists are not compatible with the polynomial degree");
    return diff / d;
}

void mf_check(const MatrixFactorization& mf, Rng* rng) {
    require(!mf.f.is_zero() && mf.f.is_homogeneous(), "need a homogeneous nonzero polynomial");
    const int n = mf.phi.rows();
    require(mf.phi.cols() == n, "first factor must be square");
    require(mf.psi.rows() == n && mf.psi.cols() == n, "factor sizes differ");
    const int d = mf.f.degree();
    ensure(same_module(mf.psi.src, twist(mf.phi.tgt, d)), "factor twists do not chain");
    ensure(same_module(mf.psi.tgt, mf.phi.src), "factor twists do not chain");

    ensure(is_scalar_diag(compose(mf.phi, mf.psi), mf.f), "phi * psi is not f * identity");
    ensure(is_scalar_diag(compose(twist_matrix(mf.psi, -d), mf.phi), mf.f),
           "psi * phi is not f * identity");
    if (mf.reduced)
        ensure(!has_unit_entry(mf.phi) && !has_unit_entry(mf.psi),
               "factorization marked reduced but has a unit entry");
    check_det_law(mf, rng);
}

PresentedModule mf_module(const MatrixFactorization& mf) {
    return make_presented(Over::quotient, mf.phi.tgt, mf.phi, mf.f);
}

MatrixFactorization mf_extract(const PresentedModule& e) {
    require(e.over == Over::quotient, "matrix factorizations live over a hypersurface ring");
    Resolution res = minimal_resolution_over_s(e);
    require(res.length() == 1, "module is not maximal Cohen-Macaulay (pd_S != 1)");
    GradedMatrix phi = res.diff[0];
    ensure(phi.rows() == phi.cols(), "torsion module has a non-square minimal presentation");

    const int d = e.f.degree();
    FreeModule psi_src = twist(phi.tgt, d);
    TrackedBasis tb = tracked_groebner(phi.tgt, phi.col);
    std::vector<Vec> psi_cols;
    for (int j = 0; j < phi.rows(); ++j) {
        Vec target = v_poly_mul(v_unit(phi.tgt, j), e.f);
        auto x = solve_in(tb, target);
        ensure(x.has_value(), "f * generator is not a combination of the relations");
        psi_cols.emplace_back(phi.src, std::move(*x));
    }
    MatrixFactorization mf;
    mf.f = e.f;
    mf.phi = std::move(phi);
    mf.psi = make_matrix(mf.phi.src, psi_src, std::move(psi_cols));
    mf.reduced = !has_unit_entry(mf.phi) && !has_unit_entry(mf.psi);
    mf_check(mf);
    return mf;
}

bool is_mcm(const PresentedModule& e) {
    require(e.over == Over::quotient, "depth test is for modules over a hypersurface ring");
    return projective_dimension_s(e) == 1;
}

int module_rank(const PresentedModule& e) {
    require(e.over == Over::quotient, "rank over the hypersurface ring needs f");
    HilbertData he = hilbert_of(e);
    HilbertData hx = hilbert_of(cyclic_module(Over::quotient, e.ring, {}, e.f));
    require(he.dim == hx.dim, "module is not supported on all of the hypersurface");
    ensure(he.degree % hx.degree == 0, "multiplicity is not a multiple of the base degree");
    return static_cast<int>(he.degree / hx.degree);
}

bool hypersurface_smooth(const Poly& f) {
    require(!f.is_zero() && f.is_homogeneous(), "need a homogeneous nonzero polynomial");
    const Ring r = f.ring();
    std::vector<Poly> jac = jacobian_ideal(f);
    return dimension_projective(r, groebner_ideal(r, jac)) == -1;
}

std::optional<int> fitting_locally_free(const PresentedModule& e) {
    require(e.over == Over::quotient, "fiber rank test is for modules on a hypersurface");
    const Ring r = e.ring;
    std::vector<Poly> fgb = groebner_ideal(r, {e.f});

    PresentedModule mm = minimalize(e);
    const GradedMatrix& a = mm.rel;
    const int g = a.rows();
    const int maxk = std::min(a.rows(), a.cols());

    // generic rank on X: the largest size with a minor outside (f)
    int rho = 0;
    for (int k = maxk; k >= 1; --k) {
        bool found = false;
        for_each_minor(a, k, [&](const Poly& m) {
            if (!nf_poly(m, r, fgb).is_zero()) {
                found = true;
                return false;
            }
            return true;
        });
        if (found) {
            rho = k;
            break;
        }
    }
    if (rho == 0) return g;  // no relations mod f: free of rank g

    // constant rank everywhere: rank never exceeds rho on X...
    bool constant = true;
    if (rho < maxk) {
        for_each_minor(a, rho + 1, [&](const Poly& m) {
            if (!nf_poly(m, r, fgb).is_zero()) {
                constant = false;
                return false;
            }
            return true;
        });
    }
    if (!constant) return std::nullopt;

    // ...and never drops below rho: the rho-minors cut out nothing on X
    std::vector<Poly> locus = {e.f};
    std::vector<Poly> gb = groebner_ideal(r, locus);
    bool empty = dimension_projective(r, gb) == -1;
    for_each_minor(a, rho, [&](const Poly& m) {
        if (empty) return false;
        if (nf_poly(m, r, gb).is_zero()) return true;
        locus.push_back(m);
        gb = groebner_ideal(r, locus);
        empty = dimension_projective(r, gb) == -1;
        return true;
    });
    if (!empty) return std::nullopt;
    return g - rho;
}

namespace {

struct StripState {
    // phi rows over F0 (degs c), cols over F1 (degs b); psi the other way
    std::vector<std::vector<Poly>> phi, psi;
    std::vector<int> c, b;
    const Field* k = nullptr;

    int size() const { return static_cast<int>(c.size()); }

    void drop(std::vector<std::vector<Poly>>& m, int row, int col) {
        m.erase(m.begin() + row);
        for (auto& r : m) r.erase(r.begin() + col);
    }

    // remove generator row gi of phi and relation col gj of phi (and the
    // mirrored slots of psi) after the two-sided clearing
    void erase_pair_phi(int i, int j) {
        drop(phi, i, j);
        drop(psi, j, i);
        c.erase(c.begin() + i);
        b.erase(b.begin() + j);
    }

    bool strip_psi_unit(std::vector<int>& twists) {
        const int n = size();
        for (int kk = 0; kk < n; ++kk)
            for (int l = 0; l < n; ++l) {
                if (!psi[kk][l].is_unit()) continue;
                Scalar u_inv = k->inv(psi[kk][l].lead().c);
                // clear row kk of psi by column ops; compensate on phi rows
                for (int l2 = 0; l2 < n; ++l2) {
                    if (l2 == l || psi[kk][l2].is_zero()) continue;
                    Poly w = p_scale(psi[kk][l2], u_inv);
                    for (int t = 0; t < n; ++t)
                        psi[t][l2] = p_sub(psi[t][l2], p_mul(w, psi[t][l]));
                    for (int t = 0; t < n; ++t)
                        phi[l][t] = p_add(phi[l][t], p_mul(w, phi[l2][t]));
                }
                // clear column l of psi by row ops; compensate on phi columns
                for (int k2 = 0; k2 < n; ++k2) {
                    if (k2 == kk || psi[k2][l].is_zero()) continue;
                    Poly v = p_scale(psi[k2][l], u_inv);
                    for (int t = 0; t < n; ++t)
                        psi[k2][t] = p_sub(psi[k2][t], p_mul(v, psi[kk][t]));
                    for (int t = 0; t < n; ++t)
                        phi[t][kk] = p_add(phi[t][kk], p_mul(v, phi[t][k2]));
                }
                twists.push_back(-c[l]);
                drop(psi, kk, l);
                drop(phi, l, kk);
                c.erase(c.begin() + l);
                b.erase(b.begin() + kk);
                return true;
            }
        return false;
    }

    bool strip_phi_unit() {
        const int n = size();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (!phi[i][j].is_unit()) continue;
                Scalar u_inv = k->inv(phi[i][j].lead().c);
                for (int j2 = 0; j2 < n; ++j2) {
                    if (j2 == j || phi[i][j2].is_zero()) continue;
                    Poly w = p_scale(phi[i][j2], u_inv);
                    for (int t = 0; t < n; ++t)
                        phi[t][j2] = p_sub(phi[t][j2], p_mul(w, phi[t][j]));
                    for (int t = 0; t < n; ++t)
                        psi[j][t] = p_add(psi[j][t], p_mul(w, psi[j2][t]));
                }
                for (int i2 = 0; i2 < n; ++i2) {
                    if (i2 == i || phi[i2][j].is_zero()) continue;
                    Poly v = p_scale(phi[i2][j], u_inv);
                    for (int t = 0; t < n; ++t)
                        phi[i2][t] = p_sub(phi[i2][t], p_mul(v, phi[i][t]));
                    for (int t = 0; t < n; ++t)
                        psi[t][i] = p_add(psi[t][i], p_mul(v, psi[t][i2]));
                }
                drop(phi, i, j);
                drop(psi, j, i);
                c.erase(c.begin() + i);
                b.erase(b.begin() + j);
                return true;
            }
        return false;
    }
};

}  // namespace

SplitResult split_detect(const PresentedModule& e) {
    MatrixFactorization mf = mf_extract(e);
    const Ring r = e.ring;
    const int d = e.f.degree();

    StripState st;
    st.k = &r->field;
    st.c = mf.phi.tgt.degs;
    st.b = mf.phi.src.degs;
    const int n = mf.phi.rows();
    st.phi.assign(n, std::vector<Poly>(n));
    st.psi.assign(n, std::vector<Poly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            st.phi[i][j] = mf.phi.at(i, j);
            st.psi[i][j] = mf.psi.at(i, j);
        }

    SplitResult out;
    for (;;) {
        if (st.strip_psi_unit(out.line_twists)) continue;
        if (st.strip_phi_unit()) continue;
        break;
    }
    std::sort(out.line_twists.begin(), out.line_twists.end());

    if (st.size() == 0) {
        out.fully_split = true;
        return out;
    }

    FreeModule f0 = free_module(r, st.c);
    FreeModule f1 = free_module(r, st.b);
    MatrixFactorization core;
    core.f = e.f;
    core.phi = make_matrix_from_entries(f0, f1, st.phi);
    core.psi = make_matrix_from_entries(f1, twist(f0, d), st.psi);
    core.reduced = true;
    mf_check(core);
    out.core = std::move(core);
    return out;
}

long long h0_twist(const PresentedModule& e, int nu) {
    return hilbert_function(hilbert_of(e), nu);
}

bool ideal_acm(const Ring& r, const std::vector<Poly>& saturated_ideal) {
    PresentedModule m = cyclic_module(Over::ambient, r, saturated_ideal);
    HilbertData h = hilbert_of(m);
    require(h.dim >= 0, "the unit ideal has no subscheme");
    int codim = r->nvars() - h.dim;
    return projective_dimension_s(m) == codim;
}

}  // namespace acmforge
