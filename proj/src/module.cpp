#include "acmforge/module.hpp"

#include <algorithm>

namespace acmforge {

bool same_module(const FreeModule& a, const FreeModule& b) {
    return a.ring == b.ring && a.degs == b.degs;
}

FreeModule twist(const FreeModule& f, int by) {
    FreeModule r = f;
    for (int& d : r.degs) d += by;
    return r;
}

FreeModule dual_module(const FreeModule& f) {
    FreeModule r = f;
    for (int& d : r.degs) d = -d;
    return r;
}

Vec::Vec(const FreeModule& f) : c_(f.degs.size(), Poly(f.ring)) {}

Vec::Vec(const FreeModule& f, std::vector<Poly> comps) : c_(std::move(comps)) {
    require(static_cast<int>(c_.size()) == f.rank(), "component count mismatch");
    for (auto& p : c_) {
        if (!p.ring()) p = Poly(f.ring);
        require(p.ring() == f.ring, "component from a different ring");
    }
}

bool Vec::is_zero() const {
    for (const auto& p : c_)
        if (!p.is_zero()) return false;
    return true;
}

Vec v_unit(const FreeModule& f, int comp) {
    Vec v(f);
    v[comp] = p_one(f.ring);
    return v;
}

static void check_ranks(const Vec& a, const Vec& b) {
    require(a.rank() == b.rank(), "module rank mismatch");
}

Vec v_add(const Vec& a, const Vec& b) {
    check_ranks(a, b);
    Vec r = a;
    for (int i = 0; i < a.rank(); ++i) r[i] = p_add(a[i], b[i]);
    return r;
}

Vec v_sub(const Vec& a, const Vec& b) {
    check_ranks(a, b);
    Vec r = a;
    for (int i = 0; i < a.rank(); ++i) r[i] = p_sub(a[i], b[i]);
    return r;
}

Vec v_neg(const Vec& a) {
    Vec r = a;
    for (int i = 0; i < a.rank(); ++i) r[i] = p_neg(a[i]);
    return r;
}

Vec v_scale(const Vec& a, const Scalar& c) {
    Vec r = a;
    for (int i = 0; i < a.rank(); ++i) r[i] = p_scale(a[i], c);
    return r;
}

Vec v_term_mul(const Vec& a, const Monomial& m, const Scalar& c) {
    Vec r = a;
    for (int i = 0; i < a.rank(); ++i) r[i] = p_term_mul(a[i], m, c);
    return r;
}

Vec v_poly_mul(const Vec& a, const Poly& p) {
    Vec r = a;
    for (int i = 0; i < a.rank(); ++i) r[i] = p_mul(a[i], p);
    return r;
}

bool v_eq(const Vec& a, const Vec& b) {
    check_ranks(a, b);
    for (int i = 0; i < a.rank(); ++i)
        if (!p_eq(a[i], b[i])) return false;
    return true;
}

std::optional<VecLead> v_lead(const Vec& a, const ModOrder& ord) {
    std::optional<VecLead> best;
    for (int i = 0; i < a.rank(); ++i) {
        if (a[i].is_zero()) continue;
        // the ring order is translation-invariant, so each component's own
        // lead term is its best candidate under the module order too
        const Term& t = a[i].lead();
        if (!best || ord.cmp(i, t.m, best->comp, best->term.m) > 0) best = VecLead{i, t};
    }
    return best;
}

std::optional<int> v_degree(const Vec& a, const FreeModule& f) {
    std::optional<int> deg;
    for (int i = 0; i < a.rank(); ++i) {
        if (a[i].is_zero()) continue;
        ensure(a[i].is_homogeneous(), "inhomogeneous component");
        int d = a[i].degree() + f.degs[i];
        ensure(!deg || *deg == d, "mixed-degree element");
        deg = d;
    }
    return deg;
}

bool v_is_homogeneous(const Vec& a, const FreeModule& f) {
    std::optional<int> deg;
    for (int i = 0; i < a.rank(); ++i) {
        if (a[i].is_zero()) continue;
        if (!a[i].is_homogeneous()) return false;
        int d = a[i].degree() + f.degs[i];
        if (deg && *deg != d) return false;
        deg = d;
    }
    return true;
}

std::string v_str(const Vec& a) {
    std::string out = "(";
    for (int i = 0; i < a.rank(); ++i) {
        if (i) out += ", ";
        out += p_str(a[i]);
    }
    return out + ")";
}

GradedMatrix make_matrix(FreeModule tgt, FreeModule src, std::vector<Vec> cols) {
    require(tgt.ring == src.ring, "source and target over different rings");
    require(static_cast<int>(cols.size()) == src.rank(), "column count mismatch");
    for (int j = 0; j < src.rank(); ++j) {
        require(cols[j].rank() == tgt.rank(), "column rank mismatch");
        for (int i = 0; i < tgt.rank(); ++i) {
            const Poly& p = cols[j][i];
            if (p.is_zero()) continue;
            ensure(p.is_homogeneous() && p.degree() == src.degs[j] - tgt.degs[i],
                   "matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                       ") is not homogeneous of degree " +
                       std::to_string(src.degs[j] - tgt.degs[i]));
        }
    }
    return GradedMatrix{std::move(tgt), std::move(src), std::move(cols)};
}

GradedMatrix make_matrix_from_entries(FreeModule tgt, FreeModule src,
                                      std::vector<std::vector<Poly>> rows) {
    require(static_cast<int>(rows.size()) == tgt.rank(), "row count mismatch");
    std::vector<Vec> cols;
    for (int j = 0; j < src.rank(); ++j) {
        Vec col(tgt);
        for (int i = 0; i < tgt.rank(); ++i) {
            require(static_cast<int>(rows[i].size()) == src.rank(), "ragged entry rows");
            if (rows[i][j].ring()) col[i] = rows[i][j];
        }
        cols.push_back(std::move(col));
    }
    return make_matrix(std::move(tgt), std::move(src), std::move(cols));
}

GradedMatrix identity_matrix(const FreeModule& f) {
    std::vector<Vec> cols;
    for (int j = 0; j < f.rank(); ++j) cols.push_back(v_unit(f, j));
    return make_matrix(f, f, std::move(cols));
}

GradedMatrix zero_matrix(FreeModule tgt, FreeModule src) {
    std::vector<Vec> cols(src.rank(), Vec(tgt));
    return make_matrix(std::move(tgt), std::move(src), std::move(cols));
}

Vec apply(const GradedMatrix& a, const Vec& v) {
    require(v.rank() == a.cols(), "vector rank does not match matrix source");
    Vec out(a.tgt);
    for (int j = 0; j < a.cols(); ++j) {
        if (v[j].is_zero()) continue;
        out = v_add(out, v_poly_mul(a.col[j], v[j]));
    }
    return out;
}

GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b) {
    require(same_module(a.src, b.tgt), "composition interface mismatch");
    std::vector<Vec> cols;
    cols.reserve(b.cols());
    for (int j = 0; j < b.cols(); ++j) cols.push_back(apply(a, b.col[j]));
    return make_matrix(a.tgt, b.src, std::move(cols));
}

GradedMatrix transpose(const GradedMatrix& a) {
    FreeModule tgt = dual_module(a.src);
    FreeModule src = dual_module(a.tgt);
    std::vector<Vec> cols;
    for (int i = 0; i < a.rows(); ++i) {
        Vec col(tgt);
        for (int j = 0; j < a.cols(); ++j) col[j] = a.at(i, j);
        cols.push_back(std::move(col));
    }
    return make_matrix(std::move(tgt), std::move(src), std::move(cols));
}

GradedMatrix twist_matrix(const GradedMatrix& a, int by) {
    return make_matrix(twist(a.tgt, by), twist(a.src, by), a.col);
}

GradedMatrix m_scale(const GradedMatrix& a, const Scalar& c) {
    std::vector<Vec> cols;
    for (const auto& col : a.col) cols.push_back(v_scale(col, c));
    return make_matrix(a.tgt, a.src, std::move(cols));
}

bool m_eq(const GradedMatrix& a, const GradedMatrix& b) {
    if (!same_module(a.tgt, b.tgt) || !same_module(a.src, b.src)) return false;
    for (int j = 0; j < a.cols(); ++j)
        if (!v_eq(a.col[j], b.col[j])) return false;
    return true;
}

bool is_scalar_diag(const GradedMatrix& a, const Poly& p) {
    if (a.rows() != a.cols()) return false;
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            const Poly& e = a.at(i, j);
            if (i == j ? !p_eq(e, p) : !e.is_zero()) return false;
        }
    }
    return true;
}

namespace {

Poly det_cofactor(const Ring& r, const std::vector<std::vector<Poly>>& m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return p_one(r);
    if (n == 1) return m[0][0];
    if (n == 2) return p_sub(p_mul(m[0][0], m[1][1]), p_mul(m[0][1], m[1][0]));
    Poly acc(r);
    for (int j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly>> sub;
        for (int i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (int jj = 0; jj < n; ++jj)
                if (jj != j) row.push_back(m[i][jj]);
            sub.push_back(std::move(row));
        }
        Poly term = p_mul(m[0][j], det_cofactor(r, sub));
        acc = j % 2 == 0 ? p_add(acc, term) : p_sub(acc, term);
    }
    return acc;
}

// Bareiss one-step fraction-free elimination; all divisions are exact.
Poly det_bareiss(const Ring& r, std::vector<std::vector<Poly>> m) {
    int n = static_cast<int>(m.size());
    Poly denom = p_one(r);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i) {
                if (!m[i][k].is_zero()) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) return Poly(r);  // entire column zero below: det = 0
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Poly num = p_sub(p_mul(m[i][j], m[k][k]), p_mul(m[i][k], m[k][j]));
                m[i][j] = num.is_zero() ? num : p_div_exact(num, denom);
            }
            m[i][k] = Poly(r);
        }
        denom = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    return sign < 0 ? p_neg(det) : det;
}

}  // namespace

Poly determinant_of(const Ring& r, const std::vector<std::vector<Poly>>& m) {
    int n = static_cast<int>(m.size());
    for (const auto& row : m) require(static_cast<int>(row.size()) == n, "non-square matrix");
    if (n <= 3) return det_cofactor(r, m);
    return det_bareiss(r, m);
}

Poly determinant(const GradedMatrix& a) {
    require(a.rows() == a.cols(), "determinant of a non-square matrix");
    std::vector<std::vector<Poly>> m(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            Poly e = a.at(i, j);
            if (!e.ring()) e = Poly(a.tgt.ring);
            m[i].push_back(std::move(e));
        }
    }
    return determinant_of(a.tgt.ring, m);
}

void for_each_minor(const GradedMatrix& a, int k,
                    const std::function<bool(const Poly&)>& visit) {
    int nr = a.rows(), nc = a.cols();
    if (k > nr || k > nc || k < 0) return;
    if (k == 0) {
        visit(p_one(a.tgt.ring));
        return;
    }
    std::vector<int> ri(k), ci(k);
    for (int i = 0; i < k; ++i) ri[i] = ci[i] = i;
    auto advance = [&](std::vector<int>& idx, int bound) {
        int i = k - 1;
        while (i >= 0 && idx[i] == bound - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        return true;
    };
    for (;;) {
        for (int i = 0; i < k; ++i) ci[i] = i;
        for (;;) {
            std::vector<std::vector<Poly>> sub(k);
            for (int i = 0; i < k; ++i) {
                for (int j = 0; j < k; ++j) {
                    Poly e = a.at(ri[i], ci[j]);
                    if (!e.ring()) e = Poly(a.tgt.ring);
                    sub[i].push_back(std::move(e));
                }
            }
            if (!visit(determinant_of(a.tgt.ring, sub))) return;
            if (!advance(ci, nc)) break;
        }
        if (!advance(ri, nr)) break;
    }
}

std::string matrix_str(const GradedMatrix& a) {
    std::string out;
    for (int i = 0; i < a.rows(); ++i) {
        out += "[ ";
        for (int j = 0; j < a.cols(); ++j) {
            if (j) out += " | ";
            const Poly& e = a.at(i, j);
            out += e.ring() ? p_str(e) : "0";
        }
        out += " ]\n";
    }
    return out;
}

}  // namespace acmforge
