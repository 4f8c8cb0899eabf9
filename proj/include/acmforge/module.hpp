#pragma once
#include <functional>
#include <optional>
#include <vector>

#include "acmforge/poly.hpp"

namespace acmforge {

// Graded free module F = (+) R(-degs[i]). degs[i] is the degree of the i-th
// generator, so an element of degree d has degree d - degs[i] in component i.
struct FreeModule {
    Ring ring;
    std::vector<int> degs;

    int rank() const { return static_cast<int>(degs.size()); }
};

bool same_module(const FreeModule& a, const FreeModule& b);
FreeModule twist(const FreeModule& f, int by);       // F(-by): degs[i] + by
FreeModule dual_module(const FreeModule& f);         // degs negated

// Element of a free module: dense component list.
class Vec {
public:
    Vec() = default;
    explicit Vec(const FreeModule& f);
    Vec(const FreeModule& f, std::vector<Poly> comps);

    int rank() const { return static_cast<int>(c_.size()); }
    const Poly& operator[](int i) const { return c_[i]; }
    Poly& operator[](int i) { return c_[i]; }
    bool is_zero() const;

private:
    std::vector<Poly> c_;
};

struct VecLead {
    int comp;
    Term term;
};

Vec v_unit(const FreeModule& f, int comp);           // e_comp
Vec v_add(const Vec& a, const Vec& b);
Vec v_sub(const Vec& a, const Vec& b);
Vec v_neg(const Vec& a);
Vec v_scale(const Vec& a, const Scalar& c);
Vec v_term_mul(const Vec& a, const Monomial& m, const Scalar& c);
Vec v_poly_mul(const Vec& a, const Poly& p);
bool v_eq(const Vec& a, const Vec& b);
std::optional<VecLead> v_lead(const Vec& a, const ModOrder& ord);

// degree of a homogeneous element (throws if inhomogeneous); nullopt for zero
std::optional<int> v_degree(const Vec& a, const FreeModule& f);
bool v_is_homogeneous(const Vec& a, const FreeModule& f);

std::string v_str(const Vec& a);

// Graded map src -> tgt, stored column-wise: col[j] is the image of the j-th
// generator of src and must be homogeneous of degree src.degs[j]. This is
// checked unconditionally at construction.
struct GradedMatrix {
    FreeModule tgt, src;
    std::vector<Vec> col;

    int rows() const { return tgt.rank(); }
    int cols() const { return src.rank(); }
    const Poly& at(int i, int j) const { return col[j][i]; }
};

GradedMatrix make_matrix(FreeModule tgt, FreeModule src, std::vector<Vec> cols);
GradedMatrix make_matrix_from_entries(FreeModule tgt, FreeModule src,
                                      std::vector<std::vector<Poly>> rows_of_entries);
GradedMatrix identity_matrix(const FreeModule& f);
GradedMatrix zero_matrix(FreeModule tgt, FreeModule src);

Vec apply(const GradedMatrix& a, const Vec& v);
GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b);  // a after b
GradedMatrix transpose(const GradedMatrix& a);
GradedMatrix twist_matrix(const GradedMatrix& a, int by);  // same entries, both sides twisted
GradedMatrix m_scale(const GradedMatrix& a, const Scalar& c);
bool m_eq(const GradedMatrix& a, const GradedMatrix& b);
bool is_scalar_diag(const GradedMatrix& a, const Poly& p);  // a == p * identity

// exact determinant: cofactor expansion for n <= 3, fraction-free elimination
// above that (entries stay in the ring; divisions are exact)
Poly determinant(const GradedMatrix& a);
Poly determinant_of(const Ring& r, const std::vector<std::vector<Poly>>& m);

// visit every k x k minor (row/col index sets ascending-lexicographic);
// stop early when the visitor returns false
void for_each_minor(const GradedMatrix& a, int k,
                    const std::function<bool(const Poly&)>& visit);

std::string matrix_str(const GradedMatrix& a);

}  // namespace acmforge
