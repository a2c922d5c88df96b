#ifndef KKLAB_DESCENT_HPP
#define KKLAB_DESCENT_HPP

#include "kklab/poly.hpp"
#include "kklab/unipoly.hpp"

#include <cstdint>
#include <vector>

namespace kklab {

// Weil restriction of a hypersurface along l/k: [l:k] forms over k in
// (n+1)m variables, obtained by expanding the coordinates in the power basis
// of l's canonical generator. Variable T_{i,j} has index i*m + j.
struct RestrictionSystem {
    Field base;
    Field ext;
    uint32_t m = 0;
    std::vector<MultiPoly> forms; // entries can vanish; degree matches the input

    // nonzero members as a variety (dropping identically-zero forms, which
    // impose no condition)
    std::vector<Hypersurface> hypersurfaces() const;
};

RestrictionSystem weil_restrict(const Hypersurface& H, Field k);

// Homogeneous form in the X variables whose coefficients are polynomials in
// t over k.
class TPoly {
public:
    explicit TPoly(SparsePoly<UniPoly> poly);

    const SparsePoly<UniPoly>& poly() const { return poly_; }
    Field field() const { return poly_.ring_zero().field(); }
    uint32_t nvars() const { return poly_.nvars(); }
    int64_t x_degree() const { return degree_; }
    int64_t max_t_degree() const { return max_t_degree_; } // M

    static TPoly from_constant_form(const MultiPoly& p);

private:
    SparsePoly<UniPoly> poly_;
    int64_t degree_ = 0;
    int64_t max_t_degree_ = 0;
};

// Substitutes X_i -> sum_r T_{i,r} t^r and collects by powers of t; returns
// exactly d*s + M + 1 degree-d forms in (n+1)(s+1) variables T_{i,r}
// (row-major: i outer, r inner). Entries may be zero polynomials.
std::vector<MultiPoly> t_expand(const TPoly& F, int64_t s);

// The exact defining identity, for verification: reassembles sum_m F_m t^m
// and compares with the direct substitution.
bool t_expand_identity_holds(const TPoly& F, int64_t s, const std::vector<MultiPoly>& forms);

// Smallest integer strictly above (M+1)d^i + n + 1; certifies
// (sd + M + 1) d^i <= (s+1)(n+1) - 1 on every call. Requires d^(i+1) <= n.
int64_t stability_s_bound(int64_t M, int64_t d, int64_t i, int64_t n);

// Hypersurface with series coefficients known modulo t^prec.
struct SeriesForm {
    SparsePoly<UniPoly> poly;
    int64_t prec = 0;
};

// Coefficientwise truncation to t-degree < nu; requires prec >= nu.
TPoly truncate_series_coeffs(const SeriesForm& F, int64_t nu);

} // namespace kklab

#endif
