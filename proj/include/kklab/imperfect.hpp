#ifndef KKLAB_IMPERFECT_HPP
#define KKLAB_IMPERFECT_HPP

#include "kklab/poly.hpp"
#include "kklab/unipoly.hpp"

#include <vector>

namespace kklab {

// Rational function fields F_q(u) as imperfect fields of p-degree p: the
// p-th power subfield is F_q(u^p), with p-basis {1, u, ..., u^{p-1}}.

// lambda_0..lambda_{p-1} with x = sum_i lambda_i^p u^i, exactly.
std::vector<RationalFunc> p_basis_decompose(const RationalFunc& x);

// y in F_q(v) with y^p = x under u = v^p; the norm preimage along the purely
// inseparable extension F_q(u^{1/p}) / F_q(u).
RationalFunc insep_norm_preimage(const RationalFunc& x);

// The binary form X_0^p + a X_1^p over F_q(u); requires a outside the p-th
// powers (errors IsPthPower otherwise). Its only solution with both
// coordinates in F_q(u) is the origin.
struct RationalBinaryForm {
    SparsePoly<RationalFunc> poly; // two variables, degree p
    uint32_t p = 0;

    RationalFunc evaluate(const RationalFunc& x0, const RationalFunc& x1) const;
};

RationalBinaryForm insep_normic_hypersurface(const RationalFunc& a);

} // namespace kklab

#endif
