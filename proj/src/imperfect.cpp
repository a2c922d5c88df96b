#include "kklab/imperfect.hpp"

namespace kklab {

namespace {

// inverse Frobenius in the coefficient field: x -> x^(p^(n-1))
FieldElem inv_frobenius(const FieldElem& c) {
    uint32_t n = c.field().degree();
    return n == 1 ? c : frobenius(c, n - 1);
}

} // namespace

std::vector<RationalFunc> p_basis_decompose(const RationalFunc& x) {
    Field f = x.field();
    uint32_t p = f.p();
    // clear the denominator by a p-th power: x = num * den^(p-1) / den^p
    UniPoly scaled_num = x.num() * x.den().pow(p - 1);
    const UniPoly& den = x.den();

    std::vector<RationalFunc> out;
    out.reserve(p);
    for (uint32_t i = 0; i < p; ++i) {
        // exponent class i: coefficients of u^(p j + i), root taken
        std::vector<FieldElem> bi;
        for (int64_t e = i; e <= scaled_num.degree(); e += p)
            bi.push_back(inv_frobenius(scaled_num.coeff(e)));
        out.emplace_back(UniPoly(f, bi), den);
    }
    return out;
}

RationalFunc insep_norm_preimage(const RationalFunc& x) {
    require(!x.is_zero(), Errc::ZeroArgument, "norm preimage of zero");
    Field f = x.field();
    uint32_t p = f.p();
    auto lambda = p_basis_decompose(x);
    // y = sum_i lambda_i(v^p) * v^i
    RationalFunc y(f);
    for (uint32_t i = 0; i < p; ++i) {
        if (lambda[i].is_zero()) continue;
        RationalFunc term(lambda[i].num().compose_xpow(p), lambda[i].den().compose_xpow(p));
        std::vector<uint64_t> vi(i + 1, 0);
        vi[i] = 1;
        y = y + term * RationalFunc::from_poly(UniPoly::from_ranks(f, vi));
    }
    return y;
}

RationalFunc RationalBinaryForm::evaluate(const RationalFunc& x0, const RationalFunc& x1) const {
    return poly.evaluate({x0, x1});
}

RationalBinaryForm insep_normic_hypersurface(const RationalFunc& a) {
    require(!a.is_zero(), Errc::ZeroArgument, "coefficient must be nonzero");
    Field f = a.field();
    uint32_t p = f.p();
    auto lambda = p_basis_decompose(a);
    bool pth_power = true;
    for (uint32_t i = 1; i < p; ++i) pth_power = pth_power && lambda[i].is_zero();
    require(!pth_power, Errc::IsPthPower, "coefficient is a p-th power");

    RationalBinaryForm form{SparsePoly<RationalFunc>(2, RationalFunc(f)), p};
    form.poly.add_term({p, 0}, RationalFunc::constant(FieldElem::one(f)));
    form.poly.add_term({0, p}, a);
    return form;
}

} // namespace kklab
