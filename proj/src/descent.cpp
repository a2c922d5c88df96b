#include "kklab/descent.hpp"

namespace kklab {

std::vector<Hypersurface> RestrictionSystem::hypersurfaces() const {
    std::vector<Hypersurface> out;
    for (const auto& f : forms)
        if (!f.is_zero()) out.emplace_back(f);
    require(!out.empty(), Errc::ZeroPolynomial, "all restriction forms vanished");
    return out;
}

RestrictionSystem weil_restrict(const Hypersurface& H, Field k) {
    Field l = H.field();
    require(l.p() == k.p() && l.degree() % k.degree() == 0, Errc::NotSubfield,
            "base is not a subfield of the coefficient field");
    uint32_t m = l.degree() / k.degree();
    uint32_t n_plus_1 = H.poly().nvars();

    RestrictionSystem out;
    out.base = k;
    out.ext = l;
    out.m = m;
    if (m == 1) {
        MultiPoly down = multipoly_zero(k, n_plus_1);
        for (const auto& [e, c] : H.poly().terms()) down.add_term(e, to_subfield(l, k, c));
        out.forms.push_back(std::move(down));
        return out;
    }

    // X_i -> sum_j T_{i,j} omega^j over l, with omega the modulus root of l
    FieldElem omega = FieldElem(l, l.p());
    uint32_t tvars = n_plus_1 * m;
    std::vector<MultiPoly> repl;
    repl.reserve(n_plus_1);
    for (uint32_t i = 0; i < n_plus_1; ++i) {
        MultiPoly lin = multipoly_zero(l, tvars);
        for (uint32_t j = 0; j < m; ++j) {
            ExpVec e(tvars, 0);
            e[i * m + j] = 1;
            lin.add_term(e, omega.pow(static_cast<int64_t>(j)));
        }
        repl.push_back(std::move(lin));
    }
    MultiPoly expanded = substitute(H.poly(), repl);

    RelativeBasis rb(l, k);
    out.forms.assign(m, multipoly_zero(k, tvars));
    for (const auto& [e, c] : expanded.terms()) {
        auto coords = rb.decompose(c);
        for (uint32_t j = 0; j < m; ++j)
            if (!coords[j].is_zero()) out.forms[j].add_term(e, coords[j]);
    }
    return out;
}

TPoly::TPoly(SparsePoly<UniPoly> poly) : poly_(std::move(poly)) {
    require(poly_.is_homogeneous(&degree_), Errc::InhomogeneousReplacement,
            "coefficient form must be homogeneous in the X variables");
    require(degree_ >= 1, Errc::InvalidParams, "form degree must be positive");
    max_t_degree_ = 0;
    for (const auto& [e, c] : poly_.terms())
        max_t_degree_ = std::max(max_t_degree_, c.degree());
}

TPoly TPoly::from_constant_form(const MultiPoly& p) {
    Field f = field_of(p);
    SparsePoly<UniPoly> lifted(p.nvars(), UniPoly::zero(f));
    for (const auto& [e, c] : p.terms()) lifted.add_term(e, UniPoly::constant(c));
    return TPoly(std::move(lifted));
}

namespace {

// X_i -> sum_r T_{i,r} t^r as polynomials with t-coefficients
std::vector<SparsePoly<UniPoly>> lift_replacements(const TPoly& F, int64_t s) {
    Field k = F.field();
    uint32_t n_plus_1 = F.nvars();
    uint32_t tvars = n_plus_1 * static_cast<uint32_t>(s + 1);
    std::vector<SparsePoly<UniPoly>> repl;
    repl.reserve(n_plus_1);
    for (uint32_t i = 0; i < n_plus_1; ++i) {
        SparsePoly<UniPoly> lin(tvars, UniPoly::zero(k));
        for (int64_t r = 0; r <= s; ++r) {
            ExpVec e(tvars, 0);
            e[i * (s + 1) + r] = 1;
            std::vector<uint64_t> tr(static_cast<size_t>(r) + 1, 0);
            tr[static_cast<size_t>(r)] = 1;
            lin.add_term(e, UniPoly::from_ranks(k, tr));
        }
        repl.push_back(std::move(lin));
    }
    return repl;
}

} // namespace

std::vector<MultiPoly> t_expand(const TPoly& F, int64_t s) {
    require(s >= 0, Errc::InvalidParams, "s must be nonnegative");
    Field k = F.field();
    int64_t d = F.x_degree();
    int64_t M = F.max_t_degree();
    uint32_t tvars = F.nvars() * static_cast<uint32_t>(s + 1);

    SparsePoly<UniPoly> expanded = substitute(F.poly(), lift_replacements(F, s));

    std::vector<MultiPoly> out(static_cast<size_t>(d * s + M + 1), multipoly_zero(k, tvars));
    for (const auto& [e, c] : expanded.terms()) {
        for (int64_t t = 0; t <= c.degree(); ++t) {
            FieldElem ct = c.coeff(t);
            if (ct.is_zero()) continue;
            require(t < static_cast<int64_t>(out.size()), Errc::Internal,
                    "t-degree beyond the d*s+M bound");
            out[static_cast<size_t>(t)].add_term(e, ct);
        }
    }
    return out;
}

bool t_expand_identity_holds(const TPoly& F, int64_t s,
                             const std::vector<MultiPoly>& forms) {
    Field k = F.field();
    uint32_t tvars = F.nvars() * static_cast<uint32_t>(s + 1);
    SparsePoly<UniPoly> reassembled(tvars, UniPoly::zero(k));
    for (size_t m = 0; m < forms.size(); ++m) {
        std::vector<uint64_t> tm(m + 1, 0);
        tm[m] = 1;
        UniPoly t_to_m = UniPoly::from_ranks(k, tm);
        for (const auto& [e, c] : forms[m].terms())
            reassembled.add_term(e, UniPoly::constant(c) * t_to_m);
    }
    SparsePoly<UniPoly> direct = substitute(F.poly(), lift_replacements(F, s));
    return reassembled == direct;
}

int64_t stability_s_bound(int64_t M, int64_t d, int64_t i, int64_t n) {
    require(M >= 0 && d >= 1 && i >= 0 && n >= 1, Errc::InvalidParams, "bad parameters");
    int64_t d_i = 1;
    for (int64_t t = 0; t < i; ++t) d_i *= d;
    require(d_i * d <= n, Errc::HypothesisViolated, "d^(i+1) <= n fails");
    int64_t s = (M + 1) * d_i + n + 2;
    require((s * d + M + 1) * d_i <= (s + 1) * (n + 1) - 1, Errc::Internal,
            "certified inequality fails");
    return s;
}

TPoly truncate_series_coeffs(const SeriesForm& F, int64_t nu) {
    require(nu >= 1, Errc::InvalidParams, "nu must be positive");
    require(F.prec >= nu, Errc::InsufficientPrecision,
            "coefficients are not known to precision nu");
    Field k = F.poly.ring_zero().field();
    SparsePoly<UniPoly> out(F.poly.nvars(), UniPoly::zero(k));
    for (const auto& [e, c] : F.poly.terms()) {
        std::vector<uint64_t> kept;
        for (int64_t t = 0; t < nu && t <= c.degree(); ++t) kept.push_back(c.coeff(t).rank());
        out.add_term(e, UniPoly::from_ranks(k, kept));
    }
    return TPoly(std::move(out));
}

} // namespace kklab
