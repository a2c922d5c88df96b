#include "kklab/lang.hpp"

#include "kklab/unipoly.hpp"

namespace kklab {

void LangParams::validate() const {
    require(r >= 1, Errc::InvalidParams, "need at least one form");
    require(e >= 1 && d >= 1, Errc::InvalidParams, "degrees must be positive");
    require(n >= 0 && N >= 0, Errc::InvalidParams, "negative dimensions");
    require(N + 1 >= r, Errc::InvalidParams,
            "the first iterate needs at least one full block (N+1 >= r)");
}

GrowthSequence growth_sequence(const LangParams& params, int64_t mu_max) {
    params.validate();
    require(mu_max >= 1, Errc::InvalidParams, "mu_max must be at least 1");
    GrowthSequence seq{params, {}};
    seq.entries.reserve(static_cast<size_t>(mu_max));
    BigNat n_mu(static_cast<uint64_t>(params.N + 1));
    BigNat d_mu(static_cast<uint64_t>(params.e));
    seq.entries.push_back({1, n_mu, d_mu});
    for (int64_t mu = 2; mu <= mu_max; ++mu) {
        BigNat blocks = n_mu.div_small(static_cast<uint64_t>(params.r));
        require(!blocks.is_zero(), Errc::InvalidParams, "iterate ran out of blocks");
        n_mu = blocks.mul_small(static_cast<uint64_t>(params.n + 1));
        d_mu = d_mu.mul_small(static_cast<uint64_t>(params.d));
        seq.entries.push_back({mu, n_mu, d_mu});
    }
    return seq;
}

int64_t certify_growth(const GrowthSequence& seq, int64_t i) {
    const LangParams& p = seq.params;
    require(i >= 1, Errc::InvalidParams, "i must be at least 1");
    BigNat rdi = BigNat(static_cast<uint64_t>(p.r)) *
                 BigNat(static_cast<uint64_t>(p.d)).pow(static_cast<unsigned>(i));
    require(rdi <= BigNat(static_cast<uint64_t>(p.n)), Errc::HypothesisViolated,
            "r d^i <= n fails");
    // multiplicative gap (n+1)/(r d^i) > 1 follows
    require(BigNat(static_cast<uint64_t>(p.n + 1)) > rdi, Errc::Internal, "gap not above 1");

    // Per-step factor f_mu = (N_mu D_{mu-1}^i) / (N_{mu-1} D_mu^i). Exact
    // bracketing: f_mu <= (n+1)/(r d^i) always, and
    // f_mu * (r d^i) * N_{mu-1} >= (n+1) * (N_{mu-1} - (r-1)).
    std::vector<bool> strict;
    for (size_t t = 1; t < seq.entries.size(); ++t) {
        const BigNat& n_prev = seq.entries[t - 1].n_mu;
        const BigNat& n_cur = seq.entries[t].n_mu;
        BigNat dprev_i = seq.entries[t - 1].d_mu.pow(static_cast<unsigned>(i));
        BigNat dcur_i = seq.entries[t].d_mu.pow(static_cast<unsigned>(i));
        BigNat lhs = n_cur * dprev_i;
        BigNat rhs = n_prev * dcur_i;
        // strictly increasing ratio <=> lhs > rhs
        strict.push_back(lhs > rhs);
        // upper bracket: f_mu <= (n+1)/(r d^i), i.e. lhs * r d^i <= (n+1) * rhs
        require(lhs * rdi <= rhs.mul_small(static_cast<uint64_t>(p.n + 1)), Errc::Internal,
                "per-step factor exceeds the limit value");
        // lower bracket f_mu >= (n+1)/(r d^i) * (1 - (r-1)/N_{mu-1}), written
        // addition-only:
        // lhs * r d^i * N_{mu-1} + (n+1) * rhs * (r-1) >= (n+1) * rhs * N_{mu-1}
        BigNat left = lhs * rdi * n_prev +
                      rhs.mul_small(static_cast<uint64_t>(p.n + 1)).mul_small(static_cast<uint64_t>(p.r - 1));
        BigNat right = rhs.mul_small(static_cast<uint64_t>(p.n + 1)) * n_prev;
        require(left >= right, Errc::Internal, "per-step factor below the certified bracket");
    }
    // onset of strict growth: the last suffix that is strict throughout
    int64_t first_strict = -1;
    for (size_t t = strict.size(); t-- > 0;) {
        if (!strict[t]) break;
        first_strict = seq.entries[t + 1].mu;
    }
    require(first_strict > 0, Errc::Internal, "ratio does not grow strictly towards mu_max");
    return first_strict;
}

MultiPoly lang_compose(const MultiPoly& phi, const std::vector<MultiPoly>& fs, int64_t mu) {
    require(mu >= 1, Errc::InvalidParams, "mu must be at least 1");
    require(!fs.empty(), Errc::InvalidParams, "need at least one form");
    Field field = field_of(phi);
    int64_t e;
    require(phi.is_homogeneous(&e) && e >= 1, Errc::InhomogeneousReplacement,
            "phi must be homogeneous of positive degree");
    uint32_t n_plus_1 = fs.front().nvars();
    int64_t d = -1;
    for (const auto& f : fs) {
        require(field_of(f) == field, Errc::FieldMismatch, "forms over different fields");
        require(f.nvars() == n_plus_1, Errc::ArityMismatch, "forms in different variable counts");
        int64_t fd;
        require(f.is_homogeneous(&fd) && fd >= 1, Errc::InhomogeneousReplacement,
                "forms must be homogeneous of positive degree");
        require(d < 0 || fd == d, Errc::InhomogeneousReplacement, "forms of unequal degree");
        d = fd;
    }
    LangParams params{static_cast<int64_t>(n_plus_1) - 1, static_cast<int64_t>(fs.size()),
                      e, d, static_cast<int64_t>(phi.nvars()) - 1};
    params.validate();

    MultiPoly cur = phi;
    for (int64_t step = 2; step <= mu; ++step) {
        uint64_t n_prev = cur.nvars();
        uint64_t r = fs.size();
        uint64_t blocks = n_prev / r;
        require(blocks >= 1, Errc::InvalidParams, "iterate ran out of blocks");
        uint64_t n_next = blocks * n_plus_1;
        std::vector<MultiPoly> args;
        args.reserve(n_prev);
        for (uint64_t b = 0; b < blocks; ++b) {
            for (uint64_t j = 0; j < r; ++j) {
                // F_j applied to the b-th block of fresh variables
                MultiPoly shifted = multipoly_zero(field, static_cast<uint32_t>(n_next));
                for (const auto& [exp, c] : fs[j].terms()) {
                    ExpVec e2(n_next, 0);
                    for (uint32_t v = 0; v < n_plus_1; ++v)
                        e2[b * n_plus_1 + v] = exp[v];
                    shifted.add_term(e2, c);
                }
                args.push_back(std::move(shifted));
            }
        }
        while (args.size() < n_prev)
            args.push_back(multipoly_zero(field, static_cast<uint32_t>(n_next)));
        cur = substitute(cur, args);
    }
    return cur;
}

Hypersurface normic_form(Field l, Field k, int64_t min_dim) {
    require(min_dim >= 1, Errc::InvalidParams, "min_dim must be at least 1");
    require(l.p() == k.p() && l.degree() % k.degree() == 0, Errc::NotSubfield, "not a tower");
    require(l != k, Errc::InvalidParams, "trivial extension has no normic form");
    // homogenized minimal polynomial of l's modulus root (rank p) over k
    FieldElem g = FieldElem(l, l.p());
    UniPoly mp = minimal_polynomial(l, k, g);
    require(mp.degree() == static_cast<int64_t>(l.degree() / k.degree()), Errc::Internal,
            "generator is not primitive for the tower");
    MultiPoly form = homogenize(mp);
    int64_t mu = 1;
    while (static_cast<int64_t>(form.nvars()) - 1 < min_dim) {
        ++mu;
        require(mu <= 16, Errc::SizeExceeded, "normic form iterate too large");
        form = lang_compose(homogenize(mp), {homogenize(mp)}, mu);
    }
    return Hypersurface(form);
}

Hypersurface norm_form(Field l, Field k) {
    require(l.p() == k.p() && l.degree() % k.degree() == 0, Errc::NotSubfield, "not a tower");
    uint32_t m = l.degree() / k.degree();
    require(m >= 2, Errc::InvalidParams, "extension degree must be at least 2");
    uint64_t qk = 1;
    for (uint32_t i = 0; i < k.degree(); ++i) qk *= k.p();
    FieldElem omega = FieldElem(l, l.p()); // modulus root of l
    // product over the Galois conjugate linear forms sum_i omega^(i q^j) X_i
    MultiPoly prod = multipoly_constant(l, m, FieldElem::one(l));
    for (uint32_t j = 0; j < m; ++j) {
        MultiPoly lin = multipoly_zero(l, m);
        for (uint32_t i = 0; i < m; ++i) {
            ExpVec e(m, 0);
            e[i] = 1;
            int64_t expo = 1;
            for (uint32_t t = 0; t < j; ++t) expo = static_cast<int64_t>(expo * qk % (l.size() - 1));
            FieldElem coeff = omega.pow(static_cast<int64_t>(i)).pow(expo);
            lin.add_term(e, coeff);
        }
        prod = prod * lin;
    }
    // coefficients lie in the canonical image of k; pull them back
    MultiPoly out = multipoly_zero(k, m);
    for (const auto& [e, c] : prod.terms()) out.add_term(e, to_subfield(l, k, c));
    return Hypersurface(out);
}

} // namespace kklab
