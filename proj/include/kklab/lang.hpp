#ifndef KKLAB_LANG_HPP
#define KKLAB_LANG_HPP

#include "kklab/bignat.hpp"
#include "kklab/poly.hpp"

#include <cstdint>
#include <vector>

namespace kklab {

// Phi in N+1 variables of degree e; r forms of degree d in n+1 variables.
// The iterate needs at least one full block at every step, i.e. N+1 >= r.
struct LangParams {
    int64_t n = 0;
    int64_t r = 0;
    int64_t e = 0;
    int64_t d = 0;
    int64_t N = 0;

    void validate() const;
};

struct GrowthEntry {
    int64_t mu;
    BigNat n_mu; // variables of the mu-th iterate
    BigNat d_mu; // its degree
};

struct GrowthSequence {
    LangParams params;
    std::vector<GrowthEntry> entries; // mu = 1..mu_max
};

// N_mu = (n+1) * floor(N_{mu-1} / r), D_mu = e * d^(mu-1), N_1 = N+1.
GrowthSequence growth_sequence(const LangParams& params, int64_t mu_max);

// For i with r*d^i <= n, checks on the computed sequence that the ratio
// N_mu / D_mu^i is strictly increasing from some mu_0 on, and that the
// per-step factor brackets (n+1)/(r d^i) with an error that vanishes as
// N_mu grows. Returns the first index of strict growth (1-based mu).
int64_t certify_growth(const GrowthSequence& seq, int64_t i);

// The mu-th iterate: consecutive (n+1)-blocks of fresh variables feed the
// form vector, trailing positions of the previous iterate receive zero.
MultiPoly lang_compose(const MultiPoly& phi, const std::vector<MultiPoly>& fs, int64_t mu);

// Hypersurface over k, of ambient dimension >= min_dim, with points over a
// finite extension k' exactly when l is contained in k'. Built from the
// homogenized minimal polynomial of l's canonical generator, iterated with
// r = 1 until the variable count is large enough.
Hypersurface normic_form(Field l, Field k, int64_t min_dim);

// The degree-m norm form of l/k in m = [l:k] variables, expanded over k in
// the power basis of l's canonical generator. Its only zero over k is the
// origin.
Hypersurface norm_form(Field l, Field k);

} // namespace kklab

#endif
