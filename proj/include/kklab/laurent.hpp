#ifndef KKLAB_LAURENT_HPP
#define KKLAB_LAURENT_HPP

#include "kklab/milnor.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kklab {

// Element of F_q((t)) known modulo t^precision. Stored coefficients start at
// the valuation and are normalized (leading coefficient nonzero); a series
// with no stored coefficients is zero modulo t^precision, its valuation
// unknown beyond that.
class TruncatedSeries {
public:
    static TruncatedSeries zero(Field f, int64_t prec);
    static TruncatedSeries one(Field f, int64_t prec);
    static TruncatedSeries from_coeffs(Field f, int64_t val, const std::vector<FieldElem>& coeffs,
                                       int64_t prec);
    static TruncatedSeries from_ranks(Field f, int64_t val, const std::vector<uint64_t>& ranks,
                                      int64_t prec);

    Field field() const { return field_; }
    int64_t precision() const { return prec_; }
    bool known_nonzero() const { return !c_.empty(); }
    // Valuation; errors UnknownValuation when the series is zero to its
    // precision.
    int64_t valuation() const;
    FieldElem leading() const;
    // Coefficient of t^k; k must be below the precision.
    FieldElem coeff(int64_t k) const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator-() const;
    TruncatedSeries inverse() const;
    TruncatedSeries truncate(int64_t new_prec) const;
    // coefficientwise x -> x^(p^j)
    TruncatedSeries frobenius_coeffs(uint32_t j) const;
    // coefficientwise canonical pullback into a subfield
    TruncatedSeries to_subfield_series(Field sub) const;

    bool congruent_mod(const TruncatedSeries& o, int64_t k) const;

    // "val:v prec:N [c_v, ..., c_{N-1}]"
    std::string to_string() const;

private:
    TruncatedSeries(Field f, int64_t val, std::vector<uint64_t> c, int64_t prec);
    Field field_;
    int64_t val_;
    std::vector<uint64_t> c_;
    int64_t prec_;
    int64_t effective_val() const { return c_.empty() ? prec_ : val_; }
};

// Product of the Galois conjugates of beta (coefficientwise Frobenius
// powers), pulled back to K0. Precision of unit inputs is preserved.
TruncatedSeries unramified_norm(Field L0, Field K0, const TruncatedSeries& beta);

// First element of L0 in lexicographic coordinate order with trace b.
FieldElem trace_solve(Field L0, Field K0, const FieldElem& b);

// Norm-lifting by strong induction: beta over L0((t)) with
// unramified_norm(beta) = alpha mod t^prec, for alpha in 1 + t K0[[t]].
// The output is re-verified by an independent norm computation.
TruncatedSeries hensel_norm_lift(Field L0, Field K0, const TruncatedSeries& alpha, int64_t prec);

enum class UnitLevel { Full, Units, PrincipalUnits };

const char* unit_level_name(UnitLevel level);

struct SeriesSymbolAnalysis {
    uint32_t q = 0;
    // q == 1: residue lives in K_0 = Z and is the valuation
    int64_t residue_valuation = 0;
    // q == 2: tame residue in K_1 of the residue field
    std::optional<K1Class> residue;
    bool residue_trivial = false;
    // q == 1 unit case: specialization in K_1
    std::optional<K1Class> specialization;
    // q == 2 unit data: the leading-coefficient symbol and its reduction
    std::vector<FieldElem> specialization_symbol;
    std::string specialization_note;
    bool specialization_trivial = false;
    UnitLevel level = UnitLevel::Full;
    // U^1 certificate: generating factors, each with a 1 + tR entry (plus
    // constant symbols, trivial over a finite field)
    std::vector<std::string> principal_presentation;
};

// Residue, specialization and unit-filtration placement of a symbol with
// series entries (lengths 1 and 2).
SeriesSymbolAnalysis residue_and_specialize(const std::vector<TruncatedSeries>& entries);

} // namespace kklab

#endif
