#include "kklab/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace kklab {

TruncatedSeries::TruncatedSeries(Field f, int64_t val, std::vector<uint64_t> c, int64_t prec)
    : field_(f), val_(val), c_(std::move(c)), prec_(prec) {
    // normalize: strip leading zeros, clamp to precision, strip trailing zeros
    while (!c_.empty() && c_.front() == 0) {
        c_.erase(c_.begin());
        ++val_;
    }
    if (val_ >= prec_) {
        c_.clear();
        val_ = prec_;
    } else if (static_cast<int64_t>(c_.size()) > prec_ - val_) {
        c_.resize(static_cast<size_t>(prec_ - val_));
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    if (c_.empty()) val_ = prec_;
}

TruncatedSeries TruncatedSeries::zero(Field f, int64_t prec) {
    return TruncatedSeries(f, prec, {}, prec);
}

TruncatedSeries TruncatedSeries::one(Field f, int64_t prec) {
    require(prec >= 1, Errc::InsufficientPrecision, "precision must be positive");
    return TruncatedSeries(f, 0, {1}, prec);
}

TruncatedSeries TruncatedSeries::from_coeffs(Field f, int64_t val,
                                             const std::vector<FieldElem>& coeffs, int64_t prec) {
    std::vector<uint64_t> ranks;
    ranks.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        require(c.field() == f, Errc::FieldMismatch, "coefficient field");
        ranks.push_back(c.rank());
    }
    return TruncatedSeries(f, val, std::move(ranks), prec);
}

TruncatedSeries TruncatedSeries::from_ranks(Field f, int64_t val,
                                            const std::vector<uint64_t>& ranks, int64_t prec) {
    return TruncatedSeries(f, val, ranks, prec);
}

int64_t TruncatedSeries::valuation() const {
    require(!c_.empty(), Errc::UnknownValuation,
            "series is zero to its precision; valuation unknown");
    return val_;
}

FieldElem TruncatedSeries::leading() const {
    require(!c_.empty(), Errc::UnknownValuation, "no leading coefficient");
    return FieldElem(field_, c_.front());
}

FieldElem TruncatedSeries::coeff(int64_t k) const {
    require(k < prec_, Errc::InsufficientPrecision, "coefficient beyond the precision");
    if (k < val_ || k >= val_ + static_cast<int64_t>(c_.size())) return FieldElem::zero(field_);
    return FieldElem(field_, c_[static_cast<size_t>(k - val_)]);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    require(field_ == o.field_, Errc::FieldMismatch, "series fields");
    int64_t prec = std::min(prec_, o.prec_);
    int64_t lo = std::min(effective_val(), o.effective_val());
    if (lo >= prec) return zero(field_, prec);
    std::vector<uint64_t> c;
    c.reserve(static_cast<size_t>(prec - lo));
    for (int64_t k = lo; k < prec; ++k) c.push_back((coeff(k) + o.coeff(k)).rank());
    return TruncatedSeries(field_, lo, std::move(c), prec);
}

TruncatedSeries TruncatedSeries::operator-() const {
    std::vector<uint64_t> c;
    c.reserve(c_.size());
    for (uint64_t r : c_) c.push_back((-FieldElem(field_, r)).rank());
    return TruncatedSeries(field_, val_, std::move(c), prec_);
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    return *this + (-o);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    require(field_ == o.field_, Errc::FieldMismatch, "series fields");
    int64_t ev1 = effective_val(), ev2 = o.effective_val();
    int64_t prec = std::min(prec_ + ev2, o.prec_ + ev1);
    if (c_.empty() || o.c_.empty()) return zero(field_, prec);
    int64_t val = val_ + o.val_;
    size_t len = static_cast<size_t>(prec - val);
    std::vector<FieldElem> acc(len, FieldElem::zero(field_));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        FieldElem a(field_, c_[i]);
        for (size_t j = 0; j < o.c_.size() && i + j < len; ++j) {
            if (!o.c_[j]) continue;
            acc[i + j] = acc[i + j] + a * FieldElem(field_, o.c_[j]);
        }
    }
    std::vector<uint64_t> c;
    c.reserve(len);
    for (const auto& e : acc) c.push_back(e.rank());
    return TruncatedSeries(field_, val, std::move(c), prec);
}

TruncatedSeries TruncatedSeries::inverse() const {
    require(!c_.empty(), Errc::UnknownValuation, "inverse of a series with unknown valuation");
    int64_t rel = prec_ - val_;
    FieldElem a0 = FieldElem(field_, c_.front());
    FieldElem a0inv = a0.inv();
    std::vector<FieldElem> b(static_cast<size_t>(rel), FieldElem::zero(field_));
    b[0] = a0inv;
    for (int64_t k = 1; k < rel; ++k) {
        FieldElem s = FieldElem::zero(field_);
        for (int64_t j = 1; j <= k; ++j) {
            uint64_t aj = j < static_cast<int64_t>(c_.size()) ? c_[static_cast<size_t>(j)] : 0;
            if (!aj) continue;
            s = s + FieldElem(field_, aj) * b[static_cast<size_t>(k - j)];
        }
        b[static_cast<size_t>(k)] = -(a0inv * s);
    }
    std::vector<uint64_t> ranks;
    ranks.reserve(b.size());
    for (const auto& e : b) ranks.push_back(e.rank());
    return TruncatedSeries(field_, -val_, std::move(ranks), -val_ + rel);
}

TruncatedSeries TruncatedSeries::truncate(int64_t new_prec) const {
    require(new_prec <= prec_, Errc::InsufficientPrecision,
            "cannot extend precision by truncation");
    return TruncatedSeries(field_, c_.empty() ? new_prec : val_, c_, new_prec);
}

TruncatedSeries TruncatedSeries::frobenius_coeffs(uint32_t j) const {
    std::vector<uint64_t> c;
    c.reserve(c_.size());
    for (uint64_t r : c_) c.push_back(frobenius(FieldElem(field_, r), j).rank());
    return TruncatedSeries(field_, val_, std::move(c), prec_);
}

TruncatedSeries TruncatedSeries::to_subfield_series(Field sub) const {
    std::vector<uint64_t> c;
    c.reserve(c_.size());
    for (uint64_t r : c_) c.push_back(to_subfield(field_, sub, FieldElem(field_, r)).rank());
    return TruncatedSeries(sub, val_, std::move(c), prec_);
}

bool TruncatedSeries::congruent_mod(const TruncatedSeries& o, int64_t k) const {
    require(field_ == o.field_, Errc::FieldMismatch, "series fields");
    require(prec_ >= k && o.prec_ >= k, Errc::InsufficientPrecision,
            "precision below the congruence modulus");
    int64_t lo = std::min(effective_val(), o.effective_val());
    for (int64_t i = lo; i < k; ++i)
        if (coeff(i) != o.coeff(i)) return false;
    return true;
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream os;
    os << "val:" << effective_val() << " prec:" << prec_ << " [";
    for (int64_t k = effective_val(); k < prec_; ++k) {
        if (k > effective_val()) os << ",";
        os << coeff(k).to_string();
    }
    os << "]";
    return os.str();
}

TruncatedSeries unramified_norm(Field L0, Field K0, const TruncatedSeries& beta) {
    require(L0.p() == K0.p() && L0.degree() % K0.degree() == 0, Errc::NotSubfield,
            "not a constant-field tower");
    require(beta.field() == L0, Errc::FieldMismatch, "series not over the top field");
    uint32_t m = L0.degree() / K0.degree();
    TruncatedSeries acc = beta;
    for (uint32_t j = 1; j < m; ++j) acc = acc * beta.frobenius_coeffs(j * K0.degree());
    return acc.to_subfield_series(K0);
}

FieldElem trace_solve(Field L0, Field K0, const FieldElem& b) {
    require(L0.p() == K0.p() && L0.degree() % K0.degree() == 0, Errc::NotSubfield,
            "not a constant-field tower");
    require(b.field() == K0, Errc::FieldMismatch, "target not in the base field");
    uint32_t n = L0.degree();
    uint32_t p = L0.p();
    std::vector<uint32_t> digits(n, 0);
    for (;;) {
        FieldElem cand = FieldElem::from_coeffs(L0, digits);
        if (trace(L0, K0, cand) == b) return cand;
        // lexicographic successor on (c_0, ..., c_{n-1}): last digit fastest
        uint32_t i = n;
        bool done = true;
        while (i-- > 0) {
            if (++digits[i] < p) {
                done = false;
                break;
            }
            digits[i] = 0;
        }
        if (done) break;
    }
    fail(Errc::Internal, "trace is not surjective");
}

TruncatedSeries hensel_norm_lift(Field L0, Field K0, const TruncatedSeries& alpha, int64_t prec) {
    require(prec >= 1, Errc::InvalidParams, "precision must be positive");
    require(alpha.precision() >= prec, Errc::InsufficientPrecision,
            "input known to lower precision than requested");
    require(alpha.known_nonzero() && alpha.valuation() == 0 && alpha.leading().is_one(),
            Errc::NotPrincipalUnit, "alpha must lie in 1 + t K0[[t]]");
    require(alpha.field() == K0, Errc::FieldMismatch, "alpha not over the base field");

    TruncatedSeries beta = TruncatedSeries::one(L0, prec);
    for (int64_t N = 1; N < prec; ++N) {
        TruncatedSeries nb = unramified_norm(L0, K0, beta).truncate(N + 1);
        TruncatedSeries ratio = alpha.truncate(N + 1) * nb.inverse();
        FieldElem b_N = ratio.coeff(N);
        if (b_N.is_zero()) continue;
        FieldElem c_N = trace_solve(L0, K0, b_N);
        TruncatedSeries bump = TruncatedSeries::from_coeffs(
            L0, 0, {FieldElem::one(L0)}, prec) +
            TruncatedSeries::from_coeffs(L0, N, {c_N}, prec);
        beta = (beta * bump).truncate(prec);
    }
    // independent re-verification of the norm congruence
    require(unramified_norm(L0, K0, beta).congruent_mod(alpha, prec), Errc::Internal,
            "norm lift failed its own contract");
    return beta;
}

const char* unit_level_name(UnitLevel level) {
    switch (level) {
    case UnitLevel::Full: return "K_q";
    case UnitLevel::Units: return "U_q";
    case UnitLevel::PrincipalUnits: return "U_q^1";
    }
    return "?";
}

namespace {

std::string unit_part_string(const TruncatedSeries& s) {
    std::ostringstream os;
    int64_t v = s.valuation();
    if (v != 0) os << "t^" << v << "*";
    os << s.leading().to_string();
    if (s.precision() > v + 1) os << "*(1+O(t))";
    return os.str();
}

} // namespace

SeriesSymbolAnalysis residue_and_specialize(const std::vector<TruncatedSeries>& entries) {
    require(entries.size() == 1 || entries.size() == 2, Errc::InvalidParams,
            "only length 1 and 2 symbols are supported");
    for (const auto& e : entries)
        require(e.known_nonzero(), Errc::UnknownValuation,
                "entry is zero to its precision; cannot take residues");
    Field k = entries.front().field();
    SeriesSymbolAnalysis out;
    out.q = static_cast<uint32_t>(entries.size());

    if (entries.size() == 1) {
        const TruncatedSeries& a = entries[0];
        out.residue_valuation = a.valuation();
        out.residue_trivial = out.residue_valuation == 0;
        if (out.residue_trivial) {
            out.specialization = K1Class::of(a.leading());
            out.specialization_trivial = out.specialization->is_trivial();
            if (out.specialization_trivial) {
                out.level = UnitLevel::PrincipalUnits;
                out.principal_presentation.push_back("{" + unit_part_string(a) + "}");
            } else {
                out.level = UnitLevel::Units;
            }
        } else {
            out.level = UnitLevel::Full;
        }
        return out;
    }

    const TruncatedSeries& a = entries[0];
    const TruncatedSeries& b = entries[1];
    int64_t va = a.valuation(), vb = b.valuation();
    FieldElem value = b.leading().pow(va) / a.leading().pow(vb);
    if ((va * vb) % 2 != 0) value = -value;
    out.residue = K1Class::of(value);
    out.residue_trivial = out.residue->is_trivial();
    if (!out.residue_trivial) {
        out.level = UnitLevel::Full;
        return out;
    }
    out.specialization_symbol = {a.leading(), b.leading()};
    auto reduced = symbol_reduce(k, out.specialization_symbol);
    if (std::holds_alternative<TrivialityCertificate>(reduced)) {
        out.specialization_trivial = true;
        out.specialization_note = std::get<TrivialityCertificate>(reduced).reason;
    }
    // A residue-free symbol decomposes as {t, residue-value} (trivial here),
    // constant symbols (trivial over a finite field), and factors with a
    // 1 + tR entry; that presentation certifies U_2^1 membership.
    out.level = UnitLevel::PrincipalUnits;
    auto one_plus = [&](const TruncatedSeries& s) {
        return "1 + t*(...) from " + unit_part_string(s);
    };
    if ((a.precision() > va + 1)) out.principal_presentation.push_back(
        "{" + one_plus(a) + ", " + unit_part_string(b) + "}");
    if ((b.precision() > vb + 1)) out.principal_presentation.push_back(
        "{" + unit_part_string(a) + ", " + one_plus(b) + "}");
    out.principal_presentation.push_back("{t, 1} (residue part, trivial)");
    out.principal_presentation.push_back(
        "{" + a.leading().to_string() + ", " + b.leading().to_string() +
        "} (constant symbol, trivial: " + out.specialization_note + ")");
    return out;
}

} // namespace kklab
