#ifndef KKLAB_UNIPOLY_HPP
#define KKLAB_UNIPOLY_HPP

#include "kklab/galois.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kklab {

// Dense univariate polynomial over a finite field. Coefficients ascending,
// normalized (no stored leading zeros); the zero polynomial has no
// coefficients and degree -1.
class UniPoly {
public:
    explicit UniPoly(Field f) : field_(f) {}
    UniPoly(Field f, std::vector<FieldElem> coeffs);
    static UniPoly from_ranks(Field f, const std::vector<uint64_t>& ranks);
    static UniPoly zero(Field f) { return UniPoly(f); }
    static UniPoly one(Field f) { return from_ranks(f, {1}); }
    static UniPoly x(Field f) { return from_ranks(f, {0, 1}); }
    static UniPoly constant(const FieldElem& c);

    Field field() const { return field_; }
    bool is_zero() const { return ranks_.empty(); }
    int64_t degree() const { return static_cast<int64_t>(ranks_.size()) - 1; }
    FieldElem coeff(int64_t i) const;
    FieldElem leading() const;
    bool is_monic() const { return !is_zero() && ranks_.back() == 1; }
    bool is_one() const { return ranks_.size() == 1 && ranks_[0] == 1; }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly operator*(const FieldElem& c) const;
    bool operator==(const UniPoly& o) const;
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    // quotient/remainder; divisor must be nonzero
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    UniPoly operator/(const UniPoly& d) const { return divmod(d).first; }
    UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }
    bool divides(const UniPoly& multiple) const;

    UniPoly monic() const;
    UniPoly pow(uint32_t e) const;
    FieldElem evaluate(const FieldElem& at) const;
    // substitute x -> x^k (e.g. u -> v^p)
    UniPoly compose_xpow(uint32_t k) const;
    // coefficientwise Frobenius x -> x^(p^j)
    UniPoly frobenius_coeffs(uint32_t j) const;
    // coefficientwise canonical embedding into sup
    UniPoly embed_into(Field sup) const;
    // coefficientwise canonical pullback to a subfield (coefficients must lie
    // in the image)
    UniPoly to_subfield_poly(Field sub) const;

    bool is_irreducible() const;
    // monic irreducible factors with multiplicity, sorted; plus the unit
    struct Factorization {
        FieldElem unit;
        std::vector<std::pair<UniPoly, uint32_t>> factors;
    };
    Factorization factor() const;

    // all roots in the coefficient field, ascending by rank
    std::vector<FieldElem> roots() const;

    // deterministic order used for places: by degree, then coefficient ranks
    // from the leading coefficient down
    bool operator<(const UniPoly& o) const;

    std::string to_string(const std::string& var = "x") const;

private:
    Field field_;
    std::vector<uint64_t> ranks_; // ascending, normalized
    void trim();
    FieldElem elem(uint64_t r) const { return FieldElem(field_, r); }
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);

// Monic irreducibles of the given degree in ascending order.
std::vector<UniPoly> monic_irreducibles(Field f, uint32_t deg);

// Minimal polynomial of x over the subfield k (coefficients in k).
UniPoly minimal_polynomial(Field l, Field k, const FieldElem& x);

// Reduced fraction num/den with den monic; the zero function is 0/1.
class RationalFunc {
public:
    explicit RationalFunc(Field f) : num_(UniPoly::zero(f)), den_(UniPoly::one(f)) {}
    RationalFunc(UniPoly num, UniPoly den);
    static RationalFunc from_poly(UniPoly p);
    static RationalFunc constant(const FieldElem& c) { return from_poly(UniPoly::constant(c)); }
    static RationalFunc x(Field f) { return from_poly(UniPoly::x(f)); }

    Field field() const { return num_.field(); }
    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunc operator+(const RationalFunc& o) const;
    RationalFunc operator-(const RationalFunc& o) const;
    RationalFunc operator*(const RationalFunc& o) const;
    RationalFunc operator/(const RationalFunc& o) const;
    RationalFunc operator-() const;
    RationalFunc inv() const;
    RationalFunc pow(int64_t e) const;
    bool operator==(const RationalFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunc& o) const { return !(*this == o); }

    std::string to_string(const std::string& var = "x") const;

private:
    UniPoly num_, den_;
};

} // namespace kklab

#endif
