#ifndef KKLAB_MILNOR_HPP
#define KKLAB_MILNOR_HPP

#include "kklab/unipoly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace kklab {

// Closed point of P^1 over F_q: a monic irreducible polynomial, or the place
// at infinity (uniformizer 1/x).
class Place {
public:
    static Place at_infinity(Field f);
    static Place finite(UniPoly pi);

    bool infinite() const { return infinite_; }
    const UniPoly& pi() const;
    Field base() const { return base_; }
    int64_t degree() const { return infinite_ ? 1 : pi_.degree(); }

    bool operator<(const Place& o) const;
    bool operator==(const Place& o) const;
    std::string to_string() const;

private:
    Place(Field f, UniPoly pi, bool inf) : base_(f), pi_(std::move(pi)), infinite_(inf) {}
    Field base_;
    UniPoly pi_;
    bool infinite_;
};

// Realization of the residue field at a place: the abstract field together
// with the canonical root of the place polynomial (the image of x).
struct ResidueFieldAt {
    Field rf;
    FieldElem root; // meaningful for finite places; x maps to it
};

ResidueFieldAt residue_field(const Place& p);

// K_1 of a finite field: an exponent relative to the canonical generator.
struct K1Class {
    Field f;
    uint64_t exp = 0; // reduced mod q-1

    static K1Class of(const FieldElem& value);
    static K1Class trivial(Field f) { return K1Class{f, 0}; }
    FieldElem value() const;
    bool is_trivial() const { return exp == 0; }
    K1Class operator*(const K1Class& o) const;
    K1Class pow(int64_t e) const;
};

struct TrivialityCertificate {
    std::string reason;
};

using K1OrTrivial = std::variant<K1Class, TrivialityCertificate>;

// Length-1 symbols reduce to K_1 classes; length-2 symbols over a finite
// field are always trivial (K_2 of a finite field vanishes; Steinberg and
// unit entries are reported when they witness it directly).
K1OrTrivial symbol_reduce(Field f, const std::vector<FieldElem>& entries);

// pi-adic valuation (v(num) - v(den); degree drop at infinity).
int64_t valuation(const RationalFunc& u, const Place& p);
// Value at p of a function with valuation 0 there.
FieldElem residue_value(const RationalFunc& u, const Place& p);

// Tame symbol of {f, g} at p: class of (-1)^{v(f)v(g)} g^{v(f)} / f^{v(g)}
// evaluated at p. On {pi, u} with u a unit this is the reduction of u.
K1Class tame_symbol(const RationalFunc& f, const RationalFunc& g, const Place& p);

// K_2(F_q(x)) class as its finite-support residue vector.
struct K2Class {
    Field base;
    std::map<Place, K1Class> residues; // only nontrivial entries

    std::string to_string() const;
    bool operator==(const K2Class& o) const;
};

K2Class residue_vector(const RationalFunc& f, const RationalFunc& g);

struct ReciprocityFactor {
    Place place;
    std::string residue_field_tag;
    uint64_t exponent;   // of the residue class
    FieldElem normed;    // norm of the residue value down to the base field
};

struct ReciprocityResult {
    bool holds = false;
    FieldElem product;
    std::vector<ReciprocityFactor> factors;
};

// Product over all places (infinity included) of the normed tame symbols;
// the product must be 1.
ReciprocityResult weil_reciprocity_check(const RationalFunc& f, const RationalFunc& g);

// Pushforward along a constant extension F_{q^m}(x) -> F_q(x): groups places
// by the base place below them and applies the residue-field norm through
// the place-compatible identification.
K2Class norm_pushforward(const K2Class& cls, Field k);

} // namespace kklab

#endif
