#ifndef KKLAB_GALOIS_HPP
#define KKLAB_GALOIS_HPP

#include "kklab/errors.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kklab {

namespace detail {
struct FieldImpl;
}

// Handle to an interned finite field F_{p^n}. Fields are built once per (p, n)
// and live for the duration of the process, so handles are trivially copyable
// and comparable by identity.
//
// The modulus is the lexicographically smallest monic irreducible of degree n
// over F_p, comparing coefficient tuples (c_{n-1}, ..., c_0) with the constant
// term last. Elements are coordinate vectors in the power basis of the modulus
// root.
class Field {
public:
    Field() : impl_(nullptr) {}
    explicit Field(const detail::FieldImpl* impl) : impl_(impl) {}

    uint32_t p() const;
    uint32_t degree() const; // n
    uint64_t size() const;   // q = p^n
    // Modulus coefficients c_0..c_{n-1}; leading coefficient 1 is implicit.
    const std::vector<uint32_t>& modulus() const;

    bool valid() const { return impl_ != nullptr; }
    bool operator==(const Field& o) const { return impl_ == o.impl_; }
    bool operator!=(const Field& o) const { return impl_ != o.impl_; }

    const detail::FieldImpl* impl() const { return impl_; }

    // "p^n" tag used in serialized output.
    std::string tag() const;

private:
    const detail::FieldImpl* impl_;
};

// make_field(p, n): deterministic field construction. Throws CompositeP when p
// is not prime and SizeExceeded when p > 17 or p^n exceeds the size cap
// (10^6, lowered by KKLAB_MAX_FIELD when set).
Field make_field(uint32_t p, uint32_t n);

class FieldElem {
public:
    FieldElem() : field_(), rank_(0) {}
    FieldElem(Field f, uint64_t rank);

    static FieldElem zero(Field f) { return FieldElem(f, 0); }
    static FieldElem one(Field f) { return FieldElem(f, 1); }
    // From an integer in [0, p): a prime-subfield element.
    static FieldElem from_int(Field f, uint64_t c);
    static FieldElem from_coeffs(Field f, const std::vector<uint32_t>& coeffs);

    Field field() const { return field_; }
    uint64_t rank() const { return rank_; }
    bool is_zero() const { return rank_ == 0; }
    bool is_one() const { return rank_ == 1; }
    std::vector<uint32_t> coeffs() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inv() const;
    FieldElem pow(int64_t e) const;

    bool operator==(const FieldElem& o) const {
        return field_ == o.field_ && rank_ == o.rank_;
    }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }
    // Rank order; used wherever a deterministic element order is needed.
    bool operator<(const FieldElem& o) const;

    // "p^n:[c_0,c_1,...]"
    std::string to_string() const;
    static FieldElem parse(const std::string& s);

private:
    Field field_;
    uint64_t rank_;
};

// x^(p^j)
FieldElem frobenius(const FieldElem& x, uint32_t j = 1);

// Canonical generator of the unit group (compatible across subfields: the
// canonical generator of a subfield is a fixed power of the canonical
// generator of any overfield, which is what makes canonical embeddings
// compose).
FieldElem canonical_generator(Field f);

// Ring homomorphism sub -> sup determined by a root of sub's modulus.
class Embedding {
public:
    Embedding(Field sub, Field sup, FieldElem image_of_generator);

    Field sub() const { return sub_; }
    Field sup() const { return sup_; }
    const FieldElem& image_of_generator() const { return gen_image_; }

    FieldElem apply(const FieldElem& x) const;

private:
    Field sub_, sup_;
    FieldElem gen_image_;
    std::vector<FieldElem> gen_powers_; // gen_image_^i, i < sub.degree()
};

// The canonical embedding sub -> sup (errors DegreeMismatch unless
// sub.degree() divides sup.degree() with equal characteristic).
// Canonical embeddings are transitive: embedding through an intermediate
// field equals the direct embedding.
const Embedding& canonical_embedding(Field sub, Field sup);

inline FieldElem embed(const Embedding& e, const FieldElem& x) { return e.apply(x); }
// Shorthand through the canonical embedding.
FieldElem embed(Field sup, const FieldElem& x);

// Coordinates of l relative to k along the canonical embedding, in the basis
// 1, g, ..., g^{m-1} with g the modulus root of l and m = [l:k].
class RelativeBasis {
public:
    RelativeBasis(Field ext, Field base);

    Field ext() const { return ext_; }
    Field base() const { return base_; }
    uint32_t rel_degree() const { return m_; }

    // x = sum_i embed(result[i]) * g^i
    std::vector<FieldElem> decompose(const FieldElem& x) const;
    FieldElem combine(const std::vector<FieldElem>& coords) const;

private:
    Field ext_, base_;
    uint32_t m_;
    std::vector<std::vector<uint32_t>> inverse_; // mod-p inverse of the basis matrix
    std::vector<FieldElem> basis_;               // embed(b_j) * g^i, column-major
};

// Inverse of the canonical embedding k -> l on its image. Errors out when y
// is not in the image.
FieldElem to_subfield(Field l, Field k, const FieldElem& y);

// Field norm l -> k along the canonical embedding: product of the [l:k]
// Frobenius conjugates, returned as an element of k.
FieldElem norm(Field l, Field k, const FieldElem& x);
// Field trace l -> k, likewise.
FieldElem trace(Field l, Field k, const FieldElem& x);

// Exponent e in [0, q-2] with base^e = x. Errors NotGenerator when base does
// not generate the unit group and ZeroArgument when x = 0.
uint64_t discrete_log(Field f, const FieldElem& base, const FieldElem& x);

} // namespace kklab

#endif
