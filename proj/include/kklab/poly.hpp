#ifndef KKLAB_POLY_HPP
#define KKLAB_POLY_HPP

#include "kklab/galois.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kklab {

using ExpVec = std::vector<uint32_t>;

inline int64_t exp_total(const ExpVec& e) {
    int64_t t = 0;
    for (uint32_t v : e) t += v;
    return t;
}

// Graded lexicographic term order.
struct GradedLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int64_t ta = exp_total(a), tb = exp_total(b);
        if (ta != tb) return ta < tb;
        return a < b;
    }
};

// Sparse multivariate polynomial over a coefficient ring C. C must provide
// value semantics, +, *, unary -, ==, and is_zero(). A zero prototype is kept
// so empty polynomials remember their ring.
template <class C>
class SparsePoly {
public:
    using TermMap = std::map<ExpVec, C, GradedLexLess>;

    SparsePoly(uint32_t nvars, C zero) : nvars_(nvars), zero_(std::move(zero)) {}

    static SparsePoly constant(uint32_t nvars, const C& c) {
        SparsePoly p(nvars, c + (-c));
        p.add_term(ExpVec(nvars, 0), c);
        return p;
    }

    static SparsePoly variable(uint32_t nvars, uint32_t i, const C& one) {
        require(i < nvars, Errc::ArityMismatch, "variable index out of range");
        SparsePoly p(nvars, one + (-one));
        ExpVec e(nvars, 0);
        e[i] = 1;
        p.add_term(e, one);
        return p;
    }

    uint32_t nvars() const { return nvars_; }
    const C& ring_zero() const { return zero_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const ExpVec& e, const C& c) {
        require(e.size() == nvars_, Errc::ArityMismatch, "exponent vector length");
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            C s = it->second + c;
            if (s.is_zero())
                terms_.erase(it);
            else
                it->second = s;
        }
    }

    // -1 for the zero polynomial
    int64_t total_degree() const {
        if (terms_.empty()) return -1;
        return exp_total(terms_.rbegin()->first);
    }

    bool is_homogeneous(int64_t* deg_out = nullptr) const {
        if (terms_.empty()) {
            if (deg_out) *deg_out = -1;
            return true;
        }
        int64_t d = exp_total(terms_.begin()->first);
        for (const auto& [e, c] : terms_)
            if (exp_total(e) != d) return false;
        if (deg_out) *deg_out = d;
        return true;
    }

    SparsePoly operator+(const SparsePoly& o) const {
        check_compat(o);
        SparsePoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    SparsePoly operator-() const {
        SparsePoly r(nvars_, zero_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    SparsePoly operator-(const SparsePoly& o) const { return *this + (-o); }

    SparsePoly operator*(const SparsePoly& o) const {
        check_compat(o);
        SparsePoly r(nvars_, zero_);
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) {
                ExpVec e(nvars_);
                for (uint32_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    SparsePoly scale(const C& c) const {
        SparsePoly r(nvars_, zero_);
        if (c.is_zero()) return r;
        for (const auto& [e, v] : terms_) r.add_term(e, v * c);
        return r;
    }

    // e >= 1; desk-scale exponents only
    SparsePoly pow(uint32_t e) const {
        require(e >= 1, Errc::InvalidParams, "pow requires a positive exponent");
        SparsePoly r = *this;
        for (uint32_t i = 1; i < e; ++i) r = r * *this;
        return r;
    }

    bool operator==(const SparsePoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

    C evaluate(const std::vector<C>& point) const {
        require(point.size() == nvars_, Errc::ArityMismatch, "evaluation point arity");
        C acc = zero_;
        for (const auto& [e, c] : terms_) {
            C val = c;
            for (uint32_t i = 0; i < nvars_; ++i)
                for (uint32_t k = 0; k < e[i]; ++k) val = val * point[i];
            acc = acc + val;
        }
        return acc;
    }

private:
    void check_compat(const SparsePoly& o) const {
        require(nvars_ == o.nvars_, Errc::ArityMismatch, "variable count mismatch");
    }

    uint32_t nvars_;
    C zero_;
    TermMap terms_;
};

// Substitution: replaces variable i of target by replacements[i]. All
// replacements live in a common variable set; nonzero ones must be
// homogeneous of one common degree. Zero replacements are allowed and drop
// the terms they annihilate.
template <class C>
SparsePoly<C> substitute(const SparsePoly<C>& target, const std::vector<SparsePoly<C>>& repl) {
    require(repl.size() == target.nvars(), Errc::ArityMismatch,
            "one replacement per target variable required");
    require(!repl.empty(), Errc::ArityMismatch, "empty replacement list");
    uint32_t out_vars = repl.front().nvars();
    int64_t d = -1;
    for (const auto& r : repl) {
        require(r.nvars() == out_vars, Errc::ArityMismatch, "replacements share a variable set");
        int64_t rd;
        require(r.is_homogeneous(&rd), Errc::InhomogeneousReplacement,
                "replacement is not homogeneous");
        if (rd >= 0) {
            require(d < 0 || d == rd, Errc::InhomogeneousReplacement,
                    "replacements of unequal degree");
            d = rd;
        }
    }
    SparsePoly<C> result(out_vars, repl.front().ring_zero());
    // cache of replacement powers, per variable
    std::vector<std::vector<SparsePoly<C>>> powers(repl.size());
    for (const auto& [e, c] : target.terms()) {
        SparsePoly<C> term = SparsePoly<C>::constant(out_vars, c);
        bool dead = false;
        for (uint32_t i = 0; i < target.nvars() && !dead; ++i) {
            if (e[i] == 0) continue;
            if (repl[i].is_zero()) {
                dead = true;
                break;
            }
            auto& cache = powers[i];
            if (cache.empty()) cache.push_back(repl[i]); // power 1
            while (cache.size() < e[i]) cache.push_back(cache.back() * repl[i]);
            term = term * cache[e[i] - 1];
        }
        if (!dead) result = result + term;
    }
    int64_t td;
    if (target.is_homogeneous(&td) && td >= 0 && d >= 0 && !result.is_zero()) {
        int64_t rd;
        require(result.is_homogeneous(&rd) && rd == td * d, Errc::Internal,
                "substitution broke homogeneity");
    }
    return result;
}

using MultiPoly = SparsePoly<FieldElem>;

MultiPoly multipoly_zero(Field f, uint32_t nvars);
MultiPoly multipoly_constant(Field f, uint32_t nvars, const FieldElem& c);
MultiPoly multipoly_variable(Field f, uint32_t nvars, uint32_t i);

Field field_of(const MultiPoly& p);

// Coefficientwise canonical embedding into an extension field.
MultiPoly embed_poly(Field sup, const MultiPoly& p);

// "c*X0^a0*X1^a1 + ..." with coefficients in field-element form; the zero
// polynomial prints as "0".
std::string to_string(const MultiPoly& p);
MultiPoly parse_multipoly(const std::string& s, Field f, uint32_t nvars);

// A degree-d hypersurface in P^ambient_dim given by a nonzero homogeneous
// form in ambient_dim + 1 variables.
class Hypersurface {
public:
    explicit Hypersurface(MultiPoly poly);

    const MultiPoly& poly() const { return poly_; }
    uint32_t ambient_dim() const { return poly_.nvars() - 1; }
    int64_t degree() const { return degree_; }
    Field field() const { return field_of(poly_); }

private:
    MultiPoly poly_;
    int64_t degree_;
};

// Exponent vectors of all degree-d monomials in nvars variables, in graded
// lex order.
std::vector<ExpVec> monomials_of_degree(uint32_t nvars, uint32_t d);

class UniPoly;

// Binary form F(X0, X1) of degree m with F(a, 1) = minpoly(a); requires a
// monic input of degree >= 1.
MultiPoly homogenize(const UniPoly& minpoly);

} // namespace kklab

#endif
