#include "kklab/milnor.hpp"

#include "kklab/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace kklab {

Place Place::at_infinity(Field f) { return Place(f, UniPoly::zero(f), true); }

Place Place::finite(UniPoly pi) {
    Field f = pi.field();
    require(!pi.is_zero() && pi.degree() >= 1, Errc::ZeroPolynomial, "place needs a nonconstant polynomial");
    require(pi.is_monic(), Errc::InvalidParams, "place polynomial must be monic");
    require(pi.is_irreducible(), Errc::InvalidParams, "place polynomial must be irreducible");
    return Place(f, std::move(pi), false);
}

const UniPoly& Place::pi() const {
    require(!infinite_, Errc::InvalidParams, "the infinite place has no polynomial");
    return pi_;
}

bool Place::operator<(const Place& o) const {
    require(base_ == o.base_, Errc::FieldMismatch, "places over different fields");
    if (infinite_ != o.infinite_) return !infinite_; // finite places first
    if (infinite_) return false;
    return pi_ < o.pi_;
}

bool Place::operator==(const Place& o) const {
    if (!(base_ == o.base_) || infinite_ != o.infinite_) return false;
    return infinite_ || pi_ == o.pi_;
}

std::string Place::to_string() const {
    if (infinite_) return "inf";
    return pi_.to_string();
}

ResidueFieldAt residue_field(const Place& p) {
    Field base = p.base();
    if (p.infinite()) return {base, FieldElem::zero(base)};
    uint32_t deg = static_cast<uint32_t>(p.degree());
    Field rf = make_field(base.p(), base.degree() * deg);
    if (deg == 1) {
        // root already in the base field
        FieldElem r = -p.pi().coeff(0);
        return {rf, embed(rf, r)};
    }
    UniPoly lifted = p.pi().embed_into(rf);
    auto roots = lifted.roots();
    require(!roots.empty(), Errc::Internal, "place polynomial has no root in its residue field");
    return {rf, roots.front()};
}

K1Class K1Class::of(const FieldElem& value) {
    require(!value.is_zero(), Errc::ZeroArgument, "K1 class of zero");
    Field f = value.field();
    return K1Class{f, discrete_log(f, canonical_generator(f), value)};
}

FieldElem K1Class::value() const { return canonical_generator(f).pow(static_cast<int64_t>(exp)); }

K1Class K1Class::operator*(const K1Class& o) const {
    require(f == o.f, Errc::FieldMismatch, "K1 classes over different fields");
    uint64_t m = f.size() - 1;
    return K1Class{f, m ? (exp + o.exp) % m : 0};
}

K1Class K1Class::pow(int64_t e) const {
    uint64_t m = f.size() - 1;
    if (m == 0) return *this;
    int64_t mm = static_cast<int64_t>(m);
    int64_t r = ((static_cast<int64_t>(exp % m) * (e % mm)) % mm + mm) % mm;
    return K1Class{f, static_cast<uint64_t>(r)};
}

K1OrTrivial symbol_reduce(Field f, const std::vector<FieldElem>& entries) {
    require(entries.size() == 1 || entries.size() == 2, Errc::InvalidParams,
            "only length 1 and 2 symbols are supported");
    for (const auto& a : entries) {
        require(a.field() == f, Errc::FieldMismatch, "entry field");
        require(!a.is_zero(), Errc::ZeroEntry, "symbol entries must be nonzero");
    }
    if (entries.size() == 1) return K1Class::of(entries[0]);
    const FieldElem& a = entries[0];
    const FieldElem& b = entries[1];
    if (a.is_one() || b.is_one())
        return TrivialityCertificate{"unit entry"};
    if ((a + b).is_one())
        return TrivialityCertificate{"Steinberg relation: entries sum to 1"};
    return TrivialityCertificate{"K_2 of a finite field vanishes"};
}

int64_t valuation(const RationalFunc& u, const Place& p) {
    require(!u.is_zero(), Errc::ZeroFunction, "valuation of zero");
    if (p.infinite()) return u.den().degree() - u.num().degree();
    auto multiplicity = [&](UniPoly poly) {
        int64_t v = 0;
        for (;;) {
            auto [quot, rem] = poly.divmod(p.pi());
            if (!rem.is_zero()) return v;
            poly = quot;
            ++v;
            if (poly.is_zero()) return v;
        }
    };
    return multiplicity(u.num()) - multiplicity(u.den());
}

FieldElem residue_value(const RationalFunc& u, const Place& p) {
    require(!u.is_zero(), Errc::ZeroFunction, "residue of zero");
    require(valuation(u, p) == 0, Errc::InvalidParams, "residue needs valuation zero");
    if (p.infinite()) {
        // equal degrees; ratio of leading coefficients, in the base field
        return u.num().leading() / u.den().leading();
    }
    auto rf = residue_field(p);
    auto strip = [&](UniPoly poly) {
        for (;;) {
            auto [quot, rem] = poly.divmod(p.pi());
            if (!rem.is_zero()) return poly;
            poly = quot;
        }
    };
    UniPoly n = strip(u.num()).embed_into(rf.rf);
    UniPoly d = strip(u.den()).embed_into(rf.rf);
    FieldElem dv = d.evaluate(rf.root);
    require(!dv.is_zero(), Errc::Internal, "stripped denominator vanished at the place");
    return n.evaluate(rf.root) / dv;
}

K1Class tame_symbol(const RationalFunc& f, const RationalFunc& g, const Place& p) {
    require(!f.is_zero() && !g.is_zero(), Errc::ZeroFunction, "tame symbol of zero");
    int64_t vf = valuation(f, p);
    int64_t vg = valuation(g, p);
    RationalFunc u = g.pow(vf) / f.pow(vg);
    if ((vf * vg) % 2 != 0) u = -u;
    FieldElem val = residue_value(u, p);
    return K1Class::of(val);
}

std::string K2Class::to_string() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [p, cls] : residues) {
        if (!first) os << ", ";
        first = false;
        os << "(" << p.to_string() << ", " << residue_field(p).rf.tag() << ", " << cls.exp << ")";
    }
    os << "]";
    return os.str();
}

bool K2Class::operator==(const K2Class& o) const {
    if (!(base == o.base) || residues.size() != o.residues.size()) return false;
    auto it = residues.begin();
    auto jt = o.residues.begin();
    for (; it != residues.end(); ++it, ++jt) {
        if (!(it->first == jt->first) || it->second.exp != jt->second.exp) return false;
    }
    return true;
}

K2Class residue_vector(const RationalFunc& f, const RationalFunc& g) {
    require(!f.is_zero() && !g.is_zero(), Errc::ZeroFunction, "residue vector of zero");
    Field base = f.field();
    require(base == g.field(), Errc::FieldMismatch, "functions over different fields");

    std::vector<Place> support;
    auto add_factors = [&](const UniPoly& poly) {
        if (poly.degree() < 1) return;
        for (const auto& [irr, mult] : poly.factor().factors) {
            Place p = Place::finite(irr);
            if (std::find(support.begin(), support.end(), p) == support.end())
                support.push_back(p);
        }
    };
    add_factors(f.num());
    add_factors(f.den());
    add_factors(g.num());
    add_factors(g.den());
    support.push_back(Place::at_infinity(base));

    K2Class out{base, {}};
    for (const Place& p : support) {
        K1Class cls = tame_symbol(f, g, p);
        if (!cls.is_trivial()) out.residues.emplace(p, cls);
    }
    return out;
}

ReciprocityResult weil_reciprocity_check(const RationalFunc& f, const RationalFunc& g) {
    Field base = f.field();
    ReciprocityResult res;
    res.product = FieldElem::one(base);

    std::vector<Place> support;
    auto add_factors = [&](const UniPoly& poly) {
        if (poly.degree() < 1) return;
        for (const auto& [irr, mult] : poly.factor().factors) {
            Place p = Place::finite(irr);
            if (std::find(support.begin(), support.end(), p) == support.end())
                support.push_back(p);
        }
    };
    require(!f.is_zero() && !g.is_zero(), Errc::ZeroFunction, "reciprocity of zero");
    add_factors(f.num());
    add_factors(f.den());
    add_factors(g.num());
    add_factors(g.den());
    std::sort(support.begin(), support.end());
    support.push_back(Place::at_infinity(base));

    for (const Place& p : support) {
        K1Class cls = tame_symbol(f, g, p);
        FieldElem normed = norm(cls.f, base, cls.value());
        res.factors.push_back({p, cls.f.tag(), cls.exp, normed});
        res.product = res.product * normed;
    }
    res.holds = res.product.is_one();
    return res;
}

namespace {

// Base place below an upstairs place: the unique monic irreducible over k
// dividing the product of the coefficientwise Frobenius conjugates.
Place place_below(const Place& up, Field k) {
    if (up.infinite()) return Place::at_infinity(k);
    Field L = up.base();
    uint32_t m = L.degree() / k.degree();
    UniPoly prod = UniPoly::one(L);
    for (uint32_t j = 0; j < m; ++j)
        prod = prod * up.pi().frobenius_coeffs(j * k.degree());
    UniPoly down = prod.to_subfield_poly(k);
    auto fac = down.factor();
    require(fac.factors.size() == 1, Errc::Internal, "conjugate product is not a prime power");
    return Place::finite(fac.factors.front().first);
}

// Norm from the residue field at `up` to the residue field at `down`,
// through the identification x -> x of the underlying residue rings.
FieldElem place_norm(const Place& up, const Place& down, const FieldElem& alpha) {
    ResidueFieldAt RU = residue_field(up);
    ResidueFieldAt RD = residue_field(down);
    require(alpha.field() == RU.rf, Errc::FieldMismatch, "residue in the wrong field");
    uint64_t rel = RU.rf.degree() / RD.rf.degree();
    // product of the Gal(l(p')/k(p)) conjugates inside the upstairs field
    uint64_t q_down = 1;
    for (uint32_t i = 0; i < RD.rf.degree(); ++i) q_down *= RD.rf.p();
    FieldElem acc = alpha;
    FieldElem cur = alpha;
    for (uint64_t j = 1; j < rel; ++j) {
        cur = cur.pow(static_cast<int64_t>(q_down));
        acc = acc * cur;
    }
    if (up.infinite()) {
        // residue fields are the constant fields; the identification is the
        // canonical embedding
        return to_subfield(RU.rf, RD.rf, acc);
    }
    // express acc in the basis rho'^i * embed(b_u) and pull back through
    // rho'^i * embed(b_u) -> rho^i * embed(b_u)
    Field k = down.base();
    uint32_t d = static_cast<uint32_t>(down.degree());
    uint32_t p = k.p();
    std::vector<std::vector<uint32_t>> columns;
    std::vector<FieldElem> pull_basis;
    FieldElem rho_up = RU.root;
    FieldElem rho_down = RD.root;
    FieldElem up_pow = FieldElem::one(RU.rf);
    FieldElem down_pow = FieldElem::one(RD.rf);
    for (uint32_t i = 0; i < d; ++i) {
        for (uint32_t u = 0; u < k.degree(); ++u) {
            uint64_t rank = 1;
            for (uint32_t t = 0; t < u; ++t) rank *= p;
            FieldElem bu = FieldElem(k, rank);
            columns.push_back((up_pow * embed(RU.rf, bu)).coeffs());
            pull_basis.push_back(down_pow * embed(RD.rf, bu));
        }
        up_pow = up_pow * rho_up;
        down_pow = down_pow * rho_down;
    }
    auto sol = solve_mod_p(p, columns, acc.coeffs());
    require(sol.has_value(), Errc::Internal, "norm value escaped the residue subfield");
    FieldElem out = FieldElem::zero(RD.rf);
    for (size_t i = 0; i < pull_basis.size(); ++i)
        if ((*sol)[i]) out = out + FieldElem::from_int(RD.rf, (*sol)[i]) * pull_basis[i];
    return out;
}

} // namespace

K2Class norm_pushforward(const K2Class& cls, Field k) {
    Field L = cls.base;
    require(L.p() == k.p() && L.degree() % k.degree() == 0, Errc::NotConstantExtension,
            "class is not over a constant extension of the base");
    K2Class out{k, {}};
    std::map<Place, FieldElem> acc;
    for (const auto& [up, alpha] : cls.residues) {
        Place down = place_below(up, k);
        FieldElem pushed = place_norm(up, down, alpha.value());
        auto it = acc.find(down);
        if (it == acc.end())
            acc.emplace(down, pushed);
        else
            it->second = it->second * pushed;
    }
    for (const auto& [p, v] : acc) {
        if (v.is_one()) continue;
        out.residues.emplace(p, K1Class::of(v));
    }
    return out;
}

} // namespace kklab
