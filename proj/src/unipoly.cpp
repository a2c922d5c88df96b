#include "kklab/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace kklab {

namespace {
constexpr int64_t kFactorDegreeCap = 12;
}

UniPoly::UniPoly(Field f, std::vector<FieldElem> coeffs) : field_(f) {
    ranks_.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        require(c.field() == f, Errc::FieldMismatch, "coefficient field");
        ranks_.push_back(c.rank());
    }
    trim();
}

UniPoly UniPoly::from_ranks(Field f, const std::vector<uint64_t>& ranks) {
    UniPoly p(f);
    p.ranks_ = ranks;
    p.trim();
    return p;
}

UniPoly UniPoly::constant(const FieldElem& c) {
    return from_ranks(c.field(), {c.rank()});
}

void UniPoly::trim() {
    while (!ranks_.empty() && ranks_.back() == 0) ranks_.pop_back();
}

FieldElem UniPoly::coeff(int64_t i) const {
    if (i < 0 || i >= static_cast<int64_t>(ranks_.size())) return FieldElem::zero(field_);
    return elem(ranks_[i]);
}

FieldElem UniPoly::leading() const {
    require(!is_zero(), Errc::ZeroPolynomial, "leading coefficient of zero");
    return elem(ranks_.back());
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    require(field_ == o.field_, Errc::FieldMismatch, "polynomial fields");
    UniPoly r(field_);
    r.ranks_.resize(std::max(ranks_.size(), o.ranks_.size()), 0);
    for (size_t i = 0; i < r.ranks_.size(); ++i) {
        FieldElem s = coeff(i) + o.coeff(i);
        r.ranks_[i] = s.rank();
    }
    r.trim();
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
    UniPoly r(field_);
    r.ranks_.reserve(ranks_.size());
    for (uint64_t v : ranks_) r.ranks_.push_back((-elem(v)).rank());
    return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    require(field_ == o.field_, Errc::FieldMismatch, "polynomial fields");
    if (is_zero() || o.is_zero()) return UniPoly(field_);
    UniPoly r(field_);
    r.ranks_.assign(ranks_.size() + o.ranks_.size() - 1, 0);
    for (size_t i = 0; i < ranks_.size(); ++i) {
        if (!ranks_[i]) continue;
        FieldElem a = elem(ranks_[i]);
        for (size_t j = 0; j < o.ranks_.size(); ++j) {
            if (!o.ranks_[j]) continue;
            FieldElem cur = elem(r.ranks_[i + j]) + a * elem(o.ranks_[j]);
            r.ranks_[i + j] = cur.rank();
        }
    }
    r.trim();
    return r;
}

UniPoly UniPoly::operator*(const FieldElem& c) const {
    require(c.field() == field_, Errc::FieldMismatch, "scalar field");
    if (c.is_zero()) return UniPoly(field_);
    UniPoly r(field_);
    r.ranks_.reserve(ranks_.size());
    for (uint64_t v : ranks_) r.ranks_.push_back((elem(v) * c).rank());
    r.trim();
    return r;
}

bool UniPoly::operator==(const UniPoly& o) const {
    return field_ == o.field_ && ranks_ == o.ranks_;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    require(field_ == d.field_, Errc::FieldMismatch, "polynomial fields");
    require(!d.is_zero(), Errc::ZeroPolynomial, "division by the zero polynomial");
    UniPoly rem = *this;
    UniPoly quot(field_);
    if (degree() < d.degree()) return {quot, rem};
    quot.ranks_.assign(degree() - d.degree() + 1, 0);
    FieldElem lead_inv = d.leading().inv();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int64_t shift = rem.degree() - d.degree();
        FieldElem c = rem.leading() * lead_inv;
        quot.ranks_[shift] = c.rank();
        for (int64_t j = 0; j <= d.degree(); ++j) {
            FieldElem cur = rem.coeff(shift + j) - c * d.coeff(j);
            rem.ranks_[shift + j] = cur.rank();
        }
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

bool UniPoly::divides(const UniPoly& multiple) const {
    return multiple.divmod(*this).second.is_zero();
}

UniPoly UniPoly::monic() const {
    require(!is_zero(), Errc::ZeroPolynomial, "monic of zero");
    return *this * leading().inv();
}

UniPoly UniPoly::pow(uint32_t e) const {
    UniPoly r = one(field_);
    UniPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

FieldElem UniPoly::evaluate(const FieldElem& at) const {
    require(at.field() == field_, Errc::FieldMismatch, "evaluation point field");
    FieldElem acc = FieldElem::zero(field_);
    for (size_t i = ranks_.size(); i-- > 0;) acc = acc * at + elem(ranks_[i]);
    return acc;
}

UniPoly UniPoly::compose_xpow(uint32_t k) const {
    require(k >= 1, Errc::InvalidParams, "exponent must be positive");
    UniPoly r(field_);
    if (is_zero()) return r;
    r.ranks_.assign(static_cast<size_t>(degree()) * k + 1, 0);
    for (size_t i = 0; i < ranks_.size(); ++i) r.ranks_[i * k] = ranks_[i];
    return r;
}

UniPoly UniPoly::frobenius_coeffs(uint32_t j) const {
    UniPoly r(field_);
    r.ranks_.reserve(ranks_.size());
    for (uint64_t v : ranks_) r.ranks_.push_back(frobenius(elem(v), j).rank());
    r.trim();
    return r;
}

UniPoly UniPoly::embed_into(Field sup) const {
    UniPoly r(sup);
    r.ranks_.reserve(ranks_.size());
    for (uint64_t v : ranks_) r.ranks_.push_back(embed(sup, elem(v)).rank());
    r.trim();
    return r;
}

UniPoly UniPoly::to_subfield_poly(Field sub) const {
    UniPoly r(sub);
    r.ranks_.reserve(ranks_.size());
    for (uint64_t v : ranks_) r.ranks_.push_back(to_subfield(field_, sub, elem(v)).rank());
    r.trim();
    return r;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x % y;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.monic();
}

namespace {

// x^(q^reps) mod f via repeated q-th powering
UniPoly xq_power(const UniPoly& f, uint32_t reps) {
    Field k = f.field();
    UniPoly t = UniPoly::x(k);
    uint64_t q = k.size();
    for (uint32_t i = 0; i < reps; ++i) {
        // t^q mod f
        UniPoly r = UniPoly::one(k);
        UniPoly b = t;
        uint64_t e = q;
        while (e) {
            if (e & 1) r = (r * b) % f;
            b = (b * b) % f;
            e >>= 1;
        }
        t = r;
    }
    return t;
}

std::vector<uint64_t> small_prime_factors(uint64_t m) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) out.push_back(m);
    return out;
}

} // namespace

bool UniPoly::is_irreducible() const {
    require(!is_zero(), Errc::ZeroPolynomial, "irreducibility of zero");
    int64_t n = degree();
    if (n == 0) return false;
    if (n == 1) return true;
    UniPoly f = monic();
    UniPoly xmodf = UniPoly::x(field_) % f;
    if (!(xq_power(f, static_cast<uint32_t>(n)) - xmodf).is_zero()) return false;
    for (uint64_t r : small_prime_factors(static_cast<uint64_t>(n))) {
        UniPoly s = xq_power(f, static_cast<uint32_t>(n / r)) - xmodf;
        if (gcd(s, f).degree() != 0) return false;
    }
    return true;
}

std::vector<UniPoly> monic_irreducibles(Field f, uint32_t deg) {
    require(deg >= 1, Errc::InvalidParams, "degree must be positive");
    uint64_t q = f.size();
    uint64_t total = 1;
    for (uint32_t i = 0; i < deg; ++i) {
        total *= q;
        require(total <= 10000000, Errc::SizeExceeded, "too many candidate polynomials");
    }
    std::vector<UniPoly> out;
    for (uint64_t v = 0; v < total; ++v) {
        std::vector<uint64_t> ranks(deg + 1, 0);
        ranks[deg] = 1;
        uint64_t t = v;
        for (uint32_t i = 0; i < deg; ++i) {
            ranks[i] = t % q;
            t /= q;
        }
        UniPoly cand = UniPoly::from_ranks(f, ranks);
        if (cand.is_irreducible()) out.push_back(cand);
    }
    std::sort(out.begin(), out.end());
    return out;
}

UniPoly::Factorization UniPoly::factor() const {
    require(!is_zero(), Errc::ZeroPolynomial, "factoring zero");
    require(degree() <= kFactorDegreeCap, Errc::SizeExceeded,
            "factorization beyond the exhaustive degree cap");
    Factorization out{leading(), {}};
    UniPoly work = monic();
    for (uint32_t m = 1; work.degree() >= 1 && 2 * static_cast<int64_t>(m) <= work.degree(); ++m) {
        for (const UniPoly& g : monic_irreducibles(field_, m)) {
            if (work.degree() < 2 * static_cast<int64_t>(m)) break;
            uint32_t mult = 0;
            while (g.divides(work)) {
                work = work / g;
                ++mult;
            }
            if (mult) out.factors.emplace_back(g, mult);
        }
    }
    if (work.degree() >= 1) out.factors.emplace_back(work, 1);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<FieldElem> UniPoly::roots() const {
    require(!is_zero(), Errc::ZeroPolynomial, "roots of zero");
    std::vector<FieldElem> out;
    for (uint64_t r = 0; r < field_.size(); ++r) {
        FieldElem x(field_, r);
        if (evaluate(x).is_zero()) out.push_back(x);
    }
    return out;
}

bool UniPoly::operator<(const UniPoly& o) const {
    require(field_ == o.field_, Errc::FieldMismatch, "comparing over different fields");
    if (ranks_.size() != o.ranks_.size()) return ranks_.size() < o.ranks_.size();
    for (size_t i = ranks_.size(); i-- > 0;)
        if (ranks_[i] != o.ranks_[i]) return ranks_[i] < o.ranks_[i];
    return false;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    bool prime_field = field_.degree() == 1;
    std::ostringstream os;
    bool first = true;
    for (size_t i = ranks_.size(); i-- > 0;) {
        if (!ranks_[i]) continue;
        if (!first) os << " + ";
        first = false;
        FieldElem c = elem(ranks_[i]);
        bool unit_coeff = c.is_one() && i > 0;
        if (!unit_coeff) os << (prime_field ? std::to_string(ranks_[i]) : c.to_string());
        if (i > 0) {
            if (!unit_coeff) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UniPoly minimal_polynomial(Field l, Field k, const FieldElem& x) {
    require(x.field() == l, Errc::FieldMismatch, "element not in the field");
    require(l.p() == k.p() && l.degree() % k.degree() == 0, Errc::NotSubfield, "not a tower");
    uint64_t qk = 1;
    for (uint32_t i = 0; i < k.degree(); ++i) qk *= k.p();
    std::vector<FieldElem> orbit{x};
    for (;;) {
        FieldElem next = orbit.back().pow(static_cast<int64_t>(qk));
        if (next == orbit.front()) break;
        orbit.push_back(next);
    }
    UniPoly res = UniPoly::one(l);
    for (const FieldElem& c : orbit) {
        UniPoly lin = UniPoly(l, {-c, FieldElem::one(l)});
        res = res * lin;
    }
    return res.to_subfield_poly(k);
}

RationalFunc::RationalFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    require(num_.field() == den_.field(), Errc::FieldMismatch, "fraction fields");
    require(!den_.is_zero(), Errc::ZeroPolynomial, "zero denominator");
    if (num_.is_zero()) {
        den_ = UniPoly::one(num_.field());
        return;
    }
    UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    FieldElem scale = den_.leading().inv();
    num_ = num_ * scale;
    den_ = den_ * scale;
}

RationalFunc RationalFunc::from_poly(UniPoly p) {
    Field f = p.field();
    return RationalFunc(std::move(p), UniPoly::one(f));
}

RationalFunc RationalFunc::operator+(const RationalFunc& o) const {
    return RationalFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunc RationalFunc::operator-(const RationalFunc& o) const {
    return RationalFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunc RationalFunc::operator*(const RationalFunc& o) const {
    return RationalFunc(num_ * o.num_, den_ * o.den_);
}

RationalFunc RationalFunc::operator/(const RationalFunc& o) const {
    require(!o.is_zero(), Errc::ZeroArgument, "division by the zero function");
    return RationalFunc(num_ * o.den_, den_ * o.num_);
}

RationalFunc RationalFunc::operator-() const {
    RationalFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunc RationalFunc::inv() const {
    require(!is_zero(), Errc::ZeroArgument, "inverse of the zero function");
    return RationalFunc(den_, num_);
}

RationalFunc RationalFunc::pow(int64_t e) const {
    if (e == 0) return from_poly(UniPoly::one(field()));
    RationalFunc base = e > 0 ? *this : inv();
    uint64_t ee = static_cast<uint64_t>(e > 0 ? e : -e);
    RationalFunc r = from_poly(UniPoly::one(field()));
    while (ee) {
        if (ee & 1) r = r * base;
        base = base * base;
        ee >>= 1;
    }
    return r;
}

std::string RationalFunc::to_string(const std::string& var) const {
    if (den_.is_one()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

} // namespace kklab
