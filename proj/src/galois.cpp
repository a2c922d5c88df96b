#include "kklab/galois.hpp"

#include "kklab/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace kklab {

namespace detail {

namespace {

constexpr uint64_t kGlobalSizeCap = 1000000;
constexpr uint32_t kMaxPrime = 17;
constexpr uint64_t kTableMaxQ = 1024;
constexpr uint32_t kMaxDegree = 24;

uint64_t size_cap() {
    static const uint64_t cap = [] {
        uint64_t c = kGlobalSizeCap;
        if (const char* env = std::getenv("KKLAB_MAX_FIELD")) {
            char* end = nullptr;
            uint64_t v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0 && v < c) c = v; // downward only
        }
        return c;
    }();
    return cap;
}

bool is_small_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t m) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

// Dense univariate arithmetic over F_p used only for the modulus search.
// Coefficients ascending, c_0 first.
using PPoly = std::vector<uint32_t>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& f, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    size_t n = f.size() - 1;
    for (size_t i = prod.size(); i-- > n;) {
        uint32_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (size_t j = 0; j < n; ++j)
            prod[i - n + j] = (prod[i - n + j] + (p - 1) * c % p * f[j]) % p;
    }
    if (prod.size() > n) prod.resize(n);
    ptrim(prod);
    return prod;
}

PPoly ppowmod(PPoly base, uint64_t e, const PPoly& f, uint32_t p) {
    PPoly r{1};
    while (e) {
        if (e & 1) r = pmulmod(r, base, f, p);
        base = pmulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

PPoly pgcd(PPoly a, PPoly b, uint32_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        uint32_t lead_inv = 1;
        for (uint32_t t = 1; t < p; ++t)
            if (b.back() * t % p == 1) { lead_inv = t; break; }
        while (a.size() >= b.size() && !a.empty()) {
            uint32_t c = a.back() * lead_inv % p;
            size_t shift = a.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j)
                a[shift + j] = (a[shift + j] + (p - 1) * c % p * b[j]) % p;
            ptrim(a);
        }
        std::swap(a, b);
    }
    return a;
}

PPoly x_minus_x_adjust(PPoly t, uint32_t p) {
    // t - x
    t.resize(std::max<size_t>(t.size(), 2), 0);
    t[1] = (t[1] + p - 1) % p;
    ptrim(t);
    return t;
}

bool irreducible_mod_p(const PPoly& f, uint32_t p) {
    size_t n = f.size() - 1;
    if (n == 1) return true;
    PPoly x{0, 1};
    PPoly t = x;
    for (size_t i = 0; i < n; ++i) t = ppowmod(t, p, f, p);
    if (!x_minus_x_adjust(t, p).empty()) return false;
    for (uint64_t r : prime_factors(n)) {
        PPoly s = x;
        for (size_t i = 0; i < n / r; ++i) s = ppowmod(s, p, f, p);
        PPoly g = pgcd(x_minus_x_adjust(s, p), f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

} // namespace

struct FieldImpl {
    uint32_t p = 0;
    uint32_t n = 0;
    uint64_t q = 0;
    std::vector<uint32_t> modulus;       // c_0..c_{n-1}, leading 1 implicit
    std::vector<uint64_t> ppow;          // p^0..p^n
    uint64_t gamma = 0;                  // canonical generator rank
    std::vector<uint32_t> gamma_minpoly; // monic over F_p, c_0..c_n

    mutable std::once_flag tab_once, log_once;
    mutable std::vector<uint32_t> add_tab, mul_tab, inv_tab, neg_tab;
    mutable std::vector<uint32_t> exp_tab;
    mutable std::vector<uint64_t> log_tab;

    void decode(uint64_t r, uint32_t* d) const {
        for (uint32_t i = 0; i < n; ++i) {
            d[i] = static_cast<uint32_t>(r % p);
            r /= p;
        }
    }
    uint64_t encode(const uint32_t* d) const {
        uint64_t r = 0;
        for (uint32_t i = n; i-- > 0;) r = r * p + d[i] % p;
        return r;
    }

    uint64_t add_slow(uint64_t a, uint64_t b) const {
        uint32_t da[kMaxDegree], db[kMaxDegree];
        decode(a, da);
        decode(b, db);
        for (uint32_t i = 0; i < n; ++i) da[i] = (da[i] + db[i]) % p;
        return encode(da);
    }
    uint64_t neg_slow(uint64_t a) const {
        uint32_t da[kMaxDegree];
        decode(a, da);
        for (uint32_t i = 0; i < n; ++i) da[i] = (p - da[i]) % p;
        return encode(da);
    }
    uint64_t mul_slow(uint64_t a, uint64_t b) const {
        if (a == 0 || b == 0) return 0;
        uint32_t da[kMaxDegree], db[kMaxDegree];
        uint32_t prod[2 * kMaxDegree] = {0};
        decode(a, da);
        decode(b, db);
        for (uint32_t i = 0; i < n; ++i) {
            if (da[i] == 0) continue;
            for (uint32_t j = 0; j < n; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
        for (uint32_t i = 2 * n - 1; i-- > n;) {
            uint32_t c = prod[i];
            if (c == 0) continue;
            prod[i] = 0;
            for (uint32_t j = 0; j < n; ++j)
                prod[i - n + j] = (prod[i - n + j] + (p - 1) * c % p * modulus[j]) % p;
        }
        return encode(prod);
    }

    void build_tables() const {
        std::call_once(tab_once, [this] {
            neg_tab.resize(q);
            for (uint64_t a = 0; a < q; ++a) neg_tab[a] = static_cast<uint32_t>(neg_slow(a));
            if (q <= kTableMaxQ) {
                add_tab.resize(q * q);
                mul_tab.resize(q * q);
                for (uint64_t a = 0; a < q; ++a)
                    for (uint64_t b = 0; b <= a; ++b) {
                        uint32_t s = static_cast<uint32_t>(add_slow(a, b));
                        uint32_t m = static_cast<uint32_t>(mul_slow(a, b));
                        add_tab[a * q + b] = add_tab[b * q + a] = s;
                        mul_tab[a * q + b] = mul_tab[b * q + a] = m;
                    }
                inv_tab.assign(q, 0);
                for (uint64_t a = 1; a < q; ++a) {
                    if (inv_tab[a]) continue;
                    for (uint64_t b = a; b < q; ++b)
                        if (mul_tab[a * q + b] == 1) {
                            inv_tab[a] = static_cast<uint32_t>(b);
                            inv_tab[b] = static_cast<uint32_t>(a);
                            break;
                        }
                }
            }
        });
    }

    uint64_t add(uint64_t a, uint64_t b) const {
        build_tables();
        if (!add_tab.empty()) return add_tab[a * q + b];
        return add_slow(a, b);
    }
    uint64_t neg(uint64_t a) const {
        build_tables();
        return neg_tab[a];
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return add(a, neg(b)); }
    uint64_t mul(uint64_t a, uint64_t b) const {
        build_tables();
        if (!mul_tab.empty()) return mul_tab[a * q + b];
        return mul_slow(a, b);
    }
    uint64_t pow(uint64_t a, uint64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        if (q > 2) e %= (q - 1);
        uint64_t r = 1, b = a;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    uint64_t inverse(uint64_t a) const {
        require(a != 0, Errc::ZeroArgument, "inverse of zero");
        build_tables();
        if (!inv_tab.empty()) return inv_tab[a];
        return pow(a, q - 2);
    }

    void build_logs() const {
        std::call_once(log_once, [this] {
            exp_tab.resize(q - 1);
            log_tab.assign(q, UINT64_MAX);
            uint64_t cur = 1;
            for (uint64_t i = 0; i < q - 1; ++i) {
                exp_tab[i] = static_cast<uint32_t>(cur);
                log_tab[cur] = i;
                cur = mul(cur, gamma);
            }
            require(cur == 1, Errc::Internal, "generator order defect");
        });
    }
    uint64_t log_of(uint64_t a) const {
        require(a != 0, Errc::ZeroArgument, "log of zero");
        build_logs();
        return log_tab[a];
    }
};

} // namespace detail

namespace {

using detail::FieldImpl;

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<FieldImpl>>& registry() {
    static std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<FieldImpl>> r;
    return r;
}

std::vector<uint32_t> find_modulus(uint32_t p, uint32_t n) {
    uint64_t total = 1;
    for (uint32_t i = 0; i < n; ++i) total *= p;
    for (uint64_t v = 0; v < total; ++v) {
        detail::PPoly f(n + 1, 0);
        f[n] = 1;
        uint64_t t = v;
        for (uint32_t i = 0; i < n; ++i) {
            f[i] = static_cast<uint32_t>(t % p);
            t /= p;
        }
        if (detail::irreducible_mod_p(f, p)) {
            f.pop_back();
            return f;
        }
    }
    fail(Errc::Internal, "no irreducible polynomial found");
}

std::vector<uint32_t> minpoly_mod_p(const FieldImpl* f, uint64_t rank) {
    std::vector<uint64_t> orbit{rank};
    for (;;) {
        uint64_t next = f->pow(orbit.back(), f->p);
        if (next == orbit.front()) break;
        orbit.push_back(next);
    }
    std::vector<uint64_t> res{1}; // coefficients ascending, product of (T - c)
    for (uint64_t c : orbit) {
        std::vector<uint64_t> nxt(res.size() + 1, 0);
        uint64_t negc = f->neg(c);
        for (size_t i = 0; i < res.size(); ++i) {
            nxt[i] = f->add(nxt[i], f->mul(res[i], negc));
            nxt[i + 1] = f->add(nxt[i + 1], res[i]);
        }
        res = std::move(nxt);
    }
    std::vector<uint32_t> out(res.size());
    for (size_t i = 0; i < res.size(); ++i) {
        require(res[i] < f->p, Errc::Internal, "minpoly coefficient outside the prime field");
        out[i] = static_cast<uint32_t>(res[i]);
    }
    return out;
}

bool has_full_order(const FieldImpl* f, uint64_t rank, const std::vector<uint64_t>& factors) {
    if (rank == 0) return false;
    for (uint64_t ell : factors)
        if (f->pow(rank, (f->q - 1) / ell) == 1) return false;
    return true;
}

// Smallest-rank primitive element whose norms down to every maximal proper
// subfield land on that subfield's canonical generator up to conjugacy. This
// makes generator-power embeddings compose across towers.
void compute_generator(FieldImpl* f, const std::vector<const FieldImpl*>& maximal_subfields) {
    if (f->q == 2) {
        f->gamma = 1;
        f->gamma_minpoly = {1, 1};
        return;
    }
    auto factors = detail::prime_factors(f->q - 1);
    for (uint64_t cand = 2; cand < f->q; ++cand) {
        if (!has_full_order(f, cand, factors)) continue;
        bool ok = true;
        for (const FieldImpl* sub : maximal_subfields) {
            uint64_t e = (f->q - 1) / (sub->q - 1);
            if (minpoly_mod_p(f, f->pow(cand, e)) != sub->gamma_minpoly) {
                ok = false;
                break;
            }
        }
        if (ok) {
            f->gamma = cand;
            f->gamma_minpoly = minpoly_mod_p(f, cand);
            require(f->gamma_minpoly.size() == f->n + 1, Errc::Internal,
                    "generator does not generate the field");
            return;
        }
    }
    fail(Errc::Internal, "no compatible generator found");
}

const FieldImpl* build_field_locked(uint32_t p, uint32_t n) {
    auto key = std::make_pair(p, n);
    auto& reg = registry();
    auto it = reg.find(key);
    if (it != reg.end()) return it->second.get();

    auto impl = std::make_unique<FieldImpl>();
    impl->p = p;
    impl->n = n;
    impl->ppow.resize(n + 1);
    impl->ppow[0] = 1;
    for (uint32_t i = 1; i <= n; ++i) impl->ppow[i] = impl->ppow[i - 1] * p;
    impl->q = impl->ppow[n];
    impl->modulus = find_modulus(p, n);

    std::vector<const FieldImpl*> subs;
    for (uint64_t r : detail::prime_factors(n)) {
        auto dep = reg.find(std::make_pair(p, static_cast<uint32_t>(n / r)));
        require(dep != reg.end(), Errc::Internal, "subfield dependency missing");
        subs.push_back(dep->second.get());
    }
    compute_generator(impl.get(), subs);

    const FieldImpl* out = impl.get();
    reg.emplace(key, std::move(impl));
    return out;
}

const FieldImpl* get_field_impl(uint32_t p, uint32_t n) {
    // Build divisor dependencies bottom-up; the registry lock never recurses.
    std::vector<uint32_t> chain{n};
    for (size_t i = 0; i < chain.size(); ++i)
        for (uint64_t r : detail::prime_factors(chain[i])) {
            uint32_t m = static_cast<uint32_t>(chain[i] / r);
            if (std::find(chain.begin(), chain.end(), m) == chain.end()) chain.push_back(m);
        }
    std::sort(chain.begin(), chain.end());
    std::lock_guard<std::mutex> lock(registry_mutex());
    const FieldImpl* out = nullptr;
    for (uint32_t m : chain) out = build_field_locked(p, m);
    return out;
}

const FieldImpl* impl_of(Field f) {
    require(f.valid(), Errc::Internal, "null field handle");
    return f.impl();
}

const FieldImpl* same_field(const FieldElem& a, const FieldElem& b) {
    require(a.field() == b.field(), Errc::FieldMismatch,
            "operands from different fields; embed explicitly first");
    return impl_of(a.field());
}

} // namespace

Field make_field(uint32_t p, uint32_t n) {
    if (!detail::is_small_prime(p))
        fail(Errc::CompositeP, "p = " + std::to_string(p) + " is not prime");
    require(p <= detail::kMaxPrime, Errc::SizeExceeded, "p > 17");
    require(n >= 1 && n <= detail::kMaxDegree, Errc::SizeExceeded, "extension degree out of range");
    uint64_t q = 1;
    for (uint32_t i = 0; i < n; ++i) {
        q *= p;
        require(q <= detail::size_cap(), Errc::SizeExceeded, "p^n exceeds the field size cap");
    }
    return Field(get_field_impl(p, n));
}

uint32_t Field::p() const { return impl_of(*this)->p; }
uint32_t Field::degree() const { return impl_of(*this)->n; }
uint64_t Field::size() const { return impl_of(*this)->q; }
const std::vector<uint32_t>& Field::modulus() const { return impl_of(*this)->modulus; }

std::string Field::tag() const {
    return std::to_string(p()) + "^" + std::to_string(degree());
}

FieldElem::FieldElem(Field f, uint64_t rank) : field_(f), rank_(rank) {
    require(rank < impl_of(f)->q, Errc::Internal, "element rank out of range");
}

FieldElem FieldElem::from_int(Field f, uint64_t c) {
    return FieldElem(f, c % impl_of(f)->p);
}

FieldElem FieldElem::from_coeffs(Field f, const std::vector<uint32_t>& coeffs) {
    const auto* impl = impl_of(f);
    require(coeffs.size() <= impl->n, Errc::DegreeMismatch, "too many coordinates");
    uint64_t r = 0;
    for (size_t i = coeffs.size(); i-- > 0;) r = r * impl->p + coeffs[i] % impl->p;
    return FieldElem(f, r);
}

std::vector<uint32_t> FieldElem::coeffs() const {
    const auto* impl = impl_of(field_);
    std::vector<uint32_t> d(impl->n);
    uint64_t r = rank_;
    for (uint32_t i = 0; i < impl->n; ++i) {
        d[i] = static_cast<uint32_t>(r % impl->p);
        r /= impl->p;
    }
    return d;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    const auto* f = same_field(*this, o);
    return FieldElem(field_, f->add(rank_, o.rank_));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    const auto* f = same_field(*this, o);
    return FieldElem(field_, f->sub(rank_, o.rank_));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    const auto* f = same_field(*this, o);
    return FieldElem(field_, f->mul(rank_, o.rank_));
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    const auto* f = same_field(*this, o);
    return FieldElem(field_, f->mul(rank_, f->inverse(o.rank_)));
}

FieldElem FieldElem::operator-() const {
    return FieldElem(field_, impl_of(field_)->neg(rank_));
}

FieldElem FieldElem::inv() const {
    return FieldElem(field_, impl_of(field_)->inverse(rank_));
}

FieldElem FieldElem::pow(int64_t e) const {
    const auto* f = impl_of(field_);
    if (e >= 0) return FieldElem(field_, f->pow(rank_, static_cast<uint64_t>(e)));
    require(rank_ != 0, Errc::ZeroArgument, "negative power of zero");
    int64_t m = static_cast<int64_t>(f->q - 1);
    if (m == 0) return *this;
    uint64_t ee = static_cast<uint64_t>(((e % m) + m) % m);
    return FieldElem(field_, f->pow(rank_, ee));
}

bool FieldElem::operator<(const FieldElem& o) const {
    same_field(*this, o);
    return rank_ < o.rank_;
}

std::string FieldElem::to_string() const {
    std::ostringstream os;
    os << field_.tag() << ":[";
    auto c = coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i];
    }
    os << "]";
    return os.str();
}

FieldElem FieldElem::parse(const std::string& s) {
    size_t caret = s.find('^');
    size_t colon = s.find(':');
    require(caret != std::string::npos && colon != std::string::npos && caret < colon,
            Errc::ConfigInvalid, "bad element literal: " + s);
    uint32_t p = static_cast<uint32_t>(std::stoul(s.substr(0, caret)));
    uint32_t n = static_cast<uint32_t>(std::stoul(s.substr(caret + 1, colon - caret - 1)));
    require(colon + 1 < s.size() && s[colon + 1] == '[' && s.back() == ']',
            Errc::ConfigInvalid, "bad element literal: " + s);
    std::vector<uint32_t> c;
    std::string body = s.substr(colon + 2, s.size() - colon - 3);
    if (!body.empty()) {
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ','))
            c.push_back(static_cast<uint32_t>(std::stoul(tok)));
    }
    Field f = make_field(p, n);
    require(c.size() == n, Errc::ConfigInvalid, "coordinate count mismatch: " + s);
    return from_coeffs(f, c);
}

FieldElem frobenius(const FieldElem& x, uint32_t j) {
    const auto* f = impl_of(x.field());
    if (x.is_zero() || f->q == 2) return x;
    uint64_t expo = 1;
    for (uint32_t i = 0; i < j; ++i) expo = expo * f->p % (f->q - 1);
    if (expo == 0) expo = f->q - 1;
    return FieldElem(x.field(), f->pow(x.rank(), expo));
}

FieldElem canonical_generator(Field f) { return FieldElem(f, impl_of(f)->gamma); }

Embedding::Embedding(Field sub, Field sup, FieldElem image_of_generator)
    : sub_(sub), sup_(sup), gen_image_(image_of_generator) {
    require(image_of_generator.field() == sup, Errc::FieldMismatch, "generator image field");
    const auto* s = impl_of(sub);
    FieldElem acc = FieldElem::zero(sup);
    FieldElem pw = FieldElem::one(sup);
    for (uint32_t i = 0; i < s->n; ++i) {
        acc = acc + FieldElem::from_int(sup, s->modulus[i]) * pw;
        pw = pw * gen_image_;
    }
    acc = acc + pw;
    require(acc.is_zero(), Errc::Internal, "image_of_generator is not a modulus root");
    gen_powers_.reserve(s->n);
    FieldElem cur = FieldElem::one(sup);
    for (uint32_t i = 0; i < s->n; ++i) {
        gen_powers_.push_back(cur);
        cur = cur * gen_image_;
    }
}

FieldElem Embedding::apply(const FieldElem& x) const {
    require(x.field() == sub_, Errc::FieldMismatch, "element not in the subfield");
    auto c = x.coeffs();
    FieldElem acc = FieldElem::zero(sup_);
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i]) acc = acc + FieldElem::from_int(sup_, c[i]) * gen_powers_[i];
    return acc;
}

namespace {

std::mutex& embedding_mutex() {
    static std::mutex m;
    return m;
}

} // namespace

const Embedding& canonical_embedding(Field sub, Field sup) {
    const auto* s = impl_of(sub);
    const auto* t = impl_of(sup);
    require(s->p == t->p, Errc::NotSubfield, "different characteristic");
    require(t->n % s->n == 0, Errc::DegreeMismatch,
            "degree " + std::to_string(s->n) + " does not divide " + std::to_string(t->n));

    static std::map<std::pair<const FieldImpl*, const FieldImpl*>, std::unique_ptr<Embedding>> cache;
    std::lock_guard<std::mutex> lock(embedding_mutex());
    auto key = std::make_pair(s, t);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    FieldElem img = FieldElem::zero(sup);
    if (s->n > 1) {
        // modulus root of sub has rank p; map it through the generator system
        uint64_t e = (t->q - 1) / (s->q - 1);
        uint64_t k = s->log_of(s->ppow[1]);
        img = FieldElem(sup, t->gamma).pow(static_cast<int64_t>(e)).pow(static_cast<int64_t>(k));
    }
    auto emb = std::make_unique<Embedding>(sub, sup, img);
    const Embedding& ref = *emb;
    cache.emplace(key, std::move(emb));
    return ref;
}

FieldElem embed(Field sup, const FieldElem& x) {
    if (x.field() == sup) return x;
    return canonical_embedding(x.field(), sup).apply(x);
}

RelativeBasis::RelativeBasis(Field ext, Field base) : ext_(ext), base_(base) {
    const auto* l = impl_of(ext);
    const auto* k = impl_of(base);
    require(l->p == k->p, Errc::NotSubfield, "different characteristic");
    require(l->n % k->n == 0, Errc::NotSubfield, "not a subfield");
    m_ = l->n / k->n;
    const Embedding& emb = canonical_embedding(base, ext);

    FieldElem g = l->n == 1 ? FieldElem::zero(ext) : FieldElem(ext, l->ppow[1]);
    std::vector<std::vector<uint32_t>> columns;
    columns.reserve(l->n);
    FieldElem gi = FieldElem::one(ext);
    for (uint32_t i = 0; i < m_; ++i) {
        for (uint32_t j = 0; j < k->n; ++j) {
            FieldElem bj = FieldElem(base, k->ppow[j]);
            FieldElem v = gi * emb.apply(bj);
            basis_.push_back(v);
            columns.push_back(v.coeffs());
        }
        gi = gi * g;
    }
    inverse_ = invert_mod_p(l->p, columns);
    require(!inverse_.empty(), Errc::Internal, "relative basis is singular");
}

std::vector<FieldElem> RelativeBasis::decompose(const FieldElem& x) const {
    require(x.field() == ext_, Errc::FieldMismatch, "element not in the extension");
    const auto* l = impl_of(ext_);
    const auto* k = impl_of(base_);
    auto digits = x.coeffs();
    // coords = M^{-1} * digits; inverse_ holds the inverse by columns
    std::vector<uint32_t> coords(l->n, 0);
    for (uint32_t j = 0; j < l->n; ++j) {
        if (!digits[j]) continue;
        for (uint32_t i = 0; i < l->n; ++i)
            coords[i] = static_cast<uint32_t>((coords[i] +
                        static_cast<uint64_t>(inverse_[j][i]) * digits[j]) % l->p);
    }
    std::vector<FieldElem> out;
    out.reserve(m_);
    for (uint32_t i = 0; i < m_; ++i) {
        std::vector<uint32_t> c(coords.begin() + i * k->n, coords.begin() + (i + 1) * k->n);
        out.push_back(FieldElem::from_coeffs(base_, c));
    }
    return out;
}

FieldElem RelativeBasis::combine(const std::vector<FieldElem>& coords) const {
    require(coords.size() == m_, Errc::ArityMismatch, "coordinate count");
    const auto* k = impl_of(base_);
    FieldElem acc = FieldElem::zero(ext_);
    for (uint32_t i = 0; i < m_; ++i) {
        require(coords[i].field() == base_, Errc::FieldMismatch, "coordinate field");
        auto digs = coords[i].coeffs();
        for (uint32_t j = 0; j < k->n; ++j) {
            if (!digs[j]) continue;
            acc = acc + FieldElem::from_int(ext_, digs[j]) * basis_[i * k->n + j];
        }
    }
    return acc;
}

namespace {

const RelativeBasis& relative_basis(Field ext, Field base) {
    static std::mutex mu;
    static std::map<std::pair<const FieldImpl*, const FieldImpl*>, std::unique_ptr<RelativeBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(ext.impl(), base.impl());
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<RelativeBasis>(ext, base)).first;
    return *it->second;
}

FieldElem pull_to_subfield(Field l, Field k, const FieldElem& y) {
    if (l == k) return y;
    auto coords = relative_basis(l, k).decompose(y);
    for (size_t i = 1; i < coords.size(); ++i)
        require(coords[i].is_zero(), Errc::Internal, "value not in the subfield image");
    return coords[0];
}

void check_tower(Field l, Field k, const FieldElem& x) {
    const auto* li = impl_of(l);
    const auto* ki = impl_of(k);
    require(li->p == ki->p, Errc::NotSubfield, "different characteristic");
    require(li->n % ki->n == 0, Errc::NotSubfield, k.tag() + " is not a subfield of " + l.tag());
    require(x.field() == l, Errc::FieldMismatch, "element not in the top field");
}

} // namespace

FieldElem to_subfield(Field l, Field k, const FieldElem& y) {
    check_tower(l, k, y);
    return pull_to_subfield(l, k, y);
}

FieldElem norm(Field l, Field k, const FieldElem& x) {
    check_tower(l, k, x);
    if (l == k) return x;
    if (x.is_zero()) return FieldElem::zero(k);
    const auto* ki = impl_of(k);
    uint32_t m = impl_of(l)->n / ki->n;
    FieldElem acc = x;
    FieldElem cur = x;
    for (uint32_t j = 1; j < m; ++j) {
        cur = cur.pow(static_cast<int64_t>(ki->q));
        acc = acc * cur;
    }
    return pull_to_subfield(l, k, acc);
}

FieldElem trace(Field l, Field k, const FieldElem& x) {
    check_tower(l, k, x);
    if (l == k) return x;
    const auto* ki = impl_of(k);
    uint32_t m = impl_of(l)->n / ki->n;
    FieldElem acc = x;
    FieldElem cur = x;
    for (uint32_t j = 1; j < m; ++j) {
        cur = cur.pow(static_cast<int64_t>(ki->q));
        acc = acc + cur;
    }
    return pull_to_subfield(l, k, acc);
}

uint64_t discrete_log(Field f, const FieldElem& base, const FieldElem& x) {
    const auto* impl = impl_of(f);
    require(base.field() == f && x.field() == f, Errc::FieldMismatch, "arguments not in the field");
    require(!x.is_zero(), Errc::ZeroArgument, "discrete log of zero");
    require(!base.is_zero(), Errc::NotGenerator, "zero is not a generator");
    if (impl->q == 2) return 0;
    uint64_t m = impl->q - 1;
    uint64_t lb = impl->log_of(base.rank());
    require(lb != 0 && std::gcd(lb, m) == 1, Errc::NotGenerator,
            base.to_string() + " does not generate the unit group");
    uint64_t lx = impl->log_of(x.rank());
    int64_t t = 0, newt = 1, r = static_cast<int64_t>(m), newr = static_cast<int64_t>(lb);
    while (newr != 0) {
        int64_t quot = r / newr;
        std::swap(t -= quot * newt, newt);
        std::swap(r -= quot * newr, newr);
    }
    uint64_t lb_inv = static_cast<uint64_t>(((t % static_cast<int64_t>(m)) + static_cast<int64_t>(m)) %
                                            static_cast<int64_t>(m));
    return static_cast<uint64_t>(static_cast<unsigned __int128>(lx) * lb_inv % m);
}

} // namespace kklab
