#include "kklab/bignat.hpp"

#include "kklab/errors.hpp"

#include <algorithm>

namespace kklab {

BigNat::BigNat(uint64_t v) {
    if (v) {
        limbs_.push_back(static_cast<uint32_t>(v));
        if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
    }
}

void BigNat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigNat BigNat::from_string(const std::string& decimal) {
    BigNat r;
    for (char ch : decimal) {
        require(ch >= '0' && ch <= '9', Errc::Internal, "bad decimal digit");
        r = r.mul_small(10) + BigNat(static_cast<uint64_t>(ch - '0'));
    }
    return r;
}

BigNat BigNat::operator+(const BigNat& o) const {
    BigNat r;
    size_t n = std::max(limbs_.size(), o.limbs_.size());
    r.limbs_.resize(n, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
        uint64_t s = carry;
        if (i < limbs_.size()) s += limbs_[i];
        if (i < o.limbs_.size()) s += o.limbs_[i];
        r.limbs_[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) r.limbs_.push_back(static_cast<uint32_t>(carry));
    return r;
}

BigNat BigNat::operator*(const BigNat& o) const {
    if (is_zero() || o.is_zero()) return BigNat();
    BigNat r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.limbs_.size(); ++j) {
            uint64_t cur = r.limbs_[i + j] + carry +
                           static_cast<uint64_t>(limbs_[i]) * o.limbs_[j];
            r.limbs_[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + o.limbs_.size();
        while (carry) {
            uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

BigNat BigNat::mul_small(uint64_t m) const { return *this * BigNat(m); }

BigNat BigNat::div_small(uint64_t d) const {
    require(d != 0, Errc::Internal, "division by zero");
    BigNat q;
    q.limbs_.resize(limbs_.size(), 0);
    uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | limbs_[i];
        q.limbs_[i] = static_cast<uint32_t>(cur / d);
        rem = cur % d;
    }
    q.trim();
    return q;
}

uint64_t BigNat::rem_small(uint64_t d) const {
    require(d != 0, Errc::Internal, "division by zero");
    uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) rem = ((rem << 32) | limbs_[i]) % d;
    return rem;
}

BigNat BigNat::pow(unsigned e) const {
    BigNat r(1), b(*this);
    while (e) {
        if (e & 1u) r = r * b;
        b = b * b;
        e >>= 1u;
    }
    return r;
}

int BigNat::compare(const BigNat& o) const {
    if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size() ? -1 : 1;
    for (size_t i = limbs_.size(); i-- > 0;)
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
    return 0;
}

uint64_t BigNat::to_u64() const {
    require(fits_u64(), Errc::SizeExceeded, "BigNat does not fit in 64 bits");
    uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

std::string BigNat::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    BigNat cur(*this);
    while (!cur.is_zero()) {
        uint64_t chunk = cur.rem_small(1000000000ull);
        cur = cur.div_small(1000000000ull);
        for (int i = 0; i < 9; ++i) {
            out.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    std::reverse(out.begin(), out.end());
    return out;
}

} // namespace kklab
