#ifndef KKLAB_BIGNAT_HPP
#define KKLAB_BIGNAT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace kklab {

// Arbitrary-precision unsigned integer, just large enough for the growth
// recurrences (values like 5^50 overflow any fixed-width type).
class BigNat {
public:
    BigNat() = default;
    BigNat(uint64_t v);

    static BigNat from_string(const std::string& decimal);

    bool is_zero() const { return limbs_.empty(); }

    BigNat operator+(const BigNat& o) const;
    BigNat operator*(const BigNat& o) const;
    BigNat mul_small(uint64_t m) const;
    // Floor division by a small divisor; remainder via rem_small.
    BigNat div_small(uint64_t d) const;
    uint64_t rem_small(uint64_t d) const;
    BigNat pow(unsigned e) const;

    // -1, 0, +1
    int compare(const BigNat& o) const;
    bool operator==(const BigNat& o) const { return compare(o) == 0; }
    bool operator!=(const BigNat& o) const { return compare(o) != 0; }
    bool operator<(const BigNat& o) const { return compare(o) < 0; }
    bool operator<=(const BigNat& o) const { return compare(o) <= 0; }
    bool operator>(const BigNat& o) const { return compare(o) > 0; }
    bool operator>=(const BigNat& o) const { return compare(o) >= 0; }

    // Fits in uint64_t?
    bool fits_u64() const { return limbs_.size() <= 2; }
    uint64_t to_u64() const;

    std::string to_string() const;

private:
    // base 2^32, little endian, no trailing zero limbs
    std::vector<uint32_t> limbs_;
    void trim();
};

} // namespace kklab

#endif
