#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wakes {

// Arbitrary-precision natural number (unsigned). Little-endian 32-bit limbs,
// no trailing zero limbs; an empty limb vector is zero. Denominators in this
// library reach 2^P-1 times powers of two, which overflows machine words for
// periods beyond ~60, so all angle arithmetic is built on this type.
class Natural {
public:
    Natural() = default;
    Natural(uint64_t v);

    static Natural from_decimal(std::string_view s);

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

    static int cmp(const Natural& a, const Natural& b);
    friend bool operator==(const Natural& a, const Natural& b) { return cmp(a, b) == 0; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
        int c = cmp(a, b);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Natural operator+(const Natural& rhs) const;
    Natural operator-(const Natural& rhs) const;  // requires *this >= rhs
    Natural operator*(const Natural& rhs) const;

    // Quotient and remainder; throws std::domain_error on zero divisor.
    static std::pair<Natural, Natural> divmod(const Natural& n, const Natural& d);
    Natural operator/(const Natural& rhs) const { return divmod(*this, rhs).first; }
    Natural operator%(const Natural& rhs) const { return divmod(*this, rhs).second; }

    static Natural gcd(Natural a, Natural b);
    static Natural lcm(const Natural& a, const Natural& b);

    Natural shl(size_t bits) const;
    Natural shr(size_t bits) const;
    size_t bit_length() const;

    // Fits-in-u64 check and extraction; throws std::overflow_error otherwise.
    bool fits_u64() const { return limbs_.size() <= 2; }
    uint64_t to_u64() const;

    std::string to_decimal() const;

private:
    std::vector<uint32_t> limbs_;

    void trim();
    void shl1_inplace();
    bool sub_inplace_if_ge(const Natural& d);  // if *this >= d: *this -= d, true
    std::pair<Natural, uint32_t> div_small(uint32_t d) const;
};

}  // namespace wakes
