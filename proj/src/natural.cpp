#include "wakes/natural.hpp"

#include <algorithm>
#include <stdexcept>

namespace wakes {

Natural::Natural(uint64_t v) {
    if (v) limbs_.push_back(static_cast<uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
}

void Natural::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

int Natural::cmp(const Natural& a, const Natural& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

Natural Natural::operator+(const Natural& rhs) const {
    Natural out;
    const auto& a = limbs_;
    const auto& b = rhs.limbs_;
    size_t n = std::max(a.size(), b.size());
    out.limbs_.reserve(n + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        out.limbs_.push_back(static_cast<uint32_t>(s));
        carry = s >> 32;
    }
    if (carry) out.limbs_.push_back(static_cast<uint32_t>(carry));
    return out;
}

Natural Natural::operator-(const Natural& rhs) const {
    if (cmp(*this, rhs) < 0) throw std::underflow_error("Natural subtraction underflow");
    Natural out;
    out.limbs_.reserve(limbs_.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        int64_t d = static_cast<int64_t>(limbs_[i]) - borrow -
                    (i < rhs.limbs_.size() ? static_cast<int64_t>(rhs.limbs_[i]) : 0);
        borrow = d < 0;
        if (d < 0) d += (int64_t{1} << 32);
        out.limbs_.push_back(static_cast<uint32_t>(d));
    }
    out.trim();
    return out;
}

Natural Natural::operator*(const Natural& rhs) const {
    if (is_zero() || rhs.is_zero()) return Natural{};
    Natural out;
    out.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < rhs.limbs_.size(); ++j) {
            uint64_t cur = out.limbs_[i + j] +
                           static_cast<uint64_t>(limbs_[i]) * rhs.limbs_[j] + carry;
            out.limbs_[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + rhs.limbs_.size();
        while (carry) {
            uint64_t cur = out.limbs_[k] + carry;
            out.limbs_[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    out.trim();
    return out;
}

void Natural::shl1_inplace() {
    uint32_t carry = 0;
    for (auto& limb : limbs_) {
        uint32_t next = limb >> 31;
        limb = (limb << 1) | carry;
        carry = next;
    }
    if (carry) limbs_.push_back(carry);
}

bool Natural::sub_inplace_if_ge(const Natural& d) {
    if (cmp(*this, d) < 0) return false;
    int64_t borrow = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        int64_t v = static_cast<int64_t>(limbs_[i]) - borrow -
                    (i < d.limbs_.size() ? static_cast<int64_t>(d.limbs_[i]) : 0);
        borrow = v < 0;
        if (v < 0) v += (int64_t{1} << 32);
        limbs_[i] = static_cast<uint32_t>(v);
    }
    trim();
    return true;
}

size_t Natural::bit_length() const {
    if (limbs_.empty()) return 0;
    uint32_t top = limbs_.back();
    size_t bits = (limbs_.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

std::pair<Natural, uint32_t> Natural::div_small(uint32_t d) const {
    Natural q;
    q.limbs_.assign(limbs_.size(), 0);
    uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | limbs_[i];
        q.limbs_[i] = static_cast<uint32_t>(cur / d);
        rem = cur % d;
    }
    q.trim();
    return {q, static_cast<uint32_t>(rem)};
}

std::pair<Natural, Natural> Natural::divmod(const Natural& n, const Natural& d) {
    if (d.is_zero()) throw std::domain_error("Natural division by zero");
    if (cmp(n, d) < 0) return {Natural{}, n};
    if (d.limbs_.size() == 1) {
        auto [q, r] = n.div_small(d.limbs_[0]);
        return {q, Natural{r}};
    }
    // Shift-subtract long division, msb first.
    Natural q, r;
    size_t nbits = n.bit_length();
    q.limbs_.assign((nbits + 31) / 32, 0);
    for (size_t i = nbits; i-- > 0;) {
        r.shl1_inplace();
        if (n.limbs_[i / 32] & (uint32_t{1} << (i % 32))) {
            if (r.limbs_.empty()) r.limbs_.push_back(0);
            r.limbs_[0] |= 1;
        }
        if (r.sub_inplace_if_ge(d)) q.limbs_[i / 32] |= uint32_t{1} << (i % 32);
    }
    q.trim();
    r.trim();
    return {q, r};
}

Natural Natural::gcd(Natural a, Natural b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Binary gcd: strip common twos, then subtract-and-shift.
    size_t shift = 0;
    while (a.is_even() && b.is_even()) {
        a = a.shr(1);
        b = b.shr(1);
        ++shift;
    }
    while (a.is_even()) a = a.shr(1);
    while (!b.is_zero()) {
        while (b.is_even()) b = b.shr(1);
        if (cmp(a, b) > 0) std::swap(a, b);
        b = b - a;
    }
    return a.shl(shift);
}

Natural Natural::lcm(const Natural& a, const Natural& b) {
    if (a.is_zero() || b.is_zero()) return Natural{};
    return (a / gcd(a, b)) * b;
}

Natural Natural::shl(size_t bits) const {
    if (is_zero() || bits == 0) return *this;
    size_t limb_shift = bits / 32, bit_shift = bits % 32;
    Natural out;
    out.limbs_.assign(limbs_.size() + limb_shift + 1, 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t v = static_cast<uint64_t>(limbs_[i]) << bit_shift;
        out.limbs_[i + limb_shift] |= static_cast<uint32_t>(v);
        out.limbs_[i + limb_shift + 1] |= static_cast<uint32_t>(v >> 32);
    }
    out.trim();
    return out;
}

Natural Natural::shr(size_t bits) const {
    size_t limb_shift = bits / 32, bit_shift = bits % 32;
    if (limb_shift >= limbs_.size()) return Natural{};
    Natural out;
    out.limbs_.assign(limbs_.size() - limb_shift, 0);
    for (size_t i = 0; i < out.limbs_.size(); ++i) {
        uint64_t v = limbs_[i + limb_shift] >> bit_shift;
        if (bit_shift && i + limb_shift + 1 < limbs_.size())
            v |= static_cast<uint64_t>(limbs_[i + limb_shift + 1]) << (32 - bit_shift);
        out.limbs_[i] = static_cast<uint32_t>(v);
    }
    out.trim();
    return out;
}

uint64_t Natural::to_u64() const {
    if (limbs_.size() > 2) throw std::overflow_error("Natural does not fit in u64");
    uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

Natural Natural::from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty decimal string");
    Natural out;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad decimal digit");
        out = out * Natural{10} + Natural{static_cast<uint64_t>(c - '0')};
    }
    return out;
}

std::string Natural::to_decimal() const {
    if (is_zero()) return "0";
    std::string out;
    Natural cur = *this;
    while (!cur.is_zero()) {
        auto [q, r] = cur.div_small(1000000000u);
        std::string chunk = std::to_string(r);
        if (!q.is_zero()) chunk = std::string(9 - chunk.size(), '0') + chunk;
        out = chunk + out;
        cur = std::move(q);
    }
    return out;
}

}  // namespace wakes
