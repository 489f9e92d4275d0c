#include "wakes/angle.hpp"

#include <stdexcept>

namespace wakes {

Rational::Rational(Natural n, Natural d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("Rational with zero denominator");
    if (num_.is_zero()) {
        den_ = Natural{1};
        return;
    }
    Natural g = Natural::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

int Rational::cmp(const Rational& a, const Rational& b) {
    return Natural::cmp(a.num_ * b.den_, b.num_ * a.den_);
}

Rational Rational::operator+(const Rational& rhs) const {
    return Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator-(const Rational& rhs) const {
    return Rational(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator*(const Rational& rhs) const {
    return Rational(num_ * rhs.num_, den_ * rhs.den_);
}

Rational Rational::half() const { return Rational(num_, den_ + den_); }

Rational Rational::midpoint(const Rational& a, const Rational& b) {
    return (a + b).half();
}

std::string Rational::str() const {
    if (den_.is_one()) return num_.to_decimal();
    return num_.to_decimal() + "/" + den_.to_decimal();
}

double Rational::to_double() const {
    // Adequate for rendering; exact values never pass through here.
    double n = 0, d = 0;
    for (char c : num_.to_decimal()) n = n * 10 + (c - '0');
    for (char c : den_.to_decimal()) d = d * 10 + (c - '0');
    return n / d;
}

Angle::Angle(Rational v) : v_(std::move(v)) {
    if (Natural::cmp(v_.num(), v_.den()) >= 0) {
        v_ = Rational(v_.num() % v_.den(), v_.den());
    }
}

Angle Angle::parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Angle(Rational(Natural::from_decimal(s), Natural{1}));
    return Angle(Rational(Natural::from_decimal(s.substr(0, slash)),
                          Natural::from_decimal(s.substr(slash + 1))));
}

Angle Angle::doubled() const {
    Natural n2 = v_.num() + v_.num();
    if (Natural::cmp(n2, v_.den()) >= 0) n2 = n2 - v_.den();
    // gcd(n2, den) divides 2, so a single halving suffices.
    if (n2.is_even() && v_.den().is_even())
        return Angle(Rational(n2.shr(1), v_.den().shr(1)));
    Angle out;
    out.v_ = Rational(std::move(n2), v_.den());
    return out;
}

Angle Angle::iterate(size_t n) const {
    Angle a = *this;
    for (size_t i = 0; i < n; ++i) a = a.doubled();
    return a;
}

std::pair<Angle, Angle> Angle::halves() const {
    Natural d2 = v_.den() + v_.den();
    Angle lo(Rational(v_.num(), d2));
    Angle hi(Rational(v_.num() + v_.den(), d2));
    return {lo, hi};
}

Angle Angle::plus_mod1(const Rational& d) const {
    Rational s = v_ + d;
    while (Natural::cmp(s.num(), s.den()) >= 0) s = s - Rational::one();
    return Angle(s);
}

Angle Angle::minus_mod1(const Rational& d) const {
    Rational dd = d;
    while (dd >= Rational::one()) dd = dd - Rational::one();
    if (v_ >= dd) return Angle(v_ - dd);
    return Angle(v_ + Rational::one() - dd);
}

Rational Angle::ccw_to(const Angle& b) const {
    if (v_ <= b.v_) return b.v_ - v_;
    return Rational::one() - (v_ - b.v_);
}

Rational Angle::circ_dist(const Angle& a, const Angle& b) {
    Rational d = a.ccw_to(b);
    Rational other = Rational::one() - d;
    return d <= other ? d : other;
}

std::optional<uint32_t> Angle::exact_period() const {
    if (v_.den().is_even()) return std::nullopt;
    const Natural& q = v_.den();
    Natural r = Natural{2} % q;
    Natural target = Natural{1} % q;
    uint32_t k = 1;
    while (Natural::cmp(r, target) != 0) {
        r = (r + r) % q;
        ++k;
        if (Natural{k} > q) throw std::logic_error("order computation diverged");
    }
    return k;
}

std::vector<Angle> Angle::Orbit::points() const {
    std::vector<Angle> out = tail;
    out.insert(out.end(), cycle.begin(), cycle.end());
    return out;
}

Angle::Orbit Angle::forward_orbit() const {
    std::vector<Angle> seen;
    Angle cur = *this;
    for (;;) {
        for (size_t i = 0; i < seen.size(); ++i) {
            if (seen[i] == cur) {
                Orbit o;
                o.preperiod = i;
                o.tail.assign(seen.begin(), seen.begin() + i);
                o.cycle.assign(seen.begin() + i, seen.end());
                return o;
            }
        }
        seen.push_back(cur);
        cur = cur.doubled();
    }
}

std::string Angle::str() const {
    return v_.num().to_decimal() + "/" + v_.den().to_decimal();
}

}  // namespace wakes
