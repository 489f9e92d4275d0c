#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wakes/natural.hpp"

namespace wakes {

// Nonnegative exact rational, always stored reduced with den >= 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(uint64_t n, uint64_t d) : Rational(Natural{n}, Natural{d}) {}
    Rational(Natural n, Natural d);

    const Natural& num() const { return num_; }
    const Natural& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }

    static int cmp(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a, b) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a, b);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational operator+(const Rational& rhs) const;
    Rational operator-(const Rational& rhs) const;  // requires *this >= rhs
    Rational operator*(const Rational& rhs) const;
    Rational half() const;
    static Rational midpoint(const Rational& a, const Rational& b);

    static Rational one() { return Rational(1, 1); }

    std::string str() const;  // "p/q", or "p" when integral
    double to_double() const;

private:
    Natural num_, den_;
};

// A point of the circle T = R/Z: exact reduced rational in [0,1).
class Angle {
public:
    Angle() = default;
    Angle(uint64_t num, uint64_t den) : Angle(Rational(num, den)) {}
    explicit Angle(Rational v);  // reduces mod 1

    static Angle parse(std::string_view s);  // "p/q" or bare integer

    const Rational& value() const { return v_; }
    const Natural& num() const { return v_.num(); }
    const Natural& den() const { return v_.den(); }
    bool is_zero() const { return v_.is_zero(); }

    friend bool operator==(const Angle& a, const Angle& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
        return a.v_ <=> b.v_;
    }

    // The doubling map sigma: theta -> 2*theta mod 1.
    Angle doubled() const;
    Angle iterate(size_t n) const;  // sigma^n

    // The two sigma-preimages theta/2 and (theta+1)/2, in increasing order.
    std::pair<Angle, Angle> halves() const;

    Angle plus_mod1(const Rational& d) const;
    Angle minus_mod1(const Rational& d) const;

    // Counterclockwise distance from *this to b, in [0,1).
    Rational ccw_to(const Angle& b) const;
    // Shorter-way circle distance, in [0,1/2].
    static Rational circ_dist(const Angle& a, const Angle& b);

    // Exact sigma-period: the multiplicative order of 2 mod den for odd den,
    // absent for even den (strictly pre-periodic angles never return).
    std::optional<uint32_t> exact_period() const;

    struct Orbit {
        size_t preperiod = 0;
        std::vector<Angle> cycle;
        std::vector<Angle> tail;  // the preperiodic segment, length == preperiod
        // All distinct points visited, tail followed by cycle.
        std::vector<Angle> points() const;
    };
    Orbit forward_orbit() const;

    std::string str() const;  // "p/q" in lowest terms, "0/1" for zero
    double to_double() const { return v_.to_double(); }

private:
    Rational v_;
};

}  // namespace wakes
