#pragma once

#include <cstdint>
#include <vector>

#include "wakes/coding.hpp"

namespace wakes {

// A hyperbolic component, represented by its conjugate pair of periodic
// angles 0 < theta_minus < theta_plus < 1 bounding the wake, together with
// its period and kneading data. Pi1(H) is the closed interval
// [theta_minus, theta_plus]; Pi0(H) = sigma^{-1}(Pi1(H)) is the star piece.
struct HyperbolicComponent {
    Angle theta_minus, theta_plus;
    uint32_t period = 0;
    Word kneading;   // K(H), length == period, letters A/B only
    Word discarded;  // K-hat(H), kneading with the last letter removed

    PartitionSpec star_partition() const;
    ArcSet pi1() const;  // [theta_minus, theta_plus], closed
    ArcSet pi0() const;  // sigma^{-1}(Pi1), the closed star piece

    std::string str() const;  // "(13/31, 18/31)"
    friend bool operator==(const HyperbolicComponent& a, const HyperbolicComponent& b) {
        return a.theta_minus == b.theta_minus && a.theta_plus == b.theta_plus;
    }
};

// All hyperbolic components of period 2..max_period, built by the Lavaurs
// pairing. The Main Cardioid (angle 0, period 1) is excluded: no operation
// needs it and the conspicuousness floor is period 2.
struct ComponentPool {
    uint32_t max_period = 0;
    std::vector<HyperbolicComponent> components;  // sorted by (period, theta_minus)

    const HyperbolicComponent* find(const Angle& tm, const Angle& tp) const;
    std::vector<const HyperbolicComponent*> of_period(uint32_t n) const;
};

// All angles of exact sigma-period n, increasing.
std::vector<Angle> exact_period_angles(uint32_t n);

// Lavaurs pairing: processes periods in increasing order; within a period,
// repeatedly pairs the leftmost unpaired angle with the nearest unpaired
// angle whose chord crosses no previously created chord.
ComponentPool pair_periodic_angles(uint32_t max_period);

// K(H): the first per(H) letters of I+_H(theta_minus) = I-_H(theta_plus).
Word kneading(const Angle& theta_minus, uint32_t period);

// The wake order: H1 > H2 iff Pi1(H1) is properly contained in Pi1(H2).
bool wake_gt(const HyperbolicComponent& h1, const HyperbolicComponent& h2);

// Components strictly between H and Hp in the wake order, largest wake
// first. Requires Hp > H.
std::vector<HyperbolicComponent> combinatorial_arc(const HyperbolicComponent& h,
                                                   const HyperbolicComponent& hp,
                                                   const ComponentPool& pool);

// All components conspicuous to H, including H itself, sorted by decreasing
// period. A pool with max_period >= per(H) is sufficient: the arc condition
// only ever inspects components of period below per(H).
std::vector<HyperbolicComponent> conspicuous_components(const HyperbolicComponent& h,
                                                        const ComponentPool& pool);

// Periods of proper conspicuous components, sorted; never contains per(H).
std::vector<uint32_t> return_times(const HyperbolicComponent& h,
                                   const ComponentPool& pool);

}  // namespace wakes
