#include "wakes/components.hpp"

#include <algorithm>
#include <stdexcept>

namespace wakes {

PartitionSpec HyperbolicComponent::star_partition() const {
    return PartitionSpec::star(theta_minus, theta_plus);
}

ArcSet HyperbolicComponent::pi1() const {
    return ArcSet::arc(theta_minus, theta_plus, true, true);
}

ArcSet HyperbolicComponent::pi0() const { return pi1().preimage_sigma(); }

std::string HyperbolicComponent::str() const {
    return "(" + theta_minus.str() + ", " + theta_plus.str() + ")";
}

const HyperbolicComponent* ComponentPool::find(const Angle& tm, const Angle& tp) const {
    for (const auto& c : components)
        if (c.theta_minus == tm && c.theta_plus == tp) return &c;
    return nullptr;
}

std::vector<const HyperbolicComponent*> ComponentPool::of_period(uint32_t n) const {
    std::vector<const HyperbolicComponent*> out;
    for (const auto& c : components)
        if (c.period == n) out.push_back(&c);
    return out;
}

std::vector<Angle> exact_period_angles(uint32_t n) {
    std::vector<Angle> out;
    Natural q = Natural{1}.shl(n) - Natural{1};
    uint64_t qv = q.to_u64();
    for (uint64_t k = 1; k < qv; ++k) {
        Angle a(k, qv);
        if (a.exact_period() == n) out.push_back(a);
    }
    return out;
}

Word kneading(const Angle& theta_minus, uint32_t period) {
    return Word::finite_word(
        itinerary_prefix(PartitionSpec::plus(theta_minus), theta_minus, period));
}

namespace {

struct Chord {
    Angle a, b;  // a < b
};

// Chords cross transversally iff exactly one endpoint of one lies strictly
// inside the other's interval. Same-period chords never share endpoints.
bool chords_cross(const Chord& c, const Chord& d) {
    bool a_in = c.a < d.a && d.a < c.b;
    bool b_in = c.a < d.b && d.b < c.b;
    return a_in != b_in;
}

}  // namespace

ComponentPool pair_periodic_angles(uint32_t max_period) {
    if (max_period < 2) throw std::invalid_argument("max_period must be at least 2");
    ComponentPool pool;
    pool.max_period = max_period;
    std::vector<Chord> chords;
    for (uint32_t n = 2; n <= max_period; ++n) {
        std::vector<Angle> angles = exact_period_angles(n);
        std::vector<bool> paired(angles.size(), false);
        for (size_t i = 0; i < angles.size(); ++i) {
            if (paired[i]) continue;
            size_t partner = angles.size();
            for (size_t j = i + 1; j < angles.size(); ++j) {
                if (paired[j]) continue;
                Chord cand{angles[i], angles[j]};
                bool crossing = false;
                for (const Chord& c : chords)
                    if (chords_cross(cand, c)) {
                        crossing = true;
                        break;
                    }
                if (!crossing) {
                    partner = j;
                    break;
                }
            }
            if (partner == angles.size())
                throw std::logic_error("Lavaurs pairing found no partner for " +
                                       angles[i].str());
            paired[i] = paired[partner] = true;
            chords.push_back({angles[i], angles[partner]});

            HyperbolicComponent h;
            h.theta_minus = angles[i];
            h.theta_plus = angles[partner];
            h.period = n;
            h.kneading = kneading(h.theta_minus, n);
            h.discarded = Word::finite_word(h.kneading.prefix(n - 1));
            pool.components.push_back(std::move(h));
        }
    }
    return pool;
}

bool wake_gt(const HyperbolicComponent& h1, const HyperbolicComponent& h2) {
    if (h1 == h2) return false;
    return h2.theta_minus <= h1.theta_minus && h1.theta_plus <= h2.theta_plus;
}

std::vector<HyperbolicComponent> combinatorial_arc(const HyperbolicComponent& h,
                                                   const HyperbolicComponent& hp,
                                                   const ComponentPool& pool) {
    if (!wake_gt(hp, h))
        throw std::invalid_argument("combinatorial arc needs H' strictly above H");
    std::vector<HyperbolicComponent> out;
    for (const auto& c : pool.components)
        if (wake_gt(hp, c) && wake_gt(c, h)) out.push_back(c);
    // Largest wake first: the H end of the arc comes first.
    std::sort(out.begin(), out.end(),
              [](const HyperbolicComponent& x, const HyperbolicComponent& y) {
                  return wake_gt(y, x);
              });
    return out;
}

std::vector<HyperbolicComponent> conspicuous_components(const HyperbolicComponent& h,
                                                        const ComponentPool& pool) {
    std::vector<HyperbolicComponent> out;
    out.push_back(h);
    for (const auto& cand : pool.components) {
        if (!(cand.period < h.period) || !wake_gt(cand, h)) continue;
        // No component strictly between may have period below per(cand).
        bool blocked = false;
        for (const auto& mid : pool.components) {
            if (mid.period < cand.period && wake_gt(cand, mid) && wake_gt(mid, h)) {
                blocked = true;
                break;
            }
        }
        if (!blocked) out.push_back(cand);
    }
    std::sort(out.begin(), out.end(),
              [](const HyperbolicComponent& x, const HyperbolicComponent& y) {
                  if (x.period != y.period) return x.period > y.period;
                  return x.theta_minus < y.theta_minus;
              });
    return out;
}

std::vector<uint32_t> return_times(const HyperbolicComponent& h,
                                   const ComponentPool& pool) {
    std::vector<uint32_t> out;
    for (const auto& c : conspicuous_components(h, pool))
        if (!(c == h)) out.push_back(c.period);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace wakes
