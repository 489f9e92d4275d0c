#pragma once

// Independent naive-enumeration oracles used by the unit and acceptance
// suites. These deliberately avoid the library's primary code paths: pairing
// goes through kneading classes and adjacency, Disc membership through a
// direct comparison of the two circle codings, and itinerary symbols through
// piece membership instead of the comparison classifier.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "wakes/coding.hpp"
#include "wakes/components.hpp"

namespace wakes::oracle {

// Pairs the angles of exact period n by grouping them by their full circle
// kneading sequence and pairing adjacent members of each class. Conjugate
// angles share their kneading sequence, and within a class the non-crossing
// rule forces adjacent pairing.
inline std::vector<std::pair<Angle, Angle>> pair_by_kneading_class(uint32_t n) {
    std::vector<Angle> angles = exact_period_angles(n);
    std::map<std::string, std::vector<Angle>> classes;
    for (const Angle& a : angles) classes[kneading_of_angle(a, 4 * n).str()].push_back(a);
    std::vector<std::pair<Angle, Angle>> out;
    for (auto& [key, members] : classes) {
        if (members.size() % 2 != 0)
            throw std::logic_error("odd kneading class at period " + std::to_string(n));
        std::sort(members.begin(), members.end());
        for (size_t i = 0; i + 1 < members.size(); i += 2)
            out.emplace_back(members[i], members[i + 1]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Sym classification by piece membership (dual route to classify()).
inline Sym classify_by_pieces(const PartitionSpec& spec, const Angle& x) {
    for (const auto& [sym, set] : spec.pieces())
        if (set.contains(x)) return sym;
    throw std::logic_error("pieces do not cover the circle");
}

// Kneading K(H) through the piece-membership route.
inline Word kneading_by_pieces(const Angle& theta_minus, uint32_t period) {
    auto spec = PartitionSpec::plus(theta_minus);
    std::vector<Sym> syms;
    Angle cur = theta_minus;
    for (uint32_t i = 0; i < period; ++i) {
        syms.push_back(classify_by_pieces(spec, cur));
        cur = cur.doubled();
    }
    return Word::finite_word(syms);
}

// Disc(H) membership straight from its definition: the two circle codings
// I-circle at theta_plus and theta_minus disagree somewhere. For a rational
// angle, comparing one full orbit lasso decides the question exactly.
inline bool disc_by_coding_comparison(const HyperbolicComponent& h, const Angle& theta) {
    auto orbit = theta.forward_orbit();
    size_t depth = orbit.preperiod + orbit.cycle.size();
    auto plus = itinerary_prefix(PartitionSpec::circ(h.theta_plus), theta, depth);
    auto minus = itinerary_prefix(PartitionSpec::circ(h.theta_minus), theta, depth);
    return plus != minus;
}

}  // namespace wakes::oracle
