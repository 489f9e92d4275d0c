#pragma once

#include <optional>
#include <stdexcept>

#include "wakes/lamination.hpp"

namespace wakes {

// Raised when an itinerary refuses to parse against the conspicuous marker
// alphabet; this would falsify the main theorem for the component.
struct TheoremViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Xi(H): some forward iterate sigma^n(theta), n >= 1, hits a wake angle.
// Decided by forward iteration; rational orbits are eventually periodic and
// the backward tree is never built.
bool xi_contains(const HyperbolicComponent& h, const Angle& theta);

// Disc(H): some sigma^m(theta), m >= 1, lands in the closed wake interval.
bool disc_contains(const HyperbolicComponent& h, const Angle& theta);

// The exact Theorem 4.1 run for one component: the union U over conspicuous
// H' of T_{K(H')} and T_{Khat(H') star}, the residual Pi1(H) minus U, and
// the Xi membership of each residual point.
struct VerificationReport {
    HyperbolicComponent h;
    std::vector<HyperbolicComponent> conspicuous_used;
    bool covered = false;           // residual is finite and lies inside Xi(H)
    bool residual_finite = false;   // no nondegenerate arc survived
    ArcSet residual;
    std::vector<Angle> residual_points;
    std::vector<bool> residual_in_xi;
};

VerificationReport verify_main_theorem(const HyperbolicComponent& h,
                                       const ComponentPool& pool);

// Remark 4.3 hypothesis: no sigma^k of a wake angle, 0 <= k < per(H)-1,
// meets the closed star piece. When it holds the residual must be empty.
bool remark_condition(const HyperbolicComponent& h);

// One marker word of Corollary 4.2, parsed greedily from the first star of
// the I_H itinerary: blocks Khat(H_i) star continue the chain, a terminal
// K(H_i) ends it, and a chain that never terminates is the infinite case.
struct MarkerChain {
    struct Block {
        uint32_t period = 0;            // per(H_i)
        HyperbolicComponent component;  // representative of that period
        bool terminal = false;          // terminal K block (ends the chain)
    };

    size_t first_star = 0;
    std::vector<size_t> star_positions;
    std::vector<Block> blocks;
    bool infinite = false;
    // For infinite chains, blocks[cycle_start..] repeat forever.
    size_t cycle_start = 0;
    // Set when theta lies in Xi(H); the decomposition is evaluated there but
    // labelled exceptional and never counted for or against the corollary.
    bool exceptional = false;

    // The chain re-expanded symbol by symbol from the first star on.
    std::vector<Sym> expand(size_t length) const;
    // Total symbols of a finite chain: the stars plus their blocks.
    size_t finite_length() const;
    std::string str() const;
};

// Returns absent when theta is not in Disc(H). depth caps the symbols that
// get recorded for display; for rational angles the infinite case is decided
// exactly by parse-state cycle detection regardless of depth. The greedy
// parse needs no backtracking (the flip letter disambiguates); a
// backtracking audit parser can be requested to cross-check that claim.
std::optional<MarkerChain> marker_decomposition(const HyperbolicComponent& h,
                                                const Angle& theta,
                                                const ComponentPool& pool,
                                                size_t depth = 0,
                                                bool audit_backtracking = false);

// Positions below depth where the plus and minus codings of theta differ,
// with both symbols. The difference locus is exactly the set of times the
// orbit meets the closed star piece, with opposite letters there.
struct CodingDifference {
    size_t position;
    Sym plus_symbol, minus_symbol;
    friend bool operator==(const CodingDifference&, const CodingDifference&) = default;
};

std::vector<CodingDifference> compare_codings(const HyperbolicComponent& h,
                                              const Angle& theta, size_t depth);

// Preperiod + cycle length of theta: comparing one full lasso decides any
// eventually periodic question about the orbit exactly.
size_t exact_depth(const Angle& theta);

}  // namespace wakes
