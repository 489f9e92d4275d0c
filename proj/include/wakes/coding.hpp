#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wakes/arcset.hpp"

namespace wakes {

// Itinerary symbols. Circ appears only in I-circle itineraries, Star only in
// the three-piece I_H itineraries.
enum class Sym : uint8_t { A, B, Star, Circ };

Sym opposite(Sym s);  // A <-> B only
std::string sym_str(Sym s);

// A finite word, or an eventually periodic one as head + primitive cycle.
// Finite words print as "BABB*" style compact strings, infinite ones as
// "B(A*)*" head(cycle)* notation; '*' is emitted as a UTF-8 star.
struct Word {
    std::vector<Sym> head;
    std::vector<Sym> cycle;  // empty <=> finite word

    bool finite() const { return cycle.empty(); }
    size_t size() const { return head.size(); }  // finite words only
    Sym at(size_t i) const;

    static Word finite_word(std::vector<Sym> syms) { return {std::move(syms), {}}; }
    static Word from_string(std::string_view s);  // finite words, "BAB*" / "BABo"

    std::vector<Sym> prefix(size_t n) const;
    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
};

// One of the four boundary conventions of the itinerary codings:
//   circ(alpha):  open pieces, the two boundary halves code as Circ
//   plus(alpha):  half-open, closed on the left endpoint of each piece
//   minus(alpha): half-open, closed on the right endpoint of each piece
//   star(tm,tp):  open A/B pieces and the closed two-arc star piece
class PartitionSpec {
public:
    enum class Kind { Circ, Plus, Minus, Star };

    static PartitionSpec circ(Angle alpha);
    static PartitionSpec plus(Angle alpha);
    static PartitionSpec minus(Angle alpha);
    // Requires theta_minus < theta_plus with equal exact periods.
    static PartitionSpec star(Angle theta_minus, Angle theta_plus);

    Kind kind() const { return kind_; }
    const Angle& alpha() const { return alpha_; }
    const Angle& theta_minus() const { return alpha_; }
    const Angle& theta_plus() const { return beta_; }

    // The exact partition pieces; they tile the circle exactly.
    std::map<Sym, ArcSet> pieces() const;
    ArcSet piece(Sym s) const;

    // The piece containing x; total by construction.
    Sym classify(const Angle& x) const;

private:
    PartitionSpec(Kind k, Angle a, Angle b) : kind_(k), alpha_(a), beta_(b) {}
    Kind kind_;
    Angle alpha_, beta_;
    // Cached partition boundaries: halves of alpha (and of beta for star).
    Angle a0_, a1_, b0_, b1_;
};

// Plain, uncompressed itinerary prefix: symbol j is the piece of sigma^j(x).
std::vector<Sym> itinerary_prefix(const PartitionSpec& spec, const Angle& theta,
                                  size_t length);

// Itinerary with compression: when length exceeds preperiod + period of the
// orbit, returns a canonical eventually periodic Word (minimal head,
// primitive cycle); otherwise a finite word of the requested length.
Word itinerary(const PartitionSpec& spec, const Angle& theta, size_t length);

// I-circle itinerary of alpha at alpha: the kneading sequence of the angle.
Word kneading_of_angle(const Angle& alpha, size_t length);

// T_w: the set of angles whose I_H-itinerary starts with w, computed by
// backward intersection of piece preimages (preimage is exact and total).
ArcSet cylinder_set(const PartitionSpec& spec, const std::vector<Sym>& w);
ArcSet cylinder_set(const PartitionSpec& spec, const Word& w);

}  // namespace wakes
