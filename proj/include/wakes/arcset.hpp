#pragma once

#include <string>
#include <vector>

#include "wakes/angle.hpp"

namespace wakes {

// A circular arc, counterclockwise from start to end (wrapping through 0 is
// permitted), with per-endpoint open/closed flags. A single closed point is
// start == end with both flags closed; the full circle carries an explicit
// flag. Boundary openness is first-class data: the paper mixes open, closed
// and half-open intervals and the boundary codings depend on it.
struct Arc {
    Angle start, end;
    bool start_closed = true;
    bool end_closed = true;
    bool full = false;

    static Arc closed(Angle a, Angle b) { return {a, b, true, true, false}; }
    static Arc open(Angle a, Angle b) { return {a, b, false, false, false}; }
    static Arc point(Angle a) { return {a, a, true, true, false}; }
    static Arc full_circle() { return {Angle{}, Angle{}, true, true, true}; }

    bool is_point() const { return !full && start == end; }
    // Counterclockwise length; 1 for the full circle, 0 for a point.
    Rational length() const;
    std::string str() const;
};

// A finite union of circular arcs in canonical normalized form. Internally
// the circle is cut at 0: the set is kept as sorted, pairwise disjoint,
// non-mergeable intervals over [0,1], where an endpoint of 1 is always open
// (membership of the angle 0 is carried by an interval starting at 0).
// Canonical form is unique, so structural equality decides set equality.
class ArcSet {
public:
    struct Interval {
        Rational lo, hi;  // 0 <= lo <= hi <= 1; hi == 1 only with hi_closed == false
        bool lo_closed = true, hi_closed = true;
        friend bool operator==(const Interval&, const Interval&) = default;
    };

    ArcSet() = default;

    static ArcSet empty_set() { return ArcSet{}; }
    static ArcSet full_circle();
    static ArcSet point(const Angle& a);
    // Counterclockwise arc from a to b; a == b with both flags closed is a
    // point. A degenerate open arc (a == b, both open) is rejected.
    static ArcSet arc(const Angle& a, const Angle& b, bool a_closed, bool b_closed);
    static ArcSet from_arc(const Arc& arc);
    static ArcSet from_arcs(const std::vector<Arc>& arcs);

    bool empty() const { return ivs_.empty(); }
    bool is_full() const;
    bool contains(const Angle& x) const;
    bool subset_of(const ArcSet& rhs) const;
    friend bool operator==(const ArcSet& a, const ArcSet& b) { return a.ivs_ == b.ivs_; }

    ArcSet unite(const ArcSet& rhs) const;
    ArcSet intersect(const ArcSet& rhs) const;
    ArcSet difference(const ArcSet& rhs) const;
    ArcSet complement() const;
    ArcSet closure() const;
    ArcSet interior() const;

    // sigma^{-1}: each arc has two preimage arcs, endpoint flags inherited.
    ArcSet preimage_sigma() const;
    // sigma, arc by arc. Exact only when every arc is shorter than 1/2; a
    // longer arc signals a caller contract violation and is rejected.
    ArcSet image_sigma() const;

    // Fused circular arcs (a run through 0 is rejoined), sorted by start.
    std::vector<Arc> arcs() const;
    size_t arc_count() const { return arcs().size(); }

    // True when every component is a single point.
    bool all_points() const;
    std::vector<Angle> point_list() const;

    Rational total_length() const;

    const std::vector<Interval>& intervals() const { return ivs_; }

    std::string str() const;  // "[a,b] u (c,d)" style, wrap through 0 permitted

    // Normalizes an arbitrary collection of raw intervals (their union).
    static ArcSet normalize(const std::vector<Interval>& raw);

private:
    std::vector<Interval> ivs_;

    static bool raw_contains(const std::vector<Interval>& raw, const Rational& x);
    template <typename Member>
    static ArcSet sweep(const std::vector<Rational>& cuts, Member member);
    std::vector<Rational> cut_points() const;
};

}  // namespace wakes
