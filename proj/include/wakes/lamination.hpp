#pragma once

#include <string>
#include <vector>

#include "wakes/components.hpp"

namespace wakes {

// A chord of the closed unit disk, an unordered pair of distinct boundary
// angles. Its length is the circle distance between the endpoints.
struct Leaf {
    Angle a, b;  // stored with a < b

    static Leaf make(Angle x, Angle y);
    Leaf mapped() const { return make(a.doubled(), b.doubled()); }
    Rational length() const { return Angle::circ_dist(a, b); }
    bool has_endpoint(const Angle& x) const { return x == a || x == b; }
    std::string str() const { return "{" + a.str() + ", " + b.str() + "}"; }
    friend bool operator==(const Leaf&, const Leaf&) = default;
};

// True when the chords cross in the open disk (strictly interleaved
// endpoints); touching at an endpoint does not count.
bool leaves_cross(const Leaf& x, const Leaf& y);

// The finite invariant leaf system of a component: the minor leaf l1 joining
// the wake angles, its forward chain l2..l_{N-1}, and the two major leaves
// l0, l0' on the halves, with l0 picked so that l0 equals l_N as a set.
struct LeafSystem {
    Leaf minor;               // l1
    std::vector<Leaf> chain;  // l1 .. l_{N-1}
    Leaf major;               // l0
    Leaf major_prime;         // l0'
    bool flip = false;        // leaves have set-period N/2 (even N only)

    std::vector<Leaf> all() const;  // l0', l0, l1..l_{N-1}
    const Leaf& at(uint32_t n) const;  // l_n for 1 <= n <= N-1
};

LeafSystem leaves_of(const HyperbolicComponent& h);

// The section 5 recursion: R0 = Pi0(H); Q_n = R_n off return times and
// R_n intersected with the closure of the k_n piece at return times;
// R_{n+1} = sigma(Q_n). All sets are exact; every Q_n arc stays shorter
// than 1/2, which keeps the sigma image exact.
struct RQTrace {
    HyperbolicComponent h;
    std::vector<uint32_t> returns;
    std::vector<ArcSet> r;  // R_0 .. R_N
    std::vector<ArcSet> q;  // Q_0 .. Q_{N-1}
    // Per step n >= 1, the sigma^{n-1} images of the two wake angles (the
    // "e" marks of the appendix tables); empty at step 0.
    std::vector<std::vector<Angle>> endpoint_marks;
};

RQTrace rq_trace(const HyperbolicComponent& h, const ComponentPool& pool);

// The structural facts of section 5 evaluated with exact arc algebra; a
// failed check is a report entry, not an exception.
struct CheckReport {
    bool leaves_avoid_pi0_interior = false;             // (a)
    bool leaf_endpoints_in_piece_closure = false;       // (b), 1 <= n <= N-1
    bool dichotomy = false;                             // (c), 1 <= n <= N
    bool cover_implies_return = false;                  // (d), n < N
    bool final_step = false;                            // (e) R_N covers Pi0 and
                                                        //     sits in k_N u star
    bool flip_side_mapping = false;                     // Remark 5.3 (flip only)
    // Experimental record for the conjectured converse: every return time n
    // has R_n covering Pi0(H). Recorded, never asserted.
    bool converse_evidence = false;
    std::vector<std::string> failures;

    bool all_passed() const {
        return leaves_avoid_pi0_interior && leaf_endpoints_in_piece_closure &&
               dichotomy && cover_implies_return && final_step && flip_side_mapping;
    }
};

CheckReport structural_checks(const HyperbolicComponent& h, const RQTrace& trace,
                              const LeafSystem& leaves, const ComponentPool& pool);

// An edge of the polygon spanned by R_n (or Q_n): its circle arcs plus the
// chords joining the gap between neighbouring arcs.
struct PolygonEdge {
    bool is_arc = true;
    Arc arc;    // valid when is_arc
    Leaf chord; // valid when !is_arc
};

enum class TraceSet { R, Q };
std::vector<PolygonEdge> polygon_edges(const RQTrace& trace, uint32_t n,
                                       TraceSet which = TraceSet::R);

}  // namespace wakes
