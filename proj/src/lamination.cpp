#include "wakes/lamination.hpp"

#include <stdexcept>

namespace wakes {

Leaf Leaf::make(Angle x, Angle y) {
    if (x == y) throw std::invalid_argument("a leaf needs two distinct endpoints");
    if (y < x) std::swap(x, y);
    return Leaf{x, y};
}

bool leaves_cross(const Leaf& x, const Leaf& y) {
    if (x.has_endpoint(y.a) || x.has_endpoint(y.b)) return false;
    bool a_in = x.a < y.a && y.a < x.b;
    bool b_in = x.a < y.b && y.b < x.b;
    return a_in != b_in;
}

std::vector<Leaf> LeafSystem::all() const {
    std::vector<Leaf> out;
    out.push_back(major_prime);
    out.push_back(major);
    out.insert(out.end(), chain.begin(), chain.end());
    return out;
}

const Leaf& LeafSystem::at(uint32_t n) const {
    if (n == 0 || n > chain.size()) throw std::out_of_range("leaf index");
    return chain[n - 1];
}

LeafSystem leaves_of(const HyperbolicComponent& h) {
    if (h.period < 2) throw std::invalid_argument("leaf system needs period >= 2");
    const uint32_t n = h.period;
    LeafSystem sys;
    sys.minor = Leaf::make(h.theta_minus, h.theta_plus);
    sys.chain.push_back(sys.minor);
    Leaf cur = sys.minor;
    for (uint32_t i = 2; i <= n - 1; ++i) {
        cur = cur.mapped();
        sys.chain.push_back(cur);
    }
    Leaf l_n = cur.mapped();  // l_N, one of the two half-pair chords

    auto [a0, a1] = h.theta_minus.halves();
    auto [b0, b1] = h.theta_plus.halves();
    // The majors join the two components of Pi0(H): theta_minus/2 with
    // (theta_plus+1)/2 and (theta_minus+1)/2 with theta_plus/2. l0 is the
    // one that l_N lands on.
    Leaf cross1 = Leaf::make(a0, b1);
    Leaf cross2 = Leaf::make(a1, b0);
    if (l_n == cross1) {
        sys.major = cross1;
        sys.major_prime = cross2;
    } else if (l_n == cross2) {
        sys.major = cross2;
        sys.major_prime = cross1;
    } else {
        throw std::logic_error("l_N is not a half-pair chord for " + h.str());
    }

    sys.flip = n % 2 == 0 && h.theta_minus.iterate(n / 2) == h.theta_plus;
    return sys;
}

RQTrace rq_trace(const HyperbolicComponent& h, const ComponentPool& pool) {
    const uint32_t n = h.period;
    RQTrace t;
    t.h = h;
    t.returns = return_times(h, pool);
    auto spec = h.star_partition();

    t.r.push_back(h.pi0());
    t.endpoint_marks.emplace_back();
    Angle om = h.theta_minus, op = h.theta_plus;
    for (uint32_t step = 0; step < n; ++step) {
        bool is_return = false;
        for (uint32_t rt : t.returns) is_return = is_return || rt == step;
        ArcSet qn = t.r[step];
        if (is_return) {
            Sym k = h.kneading.at(step - 1);  // k_step, 1-indexed in the paper
            qn = qn.intersect(spec.piece(k).closure());
        }
        t.q.push_back(qn);
        t.r.push_back(qn.image_sigma());
        t.endpoint_marks.push_back({om, op});
        om = om.doubled();
        op = op.doubled();
    }
    return t;
}

namespace {

// +1 if the germ x + eps lies in s, -1 if x - eps does; x must be a boundary
// point of the closed set s with exactly one side locally inside.
int side_of_set(const ArcSet& s, const Angle& x, const Rational& eps) {
    bool plus = s.contains(x.plus_mod1(eps));
    bool minus = s.contains(x.minus_mod1(eps));
    if (plus == minus) throw std::logic_error("point is not a one-sided boundary");
    return plus ? 1 : -1;
}

}  // namespace

CheckReport structural_checks(const HyperbolicComponent& h, const RQTrace& trace,
                              const LeafSystem& leaves, const ComponentPool& pool) {
    const uint32_t n = h.period;
    CheckReport rep;
    auto spec = h.star_partition();
    ArcSet pi0 = h.pi0();
    ArcSet pi0_int = pi0.interior();

    // (a) no leaf endpoint enters the interior of Pi0(H).
    rep.leaves_avoid_pi0_interior = true;
    for (const Leaf& l : leaves.all()) {
        if (pi0_int.contains(l.a) || pi0_int.contains(l.b)) {
            rep.leaves_avoid_pi0_interior = false;
            rep.failures.push_back("leaf " + l.str() + " meets int Pi0");
        }
    }

    // (b) endpoints of l_n lie in the closure of the k_n piece, n < N.
    rep.leaf_endpoints_in_piece_closure = true;
    for (uint32_t step = 1; step <= n - 1; ++step) {
        ArcSet piece = spec.piece(h.kneading.at(step - 1)).closure();
        const Leaf& l = leaves.at(step);
        if (!piece.contains(l.a) || !piece.contains(l.b)) {
            rep.leaf_endpoints_in_piece_closure = false;
            rep.failures.push_back("l_" + std::to_string(step) +
                                   " endpoints leave the piece closure");
        }
    }

    // (c) dichotomy: R_n inside the closed piece or R_n covers Pi0.
    rep.dichotomy = true;
    for (uint32_t step = 1; step <= n; ++step) {
        ArcSet piece_cl = spec.piece(h.kneading.at(step - 1)).closure();
        bool inside = trace.r[step].subset_of(piece_cl);
        bool covers = pi0.subset_of(trace.r[step]);
        if (!inside && !covers) {
            rep.dichotomy = false;
            rep.failures.push_back("dichotomy fails at step " + std::to_string(step));
        }
    }

    // (d) covering Pi0 before the final step happens only at return times.
    rep.cover_implies_return = true;
    for (uint32_t step = 1; step <= n - 1; ++step) {
        if (!pi0.subset_of(trace.r[step])) continue;
        bool is_return = false;
        for (uint32_t rt : trace.returns) is_return = is_return || rt == step;
        if (!is_return) {
            rep.cover_implies_return = false;
            rep.failures.push_back("R_" + std::to_string(step) +
                                   " covers Pi0 off a return time");
        }
    }

    // (e) final step: R_N covers Pi0 and stays inside k_N piece union star.
    ArcSet last_bound = spec.piece(h.kneading.at(n - 1)).unite(pi0);
    rep.final_step = pi0.subset_of(trace.r[n]) && trace.r[n].subset_of(last_bound);
    if (!rep.final_step) rep.failures.push_back("final step inclusion fails");

    // Remark 5.3: for flip components the Pi0 side of a major endpoint maps
    // to the non-Pi0 side of the other endpoint under sigma^{N/2}. The germ
    // scale sits provably below the minimal gap between boundary points.
    rep.flip_side_mapping = true;
    if (leaves.flip) {
        // Boundary points have denominator dividing 2 lcm(q-, q+); this germ
        // stays below the minimal gap even after N doublings.
        Natural den = Natural::lcm(h.theta_minus.den(), h.theta_plus.den());
        Rational eps(Natural{1}, Natural{8} * den * Natural{1}.shl(n));
        for (const Angle& p : {leaves.major.a, leaves.major.b}) {
            Angle q = p.iterate(n / 2);
            if (!leaves.major.has_endpoint(q) || q == p) {
                rep.flip_side_mapping = false;
                rep.failures.push_back("major endpoints are not swapped by sigma^{N/2}");
                continue;
            }
            int side_p = side_of_set(pi0, p, eps);
            Angle germ = side_p > 0 ? p.plus_mod1(eps) : p.minus_mod1(eps);
            Angle image = germ.iterate(n / 2);
            Rational fwd = q.ccw_to(image);
            int side_img = fwd < Rational(1, 2) ? 1 : -1;
            if (side_img == side_of_set(pi0, q, eps)) {
                rep.flip_side_mapping = false;
                rep.failures.push_back("flip side mapping fails at " + p.str());
            }
        }
        // The sigma^N statement: the Pi0 side of an endpoint returns to the
        // same side of the same endpoint.
        for (const Angle& p : {leaves.major.a, leaves.major.b}) {
            int side_p = side_of_set(pi0, p, eps);
            Angle germ = side_p > 0 ? p.plus_mod1(eps) : p.minus_mod1(eps);
            Angle image = germ.iterate(n);
            Rational fwd = p.ccw_to(image);
            int side_img = fwd < Rational(1, 2) ? 1 : -1;
            if (side_img != side_p) {
                rep.flip_side_mapping = false;
                rep.failures.push_back("sigma^N side return fails at " + p.str());
            }
        }
    }

    // Remark 5.9 record: does every return time cover Pi0?
    rep.converse_evidence = true;
    for (uint32_t rt : trace.returns)
        if (!pi0.subset_of(trace.r[rt])) rep.converse_evidence = false;

    (void)pool;
    return rep;
}

std::vector<PolygonEdge> polygon_edges(const RQTrace& trace, uint32_t n,
                                       TraceSet which) {
    const ArcSet* set = nullptr;
    if (which == TraceSet::R) {
        if (n >= trace.r.size()) throw std::out_of_range("trace step");
        set = &trace.r[n];
    } else {
        if (n >= trace.q.size()) throw std::out_of_range("trace step");
        set = &trace.q[n];
    }
    std::vector<PolygonEdge> out;
    auto arcs = set->arcs();
    for (size_t i = 0; i < arcs.size(); ++i) {
        out.push_back({true, arcs[i], {}});
        const Arc& next = arcs[(i + 1) % arcs.size()];
        if (arcs.size() == 1 && arcs[i].is_point()) continue;
        if (arcs[i].full) continue;
        if (arcs[i].end == next.start) continue;
        out.push_back({false, {}, Leaf::make(arcs[i].end, next.start)});
    }
    return out;
}

}  // namespace wakes
