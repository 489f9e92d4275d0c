#include "wakes/arcset.hpp"

#include <algorithm>
#include <stdexcept>

namespace wakes {

namespace {
const Rational kOne = Rational::one();
}

Rational Arc::length() const {
    if (full) return kOne;
    return start.ccw_to(end);
}

std::string Arc::str() const {
    if (full) return "T";
    std::string s;
    s += start_closed ? '[' : '(';
    s += start.str();
    s += ',';
    s += end.str();
    s += end_closed ? ']' : ')';
    return s;
}

ArcSet ArcSet::full_circle() {
    ArcSet s;
    s.ivs_.push_back({Rational{}, kOne, true, false});
    return s;
}

ArcSet ArcSet::point(const Angle& a) {
    ArcSet s;
    s.ivs_.push_back({a.value(), a.value(), true, true});
    return s;
}

ArcSet ArcSet::arc(const Angle& a, const Angle& b, bool a_closed, bool b_closed) {
    if (a == b) {
        if (a_closed && b_closed) return point(a);
        throw std::invalid_argument("degenerate open arc; use ArcSet::empty_set()");
    }
    std::vector<Interval> raw;
    if (a < b) {
        raw.push_back({a.value(), b.value(), a_closed, b_closed});
    } else {
        // Wraps through 0; the point 0 itself lies strictly inside.
        raw.push_back({a.value(), kOne, a_closed, false});
        if (b.is_zero()) {
            if (b_closed) raw.push_back({Rational{}, Rational{}, true, true});
        } else {
            raw.push_back({Rational{}, b.value(), true, b_closed});
        }
    }
    return normalize(raw);
}

ArcSet ArcSet::from_arc(const Arc& a) {
    if (a.full) return full_circle();
    return arc(a.start, a.end, a.start_closed, a.end_closed);
}

ArcSet ArcSet::from_arcs(const std::vector<Arc>& arcs) {
    std::vector<Interval> raw;
    for (const Arc& a : arcs) {
        ArcSet s = from_arc(a);
        raw.insert(raw.end(), s.ivs_.begin(), s.ivs_.end());
    }
    return normalize(raw);
}

bool ArcSet::is_full() const {
    return ivs_.size() == 1 && ivs_[0].lo.is_zero() && ivs_[0].lo_closed &&
           ivs_[0].hi == kOne;
}

bool ArcSet::contains(const Angle& x) const {
    const Rational& v = x.value();
    for (const Interval& iv : ivs_) {
        if (v < iv.lo) break;
        if (v == iv.lo) {
            if (iv.lo_closed) return true;
            continue;  // could still start a later interval? lo are increasing, so no
        }
        if (v < iv.hi) return true;
        if (v == iv.hi && iv.hi_closed) return true;
    }
    return false;
}

bool ArcSet::raw_contains(const std::vector<Interval>& raw, const Rational& x) {
    for (const Interval& iv : raw) {
        if (x > iv.lo && x < iv.hi) return true;
        if (x == iv.lo && iv.lo_closed) return true;
        if (x == iv.hi && iv.hi_closed) return true;
    }
    return false;
}

// Rebuilds canonical intervals from a membership function evaluated on the
// pieces cut out by the given sorted distinct cut points (which must include
// 0): point p0, gap (p0,p1), point p1, ..., point pk, gap (pk, 1).
template <typename Member>
ArcSet ArcSet::sweep(const std::vector<Rational>& cuts, Member member) {
    ArcSet out;
    const size_t k = cuts.size();
    bool in_run = false;
    Interval run;
    auto open_run = [&](const Rational& at, bool closed) {
        run.lo = at;
        run.lo_closed = closed;
        in_run = true;
    };
    auto close_run = [&](const Rational& at, bool closed) {
        run.hi = at;
        run.hi_closed = closed;
        out.ivs_.push_back(run);
        in_run = false;
    };
    for (size_t i = 0; i < k; ++i) {
        // Point piece.
        bool mp = member(cuts[i], /*is_gap=*/false);
        if (mp && !in_run) open_run(cuts[i], true);
        if (!mp && in_run) close_run(cuts[i], false);
        // Gap piece (cuts[i], next).
        Rational next = (i + 1 < k) ? cuts[i + 1] : kOne;
        Rational mid = Rational::midpoint(cuts[i], next);
        bool mg = member(mid, /*is_gap=*/true);
        if (mg && !in_run) open_run(cuts[i], false);
        if (!mg && in_run) close_run(cuts[i], true);
    }
    if (in_run) close_run(kOne, false);
    return out;
}

ArcSet ArcSet::normalize(const std::vector<Interval>& raw) {
    std::vector<Rational> cuts;
    cuts.push_back(Rational{});
    for (const Interval& iv : raw) {
        if (iv.lo > iv.hi) throw std::invalid_argument("interval with lo > hi");
        cuts.push_back(iv.lo);
        if (iv.hi < kOne) cuts.push_back(iv.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    return sweep(cuts, [&raw](const Rational& x, bool) { return raw_contains(raw, x); });
}

std::vector<Rational> ArcSet::cut_points() const {
    std::vector<Rational> cuts;
    cuts.push_back(Rational{});
    for (const Interval& iv : ivs_) {
        cuts.push_back(iv.lo);
        if (iv.hi < kOne) cuts.push_back(iv.hi);
    }
    return cuts;
}

namespace {
std::vector<Rational> merge_cuts(std::vector<Rational> a, std::vector<Rational> b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}
}  // namespace

ArcSet ArcSet::unite(const ArcSet& rhs) const {
    return sweep(merge_cuts(cut_points(), rhs.cut_points()),
                 [this, &rhs](const Rational& x, bool) {
                     return raw_contains(ivs_, x) || raw_contains(rhs.ivs_, x);
                 });
}

ArcSet ArcSet::intersect(const ArcSet& rhs) const {
    return sweep(merge_cuts(cut_points(), rhs.cut_points()),
                 [this, &rhs](const Rational& x, bool) {
                     return raw_contains(ivs_, x) && raw_contains(rhs.ivs_, x);
                 });
}

ArcSet ArcSet::difference(const ArcSet& rhs) const {
    return sweep(merge_cuts(cut_points(), rhs.cut_points()),
                 [this, &rhs](const Rational& x, bool) {
                     return raw_contains(ivs_, x) && !raw_contains(rhs.ivs_, x);
                 });
}

ArcSet ArcSet::complement() const {
    return sweep(cut_points(),
                 [this](const Rational& x, bool) { return !raw_contains(ivs_, x); });
}

bool ArcSet::subset_of(const ArcSet& rhs) const { return difference(rhs).empty(); }

ArcSet ArcSet::closure() const {
    std::vector<Arc> closed;
    for (Arc a : arcs()) {
        a.start_closed = true;
        a.end_closed = true;
        closed.push_back(a);
    }
    return from_arcs(closed);
}

ArcSet ArcSet::interior() const {
    std::vector<Arc> opened;
    for (Arc a : arcs()) {
        if (a.is_point()) continue;
        if (!a.full) {
            a.start_closed = false;
            a.end_closed = false;
        }
        opened.push_back(a);
    }
    return from_arcs(opened);
}

ArcSet ArcSet::preimage_sigma() const {
    std::vector<Interval> raw;
    for (const Interval& iv : ivs_) {
        raw.push_back({iv.lo.half(), iv.hi.half(), iv.lo_closed, iv.hi_closed});
        raw.push_back({(iv.lo + kOne).half(), (iv.hi + kOne).half(),
                       iv.lo_closed, iv.hi_closed});
    }
    return normalize(raw);
}

ArcSet ArcSet::image_sigma() const {
    std::vector<Interval> raw;
    Rational half(1, 2);
    for (const Arc& a : arcs()) {
        if (a.full || a.length() >= half)
            throw std::invalid_argument("image_sigma on an arc of length >= 1/2");
        ArcSet img = a.is_point()
                         ? point(a.start.doubled())
                         : arc(a.start.doubled(), a.end.doubled(), a.start_closed,
                               a.end_closed);
        raw.insert(raw.end(), img.ivs_.begin(), img.ivs_.end());
    }
    return normalize(raw);
}

std::vector<Arc> ArcSet::arcs() const {
    std::vector<Arc> out;
    if (ivs_.empty()) return out;
    if (is_full()) {
        out.push_back(Arc::full_circle());
        return out;
    }
    for (const Interval& iv : ivs_) {
        Arc a;
        a.start = Angle(iv.lo);
        a.end = iv.hi == kOne ? Angle{} : Angle(iv.hi);
        a.start_closed = iv.lo_closed;
        a.end_closed = iv.hi_closed;
        out.push_back(a);
    }
    // Rejoin a run through 0: last interval reaching 1 is adjacent to a first
    // interval containing 0.
    if (out.size() >= 2 && ivs_.back().hi == kOne && ivs_.front().lo.is_zero() &&
        ivs_.front().lo_closed) {
        Arc fused;
        fused.start = out.back().start;
        fused.start_closed = out.back().start_closed;
        fused.end = out.front().end;
        fused.end_closed = out.front().end_closed;
        out.back() = fused;
        out.erase(out.begin());
    }
    return out;
}

bool ArcSet::all_points() const {
    for (const Interval& iv : ivs_)
        if (!(iv.lo == iv.hi)) return false;
    return true;
}

std::vector<Angle> ArcSet::point_list() const {
    std::vector<Angle> out;
    for (const Interval& iv : ivs_)
        if (iv.lo == iv.hi) out.push_back(Angle(iv.lo));
    return out;
}

Rational ArcSet::total_length() const {
    Rational sum;
    for (const Interval& iv : ivs_) sum = sum + (iv.hi - iv.lo);
    return sum;
}

std::string ArcSet::str() const {
    if (ivs_.empty()) return "{}";
    std::string s;
    bool first = true;
    for (const Arc& a : arcs()) {
        if (!first) s += " u ";
        s += a.str();
        first = false;
    }
    return s;
}

}  // namespace wakes
