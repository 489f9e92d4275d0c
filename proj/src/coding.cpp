#include "wakes/coding.hpp"

#include <stdexcept>

namespace wakes {

Sym opposite(Sym s) {
    if (s == Sym::A) return Sym::B;
    if (s == Sym::B) return Sym::A;
    throw std::invalid_argument("opposite letter is defined for A and B only");
}

std::string sym_str(Sym s) {
    switch (s) {
        case Sym::A: return "A";
        case Sym::B: return "B";
        case Sym::Star: return "⋆";  // star
        case Sym::Circ: return "∘";  // ring
    }
    return "?";
}

Sym Word::at(size_t i) const {
    if (i < head.size()) return head[i];
    if (cycle.empty()) throw std::out_of_range("index past the end of a finite word");
    return cycle[(i - head.size()) % cycle.size()];
}

std::vector<Sym> Word::prefix(size_t n) const {
    std::vector<Sym> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.push_back(at(i));
    return out;
}

Word Word::from_string(std::string_view s) {
    std::vector<Sym> syms;
    for (size_t i = 0; i < s.size();) {
        unsigned char c = s[i];
        if (c == 'A') {
            syms.push_back(Sym::A);
            ++i;
        } else if (c == 'B') {
            syms.push_back(Sym::B);
            ++i;
        } else if (c == '*') {
            syms.push_back(Sym::Star);
            ++i;
        } else if (c == 'o') {
            syms.push_back(Sym::Circ);
            ++i;
        } else if (s.substr(i).starts_with("⋆")) {
            syms.push_back(Sym::Star);
            i += 3;
        } else if (s.substr(i).starts_with("∘")) {
            syms.push_back(Sym::Circ);
            i += 3;
        } else {
            throw std::invalid_argument("bad symbol in word string");
        }
    }
    return finite_word(std::move(syms));
}

std::string Word::str() const {
    std::string out;
    for (Sym s : head) out += sym_str(s);
    if (!cycle.empty()) {
        out += "(";
        for (Sym s : cycle) out += sym_str(s);
        out += ")*";
    }
    return out;
}

PartitionSpec PartitionSpec::circ(Angle alpha) {
    PartitionSpec p(Kind::Circ, alpha, alpha);
    auto [h0, h1] = alpha.halves();
    p.a0_ = h0;
    p.a1_ = h1;
    return p;
}

PartitionSpec PartitionSpec::plus(Angle alpha) {
    PartitionSpec p = circ(alpha);
    p.kind_ = Kind::Plus;
    return p;
}

PartitionSpec PartitionSpec::minus(Angle alpha) {
    PartitionSpec p = circ(alpha);
    p.kind_ = Kind::Minus;
    return p;
}

PartitionSpec PartitionSpec::star(Angle theta_minus, Angle theta_plus) {
    if (!(theta_minus < theta_plus))
        throw std::invalid_argument("star partition needs theta_minus < theta_plus");
    PartitionSpec p(Kind::Star, theta_minus, theta_plus);
    auto [a0, a1] = theta_minus.halves();
    auto [b0, b1] = theta_plus.halves();
    p.a0_ = a0;  // theta_minus / 2
    p.a1_ = a1;  // (theta_minus + 1) / 2
    p.b0_ = b0;  // theta_plus / 2
    p.b1_ = b1;  // (theta_plus + 1) / 2
    return p;
}

std::map<Sym, ArcSet> PartitionSpec::pieces() const {
    std::map<Sym, ArcSet> out;
    switch (kind_) {
        case Kind::Circ:
            out[Sym::A] = ArcSet::arc(a1_, a0_, false, false);
            out[Sym::B] = ArcSet::arc(a0_, a1_, false, false);
            out[Sym::Circ] = ArcSet::point(a0_).unite(ArcSet::point(a1_));
            break;
        case Kind::Plus:
            out[Sym::A] = ArcSet::arc(a1_, a0_, true, false);
            out[Sym::B] = ArcSet::arc(a0_, a1_, true, false);
            break;
        case Kind::Minus:
            out[Sym::A] = ArcSet::arc(a1_, a0_, false, true);
            out[Sym::B] = ArcSet::arc(a0_, a1_, false, true);
            break;
        case Kind::Star:
            out[Sym::A] = ArcSet::arc(b1_, a0_, false, false);
            out[Sym::B] = ArcSet::arc(b0_, a1_, false, false);
            out[Sym::Star] = ArcSet::arc(a0_, b0_, true, true)
                                 .unite(ArcSet::arc(a1_, b1_, true, true));
            break;
    }
    return out;
}

ArcSet PartitionSpec::piece(Sym s) const {
    auto all = pieces();
    auto it = all.find(s);
    if (it == all.end()) throw std::invalid_argument("symbol not in this partition");
    return it->second;
}

Sym PartitionSpec::classify(const Angle& x) const {
    switch (kind_) {
        case Kind::Circ:
            if (x == a0_ || x == a1_) return Sym::Circ;
            return (a0_ < x && x < a1_) ? Sym::B : Sym::A;
        case Kind::Plus:
            // B = [alpha/2, (alpha+1)/2), A = [(alpha+1)/2, alpha/2)
            return (a0_ <= x && x < a1_) ? Sym::B : Sym::A;
        case Kind::Minus:
            // B = (alpha/2, (alpha+1)/2], A = ((alpha+1)/2, alpha/2]
            return (a0_ < x && x <= a1_) ? Sym::B : Sym::A;
        case Kind::Star:
            if ((a0_ <= x && x <= b0_) || (a1_ <= x && x <= b1_)) return Sym::Star;
            return (b0_ < x && x < a1_) ? Sym::B : Sym::A;
    }
    throw std::logic_error("unreachable");
}

std::vector<Sym> itinerary_prefix(const PartitionSpec& spec, const Angle& theta,
                                  size_t length) {
    std::vector<Sym> out;
    out.reserve(length);
    Angle cur = theta;
    for (size_t i = 0; i < length; ++i) {
        out.push_back(spec.classify(cur));
        cur = cur.doubled();
    }
    return out;
}

Word itinerary(const PartitionSpec& spec, const Angle& theta, size_t length) {
    auto orbit = theta.forward_orbit();
    size_t t = orbit.preperiod, c = orbit.cycle.size();
    if (length <= t + c) return Word::finite_word(itinerary_prefix(spec, theta, length));

    std::vector<Sym> syms = itinerary_prefix(spec, theta, t + c);
    // Shrink the cycle to its primitive period.
    size_t d = c;
    for (size_t cand = 1; cand < c; ++cand) {
        if (c % cand != 0) continue;
        bool ok = true;
        for (size_t i = 0; i + cand < c && ok; ++i) ok = syms[t + i] == syms[t + i + cand];
        if (ok) {
            d = cand;
            break;
        }
    }
    // Absorb a matching tail of the head into the cycle.
    while (t > 0 && syms[t - 1] == syms[t - 1 + d]) --t;
    Word w;
    w.head.assign(syms.begin(), syms.begin() + t);
    w.cycle.assign(syms.begin() + t, syms.begin() + t + d);
    return w;
}

Word kneading_of_angle(const Angle& alpha, size_t length) {
    return itinerary(PartitionSpec::circ(alpha), alpha, length);
}

ArcSet cylinder_set(const PartitionSpec& spec, const std::vector<Sym>& w) {
    if (w.empty()) return ArcSet::full_circle();
    ArcSet acc = spec.piece(w.back());
    for (size_t i = w.size() - 1; i-- > 0;)
        acc = spec.piece(w[i]).intersect(acc.preimage_sigma());
    return acc;
}

ArcSet cylinder_set(const PartitionSpec& spec, const Word& w) {
    if (!w.finite()) throw std::invalid_argument("cylinder of an infinite word");
    return cylinder_set(spec, w.head);
}

}  // namespace wakes
