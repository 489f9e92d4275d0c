#include "wakes/verify.hpp"

#include <algorithm>
#include <map>

namespace wakes {

bool xi_contains(const HyperbolicComponent& h, const Angle& theta) {
    // The wake angles are periodic: if the orbit ever meets one, it does so
    // again at arbitrarily large times, so visiting at step 0 also counts.
    for (const Angle& p : theta.forward_orbit().points())
        if (p == h.theta_minus || p == h.theta_plus) return true;
    return false;
}

bool disc_contains(const HyperbolicComponent& h, const Angle& theta) {
    auto orbit = theta.forward_orbit();
    for (const Angle& p : orbit.cycle)
        if (h.theta_minus <= p && p <= h.theta_plus) return true;
    for (size_t i = 1; i < orbit.tail.size(); ++i)
        if (h.theta_minus <= orbit.tail[i] && orbit.tail[i] <= h.theta_plus) return true;
    return false;
}

VerificationReport verify_main_theorem(const HyperbolicComponent& h,
                                       const ComponentPool& pool) {
    VerificationReport rep;
    rep.h = h;
    rep.conspicuous_used = conspicuous_components(h, pool);
    auto spec = h.star_partition();

    ArcSet covered_set;
    for (const auto& hp : rep.conspicuous_used) {
        covered_set = covered_set.unite(cylinder_set(spec, hp.kneading.head));
        std::vector<Sym> khat_star = hp.discarded.head;
        khat_star.push_back(Sym::Star);
        covered_set = covered_set.unite(cylinder_set(spec, khat_star));
    }

    rep.residual = h.pi1().difference(covered_set);
    rep.residual_finite = rep.residual.all_points();
    rep.residual_points = rep.residual.point_list();
    rep.covered = rep.residual_finite;
    for (const Angle& p : rep.residual_points) {
        bool in_xi = xi_contains(h, p);
        rep.residual_in_xi.push_back(in_xi);
        rep.covered = rep.covered && in_xi;
    }
    return rep;
}

bool remark_condition(const HyperbolicComponent& h) {
    ArcSet pi0 = h.pi0();
    Angle m = h.theta_minus, p = h.theta_plus;
    for (uint32_t k = 0; k + 1 < h.period; ++k) {
        if (pi0.contains(m) || pi0.contains(p)) return false;
        m = m.doubled();
        p = p.doubled();
    }
    return true;
}

size_t exact_depth(const Angle& theta) {
    auto orbit = theta.forward_orbit();
    return orbit.preperiod + orbit.cycle.size();
}

std::vector<Sym> MarkerChain::expand(size_t length) const {
    std::vector<Sym> out;
    size_t b = 0;
    while (out.size() < length) {
        out.push_back(Sym::Star);
        if (b >= blocks.size()) {
            if (!infinite || blocks.size() <= cycle_start) break;
            b = cycle_start;
        }
        const Block& blk = blocks[b];
        const Word& k = blk.component.kneading;
        size_t letters = blk.terminal ? blk.period : blk.period - 1;
        for (size_t i = 0; i < letters && out.size() < length; ++i)
            out.push_back(k.at(i));
        if (blk.terminal) break;
        ++b;
    }
    return out;
}

size_t MarkerChain::finite_length() const {
    size_t len = 0;
    for (const Block& b : blocks) len += b.period;  // a star plus per-1 letters,
                                                    // or the terminal K letters
    if (!blocks.empty() && blocks.back().terminal) ++len;  // its leading star
    return len;
}

std::string MarkerChain::str() const {
    std::string out;
    auto block_str = [](const Block& b) {
        std::string s = sym_str(Sym::Star);
        const Word& k = b.component.kneading;
        size_t letters = b.terminal ? b.period : b.period - 1;
        for (size_t i = 0; i < letters; ++i) s += sym_str(k.at(i));
        return s;
    };
    if (!infinite) {
        for (const Block& b : blocks) out += block_str(b);
        if (blocks.empty()) out += sym_str(Sym::Star);
        return out;
    }
    for (size_t i = 0; i < cycle_start; ++i) out += block_str(blocks[i]);
    out += "(";
    for (size_t i = cycle_start; i < blocks.size(); ++i) out += block_str(blocks[i]);
    out += ")*";
    return out;
}

namespace {

struct ItinerarySource {
    std::vector<Angle> points;  // tail then cycle
    size_t preperiod, cycle_len;
    PartitionSpec spec;

    // Canonical index: positions past the tail reduce modulo the cycle.
    size_t canon(size_t j) const {
        return j < preperiod ? j : preperiod + (j - preperiod) % cycle_len;
    }
    Sym at(size_t j) const { return spec.classify(points[canon(j)]); }
};

struct GreedyOutcome {
    MarkerChain chain;
    bool ok = false;
    std::string message;
};

bool block_equivalent(const MarkerChain::Block& a, const MarkerChain::Block& b) {
    // Blocks of equal period carry identical words (the overlap lemma), so
    // the representative component does not matter.
    return a.period == b.period && a.terminal == b.terminal;
}

// Minimal head, primitive block cycle; mirrors the word compression.
void canonicalize_infinite(MarkerChain& chain) {
    size_t len = chain.blocks.size() - chain.cycle_start;
    for (size_t d = 1; d < len; ++d) {
        if (len % d != 0) continue;
        bool periodic = true;
        for (size_t i = chain.cycle_start; i + d < chain.blocks.size() && periodic; ++i)
            periodic = block_equivalent(chain.blocks[i], chain.blocks[i + d]);
        if (periodic) {
            chain.blocks.resize(chain.cycle_start + d);
            len = d;
            break;
        }
    }
    while (chain.cycle_start > 0 &&
           block_equivalent(chain.blocks[chain.cycle_start - 1], chain.blocks.back())) {
        chain.blocks.pop_back();
        --chain.cycle_start;
    }
}

GreedyOutcome greedy_parse(const HyperbolicComponent& h, const ItinerarySource& itin,
                           const std::vector<uint32_t>& returns,
                           const std::map<uint32_t, HyperbolicComponent>& by_period) {
    const size_t t = itin.preperiod, c = itin.cycle_len;
    const uint32_t n = h.period;
    GreedyOutcome out;
    MarkerChain& chain = out.chain;

    size_t p = 0;
    while (itin.at(p) != Sym::Star) {
        ++p;
        if (p > t + c) throw std::logic_error("Disc angle without a star");
    }
    chain.first_star = p;
    chain.star_positions.push_back(p);

    auto is_return = [&](size_t j) {
        return std::find(returns.begin(), returns.end(), j) != returns.end();
    };

    // A parse from a star anchor is a function of the orbit point there, so
    // a repeated anchor inside the orbit cycle means the chain is infinite.
    std::map<size_t, size_t> anchor_block;
    if (p >= t) anchor_block[(p - t) % c] = 0;

    size_t anchor = p, j = 1;
    const size_t guard_max = t + (c + 2) * (size_t{n} + 2) + 4;
    for (size_t guard = 0; guard < guard_max * (n + 1); ++guard) {
        Sym s = itin.at(anchor + j);
        Sym expect = h.kneading.at(j - 1);
        if (s == Sym::Star) {
            if (!is_return(j) && j != n) {
                out.message = "star at offset " + std::to_string(j);
                return out;
            }
            chain.blocks.push_back({static_cast<uint32_t>(j), by_period.at(j), false});
            anchor += j;
            j = 1;
            chain.star_positions.push_back(anchor);
            if (anchor >= t) {
                auto [it, fresh] =
                    anchor_block.emplace((anchor - t) % c, chain.blocks.size());
                if (!fresh) {
                    chain.infinite = true;
                    chain.cycle_start = it->second;
                    canonicalize_infinite(chain);
                    out.ok = true;
                    return out;
                }
            }
            continue;
        }
        if (s == expect) {
            if (j == n) {
                chain.blocks.push_back({n, h, true});
                out.ok = true;
                return out;
            }
            ++j;
            continue;
        }
        if (s == opposite(expect) && is_return(j)) {
            chain.blocks.push_back({static_cast<uint32_t>(j), by_period.at(j), true});
            out.ok = true;
            return out;
        }
        out.message = "letter breaks the kneading at offset " + std::to_string(j);
        return out;
    }
    throw std::logic_error("marker parse exceeded its cap");
}

// Backtracking audit: tries every conspicuous block at every star with no
// greedy commitment. A recursion that reenters a pending anchor is a valid
// infinite parse. Success must agree with the greedy result.
bool backtracking_parse(const std::vector<HyperbolicComponent>& cons,
                        const ItinerarySource& itin, size_t anchor,
                        std::map<size_t, int>& memo) {
    size_t key = itin.canon(anchor);
    auto found = memo.find(key);
    if (found != memo.end()) {
        if (found->second == 2) return true;
        if (found->second == 1) return true;  // pending: cycle, case (b)
        return false;
    }
    memo[key] = 1;
    bool ok = false;
    for (const auto& hp : cons) {
        uint32_t d = hp.period;
        bool prefix = true;
        for (uint32_t i = 1; i < d && prefix; ++i)
            prefix = itin.at(anchor + i) == hp.kneading.at(i - 1);
        if (!prefix) continue;
        Sym last = itin.at(anchor + d);
        if (last == hp.kneading.at(d - 1)) {
            ok = true;  // terminal K(H_i)
            break;
        }
        if (last == Sym::Star && backtracking_parse(cons, itin, anchor + d, memo)) {
            ok = true;
            break;
        }
    }
    memo[key] = ok ? 2 : 0;
    return ok;
}

}  // namespace

std::optional<MarkerChain> marker_decomposition(const HyperbolicComponent& h,
                                                const Angle& theta,
                                                const ComponentPool& pool,
                                                size_t depth,
                                                bool audit_backtracking) {
    (void)depth;  // the parse is exact for rationals; kept for the interface
    if (!disc_contains(h, theta)) return std::nullopt;

    auto orbit = theta.forward_orbit();
    ItinerarySource itin{orbit.points(), orbit.preperiod, orbit.cycle.size(),
                         h.star_partition()};

    auto cons = conspicuous_components(h, pool);
    std::map<uint32_t, HyperbolicComponent> by_period;
    for (const auto& hp : cons) by_period.emplace(hp.period, hp);

    GreedyOutcome out = greedy_parse(h, itin, return_times(h, pool), by_period);
    out.chain.exceptional = xi_contains(h, theta);

    if (audit_backtracking) {
        std::map<size_t, int> memo;
        bool bt = backtracking_parse(cons, itin, out.chain.first_star, memo);
        if (bt != out.ok)
            throw std::logic_error("greedy and backtracking parses disagree at " +
                                   theta.str());
    }

    if (!out.ok && !out.chain.exceptional)
        throw TheoremViolation("marker parse failed for " + h.str() + " at " +
                               theta.str() + ": " + out.message);
    return out.chain;
}

std::vector<CodingDifference> compare_codings(const HyperbolicComponent& h,
                                              const Angle& theta, size_t depth) {
    auto plus_spec = PartitionSpec::plus(h.theta_minus);
    auto minus_spec = PartitionSpec::minus(h.theta_plus);
    std::vector<CodingDifference> out;
    Angle cur = theta;
    for (size_t m = 0; m < depth; ++m) {
        Sym sp = plus_spec.classify(cur);
        Sym sm = minus_spec.classify(cur);
        if (sp != sm) out.push_back({m, sp, sm});
        cur = cur.doubled();
    }
    return out;
}

}  // namespace wakes
