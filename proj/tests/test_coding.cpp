#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wakes/coding.hpp"

using namespace wakes;

namespace {

// Independent oracle: classify by direct membership in the piece arc sets
// rather than through the comparison-based classifier.
Sym classify_by_pieces(const PartitionSpec& spec, const Angle& x) {
    for (const auto& [sym, set] : spec.pieces())
        if (set.contains(x)) return sym;
    throw std::logic_error("pieces do not cover the circle");
}

std::vector<Sym> oracle_itinerary(const PartitionSpec& spec, const Angle& theta,
                                  size_t n) {
    std::vector<Sym> out;
    Angle cur = theta;
    for (size_t i = 0; i < n; ++i) {
        out.push_back(classify_by_pieces(spec, cur));
        cur = cur.doubled();
    }
    return out;
}

}  // namespace

TEST_CASE("star pieces match the paper's Airplane and H4 data") {
    auto star_air = PartitionSpec::star(Angle(3, 7), Angle(4, 7));
    CHECK(star_air.piece(Sym::Star) ==
          ArcSet::arc(Angle(3, 14), Angle(4, 14), true, true)
              .unite(ArcSet::arc(Angle(10, 14), Angle(11, 14), true, true)));

    auto star_h4 = PartitionSpec::star(Angle(2, 5), Angle(3, 5));
    CHECK(star_h4.piece(Sym::Star) ==
          ArcSet::arc(Angle(2, 10), Angle(3, 10), true, true)
              .unite(ArcSet::arc(Angle(7, 10), Angle(8, 10), true, true)));
    CHECK(star_h4.piece(Sym::A) == ArcSet::arc(Angle(8, 10), Angle(2, 10), false, false));
    CHECK(star_h4.piece(Sym::B) == ArcSet::arc(Angle(3, 10), Angle(7, 10), false, false));
}

TEST_CASE("circ(0) pieces") {
    auto c = PartitionSpec::circ(Angle(0, 1));
    CHECK(c.piece(Sym::Circ) == ArcSet::point(Angle(0, 1)).unite(ArcSet::point(Angle(1, 2))));
    CHECK(c.piece(Sym::A) == ArcSet::arc(Angle(1, 2), Angle(0, 1), false, false));
    CHECK(c.piece(Sym::B) == ArcSet::arc(Angle(0, 1), Angle(1, 2), false, false));
}

TEST_CASE("star with bad order is rejected") {
    CHECK_THROWS_AS(PartitionSpec::star(Angle(4, 7), Angle(3, 7)), std::invalid_argument);
    CHECK_THROWS_AS(PartitionSpec::star(Angle(3, 7), Angle(3, 7)), std::invalid_argument);
}

TEST_CASE("pieces tile the circle exactly") {
    std::vector<PartitionSpec> specs = {
        PartitionSpec::circ(Angle(1, 7)),    PartitionSpec::plus(Angle(3, 7)),
        PartitionSpec::minus(Angle(4, 7)),   PartitionSpec::star(Angle(3, 7), Angle(4, 7)),
        PartitionSpec::star(Angle(2, 5), Angle(3, 5)),
        PartitionSpec::star(Angle(13, 31), Angle(18, 31))};
    for (const auto& spec : specs) {
        ArcSet all;
        Rational len;
        for (const auto& [sym, set] : spec.pieces()) {
            all = all.unite(set);
            len = len + set.total_length();
        }
        CHECK(all.is_full());
        CHECK(len == Rational::one());
    }
}

TEST_CASE("itinerary examples") {
    // Remark A.2: I_{H4}(2/5) = B* B* ...
    Word w = itinerary(PartitionSpec::star(Angle(2, 5), Angle(3, 5)), Angle(2, 5), 64);
    CHECK(!w.finite());
    CHECK(w.head.empty());
    CHECK(w.cycle == std::vector<Sym>{Sym::B, Sym::Star});
    CHECK(w.str() == "(B⋆)*");

    // Derived via the piece-membership oracle.
    auto circ17 = PartitionSpec::circ(Angle(1, 7));
    Word v = itinerary(circ17, Angle(1, 7), 6);
    CHECK(v.prefix(6) == oracle_itinerary(circ17, Angle(1, 7), 6));
    CHECK(v.prefix(6) ==
          std::vector<Sym>{Sym::B, Sym::B, Sym::Circ, Sym::B, Sym::B, Sym::Circ});

    auto star_air = PartitionSpec::star(Angle(3, 7), Angle(4, 7));
    Word u = itinerary(star_air, Angle(11, 14), 6);
    CHECK(u.prefix(6) == oracle_itinerary(star_air, Angle(11, 14), 6));
    CHECK(u.prefix(6) ==
          std::vector<Sym>{Sym::Star, Sym::B, Sym::A, Sym::Star, Sym::B, Sym::A});
}

TEST_CASE("finite itinerary below the compression threshold") {
    auto star_air = PartitionSpec::star(Angle(3, 7), Angle(4, 7));
    Word w = itinerary(star_air, Angle(11, 14), 3);
    CHECK(w.finite());
    CHECK(w.head == std::vector<Sym>{Sym::Star, Sym::B, Sym::A});
}

TEST_CASE("kneading sequences of angles") {
    CHECK(kneading_of_angle(Angle(0, 1), 16).str() == "(∘)*");
    Word k17 = kneading_of_angle(Angle(1, 7), 16);
    CHECK(k17.head.empty());
    CHECK(k17.cycle == std::vector<Sym>{Sym::B, Sym::B, Sym::Circ});
    Word k37 = kneading_of_angle(Angle(3, 7), 16);
    CHECK(k37.cycle == std::vector<Sym>{Sym::B, Sym::A, Sym::Circ});
}

TEST_CASE("cylinder sets") {
    auto star_air = PartitionSpec::star(Angle(3, 7), Angle(4, 7));
    // T_star is the star piece, which is Pi0(H).
    CHECK(cylinder_set(star_air, {Sym::Star}) == star_air.piece(Sym::Star));

    auto star_bas = PartitionSpec::star(Angle(1, 3), Angle(2, 3));
    CHECK(cylinder_set(star_bas, {Sym::A}) ==
          ArcSet::arc(Angle(5, 6), Angle(1, 6), false, false));

    // T_BA for Airplane: every rational sample agrees with the itinerary prefix.
    ArcSet ba = cylinder_set(star_air, {Sym::B, Sym::A});
    std::mt19937 rng(37);
    std::uniform_int_distribution<int> den(2, 500);
    for (int i = 0; i < 200; ++i) {
        int q = den(rng);
        std::uniform_int_distribution<int> num(0, q - 1);
        Angle theta(num(rng), q);
        auto pre = itinerary_prefix(star_air, theta, 2);
        CHECK(ba.contains(theta) == (pre[0] == Sym::B && pre[1] == Sym::A));
    }
}

TEST_CASE("length-n cylinders partition the circle") {
    auto spec = PartitionSpec::star(Angle(3, 7), Angle(4, 7));
    auto spec_flip = PartitionSpec::star(Angle(2, 5), Angle(3, 5));
    for (size_t n = 1; n <= 5; ++n) {
        std::vector<std::vector<Sym>> words = {{}};
        for (size_t i = 0; i < n; ++i) {
            std::vector<std::vector<Sym>> next;
            for (auto& w : words)
                for (Sym s : {Sym::A, Sym::B, Sym::Star}) {
                    auto v = w;
                    v.push_back(s);
                    next.push_back(std::move(v));
                }
            words = std::move(next);
        }
        for (const auto* s : {&spec, &spec_flip}) {
            ArcSet all;
            Rational len;
            for (const auto& w : words) {
                ArcSet c = cylinder_set(*s, w);
                // Pairwise disjointness: the running union never overlaps c.
                CHECK(all.intersect(c).empty());
                all = all.unite(c);
                len = len + c.total_length();
            }
            CHECK(all.is_full());
            CHECK(len == Rational::one());
        }
    }
}

TEST_CASE("shift compatibility of itineraries") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> den(2, 300);
    auto spec = PartitionSpec::star(Angle(13, 31), Angle(18, 31));
    for (int i = 0; i < 100; ++i) {
        int q = den(rng);
        std::uniform_int_distribution<int> num(0, q - 1);
        Angle theta(num(rng), q);
        auto full = itinerary_prefix(spec, theta, 9);
        auto shifted = itinerary_prefix(spec, theta.doubled(), 8);
        CHECK(std::vector<Sym>(full.begin() + 1, full.end()) == shifted);
    }
}

TEST_CASE("classifier agrees with piece membership everywhere") {
    std::vector<PartitionSpec> specs = {
        PartitionSpec::circ(Angle(3, 7)), PartitionSpec::plus(Angle(3, 7)),
        PartitionSpec::minus(Angle(4, 7)),
        PartitionSpec::star(Angle(2, 5), Angle(3, 5))};
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> den(1, 400);
    for (const auto& spec : specs) {
        for (int i = 0; i < 300; ++i) {
            int q = den(rng);
            std::uniform_int_distribution<int> num(0, q - 1);
            Angle x(num(rng), q);
            CHECK(spec.classify(x) == classify_by_pieces(spec, x));
        }
        // Boundary points themselves.
        for (const Angle& b : {spec.alpha(), spec.theta_plus()}) {
            auto [h0, h1] = b.halves();
            CHECK(spec.classify(h0) == classify_by_pieces(spec, h0));
            CHECK(spec.classify(h1) == classify_by_pieces(spec, h1));
        }
    }
}

TEST_CASE("word printing and parsing") {
    Word w = Word::from_string("BABB*");
    CHECK(w.head == std::vector<Sym>{Sym::B, Sym::A, Sym::B, Sym::B, Sym::Star});
    CHECK(w.str() == "BABB⋆");
    CHECK(Word::from_string("BABB⋆") == w);
    CHECK(Word::from_string("BBo").str() == "BB∘");
}
