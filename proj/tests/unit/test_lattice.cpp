#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "lattica/error.hpp"
#include "lattica/lattice.hpp"
#include "oracle.hpp"

using namespace lattica;

namespace {
std::set<oracle::Mask> lattice_intents(const ConceptLattice& l) {
    std::set<oracle::Mask> s;
    for (const auto& c : l.concepts()) s.insert(oracle::to_mask(c.intent));
    return s;
}

// Largest antichain by exhaustive search over concept subsets.
std::size_t brute_width(const ConceptLattice& l) {
    const std::size_t n = l.size();
    std::size_t best = 0;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        bool anti = true;
        for (std::size_t i = 0; i < n && anti; ++i)
            for (std::size_t j = i + 1; j < n && anti; ++j)
                if ((s >> i & 1u) && (s >> j & 1u) && (l.leq(i, j) || l.leq(j, i))) anti = false;
        if (anti) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(s)));
    }
    return best;
}

std::size_t by_intent(const ConceptLattice& l, const FormalContext& ctx, std::vector<std::string> atts) {
    auto i = l.find_intent(ctx.attributes_named(atts));
    REQUIRE(i.has_value());
    return *i;
}
}  // namespace

TEST_CASE("concept counts of the motif contexts") {
    CHECK(enumerate_concepts(fixtures::b3()).size() == 8);
    CHECK(enumerate_concepts(fixtures::n3()).size() == 5);
    CHECK(enumerate_concepts(fixtures::crown(10)).size() == 22);
    CHECK(enumerate_concepts(fixtures::i4()).size() == 11);
    CHECK(enumerate_concepts(fixtures::chain3()).size() == 3);
    CHECK(count_concepts(fixtures::b4()) == 16);
}

TEST_CASE("enumeration matches the closure oracle") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 80; ++t) {
        auto ctx = oracle::random_context(rng, rng() % 10, 1 + rng() % 9, 0.2 + 0.6 * (rng() % 5) / 4.0);
        auto l = enumerate_concepts(ctx);
        CHECK(lattice_intents(l) == oracle::intents(oracle::plain(ctx)));
        CHECK(l.size() == count_concepts(ctx));
        auto intents = enumerate_intents(ctx);
        for (std::size_t i = 1; i < intents.size(); ++i) CHECK(lectic_less(intents[i - 1], intents[i]));
        for (const auto& c : l.concepts()) {
            CHECK(c.extent == ctx.attribute_derive(c.intent));
            CHECK(c.extent_size == c.extent.count());
        }
    }
}

TEST_CASE("covers are the transitive reduction of the order") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        auto ctx = oracle::random_context(rng, 1 + rng() % 7, 1 + rng() % 7, 0.5);
        auto l = enumerate_concepts(ctx);
        std::set<std::pair<std::size_t, std::size_t>> expected;
        for (std::size_t a = 0; a < l.size(); ++a)
            for (std::size_t b = 0; b < l.size(); ++b) {
                if (a == b || !l.leq(a, b)) continue;
                bool direct = true;
                for (std::size_t c = 0; c < l.size() && direct; ++c)
                    if (c != a && c != b && l.leq(a, c) && l.leq(c, b)) direct = false;
                if (direct) expected.insert({a, b});
            }
        CHECK(std::set<std::pair<std::size_t, std::size_t>>(l.covers().begin(), l.covers().end()) == expected);
        CHECK(l.leq(l.bottom(), l.top()));
    }
}

TEST_CASE("order, meet and join") {
    auto b3 = fixtures::b3();
    auto l = enumerate_concepts(b3);
    auto r = by_intent(l, b3, {"r"});
    auto rg = by_intent(l, b3, {"r", "g"});
    auto g = by_intent(l, b3, {"g"});
    CHECK(l.leq(rg, r));
    CHECK_FALSE(l.leq(r, rg));
    CHECK(l.leq(r, r));
    CHECK(l.leq(l.bottom(), r));
    CHECK(l.meet({r}) == r);
    CHECK(l.join({r, g}) == l.top());
    CHECK(l.meet({r, g}) == rg);
    CHECK_THROWS_AS(l.meet({}), InputError);

    auto n3 = fixtures::n3(true);
    auto ln = enumerate_concepts(n3);
    auto plus = ln.find_intent(n3.object_derive(n3.objects_named({"+"})));
    REQUIRE(plus.has_value());
    CHECK(ln.meet({by_intent(ln, n3, {"r"}), by_intent(ln, n3, {"g"}), by_intent(ln, n3, {"b"})}) == *plus);
}

TEST_CASE("width") {
    CHECK(width(enumerate_concepts(fixtures::chain3())) == 1);
    CHECK(width(enumerate_concepts(fixtures::b3())) == 3);
    CHECK(width(enumerate_concepts(fixtures::crown(6))) == 6);
    std::mt19937_64 rng(9);
    for (int t = 0; t < 30; ++t) {
        auto ctx = oracle::random_context(rng, 1 + rng() % 5, 1 + rng() % 5, 0.5);
        auto l = enumerate_concepts(ctx);
        if (l.size() > 16) continue;
        CHECK(width(l) == brute_width(l));
    }
}

TEST_CASE("zoom") {
    auto b3 = fixtures::b3();
    auto l = enumerate_concepts(b3);
    auto z = zoom(l, b3.attribute_index("r"));
    CHECK(z.concept_ids.size() == 4);
    for (auto i : z.concept_ids) CHECK(l[i].intent.test(0));
    CHECK(z.covers.size() == 4);

    auto all = FormalContext::from_rows({"1", "2"}, {"x", "y"}, {"XX", "X."});
    auto la = enumerate_concepts(all);
    CHECK(zoom(la, 0).concept_ids.size() == la.size());
    auto json = zoom_to_json(z, l, b3);
    CHECK(json.find("source_index") != std::string::npos);
}

TEST_CASE("ranks and ceiling") {
    auto l = enumerate_concepts(fixtures::b3());
    auto rk = l.ranks();
    CHECK(rk[l.bottom()] == 0);
    CHECK(rk[l.top()] == 3);
    EnumerationOptions small;
    small.max_concepts = 5;
    CHECK_THROWS_AS(enumerate_concepts(fixtures::b3(), small), CeilingError);
    CHECK_THROWS_AS(count_concepts(fixtures::b3(), small), CeilingError);
}

TEST_CASE("lattice JSON") {
    auto b3 = fixtures::b3();
    auto a = lattice_to_json(enumerate_concepts(b3), b3);
    CHECK(a == lattice_to_json(enumerate_concepts(b3), b3));
    CHECK(a.find("\"covers\"") != std::string::npos);
    CHECK(a.find("\"extent\"") != std::string::npos);
}
