#include <doctest.h>

#include <random>
#include <set>
#include <tuple>

#include "fixtures.hpp"
#include "lattica/error.hpp"
#include "lattica/reduction.hpp"
#include "lattica/rules.hpp"
#include "oracle.hpp"

using namespace lattica;

TEST_CASE("support and confidence") {
    auto b3 = fixtures::b3();
    CHECK(rule_support(b3, b3.empty_attributes(), b3.attributes_named({"r"})) == Rational(1, 1));
    CHECK(rule_support(b3, b3.attributes_named({"r"}), b3.attributes_named({"g"})) == Rational(2, 3));
    CHECK(rule_confidence(b3, b3.attributes_named({"r", "g"}), b3.attributes_named({"r"})) == Rational(1, 1));

    auto two = FormalContext::from_rows({"1", "2"}, {"a", "b"}, {"XX", "X."});
    CHECK(rule_confidence(two, two.attributes_named({"a"}), two.attributes_named({"b"})) == Rational(1, 2));
    auto dead = FormalContext::from_rows({"1"}, {"a", "b"}, {"X."});
    CHECK_THROWS_WITH_AS(rule_confidence(dead, dead.attributes_named({"b"}), dead.attributes_named({"a"})),
                         doctest::Contains("confidence undefined"), InputError);
}

TEST_CASE("Luxenburger basis agrees with the cover-pair oracle") {
    std::mt19937_64 rng(23);
    const std::vector<std::pair<Rational, Rational>> params{{{0, 1}, {0, 1}}, {{1, 10}, {1, 2}}, {{1, 4}, {3, 4}}};
    for (int t = 0; t < 60; ++t) {
        auto ctx = oracle::random_context(rng, 1 + rng() % 10, 1 + rng() % 8, 0.5);
        const auto p = oracle::plain(ctx);
        const auto all = oracle::intents(p);
        for (const auto& [eta, gamma] : params) {
            std::vector<oracle::Mask> freq;
            for (auto b : all)
                if (Rational(oracle::extent_size(p, b), p.ng) >= eta) freq.push_back(b);
            std::set<std::tuple<oracle::Mask, oracle::Mask, Rational>> expected;
            for (auto up : freq)
                for (auto lo : freq) {
                    if (up == lo || (up & lo) != up) continue;
                    bool cover = true;
                    for (auto mid : freq)
                        if (mid != up && mid != lo && (up & mid) == up && (mid & lo) == mid) cover = false;
                    if (!cover) continue;
                    auto sa = oracle::extent_size(p, up);
                    if (sa == 0) continue;
                    Rational conf(oracle::extent_size(p, lo), sa);
                    if (conf >= gamma) expected.insert({up, lo & ~up, conf});
                }
            auto basis = luxenburger_basis(ctx, eta, gamma);
            std::set<std::tuple<oracle::Mask, oracle::Mask, Rational>> got;
            for (const auto& r : basis.rules) {
                got.insert({oracle::to_mask(r.body), oracle::to_mask(r.head), r.confidence});
                CHECK_FALSE(r.body.intersects(r.head));
                CHECK(r.support >= eta);
                CHECK(r.confidence >= gamma);
                auto both = r.body;
                both |= r.head;
                CHECK(r.confidence * r.support == intent_support(ctx, both));
                CHECK(r.support == intent_support(ctx, r.body));
            }
            CHECK(got == expected);
        }
    }
}

TEST_CASE("rule output formats") {
    auto two = FormalContext::from_rows({"1", "2", "3"}, {"a", "b"}, {"XX", "X.", "X."});
    auto basis = luxenburger_basis(two, Rational(0, 1), Rational(1, 4));
    REQUIRE(basis.rules.size() == 1);
    auto tsv = rules_to_tsv(basis, two);
    CHECK(tsv == "body\thead\tsupport\tconfidence\na\tb\t1.0000\t0.3333\n");
    auto json = rules_to_json(basis, two);
    CHECK(json.find("\"1/3\"") != std::string::npos);
    CHECK(luxenburger_basis(two, Rational(0, 1), Rational(1, 2)).rules.empty());
    CHECK_THROWS_AS(luxenburger_basis(two, Rational(0, 1), Rational(2, 1)), InputError);
}

TEST_CASE("empty body is written as braces") {
    auto two = FormalContext::from_rows({"1", "2"}, {"a"}, {"X", "."});
    auto basis = luxenburger_basis(two, Rational(0, 1), Rational(1, 2));
    REQUIRE(basis.rules.size() == 1);
    CHECK(rules_to_tsv(basis, two) == "body\thead\tsupport\tconfidence\n{}\ta\t1.0000\t0.5000\n");
}
