#include <doctest.h>

#include <cmath>

#include "lattica/corpus.hpp"
#include "lattica/error.hpp"
#include "lattica/scaling.hpp"

using namespace lattica;

namespace {
Corpus four_docs() {
    return Corpus({{"d1", {"a", "a", "b"}, 2001},
                   {"d2", {"b", "c"}, 2002},
                   {"d3", {"b"}, std::nullopt},
                   {"d4", {"b", "c", "c"}, 2004}});
}
}  // namespace

TEST_CASE("bag of words") {
    Corpus c({{"x", {"a", "a", "b"}, {}}, {"y", {"c"}, {}}, {"z", {}, {}}, {"w", {"b", "a", "a"}, {}}});
    CHECK(c.vocabulary() == std::vector<std::string>{"a", "b", "c"});
    CHECK(c.bow("x") == std::vector<std::size_t>{2, 1, 0});
    CHECK(c.bow("z") == std::vector<std::size_t>{0, 0, 0});
    CHECK(c.bow("x") == c.bow("w"));
    CHECK_THROWS_AS(c.bow("nope"), InputError);
}

TEST_CASE("term frequency") {
    Corpus c({{"x", {"a", "a", "b"}, {}}, {"s", {"c"}, {}}, {"z", {}, {}}});
    CHECK(c.tf("a", "x") == doctest::Approx(2.0 / 3.0));
    CHECK(c.tf("c", "s") == 1.0);
    CHECK(c.tf("c", "x") == 0.0);
    CHECK_THROWS_AS(c.tf("a", "z"), InputError);
    double sum = 0;
    for (const auto& t : c.vocabulary()) sum += c.tf(t, "x");
    CHECK(sum == doctest::Approx(1.0));
}

TEST_CASE("inverse document frequency") {
    auto c = four_docs();
    CHECK(c.idf("a") == doctest::Approx(std::log(4.0)));
    CHECK(c.idf("b") == 0.0);
    CHECK(c.idf("c") == doctest::Approx(std::log(2.0)));
    CHECK_THROWS_AS(c.idf("zz"), InputError);
    Corpus two({{"1", {"q"}, {}}, {"2", {"q"}, {}}});
    CHECK(two.idf("q") == 0.0);
}

TEST_CASE("tf-idf") {
    auto c = four_docs();
    auto v = c.tfidf("d2");
    REQUIRE(v.size() == 3);
    CHECK(v[0] == 0.0);
    CHECK(v[1] == 0.0);  // b occurs everywhere
    CHECK(v[2] == doctest::Approx(0.5 * std::log(2.0)));
    auto m = c.tfidf_matrix();
    CHECK(m.rows() == 4);
    CHECK(m.cols() == 3);
    CHECK(m.at(1, 2) == doctest::Approx(0.5 * std::log(2.0)));
    CHECK(m.at(0, 0) == doctest::Approx(2.0 / 3.0 * std::log(4.0)));
}

TEST_CASE("corpus construction and JSON lines") {
    CHECK_THROWS_AS(Corpus({{"x", {}, {}}, {"x", {}, {}}}), InputError);
    auto c = parse_corpus_jsonl("{\"id\":\"a\",\"tokens\":[\"x\",\"y\"],\"year\":1999}\n\n{\"id\":\"b\",\"tokens\":[]}\n");
    CHECK(c.documents().size() == 2);
    CHECK(c.documents()[0].year == 1999);
    CHECK_FALSE(c.documents()[1].year.has_value());
    try {
        parse_corpus_jsonl("{\"id\":\"a\",\"tokens\":[]}\n{\"id\":1}\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_corpus_jsonl("{not json\n"), ParseError);
}
