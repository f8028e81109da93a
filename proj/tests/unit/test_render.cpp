#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "lattica/error.hpp"
#include "lattica/lattice.hpp"
#include "lattica/motifs.hpp"
#include "lattica/render.hpp"

using namespace lattica;

namespace {
std::set<double> levels(const Scene& s) {
    std::set<double> ys;
    for (const auto& n : s.nodes) ys.insert(n.y);
    return ys;
}

std::vector<std::size_t> group(const Scene& s, const std::string& g) {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < s.nodes.size(); ++i)
        if (s.nodes[i].group == g) v.push_back(i);
    return v;
}
}  // namespace

TEST_CASE("chain of three concepts") {
    auto ctx = fixtures::chain3();
    auto s = draw_lattice(enumerate_concepts(ctx), ctx);
    CHECK(s.nodes.size() == 3);
    CHECK(s.edges.size() == 2);
    CHECK(levels(s).size() == 3);
}

TEST_CASE("B3 Hasse diagram") {
    auto b3 = fixtures::b3();
    auto l = enumerate_concepts(b3);
    auto s = draw_lattice(l, b3);
    CHECK(s.nodes.size() == 8);
    CHECK(s.edges.size() == 12);
    CHECK(levels(s).size() == 4);
    std::set<std::string> coatom_labels;
    for (auto c : l.lower_covers(l.top())) coatom_labels.insert(s.nodes[c].label_above);
    CHECK(coatom_labels == std::set<std::string>{"r", "g", "b"});
    CHECK(s.nodes[l.top()].label_below == "3");
    for (const auto& e : s.edges) CHECK(s.nodes[e.from].y < s.nodes[e.to].y);

    LatticeDrawOptions omit;
    omit.omit_bottom = true;
    CHECK(draw_lattice(l, b3, omit).nodes.size() == 7);
    LatticeDrawOptions tiny;
    tiny.max_nodes = 4;
    CHECK_THROWS_AS(draw_lattice(l, b3, tiny), CeilingError);
}

TEST_CASE("tulip layout is crossing-free") {
    for (auto ctx : {fixtures::b3(), fixtures::b4()}) {
        LatticeDrawOptions o;
        o.tulip = true;
        auto s = draw_lattice(enumerate_concepts(ctx), ctx, o);
        auto t = group(s, "tulip");
        CHECK(t.size() == (1u << ctx.attribute_count()) - 2);
        CHECK(edge_crossings(s, t) == 0);
    }
    auto b4 = fixtures::b4();
    LatticeDrawOptions bad;
    bad.tulip = true;
    bad.tulip_attributes = {"r", "zz"};
    CHECK_THROWS_AS(draw_lattice(enumerate_concepts(b4), b4, bad), InputError);
}

TEST_CASE("labels and abbreviations") {
    auto lm = parse_label_map("# comment\nKernel Methods = KM\n\nNeural Networks= NN\n");
    CHECK(lm.at("Kernel Methods") == "KM");
    CHECK(lm.at("Neural Networks") == "NN");
    CHECK_THROWS_AS(parse_label_map("no separator\n"), ParseError);
    auto b3 = fixtures::b3();
    LatticeDrawOptions o;
    o.labels = {{"r", "red"}};
    auto s = draw_lattice(enumerate_concepts(b3), b3, o);
    bool found = false;
    for (const auto& n : s.nodes) found |= n.label_above == "red";
    CHECK(found);
}

TEST_CASE("B3 geometric drawing") {
    auto b3 = fixtures::b3();
    auto gs = geometric_structure(b3, {MotifFamily::Contranominal});
    auto s = draw_geometric(gs);
    CHECK(s.nodes.size() == 3);
    REQUIRE(s.polygons.size() == 1);
    CHECK(s.polygons[0].style == "contranominal");
    CHECK(s.polygons[0].nodes.size() == 3);
    std::multiset<std::string> labels;
    for (const auto& e : s.edges) {
        CHECK(e.style == "contranominal");
        labels.insert(e.label);
    }
    CHECK(labels == std::multiset<std::string>{"c", "p", "y"});
    auto svg = emit_svg(s);
    CHECK(svg == emit_svg(draw_geometric(geometric_structure(b3, {MotifFamily::Contranominal}))));
    CHECK(svg.find("<polygon") != std::string::npos);
    GeometricDrawOptions other;
    other.seed = 2;
    CHECK(emit_svg(draw_geometric(gs, other)).size() > 0);
}

TEST_CASE("isolated attributes and ordinal annotations") {
    // no object has "lone", so it takes part in no contranominal scale
    auto ctx = FormalContext::from_rows({"c", "p", "y"}, {"r", "g", "b", "lone"}, {".XX.", "X.X.", "XX.."});
    auto s = draw_geometric(geometric_structure(ctx, {MotifFamily::Contranominal}));
    CHECK(s.nodes.size() == 4);
    CHECK(s.edges.size() == 3);
    for (const auto& e : s.edges) {
        CHECK(s.nodes[e.from].id != "a3");
        CHECK(s.nodes[e.to].id != "a3");
    }

    auto o4 = fixtures::o4();
    auto so = draw_geometric(geometric_structure(o4, {MotifFamily::Ordinal}));
    std::set<std::string> annotations;
    for (const auto& n : so.nodes) {
        CHECK(n.style == "ordinal");
        annotations.insert(n.label_below);
    }
    CHECK(annotations == std::set<std::string>{"1", "2", "3", "4"});
}

TEST_CASE("SVG and DOT output") {
    auto b3 = fixtures::b3();
    auto s = draw_lattice(enumerate_concepts(b3), b3);
    auto svg = emit_svg(s, {400, 300});
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("width=\"400.00\"") != std::string::npos);
    CHECK(svg == emit_svg(draw_lattice(enumerate_concepts(b3), b3), {400, 300}));
    auto dot = emit_dot(s);
    CHECK(dot.rfind("digraph hasse", 0) == 0);
    CHECK(dot.find("pos=") != std::string::npos);
    auto tricky = FormalContext::from_rows({"1"}, {"a<b&\"c\""}, {"X"});
    auto ts = emit_svg(draw_lattice(enumerate_concepts(tricky), tricky));
    CHECK(ts.find("a&lt;b&amp;&quot;c&quot;") != std::string::npos);
}
