#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "lattica/error.hpp"
#include "lattica/motifs.hpp"
#include "oracle.hpp"

using namespace lattica;

namespace {
using Idx = std::vector<std::size_t>;

oracle::Family to_oracle(MotifFamily f) {
    switch (f) {
        case MotifFamily::Nominal: return oracle::Family::Nominal;
        case MotifFamily::NominalPlus: return oracle::Family::NominalPlus;
        case MotifFamily::Contranominal: return oracle::Family::Contranominal;
        case MotifFamily::Crown: return oracle::Family::Crown;
        case MotifFamily::Ordinal: return oracle::Family::Ordinal;
        case MotifFamily::Interordinal: return oracle::Family::Interordinal;
    }
    return oracle::Family::Nominal;
}

std::size_t min_size(MotifFamily f) { return f == MotifFamily::Crown ? 3 : 2; }

Idx members(oracle::Mask b, std::size_t nm) {
    Idx v;
    for (std::size_t m = 0; m < nm; ++m)
        if (b >> m & 1u) v.push_back(m);
    return v;
}

// Inclusion-maximal subsets satisfying the oracle, by exhaustive search.
std::set<oracle::Mask> brute_maximal(const FormalContext& ctx, MotifFamily f) {
    const std::size_t nm = ctx.attribute_count();
    std::vector<oracle::Mask> good;
    for (oracle::Mask b = 1; b <= oracle::full(nm); ++b) {
        auto n = members(b, nm);
        if (n.size() >= min_size(f) && oracle::is_type(ctx, n, to_oracle(f))) good.push_back(b);
    }
    std::set<oracle::Mask> out;
    for (auto b : good)
        if (std::none_of(good.begin(), good.end(), [&](oracle::Mask c) { return c != b && (b & c) == b; }))
            out.insert(b);
    return out;
}

std::vector<std::string> names(const FormalContext& ctx, const Idx& ix, bool objects) {
    std::vector<std::string> v;
    for (auto i : ix) v.push_back(objects ? ctx.objects()[i] : ctx.attributes()[i]);
    return v;
}

using V = std::vector<std::string>;

// Fewest insertions turning N contranominal, over every injective witness choice.
std::optional<std::size_t> brute_insertions(const FormalContext& ctx, const Idx& n) {
    const auto p = oracle::plain(ctx);
    oracle::Mask nm = 0;
    for (auto m : n) nm |= oracle::Mask{1} << m;
    std::optional<std::size_t> best;
    Idx objs(ctx.object_count());
    std::iota(objs.begin(), objs.end(), 0);
    std::function<void(std::size_t, std::size_t, std::vector<bool>&)> rec = [&](std::size_t i, std::size_t acc,
                                                                                std::vector<bool>& used) {
        if (i == n.size()) {
            if (!best || acc < *best) best = acc;
            return;
        }
        for (auto g : objs) {
            if (used[g] || (p.rows[g] >> n[i] & 1u)) continue;
            oracle::Mask want = nm & ~(oracle::Mask{1} << n[i]);
            used[g] = true;
            rec(i + 1, acc + static_cast<std::size_t>(__builtin_popcount(want & ~p.rows[g])), used);
            used[g] = false;
        }
    };
    std::vector<bool> used(ctx.object_count(), false);
    rec(0, 0, used);
    return best;
}
}  // namespace

TEST_CASE("family names") {
    for (auto f : all_motif_families()) CHECK(parse_motif_family(to_string(f)) == f);
    CHECK(to_string(MotifFamily::NominalPlus) == "nominal_plus");
    CHECK_THROWS_AS(parse_motif_family("star"), InputError);
}

TEST_CASE("nominal") {
    auto n3 = fixtures::n3();
    CHECK(is_nominal(n3, n3.all_attributes(), false).ok);
    CHECK_FALSE(is_nominal(n3, n3.all_attributes(), true).ok);
    auto plus = fixtures::n3(true);
    auto chk = is_nominal(plus, plus.all_attributes(), true);
    CHECK(chk.ok);
    REQUIRE(chk.plus_witness.has_value());
    CHECK(plus.objects()[*chk.plus_witness] == "+");
    // Two attributes of B3 form a 2-element nominal (equivalently contranominal) scale.
    auto b3 = fixtures::b3();
    CHECK(is_nominal(b3, b3.attributes_named({"r", "g"}), false).ok);
    CHECK(oracle::is_type(b3, {0, 1}, oracle::Family::Nominal));
    CHECK_FALSE(is_nominal(b3, b3.all_attributes(), false).ok);
    CHECK_THROWS_AS(is_nominal(b3, b3.attributes_named({"r"}), false), InputError);
}

TEST_CASE("contranominal") {
    auto b3 = fixtures::b3();
    auto chk = is_contranominal(b3, b3.all_attributes());
    CHECK(chk.ok);
    CHECK(names(b3, chk.witnesses, true) == V{"c", "p", "y"});
    auto b4 = fixtures::b4();
    CHECK(is_contranominal(b4, b4.all_attributes()).ok);
    auto full = FormalContext::from_rows({"1", "2"}, {"x", "y", "z"}, {"XXX", "XXX"});
    CHECK_FALSE(is_contranominal(full, full.all_attributes()).ok);
}

TEST_CASE("ordinal") {
    auto o4 = fixtures::o4();
    auto chk = is_ordinal(o4, o4.all_attributes());
    CHECK(chk.ok);
    CHECK(names(o4, chk.chain, false) == V{"a", "b", "c", "d"});
    auto dup = FormalContext::from_rows({"1", "2"}, {"x", "y"}, {"XX", ".."});
    CHECK_FALSE(is_ordinal(dup, dup.all_attributes()).ok);
    auto b3 = fixtures::b3();
    CHECK_FALSE(is_ordinal(b3, b3.attributes_named({"r", "g"})).ok);
}

TEST_CASE("interordinal") {
    auto i4 = fixtures::i4();
    auto chk = is_interordinal(i4, i4.all_attributes());
    CHECK(chk.ok);
    CHECK(names(i4, chk.chain_a, false) == V{"<=a", "<=b", "<=c", "<=d"});
    CHECK(names(i4, chk.chain_b, false) == V{">=a", ">=b", ">=c", ">=d"});
    auto o4 = fixtures::o4();
    CHECK_FALSE(is_interordinal(o4, o4.all_attributes()).ok);
    CHECK(oracle::is_type(i4, {0, 1, 2, 3, 4, 5, 6, 7}, oracle::Family::Interordinal));
}

TEST_CASE("crown") {
    auto c10 = fixtures::crown(10);
    auto chk = is_crown(c10, c10.all_attributes());
    CHECK(chk.ok);
    CHECK(chk.cycle.size() == 10);
    CHECK(chk.cycle.front() == 0);
    for (std::size_t i = 0; i < 10; ++i) {
        auto g = chk.cycle_objects[i];
        CHECK(c10.incident(g, chk.cycle[i]));
        CHECK(c10.incident(g, chk.cycle[(i + 1) % 10]));
    }
    auto b3 = fixtures::b3();
    CHECK_FALSE(is_crown(b3, b3.all_attributes()).ok);
    CHECK_THROWS_AS(is_crown(b3, b3.attributes_named({"r", "g"})), InputError);
}

TEST_CASE("predicates agree with the lattice-shape oracle") {
    std::mt19937_64 rng(31);
    std::size_t positives = 0;
    for (int t = 0; t < 25; ++t) {
        auto ctx = oracle::random_context(rng, 2 + rng() % 8, 2 + rng() % 6, 0.3 + 0.1 * (rng() % 5));
        const auto nm = ctx.attribute_count();
        for (oracle::Mask b = 1; b <= oracle::full(nm); ++b) {
            auto n = members(b, nm);
            if (n.size() < 2 || n.size() > 5) continue;
            auto s = oracle::to_set(b, nm);
            for (auto f : all_motif_families()) {
                if (n.size() < min_size(f)) continue;
                bool mine = satisfies(ctx, s, f);
                bool ref = oracle::is_type(ctx, n, to_oracle(f));
                positives += mine;
                CHECK_MESSAGE(mine == ref, to_string(f), " on ", emit_cxt(ctx), " N=", b);
            }
        }
    }
    CHECK(positives > 100);
}

TEST_CASE("planted motifs are recognized") {
    std::mt19937_64 rng(37);
    const std::vector<std::pair<MotifFamily, FormalContext>> seeds{
        {MotifFamily::Contranominal, oracle::contranominal_scale(4)},
        {MotifFamily::Nominal, oracle::nominal_scale(4)},
        {MotifFamily::Ordinal, oracle::ordinal_scale(5)},
        {MotifFamily::Crown, oracle::crown_scale(6)},
        {MotifFamily::Interordinal, oracle::interordinal_scale(3)},
    };
    for (const auto& [f, scale] : seeds) {
        // add noise objects that only carry attributes outside the motif
        auto rows = std::vector<std::string>();
        std::vector<std::string> objs, atts = scale.attributes();
        atts.push_back("noise");
        for (std::size_t g = 0; g < scale.object_count(); ++g) {
            std::string r;
            for (std::size_t m = 0; m < scale.attribute_count(); ++m) r += scale.incident(g, m) ? 'X' : '.';
            rows.push_back(r + (rng() % 2 ? "X" : "."));
            objs.push_back(scale.objects()[g]);
        }
        rows.push_back(std::string(scale.attribute_count(), '.') + "X");
        objs.push_back("z");
        auto ctx = FormalContext::from_rows(objs, atts, rows);
        auto n = ctx.all_attributes();
        n.reset(ctx.attribute_index("noise"));
        CHECK_MESSAGE(satisfies(ctx, n, f), to_string(f));
    }
}

TEST_CASE("hereditary families are closed under subsets") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 15; ++t) {
        auto ctx = oracle::random_context(rng, 4 + rng() % 6, 3 + rng() % 4, 0.5);
        for (auto f : {MotifFamily::Nominal, MotifFamily::NominalPlus, MotifFamily::Contranominal,
                       MotifFamily::Ordinal}) {
            for (const auto& s : maximal_motifs(ctx, f)) {
                auto ix = s.indices();
                for (std::size_t drop = 0; drop < ix.size() && ix.size() > 2; ++drop) {
                    auto sub = s;
                    sub.reset(ix[drop]);
                    CHECK(satisfies(ctx, sub, f));
                }
            }
        }
    }
}

TEST_CASE("maximal motifs match subset brute force") {
    auto b4 = fixtures::b4();
    auto mm = maximal_motifs(b4, MotifFamily::Contranominal);
    REQUIRE(mm.size() == 1);
    CHECK(mm[0] == b4.all_attributes());
    auto n3 = fixtures::n3();
    auto nm = maximal_motifs(n3, MotifFamily::Nominal);
    REQUIRE(nm.size() == 1);
    CHECK(nm[0] == n3.all_attributes());

    std::mt19937_64 rng(43);
    for (int t = 0; t < 30; ++t) {
        auto ctx = oracle::random_context(rng, 3 + rng() % 6, 3 + rng() % 5, 0.3 + 0.1 * (rng() % 5));
        for (auto f : all_motif_families()) {
            std::set<oracle::Mask> got;
            for (const auto& s : maximal_motifs(ctx, f)) got.insert(oracle::to_mask(s));
            CHECK_MESSAGE(got == brute_maximal(ctx, f), to_string(f), " on ", emit_cxt(ctx));
        }
    }
}

TEST_CASE("search limits") {
    MotifSearchOptions tight;
    tight.max_attributes = 2;
    CHECK_THROWS_AS(maximal_motifs(fixtures::b3(), MotifFamily::Contranominal, tight), CeilingError);
    MotifSearchOptions nodes;
    nodes.max_search_nodes = 1;
    CHECK_THROWS_AS(maximal_motifs(fixtures::b4(), MotifFamily::Contranominal, nodes), CeilingError);
}

TEST_CASE("diagnostics") {
    auto ctx = FormalContext::from_rows({"1", "2"}, {"x", "y", "z"}, {"X.X", ".X."});
    CHECK(duplicate_attributes(ctx) == std::vector<Idx>{{0, 2}});
    auto b3 = fixtures::b3();
    CHECK(contranominal_insertion_distance(b3, b3.all_attributes()) == std::optional<std::size_t>(0));

    std::mt19937_64 rng(47);
    for (int t = 0; t < 60; ++t) {
        auto c = oracle::random_context(rng, 2 + rng() % 6, 2 + rng() % 5, 0.5);
        for (oracle::Mask b = 1; b <= oracle::full(c.attribute_count()); ++b) {
            auto n = members(b, c.attribute_count());
            if (n.size() < 2 || n.size() > 4) continue;
            auto d = contranominal_insertion_distance(c, oracle::to_set(b, c.attribute_count()));
            CHECK(d == brute_insertions(c, n));
            if (d && *d == 0) CHECK(is_contranominal(c, oracle::to_set(b, c.attribute_count())).ok);
        }
    }
}

TEST_CASE("geometric structure of B3") {
    auto b3 = fixtures::b3();
    auto gs = geometric_structure(b3, {MotifFamily::Contranominal});
    REQUIRE(gs.contranominal.size() == 1);
    const auto& cm = gs.contranominal[0];
    CHECK(cm.nodes == Idx{0, 1, 2});
    REQUIRE(cm.edge_labels.size() == 3);
    std::map<std::string, V> labels;
    for (const auto& e : cm.edge_labels) labels[b3.attributes()[e.a] + b3.attributes()[e.b]] = names(b3, e.objects, true);
    CHECK(labels["rg"] == V{"y"});
    CHECK(labels["rb"] == V{"p"});
    CHECK(labels["gb"] == V{"c"});
    auto json = geometric_structure_to_json(gs);
    CHECK(json.find("\"r|g\"") != std::string::npos);

    auto empty = FormalContext::from_rows({}, {}, {});
    auto ge = geometric_structure(empty, all_motif_families());
    CHECK(ge.contranominal.empty());
    CHECK(ge.nominal.empty());
    CHECK(ge.crown.empty());
    CHECK_THROWS_AS(geometric_structure(b3, {}), InputError);
}

TEST_CASE("ordinal annotations") {
    auto o4 = fixtures::o4();
    auto gs = geometric_structure(o4, {MotifFamily::Ordinal});
    REQUIRE(gs.ordinal.size() == 1);
    const auto& om = gs.ordinal[0];
    CHECK(names(o4, om.chain, false) == V{"a", "b", "c", "d"});
    REQUIRE(om.annotations.size() == 4);
    CHECK(names(o4, om.annotations[0], true) == V{"1"});
    CHECK(names(o4, om.annotations[3], true) == V{"4"});
}

TEST_CASE("geometric structures re-verify on random contexts") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 10; ++t) {
        auto ctx = oracle::random_context(rng, 8, 8, 0.5);
        auto gs = geometric_structure(ctx, all_motif_families());
        auto as_set = [&](const Idx& ix) {
            AttributeSet s(ctx.attribute_count());
            for (auto i : ix) s.set(i);
            return s;
        };
        for (const auto& m : gs.contranominal) CHECK(is_contranominal(ctx, as_set(m.nodes)).ok);
        for (const auto& m : gs.nominal) CHECK(is_nominal(ctx, as_set(m.nodes), false).ok);
        for (const auto& m : gs.nominal_plus) CHECK(is_nominal(ctx, as_set(m.nodes), true).ok);
        for (const auto& m : gs.crown) CHECK(is_crown(ctx, as_set(m.cycle)).ok);
        for (const auto& m : gs.ordinal) CHECK(is_ordinal(ctx, as_set(m.chain)).ok);
        for (const auto& m : gs.interordinal) {
            auto ix = m.chain_a;
            ix.insert(ix.end(), m.chain_b.begin(), m.chain_b.end());
            CHECK(is_interordinal(ctx, as_set(ix)).ok);
        }
        CHECK(gs.contranominal.size() == maximal_motifs(ctx, MotifFamily::Contranominal).size());
    }
}
