#include "lattica/motifs.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>

#include <json.hpp>

#include "lattica/error.hpp"

namespace lattica {

std::string_view to_string(MotifFamily f) {
    switch (f) {
        case MotifFamily::Nominal: return "nominal";
        case MotifFamily::NominalPlus: return "nominal_plus";
        case MotifFamily::Contranominal: return "contranominal";
        case MotifFamily::Crown: return "crown";
        case MotifFamily::Ordinal: return "ordinal";
        case MotifFamily::Interordinal: return "interordinal";
    }
    return "unknown";
}

MotifFamily parse_motif_family(std::string_view name) {
    for (auto f : all_motif_families())
        if (to_string(f) == name) return f;
    throw InputError("unknown motif family '" + std::string(name) + "'");
}

const std::vector<MotifFamily>& all_motif_families() {
    static const std::vector<MotifFamily> all{MotifFamily::Nominal,  MotifFamily::NominalPlus,
                                              MotifFamily::Contranominal, MotifFamily::Crown,
                                              MotifFamily::Ordinal,  MotifFamily::Interordinal};
    return all;
}

namespace {

std::vector<std::size_t> checked_members(const FormalContext& ctx, const AttributeSet& n, std::size_t min_size) {
    if (n.size() != ctx.attribute_count()) throw InputError("attribute set does not match the context");
    auto ns = n.indices();
    if (ns.size() < min_size)
        throw InputError("motif predicate needs at least " + std::to_string(min_size) + " attributes");
    return ns;
}

AttributeSet make_set(std::size_t nm, const std::vector<std::size_t>& items) {
    AttributeSet s(nm);
    for (auto i : items) s.set(i);
    return s;
}

}  // namespace

NominalCheck is_nominal(const FormalContext& ctx, const AttributeSet& n, bool with_plus) {
    auto ns = checked_members(ctx, n, 2);
    NominalCheck r;
    const ObjectSet common = ctx.extent_of(ns[0]) & ctx.extent_of(ns[1]);
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const auto& ei = ctx.extent_of(ns[i]);
        for (std::size_t j = i + 1; j < ns.size(); ++j) {
            const auto& ej = ctx.extent_of(ns[j]);
            if (ei.is_subset_of(ej) || ej.is_subset_of(ei)) return r;
            if ((ei & ej) != common) return r;
        }
    }
    auto all = ctx.attribute_derive(n);
    if (all.any()) r.plus_witness = all.find_first();
    r.ok = !with_plus || r.plus_witness.has_value();
    return r;
}

ContranominalCheck is_contranominal(const FormalContext& ctx, const AttributeSet& n) {
    auto ns = checked_members(ctx, n, 2);
    ContranominalCheck r;
    for (auto m : ns) {
        AttributeSet rest = n;
        rest.reset(m);
        ObjectSet cand = ctx.attribute_derive(rest) - ctx.extent_of(m);
        if (cand.none()) {
            r.witnesses.clear();
            return r;
        }
        r.witnesses.push_back(cand.find_first());
    }
    r.ok = true;
    return r;
}

OrdinalCheck is_ordinal(const FormalContext& ctx, const AttributeSet& n) {
    auto ns = checked_members(ctx, n, 2);
    OrdinalCheck r;
    std::stable_sort(ns.begin(), ns.end(), [&](std::size_t a, std::size_t b) {
        return ctx.extent_of(a).count() > ctx.extent_of(b).count();
    });
    for (std::size_t i = 0; i + 1 < ns.size(); ++i)
        if (!ctx.extent_of(ns[i + 1]).is_proper_subset_of(ctx.extent_of(ns[i]))) return r;
    r.ok = true;
    r.chain = std::move(ns);
    return r;
}

InterordinalCheck is_interordinal(const FormalContext& ctx, const AttributeSet& n) {
    auto ns = checked_members(ctx, n, 2);
    InterordinalCheck r;
    if (ns.size() < 4 || ns.size() % 2 != 0) return r;
    const std::size_t k = ns.size() / 2;
    auto ext = [&](std::size_t m) -> const ObjectSet& { return ctx.extent_of(m); };

    // exactly one pair with equal extents; that extent is the largest one
    std::optional<std::pair<std::size_t, std::size_t>> tpair;
    for (std::size_t i = 0; i < ns.size(); ++i)
        for (std::size_t j = i + 1; j < ns.size(); ++j)
            if (ext(ns[i]) == ext(ns[j])) {
                if (tpair) return r;
                tpair = {ns[i], ns[j]};
            }
    if (!tpair) return r;
    const ObjectSet& top = ext(tpair->first);
    std::vector<std::size_t> rest;
    for (auto m : ns) {
        if (m == tpair->first || m == tpair->second) continue;
        if (!ext(m).is_proper_subset_of(top)) return r;
        rest.push_back(m);
    }

    // the remaining attributes form two mutually incomparable chains of length k-1
    auto comparable = [&](std::size_t a, std::size_t b) {
        return ext(a).is_subset_of(ext(b)) || ext(b).is_subset_of(ext(a));
    };
    std::vector<std::size_t> a_side{rest[0]}, b_side;
    for (std::size_t i = 1; i < rest.size(); ++i)
        (comparable(rest[0], rest[i]) ? a_side : b_side).push_back(rest[i]);
    if (a_side.size() != k - 1 || b_side.size() != k - 1) return r;
    for (auto a : a_side) {
        for (auto a2 : a_side)
            if (!comparable(a, a2)) return r;
        for (auto b : b_side)
            if (comparable(a, b)) return r;
    }
    for (auto b : b_side)
        for (auto b2 : b_side)
            if (!comparable(b, b2)) return r;

    // le[j] = "<= j+1" with growing extents, ge[i] = ">= i+1" with shrinking extents
    auto by_size = [&](std::size_t a, std::size_t b) { return ext(a).count() < ext(b).count(); };
    std::sort(a_side.begin(), a_side.end(), by_size);
    std::sort(b_side.begin(), b_side.end(), by_size);
    std::vector<std::size_t> le = a_side;
    le.push_back(tpair->first);
    std::vector<std::size_t> ge{tpair->second};
    ge.insert(ge.end(), b_side.rbegin(), b_side.rend());

    const std::size_t nm = ctx.attribute_count();
    auto interval = [&](std::size_t i, std::size_t j) {  // 0-based i <= j
        AttributeSet s(nm);
        for (std::size_t t = j; t < k; ++t) s.set(le[t]);
        for (std::size_t t = 0; t <= i; ++t) s.set(ge[t]);
        return s;
    };
    std::vector<bool> point(k, false);
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        AttributeSet s = ctx.intent_of(g) & n;
        if (s.none() || s == n) continue;
        // largest i with ">= i" present and smallest j with "<= j" present determine the interval
        std::size_t i = k, j = k;
        for (std::size_t t = 0; t < k; ++t)
            if (s.test(ge[t])) i = t;
        for (std::size_t t = k; t-- > 0;)
            if (s.test(le[t])) j = t;
        if (i == k || j == k || i > j || s != interval(i, j)) return r;
        if (i == j) point[i] = true;
    }
    if (std::find(point.begin(), point.end(), false) != point.end()) return r;
    r.ok = true;
    r.chain_a = std::move(le);
    r.chain_b = std::move(ge);
    return r;
}

CrownCheck is_crown(const FormalContext& ctx, const AttributeSet& n) {
    auto ns = checked_members(ctx, n, 3);
    CrownCheck r;
    if (ns.size() < 4) return r;
    const std::size_t nm = ctx.attribute_count();
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_obj;
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        AttributeSet s = ctx.intent_of(g) & n;
        auto c = s.count();
        if (c >= 3) return r;
        if (c == 2) {
            auto a = s.find_first();
            auto b = s.find_next(a + 1);
            edge_obj.emplace(std::make_pair(a, b), g);
        }
    }
    if (edge_obj.size() != ns.size()) return r;
    std::vector<std::vector<std::size_t>> adj(nm);
    for (const auto& [e, g] : edge_obj) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    for (auto m : ns)
        if (adj[m].size() != 2) return r;
    // walk the cycle from the smallest attribute towards its smaller neighbour
    std::vector<std::size_t> cycle{ns[0]};
    std::size_t prev = ns[0], cur = std::min(adj[ns[0]][0], adj[ns[0]][1]);
    while (cur != ns[0]) {
        cycle.push_back(cur);
        std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
    }
    if (cycle.size() != ns.size()) return r;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        auto a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        r.cycle_objects.push_back(edge_obj.at({std::min(a, b), std::max(a, b)}));
    }
    r.ok = true;
    r.cycle = std::move(cycle);
    return r;
}

bool satisfies(const FormalContext& ctx, const AttributeSet& n, MotifFamily family) {
    switch (family) {
        case MotifFamily::Nominal: return is_nominal(ctx, n, false).ok;
        case MotifFamily::NominalPlus: return is_nominal(ctx, n, true).ok;
        case MotifFamily::Contranominal: return is_contranominal(ctx, n).ok;
        case MotifFamily::Crown: return is_crown(ctx, n).ok;
        case MotifFamily::Ordinal: return is_ordinal(ctx, n).ok;
        case MotifFamily::Interordinal: return is_interordinal(ctx, n).ok;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Maximal motif search

namespace {

class Budget {
public:
    explicit Budget(std::size_t limit) : limit_(limit) {}
    void tick() {
        if (++used_ > limit_)
            throw CeilingError("motif search exceeded " + std::to_string(limit_) + " search nodes");
    }

private:
    std::size_t limit_;
    std::size_t used_ = 0;
};

std::vector<AttributeSet> inclusion_maximal(std::vector<AttributeSet> sets) {
    std::sort(sets.begin(), sets.end(), lectic_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<AttributeSet> out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < sets.size() && !dominated; ++j)
            dominated = j != i && sets[i].is_proper_subset_of(sets[j]);
        if (!dominated) out.push_back(sets[i]);
    }
    return out;
}

// Families closed under taking subsets of size >= 2.
std::vector<AttributeSet> hereditary_maximal(const FormalContext& ctx, MotifFamily family, Budget& budget) {
    const std::size_t nm = ctx.attribute_count();
    std::vector<std::vector<bool>> pair_ok(nm, std::vector<bool>(nm, false));
    for (std::size_t a = 0; a < nm; ++a)
        for (std::size_t b = a + 1; b < nm; ++b) {
            budget.tick();
            pair_ok[a][b] = pair_ok[b][a] = satisfies(ctx, make_set(nm, {a, b}), family);
        }

    std::vector<AttributeSet> found;
    std::vector<std::size_t> cur;
    AttributeSet cur_set(nm);
    auto compatible = [&](std::size_t m) {
        return std::all_of(cur.begin(), cur.end(), [&](std::size_t c) { return pair_ok[c][m]; });
    };
    std::function<void(std::size_t)> dfs = [&](std::size_t from) {
        budget.tick();
        if (cur.size() >= 2) {
            bool maximal = true;
            for (std::size_t m = 0; m < nm && maximal; ++m) {
                if (cur_set.test(m) || !compatible(m)) continue;
                AttributeSet ext = cur_set;
                ext.set(m);
                if (satisfies(ctx, ext, family)) maximal = false;
            }
            if (maximal) found.push_back(cur_set);
        }
        for (std::size_t m = from; m < nm; ++m) {
            if (!compatible(m)) continue;
            cur_set.set(m);
            if (cur.size() < 1 || satisfies(ctx, cur_set, family)) {
                cur.push_back(m);
                dfs(m + 1);
                cur.pop_back();
            }
            cur_set.reset(m);
        }
    };
    dfs(0);
    std::sort(found.begin(), found.end(), lectic_less);
    return found;
}

std::vector<AttributeSet> crown_maximal(const FormalContext& ctx, Budget& budget) {
    const std::size_t nm = ctx.attribute_count();
    const std::size_t ng = ctx.object_count();
    std::vector<AttributeSet> found;
    std::vector<std::size_t> path;
    AttributeSet path_set(nm);
    std::vector<std::size_t> pos(nm, 0);

    // Is path + v still a valid open path (with {path[0], v} allowed as the closing pair)?
    // Returns whether {last, v} is realized exactly and whether {path[0], v} is.
    auto extend_ok = [&](std::size_t v, bool& closes) {
        const std::size_t last = path.back();
        AttributeSet next = path_set;
        next.set(v);
        bool realized = false;
        closes = false;
        pos[v] = path.size();
        for (std::size_t g = 0; g < ng; ++g) {
            AttributeSet s = ctx.intent_of(g) & next;
            auto c = s.count();
            if (c < 2) continue;
            if (c > 2) return false;
            auto a = s.find_first();
            auto b = s.find_next(a + 1);
            auto pa = pos[a], pb = pos[b];
            if (pa > pb) std::swap(pa, pb);
            if (pb == pa + 1) {
                if (pb == path.size() && (a == v || b == v) && (a == last || b == last)) realized = true;
                continue;
            }
            if (pa == 0 && pb == path.size()) {
                closes = true;
                continue;
            }
            return false;
        }
        return realized;
    };

    std::function<void()> dfs = [&]() {
        budget.tick();
        const std::size_t start = path.front();
        for (std::size_t v = start + 1; v < nm; ++v) {
            if (path_set.test(v)) continue;
            bool closes = false;
            if (!extend_ok(v, closes)) continue;
            path.push_back(v);
            path_set.set(v);
            if (closes && path.size() >= 4 && path[1] < path.back()) found.push_back(path_set);
            // a closing pair becomes a chord once the path grows, so stop here
            if (!closes) dfs();
            path_set.reset(v);
            path.pop_back();
        }
    };
    for (std::size_t s = 0; s < nm; ++s) {
        path = {s};
        path_set.clear();
        path_set.set(s);
        pos[s] = 0;
        dfs();
    }
    return inclusion_maximal(std::move(found));
}

std::vector<AttributeSet> interordinal_maximal(const FormalContext& ctx, Budget& budget) {
    const std::size_t nm = ctx.attribute_count();
    auto ext = [&](std::size_t m) -> const ObjectSet& { return ctx.extent_of(m); };
    std::vector<AttributeSet> found;
    for (std::size_t x = 0; x < nm; ++x) {
        for (std::size_t y = x + 1; y < nm; ++y) {
            if (ext(x) != ext(y) || ext(x).none()) continue;
            std::vector<std::size_t> below;
            for (std::size_t m = 0; m < nm; ++m)
                if (ext(m).is_proper_subset_of(ext(x))) below.push_back(m);
            std::sort(below.begin(), below.end(), [&](std::size_t a, std::size_t b) {
                auto ca = ext(a).count(), cb = ext(b).count();
                return ca != cb ? ca < cb : a < b;
            });
            // strict chains among `below`, built with growing extents
            std::vector<std::vector<std::size_t>> chains;
            std::vector<std::size_t> chain;
            std::function<void(std::size_t)> grow = [&](std::size_t from) {
                budget.tick();
                if (!chain.empty()) chains.push_back(chain);
                for (std::size_t i = from; i < below.size(); ++i) {
                    auto m = below[i];
                    if (!chain.empty() && !ext(chain.back()).is_proper_subset_of(ext(m))) continue;
                    chain.push_back(m);
                    grow(i + 1);
                    chain.pop_back();
                }
            };
            grow(0);
            for (std::size_t i = 0; i < chains.size(); ++i) {
                for (std::size_t j = i + 1; j < chains.size(); ++j) {
                    if (chains[i].size() != chains[j].size()) continue;
                    budget.tick();
                    AttributeSet s = make_set(nm, chains[i]);
                    AttributeSet t = make_set(nm, chains[j]);
                    if (s.intersects(t)) continue;
                    s |= t;
                    s.set(x);
                    s.set(y);
                    if (is_interordinal(ctx, s).ok) found.push_back(std::move(s));
                }
            }
        }
    }
    return inclusion_maximal(std::move(found));
}

}  // namespace

std::vector<AttributeSet> maximal_motifs(const FormalContext& ctx, MotifFamily family,
                                         const MotifSearchOptions& opts) {
    if (ctx.attribute_count() > opts.max_attributes)
        throw CeilingError("motif search limited to " + std::to_string(opts.max_attributes) + " attributes, context has " +
                           std::to_string(ctx.attribute_count()));
    Budget budget(opts.max_search_nodes);
    switch (family) {
        case MotifFamily::Crown: return crown_maximal(ctx, budget);
        case MotifFamily::Interordinal: return interordinal_maximal(ctx, budget);
        default: return hereditary_maximal(ctx, family, budget);
    }
}

std::vector<std::vector<std::size_t>> duplicate_attributes(const FormalContext& ctx) {
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> groups;
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) groups[ctx.extent_of(m).indices()].push_back(m);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [e, ms] : groups)
        if (ms.size() >= 2) out.push_back(std::move(ms));
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::size_t> contranominal_insertion_distance(const FormalContext& ctx, const AttributeSet& n) {
    auto ns = checked_members(ctx, n, 2);
    const std::size_t k = ns.size(), ng = ctx.object_count();
    if (ng < k) return std::nullopt;
    using cost_t = long long;
    const cost_t inf = std::numeric_limits<cost_t>::max() / 4;
    const cost_t forbidden = static_cast<cost_t>(ctx.attribute_count() + 1) * static_cast<cost_t>(k + 1);
    // cost[i][g]: insertions making g witness attribute ns[i]; g must not have ns[i]
    auto cost = [&](std::size_t i, std::size_t g) -> cost_t {
        if (ctx.incident(g, ns[i])) return forbidden;
        AttributeSet missing = n - ctx.intent_of(g);
        return static_cast<cost_t>(missing.count() - 1);
    };
    // Hungarian algorithm (rows = attributes, columns = objects), 1-based potentials
    std::vector<cost_t> u(k + 1, 0), v(ng + 1, 0);
    std::vector<std::size_t> p(ng + 1, 0), way(ng + 1, 0);
    for (std::size_t i = 1; i <= k; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<cost_t> minv(ng + 1, inf);
        std::vector<bool> used(ng + 1, false);
        do {
            used[j0] = true;
            std::size_t i0 = p[j0], j1 = 0;
            cost_t delta = inf;
            for (std::size_t j = 1; j <= ng; ++j) {
                if (used[j]) continue;
                cost_t cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= ng; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    cost_t total = 0;
    for (std::size_t j = 1; j <= ng; ++j) {
        if (p[j] == 0) continue;
        cost_t c = cost(p[j] - 1, j - 1);
        if (c == forbidden) return std::nullopt;
        total += c;
    }
    return static_cast<std::size_t>(total);
}

// ---------------------------------------------------------------------------
// Geometric structure

namespace {

std::vector<std::vector<std::size_t>> chain_annotations(const FormalContext& ctx,
                                                        const std::vector<std::size_t>& chain_desc) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < chain_desc.size(); ++i) {
        ObjectSet s = ctx.extent_of(chain_desc[i]);
        if (i + 1 < chain_desc.size()) s -= ctx.extent_of(chain_desc[i + 1]);
        out.push_back(s.indices());
    }
    return out;
}

}  // namespace

GeometricStructure geometric_structure(const FormalContext& ctx, const std::vector<MotifFamily>& families,
                                       const MotifSearchOptions& opts) {
    if (families.empty()) throw InputError("geometric structure needs at least one motif family");
    GeometricStructure gs;
    gs.attributes = ctx.attributes();
    gs.objects = ctx.objects();
    for (auto f : families)
        if (std::find(gs.families.begin(), gs.families.end(), f) == gs.families.end()) gs.families.push_back(f);

    for (auto f : gs.families) {
        auto sets = maximal_motifs(ctx, f, opts);
        for (const auto& s : sets) {
            switch (f) {
                case MotifFamily::Nominal:
                case MotifFamily::NominalPlus: {
                    auto chk = is_nominal(ctx, s, f == MotifFamily::NominalPlus);
                    NominalMotif nm{s.indices(), chk.plus_witness, !chk.plus_witness.has_value()};
                    (f == MotifFamily::Nominal ? gs.nominal : gs.nominal_plus).push_back(std::move(nm));
                    break;
                }
                case MotifFamily::Contranominal: {
                    ContranominalMotif cm{s.indices(), {}};
                    for (std::size_t i = 0; i < cm.nodes.size(); ++i)
                        for (std::size_t j = i + 1; j < cm.nodes.size(); ++j) {
                            auto a = cm.nodes[i], b = cm.nodes[j];
                            cm.edge_labels.push_back({a, b, (ctx.extent_of(a) & ctx.extent_of(b)).indices()});
                        }
                    gs.contranominal.push_back(std::move(cm));
                    break;
                }
                case MotifFamily::Crown: {
                    auto chk = is_crown(ctx, s);
                    gs.crown.push_back({chk.cycle, chk.cycle_objects});
                    break;
                }
                case MotifFamily::Ordinal: {
                    auto chk = is_ordinal(ctx, s);
                    gs.ordinal.push_back({chk.chain, chain_annotations(ctx, chk.chain)});
                    break;
                }
                case MotifFamily::Interordinal: {
                    auto chk = is_interordinal(ctx, s);
                    InterordinalMotif im{chk.chain_a, chk.chain_b, {}, {}};
                    std::vector<std::size_t> a_desc(chk.chain_a.rbegin(), chk.chain_a.rend());
                    auto ann = chain_annotations(ctx, a_desc);
                    im.annotations_a.assign(ann.rbegin(), ann.rend());
                    im.annotations_b = chain_annotations(ctx, chk.chain_b);
                    gs.interordinal.push_back(std::move(im));
                    break;
                }
            }
        }
    }
    return gs;
}

std::string geometric_structure_to_json(const GeometricStructure& gs) {
    using J = nlohmann::ordered_json;
    auto names = [](const std::vector<std::string>& labels, const std::vector<std::size_t>& ids) {
        J a = J::array();
        for (auto i : ids) a.push_back(labels[i]);
        return a;
    };
    auto attrs = [&](const std::vector<std::size_t>& ids) { return names(gs.attributes, ids); };
    auto objs = [&](const std::vector<std::size_t>& ids) { return names(gs.objects, ids); };
    auto annotations = [&](const std::vector<std::size_t>& chain, const std::vector<std::vector<std::size_t>>& ann) {
        J o = J::object();
        for (std::size_t i = 0; i < chain.size(); ++i) o[gs.attributes[chain[i]]] = objs(ann[i]);
        return o;
    };

    J j;
    j["attributes"] = gs.attributes;
    J fam = J::object();
    auto nominal_json = [&](const std::vector<NominalMotif>& list) {
        J arr = J::array();
        for (const auto& m : list) {
            J e;
            e["nodes"] = attrs(m.nodes);
            e["plus_witness"] = m.plus_witness ? J(gs.objects[*m.plus_witness]) : J(nullptr);
            e["no_edge"] = m.no_edge;
            arr.push_back(std::move(e));
        }
        return arr;
    };
    for (auto f : gs.families) {
        J arr = J::array();
        switch (f) {
            case MotifFamily::Nominal: arr = nominal_json(gs.nominal); break;
            case MotifFamily::NominalPlus: arr = nominal_json(gs.nominal_plus); break;
            case MotifFamily::Contranominal:
                for (const auto& m : gs.contranominal) {
                    J e;
                    e["nodes"] = attrs(m.nodes);
                    J labels = J::object();
                    for (const auto& l : m.edge_labels)
                        labels[gs.attributes[l.a] + "|" + gs.attributes[l.b]] = objs(l.objects);
                    e["edge_labels"] = std::move(labels);
                    arr.push_back(std::move(e));
                }
                break;
            case MotifFamily::Crown:
                for (const auto& m : gs.crown) {
                    J e;
                    e["cycle"] = attrs(m.cycle);
                    e["cycle_objects"] = objs(m.cycle_objects);
                    arr.push_back(std::move(e));
                }
                break;
            case MotifFamily::Ordinal:
                for (const auto& m : gs.ordinal) {
                    J e;
                    e["chain"] = attrs(m.chain);
                    e["object_annotations"] = annotations(m.chain, m.annotations);
                    arr.push_back(std::move(e));
                }
                break;
            case MotifFamily::Interordinal:
                for (const auto& m : gs.interordinal) {
                    J e;
                    e["chain_a"] = attrs(m.chain_a);
                    e["chain_b"] = attrs(m.chain_b);
                    e["object_annotations_a"] = annotations(m.chain_a, m.annotations_a);
                    e["object_annotations_b"] = annotations(m.chain_b, m.annotations_b);
                    arr.push_back(std::move(e));
                }
                break;
        }
        fam[std::string(to_string(f))] = std::move(arr);
    }
    j["families"] = std::move(fam);
    return j.dump(2) + "\n";
}

}  // namespace lattica
