#include "lattica/lattice.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>

#include <json.hpp>

#include "lattica/error.hpp"

namespace lattica {

namespace {

constexpr std::size_t max_width_concepts = 20000;

[[noreturn]] void too_large(std::size_t limit) {
    throw CeilingError("lattice too large: more than " + std::to_string(limit) + " concepts");
}

/// NextClosure over attribute sets. Calls `emit(intent)` for each closed set
/// in lectic order.
template <class Emit>
void next_closure(const FormalContext& ctx, std::size_t limit, Emit&& emit) {
    const std::size_t nm = ctx.attribute_count();
    AttributeSet current = ctx.closure(ctx.empty_attributes());
    std::size_t produced = 0;
    while (true) {
        if (++produced > limit) too_large(limit);
        emit(current);
        bool advanced = false;
        for (std::size_t i = nm; i-- > 0;) {
            if (current.test(i)) continue;
            AttributeSet candidate = current;
            candidate.truncate(i).set(i);
            AttributeSet closed = ctx.closure(candidate);
            if (closed.equal_below(current, i)) {
                current = std::move(closed);
                advanced = true;
                break;
            }
        }
        if (!advanced) return;
    }
}

}  // namespace

ConceptLattice::ConceptLattice(std::vector<Concept> concepts, std::size_t objects, std::size_t attributes,
                               bool has_extents)
    : concepts_(std::move(concepts)), objects_(objects), attributes_(attributes), has_extents_(has_extents) {
    build_index();
    build_covers();
}

ConceptLattice::ConceptLattice(std::vector<Concept> concepts, std::size_t objects, std::size_t attributes,
                               bool has_extents, std::vector<std::pair<std::size_t, std::size_t>> covers)
    : concepts_(std::move(concepts)), objects_(objects), attributes_(attributes), has_extents_(has_extents) {
    build_index();
    set_covers(std::move(covers));
}

void ConceptLattice::build_index() {
    by_intent_.clear();
    by_intent_.reserve(concepts_.size());
    for (std::size_t i = 0; i < concepts_.size(); ++i) {
        if (!by_intent_.emplace(concepts_[i].intent, i).second) throw InputError("duplicate concept intent");
    }
    if (concepts_.empty()) return;
    top_ = bottom_ = 0;
    for (std::size_t i = 1; i < concepts_.size(); ++i) {
        if (concepts_[i].intent.count() < concepts_[top_].intent.count()) top_ = i;
        if (concepts_[i].intent.count() > concepts_[bottom_].intent.count()) bottom_ = i;
    }
}

void ConceptLattice::build_covers() {
    // Without the context: lower covers of i are the minimal intents
    // strictly containing intent(i).
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t i = 0; i < concepts_.size(); ++i) {
        const auto& b = concepts_[i].intent;
        std::vector<std::size_t> above_b;
        for (std::size_t j = 0; j < concepts_.size(); ++j)
            if (j != i && b.is_proper_subset_of(concepts_[j].intent)) above_b.push_back(j);
        for (std::size_t j : above_b) {
            bool minimal = std::none_of(above_b.begin(), above_b.end(), [&](std::size_t k) {
                return k != j && concepts_[k].intent.is_proper_subset_of(concepts_[j].intent);
            });
            if (minimal) covers.emplace_back(j, i);
        }
    }
    set_covers(std::move(covers));
}

void ConceptLattice::set_covers(std::vector<std::pair<std::size_t, std::size_t>> covers) {
    covers_ = std::move(covers);
    std::sort(covers_.begin(), covers_.end());
    upper_.assign(concepts_.size(), {});
    lower_.assign(concepts_.size(), {});
    for (const auto& [l, u] : covers_) {
        upper_[l].push_back(u);
        lower_[u].push_back(l);
    }
    for (auto& v : upper_) std::sort(v.begin(), v.end());
    for (auto& v : lower_) std::sort(v.begin(), v.end());
}

std::optional<std::size_t> ConceptLattice::find_intent(const AttributeSet& intent) const {
    auto it = by_intent_.find(intent);
    if (it == by_intent_.end()) return std::nullopt;
    return it->second;
}

bool ConceptLattice::leq(std::size_t a, std::size_t b) const {
    if (a >= size() || b >= size()) throw InputError("concept index out of range");
    return concepts_[b].intent.is_subset_of(concepts_[a].intent);
}

std::size_t ConceptLattice::meet(const std::vector<std::size_t>& ids) const {
    if (ids.empty()) throw InputError("meet of an empty set");
    AttributeSet u(attributes_);
    for (auto i : ids) {
        if (i >= size()) throw InputError("concept index out of range");
        u |= concepts_[i].intent;
    }
    std::optional<std::size_t> best;
    for (std::size_t j = 0; j < size(); ++j) {
        if (!u.is_subset_of(concepts_[j].intent)) continue;
        if (!best || concepts_[j].intent.count() < concepts_[*best].intent.count()) best = j;
    }
    if (!best) throw InputError("meet not present in lattice");
    return *best;
}

std::size_t ConceptLattice::join(const std::vector<std::size_t>& ids) const {
    if (ids.empty()) throw InputError("join of an empty set");
    AttributeSet x(attributes_, true);
    for (auto i : ids) {
        if (i >= size()) throw InputError("concept index out of range");
        x &= concepts_[i].intent;
    }
    auto found = find_intent(x);
    if (!found) throw InputError("join not present in lattice");
    return *found;
}

std::size_t ConceptLattice::attribute_concept(std::size_t m) const {
    if (m >= attributes_) throw InputError("attribute index out of range");
    std::optional<std::size_t> best;
    for (std::size_t j = 0; j < size(); ++j) {
        if (!concepts_[j].intent.test(m)) continue;
        if (!best || concepts_[j].intent.count() < concepts_[*best].intent.count()) best = j;
    }
    if (!best) throw InputError("attribute has no concept");
    return *best;
}

std::vector<std::size_t> ConceptLattice::ranks() const {
    std::vector<std::size_t> order(size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return concepts_[a].intent.count() > concepts_[b].intent.count();
    });
    std::vector<std::size_t> rank(size(), 0);
    for (auto i : order)
        for (auto l : lower_[i]) rank[i] = std::max(rank[i], rank[l] + 1);
    return rank;
}

std::vector<AttributeSet> enumerate_intents(const FormalContext& ctx, const EnumerationOptions& opts) {
    std::vector<AttributeSet> out;
    next_closure(ctx, opts.max_concepts, [&](const AttributeSet& b) { out.push_back(b); });
    return out;
}

std::size_t count_concepts(const FormalContext& ctx, const EnumerationOptions& opts) {
    std::size_t n = 0;
    next_closure(ctx, opts.max_concepts, [&](const AttributeSet&) { ++n; });
    return n;
}

ConceptLattice enumerate_concepts(const FormalContext& ctx, const EnumerationOptions& opts) {
    const bool keep = ctx.object_count() <= opts.max_objects_with_extents;
    std::vector<Concept> concepts;
    next_closure(ctx, opts.max_concepts, [&](const AttributeSet& b) {
        Concept c;
        ObjectSet ext = ctx.attribute_derive(b);
        c.extent_size = ext.count();
        if (keep) c.extent = std::move(ext);
        c.intent = b;
        concepts.push_back(std::move(c));
    });

    // Lower neighbours of (A,B): among the closures (B + m)'' for m not in B,
    // exactly those D reached through all |D \ B| of their new attributes.
    std::unordered_map<Bitset, std::size_t, BitsetHash> index;
    index.reserve(concepts.size());
    for (std::size_t i = 0; i < concepts.size(); ++i) index.emplace(concepts[i].intent, i);
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    std::unordered_map<Bitset, std::size_t, BitsetHash> hits;
    for (std::size_t i = 0; i < concepts.size(); ++i) {
        const auto& b = concepts[i].intent;
        hits.clear();
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
            if (b.test(m)) continue;
            AttributeSet d = b;
            d.set(m);
            d = ctx.closure(d);
            auto n = ++hits[d];
            if (n == d.count() - b.count()) covers.emplace_back(index.at(d), i);
        }
    }
    return ConceptLattice(std::move(concepts), ctx.object_count(), ctx.attribute_count(), keep, std::move(covers));
}

// ---------------------------------------------------------------------------
// width

namespace {

/// Hopcroft-Karp on a bipartite graph with identical left/right vertex sets.
std::size_t max_matching(const std::vector<std::vector<std::size_t>>& adj) {
    const std::size_t n = adj.size();
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> match_l(n, none), match_r(n, none), dist(n);
    auto bfs = [&]() {
        std::queue<std::size_t> q;
        bool found = false;
        for (std::size_t u = 0; u < n; ++u) {
            if (match_l[u] == none) {
                dist[u] = 0;
                q.push(u);
            } else {
                dist[u] = none;
            }
        }
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            for (auto v : adj[u]) {
                auto w = match_r[v];
                if (w == none) {
                    found = true;
                } else if (dist[w] == none) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    };
    std::function<bool(std::size_t)> dfs = [&](std::size_t u) {
        for (auto v : adj[u]) {
            auto w = match_r[v];
            if (w == none || (dist[w] == dist[u] + 1 && dfs(w))) {
                match_l[u] = v;
                match_r[v] = u;
                return true;
            }
        }
        dist[u] = none;
        return false;
    };
    std::size_t matching = 0;
    while (bfs())
        for (std::size_t u = 0; u < n; ++u)
            if (match_l[u] == none && dfs(u)) ++matching;
    return matching;
}

}  // namespace

std::size_t width(const ConceptLattice& lattice) {
    const std::size_t n = lattice.size();
    if (n == 0) throw InputError("width of an empty lattice");
    if (n > max_width_concepts) too_large(max_width_concepts);
    // strict order: i < j iff intent(j) is a proper subset of intent(i)
    std::vector<std::vector<std::size_t>> adj(n);
    const auto& cs = lattice.concepts();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && cs[j].intent.is_proper_subset_of(cs[i].intent)) adj[i].push_back(j);
    return n - max_matching(adj);
}

ZoomResult zoom(const ConceptLattice& lattice, std::size_t m) {
    if (m >= lattice.attribute_count()) throw InputError("unknown attribute index " + std::to_string(m));
    ZoomResult z;
    std::vector<bool> in(lattice.size(), false);
    for (std::size_t i = 0; i < lattice.size(); ++i)
        if (lattice[i].intent.test(m)) {
            in[i] = true;
            z.concept_ids.push_back(i);
        }
    for (const auto& [l, u] : lattice.covers())
        if (in[l] && in[u]) z.covers.emplace_back(l, u);
    return z;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

nlohmann::ordered_json concept_json(const Concept& c, const FormalContext& ctx, bool has_extents) {
    nlohmann::ordered_json j;
    j["extent_size"] = c.extent_size;
    if (has_extents) {
        auto e = nlohmann::ordered_json::array();
        c.extent.for_each([&](std::size_t g) { e.push_back(ctx.objects()[g]); });
        j["extent"] = std::move(e);
    }
    auto in = nlohmann::ordered_json::array();
    c.intent.for_each([&](std::size_t m) { in.push_back(ctx.attributes()[m]); });
    j["intent"] = std::move(in);
    return j;
}

}  // namespace

std::string lattice_to_json(const ConceptLattice& lattice, const FormalContext& ctx) {
    nlohmann::ordered_json j;
    auto cs = nlohmann::ordered_json::array();
    for (const auto& c : lattice.concepts()) cs.push_back(concept_json(c, ctx, lattice.has_extents()));
    j["concepts"] = std::move(cs);
    auto cv = nlohmann::ordered_json::array();
    for (const auto& [l, u] : lattice.covers()) cv.push_back({l, u});
    j["covers"] = std::move(cv);
    return j.dump(2) + "\n";
}

std::string zoom_to_json(const ZoomResult& z, const ConceptLattice& lattice, const FormalContext& ctx) {
    nlohmann::ordered_json j;
    std::unordered_map<std::size_t, std::size_t> local;
    auto cs = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < z.concept_ids.size(); ++k) {
        local[z.concept_ids[k]] = k;
        auto c = concept_json(lattice[z.concept_ids[k]], ctx, lattice.has_extents());
        c["source_index"] = z.concept_ids[k];
        cs.push_back(std::move(c));
    }
    j["concepts"] = std::move(cs);
    auto cv = nlohmann::ordered_json::array();
    for (const auto& [l, u] : z.covers) cv.push_back({local.at(l), local.at(u)});
    j["covers"] = std::move(cv);
    return j.dump(2) + "\n";
}

}  // namespace lattica
