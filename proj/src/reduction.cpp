#include "lattica/reduction.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "lattica/error.hpp"

namespace lattica {

CoreResult pq_core(const FormalContext& ctx, std::size_t p, std::size_t q) {
    const std::size_t ng = ctx.object_count(), nm = ctx.attribute_count();
    ObjectSet alive_g = ctx.all_objects();
    AttributeSet alive_m = ctx.all_attributes();
    std::vector<std::size_t> deg_g(ng), deg_m(nm);
    for (std::size_t g = 0; g < ng; ++g) deg_g[g] = ctx.intent_of(g).count();
    for (std::size_t m = 0; m < nm; ++m) deg_m[m] = ctx.extent_of(m).count();

    // queue entries: (is_attribute, index)
    std::deque<std::pair<bool, std::size_t>> queue;
    for (std::size_t g = 0; g < ng; ++g)
        if (deg_g[g] < p) queue.emplace_back(false, g);
    for (std::size_t m = 0; m < nm; ++m)
        if (deg_m[m] < q) queue.emplace_back(true, m);

    while (!queue.empty()) {
        auto [is_attr, i] = queue.front();
        queue.pop_front();
        if (is_attr) {
            if (!alive_m.test(i)) continue;
            alive_m.reset(i);
            (ctx.extent_of(i) & alive_g).for_each([&](std::size_t g) {
                if (deg_g[g]-- == p) queue.emplace_back(false, g);
            });
        } else {
            if (!alive_g.test(i)) continue;
            alive_g.reset(i);
            (ctx.intent_of(i) & alive_m).for_each([&](std::size_t m) {
                if (deg_m[m]-- == q) queue.emplace_back(true, m);
            });
        }
    }
    CoreResult r;
    r.core = ctx.induced(alive_g, alive_m);
    r.objects = std::move(alive_g);
    r.attributes = std::move(alive_m);
    r.p = p;
    r.q = q;
    return r;
}

std::vector<std::vector<std::size_t>> pq_importance_grid(const FormalContext& ctx,
                                                         const std::vector<std::size_t>& p_values,
                                                         const std::vector<std::size_t>& q_values,
                                                         const EnumerationOptions& opts) {
    if (p_values.empty() || q_values.empty()) throw InputError("importance grid needs non-empty p and q ranges");
    std::vector<std::vector<std::size_t>> grid(p_values.size(), std::vector<std::size_t>(q_values.size()));
    for (std::size_t i = 0; i < p_values.size(); ++i)
        for (std::size_t j = 0; j < q_values.size(); ++j)
            grid[i][j] = count_concepts(pq_core(ctx, p_values[i], q_values[j]).core, opts);
    return grid;
}

Rational intent_support(const FormalContext& ctx, const AttributeSet& b) {
    if (ctx.object_count() == 0) throw InputError("support undefined: context has no objects");
    return Rational(ctx.attribute_derive(b).count(), ctx.object_count());
}

// ---------------------------------------------------------------------------
// Iceberg lattice

IcebergLattice::IcebergLattice(std::vector<AttributeSet> intents, std::vector<Rational> supports, Rational minsupp,
                               std::size_t attributes)
    : intents_(std::move(intents)), supports_(std::move(supports)), minsupp_(minsupp), attributes_(attributes) {
    if (intents_.size() != supports_.size()) throw InputError("iceberg: intents and supports differ in length");
    for (std::size_t i = 0; i < intents_.size(); ++i) {
        std::vector<std::size_t> above;
        for (std::size_t j = 0; j < intents_.size(); ++j)
            if (intents_[i].is_proper_subset_of(intents_[j])) above.push_back(j);
        for (auto j : above) {
            bool minimal = std::none_of(above.begin(), above.end(), [&](std::size_t k) {
                return k != j && intents_[k].is_proper_subset_of(intents_[j]);
            });
            if (minimal) covers_.emplace_back(j, i);
        }
    }
    std::sort(covers_.begin(), covers_.end());
}

std::optional<std::size_t> IcebergLattice::find_intent(const AttributeSet& b) const {
    for (std::size_t i = 0; i < intents_.size(); ++i)
        if (intents_[i] == b) return i;
    return std::nullopt;
}

std::size_t IcebergLattice::join(const std::vector<std::size_t>& ids) const {
    if (ids.empty()) throw InputError("join of an empty set");
    AttributeSet x(attributes_, true);
    for (auto i : ids) x &= intents_.at(i);
    auto found = find_intent(x);
    if (!found) throw InputError("join not present in semilattice");
    return *found;
}

std::size_t IcebergLattice::meet(const std::vector<std::size_t>& ids) const {
    if (ids.empty()) throw InputError("meet of an empty set");
    AttributeSet u(attributes_);
    for (auto i : ids) u |= intents_.at(i);
    // every intent containing u contains u''; if u'' is infrequent so is each superset
    std::optional<std::size_t> best;
    for (std::size_t j = 0; j < intents_.size(); ++j) {
        if (!u.is_subset_of(intents_[j])) continue;
        if (!best || intents_[j].count() < intents_[*best].count()) best = j;
    }
    if (!best) throw InputError("meet not present in semilattice");
    return *best;
}

namespace {

struct Key {
    std::vector<std::size_t> items;  // sorted attribute indices
    ObjectSet extent;
    std::size_t count = 0;
};

}  // namespace

IcebergLattice titanic_iceberg(const FormalContext& ctx, const Rational& minsupp, const EnumerationOptions& opts) {
    if (minsupp > Rational(1, 1)) throw InputError("minimum support must lie in [0,1]");
    const std::size_t ng = ctx.object_count(), nm = ctx.attribute_count();
    if (ng == 0) throw InputError("support undefined: context has no objects");
    auto frequent = [&](std::size_t count) { return Rational(count, ng) >= minsupp; };

    std::unordered_set<Bitset, BitsetHash> closed;
    auto add_closure = [&](const Key& k) {
        // TITANIC closure: X plus every m with supp(X + m) == supp(X)
        AttributeSet c(nm);
        for (std::size_t m = 0; m < nm; ++m)
            if ((k.extent & ctx.extent_of(m)).count() == k.count) c.set(m);
        closed.insert(std::move(c));
        if (closed.size() > opts.max_concepts)
            throw CeilingError("lattice too large: more than " + std::to_string(opts.max_concepts) + " concepts");
    };

    std::vector<Key> level;
    {
        Key empty{{}, ctx.all_objects(), ng};
        if (frequent(ng)) add_closure(empty);
        else return IcebergLattice({}, {}, minsupp, nm);
        level.push_back(std::move(empty));
    }

    std::map<std::vector<std::size_t>, std::size_t> prev_counts;  // frequent keys of the previous level
    prev_counts[{}] = ng;
    std::size_t k = 1;
    while (!level.empty() && k <= nm) {
        std::vector<Key> next;
        std::map<std::vector<std::size_t>, std::size_t> next_counts;
        auto consider = [&](std::vector<std::size_t> items, ObjectSet extent) {
            // every (k-1)-subset must be a frequent key; remember the smallest support
            std::size_t min_sub = ng;
            for (std::size_t drop = 0; drop < items.size(); ++drop) {
                std::vector<std::size_t> sub;
                sub.reserve(items.size() - 1);
                for (std::size_t t = 0; t < items.size(); ++t)
                    if (t != drop) sub.push_back(items[t]);
                auto it = prev_counts.find(sub);
                if (it == prev_counts.end()) return;
                min_sub = std::min(min_sub, it->second);
            }
            std::size_t count = extent.count();
            if (!frequent(count) || count == min_sub) return;
            Key key{std::move(items), std::move(extent), count};
            next_counts[key.items] = count;
            add_closure(key);
            next.push_back(std::move(key));
        };
        if (k == 1) {
            for (std::size_t m = 0; m < nm; ++m) consider({m}, ctx.extent_of(m));
        } else {
            // apriori-gen: join keys sharing their first k-2 items
            for (std::size_t a = 0; a < level.size(); ++a) {
                for (std::size_t b = a + 1; b < level.size(); ++b) {
                    const auto& x = level[a].items;
                    const auto& y = level[b].items;
                    if (!std::equal(x.begin(), x.end() - 1, y.begin())) break;
                    auto items = x;
                    items.push_back(y.back());
                    if (items[items.size() - 2] > items.back()) std::swap(items[items.size() - 2], items.back());
                    consider(std::move(items), level[a].extent & level[b].extent);
                }
            }
        }
        std::sort(next.begin(), next.end(), [](const Key& a, const Key& b) { return a.items < b.items; });
        level = std::move(next);
        prev_counts = std::move(next_counts);
        ++k;
    }

    std::vector<AttributeSet> intents(closed.begin(), closed.end());
    std::sort(intents.begin(), intents.end(), lectic_less);
    std::vector<Rational> supports;
    supports.reserve(intents.size());
    for (const auto& b : intents) supports.push_back(Rational(ctx.attribute_derive(b).count(), ng));
    return IcebergLattice(std::move(intents), std::move(supports), minsupp, nm);
}

std::string iceberg_to_json(const IcebergLattice& ice, const FormalContext& ctx) {
    nlohmann::ordered_json j;
    j["minsupp"] = ice.minsupp().str();
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < ice.size(); ++i) {
        nlohmann::ordered_json c;
        auto in = nlohmann::ordered_json::array();
        ice.intents()[i].for_each([&](std::size_t m) { in.push_back(ctx.attributes()[m]); });
        c["intent"] = std::move(in);
        c["support"] = ice.supports()[i].str();
        c["support_decimal"] = ice.supports()[i].decimal(4);
        arr.push_back(std::move(c));
    }
    j["intents"] = std::move(arr);
    auto cv = nlohmann::ordered_json::array();
    for (const auto& [l, u] : ice.covers()) cv.push_back({l, u});
    j["covers"] = std::move(cv);
    return j.dump(2) + "\n";
}

}  // namespace lattica
