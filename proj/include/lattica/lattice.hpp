#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lattica/bitset.hpp"
#include "lattica/context.hpp"

namespace lattica {

struct EnumerationOptions {
    /// Enumeration stops with CeilingError("lattice too large") past this many concepts.
    std::size_t max_concepts = 100000;
    /// Extents are kept only for contexts with at most this many objects;
    /// larger contexts keep extent sizes.
    std::size_t max_objects_with_extents = 65536;
};

struct Concept {
    ObjectSet extent;  // empty bitset (size 0) when extents are not stored
    AttributeSet intent;
    std::size_t extent_size = 0;
};

/// All formal concepts of a context in lectic order of their intents, with
/// the cover relation. Concept i <= concept j iff intent(j) is a subset of
/// intent(i).
class ConceptLattice {
public:
    ConceptLattice() = default;
    /// Covers are derived from the intents (quadratic scan).
    ConceptLattice(std::vector<Concept> concepts, std::size_t objects, std::size_t attributes, bool has_extents);
    /// Covers supplied by the caller as (lower, upper) pairs.
    ConceptLattice(std::vector<Concept> concepts, std::size_t objects, std::size_t attributes, bool has_extents,
                   std::vector<std::pair<std::size_t, std::size_t>> covers);

    std::size_t size() const noexcept { return concepts_.size(); }
    const std::vector<Concept>& concepts() const noexcept { return concepts_; }
    const Concept& operator[](std::size_t i) const { return concepts_.at(i); }
    bool has_extents() const noexcept { return has_extents_; }
    std::size_t object_count() const noexcept { return objects_; }
    std::size_t attribute_count() const noexcept { return attributes_; }

    /// (lower, upper) pairs, sorted.
    const std::vector<std::pair<std::size_t, std::size_t>>& covers() const noexcept { return covers_; }
    const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_.at(i); }
    const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_.at(i); }

    std::size_t top() const noexcept { return top_; }
    std::size_t bottom() const noexcept { return bottom_; }

    std::optional<std::size_t> find_intent(const AttributeSet& intent) const;

    bool leq(std::size_t a, std::size_t b) const;

    /// Greatest lower bound / least upper bound of a non-empty index set.
    std::size_t meet(const std::vector<std::size_t>& ids) const;
    std::size_t join(const std::vector<std::size_t>& ids) const;

    /// Topmost concept whose intent contains attribute m.
    std::size_t attribute_concept(std::size_t m) const;

    /// Rank of each concept: length of the longest chain from the bottom.
    std::vector<std::size_t> ranks() const;

private:
    void build_index();
    void build_covers();
    void set_covers(std::vector<std::pair<std::size_t, std::size_t>> covers);

    std::vector<Concept> concepts_;
    std::size_t objects_ = 0;
    std::size_t attributes_ = 0;
    bool has_extents_ = false;
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
    std::vector<std::vector<std::size_t>> upper_, lower_;
    std::unordered_map<Bitset, std::size_t, BitsetHash> by_intent_;
    std::size_t top_ = 0;
    std::size_t bottom_ = 0;
};

/// Lectic (NextClosure) enumeration of every closed intent, followed by the
/// cover relation. Output order is deterministic: lectic on intents.
ConceptLattice enumerate_concepts(const FormalContext& ctx, const EnumerationOptions& opts = {});

/// Concept count only, same ceiling semantics.
std::size_t count_concepts(const FormalContext& ctx, const EnumerationOptions& opts = {});

/// Every closed intent in lectic order.
std::vector<AttributeSet> enumerate_intents(const FormalContext& ctx, const EnumerationOptions& opts = {});

/// Maximum antichain size (Dilworth, via maximum bipartite matching).
std::size_t width(const ConceptLattice& lattice);

/// Concepts whose intent contains attribute m, with covers restricted to them.
struct ZoomResult {
    std::vector<std::size_t> concept_ids;  // indices into the source lattice
    std::vector<std::pair<std::size_t, std::size_t>> covers;  // source indices
};
ZoomResult zoom(const ConceptLattice& lattice, std::size_t m);

/// {"concepts":[{"extent_size", "extent"?, "intent"}], "covers":[[l,u],...]}
std::string lattice_to_json(const ConceptLattice& lattice, const FormalContext& ctx);
std::string zoom_to_json(const ZoomResult& z, const ConceptLattice& lattice, const FormalContext& ctx);

}  // namespace lattica
