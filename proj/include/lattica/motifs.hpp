#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lattica/context.hpp"

namespace lattica {

/// Ordinal motif families. Membership of an attribute set N is decided on
/// the restriction ctx[G,N].
enum class MotifFamily { Nominal, NominalPlus, Contranominal, Crown, Ordinal, Interordinal };

std::string_view to_string(MotifFamily f);
MotifFamily parse_motif_family(std::string_view name);
const std::vector<MotifFamily>& all_motif_families();

struct NominalCheck {
    bool ok = false;
    std::optional<std::size_t> plus_witness;  // an object incident to all of N
};

struct ContranominalCheck {
    bool ok = false;
    /// witnesses[i] lacks exactly the i-th attribute of N (ascending index order) within N
    std::vector<std::size_t> witnesses;
};

struct OrdinalCheck {
    bool ok = false;
    std::vector<std::size_t> chain;  // greatest extent first (rank 1)
};

struct InterordinalCheck {
    bool ok = false;
    std::vector<std::size_t> chain_a;  // "<= 1" .. "<= k": growing extents
    std::vector<std::size_t> chain_b;  // ">= 1" .. ">= k": shrinking extents
};

struct CrownCheck {
    bool ok = false;
    std::vector<std::size_t> cycle;          // attributes in cyclic order, smallest index first
    std::vector<std::size_t> cycle_objects;  // cycle_objects[i] realizes {cycle[i], cycle[i+1 mod k]}
};

/// Attribute extents on N pairwise incomparable with one common pairwise
/// intersection. With `with_plus`, N' must also be non-empty.
NominalCheck is_nominal(const FormalContext& ctx, const AttributeSet& n, bool with_plus);

/// Every n in N has an object whose intent within N is exactly N \ {n}.
ContranominalCheck is_contranominal(const FormalContext& ctx, const AttributeSet& n);

/// Extents on N form a chain under strict inclusion.
OrdinalCheck is_ordinal(const FormalContext& ctx, const AttributeSet& n);

/// |N| = 2k with k >= 2. N splits into "<= 1..<= k" and ">= 1..>= k" such that
/// every object's intent within N is empty, N, or {<= j..<= k} u {>= 1..>= i}
/// for some i <= j, and every point interval i = j is realized by an object.
/// Other sizes are never interordinal.
InterordinalCheck is_interordinal(const FormalContext& ctx, const AttributeSet& n);

/// |N| >= 4 (a 3-crown is the contranominal scale and is reported as such).
/// N arranges into a cycle whose consecutive pairs are each the exact
/// intent-within-N of some object, and no object meets N in any other pair
/// or in three or more attributes. Throws InputError for |N| < 3.
CrownCheck is_crown(const FormalContext& ctx, const AttributeSet& n);

/// Dispatches to the family predicate.
bool satisfies(const FormalContext& ctx, const AttributeSet& n, MotifFamily family);

struct MotifSearchOptions {
    /// Exhaustive search refuses contexts with more attributes than this.
    std::size_t max_attributes = 40;
    /// Upper bound on search nodes before CeilingError.
    std::size_t max_search_nodes = 20'000'000;
};

/// All inclusion-maximal attribute sets of the family, lectically ordered.
std::vector<AttributeSet> maximal_motifs(const FormalContext& ctx, MotifFamily family,
                                         const MotifSearchOptions& opts = {});

/// Groups (size >= 2) of attributes with identical extents, ascending.
std::vector<std::vector<std::size_t>> duplicate_attributes(const FormalContext& ctx);

/// Minimum number of incidences to insert so that N becomes contranominal:
/// a minimum-cost assignment of distinct witness objects to the attributes
/// of N. nullopt when fewer than |N| objects can serve as witnesses.
std::optional<std::size_t> contranominal_insertion_distance(const FormalContext& ctx, const AttributeSet& n);

// ---------------------------------------------------------------------------
// Geometric structure

struct EdgeLabel {
    std::size_t a = 0, b = 0;          // attribute indices, a < b
    std::vector<std::size_t> objects;  // {a,b}'
};

struct ContranominalMotif {
    std::vector<std::size_t> nodes;
    std::vector<EdgeLabel> edge_labels;
};

struct NominalMotif {
    std::vector<std::size_t> nodes;
    std::optional<std::size_t> plus_witness;
    bool no_edge = true;  // nominal motifs without a "+" object are not drawn
};

struct CrownMotif {
    std::vector<std::size_t> cycle;
    std::vector<std::size_t> cycle_objects;
};

/// Objects annotated at each chain node: those with no lower-ranked attribute of the chain.
struct OrdinalMotif {
    std::vector<std::size_t> chain;
    std::vector<std::vector<std::size_t>> annotations;
};

struct InterordinalMotif {
    std::vector<std::size_t> chain_a, chain_b;
    std::vector<std::vector<std::size_t>> annotations_a, annotations_b;
};

/// Multi-hypergraph over the attributes with one hyperedge family per motif type.
struct GeometricStructure {
    std::vector<std::string> attributes;
    std::vector<std::string> objects;
    std::vector<MotifFamily> families;
    std::vector<NominalMotif> nominal;
    std::vector<NominalMotif> nominal_plus;
    std::vector<ContranominalMotif> contranominal;
    std::vector<CrownMotif> crown;
    std::vector<OrdinalMotif> ordinal;
    std::vector<InterordinalMotif> interordinal;
};

GeometricStructure geometric_structure(const FormalContext& ctx, const std::vector<MotifFamily>& families,
                                       const MotifSearchOptions& opts = {});

std::string geometric_structure_to_json(const GeometricStructure& gs);

}  // namespace lattica
