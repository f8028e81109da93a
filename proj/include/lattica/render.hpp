#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lattica/context.hpp"
#include "lattica/lattice.hpp"
#include "lattica/motifs.hpp"

namespace lattica {

// Scene: layout-independent drawing description in abstract units (y grows upwards).

struct SceneNode {
    std::string id;
    double x = 0, y = 0;
    double radius = 0.12;
    std::string style;  // "concept", "attribute", "ordinal"
    std::string label;  // drawn next to the node
    std::string label_above;
    std::string label_below;
    std::string group;  // e.g. "tulip" for nodes placed by the tulip template
};

struct SceneEdge {
    std::size_t from = 0, to = 0;
    std::string style;  // "plain", "nominal", "contranominal", "cycle", "overlap"
    std::string label;
};

struct ScenePolygon {
    std::vector<std::size_t> nodes;
    std::string style;  // "contranominal" (filled) or "hull" (interordinal enclosure)
    std::string label_above;
    std::string label_below;
};

struct Scene {
    std::vector<SceneNode> nodes;
    std::vector<SceneEdge> edges;
    std::vector<ScenePolygon> polygons;
};

/// Attribute label abbreviations; a missing entry keeps the full label.
using LabelMap = std::map<std::string, std::string, std::less<>>;

/// Lines "full label = abbreviation"; blank lines and lines starting with '#' are skipped.
LabelMap parse_label_map(std::string_view text);

struct LatticeDrawOptions {
    std::size_t max_nodes = 300;
    /// Drop the bottom concept when its extent is empty.
    bool omit_bottom = false;
    /// Place the inner concepts of a contranominal attribute set (3 or 4
    /// attributes) crossing-free. Uses `tulip_attributes` when given,
    /// otherwise the largest maximal contranominal set of at most 4 attributes.
    bool tulip = false;
    std::vector<std::string> tulip_attributes;
    LabelMap labels;
};

/// Layered Hasse diagram: rank = longest chain from the bottom, attribute
/// labels at attribute concepts, extent sizes below nodes.
/// CeilingError when the lattice has more than max_nodes concepts.
Scene draw_lattice(const ConceptLattice& lattice, const FormalContext& ctx, const LatticeDrawOptions& opts = {});

struct GeometricDrawOptions {
    std::uint64_t seed = 1;
    std::size_t max_nodes = 300;
    std::size_t iterations = 400;
    LabelMap labels;
};

/// One node per attribute; motif hyperedges drawn per family.
Scene draw_geometric(const GeometricStructure& gs, const GeometricDrawOptions& opts = {});

/// Number of pairs of edges among `nodes` whose segments cross away from shared endpoints.
std::size_t edge_crossings(const Scene& scene, const std::vector<std::size_t>& nodes);

struct SvgOptions {
    double width = 800;
    double height = 600;
};

std::string emit_svg(const Scene& scene, const SvgOptions& opts = {});
/// Graphviz DOT for Hasse diagrams with pinned positions.
std::string emit_dot(const Scene& scene);

}  // namespace lattica
