#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lattica/rational.hpp"

namespace lattica {

/// Every parameter of a pipeline run. Defaults: delta 0.25, top-n 10,
/// (p,q) = (2,8), minimum support 3/100, minimum confidence 1/2.
struct PipelineConfig {
    // inputs
    std::string matrix;    // document-topic CSV
    std::string terms;     // term-topic CSV
    std::string corpus;    // JSON-lines documents
    std::string context;   // CXT or JSON context
    std::string entities;  // entity index JSON
    std::string entity;    // restrict to one entity
    std::vector<std::string> report_entities;
    std::string labels;    // abbreviation file

    // scaling
    double delta = 0.25;
    std::vector<double> deltas;
    std::size_t topn = 10;
    std::vector<std::size_t> ns;
    bool normalize = false;

    // reduction and rules
    std::size_t p = 2;
    std::size_t q = 8;
    Rational minsupp{3, 100};
    Rational minconf{1, 2};

    // motifs, temporal, zoom
    std::vector<std::string> families;
    std::string periods;
    std::string attribute;

    // drawing
    std::string kind = "hasse";  // hasse | geometric
    std::string format = "svg";  // svg | dot
    bool tulip = false;
    std::vector<std::string> tulip_attributes;
    bool omit_bottom = false;
    std::uint64_t seed = 1;
    double width = 800;
    double height = 600;

    // ceilings
    std::size_t max_concepts = 100000;
    std::size_t max_motif_attributes = 40;

    std::string out = "out";
};

/// Minimal TOML subset: `key = value` lines with strings, integers, floats,
/// booleans and flat arrays; `#` comments. Unknown keys are errors.
PipelineConfig parse_config(std::string_view text);

/// Resolved configuration in the same format, keys in fixed order.
std::string emit_config(const PipelineConfig& cfg);

}  // namespace lattica
