#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lattica/bitset.hpp"

namespace lattica {

/// Formal context (G, M, I): ordered object labels, ordered attribute labels
/// and a binary incidence. Immutable once built; rows (object intents) and
/// columns (attribute extents) are both materialized as bitsets.
class FormalContext {
public:
    FormalContext() = default;

    /// Builds a context from labels and a row-major incidence
    /// (`incidence[g]` is the intent of object g). Throws InputError on
    /// duplicate labels or a dimension mismatch.
    FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                  std::vector<Bitset> incidence);

    /// Convenience builder from rows of '.'/'X' characters.
    static FormalContext from_rows(std::vector<std::string> objects, std::vector<std::string> attributes,
                                   const std::vector<std::string>& rows);

    std::size_t object_count() const noexcept { return objects_.size(); }
    std::size_t attribute_count() const noexcept { return attributes_.size(); }
    const std::vector<std::string>& objects() const noexcept { return objects_; }
    const std::vector<std::string>& attributes() const noexcept { return attributes_; }

    bool incident(std::size_t g, std::size_t m) const noexcept { return rows_[g].test(m); }
    const AttributeSet& intent_of(std::size_t g) const noexcept { return rows_[g]; }
    const ObjectSet& extent_of(std::size_t m) const noexcept { return cols_[m]; }

    ObjectSet empty_objects() const { return ObjectSet(object_count()); }
    AttributeSet empty_attributes() const { return AttributeSet(attribute_count()); }
    ObjectSet all_objects() const { return ObjectSet(object_count(), true); }
    AttributeSet all_attributes() const { return AttributeSet(attribute_count(), true); }

    /// Index of a label; throws InputError if unknown.
    std::size_t object_index(std::string_view label) const;
    std::size_t attribute_index(std::string_view label) const;

    AttributeSet attributes_named(const std::vector<std::string>& labels) const;
    ObjectSet objects_named(const std::vector<std::string>& labels) const;

    /// A' : attributes shared by every object in A. derive(empty) = M.
    AttributeSet object_derive(const ObjectSet& a) const;
    /// B' : objects having every attribute in B. derive(empty) = G.
    ObjectSet attribute_derive(const AttributeSet& b) const;
    /// B''
    AttributeSet closure(const AttributeSet& b) const;
    /// A''
    ObjectSet object_closure(const ObjectSet& a) const;

    /// Restriction to objects H and attributes N, keeping label order.
    FormalContext induced(const ObjectSet& h, const AttributeSet& n) const;

    /// Fraction of set incidences; throws InputError when |G|*|M| == 0.
    double density() const;
    std::size_t incidence_count() const noexcept;

    FormalContext complement() const;
    FormalContext transposed() const;

    friend bool operator==(const FormalContext&, const FormalContext&) = default;

private:
    std::vector<std::string> objects_;
    std::vector<std::string> attributes_;
    std::vector<Bitset> rows_;
    std::vector<Bitset> cols_;
};

/// Burmeister CXT reader. Reports malformed input as ParseError with the line.
FormalContext parse_cxt(std::string_view text);
/// Byte-deterministic Burmeister CXT writer (LF line endings, trailing newline).
std::string emit_cxt(const FormalContext& ctx);

/// JSON mirror {"objects":[...], "attributes":[...], "incidence":[[0|1,...],...]}.
FormalContext parse_context_json(std::string_view text);
std::string emit_context_json(const FormalContext& ctx);

/// Reads a context from a file, choosing the format by extension (.json or CXT).
FormalContext load_context(const std::string& path);

}  // namespace lattica
