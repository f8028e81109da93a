#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lattica/context.hpp"
#include "lattica/lattice.hpp"

namespace lattica {

/// Dense row-labeled, column-labeled weight matrix (document-topic or
/// term-topic weights).
class WeightMatrix {
public:
    WeightMatrix() = default;
    WeightMatrix(std::vector<std::string> rows, std::vector<std::string> cols, std::vector<double> values);

    std::size_t rows() const noexcept { return row_labels_.size(); }
    std::size_t cols() const noexcept { return col_labels_.size(); }
    const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }
    const std::vector<std::string>& col_labels() const noexcept { return col_labels_; }
    double at(std::size_t r, std::size_t c) const noexcept { return values_[r * cols() + c]; }
    const std::vector<double>& values() const noexcept { return values_; }
    bool row_normalized() const noexcept { return row_normalized_; }

    /// v / sum(v) per row; all-zero rows stay zero.
    WeightMatrix normalized_l1() const;

    /// Rows with the given labels, in matrix order. Unknown labels throw InputError.
    WeightMatrix restrict_rows(const std::vector<std::string>& labels) const;

private:
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
    std::vector<double> values_;
    bool row_normalized_ = false;
};

/// CSV: first row = column labels (leading corner cell), first column = row labels.
WeightMatrix parse_matrix_csv(std::string_view text);
std::string emit_matrix_csv(const WeightMatrix& m);

/// Documents owned by named entities (authors, venues) plus optional years.
struct EntityIndex {
    std::map<std::string, std::vector<std::string>> entities;
    std::map<std::string, int> years;
};

/// {"entities": {name: [doc_id,...]}, "years": {doc_id: int}}
EntityIndex parse_entity_index(std::string_view text);

/// Throws InputError if the index mentions a document absent from `row_labels`.
void validate_entity_index(const EntityIndex& index, const std::vector<std::string>& row_labels);

/// (d,t) incident iff w(d,t) >= delta. Objects = rows, attributes = columns.
FormalContext threshold_scale(const WeightMatrix& dt, double delta);

/// (s,t) incident iff w(s,t) is among the n greatest weights of column t;
/// every row tied with the n-th greatest weight is included.
FormalContext topn_scale(const WeightMatrix& tt, std::size_t n);

/// Induced subcontext on an entity's documents and all attributes.
FormalContext entity_subcontext(const FormalContext& ctx, const EntityIndex& index, const std::string& entity);

struct SweepRow {
    double delta;
    double density;
    std::size_t concepts;
};

/// One row per delta, in input order.
std::vector<SweepRow> density_sweep(const WeightMatrix& dt, const std::vector<double>& deltas,
                                    const EnumerationOptions& opts = {});

struct CurvePoint {
    std::size_t n;
    std::size_t concepts;
};

std::vector<CurvePoint> topn_concept_curve(const WeightMatrix& tt, const std::vector<std::size_t>& ns,
                                           const EnumerationOptions& opts = {});

}  // namespace lattica
