#include "lattica/scaling.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include <json.hpp>

#include "lattica/error.hpp"

namespace lattica {

WeightMatrix::WeightMatrix(std::vector<std::string> rows, std::vector<std::string> cols, std::vector<double> values)
    : row_labels_(std::move(rows)), col_labels_(std::move(cols)), values_(std::move(values)) {
    if (values_.size() != row_labels_.size() * col_labels_.size())
        throw InputError("matrix is not rectangular");
    std::set<std::string_view> seen;
    for (const auto& r : row_labels_)
        if (!seen.insert(r).second) throw InputError("duplicate row label '" + r + "'");
    seen.clear();
    for (const auto& c : col_labels_)
        if (!seen.insert(c).second) throw InputError("duplicate column label '" + c + "'");
}

WeightMatrix WeightMatrix::normalized_l1() const {
    WeightMatrix r = *this;
    for (std::size_t i = 0; i < rows(); ++i) {
        double sum = 0;
        for (std::size_t j = 0; j < cols(); ++j) sum += std::abs(at(i, j));
        if (sum == 0) continue;
        for (std::size_t j = 0; j < cols(); ++j) r.values_[i * cols() + j] /= sum;
    }
    r.row_normalized_ = true;
    return r;
}

WeightMatrix WeightMatrix::restrict_rows(const std::vector<std::string>& labels) const {
    std::set<std::string_view> wanted(labels.begin(), labels.end());
    std::set<std::string_view> present(row_labels_.begin(), row_labels_.end());
    for (auto l : wanted)
        if (!present.count(l)) throw InputError("unknown row label '" + std::string(l) + "'");
    std::vector<std::string> rows;
    std::vector<double> vals;
    for (std::size_t i = 0; i < row_labels_.size(); ++i) {
        if (!wanted.count(row_labels_[i])) continue;
        rows.push_back(row_labels_[i]);
        vals.insert(vals.end(), values_.begin() + static_cast<std::ptrdiff_t>(i * cols()),
                    values_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols()));
    }
    WeightMatrix r(std::move(rows), col_labels_, std::move(vals));
    r.row_normalized_ = row_normalized_;
    return r;
}

namespace {

// RFC 4180 style: quoted fields may contain commas, doubled quotes and newlines.
std::vector<std::vector<std::string>> split_csv(std::string_view text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> rec;
    std::string field;
    bool quoted = false, field_started = false;
    std::size_t line = 1;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') ++line;
                field += c;
            }
            continue;
        }
        switch (c) {
            case '"':
                if (!field.empty()) throw ParseError(line, "stray quote inside field");
                quoted = true;
                field_started = true;
                break;
            case ',':
                rec.push_back(std::move(field));
                field.clear();
                field_started = true;
                break;
            case '\r':
                break;
            case '\n':
                if (field_started || !field.empty() || !rec.empty()) {
                    rec.push_back(std::move(field));
                    records.push_back(std::move(rec));
                }
                rec.clear();
                field.clear();
                field_started = false;
                ++line;
                break;
            default:
                field += c;
                field_started = true;
        }
    }
    if (quoted) throw ParseError(line, "unterminated quoted field");
    if (field_started || !field.empty() || !rec.empty()) {
        rec.push_back(std::move(field));
        records.push_back(std::move(rec));
    }
    return records;
}

double parse_weight(const std::string& s, std::size_t line) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError(line, "empty weight");
    const char* first = s.data() + b;
    const char* last = s.data() + e + 1;
    if (*first == '+') ++first;
    double v = 0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v)) throw ParseError(line, "invalid weight '" + s + "'");
    return v;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string format_weight(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

}  // namespace

WeightMatrix parse_matrix_csv(std::string_view text) {
    auto recs = split_csv(text);
    if (recs.empty()) throw ParseError(1, "empty matrix file");
    std::vector<std::string> cols(recs[0].begin() + 1, recs[0].end());
    std::vector<std::string> rows;
    std::vector<double> vals;
    for (std::size_t r = 1; r < recs.size(); ++r) {
        if (recs[r].size() != cols.size() + 1)
            throw ParseError(r + 1, "expected " + std::to_string(cols.size() + 1) + " fields, found " +
                                        std::to_string(recs[r].size()));
        rows.push_back(recs[r][0]);
        for (std::size_t c = 1; c < recs[r].size(); ++c) vals.push_back(parse_weight(recs[r][c], r + 1));
    }
    return WeightMatrix(std::move(rows), std::move(cols), std::move(vals));
}

std::string emit_matrix_csv(const WeightMatrix& m) {
    std::string out;
    for (const auto& c : m.col_labels()) out += "," + csv_field(c);
    out += "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += csv_field(m.row_labels()[i]);
        for (std::size_t j = 0; j < m.cols(); ++j) out += "," + format_weight(m.at(i, j));
        out += "\n";
    }
    return out;
}

EntityIndex parse_entity_index(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("entity index: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("entities") || !j["entities"].is_object())
        throw InputError("entity index needs an \"entities\" object");
    EntityIndex idx;
    for (const auto& [name, docs] : j["entities"].items()) {
        if (!docs.is_array()) throw InputError("entity '" + name + "' must map to an array of document ids");
        auto& v = idx.entities[name];
        for (const auto& d : docs) {
            if (!d.is_string()) throw InputError("entity '" + name + "': document ids must be strings");
            v.push_back(d.get<std::string>());
        }
    }
    if (j.contains("years")) {
        if (!j["years"].is_object()) throw InputError("\"years\" must be an object");
        for (const auto& [doc, y] : j["years"].items()) {
            if (!y.is_number_integer()) throw InputError("year of '" + doc + "' must be an integer");
            idx.years[doc] = y.get<int>();
        }
    }
    return idx;
}

void validate_entity_index(const EntityIndex& index, const std::vector<std::string>& row_labels) {
    std::set<std::string_view> rows(row_labels.begin(), row_labels.end());
    for (const auto& [name, docs] : index.entities)
        for (const auto& d : docs)
            if (!rows.count(d)) throw InputError("entity '" + name + "' references unknown document '" + d + "'");
    for (const auto& [d, y] : index.years)
        if (!rows.count(d)) throw InputError("year given for unknown document '" + d + "'");
}

FormalContext threshold_scale(const WeightMatrix& dt, double delta) {
    if (!(delta >= 0.0 && delta <= 1.0)) throw InputError("threshold must lie in [0,1]");
    std::vector<Bitset> inc(dt.rows(), Bitset(dt.cols()));
    for (std::size_t i = 0; i < dt.rows(); ++i)
        for (std::size_t j = 0; j < dt.cols(); ++j)
            if (dt.at(i, j) >= delta) inc[i].set(j);
    return FormalContext(dt.row_labels(), dt.col_labels(), std::move(inc));
}

FormalContext topn_scale(const WeightMatrix& tt, std::size_t n) {
    if (n == 0) throw InputError("top-n requires n >= 1");
    std::vector<Bitset> inc(tt.rows(), Bitset(tt.cols()));
    std::vector<double> col(tt.rows());
    for (std::size_t j = 0; j < tt.cols() && tt.rows() > 0; ++j) {
        for (std::size_t i = 0; i < tt.rows(); ++i) col[i] = tt.at(i, j);
        const std::size_t k = std::min(n, tt.rows());
        std::nth_element(col.begin(), col.begin() + static_cast<std::ptrdiff_t>(k - 1), col.end(),
                         std::greater<double>());
        const double cut = col[k - 1];
        for (std::size_t i = 0; i < tt.rows(); ++i)
            if (tt.at(i, j) >= cut) inc[i].set(j);
    }
    return FormalContext(tt.row_labels(), tt.col_labels(), std::move(inc));
}

FormalContext entity_subcontext(const FormalContext& ctx, const EntityIndex& index, const std::string& entity) {
    auto it = index.entities.find(entity);
    if (it == index.entities.end()) throw InputError("unknown entity '" + entity + "'");
    return ctx.induced(ctx.objects_named(it->second), ctx.all_attributes());
}

std::vector<SweepRow> density_sweep(const WeightMatrix& dt, const std::vector<double>& deltas,
                                    const EnumerationOptions& opts) {
    if (deltas.empty()) throw InputError("density sweep needs at least one threshold");
    std::vector<SweepRow> out;
    for (double d : deltas) {
        auto ctx = threshold_scale(dt, d);
        out.push_back({d, ctx.density(), count_concepts(ctx, opts)});
    }
    return out;
}

std::vector<CurvePoint> topn_concept_curve(const WeightMatrix& tt, const std::vector<std::size_t>& ns,
                                           const EnumerationOptions& opts) {
    std::vector<CurvePoint> out;
    for (auto n : ns) out.push_back({n, count_concepts(topn_scale(tt, n), opts)});
    return out;
}

}  // namespace lattica
