#include "lattica/context.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "lattica/error.hpp"
#include "lattica/io.hpp"

namespace lattica {

namespace {

void require_unique(const std::vector<std::string>& labels, const char* kind) {
    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second) throw InputError(std::string("duplicate ") + kind + " label '" + l + "'");
}

std::size_t find_label(const std::vector<std::string>& labels, std::string_view label, const char* kind) {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return i;
    throw InputError(std::string("unknown ") + kind + " '" + std::string(label) + "'");
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             std::vector<Bitset> incidence)
    : objects_(std::move(objects)), attributes_(std::move(attributes)), rows_(std::move(incidence)) {
    require_unique(objects_, "object");
    require_unique(attributes_, "attribute");
    if (rows_.size() != objects_.size())
        throw InputError("incidence has " + std::to_string(rows_.size()) + " rows for " +
                         std::to_string(objects_.size()) + " objects");
    cols_.assign(attributes_.size(), Bitset(objects_.size()));
    for (std::size_t g = 0; g < rows_.size(); ++g) {
        if (rows_[g].size() != attributes_.size())
            throw InputError("incidence row " + std::to_string(g) + " has width " +
                             std::to_string(rows_[g].size()) + ", expected " + std::to_string(attributes_.size()));
        rows_[g].for_each([&](std::size_t m) { cols_[m].set(g); });
    }
}

FormalContext FormalContext::from_rows(std::vector<std::string> objects, std::vector<std::string> attributes,
                                       const std::vector<std::string>& rows) {
    std::vector<Bitset> inc;
    inc.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != attributes.size()) throw InputError("row '" + r + "' has wrong width");
        Bitset b(attributes.size());
        for (std::size_t m = 0; m < r.size(); ++m) {
            if (r[m] == 'X' || r[m] == 'x')
                b.set(m);
            else if (r[m] != '.')
                throw InputError("illegal incidence character in row '" + r + "'");
        }
        inc.push_back(std::move(b));
    }
    return FormalContext(std::move(objects), std::move(attributes), std::move(inc));
}

std::size_t FormalContext::object_index(std::string_view label) const {
    return find_label(objects_, label, "object");
}

std::size_t FormalContext::attribute_index(std::string_view label) const {
    return find_label(attributes_, label, "attribute");
}

AttributeSet FormalContext::attributes_named(const std::vector<std::string>& labels) const {
    AttributeSet s = empty_attributes();
    for (const auto& l : labels) s.set(attribute_index(l));
    return s;
}

ObjectSet FormalContext::objects_named(const std::vector<std::string>& labels) const {
    ObjectSet s = empty_objects();
    for (const auto& l : labels) s.set(object_index(l));
    return s;
}

AttributeSet FormalContext::object_derive(const ObjectSet& a) const {
    AttributeSet r = all_attributes();
    a.for_each([&](std::size_t g) { r &= rows_[g]; });
    return r;
}

ObjectSet FormalContext::attribute_derive(const AttributeSet& b) const {
    ObjectSet r = all_objects();
    b.for_each([&](std::size_t m) { r &= cols_[m]; });
    return r;
}

AttributeSet FormalContext::closure(const AttributeSet& b) const { return object_derive(attribute_derive(b)); }

ObjectSet FormalContext::object_closure(const ObjectSet& a) const { return attribute_derive(object_derive(a)); }

FormalContext FormalContext::induced(const ObjectSet& h, const AttributeSet& n) const {
    std::vector<std::string> objs, atts;
    auto hi = h.indices();
    auto ni = n.indices();
    for (auto g : hi) objs.push_back(objects_[g]);
    for (auto m : ni) atts.push_back(attributes_[m]);
    std::vector<Bitset> inc;
    inc.reserve(hi.size());
    for (auto g : hi) {
        Bitset row(ni.size());
        for (std::size_t j = 0; j < ni.size(); ++j)
            if (rows_[g].test(ni[j])) row.set(j);
        inc.push_back(std::move(row));
    }
    return FormalContext(std::move(objs), std::move(atts), std::move(inc));
}

std::size_t FormalContext::incidence_count() const noexcept {
    std::size_t c = 0;
    for (const auto& r : rows_) c += r.count();
    return c;
}

double FormalContext::density() const {
    if (objects_.empty() || attributes_.empty()) throw InputError("undefined density: empty context");
    return static_cast<double>(incidence_count()) /
           (static_cast<double>(objects_.size()) * static_cast<double>(attributes_.size()));
}

FormalContext FormalContext::complement() const {
    std::vector<Bitset> inc;
    inc.reserve(rows_.size());
    for (const auto& r : rows_) inc.push_back(r.complement());
    return FormalContext(objects_, attributes_, std::move(inc));
}

FormalContext FormalContext::transposed() const { return FormalContext(attributes_, objects_, cols_); }

// ---------------------------------------------------------------------------
// CXT

FormalContext parse_cxt(std::string_view text) {
    std::vector<std::string_view> lines;
    {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto nl = text.find('\n', pos);
            if (nl == std::string_view::npos) nl = text.size();
            auto line = text.substr(pos, nl - pos);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            lines.push_back(line);
            if (nl == text.size()) break;
            pos = nl + 1;
        }
    }
    std::size_t li = 0;
    auto line_no = [&]() { return li + 1; };
    auto next = [&](const char* what) -> std::string_view {
        if (li >= lines.size()) throw ParseError(line_no(), std::string("unexpected end of input, expected ") + what);
        return lines[li++];
    };
    auto parse_count = [&](const char* what) -> std::size_t {
        auto l = next(what);
        std::size_t v = 0;
        if (l.empty()) throw ParseError(li, std::string("expected ") + what);
        for (char c : l) {
            if (c < '0' || c > '9') throw ParseError(li, std::string("malformed ") + what + " '" + std::string(l) + "'");
            v = v * 10 + static_cast<std::size_t>(c - '0');
        }
        return v;
    };

    if (next("header") != "B") throw ParseError(1, "malformed header: expected 'B'");
    // Optional name line; canonical files leave it blank.
    next("blank line");
    std::size_t ng = parse_count("object count");
    std::size_t nm = parse_count("attribute count");
    next("blank line");

    std::vector<std::string> objs, atts;
    for (std::size_t i = 0; i < ng; ++i) objs.emplace_back(next("object label"));
    for (std::size_t i = 0; i < nm; ++i) atts.emplace_back(next("attribute label"));
    std::vector<Bitset> inc;
    for (std::size_t g = 0; g < ng; ++g) {
        auto row = next("incidence row");
        if (row.size() != nm)
            throw ParseError(li, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(nm));
        Bitset b(nm);
        for (std::size_t m = 0; m < nm; ++m) {
            if (row[m] == 'X')
                b.set(m);
            else if (row[m] != '.')
                throw ParseError(li, std::string("illegal row character '") + row[m] + "'");
        }
        inc.push_back(std::move(b));
    }
    for (; li < lines.size(); ++li)
        if (!lines[li].empty()) throw ParseError(li + 1, "count mismatch: trailing content after incidence rows");

    try {
        return FormalContext(std::move(objs), std::move(atts), std::move(inc));
    } catch (const InputError& e) {
        throw ParseError(5, e.what());
    }
}

std::string emit_cxt(const FormalContext& ctx) {
    std::string out = "B\n\n";
    out += std::to_string(ctx.object_count()) + "\n";
    out += std::to_string(ctx.attribute_count()) + "\n\n";
    for (const auto& o : ctx.objects()) out += o + "\n";
    for (const auto& a : ctx.attributes()) out += a + "\n";
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m) out += ctx.incident(g, m) ? 'X' : '.';
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON

FormalContext parse_context_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed context JSON: ") + e.what());
    }
    try {
        auto objs = j.at("objects").get<std::vector<std::string>>();
        auto atts = j.at("attributes").get<std::vector<std::string>>();
        const auto& rows = j.at("incidence");
        if (!rows.is_array() || rows.size() != objs.size())
            throw InputError("context JSON: incidence row count does not match objects");
        std::vector<Bitset> inc;
        for (const auto& r : rows) {
            if (!r.is_array() || r.size() != atts.size())
                throw InputError("context JSON: incidence row width does not match attributes");
            Bitset b(atts.size());
            for (std::size_t m = 0; m < r.size(); ++m) {
                int v = r[m].get<int>();
                if (v == 1)
                    b.set(m);
                else if (v != 0)
                    throw InputError("context JSON: incidence entries must be 0 or 1");
            }
            inc.push_back(std::move(b));
        }
        return FormalContext(std::move(objs), std::move(atts), std::move(inc));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed context JSON: ") + e.what());
    }
}

std::string emit_context_json(const FormalContext& ctx) {
    nlohmann::ordered_json j;
    j["objects"] = ctx.objects();
    j["attributes"] = ctx.attributes();
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        auto r = nlohmann::ordered_json::array();
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m) r.push_back(ctx.incident(g, m) ? 1 : 0);
        rows.push_back(std::move(r));
    }
    j["incidence"] = std::move(rows);
    return j.dump(2) + "\n";
}

FormalContext load_context(const std::string& path) {
    auto text = read_file(path);
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) return parse_context_json(text);
    return parse_cxt(text);
}

}  // namespace lattica
