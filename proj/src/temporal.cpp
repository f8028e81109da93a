#include "lattica/temporal.hpp"

#include <charconv>
#include <set>

#include <json.hpp>

#include "lattica/error.hpp"

namespace lattica {

PeriodSpec::PeriodSpec(std::vector<Period> periods) : periods_(std::move(periods)) {
    std::set<std::string> labels;
    for (std::size_t i = 0; i < periods_.size(); ++i) {
        const auto& p = periods_[i];
        if (p.start > p.end) throw InputError("period '" + p.label + "' ends before it starts");
        if (!labels.insert(p.label).second) throw InputError("duplicate period label '" + p.label + "'");
        if (i > 0 && periods_[i - 1].end >= p.start)
            throw InputError("periods '" + periods_[i - 1].label + "' and '" + p.label + "' overlap or are unordered");
    }
}

std::size_t PeriodSpec::locate(int year) const noexcept {
    for (std::size_t i = 0; i < periods_.size(); ++i)
        if (periods_[i].start <= year && year <= periods_[i].end) return i;
    return periods_.size();
}

namespace {

int parse_year(std::string_view s, std::string_view whole) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw InputError("invalid period '" + std::string(whole) + "'");
    return v;
}

}  // namespace

PeriodSpec parse_periods(std::string_view text) {
    std::vector<Period> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        auto item = text.substr(pos, comma - pos);
        pos = comma + 1;
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (item.empty()) continue;
        Period p;
        auto range = item;
        if (auto colon = item.rfind(':'); colon != std::string_view::npos) {
            p.label = std::string(item.substr(0, colon));
            range = item.substr(colon + 1);
        }
        auto dash = range.find('-', 1);
        if (dash == std::string_view::npos) throw InputError("invalid period '" + std::string(item) + "'");
        p.start = parse_year(range.substr(0, dash), item);
        p.end = parse_year(range.substr(dash + 1), item);
        if (p.label.empty()) p.label = std::string(range);
        out.push_back(std::move(p));
    }
    if (out.empty()) throw InputError("no periods given");
    return PeriodSpec(std::move(out));
}

std::vector<PeriodView> temporal_view(const FormalContext& ctx, const std::map<std::string, int>& years,
                                      const std::vector<AttributeSet>& intents, const PeriodSpec& periods) {
    const std::size_t np = periods.periods().size();
    std::vector<ObjectSet> slices(np, ctx.empty_objects());
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        auto it = years.find(ctx.objects()[g]);
        if (it == years.end()) throw InputError("object '" + ctx.objects()[g] + "' has no year");
        auto p = periods.locate(it->second);
        if (p == np)
            throw InputError("year " + std::to_string(it->second) + " of object '" + ctx.objects()[g] +
                             "' lies outside every period");
        slices[p].set(g);
    }
    std::vector<PeriodView> out;
    for (std::size_t p = 0; p < np; ++p) {
        PeriodView v;
        v.period = periods.periods()[p];
        v.objects = slices[p].count();
        v.empty_slice = v.objects == 0;
        for (const auto& b : intents) {
            if (b.size() != ctx.attribute_count()) throw InputError("intent does not match the context");
            IntentAnnotation a;
            a.intent = b;
            ObjectSet ext = ctx.attribute_derive(b) & slices[p];
            a.extent_size = ext.count();
            if (!v.empty_slice) {
                a.support = Rational(a.extent_size, v.objects);
                // B'' inside the slice: attributes shared by all of ext, or M when ext is empty
                a.closed = ctx.object_derive(ext) == b;
            }
            v.annotations.push_back(std::move(a));
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::string temporal_to_json(const std::vector<PeriodView>& views, const FormalContext& ctx) {
    using J = nlohmann::ordered_json;
    J arr = J::array();
    for (const auto& v : views) {
        J p;
        p["period"] = v.period.label;
        p["start"] = v.period.start;
        p["end"] = v.period.end;
        p["objects"] = v.objects;
        if (v.empty_slice) p["diagnostic"] = "empty slice";
        J ann = J::array();
        for (const auto& a : v.annotations) {
            J e;
            J in = J::array();
            a.intent.for_each([&](std::size_t m) { in.push_back(ctx.attributes()[m]); });
            e["intent"] = std::move(in);
            e["extent_size"] = a.extent_size;
            e["support"] = a.support.str();
            e["support_decimal"] = a.support.decimal(4);
            e["closed"] = a.closed;
            ann.push_back(std::move(e));
        }
        p["annotations"] = std::move(ann);
        arr.push_back(std::move(p));
    }
    return arr.dump(2) + "\n";
}

}  // namespace lattica
