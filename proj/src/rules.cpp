#include "lattica/rules.hpp"

#include <algorithm>

#include <json.hpp>

#include "lattica/error.hpp"
#include "lattica/reduction.hpp"

namespace lattica {

Rational rule_support(const FormalContext& ctx, const AttributeSet& body, const AttributeSet&) {
    return intent_support(ctx, body);
}

Rational rule_confidence(const FormalContext& ctx, const AttributeSet& body, const AttributeSet& head) {
    auto a = ctx.attribute_derive(body).count();
    if (a == 0) throw InputError("confidence undefined: rule body has no support");
    return Rational(ctx.attribute_derive(body | head).count(), a);
}

RuleBasis luxenburger_basis(const FormalContext& ctx, const Rational& minsupp, const Rational& minconf,
                            const EnumerationOptions& opts) {
    if (minconf > Rational(1, 1)) throw InputError("minimum confidence must lie in [0,1]");
    auto ice = titanic_iceberg(ctx, minsupp, opts);
    RuleBasis basis{{}, minsupp, minconf};
    for (const auto& [lower, upper] : ice.covers()) {
        const auto& body = ice.intents()[upper];
        const auto& larger = ice.intents()[lower];
        Rational conf = ice.supports()[lower] / ice.supports()[upper];
        if (conf < minconf) continue;
        basis.rules.push_back(Rule{body, larger - body, ice.supports()[upper], conf});
    }
    std::stable_sort(basis.rules.begin(), basis.rules.end(), [](const Rule& a, const Rule& b) {
        if (a.body != b.body) return lectic_less(a.body, b.body);
        return lectic_less(a.head, b.head);
    });
    return basis;
}

namespace {

std::string names(const AttributeSet& s, const FormalContext& ctx) {
    if (s.none()) return "{}";
    std::string out;
    s.for_each([&](std::size_t m) {
        if (!out.empty()) out += ", ";
        out += ctx.attributes()[m];
    });
    return out;
}

nlohmann::ordered_json label_array(const AttributeSet& s, const FormalContext& ctx) {
    auto a = nlohmann::ordered_json::array();
    s.for_each([&](std::size_t m) { a.push_back(ctx.attributes()[m]); });
    return a;
}

}  // namespace

std::string rules_to_tsv(const RuleBasis& basis, const FormalContext& ctx) {
    std::string out = "body\thead\tsupport\tconfidence\n";
    for (const auto& r : basis.rules)
        out += names(r.body, ctx) + "\t" + names(r.head, ctx) + "\t" + r.support.decimal(4) + "\t" +
               r.confidence.decimal(4) + "\n";
    return out;
}

std::string rules_to_json(const RuleBasis& basis, const FormalContext& ctx) {
    nlohmann::ordered_json j;
    j["minsupp"] = basis.minsupp.str();
    j["minconf"] = basis.minconf.str();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : basis.rules) {
        nlohmann::ordered_json x;
        x["body"] = label_array(r.body, ctx);
        x["head"] = label_array(r.head, ctx);
        x["support"] = r.support.str();
        x["support_decimal"] = r.support.decimal(4);
        x["confidence"] = r.confidence.str();
        x["confidence_decimal"] = r.confidence.decimal(4);
        arr.push_back(std::move(x));
    }
    j["rules"] = std::move(arr);
    return j.dump(2) + "\n";
}

}  // namespace lattica
