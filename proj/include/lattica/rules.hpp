#pragma once

#include <string>
#include <vector>

#include "lattica/context.hpp"
#include "lattica/lattice.hpp"
#include "lattica/rational.hpp"

namespace lattica {

struct Rule {
    AttributeSet body;
    AttributeSet head;  // disjoint from body
    Rational support;
    Rational confidence;
};

struct RuleBasis {
    std::vector<Rule> rules;
    Rational minsupp;
    Rational minconf;
};

/// supp(A -> B) = supp(A) = |A'| / |G|.
Rational rule_support(const FormalContext& ctx, const AttributeSet& body, const AttributeSet& head);

/// |(A u B)'| / |A'|; InputError("confidence undefined") when A' is empty.
Rational rule_confidence(const FormalContext& ctx, const AttributeSet& body, const AttributeSet& head);

/// Confidence-annotated rules on the cover edges of the minsupp-iceberg:
/// for each cover B1 (upper, smaller intent) / B2 (lower), the rule
/// B1 -> B2 \ B1, kept iff its confidence reaches minconf.
RuleBasis luxenburger_basis(const FormalContext& ctx, const Rational& minsupp, const Rational& minconf,
                            const EnumerationOptions& opts = {});

/// TSV with header "body\thead\tsupport\tconfidence"; attribute names joined by ", ",
/// the empty set written as "{}". Decimals rounded to 4 places.
std::string rules_to_tsv(const RuleBasis& basis, const FormalContext& ctx);
std::string rules_to_json(const RuleBasis& basis, const FormalContext& ctx);

}  // namespace lattica
