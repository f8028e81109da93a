#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lattica/context.hpp"
#include "lattica/rational.hpp"

namespace lattica {

struct Period {
    std::string label;
    int start = 0;  // inclusive
    int end = 0;    // inclusive
};

/// Ordered, non-overlapping year ranges. Throws InputError otherwise.
class PeriodSpec {
public:
    PeriodSpec() = default;
    explicit PeriodSpec(std::vector<Period> periods);

    const std::vector<Period>& periods() const noexcept { return periods_; }
    /// Index of the period containing `year`, or size() if none.
    std::size_t locate(int year) const noexcept;

private:
    std::vector<Period> periods_;
};

/// "label:1987-1999,label2:2000-2008" (labels optional: "1987-1999" labels itself).
PeriodSpec parse_periods(std::string_view text);

struct IntentAnnotation {
    AttributeSet intent;
    std::size_t extent_size = 0;  // |B'| within the slice
    Rational support;             // extent_size / |slice|, 0 for an empty slice
    bool closed = false;          // B'' == B within the slice
};

struct PeriodView {
    Period period;
    std::size_t objects = 0;
    bool empty_slice = false;
    std::vector<IntentAnnotation> annotations;
};

/// Re-annotates a fixed list of intents on each period's slice of the
/// context. Every object needs a year inside some period, so the periods
/// partition the objects. An empty slice reports zero supports and no
/// closed intents.
std::vector<PeriodView> temporal_view(const FormalContext& ctx, const std::map<std::string, int>& years,
                                      const std::vector<AttributeSet>& intents, const PeriodSpec& periods);

std::string temporal_to_json(const std::vector<PeriodView>& views, const FormalContext& ctx);

}  // namespace lattica
