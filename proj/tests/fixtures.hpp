#pragma once
// Small contexts shared by the unit tests.

#include <string>
#include <vector>

#include "lattica/context.hpp"

namespace fixtures {

using lattica::FormalContext;

/// Contranominal scale on r, g, b: c lacks r, p lacks g, y lacks b.
inline FormalContext b3() { return FormalContext::from_rows({"c", "p", "y"}, {"r", "g", "b"}, {".XX", "X.X", "XX."}); }

/// Nominal scale on r, g, b, optionally with a "+" object having all three.
inline FormalContext n3(bool plus = false) {
    std::vector<std::string> objs{"1", "2", "3"};
    std::vector<std::string> rows{"X..", ".X.", "..X"};
    if (plus) {
        objs.push_back("+");
        rows.push_back("XXX");
    }
    return FormalContext::from_rows(objs, {"r", "g", "b"}, rows);
}

inline FormalContext b4() {
    return FormalContext::from_rows({"1", "2", "3", "4"}, {"r", "g", "b", "s"}, {".XXX", "X.XX", "XX.X", "XXX."});
}

/// Object i has attributes a..i-th.
inline FormalContext o4() {
    return FormalContext::from_rows({"1", "2", "3", "4"}, {"a", "b", "c", "d"}, {"X...", "XX..", "XXX.", "XXXX"});
}

/// Objects a..d with interval attributes "<=a".."<=d" and ">=a".."">=d".
inline FormalContext i4() {
    return FormalContext::from_rows({"a", "b", "c", "d"}, {"<=a", "<=b", "<=c", "<=d", ">=a", ">=b", ">=c", ">=d"},
                                     {"XXXXX...", ".XXXXX..", "..XXXXX.", "...XXXXX"});
}

/// Crown on k attributes: object i has attributes i and i+1 mod k.
inline FormalContext crown(std::size_t k) {
    std::vector<std::string> objs, atts, rows;
    for (std::size_t i = 0; i < k; ++i) {
        objs.push_back(std::to_string(i + 1));
        atts.push_back(std::string(1, static_cast<char>('a' + i)));
        std::string r(k, '.');
        r[i] = r[(i + 1) % k] = 'X';
        rows.push_back(r);
    }
    return FormalContext::from_rows(objs, atts, rows);
}

/// Three-element chain of concepts.
inline FormalContext chain3() { return FormalContext::from_rows({"0", "1", "2"}, {"a", "b"}, {"..", "X.", "XX"}); }

}  // namespace fixtures
