#include "lattica/config.hpp"

#include <charconv>
#include <functional>
#include <map>

#include "lattica/error.hpp"

namespace lattica {

namespace {

struct Token {
    std::string text;
    bool quoted = false;
};

struct Value {
    bool array = false;
    std::vector<Token> items;
};

class LineParser {
public:
    LineParser(std::string_view s, std::size_t line) : s_(s), line_(line) {}

    Value value() {
        skip_ws();
        Value v;
        if (peek() == '[') {
            ++i_;
            v.array = true;
            skip_ws();
            if (peek() == ']') {
                ++i_;
            } else {
                while (true) {
                    v.items.push_back(scalar());
                    skip_ws();
                    if (peek() == ',') {
                        ++i_;
                        skip_ws();
                        if (peek() == ']') {
                            ++i_;
                            break;
                        }
                        continue;
                    }
                    if (peek() == ']') {
                        ++i_;
                        break;
                    }
                    throw ParseError(line_, "expected ',' or ']' in array");
                }
            }
        } else {
            v.items.push_back(scalar());
        }
        skip_ws();
        if (i_ < s_.size() && s_[i_] != '#') throw ParseError(line_, "unexpected text after value");
        return v;
    }

private:
    char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
    void skip_ws() {
        while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t' || s_[i_] == '\r')) ++i_;
    }
    Token scalar() {
        skip_ws();
        Token t;
        if (peek() == '"') {
            t.quoted = true;
            ++i_;
            while (true) {
                if (i_ >= s_.size()) throw ParseError(line_, "unterminated string");
                char c = s_[i_++];
                if (c == '"') break;
                if (c == '\\') {
                    if (i_ >= s_.size()) throw ParseError(line_, "unterminated escape");
                    char e = s_[i_++];
                    switch (e) {
                        case 'n': t.text += '\n'; break;
                        case 't': t.text += '\t'; break;
                        case '"': t.text += '"'; break;
                        case '\\': t.text += '\\'; break;
                        default: throw ParseError(line_, std::string("unknown escape \\") + e);
                    }
                } else {
                    t.text += c;
                }
            }
            return t;
        }
        while (i_ < s_.size() && s_[i_] != ',' && s_[i_] != ']' && s_[i_] != ' ' && s_[i_] != '\t' &&
               s_[i_] != '#' && s_[i_] != '\r')
            t.text += s_[i_++];
        if (t.text.empty()) throw ParseError(line_, "missing value");
        return t;
    }

    std::string_view s_;
    std::size_t line_;
    std::size_t i_ = 0;
};

const Token& single(const Value& v, std::size_t line, const std::string& key) {
    if (v.array || v.items.size() != 1) throw ParseError(line, "'" + key + "' expects a single value");
    return v.items[0];
}

std::string as_string(const Token& t, std::size_t line, const std::string& key) {
    if (!t.quoted) throw ParseError(line, "'" + key + "' expects a quoted string");
    return t.text;
}

double as_double(const Token& t, std::size_t line, const std::string& key) {
    double v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (t.quoted || ec != std::errc() || p != t.text.data() + t.text.size())
        throw ParseError(line, "'" + key + "' expects a number");
    return v;
}

std::uint64_t as_uint(const Token& t, std::size_t line, const std::string& key) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (t.quoted || ec != std::errc() || p != t.text.data() + t.text.size())
        throw ParseError(line, "'" + key + "' expects a non-negative integer");
    return v;
}

bool as_bool(const Token& t, std::size_t line, const std::string& key) {
    if (!t.quoted && t.text == "true") return true;
    if (!t.quoted && t.text == "false") return false;
    throw ParseError(line, "'" + key + "' expects true or false");
}

Rational as_rational(const Token& t, std::size_t line, const std::string& key) {
    try {
        return Rational::parse(t.text);
    } catch (const InputError& e) {
        throw ParseError(line, "'" + key + "': " + e.what());
    }
}

using Setter = std::function<void(PipelineConfig&, const Value&, std::size_t, const std::string&)>;

const std::map<std::string, Setter, std::less<>>& setters() {
    auto str = [](std::string PipelineConfig::*f) -> Setter {
        return [f](PipelineConfig& c, const Value& v, std::size_t l, const std::string& k) {
            c.*f = as_string(single(v, l, k), l, k);
        };
    };
    auto str_list = [](std::vector<std::string> PipelineConfig::*f) -> Setter {
        return [f](PipelineConfig& c, const Value& v, std::size_t l, const std::string& k) {
            if (!v.array) throw ParseError(l, "'" + k + "' expects an array");
            (c.*f).clear();
            for (const auto& t : v.items) (c.*f).push_back(as_string(t, l, k));
        };
    };
    auto dbl = [](double PipelineConfig::*f) -> Setter {
        return [f](PipelineConfig& c, const Value& v, std::size_t l, const std::string& k) {
            c.*f = as_double(single(v, l, k), l, k);
        };
    };
    auto size = [](std::size_t PipelineConfig::*f) -> Setter {
        return [f](PipelineConfig& c, const Value& v, std::size_t l, const std::string& k) {
            c.*f = static_cast<std::size_t>(as_uint(single(v, l, k), l, k));
        };
    };
    auto flag = [](bool PipelineConfig::*f) -> Setter {
        return [f](PipelineConfig& c, const Value& v, std::size_t l, const std::string& k) {
            c.*f = as_bool(single(v, l, k), l, k);
        };
    };
    auto rat = [](Rational PipelineConfig::*f) -> Setter {
        return [f](PipelineConfig& c, const Value& v, std::size_t l, const std::string& k) {
            c.*f = as_rational(single(v, l, k), l, k);
        };
    };
    static const std::map<std::string, Setter, std::less<>> table{
        {"matrix", str(&PipelineConfig::matrix)},
        {"terms", str(&PipelineConfig::terms)},
        {"corpus", str(&PipelineConfig::corpus)},
        {"context", str(&PipelineConfig::context)},
        {"entities", str(&PipelineConfig::entities)},
        {"entity", str(&PipelineConfig::entity)},
        {"report_entities", str_list(&PipelineConfig::report_entities)},
        {"labels", str(&PipelineConfig::labels)},
        {"delta", dbl(&PipelineConfig::delta)},
        {"deltas",
         [](PipelineConfig& c, const Value& v, std::size_t l, const std::string& k) {
             if (!v.array) throw ParseError(l, "'" + k + "' expects an array");
             c.deltas.clear();
             for (const auto& t : v.items) c.deltas.push_back(as_double(t, l, k));
         }},
        {"topn", size(&PipelineConfig::topn)},
        {"ns",
         [](PipelineConfig& c, const Value& v, std::size_t l, const std::string& k) {
             if (!v.array) throw ParseError(l, "'" + k + "' expects an array");
             c.ns.clear();
             for (const auto& t : v.items) c.ns.push_back(static_cast<std::size_t>(as_uint(t, l, k)));
         }},
        {"normalize", flag(&PipelineConfig::normalize)},
        {"p", size(&PipelineConfig::p)},
        {"q", size(&PipelineConfig::q)},
        {"minsupp", rat(&PipelineConfig::minsupp)},
        {"minconf", rat(&PipelineConfig::minconf)},
        {"families", str_list(&PipelineConfig::families)},
        {"periods", str(&PipelineConfig::periods)},
        {"attribute", str(&PipelineConfig::attribute)},
        {"kind", str(&PipelineConfig::kind)},
        {"format", str(&PipelineConfig::format)},
        {"tulip", flag(&PipelineConfig::tulip)},
        {"tulip_attributes", str_list(&PipelineConfig::tulip_attributes)},
        {"omit_bottom", flag(&PipelineConfig::omit_bottom)},
        {"seed",
         [](PipelineConfig& c, const Value& v, std::size_t l, const std::string& k) {
             c.seed = as_uint(single(v, l, k), l, k);
         }},
        {"width", dbl(&PipelineConfig::width)},
        {"height", dbl(&PipelineConfig::height)},
        {"max_concepts", size(&PipelineConfig::max_concepts)},
        {"max_motif_attributes", size(&PipelineConfig::max_motif_attributes)},
        {"out", str(&PipelineConfig::out)},
    };
    return table;
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out + "\"";
}

std::string number(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    std::string s(buf, p);
    if (s.find_first_of(".eE") == std::string::npos && s.find("inf") == std::string::npos &&
        s.find("nan") == std::string::npos)
        s += ".0";
    return s;
}

}  // namespace

PipelineConfig parse_config(std::string_view text) {
    PipelineConfig cfg;
    std::size_t pos = 0, line = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        auto raw = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line;
        auto b = raw.find_first_not_of(" \t\r");
        if (b == std::string_view::npos || raw[b] == '#') continue;
        if (raw[b] == '[') throw ParseError(line, "tables are not supported; use top-level keys");
        auto eq = raw.find('=');
        if (eq == std::string_view::npos) throw ParseError(line, "expected 'key = value'");
        auto key_view = raw.substr(b, eq - b);
        while (!key_view.empty() && (key_view.back() == ' ' || key_view.back() == '\t')) key_view.remove_suffix(1);
        std::string key(key_view);
        auto it = setters().find(key);
        if (it == setters().end()) throw ParseError(line, "unknown key '" + key + "'");
        LineParser lp(raw.substr(eq + 1), line);
        it->second(cfg, lp.value(), line, key);
    }
    return cfg;
}

std::string emit_config(const PipelineConfig& c) {
    std::string out;
    auto kv = [&](const std::string& k, const std::string& v) { out += k + " = " + v + "\n"; };
    auto strs = [&](const std::vector<std::string>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + quote(v[i]);
        return s + "]";
    };
    kv("matrix", quote(c.matrix));
    kv("terms", quote(c.terms));
    kv("corpus", quote(c.corpus));
    kv("context", quote(c.context));
    kv("entities", quote(c.entities));
    kv("entity", quote(c.entity));
    kv("report_entities", strs(c.report_entities));
    kv("labels", quote(c.labels));
    kv("delta", number(c.delta));
    {
        std::string s = "[";
        for (std::size_t i = 0; i < c.deltas.size(); ++i) s += (i ? ", " : "") + number(c.deltas[i]);
        kv("deltas", s + "]");
    }
    kv("topn", std::to_string(c.topn));
    {
        std::string s = "[";
        for (std::size_t i = 0; i < c.ns.size(); ++i) s += (i ? ", " : "") + std::to_string(c.ns[i]);
        kv("ns", s + "]");
    }
    kv("normalize", c.normalize ? "true" : "false");
    kv("p", std::to_string(c.p));
    kv("q", std::to_string(c.q));
    kv("minsupp", quote(c.minsupp.str()));
    kv("minconf", quote(c.minconf.str()));
    kv("families", strs(c.families));
    kv("periods", quote(c.periods));
    kv("attribute", quote(c.attribute));
    kv("kind", quote(c.kind));
    kv("format", quote(c.format));
    kv("tulip", c.tulip ? "true" : "false");
    kv("tulip_attributes", strs(c.tulip_attributes));
    kv("omit_bottom", c.omit_bottom ? "true" : "false");
    kv("seed", std::to_string(c.seed));
    kv("width", number(c.width));
    kv("height", number(c.height));
    kv("max_concepts", std::to_string(c.max_concepts));
    kv("max_motif_attributes", std::to_string(c.max_motif_attributes));
    kv("out", quote(c.out));
    return out;
}

}  // namespace lattica
