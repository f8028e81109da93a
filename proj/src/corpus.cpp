#include "lattica/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "lattica/error.hpp"
#include "lattica/scaling.hpp"

namespace lattica {

Corpus::Corpus(std::vector<Document> documents) : docs_(std::move(documents)) {
    std::set<std::string> terms;
    for (std::size_t i = 0; i < docs_.size(); ++i) {
        if (!doc_ix_.emplace(docs_[i].id, i).second) throw InputError("duplicate document id: " + docs_[i].id);
        terms.insert(docs_[i].tokens.begin(), docs_[i].tokens.end());
    }
    vocab_.assign(terms.begin(), terms.end());
    for (std::size_t i = 0; i < vocab_.size(); ++i) term_ix_.emplace(vocab_[i], i);
    doc_freq_.assign(vocab_.size(), 0);
    for (const auto& d : docs_) {
        std::set<std::string_view> seen(d.tokens.begin(), d.tokens.end());
        for (auto t : seen) ++doc_freq_[term_ix_.find(t)->second];
    }
}

std::size_t Corpus::document_index(std::string_view id) const {
    auto it = doc_ix_.find(id);
    if (it == doc_ix_.end()) throw InputError("unknown document id: " + std::string(id));
    return it->second;
}

std::size_t Corpus::term_index(std::string_view term) const {
    auto it = term_ix_.find(term);
    if (it == term_ix_.end()) throw InputError("term not in vocabulary: " + std::string(term));
    return it->second;
}

std::vector<std::size_t> Corpus::bow(std::string_view doc_id) const {
    const auto& d = docs_[document_index(doc_id)];
    std::vector<std::size_t> v(vocab_.size(), 0);
    for (const auto& t : d.tokens) ++v[term_ix_.find(t)->second];
    return v;
}

double Corpus::tf(std::string_view term, std::string_view doc_id) const {
    const auto& d = docs_[document_index(doc_id)];
    if (d.tokens.empty()) throw InputError("tf undefined: empty document " + d.id);
    auto hits = std::count(d.tokens.begin(), d.tokens.end(), term);
    return static_cast<double>(hits) / static_cast<double>(d.tokens.size());
}

double Corpus::idf(std::string_view term) const {
    std::size_t df = doc_freq_[term_index(term)];
    return std::log(static_cast<double>(docs_.size()) / static_cast<double>(df));
}

std::vector<double> Corpus::tfidf(std::string_view doc_id) const {
    const auto& d = docs_[document_index(doc_id)];
    if (d.tokens.empty()) throw InputError("tf undefined: empty document " + d.id);
    auto counts = bow(doc_id);
    std::vector<double> v(vocab_.size(), 0.0);
    const double len = static_cast<double>(d.tokens.size());
    for (std::size_t s = 0; s < vocab_.size(); ++s) {
        if (counts[s] == 0) continue;
        v[s] = static_cast<double>(counts[s]) / len *
               std::log(static_cast<double>(docs_.size()) / static_cast<double>(doc_freq_[s]));
    }
    return v;
}

WeightMatrix Corpus::tfidf_matrix() const {
    std::vector<std::string> rows;
    std::vector<double> values;
    values.reserve(docs_.size() * vocab_.size());
    for (const auto& d : docs_) {
        rows.push_back(d.id);
        if (d.tokens.empty()) {
            values.insert(values.end(), vocab_.size(), 0.0);
            continue;
        }
        auto v = tfidf(d.id);
        values.insert(values.end(), v.begin(), v.end());
    }
    return WeightMatrix(std::move(rows), vocab_, std::move(values));
}

Corpus parse_corpus_jsonl(std::string_view text) {
    std::vector<Document> docs;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        auto line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(line_no, std::string("invalid JSON: ") + e.what());
        }
        if (!j.is_object() || !j.contains("id") || !j["id"].is_string())
            throw ParseError(line_no, "document needs a string \"id\"");
        if (!j.contains("tokens") || !j["tokens"].is_array())
            throw ParseError(line_no, "document needs a \"tokens\" array");
        Document d;
        d.id = j["id"].get<std::string>();
        for (const auto& t : j["tokens"]) {
            if (!t.is_string()) throw ParseError(line_no, "tokens must be strings");
            d.tokens.push_back(t.get<std::string>());
        }
        if (j.contains("year") && !j["year"].is_null()) {
            if (!j["year"].is_number_integer()) throw ParseError(line_no, "\"year\" must be an integer");
            d.year = j["year"].get<int>();
        }
        docs.push_back(std::move(d));
    }
    return Corpus(std::move(docs));
}

}  // namespace lattica
