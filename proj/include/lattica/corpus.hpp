#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lattica {

class WeightMatrix;

struct Document {
    std::string id;
    std::vector<std::string> tokens;
    std::optional<int> year;
};

/// Tokenized documents plus the lexicographically ordered vocabulary of
/// every term occurring in at least one document. Tokenization is the
/// caller's job.
class Corpus {
public:
    explicit Corpus(std::vector<Document> documents);

    const std::vector<Document>& documents() const noexcept { return docs_; }
    const std::vector<std::string>& vocabulary() const noexcept { return vocab_; }

    std::size_t document_index(std::string_view id) const;
    std::size_t term_index(std::string_view term) const;

    /// Term counts over the vocabulary.
    std::vector<std::size_t> bow(std::string_view doc_id) const;
    /// bow(d)_s / |bow(d)|; InputError("tf undefined") for an empty document.
    double tf(std::string_view term, std::string_view doc_id) const;
    /// ln(|D| / df(s)); InputError for a term outside the vocabulary.
    double idf(std::string_view term) const;
    std::vector<double> tfidf(std::string_view doc_id) const;

    /// Documents x terms tf-idf matrix. Empty documents yield zero rows.
    WeightMatrix tfidf_matrix() const;

private:
    std::vector<Document> docs_;
    std::vector<std::string> vocab_;
    std::map<std::string, std::size_t, std::less<>> term_ix_;
    std::map<std::string, std::size_t, std::less<>> doc_ix_;
    std::vector<std::size_t> doc_freq_;
};

/// JSON-lines reader: one {"id": str, "tokens": [str,...], "year": int?} per line.
Corpus parse_corpus_jsonl(std::string_view text);

}  // namespace lattica
