#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "delib/corpus.hpp"

namespace delib {

struct Bm25Params {
    double k1 = 1.2;
    double b = 0.75;
};

// Contribution of one matched term. IDF uses the +1-inside-log variant so
// scores stay non-negative.
double bm25_term_score(long tf, long df, long n_docs, long doc_len, double avg_doc_len,
                       const Bm25Params& params);

struct RetrievalResult {
    int doc_id = -1;
    double score = 0.0;
};

// BM25 inverted index over the code token bags of a pair corpus. Immutable
// after build; doc ids follow input order.
class RetrievalIndex {
  public:
    static RetrievalIndex build(std::vector<CodeCommentPair> pairs);

    double score(const std::vector<std::string>& query_tokens, int doc_id,
                 const Bm25Params& params) const;

    // Argmax-scoring document, ties broken by smallest doc_id. Documents with
    // no matching term score 0 and still participate in the argmax.
    // exclude_doc_id (when >= 0) removes one document from consideration.
    RetrievalResult retrieve_top1(const std::vector<std::string>& query_tokens,
                                  const Bm25Params& params, int exclude_doc_id = -1) const;

    size_t n_docs() const { return docs_.size(); }
    double avg_doc_len() const { return avg_doc_len_; }
    long doc_len(int doc_id) const;
    const CodeCommentPair& doc(int doc_id) const;

    void save(const std::string& path, const std::string& config_hash) const;
    static RetrievalIndex load(const std::string& path, std::string* config_hash_out = nullptr);

  private:
    RetrievalIndex() = default;
    void build_postings();

    // term -> (doc_id, term frequency), sorted by doc_id
    std::unordered_map<std::string, std::vector<std::pair<int, int>>> postings_;
    std::vector<long> doc_lengths_;
    double avg_doc_len_ = 0.0;
    std::vector<CodeCommentPair> docs_;
};

} // namespace delib
