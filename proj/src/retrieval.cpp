#include "delib/retrieval.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "delib/jsonl.hpp"

namespace delib {

double bm25_term_score(long tf, long df, long n_docs, long doc_len, double avg_doc_len,
                       const Bm25Params& params) {
    if (tf <= 0) return 0.0;
    double idf = std::log((static_cast<double>(n_docs) - df + 0.5) / (df + 0.5) + 1.0);
    double norm = params.k1 * (1.0 - params.b + params.b * doc_len / avg_doc_len);
    return idf * (tf * (params.k1 + 1.0)) / (tf + norm);
}

RetrievalIndex RetrievalIndex::build(std::vector<CodeCommentPair> pairs) {
    if (pairs.empty()) throw std::invalid_argument("empty retrieval corpus");
    RetrievalIndex index;
    index.docs_ = std::move(pairs);
    index.build_postings();
    return index;
}

void RetrievalIndex::build_postings() {
    postings_.clear();
    doc_lengths_.resize(docs_.size());
    long total_len = 0;
    for (size_t d = 0; d < docs_.size(); ++d) {
        std::unordered_map<std::string, int> tf;
        for (const auto& tok : docs_[d].code_tokens) ++tf[tok];
        for (const auto& [term, count] : tf)
            postings_[term].emplace_back(static_cast<int>(d), count);
        doc_lengths_[d] = static_cast<long>(docs_[d].code_tokens.size());
        total_len += doc_lengths_[d];
    }
    for (auto& [term, list] : postings_)
        std::sort(list.begin(), list.end());
    avg_doc_len_ = static_cast<double>(total_len) / static_cast<double>(docs_.size());
}

long RetrievalIndex::doc_len(int doc_id) const {
    if (doc_id < 0 || static_cast<size_t>(doc_id) >= docs_.size())
        throw std::out_of_range("doc_id " + std::to_string(doc_id) + " not in index");
    return doc_lengths_[doc_id];
}

const CodeCommentPair& RetrievalIndex::doc(int doc_id) const {
    if (doc_id < 0 || static_cast<size_t>(doc_id) >= docs_.size())
        throw std::out_of_range("doc_id " + std::to_string(doc_id) + " not in index");
    return docs_[doc_id];
}

double RetrievalIndex::score(const std::vector<std::string>& query_tokens, int doc_id,
                             const Bm25Params& params) const {
    if (doc_id < 0 || static_cast<size_t>(doc_id) >= docs_.size())
        throw std::out_of_range("doc_id " + std::to_string(doc_id) + " not in index");
    std::set<std::string> terms(query_tokens.begin(), query_tokens.end());
    double total = 0.0;
    const long n = static_cast<long>(docs_.size());
    for (const auto& term : terms) {
        auto it = postings_.find(term);
        if (it == postings_.end()) continue;
        const auto& list = it->second;
        auto pos = std::lower_bound(list.begin(), list.end(), std::make_pair(doc_id, 0));
        if (pos == list.end() || pos->first != doc_id) continue;
        total += bm25_term_score(pos->second, static_cast<long>(list.size()), n,
                                 doc_lengths_[doc_id], avg_doc_len_, params);
    }
    return total;
}

RetrievalResult RetrievalIndex::retrieve_top1(const std::vector<std::string>& query_tokens,
                                              const Bm25Params& params,
                                              int exclude_doc_id) const {
    if (docs_.empty()) throw std::logic_error("empty retrieval corpus");
    if (exclude_doc_id >= 0 && docs_.size() == 1 && exclude_doc_id == 0)
        throw std::invalid_argument("retrieve_top1: every document excluded");

    std::vector<double> scores(docs_.size(), 0.0);
    std::set<std::string> terms(query_tokens.begin(), query_tokens.end());
    const long n = static_cast<long>(docs_.size());
    for (const auto& term : terms) {
        auto it = postings_.find(term);
        if (it == postings_.end()) continue;
        const long df = static_cast<long>(it->second.size());
        for (const auto& [doc_id, tf] : it->second)
            scores[doc_id] += bm25_term_score(tf, df, n, doc_lengths_[doc_id], avg_doc_len_, params);
    }

    RetrievalResult best;
    for (size_t d = 0; d < scores.size(); ++d) {
        if (static_cast<int>(d) == exclude_doc_id) continue;
        if (best.doc_id < 0 || scores[d] > best.score) {
            best.doc_id = static_cast<int>(d);
            best.score = scores[d];
        }
    }
    return best;
}

void RetrievalIndex::save(const std::string& path, const std::string& config_hash) const {
    json j;
    j["format_version"] = 1;
    j["kind"] = "bm25-index";
    j["config_hash"] = config_hash;
    json docs = json::array();
    for (const auto& pair : docs_) docs.push_back(pair_to_json(pair));
    j["docs"] = std::move(docs);
    write_file(path, j.dump());
}

RetrievalIndex RetrievalIndex::load(const std::string& path, std::string* config_hash_out) {
    json j = json::parse(read_file(path));
    if (j.value("format_version", 0) != 1 || j.value("kind", "") != "bm25-index")
        throw std::runtime_error(path + ": not a version-1 bm25 index file");
    if (config_hash_out) *config_hash_out = j.value("config_hash", "");
    std::vector<CodeCommentPair> pairs;
    for (const auto& doc : j.at("docs")) pairs.push_back(pair_from_json(doc));
    return build(std::move(pairs));
}

} // namespace delib
