#include "delib/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace delib {

namespace {

const std::set<std::string>& java_reserved() {
    static const std::set<std::string> words = {
        "abstract", "assert",    "boolean",  "break",      "byte",   "case",       "catch",
        "char",     "class",     "const",    "continue",   "default", "do",        "double",
        "else",     "enum",      "extends",  "final",      "finally", "float",     "for",
        "goto",     "if",        "implements", "import",   "instanceof", "int",    "interface",
        "long",     "native",    "new",      "package",    "private", "protected", "public",
        "return",   "short",     "static",   "strictfp",   "super",  "switch",     "synchronized",
        "this",     "throw",     "throws",   "transient",  "try",    "void",       "volatile",
        "while",    "true",      "false",    "null"};
    return words;
}

const std::set<std::string>& python_reserved() {
    static const std::set<std::string> words = {
        "False", "None",  "True",   "and",    "as",     "assert", "async",  "await",
        "break", "class", "continue", "def",  "del",    "elif",   "else",   "except",
        "finally", "for", "from",   "global", "if",     "import", "in",     "is",
        "lambda", "nonlocal", "not", "or",    "pass",   "raise",  "return", "try",
        "while", "with",  "yield",  "self"};
    return words;
}

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) { return is_upper(c) || is_lower(c) || c == '_'; }
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

std::string to_lower(std::string s) {
    for (char& c : s)
        if (is_upper(c)) c = static_cast<char>(c - 'A' + 'a');
    return s;
}

} // namespace

Language language_from_string(const std::string& s) {
    if (s == "java") return Language::Java;
    if (s == "python") return Language::Python;
    if (s == "generic") return Language::Generic;
    throw std::invalid_argument("unknown language: " + s);
}

std::string language_to_string(Language lang) {
    switch (lang) {
        case Language::Java: return "java";
        case Language::Python: return "python";
        case Language::Generic: return "generic";
    }
    return "generic";
}

bool is_identifier_token(const std::string& token) {
    if (token.empty() || !is_ident_start(token[0])) return false;
    return std::all_of(token.begin(), token.end(), [](char c) { return is_ident_char(c); });
}

bool is_reserved_word(const std::string& token, Language lang) {
    switch (lang) {
        case Language::Java: return java_reserved().count(token) > 0;
        case Language::Python: return python_reserved().count(token) > 0;
        case Language::Generic:
            return java_reserved().count(token) > 0 || python_reserved().count(token) > 0;
    }
    return false;
}

std::vector<std::string> split_identifier(const std::string& token) {
    if (token.empty()) throw std::invalid_argument("split_identifier: empty token");
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            out.push_back(to_lower(cur));
            cur.clear();
        }
    };
    const size_t n = token.size();
    for (size_t i = 0; i < n; ++i) {
        char c = token[i];
        if (c == '_') { // snake_case separator, dropped
            flush();
            continue;
        }
        if (!cur.empty()) {
            char prev = cur.back();
            bool camel_boundary = (is_lower(prev) || is_digit(prev)) && is_upper(c);
            // an uppercase run ends one character before a following lowercase
            bool acronym_boundary =
                is_upper(prev) && is_upper(c) && i + 1 < n && is_lower(token[i + 1]);
            if (camel_boundary || acronym_boundary) flush();
        }
        cur.push_back(c);
    }
    flush();
    return out;
}

std::vector<std::string> extract_keywords(const std::vector<std::string>& code_tokens,
                                          Language lang) {
    if (code_tokens.empty()) throw std::invalid_argument("extract_keywords: empty code");
    std::vector<std::string> out;
    for (const auto& tok : code_tokens) {
        if (!is_identifier_token(tok) || is_reserved_word(tok, lang)) continue;
        for (auto& sub : split_identifier(tok)) out.push_back(std::move(sub));
    }
    return out;
}

std::vector<std::string> tokenize_code(const std::string& code) {
    std::vector<std::string> out;
    const size_t n = code.size();
    size_t i = 0;
    while (i < n) {
        char c = code[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (is_ident_start(c)) {
            size_t j = i + 1;
            while (j < n && is_ident_char(code[j])) ++j;
            out.push_back(code.substr(i, j - i));
            i = j;
        } else if (is_digit(c)) {
            size_t j = i + 1;
            while (j < n && is_ident_char(code[j])) ++j;
            out.push_back(code.substr(i, j - i));
            i = j;
        } else {
            out.push_back(std::string(1, c));
            ++i;
        }
    }
    return out;
}

std::vector<std::string> tokenize_comment(const std::string& comment) {
    std::vector<std::string> out;
    std::istringstream in(comment);
    std::string word;
    while (in >> word) out.push_back(to_lower(word));
    return out;
}

std::vector<std::string> subtokenize(const std::vector<std::string>& code_tokens) {
    std::vector<std::string> out;
    out.reserve(code_tokens.size());
    for (const auto& tok : code_tokens) {
        if (is_identifier_token(tok)) {
            for (auto& sub : split_identifier(tok)) out.push_back(std::move(sub));
        } else {
            out.push_back(tok);
        }
    }
    return out;
}

Vocabulary::Vocabulary() {
    add("<pad>");
    add("<unk>");
    add("<bos>");
    add("<eos>");
}

void Vocabulary::add(const std::string& token) {
    token_to_id_.emplace(token, static_cast<int>(id_to_token_.size()));
    id_to_token_.push_back(token);
}

Vocabulary Vocabulary::build(const std::vector<std::vector<std::string>>& corpus,
                             size_t max_size) {
    if (max_size <= 4) throw std::invalid_argument("Vocabulary::build: max_size must exceed 4");
    std::unordered_map<std::string, long> freq;
    for (const auto& seq : corpus)
        for (const auto& tok : seq) ++freq[tok];
    std::vector<std::pair<std::string, long>> ranked(freq.begin(), freq.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    Vocabulary vocab;
    for (const auto& [tok, count] : ranked) {
        (void)count;
        if (vocab.size() >= max_size) break;
        if (!vocab.contains(tok)) vocab.add(tok);
    }
    return vocab;
}

int Vocabulary::id_of(const std::string& token) const {
    auto it = token_to_id_.find(token);
    return it == token_to_id_.end() ? kUnk : it->second;
}

const std::string& Vocabulary::token_of(int id) const {
    if (id < 0 || static_cast<size_t>(id) >= id_to_token_.size())
        throw std::out_of_range("Vocabulary::token_of: id " + std::to_string(id));
    return id_to_token_[id];
}

bool Vocabulary::contains(const std::string& token) const {
    return token_to_id_.count(token) > 0;
}

void Vocabulary::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    for (size_t id = 4; id < id_to_token_.size(); ++id) out << id_to_token_[id] << "\n";
}

Vocabulary Vocabulary::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Vocabulary vocab;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        vocab.add(line);
    }
    return vocab;
}

std::vector<int> encode(const std::vector<std::string>& tokens, const Vocabulary& vocab,
                        int limit, bool add_bos_eos) {
    if (limit < 1) throw std::invalid_argument("encode: limit must be >= 1");
    std::vector<int> ids;
    size_t take = std::min(tokens.size(), static_cast<size_t>(limit));
    ids.reserve(take + 2);
    if (add_bos_eos) ids.push_back(Vocabulary::kBos);
    for (size_t i = 0; i < take; ++i) ids.push_back(vocab.id_of(tokens[i]));
    if (add_bos_eos) ids.push_back(Vocabulary::kEos);
    return ids;
}

std::vector<std::string> decode(const std::vector<int>& ids, const Vocabulary& vocab) {
    std::vector<std::string> out;
    for (int id : ids) {
        if (id == Vocabulary::kPad || id == Vocabulary::kBos || id == Vocabulary::kEos) continue;
        out.push_back(vocab.token_of(id));
    }
    return out;
}

CodeCommentPair make_pair(const std::string& code, const std::string& comment,
                          const std::string& source_id, Language lang) {
    CodeCommentPair pair;
    pair.source_id = source_id;
    auto raw_tokens = tokenize_code(code);
    if (raw_tokens.empty()) throw std::invalid_argument("make_pair: code has no tokens");
    pair.keyword_tokens = extract_keywords(raw_tokens, lang);
    pair.code_tokens = subtokenize(raw_tokens);
    pair.comment_tokens = tokenize_comment(comment);
    if (pair.comment_tokens.empty()) throw std::invalid_argument("make_pair: comment has no tokens");
    return pair;
}

nlohmann::json pair_to_json(const CodeCommentPair& pair) {
    nlohmann::json j;
    j["code_tokens"] = pair.code_tokens;
    j["keyword_tokens"] = pair.keyword_tokens;
    j["comment_tokens"] = pair.comment_tokens;
    if (!pair.source_id.empty()) j["id"] = pair.source_id;
    return j;
}

CodeCommentPair pair_from_json(const nlohmann::json& j) {
    CodeCommentPair pair;
    pair.code_tokens = j.at("code_tokens").get<std::vector<std::string>>();
    pair.keyword_tokens = j.value("keyword_tokens", std::vector<std::string>{});
    pair.comment_tokens = j.at("comment_tokens").get<std::vector<std::string>>();
    pair.source_id = j.value("id", "");
    return pair;
}

} // namespace delib
