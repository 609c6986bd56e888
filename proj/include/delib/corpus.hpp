#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace delib {

enum class Language { Java, Python, Generic };

Language language_from_string(const std::string& s);
std::string language_to_string(Language lang);

// One training/eval example. code_tokens are subtoken-split, keyword_tokens
// are the identifier subtokens, comment_tokens are lowercased words.
struct CodeCommentPair {
    std::vector<std::string> code_tokens;
    std::vector<std::string> keyword_tokens;
    std::vector<std::string> comment_tokens;
    std::string source_id;
};

struct LengthLimits {
    int max_code_len = 300;
    int max_comment_len = 30;
};

// Bidirectional token<->id map with PAD/UNK/BOS/EOS pinned to ids 0..3.
class Vocabulary {
  public:
    static constexpr int kPad = 0;
    static constexpr int kUnk = 1;
    static constexpr int kBos = 2;
    static constexpr int kEos = 3;

    Vocabulary();

    // Tokens ranked by frequency, ties broken lexicographically, capped at
    // max_size including the four specials. max_size must exceed 4.
    static Vocabulary build(const std::vector<std::vector<std::string>>& corpus, size_t max_size);

    int id_of(const std::string& token) const; // kUnk for out-of-vocabulary
    const std::string& token_of(int id) const;
    bool contains(const std::string& token) const;
    size_t size() const { return id_to_token_.size(); }

    // Plain text, one token per line, line number = id - 4.
    void save(const std::string& path) const;
    static Vocabulary load(const std::string& path);

  private:
    std::unordered_map<std::string, int> token_to_id_;
    std::vector<std::string> id_to_token_;
    void add(const std::string& token);
};

// True for tokens of the form [A-Za-z_][A-Za-z0-9_]*.
bool is_identifier_token(const std::string& token);
bool is_reserved_word(const std::string& token, Language lang);

// Splits CamelCase / snake_case identifiers into lowercase subtokens. An
// uppercase run ends one character before a following lowercase letter
// ("parseHTTPResponse" -> parse, http, response); digits attach to the
// preceding run. Non-identifier tokens pass through as a singleton.
std::vector<std::string> split_identifier(const std::string& token);

// Subtokens of identifier-class tokens, reserved words excluded, duplicates
// preserved in first-occurrence order.
std::vector<std::string> extract_keywords(const std::vector<std::string>& code_tokens, Language lang);

// Lexical scan: identifiers, numbers, and single punctuation characters.
std::vector<std::string> tokenize_code(const std::string& code);

// Whitespace-tokenized and lowercased.
std::vector<std::string> tokenize_comment(const std::string& comment);

// Applies split_identifier to every identifier-class token in the sequence.
std::vector<std::string> subtokenize(const std::vector<std::string>& code_tokens);

// Unknown tokens map to kUnk; the sequence is truncated to `limit` content
// tokens before the optional BOS/EOS wrapping.
std::vector<int> encode(const std::vector<std::string>& tokens, const Vocabulary& vocab, int limit,
                        bool add_bos_eos);

// Inverse of encode for surface tokens: PAD/BOS/EOS are stripped, UNK decodes
// to "<unk>".
std::vector<std::string> decode(const std::vector<int>& ids, const Vocabulary& vocab);

// Full per-example preprocessing from raw strings.
CodeCommentPair make_pair(const std::string& code, const std::string& comment,
                          const std::string& source_id, Language lang);

nlohmann::json pair_to_json(const CodeCommentPair& pair);
CodeCommentPair pair_from_json(const nlohmann::json& j);

} // namespace delib
