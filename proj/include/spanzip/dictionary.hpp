#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace spanzip {

// Alphanumeric identifier sequence: "0".."9", "a".."z", "A".."Z", then
// "00", "01", ... Each length-L block enumerates all 62^L strings before
// moving to length L+1.
std::string identifier_at(std::uint64_t index);

class IdentifierSequence {
 public:
  std::string next() { return identifier_at(cursor_++); }
  std::uint64_t cursor() const { return cursor_; }

 private:
  std::uint64_t cursor_ = 0;
};

// One token of a key plus the delimiter that preceded it, so the key can be
// reassembled byte-for-byte.
struct KeyToken {
  char boundary;  // '\0' for the first token, else the delimiter character
  std::string text;

  bool operator==(const KeyToken&) const = default;
};

std::vector<KeyToken> tokenize_key(std::string_view key, std::string_view delimiters = "._");
std::string reassemble_key(const std::vector<KeyToken>& tokens);

// Bidirectional map from repeated tokens/values to short identifiers.
// A token is only assigned an identifier from its second observation on;
// until then encoders ship the literal. Literals in encoded positions carry
// the "\~" prefix so they can never be mistaken for an identifier.
class TokenDictionary {
 public:
  static constexpr std::string_view kLiteralPrefix = "\\~";

  // Records one observation of `token`. Returns the identifier if the token
  // has one (allocating on the second observation), nullopt while it is
  // still a single-occurrence literal. `added` is set when this call
  // allocated a fresh entry. Throws Frozen when the budget freeze is active
  // and an allocation would be needed.
  std::optional<std::string> observe(const std::string& token, bool* added = nullptr);

  // Lookup without side effects.
  std::optional<std::string> find(const std::string& token) const;
  std::optional<std::string> token_for(const std::string& identifier) const;

  // Encoded form of one token position: identifier, or "\~" + literal.
  std::string encode_token(const std::string& token, bool* added = nullptr);
  // Inverse; throws UnknownIdentifier when a bare identifier is not present.
  std::string decode_token(const std::string& encoded) const;

  // Token-wise key coding. Boundaries stay verbatim in the encoded key.
  std::string encode_key(const std::string& key, std::vector<std::pair<std::string, std::string>>* new_entries = nullptr);
  std::string decode_key(const std::string& encoded) const;

  // Receiver-side registration from a DictAdd delta.
  void register_entry(const std::string& identifier, const std::string& token);

  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

  std::size_t size() const { return forward_.size(); }
  bool contains_token(const std::string& token) const { return forward_.count(token) != 0; }
  std::uint64_t next_index() const { return sequence_.cursor(); }

  // Estimated resident bytes, matching the structure budget formula.
  std::size_t estimated_bytes() const { return estimated_bytes_; }

 private:
  IdentifierSequence sequence_;
  std::unordered_map<std::string, std::string> forward_;
  std::unordered_map<std::string, std::string> reverse_;
  std::unordered_map<std::string, std::uint32_t> occurrences_;
  std::size_t estimated_bytes_ = 0;
  bool frozen_ = false;
};

}  // namespace spanzip
