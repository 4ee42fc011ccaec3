#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <nlohmann/json_fwd.hpp>

namespace spanzip {

// One span attribute value. Equality is exact across the board; compression
// must be lossless, so there is no float tolerance and no cross-type
// coercion (the integer 1, the real 1.0 and the text "1" are three distinct
// values).
class AttributeValue {
 public:
  struct Null {
    bool operator==(const Null&) const = default;
    auto operator<=>(const Null&) const = default;
  };

  AttributeValue() : data_(Null{}) {}
  explicit AttributeValue(std::string text) : data_(std::move(text)) {}
  explicit AttributeValue(const char* text) : data_(std::string(text)) {}
  explicit AttributeValue(std::int64_t i) : data_(i) {}
  explicit AttributeValue(double d) : data_(d) {}
  explicit AttributeValue(bool b) : data_(b) {}

  static AttributeValue null() { return AttributeValue(); }

  bool is_null() const { return std::holds_alternative<Null>(data_); }
  bool is_text() const { return std::holds_alternative<std::string>(data_); }
  bool is_integer() const { return std::holds_alternative<std::int64_t>(data_); }
  bool is_real() const { return std::holds_alternative<double>(data_); }
  bool is_boolean() const { return std::holds_alternative<bool>(data_); }

  const std::string& text() const { return std::get<std::string>(data_); }
  std::int64_t integer() const { return std::get<std::int64_t>(data_); }
  double real() const { return std::get<double>(data_); }
  bool boolean() const { return std::get<bool>(data_); }

  // Canonical text serialization: the value rendered as its JSON literal
  // (strings quoted, reals with the shortest roundtripping form). A value
  // parses back from this form unchanged, type included.
  std::string canonical_text() const;
  static AttributeValue from_canonical_text(const std::string& text);

  // Conversion to/from a JSON scalar. Integers outside the signed 64-bit
  // range fall back to double, mirroring common JSON tooling.
  static AttributeValue from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  bool operator==(const AttributeValue& other) const { return data_ == other.data_; }

  // Total order used for canonical tree traversal: rank by type first
  // (null < bool < int < real < text), then by value within the type.
  bool operator<(const AttributeValue& other) const;

 private:
  std::variant<Null, bool, std::int64_t, double, std::string> data_;
};

}  // namespace spanzip
