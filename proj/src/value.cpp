#include "spanzip/value.hpp"

#include <nlohmann/json.hpp>

#include "spanzip/errors.hpp"

namespace spanzip {

std::string AttributeValue::canonical_text() const {
  return to_json().dump();
}

AttributeValue AttributeValue::from_canonical_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw Error(ErrorCode::MalformedJson, "bad canonical value literal: " + text);
  }
  return from_json(j);
}

AttributeValue AttributeValue::from_json(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::string:
      return AttributeValue(j.get<std::string>());
    case nlohmann::json::value_t::number_integer:
      return AttributeValue(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned: {
      std::uint64_t u = j.get<std::uint64_t>();
      if (u <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        return AttributeValue(static_cast<std::int64_t>(u));
      }
      return AttributeValue(static_cast<double>(u));
    }
    case nlohmann::json::value_t::number_float:
      return AttributeValue(j.get<double>());
    case nlohmann::json::value_t::boolean:
      return AttributeValue(j.get<bool>());
    case nlohmann::json::value_t::null:
      return AttributeValue::null();
    default:
      throw Error(ErrorCode::MalformedJson, "not a primitive JSON value: " + j.dump());
  }
}

nlohmann::json AttributeValue::to_json() const {
  if (is_null()) return nullptr;
  if (is_boolean()) return boolean();
  if (is_integer()) return integer();
  if (is_real()) return real();
  return text();
}

namespace {

int type_rank(const AttributeValue& v) {
  if (v.is_null()) return 0;
  if (v.is_boolean()) return 1;
  if (v.is_integer()) return 2;
  if (v.is_real()) return 3;
  return 4;
}

}  // namespace

bool AttributeValue::operator<(const AttributeValue& other) const {
  int lr = type_rank(*this);
  int rr = type_rank(other);
  if (lr != rr) return lr < rr;
  switch (lr) {
    case 0:
      return false;
    case 1:
      return boolean() < other.boolean();
    case 2:
      return integer() < other.integer();
    case 3:
      return real() < other.real();
    default:
      return text() < other.text();
  }
}

}  // namespace spanzip
