#include "spanzip/span.hpp"

#include <algorithm>
#include <unordered_set>

#include "spanzip/errors.hpp"

namespace spanzip {

FlatSpan FlatSpan::normalized() const {
  FlatSpan out = *this;
  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::sort(out.time_fields.begin(), out.time_fields.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool FlattenConfig::is_time_key(std::string_view key) const {
  return std::find(time_keys.begin(), time_keys.end(), key) != time_keys.end();
}

RawSpan parse_span(std::string_view bytes) {
  nlohmann::json doc = nlohmann::json::parse(bytes, nullptr, false);
  if (doc.is_discarded()) {
    throw Error(ErrorCode::MalformedJson, "input is not valid JSON");
  }
  if (!doc.is_object() || !doc.contains("name") || !doc["name"].is_string() ||
      doc["name"].get_ref<const std::string&>().empty()) {
    throw Error(ErrorCode::MissingName, "span lacks a non-empty \"name\" string field");
  }
  return doc;
}

std::string escape_key_component(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    if (c == '\\' || c == '-') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::vector<std::string> split_flat_key(std::string_view key) {
  std::vector<std::string> parts;
  std::string cur;
  for (std::size_t i = 0; i < key.size(); ++i) {
    char c = key[i];
    if (c == '\\' && i + 1 < key.size()) {
      cur.push_back(key[++i]);
    } else if (c == '-') {
      parts.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(std::move(cur));
  return parts;
}

std::string canonical_json(const nlohmann::json& doc) {
  // nlohmann::json keeps object members in a sorted std::map and dumps
  // floats in their shortest roundtripping form, which is exactly the
  // canonical rendering both pipeline sides must agree on.
  return doc.dump();
}

namespace {

bool is_unsigned_integer(const nlohmann::json& j) {
  return j.is_number_unsigned() ||
         (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

struct FlattenWalker {
  const FlattenConfig& cfg;
  FlatSpan& out;
  std::unordered_set<std::string> seen_keys;

  void add_pair(std::string key, AttributeValue value) {
    if (!seen_keys.insert(key).second) {
      throw Error(ErrorCode::KeyCollision, "flattened key occurs twice: " + key);
    }
    out.pairs.emplace_back(std::move(key), std::move(value));
  }

  // depth = number of key components accumulated in `prefix` plus one for
  // the key being visited.
  void visit(const std::string& prefix, const std::string& raw_key, const nlohmann::json& value,
             std::uint32_t depth) {
    std::string key = prefix.empty() ? escape_key_component(raw_key)
                                     : prefix + "-" + escape_key_component(raw_key);
    if (depth == 1 && cfg.is_time_key(raw_key) && is_unsigned_integer(value)) {
      if (!seen_keys.insert(key).second) {
        throw Error(ErrorCode::KeyCollision, "flattened key occurs twice: " + key);
      }
      out.time_fields.emplace_back(std::move(key), value.get<std::uint64_t>());
      return;
    }
    if (value.is_object() && depth < cfg.depth_limit) {
      for (const auto& [k, v] : value.items()) {
        visit(key, k, v, depth + 1);
      }
      return;
    }
    if (value.is_object() || value.is_array()) {
      add_pair(std::move(key), AttributeValue(canonical_json(value)));
      return;
    }
    add_pair(std::move(key), AttributeValue::from_json(value));
  }
};

}  // namespace

FlatSpan flatten(const RawSpan& span, const FlattenConfig& cfg) {
  if (cfg.depth_limit < 1) {
    throw Error(ErrorCode::KeyCollision, "depth_limit must be >= 1");
  }
  FlatSpan out;
  out.name = span.at("name").get<std::string>();
  FlattenWalker walker{cfg, out, {}};
  for (const auto& [key, value] : span.items()) {
    if (key == "name") continue;
    walker.visit("", key, value, 1);
  }
  return out;
}

RawSpan unflatten(const FlatSpan& span) {
  nlohmann::json doc = nlohmann::json::object();
  doc["name"] = span.name;
  auto place = [&doc](const std::string& key, nlohmann::json value) {
    std::vector<std::string> parts = split_flat_key(key);
    nlohmann::json* node = &doc;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
      nlohmann::json& slot = (*node)[parts[i]];
      if (!slot.is_object()) slot = nlohmann::json::object();
      node = &slot;
    }
    (*node)[parts.back()] = std::move(value);
  };
  for (const auto& [key, value] : span.pairs) {
    place(key, value.to_json());
  }
  for (const auto& [key, nanos] : span.time_fields) {
    place(key, nanos);
  }
  return doc;
}

}  // namespace spanzip
