#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "spanzip/value.hpp"

namespace spanzip {

// A span as it arrives from the producer: one JSON object with a mandatory
// non-empty "name" field.
using RawSpan = nlohmann::json;

// A span normalized to a flat, typed key-value list. All compression and
// synchronization machinery operates on this form.
struct FlatSpan {
  std::string name;
  std::vector<std::pair<std::string, AttributeValue>> pairs;
  std::vector<std::pair<std::string, std::uint64_t>> time_fields;

  bool operator==(const FlatSpan&) const = default;

  // Pair/time lists sorted by key; used wherever comparisons must be
  // independent of field order.
  FlatSpan normalized() const;
};

struct FlattenConfig {
  std::uint32_t depth_limit = 2;
  std::vector<std::string> time_keys = {"start_time", "end_time"};

  bool is_time_key(std::string_view key) const;
};

// Parses one UTF-8 JSON document. Throws MalformedJson / MissingName.
RawSpan parse_span(std::string_view bytes);

// Nested objects up to cfg.depth_limit become prefixed keys joined with "-"
// ("\" and "-" in raw keys are escaped first, so the join is unambiguous).
// Objects deeper than the limit and all arrays are stored as their canonical
// string. Keys configured as time keys holding unsigned integers are routed
// to time_fields. Throws KeyCollision if two pairs end up with the same key.
FlatSpan flatten(const RawSpan& span, const FlattenConfig& cfg = {});

// Rebuilds the nested object from prefixed keys. Values that flatten turned
// into canonical strings are not re-parsed; that stringification boundary is
// applied identically on both sides of the pipeline.
RawSpan unflatten(const FlatSpan& span);

// Key escaping used by flatten ("\" -> "\\", "-" -> "\-") and the inverse
// split. Exposed for tests.
std::string escape_key_component(std::string_view raw);
std::vector<std::string> split_flat_key(std::string_view key);

// The canonical single-line rendering of a JSON document: keys sorted,
// no insignificant whitespace, shortest float form.
std::string canonical_json(const nlohmann::json& doc);

}  // namespace spanzip
