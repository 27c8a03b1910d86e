#pragma once

// Ring-spec documents: JSON trees describing a ring or semiring by kind
// (zn, table, group_ring, quaternion, matrix_delta, delta_ideal, direct_sum,
// semiring, preset). Documents are validated strictly (unknown fields are
// rejected) and round-trip through serialize_spec unchanged.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "finring/group.hpp"
#include "finring/ring.hpp"
#include "finring/semiring.hpp"

namespace finring {

using Json = nlohmann::ordered_json;

enum class SpecErrorKind { parse, validation, size };

class SpecError : public std::runtime_error {
 public:
  SpecError(SpecErrorKind kind, const std::string& what, std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(what), kind_(kind), position_(position) {}
  SpecErrorKind kind() const { return kind_; }
  /// Byte offset of a parse error.
  std::optional<std::size_t> position() const { return position_; }

 private:
  SpecErrorKind kind_;
  std::optional<std::size_t> position_;
};

/// Parses JSON text; syntax errors carry the byte offset.
Json parse_spec_text(const std::string& text);
/// Throws SpecError(validation) naming the offending path.
void validate_spec(const Json& doc);
std::string serialize_spec(const Json& doc);

using Structure = std::variant<Ring, Semiring>;

/// Validates and constructs; axiom failures surface as AxiomViolation and
/// oversized requests as SpecError(size).
Structure build_spec(const Json& doc);
Ring build_ring(const Json& doc);
Semiring build_semiring(const Json& doc);
GroupPtr build_group(const Json& doc);

/// parse_spec_text followed by build_spec.
Structure parse_ring_spec(const std::string& text);

Json preset_spec(const std::string& name);
bool is_semiring_spec(const Json& doc);

}  // namespace finring
