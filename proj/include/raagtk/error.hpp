#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace raagtk {

/// Domain error carrying a stable machine-readable code (e.g. "unknown_vertex").
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

namespace errc {
inline constexpr const char* unknown_vertex = "unknown_vertex";
inline constexpr const char* invalid_letter = "invalid_letter";
inline constexpr const char* parse_error = "parse_error";
inline constexpr const char* empty_set = "empty_set";
inline constexpr const char* identity_input = "identity_input";
inline constexpr const char* precondition = "precondition";
inline constexpr const char* arity_mismatch = "arity_mismatch";
inline constexpr const char* unreduced_input = "unreduced_input";
inline constexpr const char* invalid_pair = "invalid_pair";
inline constexpr const char* degenerate_arc = "degenerate_arc";
inline constexpr const char* out_of_range = "out_of_range";
inline constexpr const char* not_in_centralizer = "not_in_centralizer";
inline constexpr const char* not_visual_splitting = "not_visual_splitting";
inline constexpr const char* invalid_subgroup = "invalid_subgroup";
inline constexpr const char* radius_too_small = "radius_too_small";
inline constexpr const char* cap_exceeded = "cap_exceeded";
inline constexpr const char* not_decent = "not_decent";
inline constexpr const char* malformed = "malformed";
inline constexpr const char* io_error = "io_error";
}  // namespace errc

}  // namespace raagtk
