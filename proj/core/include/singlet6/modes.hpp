#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace singlet6 {

// Registered spatial mode labels. a0/b0 are the two emission arms, a..f the
// six analyzer modes, x/y internal ports of beam-splitter cascades. The
// declaration order fixes the canonical mode ordering used for term merging.
enum class Spatial : std::uint8_t { A0, B0, A, B, C, D, E, F, X, Y };

enum class Pol : std::uint8_t { H, V };

inline constexpr int kSpatialCount = 10;

std::string_view to_string(Spatial s);
char to_char(Pol p);
std::optional<Spatial> parse_spatial(std::string_view s);

// One bosonic mode: a (spatial label, polarization) pair. Totally ordered,
// a0 < b0 < a < ... < y and H < V.
struct PolMode {
  Spatial spatial;
  Pol pol;

  friend constexpr auto operator<=>(const PolMode&, const PolMode&) = default;

  // Dense index into the registered mode set, follows the canonical order.
  constexpr int id() const {
    return (static_cast<int>(spatial) << 1) | static_cast<int>(pol);
  }

  std::string to_string() const;  // e.g. "H_a0"
};

}  // namespace singlet6
