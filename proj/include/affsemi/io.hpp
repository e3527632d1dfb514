#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "affsemi/point.hpp"
#include "json.hpp"

namespace affsemi {

/// "(x,y);(x,y)". In dimension one the bare form "4;6;9" is accepted too.
/// Throws Error(BadParams) on malformed text and DimensionMismatch when the
/// points disagree with each other or with `dimension`.
std::vector<Point> parse_points(std::string_view text, std::optional<std::size_t> dimension = std::nullopt);
Point parse_point(std::string_view text, std::optional<std::size_t> dimension = std::nullopt);

enum class InputKind { Generators, Gaps };

struct Input {
  InputKind kind = InputKind::Generators;
  std::size_t dimension = 0;
  std::vector<Point> points;
};

/// {"d": 2, "gens": [[1,0], ...]} or {"d": 2, "gaps": [...]}. "d" may be
/// omitted when the list is nonempty.
Input parse_input(const nlohmann::json& document);

nlohmann::ordered_json to_json(const Point& p);
nlohmann::ordered_json to_json(const std::vector<Point>& points);

std::string format_points(const std::vector<Point>& points);

}  // namespace affsemi
