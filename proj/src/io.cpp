#include "affsemi/io.hpp"

#include <cctype>
#include <charconv>

#include "affsemi/error.hpp"

namespace affsemi {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Coord parse_coord(std::string_view s, std::string_view whole) {
  s = trim(s);
  Coord value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || end != s.data() + s.size()) {
    throw Error(ErrorKind::BadParams, "cannot read an integer from \"" + std::string(s) + "\" in \"" +
                                          std::string(whole) + "\"");
  }
  return value;
}

void check_dimension(const Point& p, std::optional<std::size_t>& dimension) {
  if (!dimension) dimension = p.dimension();
  if (p.dimension() != *dimension) {
    throw Error(ErrorKind::DimensionMismatch,
                "point " + p.to_string() + " is not in dimension " + std::to_string(*dimension));
  }
}

}  // namespace

Point parse_point(std::string_view text, std::optional<std::size_t> dimension) {
  const std::string_view whole = text;
  text = trim(text);
  std::vector<Coord> coords;
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw Error(ErrorKind::BadParams, "unbalanced parenthesis in \"" + std::string(whole) + "\"");
    text = text.substr(1, text.size() - 2);
    while (true) {
      const auto comma = text.find(',');
      coords.push_back(parse_coord(text.substr(0, comma), whole));
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
  } else {
    coords.push_back(parse_coord(text, whole));
  }
  Point p(std::move(coords));
  check_dimension(p, dimension);
  return p;
}

std::vector<Point> parse_points(std::string_view text, std::optional<std::size_t> dimension) {
  std::vector<Point> out;
  if (trim(text).empty()) return out;
  while (true) {
    const auto semi = text.find(';');
    out.push_back(parse_point(text.substr(0, semi), dimension));
    dimension = out.back().dimension();
    if (semi == std::string_view::npos) break;
    text.remove_prefix(semi + 1);
  }
  return out;
}

Input parse_input(const nlohmann::json& document) {
  if (!document.is_object()) throw Error(ErrorKind::BadParams, "input document must be a JSON object");
  const bool has_gens = document.contains("gens");
  const bool has_gaps = document.contains("gaps");
  if (has_gens == has_gaps) throw Error(ErrorKind::BadParams, "input needs exactly one of \"gens\" and \"gaps\"");
  Input in;
  in.kind = has_gens ? InputKind::Generators : InputKind::Gaps;
  std::optional<std::size_t> dimension;
  if (document.contains("d")) {
    const auto& d = document["d"];
    if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) {
      throw Error(ErrorKind::BadParams, "\"d\" must be a positive integer");
    }
    dimension = d.get<std::size_t>();
  }
  const auto& list = document[has_gens ? "gens" : "gaps"];
  if (!list.is_array()) throw Error(ErrorKind::BadParams, "point list must be a JSON array");
  for (const auto& item : list) {
    std::vector<Coord> coords;
    if (item.is_number_integer()) {
      coords.push_back(item.get<Coord>());
    } else if (item.is_array()) {
      for (const auto& c : item) {
        if (!c.is_number_integer()) throw Error(ErrorKind::BadParams, "coordinates must be integers");
        coords.push_back(c.get<Coord>());
      }
    } else {
      throw Error(ErrorKind::BadParams, "points must be integers or arrays of integers");
    }
    Point p(std::move(coords));
    check_dimension(p, dimension);
    in.points.push_back(std::move(p));
  }
  if (!dimension) throw Error(ErrorKind::BadParams, "empty point list needs \"d\"");
  in.dimension = *dimension;
  return in;
}

nlohmann::ordered_json to_json(const Point& p) {
  auto out = nlohmann::ordered_json::array();
  for (Coord c : p.coords()) out.push_back(c);
  return out;
}

nlohmann::ordered_json to_json(const std::vector<Point>& points) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& p : points) out.push_back(to_json(p));
  return out;
}

std::string format_points(const std::vector<Point>& points) {
  std::string out = "{";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += ", ";
    out += points[i].to_string();
  }
  return out + "}";
}

}  // namespace affsemi
