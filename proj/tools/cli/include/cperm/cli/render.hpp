#pragma once

#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cperm/permutomino.hpp"

namespace cperm::cli {

enum class Format { kAscii, kSvg, kJson };

struct RenderSpec {
  Format format = Format::kAscii;
  int cell_size = 24;  // svg only
  std::string output;  // empty: standard output
  bool json_array = false;  // json: emit an array even for one permutomino
};

// Bump when a field changes meaning.
inline constexpr int kJsonSchemaVersion = 1;

// One text row per permutomino row, top row first: '#' filled, '.' empty.
// The empty permutomino renders as "(empty)".
std::string render_ascii(const Permutomino& p);

// Reads back the '#'/'.' rows of render_ascii output, ignoring other lines.
// Throws ParseError on ragged rows.
CellGrid parse_ascii(std::string_view text);

// One document; each permutomino is a <g class="permutomino">, laid out left
// to right. The y axis points up.
std::string render_svg(std::span<const Permutomino> ps, int cell_size);

nlohmann::json to_json(const Permutomino& p);

// Rebuilds from "boundary" and checks every other field against the rebuilt
// value. Throws ParseError on schema or consistency errors.
Permutomino permutomino_from_json(const nlohmann::json& j);

std::string render(std::span<const Permutomino> ps, const RenderSpec& spec);

}  // namespace cperm::cli
