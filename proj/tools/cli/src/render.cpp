#include "cperm/cli/render.hpp"

#include <sstream>

#include "cperm/cli/parse.hpp"
#include "cperm/error.hpp"

namespace cperm::cli {

std::string render_ascii(const Permutomino& p) {
  if (p.is_empty()) return "(empty)\n";
  const CellGrid& g = p.cells();
  std::string out;
  for (int r = g.height(); r >= 1; --r) {
    for (int c = 1; c <= g.width(); ++c) out += g.contains(c, r) ? '#' : '.';
    out += '\n';
  }
  return out;
}

CellGrid parse_ascii(std::string_view text) {
  std::vector<std::string_view> rows;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(offset, end - offset);
    if (!line.empty() && line.find_first_not_of("#.") == std::string_view::npos) {
      if (!rows.empty() && line.size() != rows.front().size()) {
        throw ParseError(offset, "ragged grid row");
      }
      rows.push_back(line);
    }
    offset = end + 1;
  }
  if (rows.empty()) return CellGrid(0, 0);
  const int height = static_cast<int>(rows.size());
  CellGrid g(static_cast<int>(rows.front().size()), height);
  for (int i = 0; i < height; ++i) {
    for (std::size_t c = 0; c < rows[i].size(); ++c) {
      if (rows[i][c] == '#') g.set(static_cast<int>(c) + 1, height - i);
    }
  }
  return g;
}

namespace {

const char* greek(ReentrantLabel l) {
  switch (l) {
    case ReentrantLabel::kAlpha: return "α";
    case ReentrantLabel::kBeta: return "β";
    case ReentrantLabel::kGamma: return "γ";
    case ReentrantLabel::kDelta: return "δ";
  }
  return "?";
}

}  // namespace

std::string render_svg(std::span<const Permutomino> ps, int cell_size) {
  const int cs = std::max(cell_size, 4);
  const int margin = cs;
  int max_n = 1;
  for (const auto& p : ps) max_n = std::max(max_n, p.size());
  int width = margin;
  for (const auto& p : ps) width += std::max(p.size() - 1, 1) * cs + margin;
  const int height = std::max(max_n - 1, 1) * cs + 2 * margin;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  int ox = margin;
  for (std::size_t idx = 0; idx < ps.size(); ++idx) {
    const Permutomino& p = ps[idx];
    const int n = p.size();
    // Lattice point (x, y) -> svg; the top edge of the box sits at `margin`.
    const auto sx = [&](int x) { return ox + (x - 1) * cs; };
    const auto sy = [&](int y) { return margin + (max_n - y) * cs; };
    os << "<g class=\"permutomino\" data-index=\"" << idx << "\" data-size=\"" << n << "\">\n";
    const CellGrid& g = p.cells();
    for (int c = 1; c <= g.width(); ++c) {
      for (int r = 1; r <= g.height(); ++r) {
        if (!g.contains(c, r)) continue;
        os << "<rect class=\"cell\" data-col=\"" << c << "\" data-row=\"" << r << "\" x=\""
           << sx(c) << "\" y=\"" << sy(r + 1) << "\" width=\"" << cs << "\" height=\"" << cs
           << "\" fill=\"#dde6f0\" stroke=\"#9aa9b8\"/>\n";
      }
    }
    if (!p.is_empty()) {
      os << "<path class=\"boundary\" fill=\"none\" stroke=\"#000\" stroke-width=\"2\" d=\"";
      const auto path = p.path();
      for (std::size_t i = 0; i < path.size(); ++i) {
        os << (i == 0 ? "M" : " L") << sx(path[i].x) << ' ' << sy(path[i].y);
      }
      os << " Z\"/>\n";
      const BoundaryPoints bp = boundary_points(p);
      const int half = std::max(cs / 8, 2);
      for (const Point& s : bp.salient) {
        os << "<rect class=\"salient\" x=\"" << sx(s.x) - half << "\" y=\"" << sy(s.y) - half
           << "\" width=\"" << 2 * half << "\" height=\"" << 2 * half
           << "\" fill=\"#fff\" stroke=\"#000\"/>\n";
      }
      for (const LabeledPoint& r : bp.reentrant) {
        os << "<circle class=\"reentrant\" data-label=\"" << label_name(r.label) << "\" cx=\""
           << sx(r.point.x) << "\" cy=\"" << sy(r.point.y) << "\" r=\"" << half
           << "\" fill=\"#000\"/>\n";
        os << "<text x=\"" << sx(r.point.x) + half + 1 << "\" y=\"" << sy(r.point.y) - half - 1
           << "\" font-size=\"" << std::max(cs / 2, 8) << "\">" << greek(r.label) << "</text>\n";
      }
    }
    os << "</g>\n";
    ox += std::max(n - 1, 1) * cs + margin;
  }
  os << "</svg>\n";
  return os.str();
}

nlohmann::json to_json(const Permutomino& p) {
  using nlohmann::json;
  json vertices = json::array();
  for (const Point& v : p.vertices()) vertices.push_back({v.x, v.y});
  const BoundaryPoints bp = boundary_points(p);
  json reentrant = json::array();
  for (const LabeledPoint& r : bp.reentrant) {
    reentrant.push_back({{"x", r.point.x}, {"y", r.point.y}, {"label", label_name(r.label)}});
  }
  const ClassFlags f = classify(p);
  return {
      {"v", kJsonSchemaVersion},
      {"size", p.size()},
      {"boundary", p.boundary().letters()},
      {"vertices", vertices},
      {"pi1", std::vector<int>(p.pi1().values().begin(), p.pi1().values().end())},
      {"pi2", std::vector<int>(p.pi2().values().begin(), p.pi2().values().end())},
      {"reentrant", reentrant},
      {"area", p.cells().area()},
      {"flags",
       {{"column_convex", f.column_convex},
        {"row_convex", f.row_convex},
        {"convex", f.convex},
        {"directed", f.directed},
        {"parallelogram", f.parallelogram},
        {"symmetric", f.symmetric_xy}}},
  };
}

Permutomino permutomino_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw ParseError(0, "expected a JSON object");
    if (j.at("v").get<int>() != kJsonSchemaVersion) {
      throw ParseError(0, "unsupported schema version " + j.at("v").dump());
    }
    const int size = j.at("size").get<int>();
    const std::string word = j.at("boundary").get<std::string>();
    const Permutomino p = word.empty() ? Permutomino::empty()
                                       : Permutomino::from_boundary_word(BoundaryWord(word));
    if (p.size() != size) throw ParseError(0, "size does not match boundary");
    if (to_json(p) != j) throw ParseError(0, "fields inconsistent with boundary");
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed permutomino JSON: ") + e.what());
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

std::string render(std::span<const Permutomino> ps, const RenderSpec& spec) {
  switch (spec.format) {
    case Format::kAscii: {
      std::string out;
      for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) out += '\n';
        out += "boundary " + (ps[i].boundary().empty() ? std::string("(none)")
                                                       : ps[i].boundary().letters()) +
               "  pi1 " + ps[i].pi1().to_string() + "  pi2 " + ps[i].pi2().to_string() + '\n';
        out += render_ascii(ps[i]);
      }
      return out;
    }
    case Format::kSvg:
      return render_svg(ps, spec.cell_size);
    case Format::kJson: {
      if (ps.size() == 1 && !spec.json_array) return to_json(ps.front()).dump(2) + '\n';
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& p : ps) arr.push_back(to_json(p));
      return arr.dump(2) + '\n';
    }
  }
  return {};
}

}  // namespace cperm::cli
