#include "rootfp/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rootfp/ideals.hpp"

namespace rootfp {
namespace {

constexpr int kCell = 34;  // cell side in svg pixels

std::string svg_open(int w, int h) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
     << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h
     << "\" font-family=\"monospace\" font-size=\"11\">\n";
  return os.str();
}

void svg_cell(std::ostringstream& os, int x, int y, const std::string& text,
              bool hl) {
  os << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCell
     << "\" height=\"" << kCell << "\" fill=\""
     << (hl ? "#ffd27f" : "#ffffff") << "\" stroke=\"#333333\"/>\n";
  os << "  <text x=\"" << x + kCell / 2 << "\" y=\"" << y + kCell / 2 + 4
     << "\" text-anchor=\"middle\">" << text << "</text>\n";
}

void svg_label(std::ostringstream& os, int x, int y, const std::string& text) {
  os << "  <text x=\"" << x << "\" y=\"" << y << "\">" << text << "</text>\n";
}

[[noreturn]] void unsupported(const std::string& target, Format fmt) {
  static const char* names[] = {"svg", "ascii", "dot", "json"};
  throw std::invalid_argument("format " +
                              std::string(names[static_cast<int>(fmt)]) +
                              " not supported for target " + target);
}

// Shared geometry for the two corner renderings: for each of the 27 top
// codes, its face/row/col cell, the text to print, and a highlight flag.
struct CornerCell {
  F3Code code;
  E7Model::Cell cell;
  std::string text;
  bool hl = false;
};

// Face placement: face 0 (a = 0) upper left, face 1 (b = 0) upper right,
// face 2 (c = 0) lower left, mimicking the view into a cube corner.
std::pair<int, int> face_origin(int face) {
  const int pad = 26, side = 3 * kCell;
  if (face == 0) return {pad, pad};
  if (face == 1) return {pad + side + kCell, pad};
  return {pad, pad + side + kCell};
}

std::string corner_svg(const std::vector<CornerCell>& cells,
                       const std::string& title) {
  const int pad = 26, side = 3 * kCell;
  std::ostringstream os;
  os << svg_open(2 * pad + 2 * side + kCell, 2 * pad + 2 * side + kCell + 16);
  svg_label(os, pad, 16, title);
  static const char* face_names[] = {"a = 0", "b = 0", "c = 0"};
  for (int face = 0; face < 3; ++face) {
    auto [ox, oy] = face_origin(face);
    svg_label(os, ox, oy + side + 14, face_names[face]);
  }
  for (const auto& c : cells) {
    auto [ox, oy] = face_origin(c.cell.face);
    svg_cell(os, ox + c.cell.col * kCell, oy + c.cell.row * kCell, c.text,
             c.hl);
  }
  os << "</svg>\n";
  return os.str();
}

std::string corner_ascii(const std::vector<CornerCell>& cells,
                         const std::string& title) {
  // faces[face][row][col] -> "text" or "[text]"
  std::string grid[3][3][3];
  size_t width = 0;
  for (const auto& c : cells) {
    std::string t = c.hl ? "[" + c.text + "]" : c.text;
    width = std::max(width, t.size());
    grid[c.cell.face][c.cell.row][c.cell.col] = t;
  }
  std::ostringstream os;
  os << title << "\n";
  static const char* face_names[] = {"a = 0", "b = 0", "c = 0"};
  for (int face = 0; face < 3; ++face) {
    os << face_names[face] << "\n";
    for (int row = 0; row < 3; ++row) {
      for (int col = 0; col < 3; ++col) {
        std::string t = grid[face][row][col];
        os << "  " << t << std::string(width - t.size(), ' ');
      }
      os << "\n";
    }
  }
  return os.str();
}

std::string corner_json(const std::vector<CornerCell>& cells,
                        const std::string& target) {
  std::ostringstream os;
  os << "{\"target\":\"" << target << "\",\"cells\":[";
  bool first = true;
  for (const auto& c : cells) {
    if (!first) os << ",";
    first = false;
    os << "{\"code\":\"" << f3_string(c.code) << "\",\"face\":" << c.cell.face
       << ",\"row\":" << c.cell.row << ",\"col\":" << c.cell.col
       << ",\"text\":\"" << c.text << "\",\"highlight\":"
       << (c.hl ? "true" : "false") << "}";
  }
  os << "]}\n";
  return os.str();
}

}  // namespace

std::optional<Format> format_from_string(const std::string& s) {
  if (s == "svg") return Format::svg;
  if (s == "ascii" || s == "txt") return Format::ascii;
  if (s == "dot") return Format::dot;
  if (s == "json") return Format::json;
  return std::nullopt;
}

std::string render_cube_corner(Format fmt, std::optional<F3Code> highlight) {
  const auto& m = E7Model::instance();
  std::vector<CornerCell> cells;
  std::vector<F3Code> link;
  if (highlight) link = m.link(*highlight);
  for (const auto& code : m.gamma7()) {
    CornerCell c;
    c.code = code;
    c.cell = m.cube_layout(code);
    c.text = f3_string(code);
    c.hl = highlight && std::find(link.begin(), link.end(), code) != link.end();
    cells.push_back(c);
  }
  std::string title = "Gamma7+ cube corner";
  if (highlight) title += ", link of " + f3_string(*highlight);
  switch (fmt) {
    case Format::svg: return corner_svg(cells, title);
    case Format::ascii: return corner_ascii(cells, title);
    case Format::json: return corner_json(cells, "cube_corner");
    default: unsupported("cube_corner", fmt);
  }
}

std::string render_openmap7(Format fmt) {
  const auto& m = E7Model::instance();
  const auto& ideals = IdealSystem::instance();
  const auto& elems = ideals.elements(7);
  const auto& labels = ideals.open_map(7).labels;
  std::vector<CornerCell> cells;
  for (size_t i = 0; i < elems.size(); ++i) {
    Root beta7(elems[i].begin(), elems[i].end() - 1);  // drop the e8 coord
    CornerCell c;
    c.code = m.f(beta7);
    c.cell = m.cube_layout(c.code);
    c.text = std::to_string(labels[i]);
    cells.push_back(c);
  }
  std::sort(cells.begin(), cells.end(),
            [](const CornerCell& x, const CornerCell& y) {
              return x.code < y.code;
            });
  std::string title = "open map h7 on the cube corner";
  switch (fmt) {
    case Format::svg: return corner_svg(cells, title);
    case Format::ascii: return corner_ascii(cells, title);
    case Format::json: return corner_json(cells, "openmap7");
    default: unsupported("openmap7", fmt);
  }
}

std::string render_square(Format fmt, std::optional<FpVec> highlight) {
  const auto& m = E6Model::instance();
  std::vector<FpVec> link;
  if (highlight) link = m.link_in_gamma6(*highlight);
  struct Sq {
    FpVec v;
    E6Model::Cell cell;
    bool hl;
  };
  std::vector<Sq> cells;
  for (const auto& v : m.gamma6()) {
    bool hl =
        highlight && std::find(link.begin(), link.end(), v) != link.end();
    cells.push_back({v, m.square_layout(v), hl});
  }
  auto text = [](const FpVec& v) {
    std::string t;
    for (int d : v) t += static_cast<char>('0' + d);
    return t;
  };
  std::string title = "Gamma6+ square";
  if (highlight) title += ", link of " + text(*highlight);
  if (fmt == Format::svg) {
    const int pad = 26, cw = 52;
    std::ostringstream os;
    os << svg_open(2 * pad + 4 * cw, 2 * pad + 4 * kCell + 16);
    svg_label(os, pad, 16, title);
    for (const auto& c : cells) {
      int x = pad + c.cell.col * cw, y = pad + c.cell.row * kCell;
      os << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cw
         << "\" height=\"" << kCell << "\" fill=\""
         << (c.hl ? "#ffd27f" : "#ffffff") << "\" stroke=\"#333333\"/>\n";
      os << "  <text x=\"" << x + cw / 2 << "\" y=\"" << y + kCell / 2 + 4
         << "\" text-anchor=\"middle\">" << text(c.v) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
  }
  if (fmt == Format::ascii) {
    std::string grid[4][4];
    size_t width = 0;
    for (const auto& c : cells) {
      std::string t = c.hl ? "[" + text(c.v) + "]" : text(c.v);
      width = std::max(width, t.size());
      grid[c.cell.row][c.cell.col] = t;
    }
    std::ostringstream os;
    os << title << "\n";
    for (int row = 0; row < 4; ++row) {
      for (int col = 0; col < 4; ++col) {
        std::string t = grid[row][col];
        os << "  " << t << std::string(width - t.size(), ' ');
      }
      os << "\n";
    }
    return os.str();
  }
  if (fmt == Format::json) {
    std::ostringstream os;
    os << "{\"target\":\"square\",\"cells\":[";
    bool first = true;
    for (const auto& c : cells) {
      if (!first) os << ",";
      first = false;
      os << "{\"vector\":\"" << text(c.v) << "\",\"row\":" << c.cell.row
         << ",\"col\":" << c.cell.col
         << ",\"highlight\":" << (c.hl ? "true" : "false") << "}";
    }
    os << "]}\n";
    return os.str();
  }
  unsupported("square", fmt);
}

std::string render_hasse(Format fmt, const RootSystem& rs, int s) {
  auto elems = rs.stratum_positive(s);
  std::sort(elems.begin(), elems.end(), [](const Root& a, const Root& b) {
    int ha = 0, hb = 0;
    for (int x : a) ha += x;
    for (int x : b) hb += x;
    return std::tie(ha, a) < std::tie(hb, b);
  });
  Graph g = rs.hasse(elems);
  auto height = [](const std::string& id) {
    int h = 0;
    for (char c : id)
      if (c >= '0' && c <= '9') h += c - '0';
    return h;
  };
  if (fmt == Format::dot) {
    std::ostringstream os;
    os << "digraph hasse_s" << s << " {\n  rankdir=BT;\n";
    for (const auto& v : g.vertices) os << "  \"" << v << "\";\n";
    for (const auto& [i, j] : g.edges) {
      // orient low -> high
      int a = i, b = j;
      if (height(g.vertices[a]) > height(g.vertices[b])) std::swap(a, b);
      os << "  \"" << g.vertices[a] << "\" -> \"" << g.vertices[b] << "\";\n";
    }
    os << "}\n";
    return os.str();
  }
  if (fmt == Format::ascii) {
    std::ostringstream os;
    os << "hasse graph, stratum " << s << " (" << g.vertices.size()
       << " elements)\n";
    for (const auto& [i, j] : g.edges) {
      int a = i, b = j;
      if (height(g.vertices[a]) > height(g.vertices[b])) std::swap(a, b);
      os << "  " << g.vertices[a] << " < " << g.vertices[b] << "\n";
    }
    return os.str();
  }
  if (fmt == Format::json) {
    std::ostringstream os;
    os << "{\"target\":\"hasse\",\"stratum\":" << s << ",\"vertices\":[";
    for (size_t i = 0; i < g.vertices.size(); ++i)
      os << (i ? "," : "") << "\"" << g.vertices[i] << "\"";
    os << "],\"covers\":[";
    bool first = true;
    for (const auto& [i, j] : g.edges) {
      int a = i, b = j;
      if (height(g.vertices[a]) > height(g.vertices[b])) std::swap(a, b);
      os << (first ? "" : ",") << "[\"" << g.vertices[a] << "\",\""
         << g.vertices[b] << "\"]";
      first = false;
    }
    os << "]}\n";
    return os.str();
  }
  if (fmt == Format::svg) {
    // Layered drawing: one row per height, nodes in sorted order.
    std::map<int, std::vector<int>> rows;
    for (size_t i = 0; i < g.vertices.size(); ++i)
      rows[height(g.vertices[i])].push_back(static_cast<int>(i));
    int max_row = 0;
    for (const auto& [h, row] : rows)
      max_row = std::max(max_row, static_cast<int>(row.size()));
    const int cw = 70, rh = 56, pad = 30;
    int nrows = static_cast<int>(rows.size());
    std::vector<std::pair<int, int>> pos(g.vertices.size());
    int r = nrows - 1;  // lowest height at the bottom
    for (const auto& [h, row] : rows) {
      int offset = (max_row - static_cast<int>(row.size())) * cw / 2;
      for (size_t k = 0; k < row.size(); ++k)
        pos[row[k]] = {pad + offset + static_cast<int>(k) * cw + cw / 2,
                       pad + r * rh};
      --r;
    }
    std::ostringstream os;
    os << svg_open(2 * pad + max_row * cw, 2 * pad + nrows * rh);
    for (const auto& [i, j] : g.edges)
      os << "  <line x1=\"" << pos[i].first << "\" y1=\"" << pos[i].second
         << "\" x2=\"" << pos[j].first << "\" y2=\"" << pos[j].second
         << "\" stroke=\"#666666\"/>\n";
    for (size_t i = 0; i < g.vertices.size(); ++i) {
      os << "  <rect x=\"" << pos[i].first - 30 << "\" y=\""
         << pos[i].second - 10
         << "\" width=\"60\" height=\"20\" fill=\"#ffffff\" "
            "stroke=\"#333333\"/>\n";
      os << "  <text x=\"" << pos[i].first << "\" y=\"" << pos[i].second + 4
         << "\" text-anchor=\"middle\">" << g.vertices[i] << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
  }
  unsupported("hasse", fmt);
}

std::string render_dynkin(Format fmt, const RootSystem& rs) {
  const int n = rs.rank();
  // Chain and branch structure per family.
  std::vector<std::pair<int, int>> edges;  // 1-based labels
  std::vector<int> chain;                  // chain vertices in order
  int branch_from = 0, branch_to = 0;
  if (rs.family() == Family::A) {
    for (int i = 1; i <= n; ++i) chain.push_back(i);
  } else if (rs.family() == Family::D) {
    // Bourbaki D_n: chain 1..n-2 with fork to n-1 and n.
    for (int i = 1; i <= n - 1; ++i) chain.push_back(i);
    branch_from = n - 2;
    branch_to = n;
  } else {
    // Bourbaki E_n: chain 1-3-4-...-n, branch 4-2.
    chain.push_back(1);
    for (int i = 3; i <= n; ++i) chain.push_back(i);
    branch_from = 4;
    branch_to = 2;
  }
  for (size_t k = 0; k + 1 < chain.size(); ++k)
    edges.emplace_back(chain[k], chain[k + 1]);
  if (branch_from) edges.emplace_back(branch_from, branch_to);

  std::string name = std::string(1, family_to_char(rs.family())) +
                     std::to_string(n);
  if (fmt == Format::ascii) {
    std::ostringstream os;
    std::string line, below, marks;
    for (size_t k = 0; k < chain.size(); ++k) {
      if (k) line += " - ";
      size_t at = line.size();
      line += std::to_string(chain[k]);
      if (branch_from && chain[k] == branch_from) {
        below = std::string(at, ' ') + "|";
        marks = std::string(at, ' ') + std::to_string(branch_to);
      }
    }
    os << name << "\n" << line << "\n";
    if (branch_from) os << below << "\n" << marks << "\n";
    return os.str();
  }
  if (fmt == Format::dot) {
    std::ostringstream os;
    os << "graph dynkin_" << name << " {\n";
    for (int i = 1; i <= n; ++i) os << "  " << i << ";\n";
    for (auto [a, b] : edges) os << "  " << a << " -- " << b << ";\n";
    os << "}\n";
    return os.str();
  }
  if (fmt == Format::json) {
    std::ostringstream os;
    os << "{\"target\":\"dynkin\",\"system\":\"" << name << "\",\"edges\":[";
    for (size_t k = 0; k < edges.size(); ++k)
      os << (k ? "," : "") << "[" << edges[k].first << "," << edges[k].second
         << "]";
    os << "]}\n";
    return os.str();
  }
  if (fmt == Format::svg) {
    const int step = 60, pad = 40, r = 10;
    std::map<int, std::pair<int, int>> pos;
    for (size_t k = 0; k < chain.size(); ++k)
      pos[chain[k]] = {pad + static_cast<int>(k) * step, pad};
    if (branch_from)
      pos[branch_to] = {pos[branch_from].first, pad + step};
    std::ostringstream os;
    os << svg_open(2 * pad + static_cast<int>(chain.size() - 1) * step,
                   2 * pad + (branch_from ? step : 0));
    for (auto [a, b] : edges)
      os << "  <line x1=\"" << pos[a].first << "\" y1=\"" << pos[a].second
         << "\" x2=\"" << pos[b].first << "\" y2=\"" << pos[b].second
         << "\" stroke=\"#333333\"/>\n";
    for (int i = 1; i <= n; ++i) {
      os << "  <circle cx=\"" << pos[i].first << "\" cy=\"" << pos[i].second
         << "\" r=\"" << r << "\" fill=\"#ffffff\" stroke=\"#333333\"/>\n";
      os << "  <text x=\"" << pos[i].first << "\" y=\"" << pos[i].second + 4
         << "\" text-anchor=\"middle\">" << i << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
  }
  unsupported("dynkin", fmt);
}

std::string render_tgraph(Format fmt, int p) {
  if (p != 2 && p != 3) throw std::invalid_argument("tgraph: p must be 2 or 3");
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  if (p == 2) {
    for (int i = 0; i < 64; ++i) names.push_back(f3_string(f3_unpack(i)));
    for (int i = 0; i < 64; ++i)
      for (int j = i + 1; j < 64; ++j)
        if (t_adjacent_f3(f3_unpack(i), f3_unpack(j))) edges.emplace_back(i, j);
  } else {
    FpQuadSpace v = FpQuadSpace::e6_target();
    std::vector<FpVec> vecs;
    for (long long i = 0; i < v.size(); ++i) vecs.push_back(v.vector_at(i));
    for (const auto& x : vecs) {
      std::string t;
      for (int d : x) t += static_cast<char>('0' + d);
      names.push_back(t);
    }
    for (size_t i = 0; i < vecs.size(); ++i)
      for (size_t j = i + 1; j < vecs.size(); ++j)
        if (t_adjacent_zp(vecs[i], vecs[j]))
          edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  if (fmt == Format::dot) {
    std::ostringstream os;
    os << "graph tgraph_p" << p << " {\n";
    for (const auto& v : names) os << "  \"" << v << "\";\n";
    for (auto [i, j] : edges)
      os << "  \"" << names[i] << "\" -- \"" << names[j] << "\";\n";
    os << "}\n";
    return os.str();
  }
  if (fmt == Format::json) {
    std::ostringstream os;
    os << "{\"target\":\"tgraph\",\"p\":" << p
       << ",\"vertices\":" << names.size() << ",\"edges\":[";
    for (size_t k = 0; k < edges.size(); ++k)
      os << (k ? "," : "") << "[\"" << names[edges[k].first] << "\",\""
         << names[edges[k].second] << "\"]";
    os << "]}\n";
    return os.str();
  }
  unsupported("tgraph", fmt);
}

}  // namespace rootfp
