#include "ghilb/render.hpp"

#include <algorithm>

#include "ghilb/errors.hpp"

#ifndef GHILB_VERSION_STRING
#define GHILB_VERSION_STRING "0.0.0"
#endif

namespace ghilb {

AnnotationMode annotation_mode_from_string(const std::string& s) {
  if (s == "none") return AnnotationMode::none;
  if (s == "wall-degrees") return AnnotationMode::wall_degrees;
  if (s == "h0-classes") return AnnotationMode::h0_classes;
  throw ParseError("unknown annotation mode '" + s + "' (none|wall-degrees|h0-classes)");
}

Layout make_layout(const Fan& fan) {
  const Rat W(6), H(26, 5);
  Layout layout;
  for (const auto& p : fan.points) {
    Rat x = p.v[0] * (W / 2) + p.v[1] * W;
    Rat y = p.v[0] * H;
    layout.pos.push_back({x, y});
  }
  return layout;
}

namespace {

struct Edge {
  std::array<int, 2> v;
  bool interior;
  int wallIndex;  // -1 for boundary
};

std::vector<Edge> collect_edges(const Fan& fan) {
  std::vector<Edge> edges;
  for (size_t i = 0; i < fan.walls.size(); ++i)
    edges.push_back({fan.walls[i].v, true, static_cast<int>(i)});
  for (const auto& b : fan.boundaryEdges) edges.push_back({b, false, -1});
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.v < b.v; });
  return edges;
}

std::string degree_label(const Wall& wall, const KTheoryContext& kt) {
  const long r = kt.lattice().r;
  const CharacterTable& T = kt.lattice().characters;
  std::string out;
  for (long idx = 1; idx < r; ++idx) {
    if (!out.empty()) out += ",";
    out += std::to_string(wall_degree(wall, T.from_flat(idx), kt.fan(), kt.lattice()));
  }
  return out;
}

// Wall color by the homological degrees of the characters with positive
// degree on it: all in H0, all in H-1, or mixed.
std::string wall_color(const Wall& wall, const KTheoryContext& kt, const B0Report& report) {
  bool anyH0 = false, anyH1 = false;
  for (const auto& rec : report.records) {
    if (wall_degree(wall, rec.chi, kt.fan(), kt.lattice()) > 0) {
      (rec.homologicalDegree == 0 ? anyH0 : anyH1) = true;
    }
  }
  if (anyH0 && !anyH1) return "#1a7f37";
  if (anyH1 && !anyH0) return "#c62828";
  return "#e08700";
}

std::string dec(const Rat& v) { return format_decimal(v, 4); }

}  // namespace

std::string emit_svg(const Fan& fan, const Layout& layout, AnnotationMode mode,
                     const KTheoryContext* kt, const B0Report* report) {
  if (mode != AnnotationMode::none && kt == nullptr)
    throw ConsistencyError("emit_svg: annotation mode requires classifier data");
  if (mode == AnnotationMode::h0_classes && report == nullptr)
    throw ConsistencyError("emit_svg: h0-classes mode requires a classification report");
  const Rat H(26, 5);
  auto X = [&](int i) { return dec(layout.pos[i][0]); };
  auto Y = [&](int i) { return dec(H - layout.pos[i][1]); };  // svg y axis points down

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-0.5 -0.5 7 6.2\">\n";
  s += "<!-- ghilb " GHILB_VERSION_STRING " -->\n";
  for (const auto& e : collect_edges(fan)) {
    std::string color = "#000000";
    if (mode == AnnotationMode::h0_classes && e.interior)
      color = wall_color(fan.walls[e.wallIndex], *kt, *report);
    s += "<line x1=\"" + X(e.v[0]) + "\" y1=\"" + Y(e.v[0]) + "\" x2=\"" + X(e.v[1]) +
         "\" y2=\"" + Y(e.v[1]) + "\" stroke=\"" + color + "\" stroke-width=\"0.03\"/>\n";
  }
  for (int i = 0; i < static_cast<int>(fan.points.size()); ++i) {
    if (fan.points[i].corner) continue;
    s += "<circle cx=\"" + X(i) + "\" cy=\"" + Y(i) + "\" r=\"0.08\" fill=\"#000000\"/>\n";
  }
  if (mode == AnnotationMode::wall_degrees) {
    for (const auto& w : fan.walls) {
      Rat mx = (layout.pos[w.v[0]][0] + layout.pos[w.v[1]][0]) / 2;
      Rat my = H - (layout.pos[w.v[0]][1] + layout.pos[w.v[1]][1]) / 2;
      s += "<text x=\"" + dec(mx) + "\" y=\"" + dec(my - Rat(1, 10)) +
           "\" font-size=\"0.16\" text-anchor=\"middle\">" + degree_label(w, *kt) + "</text>\n";
    }
  }
  // corner labels in the standard orientation
  const char* names[3] = {"e_x", "e_y", "e_z"};
  const Vec3q corners[3] = {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)},
                            {Rat(0), Rat(0), Rat(1)}};
  for (int c = 0; c < 3; ++c) {
    for (int i = 0; i < static_cast<int>(fan.points.size()); ++i) {
      if (fan.points[i].v == corners[c]) {
        Rat dx = c == 0 ? Rat(0) : (c == 1 ? Rat(1, 4) : Rat(-1, 4));
        Rat dy = c == 0 ? Rat(-1, 5) : Rat(1, 5);
        s += "<text x=\"" + dec(layout.pos[i][0] + dx) + "\" y=\"" +
             dec(H - layout.pos[i][1] + dy) + "\" font-size=\"0.25\" text-anchor=\"middle\">" +
             names[c] + "</text>\n";
      }
    }
  }
  s += "</svg>\n";
  return s;
}

std::string emit_tikz(const Fan& fan, const Layout& layout, AnnotationMode mode,
                      const KTheoryContext* kt, const B0Report* report) {
  if (mode != AnnotationMode::none && kt == nullptr)
    throw ConsistencyError("emit_tikz: annotation mode requires classifier data");
  if (mode == AnnotationMode::h0_classes && report == nullptr)
    throw ConsistencyError("emit_tikz: h0-classes mode requires a classification report");
  auto P = [&](int i) {
    return "(" + dec(layout.pos[i][0]) + "," + dec(layout.pos[i][1]) + ")";
  };
  std::string s;
  s += "% ghilb " GHILB_VERSION_STRING "\n";
  s += "\\begin{tikzpicture}[scale=1]\n";
  for (const auto& e : collect_edges(fan)) {
    std::string opts;
    if (mode == AnnotationMode::h0_classes && e.interior) {
      std::string c = wall_color(fan.walls[e.wallIndex], *kt, *report);
      opts = c == "#1a7f37" ? "[green!60!black]" : (c == "#c62828" ? "[red!80!black]" : "[orange]");
    }
    s += "\\draw" + opts + " " + P(e.v[0]) + " -- " + P(e.v[1]) + ";\n";
  }
  for (int i = 0; i < static_cast<int>(fan.points.size()); ++i) {
    if (fan.points[i].corner) continue;
    s += "\\node at " + P(i) + " {$\\bullet$};\n";
  }
  if (mode == AnnotationMode::wall_degrees) {
    for (const auto& w : fan.walls) {
      Rat mx = (layout.pos[w.v[0]][0] + layout.pos[w.v[1]][0]) / 2;
      Rat my = (layout.pos[w.v[0]][1] + layout.pos[w.v[1]][1]) / 2 + Rat(3, 20);
      s += "\\node[font=\\tiny] at (" + dec(mx) + "," + dec(my) + ") {" + degree_label(w, *kt) +
           "};\n";
    }
  }
  s += "\\node at (-0.2,-0.2) {$e_z$};\n";
  s += "\\node at (6.2,-0.2) {$e_y$};\n";
  s += "\\node at (3,5.4) {$e_x$};\n";
  s += "\\end{tikzpicture}\n";
  return s;
}

}  // namespace ghilb
