/**
 * @file chart.cpp
 */
#include "modus/chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include "modus/names.hpp"

namespace modus {

namespace {

// Edge colors keyed by interval size 3..9; anything else renders gray.
constexpr const char* kFallbackColor = "#555555";
const char* edge_color(int interval) {
  switch (interval) {
    case 3: return "#e41a1c";
    case 4: return "#377eb8";
    case 5: return "#4daf4a";
    case 6: return "#984ea3";
    case 7: return "#ff7f00";
    case 8: return "#a65628";
    case 9: return "#f781bf";
    default: return kFallbackColor;
  }
}

// Fixed 3-decimal formatting keeps the output byte-stable.
std::string fmt3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

struct PointOnCircle {
  double x;
  double y;
};

// Tone i of k sits at -90 deg +. 360*i/k, clockwise from twelve o'clock
// (the SVG y axis points down, so increasing angles sweep clockwise).
PointOnCircle place(int index, int k, double radius, double cx, double cy) {
  const double theta =
      (-90.0 + 360.0 * static_cast<double>(index) / static_cast<double>(k)) *
      std::numbers::pi / 180.0;
  return {cx + radius * std::cos(theta), cy + radius * std::sin(theta)};
}

}  // namespace

ChartLayout layout(const Scale& s) {
  const double center = kChartCanvasSize / 2.0;
  ChartLayout result{center, center, kChartRadius, {}};
  const int k = s.size();
  result.entries.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const int tone = s.tones()[static_cast<std::size_t>(i)];
    const PointOnCircle p = place(i, k, kChartRadius, center, center);
    std::string label = std::string(tone_name(Tone(tone))) + " (" +
                        std::to_string(tone) + ")";
    result.entries.push_back(ChartPoint{tone, std::move(label), p.x, p.y});
  }
  return result;
}

std::vector<ChartEdge> harmonic_edges(const Scale& s, const HarmonicSystem& sys) {
  std::vector<ChartEdge> edges;
  const auto& t = s.tones();
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      const int iv = t[j] - t[i];
      if (sys.contains(iv)) edges.push_back(ChartEdge{t[i], t[j], iv});
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<ChartClique> find_cliques(std::span<const ChartEdge> edges, int max_size) {
  if (max_size != 3 && max_size != 4) {
    throw std::invalid_argument("clique size must be 3 or 4, got " +
                                std::to_string(max_size));
  }

  std::vector<int> vertices;
  bool adjacent[13][13] = {};
  for (const ChartEdge& e : edges) {
    adjacent[e.a][e.b] = adjacent[e.b][e.a] = true;
    vertices.push_back(e.a);
    vertices.push_back(e.b);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  std::vector<ChartClique> cliques;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!adjacent[vertices[i]][vertices[j]]) continue;
      for (std::size_t l = j + 1; l < n; ++l) {
        if (!adjacent[vertices[i]][vertices[l]] || !adjacent[vertices[j]][vertices[l]]) {
          continue;
        }
        cliques.push_back(ChartClique{{vertices[i], vertices[j], vertices[l]}});
        if (max_size < 4) continue;
        for (std::size_t m = l + 1; m < n; ++m) {
          if (adjacent[vertices[i]][vertices[m]] && adjacent[vertices[j]][vertices[m]] &&
              adjacent[vertices[l]][vertices[m]]) {
            cliques.push_back(
                ChartClique{{vertices[i], vertices[j], vertices[l], vertices[m]}});
          }
        }
      }
    }
  }
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

std::string render_svg(const Scale& s, const HarmonicSystem& sys,
                       const ChartOptions& options) {
  const ChartLayout lo = layout(s);
  const std::vector<ChartEdge> edges = harmonic_edges(s, sys);
  const std::vector<ChartClique> cliques =
      find_cliques(edges, std::max(3, std::min(4, sys.max_chord_size())));

  // Point lookup by tone value.
  const ChartPoint* points[13] = {};
  for (const ChartPoint& p : lo.entries) points[p.tone] = &p;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
         "viewBox=\"0 0 1000 1000\">\n";
  svg += "  <rect width=\"1000\" height=\"1000\" fill=\"#ffffff\"/>\n";
  svg += "  <circle cx=\"" + fmt3(lo.center_x) + "\" cy=\"" + fmt3(lo.center_y) +
         "\" r=\"" + fmt3(lo.radius) +
         "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

  // Chord fills go beneath the edges.
  if (options.shade_chords && !cliques.empty()) {
    svg += "  <g fill=\"#9090a8\" fill-opacity=\"0.16\">\n";
    for (const ChartClique& c : cliques) {
      svg += "    <polygon points=\"";
      for (std::size_t i = 0; i < c.tones.size(); ++i) {
        const ChartPoint* p = points[c.tones[i]];
        if (i > 0) svg += ' ';
        svg += fmt3(p->x) + ',' + fmt3(p->y);
      }
      svg += "\"/>\n";
    }
    svg += "  </g>\n";
  }

  if (!edges.empty()) {
    svg += "  <g stroke-width=\"2\">\n";
    for (const ChartEdge& e : edges) {
      const ChartPoint* pa = points[e.a];
      const ChartPoint* pb = points[e.b];
      svg += "    <line x1=\"" + fmt3(pa->x) + "\" y1=\"" + fmt3(pa->y) + "\" x2=\"" +
             fmt3(pb->x) + "\" y2=\"" + fmt3(pb->y) + "\" stroke=\"" +
             edge_color(e.interval) + "\"/>\n";
    }
    svg += "  </g>\n";
  }

  svg += "  <g font-family=\"sans-serif\" font-size=\"28\" text-anchor=\"middle\">\n";
  const int k = s.size();
  for (int i = 0; i < k; ++i) {
    const ChartPoint& p = lo.entries[static_cast<std::size_t>(i)];
    const PointOnCircle lp = place(i, k, kChartLabelRadius, lo.center_x, lo.center_y);
    svg += "    <circle cx=\"" + fmt3(p.x) + "\" cy=\"" + fmt3(p.y) +
           "\" r=\"7\" fill=\"#222222\"/>\n";
    svg += "    <text x=\"" + fmt3(lp.x) + "\" y=\"" + fmt3(lp.y + 9.0) + "\">" +
           p.label + "</text>\n";
  }
  svg += "  </g>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace modus
