/**
 * @file chart.hpp
 * @brief Circular chord charts: tones spaced evenly on a circle, one edge
 *        per harmonic interval, completed triangles (and four-cliques)
 *        marking the chords. Rendered as deterministic SVG.
 */
#pragma once

#include <span>
#include <string>
#include <vector>

#include "modus/harmony.hpp"
#include "modus/theory.hpp"

namespace modus {

/// Canvas geometry. All constants are fixed so identical inputs render
/// byte-identical documents.
inline constexpr double kChartCanvasSize = 1000.0;
inline constexpr double kChartRadius = 400.0;
inline constexpr double kChartLabelRadius = 452.0;

struct ChartPoint {
  int tone;
  std::string label;  // tone name plus numeric value, e.g. "A (1)"
  double x;
  double y;
};

struct ChartLayout {
  double center_x;
  double center_y;
  double radius;
  std::vector<ChartPoint> entries;
};

/// An unordered tone pair whose interval is harmonic; stored with a < b.
struct ChartEdge {
  int a;
  int b;
  Interval interval;

  friend bool operator==(const ChartEdge&, const ChartEdge&) = default;
  friend auto operator<=>(const ChartEdge&, const ChartEdge&) = default;
};

/// A complete subgraph of the edge set, i.e. a chord.
struct ChartClique {
  std::vector<int> tones;

  friend bool operator==(const ChartClique&, const ChartClique&) = default;
  friend auto operator<=>(const ChartClique&, const ChartClique&) = default;
};

struct ChartOptions {
  bool shade_chords = true;  // fill each clique with a translucent polygon
};

/// Places the scale's k tones evenly on the circle, first tone at twelve
/// o'clock, ascending clockwise.
ChartLayout layout(const Scale& s);

/// One edge per unordered tone pair at a harmonic interval, sorted by
/// endpoints.
std::vector<ChartEdge> harmonic_edges(const Scale& s, const HarmonicSystem& sys);

/// All complete subgraphs of size 3, plus size 4 when max_size is 4.
/// max_size must be 3 or 4. Output is sorted lexicographically and equals
/// enumerate_chords on the scale the edges came from.
std::vector<ChartClique> find_cliques(std::span<const ChartEdge> edges, int max_size);

/// Renders the full chart as an SVG 1.1 document: circle, labeled tone
/// points, one line per edge colored by interval size, and (optionally) a
/// translucent polygon per chord beneath the edges. Byte-identical output
/// for identical inputs.
std::string render_svg(const Scale& s, const HarmonicSystem& sys,
                       const ChartOptions& options = {});

}  // namespace modus
