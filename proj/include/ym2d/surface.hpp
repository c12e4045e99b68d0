#pragma once

#include "ym2d/class_series.hpp"
#include "ym2d/su2.hpp"
#include "ym2d/tensor.hpp"

#include <optional>
#include <string>

namespace ym2d {

enum class EdgeKind { Internal, Boundary, Outer };

struct Edge {
  EdgeKind kind = EdgeKind::Internal;
  int color = -1;  // SU(2) spin label of the Wilson edge; -1 = uncolored seam
  int tail = -1, head = -1;  // vertex ids, -1 when absent (closed circle edge)
};

struct Region {
  double area = 1.0;
  int genus = 0;
  // Cyclic boundary word: entry +(e+1) traverses edge e positively (region on
  // its left), -(e+1) reversed.  Empty word = closed region.
  std::vector<int> word;
};

struct Vertex {
  // Cyclic stub order over non-boundary edges: +(e+1) if the vertex is the
  // tail of e, -(e+1) if the head.
  std::vector<int> stubs;
  // "line": canonical 2-valent coupling (line-to-outer endpoint or a line
  // continuing through); "cg": Clebsch-Gordan trivalent vertex.
  std::string invariant = "line";
};

/// Cell-decomposed oriented surface with an open Wilson graph.
struct OpenGraphSurface {
  std::vector<Region> regions;
  std::vector<Edge> edges;
  std::vector<Vertex> vertices;

  static OpenGraphSurface from_json(const std::string& text);
  std::string to_json() const;
  /// Structural invariants: internal edges in exactly two word slots,
  /// boundary edges in one, outer edges in none; stub/endpoint consistency.
  void check_structure() const;
};

/// Edge and region color assignment checked by `validate`.
struct Coloring {
  std::map<int, int> edge_colors;    // graph edge -> spin
  std::map<int, int> region_colors;  // region -> spin (enriched circle colors)
};

struct ValidationIssue {
  std::string kind;  // "structure" | "admissibility" | "invariance"
  std::string where;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool valid() const { return issues.empty(); }
};

ValidationReport validate(const OpenGraphSurface& s, const Coloring& c);

/// Enriched graph: one oriented circle per region following its boundary
/// word; boundary intervals are replaced by circle segments.
struct EnrichedSurface {
  struct Segment {
    int edge;
    bool reversed;
  };
  OpenGraphSurface base;
  std::vector<std::vector<Segment>> circles;  // one per region
};

EnrichedSurface enrich(const OpenGraphSurface& s);

struct BoundaryData {
  std::map<int, su2::Matrix2cd> holonomies;  // boundary edge -> group element
};

struct SpectralTerm {
  std::vector<int> region_colors;
  double weight;
};

/// Partition-function value: a vector over the ordered outer-edge legs
/// (a scalar when the graph has no outer edges), with its spectral terms.
struct BoundaryState {
  Eigen::VectorXcd value;
  std::vector<int> outer_edges;  // leg order
  std::vector<SpectralTerm> terms;
  bool truncation_warning = false;
};

/// Spectral state sum: admissible region colorings under the cutoff, each
/// region contributing dim^{1-2g} e^{-A c2}, internal edges contracted with
/// Clebsch-Gordan intertwiners (1/dim per edge), vertices with their
/// invariant couplings.
BoundaryState evaluate_partition(const OpenGraphSurface& s, const BoundaryData& bd, double cutoff);

/// Single vertex-free boundary circle: the state as a class series.
ClassSeries boundary_series(const OpenGraphSurface& s, std::shared_ptr<const RootSystem> rs,
                            double cutoff);

/// Glue boundary edge e1 of s1 to boundary edge e2 of s2 (orientation
/// reversing).  An optional sandwich color threads an extra Wilson line
/// along the seam.  Matching endpoint vertices are merged; when each merged
/// pair carries one outer stub of equal color the stubs are sewn into a
/// through-going line.
OpenGraphSurface glue_surfaces(const OpenGraphSurface& s1, int e1, const OpenGraphSurface& s2,
                               int e2, std::optional<int> sandwich_color = std::nullopt);

// Ready-made fixtures.
OpenGraphSurface make_disc(double area);
OpenGraphSurface make_closed_region(double area, int genus);
OpenGraphSurface make_cylinder_with_lines(const std::vector<int>& colors,
                                          const std::vector<double>& areas);

}  // namespace ym2d
