#include "ym2d/surface.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace ym2d {

namespace {

double c2_su2(int m) { return 0.5 * m * (m + 2); }

// --- minimal labeled-tensor contraction ---------------------------------

struct TNT {
  std::vector<int> legs;
  std::vector<int> dims;
  std::vector<complexd> data;  // row-major over legs

  size_t size() const {
    size_t s = 1;
    for (int d : dims) s *= d;
    return s;
  }
};

// Trace out legs repeated inside one tensor.
TNT self_trace(TNT t) {
  for (;;) {
    int a = -1, b = -1;
    for (size_t i = 0; i < t.legs.size() && a < 0; ++i)
      for (size_t j = i + 1; j < t.legs.size(); ++j)
        if (t.legs[i] == t.legs[j]) {
          a = (int)i;
          b = (int)j;
          break;
        }
    if (a < 0) return t;
    TNT out;
    for (size_t k = 0; k < t.legs.size(); ++k)
      if ((int)k != a && (int)k != b) {
        out.legs.push_back(t.legs[k]);
        out.dims.push_back(t.dims[k]);
      }
    out.data.assign(out.size(), complexd(0, 0));
    std::vector<int> idx(t.legs.size(), 0);
    const size_t n = t.size();
    for (size_t flat = 0; flat < n; ++flat) {
      size_t rem = flat;
      for (int k = (int)t.legs.size() - 1; k >= 0; --k) {
        idx[k] = int(rem % t.dims[k]);
        rem /= t.dims[k];
      }
      if (idx[a] != idx[b]) continue;
      size_t o = 0;
      for (size_t k = 0; k < t.legs.size(); ++k)
        if ((int)k != a && (int)k != b) o = o * t.dims[k] + idx[k];
      out.data[o] += t.data[flat];
    }
    t = std::move(out);
  }
}

TNT contract(const TNT& A, const TNT& B) {
  std::vector<int> shared;
  for (int l : A.legs)
    if (std::find(B.legs.begin(), B.legs.end(), l) != B.legs.end()) shared.push_back(l);
  TNT out;
  std::vector<int> apos, bpos;  // positions of kept legs
  for (size_t i = 0; i < A.legs.size(); ++i)
    if (std::find(shared.begin(), shared.end(), A.legs[i]) == shared.end()) {
      out.legs.push_back(A.legs[i]);
      out.dims.push_back(A.dims[i]);
      apos.push_back((int)i);
    }
  for (size_t i = 0; i < B.legs.size(); ++i)
    if (std::find(shared.begin(), shared.end(), B.legs[i]) == shared.end()) {
      out.legs.push_back(B.legs[i]);
      out.dims.push_back(B.dims[i]);
      bpos.push_back((int)i);
    }
  std::vector<int> ashared, bshared;
  for (int l : shared) {
    ashared.push_back(int(std::find(A.legs.begin(), A.legs.end(), l) - A.legs.begin()));
    bshared.push_back(int(std::find(B.legs.begin(), B.legs.end(), l) - B.legs.begin()));
  }
  out.data.assign(out.size(), complexd(0, 0));
  std::vector<int> ai(A.legs.size(), 0), bi(B.legs.size(), 0);
  const size_t na = A.size();
  for (size_t fa = 0; fa < na; ++fa) {
    size_t rem = fa;
    for (int k = (int)A.legs.size() - 1; k >= 0; --k) {
      ai[k] = int(rem % A.dims[k]);
      rem /= A.dims[k];
    }
    if (A.data[fa] == complexd(0, 0)) continue;
    const size_t nb = B.size();
    for (size_t fb = 0; fb < nb; ++fb) {
      size_t r2 = fb;
      for (int k = (int)B.legs.size() - 1; k >= 0; --k) {
        bi[k] = int(r2 % B.dims[k]);
        r2 /= B.dims[k];
      }
      bool ok = true;
      for (size_t s = 0; s < shared.size() && ok; ++s) ok = ai[ashared[s]] == bi[bshared[s]];
      if (!ok) continue;
      size_t o = 0;
      for (int p : apos) o = o * A.dims[p] + ai[p];
      for (int p : bpos) o = o * B.dims[p] + bi[p];
      out.data[o] += A.data[fa] * B.data[fb];
    }
  }
  return self_trace(std::move(out));
}

TNT contract_all(std::vector<TNT> ts) {
  for (auto& t : ts) t = self_trace(std::move(t));
  if (ts.empty()) return TNT{{}, {}, {complexd(1, 0)}};
  while (ts.size() > 1) {
    // prefer a pair sharing a leg
    int pi = -1, pj = -1;
    for (size_t i = 0; i < ts.size() && pi < 0; ++i)
      for (size_t j = i + 1; j < ts.size(); ++j) {
        bool share = false;
        for (int l : ts[i].legs)
          if (std::find(ts[j].legs.begin(), ts[j].legs.end(), l) != ts[j].legs.end()) share = true;
        if (share) {
          pi = (int)i;
          pj = (int)j;
          break;
        }
      }
    if (pi < 0) {
      pi = 0;
      pj = 1;
    }
    TNT merged = contract(ts[pi], ts[pj]);
    ts.erase(ts.begin() + pj);
    ts[pi] = std::move(merged);
  }
  return ts[0];
}

// --- slot bookkeeping ----------------------------------------------------

struct EdgeSlots {
  int pos_region = -1, pos_slot = -1;  // positive traversal
  int neg_region = -1, neg_slot = -1;  // negative traversal
  int count = 0;
};

std::vector<EdgeSlots> collect_slots(const OpenGraphSurface& s) {
  std::vector<EdgeSlots> slots(s.edges.size());
  for (size_t r = 0; r < s.regions.size(); ++r) {
    const auto& word = s.regions[r].word;
    for (size_t j = 0; j < word.size(); ++j) {
      int w = word[j];
      int e = std::abs(w) - 1;
      if (e < 0 || e >= (int)s.edges.size()) throw StructureError("boundary word references a missing edge");
      auto& sl = slots[e];
      ++sl.count;
      if (w > 0) {
        if (sl.pos_region >= 0) throw StructureError("edge traversed positively twice");
        sl.pos_region = (int)r;
        sl.pos_slot = (int)j;
      } else {
        if (sl.neg_region >= 0) throw StructureError("edge traversed negatively twice");
        sl.neg_region = (int)r;
        sl.neg_slot = (int)j;
      }
    }
  }
  return slots;
}

}  // namespace

void OpenGraphSurface::check_structure() const {
  auto slots = collect_slots(*this);
  for (size_t e = 0; e < edges.size(); ++e) {
    const auto& sl = slots[e];
    switch (edges[e].kind) {
      case EdgeKind::Internal:
        if (sl.count != 2 || sl.pos_region < 0 || sl.neg_region < 0)
          throw StructureError("internal edge must appear once in each direction");
        break;
      case EdgeKind::Boundary:
        if (sl.count != 1) throw StructureError("boundary edge must appear in exactly one word");
        break;
      case EdgeKind::Outer:
        if (sl.count != 0) throw StructureError("outer edge may not appear in boundary words");
        break;
    }
  }
  std::vector<int> stub_count(edges.size(), 0);
  for (size_t v = 0; v < vertices.size(); ++v) {
    if (vertices[v].stubs.empty()) throw StructureError("vertex with no stubs");
    for (int sgn : vertices[v].stubs) {
      int e = std::abs(sgn) - 1;
      if (e < 0 || e >= (int)edges.size()) throw StructureError("stub references a missing edge");
      if (edges[e].kind == EdgeKind::Boundary)
        throw StructureError("boundary edges do not appear in vertex stubs");
      ++stub_count[e];
      int want = sgn > 0 ? edges[e].tail : edges[e].head;
      if (want != (int)v) throw StructureError("stub orientation disagrees with edge endpoints");
    }
  }
  for (size_t e = 0; e < edges.size(); ++e)
    if (edges[e].kind == EdgeKind::Outer && stub_count[e] != 1)
      throw StructureError("outer edge must attach to exactly one vertex");
}

ValidationReport validate(const OpenGraphSurface& s, const Coloring& c) {
  ValidationReport rep;
  std::vector<EdgeSlots> slots;
  try {
    s.check_structure();
    slots = collect_slots(s);
  } catch (const StructureError& err) {
    rep.issues.push_back({"structure", "surface", err.what()});
    return rep;
  }

  auto region_color = [&](int r) -> int {
    auto it = c.region_colors.find(r);
    return it == c.region_colors.end() ? -1 : it->second;
  };
  auto edge_color = [&](int e) -> int {
    auto it = c.edge_colors.find(e);
    if (it != c.edge_colors.end()) return it->second;
    return s.edges[e].color;
  };

  for (size_t e = 0; e < s.edges.size(); ++e) {
    if (s.edges[e].kind != EdgeKind::Internal) continue;
    int mu = edge_color((int)e);
    int mL = region_color(slots[e].pos_region), mR = region_color(slots[e].neg_region);
    if (mL < 0 || mR < 0) {
      rep.issues.push_back({"admissibility", "edge " + std::to_string(e),
                            "regions adjacent to a Wilson edge must be colored"});
      continue;
    }
    if (mu < 0) {
      if (mL != mR)
        rep.issues.push_back({"admissibility", "edge " + std::to_string(e),
                              "seam between regions of different color"});
    } else if (!su2_admissible(mL, mR, mu)) {
      rep.issues.push_back(
          {"admissibility", "edge " + std::to_string(e),
           "V_" + std::to_string(mL) + " not contained in V_" + std::to_string(mu) +
               " (x) V_" + std::to_string(mR)});
    }
  }

  for (size_t v = 0; v < s.vertices.size(); ++v) {
    const auto& vx = s.vertices[v];
    std::vector<int> colors;
    for (int sgn : vx.stubs) colors.push_back(edge_color(std::abs(sgn) - 1));
    if (vx.invariant == "line") {
      if (colors.size() != 2 || colors[0] != colors[1])
        rep.issues.push_back({"invariance", "vertex " + std::to_string(v),
                              "line vertex needs two stubs of equal color"});
    } else if (vx.invariant == "cg") {
      if (colors.size() != 3 || !su2_admissible(colors[0], colors[1], colors[2]))
        rep.issues.push_back({"invariance", "vertex " + std::to_string(v),
                              "no invariant vector for this color triple"});
    } else {
      rep.issues.push_back({"invariance", "vertex " + std::to_string(v),
                            "unknown invariant reference '" + vx.invariant + "'"});
    }
  }
  return rep;
}

EnrichedSurface enrich(const OpenGraphSurface& s) {
  s.check_structure();
  EnrichedSurface out;
  out.base = s;
  for (auto& r : s.regions) {
    std::vector<EnrichedSurface::Segment> circle;
    for (int w : r.word) circle.push_back({std::abs(w) - 1, w < 0});
    out.circles.push_back(std::move(circle));
  }
  return out;
}

// --- spectral state sum --------------------------------------------------

namespace {

struct Engine {
  const OpenGraphSurface& s;
  const BoundaryData& bd;
  double cutoff;
  std::vector<EdgeSlots> slots;
  int mmax;

  explicit Engine(const OpenGraphSurface& s_, const BoundaryData& bd_, double cutoff_)
      : s(s_), bd(bd_), cutoff(cutoff_), slots(collect_slots(s_)) {
    mmax = 0;
    while (c2_su2(mmax + 1) <= cutoff) ++mmax;
  }

  bool edge_ok(int e, const std::vector<int>& colors) const {
    const auto& sl = slots[e];
    if (s.edges[e].kind != EdgeKind::Internal) return true;
    int mL = colors[sl.pos_region], mR = colors[sl.neg_region];
    if (mL < 0 || mR < 0) return true;  // not yet assigned
    int mu = s.edges[e].color;
    return mu < 0 ? mL == mR : su2_admissible(mL, mR, mu);
  }

  bool admissible(const std::vector<int>& colors) const {
    for (size_t e = 0; e < s.edges.size(); ++e)
      if (!edge_ok((int)e, colors)) return false;
    return true;
  }

  void enumerate(std::vector<int>& colors, size_t r, const std::function<void()>& emit) {
    if (r == s.regions.size()) {
      emit();
      return;
    }
    for (int m = 0; m <= mmax; ++m) {
      colors[r] = m;
      bool ok = true;
      for (size_t e = 0; e < s.edges.size() && ok; ++e) {
        const auto& sl = slots[e];
        if (s.edges[e].kind == EdgeKind::Internal &&
            (sl.pos_region == (int)r || sl.neg_region == (int)r))
          ok = edge_ok((int)e, colors);
      }
      if (ok) enumerate(colors, r + 1, emit);
    }
    colors[r] = -1;
  }

  // Evaluate one admissible coloring; accumulates into `value`.
  void add_term(const std::vector<int>& colors, const std::vector<int>& outer_order,
                Eigen::VectorXcd& value, std::vector<SpectralTerm>& terms) {
    double w = 1;
    for (size_t r = 0; r < s.regions.size(); ++r) {
      double d = colors[r] + 1;
      w *= std::pow(d, 1 - 2 * s.regions[r].genus) * std::exp(-s.regions[r].area * c2_su2(colors[r]));
      if (s.regions[r].word.empty()) w *= d;  // trace of the identity
    }
    for (size_t e = 0; e < s.edges.size(); ++e)
      if (s.edges[e].kind == EdgeKind::Internal) w /= double(colors[slots[e].neg_region] + 1);

    // wire legs: per region slot j, wire(r, j) enters slot j as row, leaves as col
    int next_leg = 0;
    std::vector<std::vector<int>> wire(s.regions.size());
    for (size_t r = 0; r < s.regions.size(); ++r) {
      wire[r].resize(s.regions[r].word.size());
      for (auto& x : wire[r]) x = next_leg++;
    }
    // mu legs per internal colored edge: [0] = pi-row (head side), [1] = pi-col (tail side)
    std::vector<std::array<int, 2>> mu_leg(s.edges.size(), {-1, -1});
    for (size_t e = 0; e < s.edges.size(); ++e)
      if (s.edges[e].kind == EdgeKind::Internal && s.edges[e].color >= 0) {
        mu_leg[e][0] = next_leg++;
        mu_leg[e][1] = next_leg++;
      }

    std::vector<TNT> net;
    auto wire_pair = [&](int r, int j) -> std::pair<int, int> {
      int L = (int)s.regions[r].word.size();
      return {wire[r][j], wire[r][(j + 1) % L]};
    };

    for (size_t e = 0; e < s.edges.size(); ++e) {
      const auto& ed = s.edges[e];
      const auto& sl = slots[e];
      if (ed.kind == EdgeKind::Boundary) {
        bool rev = sl.pos_region < 0;
        int r = rev ? sl.neg_region : sl.pos_region;
        int j = rev ? sl.neg_slot : sl.pos_slot;
        auto it = bd.holonomies.find((int)e);
        if (it == bd.holonomies.end())
          throw std::invalid_argument("evaluate_partition: missing boundary holonomy for edge " +
                                      std::to_string(e));
        su2::Matrix2cd g = rev ? it->second.adjoint().eval() : it->second;
        Eigen::MatrixXcd M = su2::rep(colors[r], g);
        auto [row, col] = wire_pair(r, j);
        TNT t;
        t.legs = {row, col};
        t.dims = {(int)M.rows(), (int)M.cols()};
        t.data.resize(t.size());
        for (int a = 0; a < M.rows(); ++a)
          for (int b = 0; b < M.cols(); ++b) t.data[a * M.cols() + b] = M(a, b);
        net.push_back(std::move(t));
      } else if (ed.kind == EdgeKind::Internal) {
        int mL = colors[sl.pos_region], mR = colors[sl.neg_region];
        auto [aL, bL] = wire_pair(sl.pos_region, sl.pos_slot);
        auto [cR, dR] = wire_pair(sl.neg_region, sl.neg_slot);
        int dl = mL + 1, dr = mR + 1;
        if (ed.color < 0) {
          // seam: identity intertwiner
          TNT B{{aL, dR}, {dl, dr}, {}};
          B.data.assign((size_t)dl * dr, complexd(0, 0));
          for (int a = 0; a < dl; ++a) B.data[a * dr + a] = 1;
          TNT Bd{{cR, bL}, {dr, dl}, {}};
          Bd.data.assign((size_t)dl * dr, complexd(0, 0));
          for (int a = 0; a < dl; ++a) Bd.data[a * dl + a] = 1;
          net.push_back(std::move(B));
          net.push_back(std::move(Bd));
        } else {
          Intertwiner b = cg_intertwiner(mR, mL, ed.color);  // V_{mR} -> V_{mL} (x) V_mu
          int dm = ed.color + 1;
          TNT B{{aL, mu_leg[e][0], dR}, {dl, dm, dr}, {}};
          B.data.assign((size_t)dl * dm * dr, complexd(0, 0));
          for (int a = 0; a < dl; ++a)
            for (int m = 0; m < dm; ++m)
              for (int d = 0; d < dr; ++d) B.data[((size_t)a * dm + m) * dr + d] = b.mat(a * dm + m, d);
          TNT Bd{{cR, bL, mu_leg[e][1]}, {dr, dl, dm}, {}};
          Bd.data.assign((size_t)dl * dm * dr, complexd(0, 0));
          for (int cc = 0; cc < dr; ++cc)
            for (int bb = 0; bb < dl; ++bb)
              for (int m = 0; m < dm; ++m)
                Bd.data[((size_t)cc * dl + bb) * dm + m] = std::conj(b.mat(bb * dm + m, cc));
          net.push_back(std::move(B));
          net.push_back(std::move(Bd));
        }
      }
    }

    // vertex couplings and outer legs
    std::map<int, int> outer_leg;  // outer edge -> leg id
    for (size_t e = 0; e < s.edges.size(); ++e) {
      const auto& ed = s.edges[e];
      if (ed.kind != EdgeKind::Internal || ed.color < 0) continue;
      if (ed.tail < 0 && ed.head < 0) {
        // closed Wilson loop: trace the holonomy legs
        int dm = ed.color + 1;
        TNT t{{mu_leg[e][0], mu_leg[e][1]}, {dm, dm}, {}};
        t.data.assign((size_t)dm * dm, complexd(0, 0));
        for (int a = 0; a < dm; ++a) t.data[a * dm + a] = 1;
        net.push_back(std::move(t));
      }
    }
    for (size_t v = 0; v < s.vertices.size(); ++v) {
      const auto& vx = s.vertices[v];
      std::vector<std::pair<int, int>> graph_stub;  // (leg id, edge)
      std::vector<int> outer_here;
      for (int sgn : vx.stubs) {
        int e = std::abs(sgn) - 1;
        if (s.edges[e].kind == EdgeKind::Outer) {
          outer_here.push_back(e);
        } else if (s.edges[e].color >= 0) {
          graph_stub.push_back({sgn > 0 ? mu_leg[e][1] : mu_leg[e][0], e});
        }
      }
      if (vx.invariant != "line")
        throw StructureError("evaluate_partition: only 'line' vertices are evaluated");
      if (graph_stub.size() == 1 && outer_here.size() == 1) {
        outer_leg[outer_here[0]] = graph_stub[0].first;  // free leg
      } else if (graph_stub.size() == 2 && outer_here.empty()) {
        int e1 = graph_stub[0].second, e2 = graph_stub[1].second;
        if (s.edges[e1].color != s.edges[e2].color)
          throw StructureError("through vertex joining lines of different color");
        int dm = s.edges[e1].color + 1;
        TNT t{{graph_stub[0].first, graph_stub[1].first}, {dm, dm}, {}};
        t.data.assign((size_t)dm * dm, complexd(0, 0));
        for (int a = 0; a < dm; ++a) t.data[a * dm + a] = 1;
        net.push_back(std::move(t));
      } else {
        throw StructureError("evaluate_partition: unsupported vertex configuration");
      }
    }

    TNT res = contract_all(std::move(net));
    // reorder the free legs to the requested outer-edge order
    std::vector<int> want;
    for (int e : outer_order) want.push_back(outer_leg.at(e));
    if (res.legs.size() != want.size())
      throw StructureError("evaluate_partition: leftover legs after contraction");
    // permutation map
    std::vector<int> perm(want.size());
    for (size_t i = 0; i < want.size(); ++i) {
      auto it = std::find(res.legs.begin(), res.legs.end(), want[i]);
      if (it == res.legs.end()) throw StructureError("evaluate_partition: missing outer leg");
      perm[i] = int(it - res.legs.begin());
    }
    std::vector<int> idx(res.legs.size(), 0);
    const size_t n = res.data.size();
    for (size_t flat = 0; flat < n; ++flat) {
      size_t rem = flat;
      for (int k = (int)res.legs.size() - 1; k >= 0; --k) {
        idx[k] = int(rem % res.dims[k]);
        rem /= res.dims[k];
      }
      size_t o = 0;
      for (size_t i = 0; i < perm.size(); ++i) o = o * res.dims[perm[i]] + idx[perm[i]];
      value(o) += w * res.data[flat];
    }
    terms.push_back({colors, w});
  }
};

}  // namespace

BoundaryState evaluate_partition(const OpenGraphSurface& s, const BoundaryData& bd, double cutoff) {
  s.check_structure();
  if (cutoff <= 0) throw std::invalid_argument("evaluate_partition: cutoff must be > 0");
  Engine eng(s, bd, cutoff);

  BoundaryState out;
  for (size_t e = 0; e < s.edges.size(); ++e)
    if (s.edges[e].kind == EdgeKind::Outer) out.outer_edges.push_back((int)e);
  int D = 1;
  for (int e : out.outer_edges) D *= s.edges[e].color + 1;
  out.value = Eigen::VectorXcd::Zero(D);

  std::vector<int> colors(s.regions.size(), -1);
  int count = 0;
  eng.enumerate(colors, 0, [&] {
    eng.add_term(colors, out.outer_edges, out.value, out.terms);
    ++count;
  });

  if (count == 0 && !s.regions.empty()) {
    // distinguish truncation from genuine Clebsch-Gordan obstruction
    Engine probe(s, bd, 4 * cutoff + 8);
    std::vector<int> c2v(s.regions.size(), -1);
    bool found = false;
    probe.enumerate(c2v, 0, [&] { found = true; });
    out.truncation_warning = found;
  }
  return out;
}

ClassSeries boundary_series(const OpenGraphSurface& s, std::shared_ptr<const RootSystem> rs,
                            double cutoff) {
  s.check_structure();
  auto slots = collect_slots(s);
  int bedge = -1;
  for (size_t e = 0; e < s.edges.size(); ++e) {
    if (s.edges[e].kind == EdgeKind::Outer) throw StructureError("boundary_series: outer edges present");
    if (s.edges[e].kind == EdgeKind::Boundary) {
      if (bedge >= 0) throw StructureError("boundary_series: more than one boundary circle");
      bedge = (int)e;
    }
  }
  if (bedge < 0) throw StructureError("boundary_series: no boundary circle");
  if (s.edges[bedge].tail >= 0 || s.edges[bedge].head >= 0)
    throw StructureError("boundary_series: boundary circle carries vertices");

  int bregion = slots[bedge].pos_region >= 0 ? slots[bedge].pos_region : slots[bedge].neg_region;
  ClassSeries series(rs, cutoff);
  BoundaryData bd;
  bd.holonomies[bedge] = su2::Matrix2cd::Identity();
  // The chi_lambda coefficient is the state sum restricted to boundary color
  // lambda, evaluated at g = 1, divided by dim(lambda).
  for (int m = 0; c2_su2(m) <= cutoff; ++m) {
    Engine eng(s, bd, cutoff);
    Eigen::VectorXcd val = Eigen::VectorXcd::Zero(1);
    std::vector<SpectralTerm> terms;
    std::vector<int> colors(s.regions.size(), -1);
    eng.enumerate(colors, 0, [&] {
      if (colors[bregion] != m) return;
      eng.add_term(colors, {}, val, terms);
    });
    double c = val(0).real() / double(m + 1);
    if (c != 0) series.set(HighestWeight(std::vector<int>{m}), c);
  }
  return series;
}

// --- gluing ---------------------------------------------------------------

OpenGraphSurface glue_surfaces(const OpenGraphSurface& s1, int e1, const OpenGraphSurface& s2,
                               int e2, std::optional<int> sandwich_color) {
  s1.check_structure();
  s2.check_structure();
  if (e1 < 0 || e1 >= (int)s1.edges.size() || s1.edges[e1].kind != EdgeKind::Boundary)
    throw std::invalid_argument("glue_surfaces: e1 is not a boundary edge");
  if (e2 < 0 || e2 >= (int)s2.edges.size() || s2.edges[e2].kind != EdgeKind::Boundary)
    throw std::invalid_argument("glue_surfaces: e2 is not a boundary edge");

  OpenGraphSurface g = s1;
  const int edge_off = (int)s1.edges.size();
  const int vert_off = (int)s1.vertices.size();
  const int reg_off = (int)s1.regions.size();
  for (auto e : s2.edges) {
    if (e.tail >= 0) e.tail += vert_off;
    if (e.head >= 0) e.head += vert_off;
    g.edges.push_back(e);
  }
  for (auto v : s2.vertices) {
    for (auto& sgn : v.stubs) sgn = sgn > 0 ? sgn + edge_off : sgn - edge_off;
    g.vertices.push_back(v);
  }
  for (auto r : s2.regions) {
    for (auto& w : r.word) w = w > 0 ? w + edge_off : w - edge_off;
    g.regions.push_back(r);
  }
  (void)reg_off;
  const int e2g = e2 + edge_off;

  // new internal edge replacing the glued pair
  Edge seam;
  seam.kind = EdgeKind::Internal;
  seam.color = sandwich_color.value_or(-1);
  const int seam_id = (int)g.edges.size();
  g.edges.push_back(seam);

  auto slots = collect_slots(g);
  // e1's slot keeps its region; write the seam positively there
  {
    auto& sl = slots[e1];
    int r = sl.pos_region >= 0 ? sl.pos_region : sl.neg_region;
    int j = sl.pos_region >= 0 ? sl.pos_slot : sl.neg_slot;
    g.regions[r].word[j] = seam_id + 1;
  }
  {
    auto& sl = slots[e2g];
    int r = sl.pos_region >= 0 ? sl.pos_region : sl.neg_region;
    int j = sl.pos_region >= 0 ? sl.pos_slot : sl.neg_slot;
    g.regions[r].word[j] = -(seam_id + 1);
  }

  // merge endpoint vertices (orientation-reversing: tail1<->head2, head1<->tail2)
  struct Merge {
    int a, b;
  };
  std::vector<Merge> merges;
  int t1 = g.edges[e1].tail, h1 = g.edges[e1].head;
  int t2 = g.edges[e2g].tail, h2 = g.edges[e2g].head;
  if ((t1 >= 0) != (h2 >= 0) || (h1 >= 0) != (t2 >= 0))
    throw std::invalid_argument("glue_surfaces: incompatible boundary intervals");
  if (t1 >= 0 && t1 != h2) merges.push_back({t1, h2});
  if (h1 >= 0 && h1 != t2) merges.push_back({h1, t2});
  if (seam.color >= 0 && (t1 >= 0 || h1 >= 0))
    throw StructureError("glue_surfaces: sandwich gluing of vertexed intervals is not supported");

  std::vector<int> drop_edges{e1, e2g};
  std::vector<int> drop_verts;
  for (auto [a, b] : merges) {
    auto& va = g.vertices[a];
    auto& vb = g.vertices[b];
    // sew one outer stub from each side into a through line when possible
    auto outer_stub = [&](const Vertex& v) -> int {
      int found = -1;
      for (size_t i = 0; i < v.stubs.size(); ++i)
        if (g.edges[std::abs(v.stubs[i]) - 1].kind == EdgeKind::Outer) {
          if (found >= 0) return -2;
          found = (int)i;
        }
      return found;
    };
    int ia = outer_stub(va), ib = outer_stub(vb);
    std::vector<int> stubs;
    if (ia >= 0 && ib >= 0 &&
        g.edges[std::abs(va.stubs[ia]) - 1].color == g.edges[std::abs(vb.stubs[ib]) - 1].color) {
      drop_edges.push_back(std::abs(va.stubs[ia]) - 1);
      drop_edges.push_back(std::abs(vb.stubs[ib]) - 1);
      for (size_t i = 0; i < va.stubs.size(); ++i)
        if ((int)i != ia) stubs.push_back(va.stubs[i]);
      for (size_t i = 0; i < vb.stubs.size(); ++i)
        if ((int)i != ib) stubs.push_back(vb.stubs[i]);
    } else {
      stubs = va.stubs;
      stubs.insert(stubs.end(), vb.stubs.begin(), vb.stubs.end());
    }
    va.stubs = std::move(stubs);
    // repoint b's edges to a
    for (auto& e : g.edges) {
      if (e.tail == b) e.tail = a;
      if (e.head == b) e.head = a;
    }
    drop_verts.push_back(b);
  }

  // compact: drop glued boundary edges, sewn outers, and merged vertices
  std::vector<int> edge_map(g.edges.size(), -1), vert_map(g.vertices.size(), -1);
  OpenGraphSurface out;
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    if (std::find(drop_verts.begin(), drop_verts.end(), (int)v) != drop_verts.end()) continue;
    vert_map[v] = (int)out.vertices.size();
    out.vertices.push_back(g.vertices[v]);
  }
  for (size_t e = 0; e < g.edges.size(); ++e) {
    if (std::find(drop_edges.begin(), drop_edges.end(), (int)e) != drop_edges.end()) continue;
    edge_map[e] = (int)out.edges.size();
    Edge ee = g.edges[e];
    if (ee.tail >= 0) ee.tail = vert_map[ee.tail];
    if (ee.head >= 0) ee.head = vert_map[ee.head];
    out.edges.push_back(ee);
  }
  for (auto r : g.regions) {
    for (auto& w : r.word) {
      int e = std::abs(w) - 1;
      if (edge_map[e] < 0) throw StructureError("glue_surfaces: dropped edge still referenced");
      w = (w > 0 ? 1 : -1) * (edge_map[e] + 1);
    }
    out.regions.push_back(r);
  }
  for (auto& v : out.vertices) {
    std::vector<int> stubs;
    for (int sgn : v.stubs) {
      int e = std::abs(sgn) - 1;
      if (edge_map[e] < 0) continue;  // sewn outer edge
      stubs.push_back((sgn > 0 ? 1 : -1) * (edge_map[e] + 1));
    }
    v.stubs = std::move(stubs);
  }
  out.check_structure();
  return out;
}

// --- fixtures --------------------------------------------------------------

OpenGraphSurface make_disc(double area) {
  OpenGraphSurface s;
  s.regions.push_back({area, 0, {1}});
  s.edges.push_back({EdgeKind::Boundary, -1, -1, -1});
  return s;
}

OpenGraphSurface make_closed_region(double area, int genus) {
  OpenGraphSurface s;
  s.regions.push_back({area, genus, {}});
  return s;
}

OpenGraphSurface make_cylinder_with_lines(const std::vector<int>& colors,
                                          const std::vector<double>& areas) {
  const int N = (int)colors.size();
  if (N == 0 || areas.size() != colors.size())
    throw std::invalid_argument("make_cylinder_with_lines: need one area per line");
  OpenGraphSurface s;
  // edges: lines 0..N-1, bottom arcs N..2N-1, top arcs 2N..3N-1,
  //        outer bottom 3N..4N-1, outer top 4N..5N-1
  // vertices: bottom 0..N-1, top N..2N-1
  for (int i = 0; i < N; ++i) s.edges.push_back({EdgeKind::Internal, colors[i], i, N + i});
  for (int i = 0; i < N; ++i) s.edges.push_back({EdgeKind::Boundary, -1, i, (i + 1) % N});
  for (int i = 0; i < N; ++i) s.edges.push_back({EdgeKind::Boundary, -1, N + i, N + (i + 1) % N});
  for (int i = 0; i < N; ++i) s.edges.push_back({EdgeKind::Outer, colors[i], i, -1});
  for (int i = 0; i < N; ++i) s.edges.push_back({EdgeKind::Outer, colors[i], N + i, -1});
  for (int i = 0; i < N; ++i) s.vertices.push_back({{+(i + 1), +(3 * N + i + 1)}, "line"});
  for (int i = 0; i < N; ++i) s.vertices.push_back({{-(i + 1), +(4 * N + i + 1)}, "line"});
  // region i sits between line i and line i+1; word: up line i, across top
  // (against its arc), down line i+1, back along the bottom arc.
  for (int i = 0; i < N; ++i) {
    int Li = i + 1, Ln = (i + 1) % N + 1, Bi = N + i + 1, Ti = 2 * N + i + 1;
    s.regions.push_back({areas[i], 0, {Li, -Ti, -Ln, Bi}});
  }
  return s;
}

// --- JSON -----------------------------------------------------------------

namespace {
void reject_unknown(const nlohmann::json& j, std::initializer_list<const char*> allowed,
                    const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (auto* a : allowed)
      if (it.key() == a) ok = true;
    if (!ok) throw SchemaError("surface spec: unknown field '" + it.key() + "' in " + where);
  }
}
}  // namespace

OpenGraphSurface OpenGraphSurface::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("surface spec: ") + e.what());
  }
  try {
    reject_unknown(j, {"regions", "edges", "vertices"}, "root");
    OpenGraphSurface s;
    for (auto& rj : j.at("regions")) {
      reject_unknown(rj, {"area", "genus", "boundary_word"}, "region");
      Region r;
      r.area = rj.at("area").get<double>();
      r.genus = rj.value("genus", 0);
      r.word = rj.value("boundary_word", std::vector<int>{});
      s.regions.push_back(std::move(r));
    }
    for (auto& ej : j.at("edges")) {
      reject_unknown(ej, {"kind", "color", "tail", "head"}, "edge");
      Edge e;
      std::string kind = ej.at("kind").get<std::string>();
      if (kind == "internal")
        e.kind = EdgeKind::Internal;
      else if (kind == "boundary")
        e.kind = EdgeKind::Boundary;
      else if (kind == "outer")
        e.kind = EdgeKind::Outer;
      else
        throw SchemaError("surface spec: unknown edge kind '" + kind + "'");
      e.color = ej.value("color", -1);
      e.tail = ej.value("tail", -1);
      e.head = ej.value("head", -1);
      s.edges.push_back(e);
    }
    if (j.contains("vertices"))
      for (auto& vj : j.at("vertices")) {
        reject_unknown(vj, {"stubs", "invariant"}, "vertex");
        Vertex v;
        v.stubs = vj.at("stubs").get<std::vector<int>>();
        v.invariant = vj.value("invariant", std::string("line"));
        s.vertices.push_back(std::move(v));
      }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("surface spec: ") + e.what());
  }
}

std::string OpenGraphSurface::to_json() const {
  nlohmann::json j;
  j["regions"] = nlohmann::json::array();
  for (auto& r : regions)
    j["regions"].push_back({{"area", r.area}, {"genus", r.genus}, {"boundary_word", r.word}});
  j["edges"] = nlohmann::json::array();
  for (auto& e : edges) {
    nlohmann::json ej;
    ej["kind"] = e.kind == EdgeKind::Internal ? "internal"
                 : e.kind == EdgeKind::Boundary ? "boundary"
                                                : "outer";
    if (e.color >= 0) ej["color"] = e.color;
    if (e.tail >= 0) ej["tail"] = e.tail;
    if (e.head >= 0) ej["head"] = e.head;
    j["edges"].push_back(ej);
  }
  j["vertices"] = nlohmann::json::array();
  for (auto& v : vertices) j["vertices"].push_back({{"stubs", v.stubs}, {"invariant", v.invariant}});
  return j.dump(2);
}

}  // namespace ym2d
