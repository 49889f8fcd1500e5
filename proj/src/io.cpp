#include "prismafold/io.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>

namespace prismafold {

namespace {

using nlohmann::json;

int wrap(int i, int n) { return ((i % n) + n) % n; }

std::string num17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json parse_root(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw Error(ErrorCode::ParseError, std::string("missing field '") + name + "'");
  return j.at(name);
}

double number_of(const json& j, const char* what) {
  if (!j.is_number()) throw Error(ErrorCode::ParseError, std::string(what) + " must be a number");
  return j.get<double>();
}

int int_of(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw Error(ErrorCode::ParseError, std::string(what) + " must be an integer");
  return j.get<int>();
}

int index_of(const json& j, const char* what, int n) {
  const int v = int_of(j, what);
  if (v < 0 || v >= n)
    throw Error(ErrorCode::ParseError,
                std::string(what) + " = " + std::to_string(v) + " out of range [0, " +
                    std::to_string(n) + ")");
  return v;
}

std::string string_of(const json& j, const char* what) {
  if (!j.is_string()) throw Error(ErrorCode::ParseError, std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<Vec2> points_of(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an array");
  std::vector<Vec2> pts;
  for (const json& el : j) {
    if (!el.is_array() || el.size() != 2)
      throw Error(ErrorCode::ParseError, std::string(what) + " entries must be [x, y] pairs");
    pts.emplace_back(number_of(el[0], what), number_of(el[1], what));
  }
  return pts;
}

std::string points_json(const std::vector<Vec2>& pts) {
  std::string s = "[";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ", ";
    s += "[" + num17(pts[i].x()) + ", " + num17(pts[i].y()) + "]";
  }
  return s + "]";
}

std::string ref_str(const VertexRef& v) {
  return (v.kind == VertexRef::Base ? "b" : "t") + std::to_string(v.index);
}

VertexRef parse_ref(const json& j, int ell, int m) {
  const std::string s = string_of(j, "vertex ref");
  bool ok = s.size() >= 2 && (s[0] == 'b' || s[0] == 't');
  for (size_t i = 1; ok && i < s.size(); ++i) ok = s[i] >= '0' && s[i] <= '9';
  if (!ok) throw Error(ErrorCode::ParseError, "bad vertex ref '" + s + "'");
  VertexRef v;
  v.kind = s[0] == 'b' ? VertexRef::Base : VertexRef::Top;
  v.index = std::stoi(s.substr(1));
  const int n = v.kind == VertexRef::Base ? ell : m;
  if (v.index >= n)
    throw Error(ErrorCode::ParseError, "vertex ref '" + s + "' out of range");
  return v;
}

const char* patch_name(Patch p) {
  switch (p) {
    case Patch::Base: return "base";
    case Patch::MPlus: return "mplus";
    case Patch::MMinus: return "mminus";
    case Patch::Top: return "top";
  }
  return "base";
}

Patch parse_patch(const std::string& s) {
  if (s == "base") return Patch::Base;
  if (s == "mplus") return Patch::MPlus;
  if (s == "mminus") return Patch::MMinus;
  if (s == "top") return Patch::Top;
  throw Error(ErrorCode::ParseError, "unknown patch '" + s + "'");
}

std::vector<VertexRef> stored_band_labels(const Prismatoid& p, const LateralFacet& f) {
  std::vector<VertexRef> ls = facet_labels(f);
  for (VertexRef& l : ls)
    l.index = l.kind == VertexRef::Base ? p.base.wrap(l.index) : p.top.wrap(l.index);
  std::reverse(ls.begin(), ls.end());  // net facets store the inside view
  return ls;
}

bool in_arc(int k, const FacetArc& arc, int nb) { return wrap(k - arc.first, nb) < arc.count; }

}  // namespace

Prismatoid parse_instance(const std::string& text, const Tolerances& tol) {
  const json root = parse_root(text);
  if (string_of(field(root, "format"), "format") != "prismatoid/1")
    throw Error(ErrorCode::ParseError, "unsupported instance format");
  const std::vector<Vec2> base = points_of(field(root, "base"), "base");
  const std::vector<Vec2> top = points_of(field(root, "top"), "top");
  const double height = number_of(field(root, "height"), "height");
  return validate(base, top, height, tol);
}

std::string serialize_instance(const Prismatoid& p) {
  std::string s = "{\n  \"format\": \"prismatoid/1\",\n";
  s += "  \"base\": " + points_json(p.base.vertices) + ",\n";
  s += "  \"top\": " + points_json(p.top.vertices) + ",\n";
  s += "  \"height\": " + num17(p.height) + "\n}\n";
  return s;
}

std::string serialize_net(const Net& net, const CutPlan& plan) {
  std::string s = "{\n  \"format\": \"net/1\",\n  \"facets\": [\n";
  for (size_t i = 0; i < net.placed.size(); ++i) {
    const PlacedFacet& f = net.placed[i];
    s += "    {\"id\": \"" + f.id + "\", \"patch\": \"" + patch_name(f.patch) +
         "\", \"points\": " + points_json(f.points) + "}";
    s += i + 1 < net.placed.size() ? ",\n" : "\n";
  }
  s += "  ],\n  \"attach_tree\": [\n";
  for (size_t i = 0; i < net.attach_tree.size(); ++i) {
    const HingeRecord& h = net.attach_tree[i];
    s += "    {\"a\": " + std::to_string(h.facet_a) + ", \"b\": " + std::to_string(h.facet_b) +
         ", \"edge\": [\"" + ref_str(h.edge[0]) + "\", \"" + ref_str(h.edge[1]) + "\"]}";
    s += i + 1 < net.attach_tree.size() ? ",\n" : "\n";
  }
  s += "  ],\n  \"cut_edges\": [\n";
  for (size_t i = 0; i < net.cut_edges.size(); ++i) {
    s += "    [\"" + ref_str(net.cut_edges[i][0]) + "\", \"" + ref_str(net.cut_edges[i][1]) +
         "\"]";
    s += i + 1 < net.cut_edges.size() ? ",\n" : "\n";
  }
  s += "  ],\n  \"plan\": {\n";
  s += std::string("    \"scheme\": \"") +
       (plan.scheme == Scheme::Prismoid ? "prismoid" : "general") + "\",\n";
  s += std::string("    \"case\": \"") + (plan.case_tag == CaseTag::Case1 ? "case1" : "case2") +
       "\",\n";
  s += "    \"w0\": " + std::to_string(plan.w0) + ",\n";
  s += "    \"wk\": " + std::to_string(plan.wk) + ",\n";
  s += "    \"cut0\": [" + std::to_string(plan.cut_edge_0.base) + ", " +
       std::to_string(plan.cut_edge_0.top) + "],\n";
  s += "    \"cutk\": [" + std::to_string(plan.cut_edge_k.base) + ", " +
       std::to_string(plan.cut_edge_k.top) + "],\n";
  s += "    \"e_minus\": [" + std::to_string(plan.e_minus[0]) + ", " +
       std::to_string(plan.e_minus[1]) + "],\n";
  s += "    \"e_plus\": [" + std::to_string(plan.e_plus[0]) + ", " +
       std::to_string(plan.e_plus[1]) + "],\n";
  s += "    \"m_plus\": {\"first\": " + std::to_string(plan.m_plus.first) +
       ", \"count\": " + std::to_string(plan.m_plus.count) + "},\n";
  s += "    \"m_minus\": {\"first\": " + std::to_string(plan.m_minus.first) +
       ", \"count\": " + std::to_string(plan.m_minus.count) + "},\n";
  s += "    \"top_attach_index\": " + std::to_string(net.top_attach_index) + ",\n";
  s += "    \"apex\": [" + num17(net.cone_frame.apex.x()) + ", " +
       num17(net.cone_frame.apex.y()) + "]\n";
  s += "  }\n}\n";
  return s;
}

std::pair<Net, CutPlan> parse_net(const std::string& text, const Prismatoid& p, const Band& band,
                                  const Tolerances& tol) {
  const json root = parse_root(text);
  if (string_of(field(root, "format"), "format") != "net/1")
    throw Error(ErrorCode::ParseError, "unsupported net format");
  const int ell = p.base.size();
  const int m = p.top.size();
  const int nb = band.size();

  CutPlan plan;
  {
    const json& jp = field(root, "plan");
    const std::string scheme = string_of(field(jp, "scheme"), "scheme");
    if (scheme == "prismoid")
      plan.scheme = Scheme::Prismoid;
    else if (scheme == "general")
      plan.scheme = Scheme::General;
    else
      throw Error(ErrorCode::ParseError, "unknown scheme '" + scheme + "'");
    const std::string case_tag = string_of(field(jp, "case"), "case");
    if (case_tag == "case1")
      plan.case_tag = CaseTag::Case1;
    else if (case_tag == "case2")
      plan.case_tag = CaseTag::Case2;
    else
      throw Error(ErrorCode::ParseError, "unknown case '" + case_tag + "'");

    plan.w0 = index_of(field(jp, "w0"), "w0", ell);
    plan.wk = index_of(field(jp, "wk"), "wk", ell);
    auto edge_of = [&](const char* name) {
      const json& je = field(jp, name);
      if (!je.is_array() || je.size() != 2)
        throw Error(ErrorCode::ParseError, std::string(name) + " must be [base, top]");
      LateralEdgeRef e;
      e.base = index_of(je[0], name, ell);
      e.top = index_of(je[1], name, m);
      return e;
    };
    plan.cut_edge_0 = edge_of("cut0");
    plan.cut_edge_k = edge_of("cutk");
    auto base_edge_of = [&](const char* name) {
      const json& je = field(jp, name);
      if (!je.is_array() || je.size() != 2)
        throw Error(ErrorCode::ParseError, std::string(name) + " must be [j0, j1]");
      const std::array<int, 2> e = {index_of(je[0], name, ell), index_of(je[1], name, ell)};
      if (e[1] != wrap(e[0] + 1, ell))
        throw Error(ErrorCode::ParseError, std::string(name) + " is not a base edge");
      return e;
    };
    plan.e_minus = base_edge_of("e_minus");
    plan.e_plus = base_edge_of("e_plus");
    auto arc_of = [&](const char* name) {
      const json& ja = field(jp, name);
      FacetArc arc;
      arc.first = index_of(field(ja, "first"), name, nb);
      arc.count = int_of(field(ja, "count"), name);
      if (arc.count < 1 || arc.count > nb)
        throw Error(ErrorCode::ParseError, std::string(name) + " count out of range");
      return arc;
    };
    plan.m_plus = arc_of("m_plus");
    plan.m_minus = arc_of("m_minus");
    if (plan.m_plus.count + plan.m_minus.count != nb ||
        plan.m_minus.first != wrap(plan.m_plus.first + plan.m_plus.count, nb))
      throw Error(ErrorCode::ParseError, "m_plus and m_minus do not partition the band");
    if (plan.cut_edge_0.base != plan.w0 || plan.cut_edge_k.base != plan.wk ||
        plan.e_minus[1] != plan.w0)
      throw Error(ErrorCode::ParseError, "plan indices disagree with the cut edges");
    const LateralEdgeRef start = facet_start_edge(band.facets[plan.m_plus.first], ell, m);
    const LateralEdgeRef end = facet_end_edge(
        band.facets[wrap(plan.m_plus.first + plan.m_plus.count - 1, nb)], ell, m);
    if (!(start == plan.cut_edge_0) || !(end == plan.cut_edge_k))
      throw Error(ErrorCode::ParseError, "cut edges do not bound the M+ arc of this band");
  }

  Net net;
  net.top_attach_index = index_of(field(field(root, "plan"), "top_attach_index"),
                                  "top_attach_index", m);

  const json& jf = field(root, "facets");
  if (!jf.is_array()) throw Error(ErrorCode::ParseError, "facets must be an array");
  bool seen_base = false, seen_top = false;
  std::vector<bool> seen_band(nb, false);
  for (const json& el : jf) {
    PlacedFacet f;
    f.id = string_of(field(el, "id"), "facet id");
    f.patch = parse_patch(string_of(field(el, "patch"), "patch"));
    f.points = points_of(field(el, "points"), "points");
    if (f.id == "base") {
      if (seen_base) throw Error(ErrorCode::ParseError, "duplicate base facet");
      seen_base = true;
      if (f.patch != Patch::Base) throw Error(ErrorCode::ParseError, "base facet mis-tagged");
      for (int j = 0; j < ell; ++j) f.labels.push_back({VertexRef::Base, j});
    } else if (f.id == "top") {
      if (seen_top) throw Error(ErrorCode::ParseError, "duplicate top facet");
      seen_top = true;
      if (f.patch != Patch::Top) throw Error(ErrorCode::ParseError, "top facet mis-tagged");
      for (int i = m - 1; i >= 0; --i) f.labels.push_back({VertexRef::Top, i});
    } else if (f.id.rfind("band:", 0) == 0) {
      int k = -1;
      try {
        k = std::stoi(f.id.substr(5));
      } catch (...) {
        throw Error(ErrorCode::ParseError, "bad facet id '" + f.id + "'");
      }
      if (k < 0 || k >= nb)
        throw Error(ErrorCode::ParseError, "facet id '" + f.id + "' outside the band");
      if (seen_band[k]) throw Error(ErrorCode::ParseError, "duplicate facet '" + f.id + "'");
      seen_band[k] = true;
      f.band_index = k;
      const Patch expect = in_arc(k, plan.m_plus, nb) ? Patch::MPlus : Patch::MMinus;
      if (f.patch != expect)
        throw Error(ErrorCode::ParseError,
                    "facet '" + f.id + "' tagged " + patch_name(f.patch) + ", plan puts it in " +
                        patch_name(expect));
      f.labels = stored_band_labels(p, band.facets[k]);
    } else {
      throw Error(ErrorCode::ParseError, "unknown facet id '" + f.id + "'");
    }
    if (f.points.size() != f.labels.size())
      throw Error(ErrorCode::ParseError,
                  "facet '" + f.id + "' has " + std::to_string(f.points.size()) +
                      " points, expected " + std::to_string(f.labels.size()));
    net.placed.push_back(std::move(f));
  }
  if (!seen_base || !seen_top ||
      !std::all_of(seen_band.begin(), seen_band.end(), [](bool b) { return b; }))
    throw Error(ErrorCode::ParseError, "net does not cover every facet of the solid");

  const int nf = static_cast<int>(net.placed.size());
  const json& jt = field(root, "attach_tree");
  if (!jt.is_array()) throw Error(ErrorCode::ParseError, "attach_tree must be an array");
  for (const json& el : jt) {
    HingeRecord h;
    h.facet_a = index_of(field(el, "a"), "attach_tree.a", nf);
    h.facet_b = index_of(field(el, "b"), "attach_tree.b", nf);
    const json& je = field(el, "edge");
    if (!je.is_array() || je.size() != 2)
      throw Error(ErrorCode::ParseError, "attach_tree.edge must name two vertices");
    h.edge = {parse_ref(je[0], ell, m), parse_ref(je[1], ell, m)};
    net.attach_tree.push_back(h);
  }
  if (static_cast<int>(net.attach_tree.size()) != nb + 1)
    throw Error(ErrorCode::ParseError, "attach_tree must hinge every facet exactly once");

  const json& jc = field(root, "cut_edges");
  if (!jc.is_array()) throw Error(ErrorCode::ParseError, "cut_edges must be an array");
  for (const json& el : jc) {
    if (!el.is_array() || el.size() != 2)
      throw Error(ErrorCode::ParseError, "cut_edges entries must name two vertices");
    net.cut_edges.push_back({parse_ref(el[0], ell, m), parse_ref(el[1], ell, m)});
  }
  if (static_cast<int>(net.cut_edges.size()) != ell + m - 1)
    throw Error(ErrorCode::ParseError, "cut_edges must complement the attach tree");

  net.cone_frame = cone_frame_for(p, plan, tol);
  return {std::move(net), plan};
}

namespace {

std::string num6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string render_svg(const Net& net) {
  // bounding box in screen coordinates (y flipped so the net is not mirrored)
  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  bool any = false;
  for (const PlacedFacet& f : net.placed)
    for (const Vec2& q : f.points) {
      const double x = q.x(), y = -q.y();
      if (!any) {
        xmin = xmax = x;
        ymin = ymax = y;
        any = true;
      }
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  const double w = xmax - xmin, h = ymax - ymin;
  const double pad = std::max(0.05 * std::max(w, h), 1e-3);
  const double sw = std::max(0.006 * std::max(w, h), 1e-3);

  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num6(xmin - pad) + " " +
       num6(ymin - pad) + " " + num6(w + 2 * pad) + " " + num6(h + 2 * pad) + "\">\n";

  s += "<g stroke=\"none\">\n";
  for (const PlacedFacet& f : net.placed) {
    const char* fill = "#e2e8f0";
    if (f.patch == Patch::MPlus) fill = "#bee3f8";
    if (f.patch == Patch::MMinus) fill = "#fbd38d";
    if (f.patch == Patch::Top) fill = "#c6f6d5";
    s += std::string("<polygon fill=\"") + fill + "\" points=\"";
    for (size_t i = 0; i < f.points.size(); ++i) {
      if (i) s += " ";
      s += num6(f.points[i].x()) + "," + num6(-f.points[i].y());
    }
    s += "\"/>\n";
  }
  s += "</g>\n";

  // classify each facet edge through its vertex labels: attach-tree edges
  // draw solid, cut edges dashed; both images of a cut edge are drawn
  auto canon = [](const VertexRef& a, const VertexRef& b) {
    std::array<int, 4> k = {static_cast<int>(a.kind), a.index, static_cast<int>(b.kind), b.index};
    if (std::make_pair(k[0], k[1]) > std::make_pair(k[2], k[3]))
      k = {k[2], k[3], k[0], k[1]};
    return k;
  };
  std::set<std::array<int, 4>> cut_keys;
  for (const auto& e : net.cut_edges) cut_keys.insert(canon(e[0], e[1]));

  std::set<std::string> solid, dashed;
  for (const PlacedFacet& f : net.placed) {
    if (f.labels.size() != f.points.size()) continue;
    const size_t n = f.points.size();
    for (size_t i = 0; i < n; ++i) {
      const size_t j = (i + 1) % n;
      Vec2 a = f.points[i], b = f.points[j];
      if (std::make_pair(a.x(), a.y()) > std::make_pair(b.x(), b.y())) std::swap(a, b);
      const std::string line = "<line x1=\"" + num6(a.x()) + "\" y1=\"" + num6(-a.y()) +
                               "\" x2=\"" + num6(b.x()) + "\" y2=\"" + num6(-b.y()) + "\"/>\n";
      (cut_keys.count(canon(f.labels[i], f.labels[j])) ? dashed : solid).insert(line);
    }
  }
  s += "<g fill=\"none\" stroke=\"#2d3748\" stroke-width=\"" + num6(sw) +
       "\" stroke-linecap=\"round\">\n";
  for (const std::string& line : solid) s += line;
  s += "<g stroke-dasharray=\"" + num6(3.5 * sw) + " " + num6(2.5 * sw) + "\">\n";
  for (const std::string& line : dashed) s += line;
  s += "</g>\n</g>\n</svg>\n";
  return s;
}

}  // namespace prismafold
