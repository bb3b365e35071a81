#include "wplus/render.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "wplus/errors.hpp"
#include "wplus/root_datum.hpp"
#include "wplus/roots.hpp"
#include "wplus/weyl.hpp"

namespace wplus {
namespace {

// ---------------------------------------------------------------------------
// Exact rational plane geometry.

struct Pt {
  Rat x;
  Rat y;

  friend bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Pt& a, const Pt& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

// Closed half-plane a*x + b*y + c >= 0; with c dropped, the line through the
// origin a*x + b*y = 0.
struct Half {
  Rat a;
  Rat b;
  Rat c;
};

Rat evaluate(const Half& h, const Pt& p) { return Rat(h.a * p.x + h.b * p.y + h.c); }

// Sutherland-Hodgman step: clip a convex polygon (vertices in order) by one
// closed half-plane. Exact: points on the boundary are kept, crossings are
// interpolated rationally.
std::vector<Pt> clip_polygon(const std::vector<Pt>& poly, const Half& h) {
  std::vector<Pt> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Pt& cur = poly[i];
    const Pt& nxt = poly[(i + 1) % n];
    const Rat fc = evaluate(h, cur);
    const Rat fn = evaluate(h, nxt);
    if (fc >= 0) out.push_back(cur);
    if ((fc > 0 && fn < 0) || (fc < 0 && fn > 0)) {
      const Rat t = Rat(fc / (fc - fn));
      out.push_back(Pt{Rat(cur.x + t * (nxt.x - cur.x)), Rat(cur.y + t * (nxt.y - cur.y))});
    }
  }
  return out;
}

// Drop consecutive duplicate vertices (clipping can emit them when a vertex
// lies exactly on the clip line).
std::vector<Pt> dedup_cycle(const std::vector<Pt>& poly) {
  std::vector<Pt> out;
  for (const Pt& p : poly) {
    if (out.empty() || !(out.back() == p)) out.push_back(p);
  }
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  return out;
}

std::vector<Pt> window_rect(const PlotWindow& w) {
  return {Pt{w.x_lo, w.y_lo}, Pt{w.x_hi, w.y_lo}, Pt{w.x_hi, w.y_hi}, Pt{w.x_lo, w.y_hi}};
}

// The segment in which the line a*x + b*y + c = 0 meets the window, or
// nullopt when the intersection is empty or a single corner point. When the
// line contains a whole window edge, the two extreme points are returned.
std::optional<std::pair<Pt, Pt>> line_in_window(const Half& line, const PlotWindow& w) {
  const std::vector<Pt> rect = window_rect(w);
  std::set<Pt> hits;
  for (std::size_t i = 0; i < 4; ++i) {
    const Pt& p = rect[i];
    const Pt& q = rect[(i + 1) % 4];
    const Rat fp = evaluate(line, p);
    const Rat fq = evaluate(line, q);
    if (fp == 0) hits.insert(p);
    if (fq == 0) hits.insert(q);
    if ((fp > 0 && fq < 0) || (fp < 0 && fq > 0)) {
      const Rat t = Rat(fp / (fp - fq));
      hits.insert(Pt{Rat(p.x + t * (q.x - p.x)), Rat(p.y + t * (q.y - p.y))});
    }
  }
  if (hits.size() < 2) return std::nullopt;
  return std::make_pair(*hits.begin(), *std::prev(hits.end()));
}

// ---------------------------------------------------------------------------
// Roots and chambers as linear forms in plot coordinates.
//
// A point y is drawn at P(y) = (<y, alpha_1>, <y, alpha_2>); then
// <y, beta> = m_1 * P(y).x + m_2 * P(y).y where (m_1, m_2) is the expansion
// of beta over the simple roots.

std::pair<Rat, Rat> root_form(const Root& beta) {
  return {Rat(beta.expansion[0]), Rat(beta.expansion[1])};
}

// P(v) for an integer coweight v.
Pt plot_point(const RootDatum& d, const IntVec& v) {
  return Pt{Rat(pairing(v, d.simple_roots[0])), Rat(pairing(v, d.simple_roots[1]))};
}

// The chamber C_w = w(C) = {y : <y, w(alpha_i)> >= 0}, translated so its apex
// sits at `apex`.
std::vector<Half> chamber_halves(const RootDatum& d, const WeylElt& w, const Pt& apex) {
  std::vector<Half> out;
  for (int i = 0; i < 2; ++i) {
    const Root r = apply(d, w, simple_root(d, i));
    const auto [a, b] = root_form(r);
    out.push_back(Half{a, b, Rat(Rat(0) - a * apex.x - b * apex.y)});
  }
  return out;
}

// A direction along {zero_on = 0} pointed into {positive_on > 0}. The two
// forms are linearly independent, so the sign test is decisive.
Pt ray_direction(const Half& zero_on, const Half& positive_on) {
  Pt r{zero_on.b, Rat(Rat(0) - zero_on.a)};
  const Rat v = Rat(positive_on.a * r.x + positive_on.b * r.y);
  if (v < 0) {
    r.x = Rat(Rat(0) - r.x);
    r.y = Rat(Rat(0) - r.y);
  }
  return r;
}

Pt normalize_inf(const Pt& p) {
  const Rat ax = Rat(abs(p.x));
  const Rat ay = Rat(abs(p.y));
  const Rat m = ax > ay ? ax : ay;
  return Pt{Rat(p.x / m), Rat(p.y / m)};
}

// Largest t >= 0 with origin + t*dir inside the window; nullopt when the
// origin itself lies outside (or dir = 0).
std::optional<Rat> ray_exit(const Pt& dir, const PlotWindow& w) {
  std::optional<Rat> t_max;
  const auto tighten = [&](const Rat& num, const Rat& den) {
    const Rat t = Rat(num / den);
    if (!t_max || t < *t_max) t_max = t;
  };
  if (dir.x > 0) tighten(w.x_hi, dir.x);
  if (dir.x < 0) tighten(Rat(Rat(0) - w.x_lo), Rat(Rat(0) - dir.x));
  if (dir.y > 0) tighten(w.y_hi, dir.y);
  if (dir.y < 0) tighten(Rat(Rat(0) - w.y_lo), Rat(Rat(0) - dir.y));
  if (!t_max || *t_max <= 0) return std::nullopt;
  return t_max;
}

// ---------------------------------------------------------------------------
// SVG serialization. All coordinates go through fixed_decimal, so identical
// inputs serialize to identical bytes.

constexpr int kCanvas = 720;

struct Mapper {
  PlotWindow w;
  Rat sx;
  Rat sy;

  explicit Mapper(const PlotWindow& win)
      : w(win),
        sx(Rat(Rat(kCanvas) / (win.x_hi - win.x_lo))),
        sy(Rat(Rat(kCanvas) / (win.y_hi - win.y_lo))) {}

  std::string fx(const Rat& x) const { return fixed_decimal(Rat((x - w.x_lo) * sx), 3); }
  std::string fy(const Rat& y) const { return fixed_decimal(Rat((w.y_hi - y) * sy), 3); }
  std::string fmt(const Pt& p) const { return fx(p.x) + "," + fy(p.y); }
};

void svg_open(std::ostringstream& out, const std::string& kind) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kCanvas
      << "\" height=\"" << kCanvas << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n"
      << "<title>" << kind << "</title>\n"
      << "<rect class=\"bg\" x=\"0\" y=\"0\" width=\"" << kCanvas << "\" height=\"" << kCanvas
      << "\" fill=\"#ffffff\"/>\n";
}

void emit_polygon(std::ostringstream& out, const Mapper& m, const std::vector<Pt>& poly,
                  const std::string& cls, const std::string& style,
                  const std::string& extra_attrs = "") {
  if (poly.size() < 3) return;
  out << "<polygon class=\"" << cls << "\"";
  if (!extra_attrs.empty()) out << ' ' << extra_attrs;
  out << " points=\"";
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (i) out << ' ';
    out << m.fmt(poly[i]);
  }
  out << "\" " << style << "/>\n";
}

void emit_segment(std::ostringstream& out, const Mapper& m, const Pt& a, const Pt& b,
                  const std::string& cls, const std::string& style) {
  out << "<line class=\"" << cls << "\" x1=\"" << m.fx(a.x) << "\" y1=\"" << m.fy(a.y)
      << "\" x2=\"" << m.fx(b.x) << "\" y2=\"" << m.fy(b.y) << "\" " << style << "/>\n";
}

void emit_dot(std::ostringstream& out, const Mapper& m, const Pt& p, const std::string& cls,
              const std::string& fill) {
  out << "<circle class=\"" << cls << "\" cx=\"" << m.fx(p.x) << "\" cy=\"" << m.fy(p.y)
      << "\" r=\"3.5\" fill=\"" << fill << "\"/>\n";
}

std::string word_label(const WeylElt& w) {
  if (w.word.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < w.word.size(); ++k) {
    if (k) s += ' ';
    s += 's';
    s += std::to_string(w.word[k] + 1);
  }
  return s;
}

void check_plot_inputs(const RootDatum& d, const PlotSpec& spec) {
  if (d.gcm.size != 2) {
    throw Error(Errc::RankNotTwo,
                "plotting needs exactly 2 simple roots, datum has " + std::to_string(d.gcm.size));
  }
  if (spec.depth < 1) {
    throw Error(Errc::PreconditionViolated, "plot depth must be at least 1");
  }
  if (!(spec.window.x_lo < spec.window.x_hi) || !(spec.window.y_lo < spec.window.y_hi)) {
    throw Error(Errc::PreconditionViolated, "plot window is empty");
  }
}

// Chamber wedges C_{w v} for v over the ball, translated to `apex` (the
// identity apex Pt{0,0} and w = e give the vectorial picture itself).
void emit_cone_fan(std::ostringstream& out, const Mapper& m, const RootDatum& d,
                   const std::vector<WeylElt>& ball, const WeylElt& w, const Pt& apex,
                   const std::string& cls, const std::string& style) {
  const std::vector<Pt> rect = window_rect(m.w);
  for (const WeylElt& v : ball) {
    const WeylElt u = multiply(d, w, v);
    std::vector<Pt> poly = rect;
    for (const Half& h : chamber_halves(d, u, apex)) poly = clip_polygon(poly, h);
    emit_polygon(out, m, dedup_cycle(poly), cls, style);
  }
}

const char* alcove_fill(std::size_t index) {
  static const char* palette[4] = {"#ff9933", "#7cc47f", "#c9a0dc", "#6fb7d6"};
  return palette[index % 4];
}

}  // namespace

std::string render_tits_cone(const RootDatum& datum, const PlotSpec& spec) {
  check_plot_inputs(datum, spec);
  const Mapper m(spec.window);
  std::ostringstream out;
  svg_open(out, "vectorial chambers");

  const std::vector<WeylElt> ball = weyl_ball(datum, spec.depth);
  // Cone shading: one wedge per chamber C_w, l(w) <= depth.
  emit_cone_fan(out, m, datum, ball, weyl_identity(datum), Pt{Rat(0), Rat(0)}, "chamber",
                "fill=\"#cfe2ff\" fill-opacity=\"0.85\" stroke=\"#6f94c9\" stroke-width=\"1\"");

  // Wall lines: every wall bounding a drawn chamber, as a line through the
  // origin, deduplicated via the positive root.
  std::set<std::pair<Int, Int>> wall_forms;
  for (const WeylElt& w : ball) {
    for (int i = 0; i < 2; ++i) {
      Root r = apply(datum, w, simple_root(datum, i));
      if (!r.positive()) r = r.negated();
      wall_forms.insert({r.expansion[0], r.expansion[1]});
    }
  }
  for (const auto& [a, b] : wall_forms) {
    const Half line{Rat(a), Rat(b), Rat(0)};
    if (const auto seg = line_in_window(line, spec.window)) {
      emit_segment(out, m, seg->first, seg->second, "wall",
                   "stroke=\"#1a2a42\" stroke-width=\"1.5\"");
    }
  }

  // Word labels, placed along the chamber's bisecting ray; even and odd
  // lengths at staggered radii so neighbors do not collide.
  for (const WeylElt& w : ball) {
    const std::vector<Half> halves = chamber_halves(datum, w, Pt{Rat(0), Rat(0)});
    const Pt r1 = normalize_inf(ray_direction(halves[0], halves[1]));
    const Pt r2 = normalize_inf(ray_direction(halves[1], halves[0]));
    const Pt dir = normalize_inf(Pt{Rat(r1.x + r2.x), Rat(r1.y + r2.y)});
    const auto t = ray_exit(dir, spec.window);
    if (!t) continue;
    const Rat frac = (w.length() % 2 == 0) ? Rat(11, 20) : Rat(4, 5);
    const Pt anchor{Rat(dir.x * *t * frac), Rat(dir.y * *t * frac)};
    out << "<text class=\"label\" x=\"" << m.fx(anchor.x) << "\" y=\"" << m.fy(anchor.y)
        << "\" font-family=\"monospace\" font-size=\"13\" fill=\"#1a2a42\" "
           "text-anchor=\"middle\">"
        << word_label(w) << "</text>\n";
  }

  emit_dot(out, m, Pt{Rat(0), Rat(0)}, "origin", "#1a2a42");
  out << "</svg>\n";
  return out.str();
}

std::string render_apartment(const RootDatum& datum, const PlotSpec& spec) {
  check_plot_inputs(datum, spec);
  const Mapper m(spec.window);
  std::ostringstream out;
  svg_open(out, "affine apartment");

  const RootEnumeration enumeration = enumerate_positive_roots(datum, spec.root_height_bound);
  const bool finite = enumeration.complete_system;

  // The drawn wall arrangement: M_{beta[n]} = {<x, beta> + n = 0} for
  // positive beta of bounded height and |n| <= level_bound, restricted to
  // walls actually meeting the window.
  struct WallLine {
    const Root* beta;
    long n;
    Half h;
    Pt a;
    Pt b;
    bool marked;
  };
  std::vector<WallLine> walls;
  for (const Root& beta : enumeration.roots) {
    const auto [fa, fb] = root_form(beta);
    for (long n = -spec.level_bound; n <= spec.level_bound; ++n) {
      const Half h{fa, fb, Rat(n)};
      const auto seg = line_in_window(h, spec.window);
      if (!seg) continue;
      const AffineRoot normalized = normalize_affine_root(beta, Int(n));
      bool marked = false;
      for (const AffineRoot& target : spec.marked_walls) {
        if (normalized == target) marked = true;
      }
      walls.push_back(WallLine{&beta, n, h, seg->first, seg->second, marked});
    }
  }

  const std::vector<WeylElt> ball = weyl_ball(datum, spec.depth);

  // Local Tits cones at the highlighted elements (their base point is the
  // image of the origin). In finite type the cone is the whole plane, so the
  // fan is omitted.
  if (!finite) {
    for (const AffineElt& x : spec.highlighted) {
      IntVec neg = x.lam;
      for (Int& c : neg) c = Int(-c);
      const Pt apex = plot_point(datum, neg);
      emit_cone_fan(out, m, datum, ball, x.w, apex, "conewedge",
                    "fill=\"#cfe2ff\" fill-opacity=\"0.55\" stroke=\"#9db9dd\" "
                    "stroke-width=\"0.6\"");
    }
  }

  // Highlighted alcoves: the cell of the drawn arrangement containing the
  // image of an interior point of the fundamental alcove. epsilon = 1/1009
  // keeps the base point off every drawn wall (heights and levels in play are
  // far smaller than 1009).
  const Rat eps(1, 1009);
  std::size_t index = 0;
  for (const AffineElt& x : spec.highlighted) {
    IntVec neg = x.lam;
    for (Int& c : neg) c = Int(-c);
    const Pt apex = plot_point(datum, neg);
    const Root r1 = apply_inverse(datum, x.w, simple_root(datum, 0));
    const Root r2 = apply_inverse(datum, x.w, simple_root(datum, 1));
    const Pt base{Rat(apex.x + (Rat(r1.expansion[0]) + Rat(r1.expansion[1])) * eps),
                  Rat(apex.y + (Rat(r2.expansion[0]) + Rat(r2.expansion[1])) * eps)};
    std::vector<Pt> cell = window_rect(spec.window);
    for (const WallLine& wall : walls) {
      const Rat side = evaluate(wall.h, base);
      if (side > 0) {
        cell = clip_polygon(cell, wall.h);
      } else if (side < 0) {
        cell = clip_polygon(
            cell, Half{Rat(Rat(0) - wall.h.a), Rat(Rat(0) - wall.h.b), Rat(Rat(0) - wall.h.c)});
      }
    }
    emit_polygon(out, m, dedup_cycle(cell), "alcove",
                 "fill=\"" + std::string(alcove_fill(index)) + "\" fill-opacity=\"0.9\"",
                 "data-element=\"" + format_element(x) + "\"");
    ++index;
  }

  for (const WallLine& wall : walls) {
    if (wall.marked) continue;
    emit_segment(out, m, wall.a, wall.b, "wall", "stroke=\"#444444\" stroke-width=\"1\"");
  }
  for (const WallLine& wall : walls) {
    if (!wall.marked) continue;
    emit_segment(out, m, wall.a, wall.b, "markedwall", "stroke=\"#2e8b57\" stroke-width=\"2.5\"");
  }

  index = 0;
  for (const AffineElt& x : spec.highlighted) {
    IntVec neg = x.lam;
    for (Int& c : neg) c = Int(-c);
    emit_dot(out, m, plot_point(datum, neg), "basepoint", alcove_fill(index));
    ++index;
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace wplus
