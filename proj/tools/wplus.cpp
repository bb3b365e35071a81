// Command-line front end: lengths, order comparisons, cover certificates,
// interval enumeration, grading verification, and SVG pictures.
//
// Exit codes: 0 = success (including a definite False), 1 = a verification
// found violations, 2 = some answer stayed Unknown / undetermined within the
// configured bounds, 3 = usage or input errors.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "wplus/affine.hpp"
#include "wplus/bruhat.hpp"
#include "wplus/errors.hpp"
#include "wplus/render.hpp"
#include "wplus/root_datum.hpp"
#include "wplus/roots.hpp"
#include "wplus/tits.hpp"
#include "wplus/weyl.hpp"

namespace {

using namespace wplus;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 3;

struct GlobalOpts {
  std::string datum_file;
  std::string cartan_text;
  int root_height_bound = 8;
  int level_bound = 12;
  int chain_bound = 16;
  int step_cap = 10000;

  SearchBounds bounds() const {
    return SearchBounds{root_height_bound, level_bound, chain_bound};
  }
};

std::string fmt_vec(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string fmt_word(const WeylElt& w) {
  if (w.word.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < w.word.size(); ++k) {
    if (k) s += ' ';
    s += 's';
    s += std::to_string(w.word[k] + 1);
  }
  return s;
}

RootDatum load_datum(const GlobalOpts& g) {
  if (g.datum_file.empty() == g.cartan_text.empty()) {
    throw Error(Errc::ParseError, "exactly one of --datum and --cartan is required");
  }
  if (!g.datum_file.empty()) {
    std::ifstream in(g.datum_file);
    if (!in) throw Error(Errc::ParseError, "cannot open datum file " + g.datum_file);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_datum_file(text.str());
  }
  return build_minimal_realization(validate_gcm(parse_cartan_rows(g.cartan_text)));
}

Rat parse_rat(const std::string& text) {
  try {
    Rat q(text, 10);
    if (q.get_den() == 0) throw Error(Errc::ParseError, "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(Errc::ParseError, "bad rational '" + text + "'");
  }
}

// "x_lo,x_hi,y_lo,y_hi" or "lo,hi" (square); empty = square of side
// 2*(depth+1) centered at the origin.
PlotWindow parse_window(const std::string& text, int depth) {
  if (text.empty()) {
    const Rat r(depth + 1);
    return PlotWindow{Rat(-r), r, Rat(-r), r};
  }
  std::vector<Rat> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(parse_rat(item));
  if (parts.size() == 2) return PlotWindow{parts[0], parts[1], parts[0], parts[1]};
  if (parts.size() == 4) return PlotWindow{parts[0], parts[1], parts[2], parts[3]};
  throw Error(Errc::ParseError, "window wants 2 or 4 comma-separated rationals");
}

// "(v1,...,vd)[n]": an affine root named by its root vector and level. The
// vector must match a real root of height within the enumeration bound.
AffineRoot parse_wall(const RootDatum& d, const std::string& text, int root_height_bound) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  const std::size_t close = s.find(')');
  if (s.empty() || s.front() != '(' || close == std::string::npos || close + 1 >= s.size() ||
      s[close + 1] != '[' || s.back() != ']') {
    throw Error(Errc::ParseError, "wall wants the form (v1,...,vd)[n], got '" + text + "'");
  }
  IntVec vec;
  std::stringstream ss(s.substr(1, close - 1));
  std::string item;
  try {
    while (std::getline(ss, item, ',')) vec.emplace_back(item, 10);
    const Int n(s.substr(close + 2, s.size() - close - 3), 10);
    IntVec neg = vec;
    for (Int& c : neg) c = Int(-c);
    for (const Root& r : enumerate_positive_roots(d, root_height_bound).roots) {
      if (r.vec == vec) return normalize_affine_root(r, n);
      if (r.vec == neg) return normalize_affine_root(r.negated(), n);
    }
  } catch (const std::invalid_argument&) {
    throw Error(Errc::ParseError, "bad integer inside wall '" + text + "'");
  }
  throw Error(Errc::NotARealRoot,
              "no positive real root of height <= " +
                  std::to_string(root_height_bound) + " has vector " + fmt_vec(vec) +
                  " (raise --root-height-bound?)");
}

// The greedy dominance walk on a coweight that failed to settle, for the
// error report: reflect at the smallest negative pairing, step by step.
void print_greedy_trace(const RootDatum& d, const IntVec& start, int step_cap) {
  const int shown_cap = 12;
  IntVec lam = start;
  for (int step = 0; step < shown_cap && step < step_cap; ++step) {
    int j = -1;
    Int c;
    for (int i = 0; i < d.gcm.size; ++i) {
      const Int p = pairing(lam, d.simple_roots[i]);
      if (p < 0) {
        j = i;
        c = p;
        break;
      }
    }
    if (j < 0) return;  // dominant; not reached on the failing path
    std::cout << "  step " << (step + 1) << ": " << fmt_vec(lam) << " --s" << (j + 1)
              << "--> ";
    for (int k = 0; k < d.rank; ++k) {
      lam[static_cast<std::size_t>(k)] -= c * d.simple_coroots[j][static_cast<std::size_t>(k)];
    }
    std::cout << fmt_vec(lam) << "  (height +" << Int(-c).get_str() << ")\n";
  }
  std::cout << "  ... the walk continues past " << shown_cap
            << " shown steps without reaching a dominant coweight\n";
}

int run_length(const RootDatum& d, const GlobalOpts& g, const std::string& element_text) {
  const AffineElt x = parse_element(d, element_text);
  const auto wp = try_make_wplus(d, x, g.step_cap);
  std::cout << "element: " << format_element(x) << "\n";
  if (!wp) {
    std::cout << "coweight " << fmt_vec(x.lam) << " reached no dominant representative within "
              << g.step_cap << " steps; Tits cone membership undetermined\n";
    print_greedy_trace(d, x.lam, g.step_cap);
    return kExitUnknown;
  }
  const auto [twice_height, eps] = affine_length_eps(d, *wp);
  std::cout << "lambda++: " << fmt_vec(wp->dom.dominant) << "\n";
  std::cout << "v^lambda: " << fmt_word(wp->dom.v_min) << "\n";
  std::cout << "length pair: " << twice_height.get_str() << " + " << eps.get_str()
            << "*eps\n";
  std::cout << "affine length: " << affine_length(d, *wp).get_str() << "\n";
  return kExitOk;
}

void print_chain(const ChainReport& chain) {
  std::cout << "chain:\n  " << format_element(chain.elements.front()) << "\n";
  for (std::size_t k = 0; k < chain.reflections.size(); ++k) {
    std::cout << "  --" << format_affine_root(chain.reflections[k]) << "--> "
              << format_element(chain.elements[k + 1]) << "\n";
  }
}

int run_compare(const RootDatum& d, const GlobalOpts& g, const std::string& x_text,
                const std::string& y_text) {
  OrderContext ctx(d, g.bounds(), g.step_cap);
  const WPlusElt x = make_wplus(d, parse_element(d, x_text), g.step_cap);
  const WPlusElt y = make_wplus(d, parse_element(d, y_text), g.step_cap);
  std::cout << "x: " << format_element(x.elt) << "  (length " << ctx.length(x).get_str()
            << ")\n";
  std::cout << "y: " << format_element(y.elt) << "  (length " << ctx.length(y).get_str()
            << ")\n";
  const LessThanResult res = less_than(ctx, x, y);
  std::cout << "x < y: " << tri_name(res.value) << "\n";
  if (res.chain) print_chain(*res.chain);
  return res.value == Tri::Unknown ? kExitUnknown : kExitOk;
}

int run_covers(const RootDatum& d, const GlobalOpts& g, const std::string& element_text) {
  OrderContext ctx(d, g.bounds(), g.step_cap);
  const WPlusElt x = make_wplus(d, parse_element(d, element_text), g.step_cap);
  const CoverSet cs = upper_covers(ctx, x);
  std::cout << "cover\treflection\tkind\tdelta\twitness\n";
  for (const CoverCertificate& cert : cs.covers) {
    std::cout << format_element(cert.cover.elt) << "\t"
              << format_affine_root(cert.reflection) << "\t"
              << (cert.kind == CoverKind::SameClass ? "same-class" : "varying-class") << "\t"
              << cert.length_delta.get_str() << "\t";
    if (cert.witness) {
      const VaryingWitness& w = *cert.witness;
      std::cout << "beta=" << fmt_vec(w.beta.vec) << ";n=" << w.n.get_str()
                << ";sigma=" << w.sigma.get_str() << ";u=" << fmt_word(w.u)
                << ";reflected=" << (w.reflected_shape ? "1" : "0");
    } else {
      std::cout << "-";
    }
    std::cout << "\n";
  }
  std::cout << "# complete: " << (cs.complete ? "true" : "false") << "\n";
  return cs.complete ? kExitOk : kExitUnknown;
}

int run_interval(const RootDatum& d, const GlobalOpts& g, const std::string& x_text,
                 const std::string& y_text) {
  OrderContext ctx(d, g.bounds(), g.step_cap);
  const WPlusElt x = make_wplus(d, parse_element(d, x_text), g.step_cap);
  const WPlusElt y = make_wplus(d, parse_element(d, y_text), g.step_cap);
  std::cout << "element\tlength\n";
  const Tri first = less_than(ctx, x, y).value;
  if (first == Tri::Unknown) {
    std::cout << "# endpoints not comparable within bounds\n";
    return kExitUnknown;
  }
  if (first == Tri::False) {
    std::cout << "# empty: the endpoints do not satisfy x < y\n";
    return kExitOk;
  }

  const Int ly = ctx.length(y);
  bool uncertain = false;
  std::map<AffineElt, WPlusElt, OrderContext::AffineLess> found;
  found.emplace(x.elt, x);
  std::vector<WPlusElt> frontier{x};
  while (!frontier.empty()) {
    std::vector<WPlusElt> next;
    for (const WPlusElt& z : frontier) {
      if (ctx.length(z) >= ly) continue;
      const CoverSet cs = upper_covers(ctx, z);
      if (!cs.complete) uncertain = true;
      for (const CoverCertificate& cert : cs.covers) {
        if (ctx.length(cert.cover) > ly) continue;
        if (found.count(cert.cover.elt)) continue;
        Tri below = Tri::False;
        if (cert.cover.elt == y.elt) {
          below = Tri::True;  // reached the top
        } else {
          below = less_than(ctx, cert.cover, y).value;
        }
        if (below == Tri::Unknown) {
          uncertain = true;
          continue;
        }
        if (below == Tri::False) continue;
        found.emplace(cert.cover.elt, cert.cover);
        next.push_back(cert.cover);
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::pair<Int, AffineElt>> rows;
  for (const auto& [elt, wp] : found) rows.emplace_back(ctx.length(wp), elt);
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return affine_elt_less(a.second, b.second);
  });
  for (const auto& [len, elt] : rows) {
    std::cout << format_element(elt) << "\t" << len.get_str() << "\n";
  }
  std::cout << "# elements: " << rows.size() << "\n";
  if (uncertain) {
    std::cout << "# warning: some branches stayed unknown; the list may be incomplete\n";
    return kExitUnknown;
  }
  return kExitOk;
}

int run_verify_grading(const RootDatum& d, const GlobalOpts& g, int height_cap, int word_cap,
                       const std::string& report_out) {
  OrderContext ctx(d, g.bounds(), g.step_cap);
  const GradingRegion region{height_cap, word_cap};
  const GradingReport report = verify_grading(ctx, region);
  std::cout << grading_report_summary(report);
  if (!report_out.empty()) {
    std::ofstream out(report_out);
    if (!out) throw Error(Errc::ParseError, "cannot write report file " + report_out);
    out << grading_report_tsv(report);
    std::cout << "report: " << report_out << "\n";
  }
  if (report.violations > 0) return kExitViolation;
  if (report.unknowns > 0 || report.membership_undetermined > 0) return kExitUnknown;
  return kExitOk;
}

void write_svg(const std::string& path, const std::string& svg) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, "cannot write SVG file " + path);
  out << svg;
  std::cout << "wrote " << path << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact calculator for the affinized Weyl semigroup of a Kac-Moody root datum:\n"
      "lengths, Bruhat order, covers, grading checks and SVG pictures."};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--datum", g.datum_file, "root datum description file");
  app.add_option("--cartan", g.cartan_text,
                 "generalized Cartan matrix rows, e.g. \"2,-1;-1,2\" (minimal realization)");
  app.add_option("--root-height-bound", g.root_height_bound,
                 "wall roots are enumerated up to this height");
  app.add_option("--level-bound", g.level_bound, "wall level scan bound for plain searches");
  app.add_option("--chain-bound", g.chain_bound, "maximum raising steps per chain");
  app.add_option("--step-cap", g.step_cap, "dominance walk step cap");

  std::string element_text, x_text, y_text, window_text, svg_out, report_out;
  int depth = 3, height_cap = 3, word_cap = 3;
  std::vector<std::string> highlight_texts, wall_texts;

  CLI::App* c_length = app.add_subcommand("length", "affine length of one element");
  c_length->add_option("--element", element_text, "element, e.g. \"pi[1,1] * s1 s2\"")
      ->required();

  CLI::App* c_compare = app.add_subcommand("compare", "decide x < y in the affine order");
  c_compare->add_option("--x", x_text, "smaller candidate")->required();
  c_compare->add_option("--y", y_text, "larger candidate")->required();

  CLI::App* c_covers = app.add_subcommand("covers", "certified upper covers of an element");
  c_covers->add_option("--element", element_text, "base element")->required();

  CLI::App* c_interval = app.add_subcommand("interval", "all elements between x and y");
  c_interval->add_option("--x", x_text, "bottom")->required();
  c_interval->add_option("--y", y_text, "top")->required();

  CLI::App* c_verify = app.add_subcommand("verify-grading",
                                          "cross-check covers against the order oracle "
                                          "over a coweight/word region");
  c_verify->add_option("--height-cap", height_cap, "dominant coweight height cap");
  c_verify->add_option("--word-cap", word_cap, "word length cap");
  c_verify->add_option("--report-out", report_out, "write the row-by-row TSV report here");

  CLI::App* c_tits = app.add_subcommand("plot-tits", "SVG of the vectorial chamber fan");
  c_tits->add_option("--depth", depth, "chamber word-length cap");
  c_tits->add_option("--window", window_text, "x_lo,x_hi,y_lo,y_hi (or lo,hi), rational");
  c_tits->add_option("--svg-out", svg_out, "output SVG path")->required();

  CLI::App* c_apart = app.add_subcommand("plot-apartment", "SVG of the affine apartment");
  c_apart->add_option("--depth", depth, "local cone word-length cap");
  c_apart->add_option("--window", window_text, "x_lo,x_hi,y_lo,y_hi (or lo,hi), rational");
  c_apart->add_option("--highlight", highlight_texts,
                      "element whose alcove (and local cone) to mark; repeatable");
  c_apart->add_option("--wall", wall_texts,
                      "affine root \"(v1,...,vd)[n]\" drawn in accent color; repeatable");
  c_apart->add_option("--svg-out", svg_out, "output SVG path")->required();

  for (CLI::App* sub :
       {c_length, c_compare, c_covers, c_interval, c_verify, c_tits, c_apart}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const RootDatum d = load_datum(g);
    if (c_length->parsed()) return run_length(d, g, element_text);
    if (c_compare->parsed()) return run_compare(d, g, x_text, y_text);
    if (c_covers->parsed()) return run_covers(d, g, element_text);
    if (c_interval->parsed()) return run_interval(d, g, x_text, y_text);
    if (c_verify->parsed()) return run_verify_grading(d, g, height_cap, word_cap, report_out);
    if (c_tits->parsed() || c_apart->parsed()) {
      PlotSpec spec;
      spec.depth = depth;
      spec.window = parse_window(window_text, depth);
      spec.root_height_bound = g.root_height_bound;
      spec.level_bound = g.level_bound;
      if (c_tits->parsed()) {
        write_svg(svg_out, render_tits_cone(d, spec));
        return kExitOk;
      }
      for (const std::string& text : highlight_texts) {
        spec.highlighted.push_back(parse_element(d, text));
      }
      for (const std::string& text : wall_texts) {
        spec.marked_walls.push_back(parse_wall(d, text, g.root_height_bound));
      }
      write_svg(svg_out, render_apartment(d, spec));
      return kExitOk;
    }
    return kExitUsage;  // unreachable: require_subcommand(1)
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::NotInTitsCone ? kExitUnknown : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
