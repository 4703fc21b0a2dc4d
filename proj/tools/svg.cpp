#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace cli {

namespace {

constexpr double kWidth = 800, kHeight = 460, kMargin = 40, kBase = 400;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

const char* color(int sym) {
  switch (sym) {
    case PCF_SYM_0: return "#1f4fd1";
    case PCF_SYM_1: return "#d12b1f";
    default: return "#1a9a3a";
  }
}

struct View {
  double lo, hi;
  double px(double t) const { return kMargin + (t - lo) / (hi - lo) * (kWidth - 2 * kMargin); }
};

// Half-disc arc over [a, b] on the baseline.
std::string arc(const View& v, double a, double b, const char* stroke, double width) {
  const double x1 = v.px(a), x2 = v.px(b);
  const double r = std::abs(x2 - x1) / 2;
  const double ry = std::min(r, kBase - 30);
  return "<path d=\"M " + fmt(x1) + " " + fmt(kBase) + " A " + fmt(r) + " " + fmt(ry) + " 0 0 1 " + fmt(x2) + " " +
         fmt(kBase) + "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(width) + "\"/>\n";
}

std::string vertical(const View& v, double t, const char* stroke, double width, const char* extra = "") {
  return "<line x1=\"" + fmt(v.px(t)) + "\" y1=\"" + fmt(kBase) + "\" x2=\"" + fmt(v.px(t)) + "\" y2=\"20\" stroke=\"" +
         stroke + "\" stroke-width=\"" + fmt(width) + "\"" + extra + "/>\n";
}

// Farey neighbours (a/b, c/d) inside [n, n + 1] down to the given depth.
void farey(long an, long bd, long cn, long dd, int depth, std::vector<std::pair<double, double>>& out) {
  out.emplace_back(double(an) / bd, double(cn) / dd);
  if (depth == 0) return;
  farey(an, bd, an + cn, bd + dd, depth - 1, out);
  farey(an + cn, bd + dd, cn, dd, depth - 1, out);
}

}  // namespace

std::string render_svg(const pcf_input* x, const pcf_delta* delta) {
  const double xv = pcf_input_approx(x);
  const size_t m = pcf_delta_size(delta);

  std::vector<pcf_cylinder> cyl(m);
  double lo = std::min(0.0, std::floor(xv)), hi = std::max(1.0, std::floor(xv) + 1);
  for (size_t i = 0; i < m; ++i) {
    pcf_delta_cylinder(delta, i, &cyl[i]);
    if (!cyl[i].beta_infinite) lo = std::min(lo, cyl[i].beta_approx), hi = std::max(hi, cyl[i].beta_approx);
    if (!cyl[i].gamma_infinite) lo = std::min(lo, cyl[i].gamma_approx), hi = std::max(hi, cyl[i].gamma_approx);
  }
  const double pad = 0.04 * (hi - lo);
  const View view{lo - pad, hi + pad};

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) + "\" height=\"" + fmt(kHeight) +
       "\" viewBox=\"0 0 " + fmt(kWidth) + " " + fmt(kHeight) + "\">\n";
  s += std::string("<!-- paritycf ") + pcf_version() + " -->\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Tessellation: unit arcs [n, n+1] refined to a depth growing with m.
  const int depth = static_cast<int>(std::min<size_t>(m > 0 ? m - 1 : 0, 6));
  s += "<g id=\"tessellation\">\n";
  for (long n = static_cast<long>(std::floor(lo)); n < static_cast<long>(std::ceil(hi)); ++n) {
    std::vector<std::pair<double, double>> edges;
    farey(n, 1, n + 1, 1, depth, edges);
    for (const auto& [a, b] : edges) {
      if (a >= lo && b <= hi) s += arc(view, a, b, "#b0b0b0", 0.8);
    }
  }
  s += "</g>\n";

  s += "<g id=\"delta-edges\">\n";
  for (size_t i = 0; i < m; ++i) {
    const pcf_cylinder& c = cyl[i];
    const int sym = pcf_delta_symbol(delta, i);
    if (c.beta_infinite || c.gamma_infinite) {
      s += vertical(view, c.beta_infinite ? c.gamma_approx : c.beta_approx, color(sym), 2.5);
    } else {
      s += arc(view, std::min(c.beta_approx, c.gamma_approx), std::max(c.beta_approx, c.gamma_approx), color(sym), 2.5);
    }
  }
  s += "</g>\n";

  s += "<line x1=\"" + fmt(kMargin) + "\" y1=\"" + fmt(kBase) + "\" x2=\"" + fmt(kWidth - kMargin) + "\" y2=\"" +
       fmt(kBase) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  s += "<g id=\"geodesic\">\n" + vertical(view, xv, "black", 1.5, " stroke-dasharray=\"6 4\"");
  s += "<text x=\"" + fmt(view.px(xv) + 4) + "\" y=\"" + fmt(kBase + 16) + "\" font-family=\"monospace\" font-size=\"12\">x = " +
       std::string(pcf_input_text(x)) + "</text>\n</g>\n";

  s += "<g id=\"legend\" font-family=\"monospace\" font-size=\"13\">\n";
  s += "<text id=\"letters\" x=\"" + fmt(kMargin) + "\" y=\"" + fmt(kBase + 40) + "\">" + pcf_delta_text(delta) + "</text>\n";
  s += "<text x=\"" + fmt(kWidth - 260) + "\" y=\"" + fmt(kBase + 40) + "\">";
  s += std::string("<tspan fill=\"") + color(PCF_SYM_1) + "\">1</tspan> ";
  s += std::string("<tspan fill=\"") + color(PCF_SYM_0) + "\">0</tspan> ";
  s += std::string("<tspan fill=\"") + color(PCF_SYM_INF) + "\">inf</tspan>";
  s += " = red, blue, green</text>\n</g>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace cli
