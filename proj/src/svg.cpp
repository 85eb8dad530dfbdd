#include <algorithm>
#include <sstream>

#include "unbent/ortho.hpp"

namespace unbent {

std::string render_svg(const PlaneGraph& g, const Drawing& d,
                       const std::vector<EdgeId>& straight_edges) {
  std::vector<char> straight(g.m(), 0);
  for (EdgeId e : straight_edges)
    if (0 <= e && e < g.m()) straight[e] = 1;

  long long maxx = 0, maxy = 0;
  for (const auto& p : d.vertex) {
    maxx = std::max(maxx, p.x);
    maxy = std::max(maxy, p.y);
  }
  for (const auto& pl : d.polyline)
    for (const auto& p : pl) {
      maxx = std::max(maxx, p.x);
      maxy = std::max(maxy, p.y);
    }
  const long long scale = 28, margin = 30;
  auto X = [&](long long x) { return margin + scale * x; };
  auto Y = [&](long long y) { return margin + scale * (maxy - y); };  // y up

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << (2 * margin + scale * maxx) << "\" height=\"" << (2 * margin + scale * maxy) << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (EdgeId e = 0; e < g.m(); ++e) {
    out << "  <polyline fill=\"none\" stroke=\"" << (straight[e] ? "#d62728" : "#1f77b4")
        << "\" stroke-width=\"3\" points=\"";
    for (std::size_t i = 0; i < d.polyline[e].size(); ++i) {
      if (i) out << " ";
      out << X(d.polyline[e][i].x) << "," << Y(d.polyline[e][i].y);
    }
    out << "\"/>\n";
  }
  for (VertexId v = 0; v < g.n(); ++v)
    out << "  <circle cx=\"" << X(d.vertex[v].x) << "\" cy=\"" << Y(d.vertex[v].y)
        << "\" r=\"5\" fill=\"#333333\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace unbent
