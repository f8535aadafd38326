#include "tropnet/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace tropnet {

namespace {

std::string trop_str(const Trop& t) { return t.str(); }

Trop trop_parse(const std::string& s) {
  if (s == "-inf") return Trop::neg_inf();
  return Trop(rat_parse(s));
}

}  // namespace

Json network_to_json(const PlanarNetwork& net) {
  Json j;
  j["strip"] = {{"a", rat_str(net.a())}, {"b", rat_str(net.b())}};
  if (net.middle()) j["middle"] = rat_str(*net.middle());
  j["vertices"] = Json::array();
  for (const Vertex& v : net.vertices())
    j["vertices"].push_back(
        {{"id", v.id}, {"x", rat_str(v.x)}, {"y", rat_str(v.y)}});
  j["edges"] = Json::array();
  for (const Edge& e : net.edges()) {
    Json je = {{"id", e.id}, {"tail", e.tail}, {"head", e.head}};
    if (e.multiplicity != 1) je["multiplicity"] = e.multiplicity;
    j["edges"].push_back(std::move(je));
  }
  return j;
}

PlanarNetwork network_from_json(const Json& j) {
  try {
    std::vector<Vertex> vs;
    for (const Json& jv : j.at("vertices"))
      vs.push_back(Vertex{jv.at("id").get<int>(),
                          rat_parse(jv.at("x").get<std::string>()),
                          rat_parse(jv.at("y").get<std::string>())});
    std::vector<Edge> es;
    for (const Json& je : j.at("edges")) {
      Edge e{je.at("id").get<int>(), je.at("tail").get<int>(),
             je.at("head").get<int>()};
      if (je.contains("multiplicity")) e.multiplicity = je["multiplicity"];
      es.push_back(e);
    }
    PlanarNetwork net =
        build_network(rat_parse(j.at("strip").at("a").get<std::string>()),
                      rat_parse(j.at("strip").at("b").get<std::string>()),
                      std::move(vs), std::move(es));
    if (j.contains("middle")) {
      // re-assemble with the recorded middle line
      net = PlanarNetwork::assemble(net.a(), net.b(), net.vertices(),
                                    net.edges(),
                                    rat_parse(j["middle"].get<std::string>()));
    }
    return net;
  } catch (const Json::exception& e) {
    fail(Errc::ParseError, std::string("bad network file: ") + e.what());
  }
}

Json weighting_to_json(const Weighting& w) {
  Json j;
  j["weights"] = Json::object();
  for (const auto& [id, t] : w.entries())
    j["weights"][std::to_string(id)] = trop_str(t);
  return j;
}

Weighting weighting_from_json(const Json& j) {
  try {
    Weighting w;
    for (const auto& [key, val] : j.at("weights").items())
      w.set(std::stoi(key), trop_parse(val.get<std::string>()));
    return w;
  } catch (const Json::exception& e) {
    fail(Errc::ParseError, std::string("bad weighting file: ") + e.what());
  }
}

Json tableau_to_json(const Tableau& t) {
  Json rows = Json::array();
  for (int k = 0; k <= t.n; ++k) {
    Json row = Json::array();
    for (int i = 0; i <= k; ++i) row.push_back(trop_str(t.at(k, i)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", t.n}, {"rows", std::move(rows)}};
}

Tableau tableau_from_json(const Json& j) {
  try {
    Tableau t(j.at("n").get<int>());
    const Json& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != t.n + 1)
      fail(Errc::ParseError, "tableau needs n+1 rows");
    for (int k = 0; k <= t.n; ++k) {
      if (static_cast<int>(rows[k].size()) != k + 1)
        fail(Errc::ParseError, "row " + std::to_string(k) + " needs " +
                                   std::to_string(k + 1) + " entries");
      for (int i = 0; i <= k; ++i)
        t.at(k, i) = trop_parse(rows[k][i].get<std::string>());
    }
    return t;
  } catch (const Json::exception& e) {
    fail(Errc::ParseError, std::string("bad tableau file: ") + e.what());
  }
}

Json multipath_to_json(const Multipath& mp) {
  Json paths = Json::array();
  for (const auto& p : mp.paths) paths.push_back(p);
  return Json{{"paths", std::move(paths)}};
}

Json gd_path_to_json(const GammaDeltaPath& p) {
  return Json{{"k", p.k},
              {"i", p.i},
              {"gamma", multipath_to_json(p.gamma_part)},
              {"delta", multipath_to_json(p.delta_part)}};
}

Json matrix_to_json(const SymmetricMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.a) rows.push_back(row);
  return Json{{"n", m.n}, {"entries", std::move(rows)}};
}

SymmetricMatrix matrix_from_json(const Json& j) {
  try {
    SymmetricMatrix m = SymmetricMatrix::zero(j.at("n").get<int>());
    const Json& rows = j.at("entries");
    for (int i = 0; i < m.n; ++i)
      for (int k = 0; k < m.n; ++k) m.a[i][k] = rows.at(i).at(k).get<double>();
    return m;
  } catch (const Json::exception& e) {
    fail(Errc::ParseError, std::string("bad matrix file: ") + e.what());
  }
}

std::vector<Rat> rats_from_csv(const std::string& csv) {
  std::vector<Rat> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(rat_parse(tok));
  if (out.empty()) fail(Errc::ParseError, "empty list");
  return out;
}

namespace {

// Fixed-point pixel coordinates so the output bytes are deterministic.
long px(const Rat& world, long scale, long offset) {
  const Rat scaled = world * scale;
  const BigInt ipart = numerator(scaled) / denominator(scaled);
  return offset + ipart.convert_to<long>();
}

std::string render_svg(const PlanarNetwork& net, const Weighting* w,
                       const Multipath* highlight) {
  const long sx = 90, sy = 60, margin = 40;
  Rat ymin = 0, ymax = 1;
  for (const Vertex& v : net.vertices()) {
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  const long width = px(net.b() - net.a(), sx, 2 * margin);
  const long height = px(ymax - ymin, sy, 2 * margin);
  auto X = [&](const Rat& x) { return px(x - net.a(), sx, margin); };
  auto Y = [&](const Rat& y) { return height - px(y - ymin, sy, margin); };

  std::set<int> hot;
  if (highlight)
    for (const auto& p : highlight->paths) hot.insert(p.begin(), p.end());

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  if (net.middle()) {
    svg << "  <line x1=\"" << X(*net.middle()) << "\" y1=\"" << Y(ymax)
        << "\" x2=\"" << X(*net.middle()) << "\" y2=\"" << Y(ymin)
        << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"6,4\"/>\n";
  }
  for (const Edge& e : net.edges()) {
    const Vertex& t = net.vertex(e.tail);
    const Vertex& h = net.vertex(e.head);
    const bool on = hot.count(e.id) != 0;
    svg << "  <line x1=\"" << X(t.x) << "\" y1=\"" << Y(t.y) << "\" x2=\""
        << X(h.x) << "\" y2=\"" << Y(h.y) << "\" stroke=\""
        << (on ? "#cc2222" : "#222222") << "\" stroke-width=\""
        << (on ? 4 : 1) << "\"/>\n";
    if (w) {
      svg << "  <text x=\"" << (X(t.x) + X(h.x)) / 2 << "\" y=\""
          << (Y(t.y) + Y(h.y)) / 2 - 6 << "\" font-size=\"12\" fill=\"#444444\""
          << " text-anchor=\"middle\">" << w->at(e.id).str() << "</text>\n";
    }
  }
  for (const Vertex& v : net.vertices())
    svg << "  <circle cx=\"" << X(v.x) << "\" cy=\"" << Y(v.y)
        << "\" r=\"3\" fill=\"#000000\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

std::string render_dot(const PlanarNetwork& net, const Weighting* w) {
  std::ostringstream dot;
  dot << "digraph planar_network {\n  rankdir=LR;\n";
  for (const Vertex& v : net.vertices())
    dot << "  v" << v.id << " [label=\"" << v.id << " (" << rat_str(v.x)
        << "," << rat_str(v.y) << ")\"];\n";
  for (const Edge& e : net.edges()) {
    dot << "  v" << e.tail << " -> v" << e.head << " [label=\"" << e.id;
    if (w) dot << ": " << w->at(e.id).str();
    dot << "\"];\n";
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace

std::string render(const PlanarNetwork& net, const Weighting* w,
                   const Multipath* highlight, RenderFormat format) {
  return format == RenderFormat::SVG ? render_svg(net, w, highlight)
                                     : render_dot(net, w);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    fail(Errc::ParseError, path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(Errc::ParseError, "cannot write " + path);
  out << text;
}

}  // namespace tropnet
