#include "rbd/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace rbd {

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

// Splits into lines with comments removed; keeps 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::size_t lineno = 0, start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.emplace_back(lineno, line);
    start = end + 1;
  }
  return out;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
  throw Error(Errc::Parse, source + ":" + std::to_string(line) + ": " + what);
}

template <typename F>
auto at_line(const std::string& source, std::size_t line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), source + ":" + std::to_string(line) + ": " + e.message());
  }
}

std::size_t parse_index(const std::string& word, const std::string& source, std::size_t line) {
  const Integer v = at_line(source, line, [&] { return parse_integer(word); });
  if (v < 0 || !v.fits_ulong_p()) fail(source, line, "bad index '" + word + "'");
  return v.get_ui();
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Parse, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GraphFile parse_graph(std::string_view text, const std::string& source) {
  GraphFile out;
  std::map<std::string, std::size_t> labels;
  std::optional<std::size_t> handle_line;
  for (const auto& [lineno, line] : content_lines(text)) {
    const auto w = split_words(line);
    if (w[0] == "v") {
      if (w.size() != 3) fail(source, lineno, "expected 'v <label> <weight>'");
      if (!out.graph.edges().empty() || out.handle) fail(source, lineno, "vertices must precede edges and handles");
      if (labels.count(w[1])) fail(source, lineno, "duplicate vertex label '" + w[1] + "'");
      const Integer weight = at_line(source, lineno, [&] { return parse_integer(w[2]); });
      labels[w[1]] = out.graph.add_vertex(w[1], weight);
    } else if (w[0] == "e") {
      if (w.size() != 3 && w.size() != 4) fail(source, lineno, "expected 'e <label> <label> [mult]'");
      auto a = labels.find(w[1]), b = labels.find(w[2]);
      if (a == labels.end()) fail(source, lineno, "unknown vertex '" + w[1] + "'");
      if (b == labels.end()) fail(source, lineno, "unknown vertex '" + w[2] + "'");
      int mult = 1;
      if (w.size() == 4) {
        const Integer m = at_line(source, lineno, [&] { return parse_integer(w[3]); });
        if (!m.fits_sint_p() || m == 0) fail(source, lineno, "bad multiplicity '" + w[3] + "'");
        mult = static_cast<int>(m.get_si());
      }
      at_line(source, lineno, [&] {
        out.graph.add_edge(a->second, b->second, mult);
        return 0;
      });
    } else if (w[0] == "h") {
      if (out.handle) fail(source, lineno, "second handle line");
      const auto semi = line.find(';');
      if (semi == std::string::npos) fail(source, lineno, "expected 'h <intersections> ; <framing>'");
      BallHandleSpec spec;
      const auto lhs = split_words(line.substr(0, semi));
      for (std::size_t i = 1; i < lhs.size(); ++i)
        spec.intersections.push_back(at_line(source, lineno, [&] { return parse_integer(lhs[i]); }));
      const auto rhs = split_words(line.substr(semi + 1));
      if (rhs.size() != 1) fail(source, lineno, "expected a single framing after ';'");
      spec.framing = at_line(source, lineno, [&] { return parse_integer(rhs[0]); });
      out.handle = std::move(spec);
      handle_line = lineno;
    } else {
      fail(source, lineno, "unknown record '" + w[0] + "'");
    }
  }
  if (out.handle && out.handle->intersections.size() != out.graph.size())
    fail(source, *handle_line,
         "handle has " + std::to_string(out.handle->intersections.size()) + " intersections for " +
             std::to_string(out.graph.size()) + " vertices");
  return out;
}

GraphFile load_graph(const std::string& path) { return parse_graph(read_file(path), path); }

std::string write_graph(const PlumbingGraph& g, const std::optional<BallHandleSpec>& handle) {
  std::ostringstream os;
  for (const auto& v : g.vertices()) os << "v " << v.label << ' ' << v.weight.get_str() << '\n';
  for (const auto& e : g.edges()) {
    os << "e " << g.vertices()[e.a].label << ' ' << g.vertices()[e.b].label;
    if (e.multiplicity != 1) os << ' ' << e.multiplicity;
    os << '\n';
  }
  if (handle) {
    os << 'h';
    for (const auto& x : handle->intersections) os << ' ' << x.get_str();
    os << " ; " << handle->framing.get_str() << '\n';
  }
  return os.str();
}

AmbientData parse_ambient(std::string_view text, const std::string& source) {
  AmbientData out;
  bool have_header = false;
  std::map<std::string, bool> names;
  for (const auto& [lineno, line] : content_lines(text)) {
    const auto w = split_words(line);
    if (w[0] == "class") {
      if (!have_header) fail(source, lineno, "class before the 'chi=... sigma=...' header");
      if (w.size() < 4) fail(source, lineno, "expected 'class <name> c1sq=<q> pair=<k1,...> [off=<tag>]'");
      AmbientClass c;
      c.name = w[1];
      if (names[c.name]) fail(source, lineno, "duplicate class '" + c.name + "'");
      names[c.name] = true;
      bool have_c1 = false, have_pair = false;
      for (std::size_t i = 2; i < w.size(); ++i) {
        const auto eq = w[i].find('=');
        if (eq == std::string::npos) fail(source, lineno, "expected key=value, got '" + w[i] + "'");
        const auto key = w[i].substr(0, eq), value = w[i].substr(eq + 1);
        if (key == "c1sq") {
          c.c1sq = at_line(source, lineno, [&] { return parse_rational(value); });
          have_c1 = true;
        } else if (key == "pair") {
          c.pairing = at_line(source, lineno, [&] { return parse_tuple(value); });
          have_pair = true;
        } else if (key == "off") {
          c.off_tag = value;
        } else {
          fail(source, lineno, "unknown key '" + key + "'");
        }
      }
      if (!have_c1 || !have_pair) fail(source, lineno, "class needs both c1sq= and pair=");
      out.classes.push_back(std::move(c));
    } else {
      if (have_header) fail(source, lineno, "unexpected line '" + line + "'");
      bool chi = false, sigma = false;
      for (const auto& word : w) {
        const auto eq = word.find('=');
        if (eq == std::string::npos) fail(source, lineno, "expected key=value, got '" + word + "'");
        const auto key = word.substr(0, eq), value = word.substr(eq + 1);
        if (key == "chi") {
          out.chi = at_line(source, lineno, [&] { return parse_integer(value); });
          chi = true;
        } else if (key == "sigma") {
          out.sigma = at_line(source, lineno, [&] { return parse_integer(value); });
          sigma = true;
        } else {
          fail(source, lineno, "unknown key '" + key + "'");
        }
      }
      if (!chi || !sigma) fail(source, lineno, "header needs chi= and sigma=");
      have_header = true;
    }
  }
  if (!have_header) throw Error(Errc::Parse, source + ": missing 'chi=... sigma=...' header");
  return out;
}

AmbientData load_ambient(const std::string& path) { return parse_ambient(read_file(path), path); }

AlternatingDiagram parse_diagram(std::string_view text, const std::string& source) {
  AlternatingDiagram d;
  bool have_regions = false;
  for (const auto& [lineno, line] : content_lines(text)) {
    const auto w = split_words(line);
    if (w[0] == "regions" || w[0] == "black") {
      if (w.size() != 2) fail(source, lineno, "expected '" + w[0] + " <count>'");
      const auto n = parse_index(w[1], source, lineno);
      if (w[0] == "regions") {
        d.white_regions = n;
        have_regions = true;
      } else {
        d.black_regions = n;
      }
    } else if (w[0] == "x") {
      if (!have_regions) fail(source, lineno, "crossing before 'regions'");
      if (w.size() != 4 && w.size() != 6) fail(source, lineno, "expected 'x <a> <b> <sign> [<black a> <black b>]'");
      Crossing c{parse_index(w[1], source, lineno), parse_index(w[2], source, lineno), 0, std::nullopt};
      const Integer s = at_line(source, lineno, [&] { return parse_integer(w[3]); });
      if (s != 1 && s != -1) fail(source, lineno, "sign must be +1 or -1");
      c.sign = static_cast<int>(s.get_si());
      if (c.white_a >= d.white_regions || c.white_b >= d.white_regions) fail(source, lineno, "white region out of range");
      if (w.size() == 6) {
        c.black = std::make_pair(parse_index(w[4], source, lineno), parse_index(w[5], source, lineno));
        if (c.black->first >= d.black_regions || c.black->second >= d.black_regions)
          fail(source, lineno, "black region out of range");
      }
      d.crossings.push_back(c);
    } else {
      fail(source, lineno, "unknown record '" + w[0] + "'");
    }
  }
  if (!have_regions) throw Error(Errc::Parse, source + ": missing 'regions' line");
  return d;
}

AlternatingDiagram load_diagram(const std::string& path) { return parse_diagram(read_file(path), path); }

std::string write_diagram(const AlternatingDiagram& d) {
  std::ostringstream os;
  os << "regions " << d.white_regions << '\n';
  if (d.black_regions) os << "black " << d.black_regions << '\n';
  for (const auto& c : d.crossings) {
    os << "x " << c.white_a << ' ' << c.white_b << ' ' << c.sign;
    if (c.black) os << ' ' << c.black->first << ' ' << c.black->second;
    os << '\n';
  }
  return os.str();
}

}  // namespace rbd
