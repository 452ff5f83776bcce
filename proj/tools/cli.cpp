#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>

#include "fixtures.hpp"
#include "rbd/blowdown.hpp"
#include "rbd/goeritz.hpp"
#include "rbd/io.hpp"
#include "rbd/lens.hpp"

namespace rbd::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Records };

// Text lines or one JSON object per line; never both.
class Emitter {
 public:
  Emitter(std::ostream& out, Format format) : out_(out), format_(format) {}
  void text(const std::string& line) {
    if (format_ == Format::Text) out_ << line << '\n';
  }
  void record(const std::string& kind, json fields) {
    if (format_ != Format::Records) return;
    fields["kind"] = kind;
    out_ << fields.dump() << '\n';
  }

 private:
  std::ostream& out_;
  Format format_;
};

std::string vec(const IntVector& v) { return format_tuple(v); }
std::string rat(const Rational& q) { return to_string(q); }

json vec_list(const std::vector<IntVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vec(v));
  return a;
}

std::string join_vecs(const std::vector<IntVector>& vs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? sep : "") + vec(vs[i]);
  return s;
}

std::string indent(const std::string& block) {
  std::string out;
  std::istringstream is(block);
  for (std::string line; std::getline(is, line);) out += "  " + line + "\n";
  if (!out.empty()) out.pop_back();
  return out;
}

// ---- configuration sources ----

struct SourceOptions {
  std::string graph_path;
  std::vector<long> park;
  std::vector<long> wahl;
  std::vector<long> mn;
  bool raw = false;
  std::vector<std::string> seifert;
  std::string hj = "standard";
  std::vector<std::string> chain;
  int family = 0;
  bool mirror = false;
  bool reverse = false;
  std::string handle;
};

struct Source {
  std::string description;
  std::optional<PlumbingGraph> graph;
  IntMatrix form;
  std::optional<BallHandleSpec> handle;
};

void add_source_options(CLI::App* app, SourceOptions& o, bool with_handle) {
  auto* g = app->add_option_group("configuration", "exactly one configuration source");
  g->add_option("--graph", o.graph_path, "graph file")->check(CLI::ExistingFile);
  g->add_option("--park", o.park, "chain C_{p,q}: P Q")->expected(2);
  g->add_option("--wahl", o.wahl, "Wahl star: P Q R")->expected(3);
  g->add_option("--mn", o.mn, "(m,n) family: M N")->expected(2);
  g->add_option("--seifert", o.seifert, "Seifert star: B beta/alpha ...")->expected(2, 64);
  g->add_option("--chain", o.chain, "linear chain weights")->expected(1, 256);
  g->add_option("--family", o.family, "ribbon family Goeritz form with N pairs");
  g->require_option(1);
  app->add_flag("--raw", o.raw, "keep the unreduced (m,n) graph");
  app->add_option("--hj", o.hj, "ray expansion convention")->check(CLI::IsMember({"standard", "inverse"}));
  app->add_flag("--mirror", o.mirror, "mirror member of the family");
  app->add_flag("--reverse", o.reverse, "reverse the vertex order");
  if (with_handle) app->add_option("--handle", o.handle, "ball handle \"i1,...,in;framing\"");
}

BallHandleSpec parse_handle(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw Error(Errc::Parse, "--handle: expected \"i1,...,in;framing\"");
  return {parse_tuple(text.substr(0, semi)), parse_integer(text.substr(semi + 1))};
}

std::vector<Integer> parse_weights(const std::vector<std::string>& parts) {
  std::string joined;
  for (const auto& p : parts) joined += p + " ";
  return parse_tuple(joined);
}

Source load_source(const SourceOptions& o) {
  Source s;
  if (!o.graph_path.empty()) {
    auto file = load_graph(o.graph_path);
    s.description = o.graph_path;
    s.graph = std::move(file.graph);
    s.handle = std::move(file.handle);
  } else if (!o.park.empty()) {
    s.description = "C_{" + std::to_string(o.park[0]) + "," + std::to_string(o.park[1]) + "}";
    s.graph = park_chain(o.park[0], o.park[1]);
    if (o.park[1] == 1 && o.park[0] >= 2) s.handle = casson_harer_handle(o.park[0]);
  } else if (!o.wahl.empty()) {
    s.description = "Wahl(" + std::to_string(o.wahl[0]) + "," + std::to_string(o.wahl[1]) + "," +
                    std::to_string(o.wahl[2]) + ")";
    s.graph = wahl_graph(o.wahl[0], o.wahl[1], o.wahl[2]);
  } else if (!o.mn.empty()) {
    s.description = "(m,n) = (" + std::to_string(o.mn[0]) + "," + std::to_string(o.mn[1]) + ")";
    s.graph = mn_family_graph(o.mn[0], o.mn[1]);
    if (!o.raw) s.graph = reduce_blow_downs(*s.graph);
  } else if (!o.seifert.empty()) {
    std::vector<SeifertRay> rays;
    for (std::size_t i = 1; i < o.seifert.size(); ++i) {
      const Rational r = parse_rational(o.seifert[i]);
      rays.push_back({r.get_num(), r.get_den()});
    }
    const auto conv = o.hj == "inverse" ? HjConvention::AlphaOverComplement : HjConvention::AlphaOverBeta;
    s.description = "Seifert star";
    s.graph = seifert_star(parse_integer(o.seifert[0]), rays, conv).graph;
  } else if (!o.chain.empty()) {
    s.description = "chain";
    s.graph = linear_chain(parse_weights(o.chain));
  } else if (o.family > 0) {
    s.description = std::string(o.mirror ? "mirror " : "") + "family n=" + std::to_string(o.family);
    s.form = family_form(o.family, o.mirror);
  } else {
    throw Error(Errc::InvalidArgument, "no configuration source given");
  }
  if (!o.handle.empty()) s.handle = parse_handle(o.handle);
  if (o.reverse) {
    if (s.graph) {
      s.graph = s.graph->reversed();
    } else {
      std::vector<std::size_t> perm(s.form.rows());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = perm.size() - 1 - i;
      s.form = permuted(s.form, perm);
    }
    if (s.handle && o.handle.empty()) std::reverse(s.handle->intersections.begin(), s.handle->intersections.end());
  }
  if (s.graph) s.form = intersection_form(*s.graph);
  return s;
}

std::optional<std::vector<Integer>> chain_weights(const Source& s) {
  if (!s.graph || !s.graph->is_tree()) return std::nullopt;
  const auto& g = *s.graph;
  for (std::size_t i = 0; i + 1 < g.size(); ++i)
    if (g.multiplicity(i, i + 1) != 1) return std::nullopt;
  if (g.edges().size() + 1 != g.size()) return std::nullopt;
  std::vector<Integer> w;
  for (const auto& v : g.vertices()) {
    if (v.weight > -2) return std::nullopt;
    w.push_back(v.weight);
  }
  return w;
}

// ---- subcommands ----

struct Common {
  std::string format = "text";
  std::string box = "wide";
  unsigned jobs = 1;
  int rounds = 3;

  Format fmt() const { return format == "records" ? Format::Records : Format::Text; }
  DTableOptions table_options() const { return {parse_box_preset(box), rounds, jobs}; }
};

void add_common(CLI::App* app, Common& c, bool table) {
  app->add_option("--format", c.format, "text or records")->check(CLI::IsMember({"text", "records"}));
  if (!table) return;
  app->add_option("--box", c.box, "box preset")->check(CLI::IsMember({"wide", "initial", "taut"}));
  app->add_option("--jobs", c.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  app->add_option("--rounds", c.rounds, "maximum box widenings")->check(CLI::Range(0, 16));
}

void emit_table_warnings(const DInvariantTable& t, Emitter& em, std::ostream& err) {
  for (const auto& w : t.warnings) {
    err << "warning: " << w << '\n';
    em.record("warning", {{"message", w}});
  }
}

int cmd_form(const Source& s, Emitter& em) {
  const SpincLattice lat(s.form);
  const auto factors = smith_normal_form(s.form).invariant_factors();
  const bool nd = is_negative_definite(s.form);
  em.text("source: " + s.description);
  if (s.graph) {
    for (const auto& v : s.graph->vertices()) em.text("vertex " + v.label + " " + to_string(v.weight));
  }
  em.text("form =\n" + indent(format_matrix(s.form)));
  em.text("det = " + to_string(lat.det()));
  IntMatrix adj(s.form.rows(), s.form.cols());
  for (std::size_t i = 0; i < adj.rows(); ++i)
    for (std::size_t j = 0; j < adj.cols(); ++j) adj(i, j) = Rational(lat.inverse()(i, j) * lat.det()).get_num();
  em.text("inverse = " + rat(Rational(1) / Rational(lat.det())) + " *\n" + indent(format_matrix(adj)));
  em.text("invariant factors = " + vec(factors));
  em.text(std::string("negative definite = ") + (nd ? "true" : "false"));
  json rec = {{"source", s.description}, {"det", to_string(lat.det())},   {"invariant_factors", vec(factors)},
              {"negative_definite", nd},  {"rank", s.form.rows()}};
  json rows = json::array();
  for (std::size_t i = 0; i < s.form.rows(); ++i) rows.push_back(vec(s.form.row(i)));
  rec["form"] = rows;
  json inv_rows = json::array();
  for (std::size_t i = 0; i < adj.rows(); ++i) inv_rows.push_back(vec(adj.row(i)));
  rec["det_times_inverse"] = inv_rows;
  if (s.graph && s.graph->is_tree()) {
    const auto bad = bad_vertices(*s.graph);
    std::string labels;
    json arr = json::array();
    for (auto v : bad.vertices) {
      labels += " " + s.graph->vertices()[v].label;
      arr.push_back(s.graph->vertices()[v].label);
    }
    em.text("bad vertices:" + (labels.empty() ? std::string(" none") : labels) + " (" + sleek_tag_name(bad.tag) + ")");
    rec["bad_vertices"] = arr;
    rec["sleek"] = sleek_tag_name(bad.tag);
  }
  if (auto w = chain_weights(s)) {
    const auto b = format_lens(chain_boundary(*w));
    em.text("boundary = " + b);
    rec["boundary"] = b;
  }
  em.record("form", rec);
  return kExitOk;
}

int cmd_dtable(const Source& s, const Common& c, Emitter& em, std::ostream& err) {
  const SpincLattice lat(s.form);
  const auto t = d_invariant_table(lat, c.table_options());
  emit_table_warnings(t, em, err);
  std::map<IntVector, Integer> counts;
  if (t.tree_form) counts = count_condition2_paths(lat);
  for (const auto& e : t.entries) {
    const auto it = counts.find(e.key);
    em.text("class " + vec(e.key) + "  rep " + vec(e.representative) + "  d = " + rat(e.d) + "  witness " +
            vec(e.witness) + (it != counts.end() ? "  paths " + to_string(it->second) : ""));
    json rec = {{"key", vec(e.key)},
                {"representative", vec(e.representative)},
                {"d", rat(e.d)},
                {"witness", vec(e.witness)},
                {"box_members", e.box_members}};
    if (it != counts.end()) rec["paths"] = to_string(it->second);
    em.record("class", rec);
  }
  em.record("summary", {{"classes", t.entries.size()},
                        {"stabilized", t.stabilized},
                        {"widenings", t.widenings},
                        {"tree_form", t.tree_form}});
  return kExitOk;
}

std::string path_line(const FullPath& p) {
  return join_vecs(p.vectors, " ~ ") + "  [condition " + std::to_string(p.condition) + "]";
}

json path_record(const SpincLattice& lat, const FullPath& p) {
  json moves = json::array();
  for (auto m : p.moves) moves.push_back(m);
  return {{"start", vec(p.vectors.front())},
          {"vectors", vec_list(p.vectors)},
          {"moves", moves},
          {"condition", p.condition},
          {"square", rat(lat.square(p.vectors.front()))}};
}

int cmd_paths(const Source& s, const std::vector<std::string>& vectors, bool counts, Emitter& em) {
  const SpincLattice lat(s.form);
  std::vector<IntVector> starts;
  if (vectors.empty()) {
    starts = sharp_vectors(lat);
  } else {
    for (const auto& v : vectors) starts.push_back(parse_tuple(v));
  }
  for (const auto& k : starts) {
    const auto p = full_path(lat, k);
    em.text(path_line(p));
    em.record("path", path_record(lat, p));
  }
  if (counts) {
    for (const auto& [key, n] : count_condition2_paths(lat)) {
      em.text("class " + vec(key) + "  condition-2 paths " + to_string(n));
      em.record("path_count", {{"key", vec(key)}, {"count", to_string(n)}});
    }
  }
  return kExitOk;
}

int cmd_sharp(const Source& s, const Common& c, Emitter& em) {
  const SpincLattice lat(s.form);
  const auto preset = c.box == "wide" ? BoxPreset::Initial : parse_box_preset(c.box);
  const auto sharp = sharp_vectors(lat, preset);
  for (const auto& k : sharp) {
    const auto p = full_path(lat, k);
    em.text(vec(k) + "  K^2 = " + rat(lat.square(k)) + "  path length " + std::to_string(p.vectors.size()) +
            "  taut " + (taut_check(lat, k) ? "yes" : "no"));
    em.record("sharp", {{"k", vec(k)},
                        {"square", rat(lat.square(k))},
                        {"path_length", p.vectors.size()},
                        {"taut", taut_check(lat, k)},
                        {"key", vec(lat.class_key(k))}});
  }
  em.text(std::to_string(sharp.size()) + " sharp vectors in the " + box_preset_name(preset) + " box");
  return kExitOk;
}

void emit_extension(const SpincLattice& lat, const ExtensionReport& r, Emitter& em) {
  if (r.source == ExtensionSource::Handle) {
    em.text("kernel = " + vec(r.kernel) + "  framing " + to_string(r.framing));
    em.record("kernel", {{"kernel", vec(r.kernel)}, {"framing", to_string(r.framing)}});
  }
  for (const auto& c : r.classes) {
    if (!c.extends) continue;
    em.text("extends " + vec(c.representative) + "  d = " + rat(c.d) + (c.a ? "  a = " + to_string(*c.a) : ""));
    json rec = {{"key", vec(c.key)},         {"representative", vec(c.representative)},
                {"d", rat(c.d)},             {"extends", c.extends},
                {"divisible", c.divisible}};
    if (c.a) rec["a"] = to_string(*c.a);
    em.record("extension", rec);
  }
  for (const auto& n : r.notes) {
    em.text("note: " + n);
    em.record("note", {{"message", n}});
  }
  const bool os = owens_strle_check(lat, r);
  em.text(std::to_string(r.extending_count()) + " of " + to_string(lat.class_count()) +
          " classes extend; square law " + (os ? "holds" : "fails"));
  em.record("extension_summary", {{"extending", r.extending_count()},
                                  {"classes", to_string(lat.class_count())},
                                  {"square_law", os}});
}

std::optional<VertexSymmetry> parse_symmetry(const std::string& text) {
  if (text.empty()) return std::nullopt;
  VertexSymmetry perm;
  for (const auto& x : parse_tuple(text)) {
    if (x < 0 || !x.fits_ulong_p()) throw Error(Errc::Parse, "--symmetry: bad index");
    perm.push_back(x.get_ui());
  }
  return perm;
}

int cmd_extend(const Source& s, const Common& c, const std::string& symmetry, Emitter& em, std::ostream& err) {
  const SpincLattice lat(s.form);
  const auto t = d_invariant_table(lat, c.table_options());
  emit_table_warnings(t, em, err);
  if (s.handle) {
    emit_extension(lat, extension_classes(lat, t, *s.handle), em);
    return kExitOk;
  }
  const auto sym = parse_symmetry(symmetry);
  if (sym) {
    const auto sub = extension_subgroups(lat, t, sym);
    em.text("base " + vec(t.at(sub.base).representative));
    for (std::size_t i = 0; i < sub.sets.size(); ++i) {
      std::vector<IntVector> reps;
      for (const auto& k : sub.sets[i]) reps.push_back(t.at(k).representative);
      em.text("candidate " + std::to_string(i) + ": " + join_vecs(reps, " "));
      em.record("candidate", {{"index", i}, {"keys", vec_list(sub.sets[i])}, {"representatives", vec_list(reps)}});
    }
    for (const auto& orbit : sub.orbits) {
      std::string line = "symmetry orbit:";
      json arr = json::array();
      for (auto i : orbit) {
        line += " " + std::to_string(i);
        arr.push_back(i);
      }
      em.text(line);
      em.record("orbit", {{"members", arr}});
    }
    return kExitOk;
  }
  const auto sets = conjugation_closed_extension_sets(lat, t);
  em.text(std::to_string(sets.size()) + " conjugation-closed d = 0 cosets of the square-root order");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::vector<IntVector> reps;
    for (const auto& k : sets[i]) reps.push_back(t.at(k).representative);
    em.text("candidate " + std::to_string(i) + ": " + join_vecs(reps, " "));
    em.record("candidate", {{"index", i}, {"keys", vec_list(sets[i])}, {"representatives", vec_list(reps)}});
  }
  return kExitOk;
}

int cmd_blowdown(const Source& s, const Common& c, const std::string& ambient_path, std::size_t set_index,
                 Emitter& em, std::ostream& err) {
  const SpincLattice lat(s.form);
  const auto ambient = load_ambient(ambient_path);
  const auto t = d_invariant_table(lat, c.table_options());
  emit_table_warnings(t, em, err);
  ExtensionReport ball;
  if (s.handle) {
    ball = extension_classes(lat, t, *s.handle);
  } else {
    const auto sets = conjugation_closed_extension_sets(lat, t);
    if (set_index >= sets.size())
      throw Error(Errc::InvalidArgument, "--set " + std::to_string(set_index) + " but only " +
                                             std::to_string(sets.size()) + " candidate extension sets");
    if (sets.size() > 1) err << "note: " << sets.size() << " candidate extension sets; using " << set_index << '\n';
    ball = extension_from_keys(t, sets[set_index]);
  }
  const auto rep = lift_basic_classes(lat, ambient, ball);
  em.text("chi " + to_string(rep.chi_before) + " -> " + to_string(rep.chi_after) + ", sigma " +
          to_string(rep.sigma_before) + " -> " + to_string(rep.sigma_after));
  for (const auto& row : rep.rows) {
    std::string line = row.name + "  K " + vec(row.k) + "  K^2 " + rat(row.square) + "  D " + rat(row.d_before);
    if (row.survives)
      line += "  survives  D' " + rat(row.d_after) + "  group " + std::to_string(*row.group);
    else
      line += std::string("  dies (") + (row.characteristic ? "" : "not characteristic, ") +
              (row.extends ? "extends" : "does not extend") + ")";
    em.text(line);
    json rec = {{"name", row.name},         {"off", row.off_tag},
                {"k", vec(row.k)},          {"c1sq", rat(row.c1sq)},
                {"square", rat(row.square)}, {"characteristic", row.characteristic},
                {"taut", row.taut},         {"sharp", row.sharp},
                {"extends", row.extends},   {"survives", row.survives},
                {"d_before", rat(row.d_before)}};
    if (row.survives) {
      rec["c1sq_after"] = rat(row.c1sq_after);
      rec["d_after"] = rat(row.d_after);
      rec["group"] = *row.group;
    }
    em.record("lift", rec);
  }
  for (const auto& n : rep.notes) {
    em.text("note: " + n);
    em.record("note", {{"message", n}});
  }
  em.text(std::to_string(rep.groups.size()) + " surviving classes after merging");
  em.record("blowdown_summary", {{"b2", to_string(rep.b2)},
                                 {"chi_after", to_string(rep.chi_after)},
                                 {"sigma_after", to_string(rep.sigma_after)},
                                 {"groups", rep.groups.size()}});
  return kExitOk;
}

int cmd_goeritz(const std::string& path, int family, bool mirror, bool trefoil, std::optional<std::size_t> base,
                bool black, bool emit_graph, Emitter& em, std::ostream& out) {
  AlternatingDiagram d;
  if (!path.empty())
    d = load_diagram(path);
  else if (family > 0)
    d = family_diagram(family, mirror);
  else if (trefoil)
    d = trefoil_diagram();
  else
    throw Error(Errc::InvalidArgument, "goeritz needs --diagram, --family or --trefoil");
  const std::size_t regions = black ? d.black_regions : d.white_regions;
  if (regions == 0) throw Error(Errc::InvalidArgument, "diagram has no regions of that color");
  const std::size_t bp = base.value_or(regions - 1);
  const auto g = black ? goeritz_form_black(d, bp) : goeritz_form(d, bp);
  const Integer det = abs(determinant(g.form));
  if (emit_graph) {
    out << write_graph(graph_from_form(g.form));
    return kExitOk;
  }
  em.text(std::string(black ? "black" : "white") + " Goeritz form, basepoint " + std::to_string(g.basepoint) +
          (g.flipped ? ", sign convention flipped" : ""));
  em.text(indent(format_matrix(g.form)));
  em.text("|det| = " + to_string(det));
  json rows = json::array();
  for (std::size_t i = 0; i < g.form.rows(); ++i) rows.push_back(vec(g.form.row(i)));
  em.record("goeritz", {{"color", black ? "black" : "white"},
                        {"basepoint", g.basepoint},
                        {"flipped", g.flipped},
                        {"form", rows},
                        {"determinant", to_string(det)}});
  return kExitOk;
}

int emit_fixture(const FixtureResult& r, Emitter& em) {
  em.text("fixture " + r.name + ": " + r.title);
  for (const auto& c : r.checks) {
    if (c.ok())
      em.text("  ok    " + c.what + ": " + c.actual);
    else
      em.text("  FAIL  " + c.what + ": expected " + c.expected + ", got " + c.actual);
    em.record("check", {{"fixture", r.name}, {"what", c.what}, {"expected", c.expected}, {"actual", c.actual},
                        {"ok", c.ok()}});
  }
  for (const auto& d : r.details) em.text(indent(d));
  em.text(r.ok() ? "PASS " + r.name : "FAIL " + r.name);
  em.record("fixture", {{"fixture", r.name}, {"title", r.title}, {"ok", r.ok()}});
  return r.ok() ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice computations for rational blow-downs", "rbd"};
  app.require_subcommand(1);

  Common common;
  SourceOptions src;

  auto* form = app.add_subcommand("form", "intersection form, inverse and invariant factors");
  add_source_options(form, src, false);
  add_common(form, common, false);

  auto* dtable = app.add_subcommand("d-table", "d-invariant of every class");
  add_source_options(dtable, src, false);
  add_common(dtable, common, true);

  std::vector<std::string> path_vectors;
  bool path_counts = false;
  auto* paths = app.add_subcommand("paths", "full paths from the sharp vectors or given vectors");
  add_source_options(paths, src, false);
  add_common(paths, common, false);
  paths->add_option("--vector", path_vectors, "starting vector, e.g. \"(1,3,0)\"");
  paths->add_flag("--counts", path_counts, "condition-2 path counts per class");

  auto* sharp = app.add_subcommand("sharp", "vectors with K^2 = -b2 in the initial box");
  add_source_options(sharp, src, false);
  add_common(sharp, common, true);

  std::string symmetry;
  auto* extend = app.add_subcommand("extend", "classes extending over the rational ball");
  add_source_options(extend, src, true);
  add_common(extend, common, true);
  extend->add_option("--symmetry", symmetry, "vertex permutation for subgroup candidates, e.g. \"2,1,0\"");

  std::string ambient;
  std::size_t set_index = 0;
  auto* blowdown = app.add_subcommand("blowdown", "lift ambient basic classes through the blow-down");
  add_source_options(blowdown, src, true);
  add_common(blowdown, common, true);
  blowdown->add_option("--ambient", ambient, "ambient class file")->required()->check(CLI::ExistingFile);
  blowdown->add_option("--set", set_index, "candidate extension set when no handle is known");

  std::string diagram;
  int gfamily = 0;
  bool gmirror = false, trefoil = false, black = false, emit_graph = false;
  std::optional<std::size_t> basepoint;
  auto* goeritz = app.add_subcommand("goeritz", "Goeritz form of an alternating diagram");
  auto* gsrc = goeritz->add_option_group("diagram", "diagram source");
  gsrc->add_option("--diagram", diagram, "diagram file")->check(CLI::ExistingFile);
  gsrc->add_option("--family", gfamily, "ribbon family member with N twist regions");
  gsrc->add_flag("--trefoil", trefoil, "standard trefoil diagram");
  gsrc->require_option(1);
  goeritz->add_flag("--mirror", gmirror, "mirror family member");
  goeritz->add_flag("--black", black, "use the black regions");
  goeritz->add_option("--basepoint", basepoint, "deleted region (default: last)");
  goeritz->add_flag("--emit-graph", emit_graph, "print the form as a graph file");
  add_common(goeritz, common, false);

  auto* lens = app.add_subcommand("lens", "lens space identifications");
  lens->require_subcommand(1);
  add_common(lens, common, false);
  std::vector<std::string> equiv_args;
  bool rev1 = false, rev2 = false, unoriented = false;
  auto* equiv = lens->add_subcommand("equiv", "compare L(p,q) and L(p2,q2)");
  equiv->add_option("values", equiv_args, "P Q P2 Q2")->expected(4)->required();
  equiv->add_flag("--reverse-first", rev1, "take -L(p,q)");
  equiv->add_flag("--reverse-second", rev2, "take -L(p2,q2)");
  equiv->add_flag("--unoriented", unoriented, "ignore orientation");
  std::vector<std::string> chain_args;
  auto* lchain = lens->add_subcommand("chain", "boundary of a linear chain");
  lchain->add_option("weights", chain_args, "weights <= -2")->required();
  std::vector<std::string> park_args;
  auto* lpark = lens->add_subcommand("park", "boundary of C_{p,q}");
  lpark->add_option("values", park_args, "P Q")->expected(2)->required();

  std::string example;
  bool list = false;
  auto* fixtures = app.add_subcommand("fixtures", "re-derive the reference examples");
  fixtures->add_option("--example", example, "run one fixture");
  fixtures->add_flag("--list", list, "list fixture names");
  add_common(fixtures, common, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  Emitter em(out, common.fmt());
  try {
    if (*form) return cmd_form(load_source(src), em);
    if (*dtable) return cmd_dtable(load_source(src), common, em, err);
    if (*paths) return cmd_paths(load_source(src), path_vectors, path_counts, em);
    if (*sharp) return cmd_sharp(load_source(src), common, em);
    if (*extend) return cmd_extend(load_source(src), common, symmetry, em, err);
    if (*blowdown) return cmd_blowdown(load_source(src), common, ambient, set_index, em, err);
    if (*goeritz) return cmd_goeritz(diagram, gfamily, gmirror, trefoil, basepoint, black, emit_graph, em, out);
    if (*equiv) {
      const auto a = make_lens(parse_integer(equiv_args[0]), parse_integer(equiv_args[1]), rev1 ? -1 : 1);
      const auto b = make_lens(parse_integer(equiv_args[2]), parse_integer(equiv_args[3]), rev2 ? -1 : 1);
      const bool same = unoriented ? lens_equiv_unoriented(a, b) : lens_equiv(a, b);
      em.text(same ? "true" : "false");
      em.record("lens_equiv", {{"first", format_lens(a)}, {"second", format_lens(b)}, {"equivalent", same},
                               {"oriented", !unoriented}});
      return kExitOk;
    }
    if (*lchain) {
      const auto l = chain_boundary(parse_weights(chain_args));
      em.text(format_lens(l));
      em.record("lens", {{"lens", format_lens(l)}, {"normalized", format_lens(normalize(l))}});
      return kExitOk;
    }
    if (*lpark) {
      const auto l = park_boundary(parse_integer(park_args[0]), parse_integer(park_args[1]));
      em.text(format_lens(l));
      em.record("lens", {{"lens", format_lens(l)}, {"normalized", format_lens(normalize(l))}});
      return kExitOk;
    }
    if (*fixtures) {
      if (list) {
        for (const auto& n : fixture_names()) {
          em.text(n);
          em.record("fixture_name", {{"name", n}});
        }
        return kExitOk;
      }
      const auto names = example.empty() ? fixture_names() : std::vector<std::string>{example};
      int status = kExitOk;
      for (const auto& n : names) status = std::max(status, emit_fixture(run_fixture(n), em));
      return status;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace rbd::cli
