#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <random>
#include <sstream>

#include "orbitspace/corpus.hpp"
#include "orbitspace/dot.hpp"
#include "orbitspace/error.hpp"
#include "orbitspace/grid_dynamics.hpp"
#include "orbitspace/isomorphism.hpp"
#include "orbitspace/model_json.hpp"
#include "orbitspace/morse.hpp"
#include "orbitspace/quotients.hpp"
#include "orbitspace/random_model.hpp"
#include "orbitspace/relations.hpp"
#include "orbitspace/surface.hpp"
#include "orbitspace/suspension.hpp"

namespace orbitspace::cli {

namespace {

using Json = nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidModel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Dot };

struct Context {
  std::ostream& out;
  std::ostream& err;
  Format format = Format::Text;
  std::uint64_t seed = 20240607;
};

constexpr std::string_view kCorpusPrefix = "corpus:";

Json ids_json(const IdSet& ids) { return Json(std::vector<std::string>(ids.begin(), ids.end())); }

std::string braces(const IdSet& ids) {
  std::string s = "{";
  for (const auto& id : ids) s += (s.size() > 1 ? ", " : "") + id;
  return s + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

FlowModel load_flow(const std::string& ref) {
  if (ref.starts_with(kCorpusPrefix)) {
    const auto id = ref.substr(kCorpusPrefix.size());
    if (auto m = corpus_model(id)) return *m;
    throw UsageError("unknown corpus model '" + id + "'");
  }
  return load_model(ref);
}

MapModel load_map(const std::string& ref) {
  if (ref.starts_with(kCorpusPrefix)) {
    const auto id = ref.substr(kCorpusPrefix.size());
    if (auto m = map_corpus_model(id)) return *m;
    throw UsageError("unknown map corpus model '" + id + "'");
  }
  return load_map_model(ref);
}

std::string describe(const ValidationReport& report) {
  std::string s;
  for (const auto& v : report.violations)
    s += v.node + ": " + v.rule + (v.detail.empty() ? "" : " (" + v.detail + ")") + "\n";
  return s;
}

IndexedModel checked(const std::string& ref) {
  auto model = load_flow(ref);
  const auto report = validate_model(model);
  if (!report.valid()) throw InvalidModel("model is invalid:\n" + describe(report));
  return IndexedModel(std::move(model));
}

void require_format(const Context& ctx, std::initializer_list<Format> allowed, std::string_view cmd) {
  for (auto f : allowed)
    if (f == ctx.format) return;
  throw UsageError("--out format not supported by '" + std::string(cmd) + "'");
}

QuotientLevel level_arg(const std::string& text) {
  if (auto l = parse_quotient_level(text)) return *l;
  throw UsageError("unknown level '" + text + "'");
}

RelationName relation_arg(const std::string& text) {
  if (auto r = parse_relation_name(text)) return *r;
  throw UsageError("unknown relation '" + text + "'");
}

PeriodType period_arg(const std::string& text) {
  if (auto p = parse_period_type(text)) return *p;
  throw UsageError("unknown period type '" + text + "'");
}

std::vector<double> numbers(const std::string& text, std::size_t count, std::string_view what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(what) + ": malformed number '" + item + "'");
    }
  }
  if (out.size() != count)
    throw UsageError(std::string(what) + ": expected " + std::to_string(count) + " values");
  return out;
}

// ---------------------------------------------------------------------------
// Command implementations

int cmd_validate(Context& ctx, const std::string& ref) {
  require_format(ctx, {Format::Text, Format::Json}, "validate");
  const auto model = load_flow(ref);
  const auto report = validate_model(model);
  if (ctx.format == Format::Json) {
    Json j;
    j["valid"] = report.valid();
    j["violations"] = Json::array();
    for (const auto& v : report.violations)
      j["violations"].push_back({{"node", v.node}, {"rule", v.rule}, {"detail", v.detail}});
    ctx.out << j.dump(2) << "\n";
  } else {
    ctx.out << (report.valid() ? "valid\n" : "invalid\n") << describe(report);
  }
  return report.valid() ? kOk : kInvalidModel;
}

int cmd_partition(Context& ctx, const std::string& ref, const std::string& node) {
  require_format(ctx, {Format::Text, Format::Json}, "partition");
  const auto m = checked(ref);
  const auto kp = kind_partition(m.model());
  std::optional<BoundaryDecomposition> bd;
  if (!node.empty()) bd = boundary_decomposition(m.model(), node);
  if (ctx.format == Format::Json) {
    Json j{{"singular", ids_json(kp.singular)},
           {"periodic", ids_json(kp.periodic)},
           {"nonrecurrent", ids_json(kp.nonrecurrent)},
           {"recurrent", ids_json(kp.recurrent)}};
    if (bd)
      j["boundary"] = {{"node", bd->node},
                       {"coborder", ids_json(bd->coborder)},
                       {"perp", ids_json(bd->perp)},
                       {"pitchfork", ids_json(bd->pitchfork)}};
    ctx.out << j.dump(2) << "\n";
  } else {
    ctx.out << "Sing: " << braces(kp.singular) << "\nPer: " << braces(kp.periodic)
            << "\nP: " << braces(kp.nonrecurrent) << "\nR: " << braces(kp.recurrent) << "\n";
    if (bd)
      ctx.out << "boundary of " << bd->node << ": coborder " << braces(bd->coborder) << ", perp "
              << braces(bd->perp) << ", pitchfork " << braces(bd->pitchfork) << "\n";
  }
  return kOk;
}

int cmd_relations(Context& ctx, const std::string& ref, const std::string& name,
                  const std::string& level, bool check) {
  const auto m = checked(ref);
  const auto r = compute_relation(m, relation_arg(name), level_arg(level));
  std::optional<PropertyReport> props;
  if (check) props = check_properties(r);
  const int code = props && !props->is_partial_order() ? kNegative : kOk;

  if (ctx.format == Format::Dot) {
    ctx.out << relation_to_dot(r);
  } else if (ctx.format == Format::Json) {
    Json j{{"relation", std::string(to_string(r.name))},
           {"level", std::string(to_string(r.level))},
           {"elements", r.elements},
           {"pairs", Json::array()}};
    for (std::size_t i = 0; i < r.size(); ++i)
      for (auto k : r.holds[i].members()) j["pairs"].push_back({r.elements[i], r.elements[k]});
    if (props) {
      j["reflexive"] = props->reflexive;
      j["transitive"] = props->transitive;
      j["antisymmetric"] = props->antisymmetric;
      if (props->transitive_witness) j["transitive_witness"] = *props->transitive_witness;
      if (props->antisymmetric_witness) j["antisymmetric_witness"] = *props->antisymmetric_witness;
    }
    ctx.out << j.dump(2) << "\n";
  } else {
    ctx.out << to_string(r.name) << " at " << to_string(r.level) << " (" << r.size()
            << " elements)\n";
    for (std::size_t i = 0; i < r.size(); ++i)
      for (auto k : r.holds[i].members())
        if (k != i) ctx.out << "  " << r.elements[i] << " <= " << r.elements[k] << "\n";
    if (props) {
      ctx.out << "reflexive: " << yes_no(props->reflexive) << "\n";
      ctx.out << "transitive: " << yes_no(props->transitive);
      if (const auto& w = props->transitive_witness)
        ctx.out << " (witness " << (*w)[0] << ", " << (*w)[1] << ", " << (*w)[2] << ")";
      ctx.out << "\nantisymmetric: " << yes_no(props->antisymmetric);
      if (const auto& w = props->antisymmetric_witness)
        ctx.out << " (witness " << (*w)[0] << ", " << (*w)[1] << ")";
      ctx.out << "\n";
    }
  }
  return code;
}

int cmd_quotient(Context& ctx, const std::string& ref, const std::string& level_text, int k,
                 bool chain) {
  const auto m = checked(ref);
  if (chain) {
    require_format(ctx, {Format::Text, Format::Json}, "quotient --chain");
    const auto report = refinement_chain_check(m);
    if (ctx.format == Format::Json) {
      Json j{{"ok", report.ok()}, {"steps", Json::array()}, {"notes", report.notes}};
      for (const auto& s : report.steps)
        j["steps"].push_back({{"fine", std::string(to_string(s.fine))},
                              {"coarse", std::string(to_string(s.coarse))},
                              {"holds", s.holds}});
      ctx.out << j.dump(2) << "\n";
    } else {
      for (const auto& s : report.steps)
        ctx.out << to_string(s.fine) << " -> " << to_string(s.coarse) << ": "
                << (s.holds ? "refines" : "FAILS") << "\n";
      for (const auto& n : report.notes) ctx.out << "note: " << n << "\n";
    }
    return report.ok() ? kOk : kNegative;
  }

  const auto level = level_arg(level_text);
  QuotientSpace q;
  std::optional<int> stabilization;
  bool has_stabilization = false;
  if (level == QuotientLevel::Morse) {
    q = morse_quotient(m);
  } else if (level == QuotientLevel::AwoK || level == QuotientLevel::AoK) {
    auto r = kth_space(m, k, level == QuotientLevel::AoK);
    q = std::move(r.space);
    stabilization = r.stabilization_index;
    has_stabilization = true;
  } else {
    q = quotient_at_level(m, level);
  }

  if (ctx.format == Format::Dot) {
    ctx.out << quotient_to_dot(q);
  } else if (ctx.format == Format::Json) {
    auto j = Json::parse(quotient_to_json(q));
    if (has_stabilization)
      j["stabilization_index"] = stabilization ? Json(*stabilization) : Json(nullptr);
    ctx.out << j.dump(2) << "\n";
  } else {
    ctx.out << to_string(q.level);
    if (q.k) ctx.out << " k=" << q.k;
    ctx.out << ": " << q.size() << " blocks\n";
    for (std::size_t b = 0; b < q.size(); ++b)
      ctx.out << "  " << q.labels[b] << ": " << braces(q.members[b]) << "\n";
    if (has_stabilization)
      ctx.out << "stabilization index: " << (stabilization ? std::to_string(*stabilization) : "none")
              << "\n";
  }
  return kOk;
}

Json morse_json(const MorseGraph& g) {
  Json j{{"morse_sets", Json::array()}, {"edges", Json::array()}};
  auto atoms = [&](const IndexSet& s) {
    std::vector<std::string> out;
    for (auto i : s.members()) out.push_back(g.atom_labels[i]);
    return out;
  };
  for (const auto& s : g.morse_sets) j["morse_sets"].push_back(atoms(s));
  for (const auto& e : g.edges)
    j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"connecting", atoms(e.connecting)}});
  return j;
}

int cmd_morse(Context& ctx, const std::string& ref, bool verify) {
  const auto m = checked(ref);
  const auto g = morse_graph(m);
  std::optional<MorseQuotientReport> report;
  if (verify) report = verify_morse_quotient(m);
  if (ctx.format == Format::Dot) {
    ctx.out << morse_graph_to_dot(g);
  } else if (ctx.format == Format::Json) {
    auto j = morse_json(g);
    if (report) j["violations"] = report->violations;
    ctx.out << j.dump(2) << "\n";
  } else {
    ctx.out << "combinatorial Morse sets: " << g.size() << "\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
      IdSet ids;
      for (auto a : g.morse_sets[i].members()) ids.insert(g.atom_labels[a]);
      ctx.out << "  M" << i << ": " << braces(ids) << "\n";
    }
    ctx.out << "edges: " << g.edges.size() << "\n";
    for (const auto& e : g.edges) {
      IdSet ids;
      for (auto a : e.connecting.members()) ids.insert(g.atom_labels[a]);
      ctx.out << "  M" << e.from << " -> M" << e.to << " via " << braces(ids) << "\n";
    }
    if (report) {
      ctx.out << "Morse quotient: " << (report->ok() ? "verified" : "VIOLATED") << "\n";
      for (const auto& v : report->violations) ctx.out << "  " << v << "\n";
    }
  }
  return report && !report->ok() ? kNegative : kOk;
}

struct GridArgs {
  std::string field;
  std::string domain;
  std::string res = "32,32";
  double time = 1.0;
  double eps = -1.0;
  double step = 0.0;
  bool check = false;
};

int cmd_morse_grid(Context& ctx, const GridArgs& a) {
  VectorField field;
  const bool builtin = builtin_field(a.field).has_value();
  if (builtin) field = *builtin_field(a.field);
  else field = parse_vector_field(a.field);

  BoxGrid grid;
  if (!a.domain.empty()) {
    const auto d = numbers(a.domain, 4, "--domain");
    grid.domain = Rect{d[0], d[1], d[2], d[3]};
  } else if (builtin) {
    grid.domain = builtin_domain(a.field);
  }
  if (a.res.find(',') == std::string::npos) {
    const auto r = numbers(a.res, 1, "--res");
    grid.nx = grid.ny = static_cast<int>(r[0]);
  } else {
    const auto r = numbers(a.res, 2, "--res");
    grid.nx = static_cast<int>(r[0]);
    grid.ny = static_cast<int>(r[1]);
  }
  const auto map = build_box_map(field, grid, BoxMapParams{a.time, a.eps, a.step});
  const auto g = grid_morse_graph(map);

  std::optional<CrossCheckReport> report;
  if (a.check) {
    const auto ref = builtin_reference(a.field);
    if (!ref) throw UsageError("--check needs a built-in field with a reference Morse graph");
    report = cross_check(g, ref->graph, correspond_by_anchor(g, grid, *ref));
  }

  auto centroid = [&](const IndexSet& s) {
    double x = 0, y = 0;
    const auto members = s.members();
    for (auto b : members) {
      const auto c = grid.center(b);
      x += c[0];
      y += c[1];
    }
    return std::array<double, 2>{x / members.size(), y / members.size()};
  };

  if (ctx.format == Format::Dot) {
    ctx.out << morse_graph_to_dot(g);
  } else if (ctx.format == Format::Json) {
    Json j{{"grid", {{"domain", {grid.domain.x0, grid.domain.x1, grid.domain.y0, grid.domain.y1}},
                     {"nx", grid.nx},
                     {"ny", grid.ny}}},
           {"morse_sets", Json::array()},
           {"edges", Json::array()}};
    for (const auto& s : g.morse_sets)
      j["morse_sets"].push_back({{"boxes", s.count()}, {"centroid", centroid(s)}});
    for (const auto& e : g.edges)
      j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"connecting_boxes", e.connecting.count()}});
    if (report) j["cross_check"] = {{"ok", report->ok()}, {"messages", report->messages}};
    ctx.out << j.dump(2) << "\n";
  } else {
    ctx.out << "grid " << grid.nx << "x" << grid.ny << ", Morse sets: " << g.size() << "\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
      const auto c = centroid(g.morse_sets[i]);
      ctx.out << "  M" << i << ": " << g.morse_sets[i].count() << " boxes around (" << c[0] << ", "
              << c[1] << ")\n";
    }
    ctx.out << "edges: " << g.edges.size() << "\n";
    for (const auto& e : g.edges) ctx.out << "  M" << e.from << " -> M" << e.to << "\n";
    if (report) {
      ctx.out << "cross-check: " << (report->ok() ? "matches reference" : "MISMATCH") << "\n";
      for (const auto& msg : report->messages) ctx.out << "  " << msg << "\n";
    }
  }
  return report && !report->ok() ? kNegative : kOk;
}

int cmd_surface(Context& ctx, const std::string& ref, bool reeb) {
  const auto m = checked(ref);
  if (reeb) {
    const auto g = reeb_abstract_graph(m);
    if (ctx.format == Format::Dot) {
      ctx.out << reeb_graph_to_dot(g);
      return kOk;
    }
    const auto& labels = g.extended.labels;
    if (ctx.format == Format::Json) {
      Json j{{"vertices", Json::array()}, {"edges", Json::array()}};
      for (auto v : g.graph.vertices)
        j["vertices"].push_back({{"label", labels[v]}, {"members", ids_json(g.extended.members[v])}});
      for (const auto& e : g.graph.edges) {
        std::vector<std::string> ends;
        for (auto v : e.ends) ends.push_back(labels[v]);
        j["edges"].push_back({{"label", labels[e.element]}, {"ends", ends}});
      }
      ctx.out << j.dump(2) << "\n";
    } else {
      ctx.out << "Reeb abstract graph: " << g.graph.vertices.size() << " vertices, "
              << g.graph.edges.size() << " edges\n";
      for (auto v : g.graph.vertices)
        ctx.out << "  vertex " << labels[v] << ": " << braces(g.extended.members[v]) << "\n";
      for (const auto& e : g.graph.edges) {
        ctx.out << "  edge " << labels[e.element] << ":";
        for (auto v : e.ends) ctx.out << " " << labels[v];
        ctx.out << "\n";
      }
    }
    return kOk;
  }

  require_format(ctx, {Format::Text, Format::Json}, "surface");
  const auto r = surface_report(m);
  bool negative = !r.classification.is_finite_type;
  if (r.euler && !r.euler->matches) negative = true;
  if (r.strata && !r.strata->height_bound_ok) negative = true;

  if (ctx.format == Format::Json) {
    Json j{{"finite_type", r.classification.is_finite_type},
           {"reasons", r.classification.reasons},
           {"awo_types", Json::object()},
           {"msc_diagram", ids_json(r.msc)},
           {"convention", r.convention}};
    for (const auto& [label, type] : r.classification.awo_types)
      j["awo_types"][label] = static_cast<int>(type);
    if (r.strata) {
      j["strata"] = {{"model_class", std::string(to_string(r.strata->model_class))},
                     {"s0", ids_json(r.strata->s0)},
                     {"s1", ids_json(r.strata->s1)},
                     {"s2", ids_json(r.strata->s2)},
                     {"nested", r.strata->nested},
                     {"heights", r.strata->heights},
                     {"bound", r.strata->bound},
                     {"height_bound_ok", r.strata->height_bound_ok},
                     {"witness", r.strata->witness}};
    }
    if (r.euler) {
      j["euler"] = {{"index_sum_doubled", r.euler->index_sum_doubled},
                    {"declared", r.euler->declared_euler_characteristic},
                    {"matches", r.euler->matches},
                    {"index_convention", r.euler->index_convention}};
      if (r.euler->index_sum) j["euler"]["index_sum"] = *r.euler->index_sum;
    }
    ctx.out << j.dump(2) << "\n";
    return negative ? kNegative : kOk;
  }

  ctx.out << "finite type: " << yes_no(r.classification.is_finite_type) << "\n";
  for (const auto& reason : r.classification.reasons) ctx.out << "  " << reason << "\n";
  for (const auto& [label, type] : r.classification.awo_types)
    ctx.out << "  " << label << ": (" << static_cast<int>(type) << ") " << to_string(type) << "\n";
  ctx.out << "D(v): " << braces(r.msc) << "\n" << r.convention << "\n";
  if (r.strata) {
    const auto& s = *r.strata;
    ctx.out << "class: " << to_string(s.model_class) << "\nS0: " << braces(s.s0)
            << "\nS1: " << braces(s.s1) << "\nnested: " << yes_no(s.nested) << "\nheights:";
    for (const auto& [label, h] : s.heights) ctx.out << " " << label << "=" << h;
    ctx.out << "\nheight bound " << s.bound << ": " << (s.height_bound_ok ? "ok" : "VIOLATED") << "\n";
    if (!s.witness.empty()) {
      ctx.out << "witness chain:";
      for (const auto& w : s.witness) ctx.out << " " << w;
      ctx.out << "\n";
    }
  }
  if (r.euler) {
    ctx.out << "index sum: ";
    if (r.euler->index_sum) ctx.out << *r.euler->index_sum;
    else ctx.out << r.euler->index_sum_doubled << "/2";
    ctx.out << ", declared chi: " << r.euler->declared_euler_characteristic << " -> "
            << (r.euler->matches ? "matches" : "MISMATCH") << "\n"
            << "index convention: " << r.euler->index_convention << "\n";
  }
  return negative ? kNegative : kOk;
}

int cmd_suspend(Context& ctx, const std::string& ref) {
  require_format(ctx, {Format::Text, Format::Json}, "suspend");
  ctx.out << model_to_json(suspend(load_map(ref))) << "\n";
  return kOk;
}

int cmd_time_one(Context& ctx, const std::string& ref, const std::vector<std::string>& periods,
                 const std::string& all, bool ham) {
  require_format(ctx, {Format::Text, Format::Json}, "time-one");
  const auto m = checked(ref);
  auto annotations = annotations_from_model(m.model());
  if (!all.empty()) {
    const auto p = period_arg(all);
    for (auto i : m.nodes_of_kind(OrbitKind::Periodic).members()) annotations[m.id(i)] = p;
  }
  for (const auto& entry : periods) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos) throw UsageError("--period expects id=TYPE");
    annotations[entry.substr(0, eq)] = period_arg(entry.substr(eq + 1));
  }

  if (ham) {
    const auto r = ham_reconstruction_check(m, annotations);
    if (ctx.format == Format::Json) {
      ctx.out << Json{{"verdict", r.verdict}, {"resolution", r.resolution}}.dump(2) << "\n";
    } else {
      ctx.out << "reconstruction: " << (r.verdict ? "orbit-space-equivalent" : "not equivalent") << "\n";
      for (const auto& [id, text] : r.resolution) ctx.out << "  " << id << ": " << text << "\n";
    }
    return r.verdict ? kOk : kNegative;
  }

  const auto r = time_one_awo_space(m, annotations);
  if (ctx.format == Format::Json) {
    Json j{{"level1_blocks", r.level1.size()},
           {"split_blocks", r.split_blocks},
           {"level2_blocks", r.level2.size()},
           {"level1_equal", r.level1_equal},
           {"level2_equal", r.level2_equal}};
    ctx.out << j.dump(2) << "\n";
  } else {
    ctx.out << "level 1: " << r.level1.size() << " blocks";
    if (!r.split_blocks.empty()) {
      ctx.out << ", strictly finer on:";
      for (const auto& b : r.split_blocks) ctx.out << " " << b;
    }
    ctx.out << "\nlevel 1 equals flow AWO: " << yes_no(r.level1_equal)
            << "\nlevel 2 equals flow AWO: " << yes_no(r.level2_equal) << "\n";
  }
  return r.level2_equal ? kOk : kNegative;
}

int cmd_compare(Context& ctx, const std::string& a_ref, const std::string& b_ref,
                const std::string& level, const std::string& relation, bool witness,
                std::size_t budget) {
  require_format(ctx, {Format::Text, Format::Json}, "compare");
  const auto a = checked(a_ref);
  const auto b = checked(b_ref);
  const auto lvl = level_arg(level);
  const auto rel = relation_arg(relation);
  const auto pa = labeled_quotient(a, lvl, rel);
  const auto pb = labeled_quotient(b, lvl, rel);
  const auto r = are_isomorphic(pa, pb, budget);
  if (r.verdict == IsoVerdict::BudgetExceeded) {
    ctx.err << "search budget exhausted after " << r.steps << " steps\n";
    return kUsage;
  }
  const bool iso = r.verdict == IsoVerdict::Isomorphic;
  if (ctx.format == Format::Json) {
    Json j{{"isomorphic", iso}, {"level", level}, {"relation", relation}, {"reason", r.reason}};
    if (iso && witness) {
      Json w = Json::object();
      for (std::size_t i = 0; i < pa.size(); ++i) w[pa.elements[i]] = pb.elements[(*r.witness)[i]];
      j["witness"] = w;
    }
    ctx.out << j.dump(2) << "\n";
  } else {
    ctx.out << (iso ? "isomorphic" : "not isomorphic");
    if (!iso && !r.reason.empty()) ctx.out << ": " << r.reason;
    ctx.out << "\n";
    if (iso && witness)
      for (std::size_t i = 0; i < pa.size(); ++i)
        ctx.out << "  " << pa.elements[i] << " -> " << pb.elements[(*r.witness)[i]] << "\n";
  }
  return iso ? kOk : kNegative;
}

int cmd_export_dot(Context& ctx, const std::string& ref, const std::string& what,
                   const std::string& level, const std::string& name) {
  const auto m = checked(ref);
  if (what == "relation") {
    ctx.out << relation_to_dot(compute_relation(m, relation_arg(name), level_arg(level)));
  } else if (what == "quotient") {
    const auto l = level_arg(level);
    ctx.out << quotient_to_dot(l == QuotientLevel::Morse ? morse_quotient(m) : quotient_at_level(m, l));
  } else if (what == "morse") {
    ctx.out << morse_graph_to_dot(morse_graph(m));
  } else if (what == "reeb") {
    ctx.out << reeb_graph_to_dot(reeb_abstract_graph(m));
  } else {
    throw UsageError("--what must be relation, quotient, morse or reeb");
  }
  return kOk;
}

int cmd_corpus(Context& ctx, const std::string& id, bool maps, bool random) {
  require_format(ctx, {Format::Text, Format::Json}, "corpus");
  if (random) {
    std::mt19937_64 rng(ctx.seed);
    ctx.out << model_to_json(random_model(rng)) << "\n";
    return kOk;
  }
  if (id.empty()) {
    const auto ids = maps ? map_corpus_ids() : corpus_ids();
    if (ctx.format == Format::Json) ctx.out << Json(ids).dump(2) << "\n";
    else
      for (const auto& i : ids) ctx.out << i << "\n";
    return kOk;
  }
  if (auto m = corpus_model(id)) {
    ctx.out << model_to_json(*m) << "\n";
    return kOk;
  }
  if (auto m = map_corpus_model(id)) {
    ctx.out << map_model_to_json(*m) << "\n";
    return kOk;
  }
  throw UsageError("unknown corpus model '" + id + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite models of flows: orbit spaces, relations, Morse and Reeb graphs"};
  app.name("orbitspace");
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx{out, err};
  std::string format = "text";
  app.add_option("--out", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--seed", ctx.seed, "Seed for random model generation");

  std::string model, model_b, node, name = "partial", level = "awo", what, all, map_id;
  std::vector<std::string> periods;
  bool check = false, chain = false, verify = false, reeb = false, ham = false, witness = false;
  bool maps = false, random = false;
  int k = 1;
  std::size_t budget = 5'000'000;
  GridArgs grid;

  auto* validate = app.add_subcommand("validate", "Check the model axioms");
  validate->add_option("model", model, "Model file or corpus:<id>")->required();

  auto* partition = app.add_subcommand("partition", "Sing/Per/P/R partition");
  partition->add_option("model", model)->required();
  partition->add_option("--node", node, "Also print the boundary decomposition of a node");

  auto* relations = app.add_subcommand("relations", "Binary relations on a quotient");
  relations->add_option("model", model)->required();
  relations->add_option("--name", name, "v|alpha|omega|perp|pitchfork|partial");
  relations->add_option("--level", level, "orbit|class|awo|ao|extended");
  relations->add_flag("--check", check, "Check preorder and partial-order properties");

  auto* quotient = app.add_subcommand("quotient", "Quotient space at a level");
  quotient->add_option("model", model)->required();
  quotient->add_option("--level", level,
                       "orbit|weak-class|class|awo|ao|awo-k|ao-k|extended|morse");
  quotient->add_option("--k", k, "Refinement index for awo-k/ao-k");
  quotient->add_flag("--chain", chain, "Verify the refinement chain instead");

  auto* morse = app.add_subcommand("morse", "Combinatorial Morse graph");
  morse->add_option("model", model)->required();
  morse->add_flag("--verify", verify, "Verify the Morse quotient against the AO space");

  auto* morse_grid = app.add_subcommand("morse-grid", "Morse graph of a planar ODE on a box grid");
  morse_grid->add_option("--field", grid.field, "Built-in name or 'dx ; dy' expression")->required();
  morse_grid->add_option("--domain", grid.domain, "x0,x1,y0,y1");
  morse_grid->add_option("--res", grid.res, "nx,ny");
  morse_grid->add_option("--time", grid.time, "Flow time T");
  morse_grid->add_option("--eps", grid.eps, "Inflation radius (default one box diagonal)");
  morse_grid->add_option("--step", grid.step, "RK4 step (default T/64)");
  morse_grid->add_flag("--check", grid.check, "Cross-check against the built-in reference");

  auto* surface = app.add_subcommand("surface", "Surface-flow classification and invariants");
  surface->add_option("model", model)->required();
  surface->add_flag("--reeb", reeb, "Print the Reeb abstract graph");

  auto* suspend_cmd = app.add_subcommand("suspend", "Suspension flow of a map model");
  suspend_cmd->add_option("map", map_id, "Map model file or corpus:<id>")->required();

  auto* time_one = app.add_subcommand("time-one", "Time-one abstract weak orbit spaces");
  time_one->add_option("model", model)->required();
  time_one->add_option("--period", periods, "Annotation id=RATIONAL|IRRATIONAL|MIXED_DENSE");
  time_one->add_option("--all", all, "Annotate every periodic node");
  time_one->add_flag("--ham", ham, "Hamiltonian reconstruction check");

  auto* compare = app.add_subcommand("compare", "Isomorphism of two quotient spaces");
  compare->add_option("a", model)->required();
  compare->add_option("b", model_b)->required();
  compare->add_option("--level", level, "awo|ao|extended");
  compare->add_option("--relation", name, "partial|v");
  compare->add_flag("--witness", witness, "Print the isomorphism");
  compare->add_option("--budget", budget, "Search step budget");

  auto* export_dot = app.add_subcommand("export-dot", "DOT export");
  export_dot->add_option("model", model)->required();
  export_dot->add_option("--what", what, "relation|quotient|morse|reeb")->required();
  export_dot->add_option("--level", level);
  export_dot->add_option("--name", name);

  auto* corpus = app.add_subcommand("corpus", "List or print bundled models");
  corpus->add_option("id", map_id, "Model id");
  corpus->add_flag("--maps", maps, "List map models instead");
  corpus->add_flag("--random", random, "Print one random model drawn with --seed");

  std::vector<const char*> argv{"orbitspace"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  ctx.format = format == "json" ? Format::Json : format == "dot" ? Format::Dot : Format::Text;
  if (export_dot->parsed()) ctx.format = Format::Dot;

  try {
    if (validate->parsed()) return cmd_validate(ctx, model);
    if (partition->parsed()) return cmd_partition(ctx, model, node);
    if (relations->parsed()) return cmd_relations(ctx, model, name, level, check);
    if (quotient->parsed()) return cmd_quotient(ctx, model, level, k, chain);
    if (morse->parsed()) return cmd_morse(ctx, model, verify);
    if (morse_grid->parsed()) return cmd_morse_grid(ctx, grid);
    if (surface->parsed()) return cmd_surface(ctx, model, reeb);
    if (suspend_cmd->parsed()) return cmd_suspend(ctx, map_id);
    if (time_one->parsed()) return cmd_time_one(ctx, model, periods, all, ham);
    if (compare->parsed()) return cmd_compare(ctx, model, model_b, level, name, witness, budget);
    if (export_dot->parsed()) return cmd_export_dot(ctx, model, what, level, name);
    if (corpus->parsed()) return cmd_corpus(ctx, map_id, maps, random);
  } catch (const InvalidModel& e) {
    err << "error: " << e.what();
    return kInvalidModel;
  } catch (const ModelInconsistency& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidModel;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace orbitspace::cli
