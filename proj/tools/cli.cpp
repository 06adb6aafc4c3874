#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <algorithm>
#include <iostream>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>

#include "criteria.hpp"
#include "signhom/campaign.hpp"
#include "signhom/homsearch.hpp"
#include "signhom/io.hpp"
#include "signhom/iso.hpp"
#include "signhom/props.hpp"
#include "signhom/targets.hpp"
#include "signhom/witnesses.hpp"

namespace signhom::cli {

namespace {

constexpr std::uint64_t default_seed = 20240601;

int default_jobs() {
  if (const char* env = std::getenv("SIGNHOM_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j > 0) return j;
    } catch (const std::exception&) {
    }
  }
  return omp_get_max_threads();
}

bool is_witness(const std::string& name) {
  const auto& names = witness_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

LabelledTarget named_graph(const std::string& name) {
  if (is_witness(name)) return plain_target(build_witness(name));
  return build_named_target(name);
}

VariableOrder parse_order(const std::string& s) {
  if (s == "degeneracy") return VariableOrder::degeneracy;
  if (s == "max-constrained") return VariableOrder::max_constrained;
  if (s == "natural") return VariableOrder::natural;
  throw CLI::ValidationError("--order", "expected degeneracy, max-constrained or natural");
}

Status from_search(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return Status::ok;
    case SearchStatus::absent: return Status::property_failed;
    case SearchStatus::indeterminate: return Status::indeterminate;
  }
  return Status::error;
}

Status from_stage(StageStatus s) {
  switch (s) {
    case StageStatus::pass: return Status::ok;
    case StageStatus::fail: return Status::property_failed;
    case StageStatus::indeterminate: return Status::indeterminate;
  }
  return Status::error;
}

// Worst status wins: error > property_failed > indeterminate > ok.
Status combine(Status a, Status b) {
  auto rank = [](Status s) {
    switch (s) {
      case Status::ok: return 0;
      case Status::indeterminate: return 1;
      case Status::property_failed: return 2;
      case Status::error: return 3;
    }
    return 3;
  };
  return rank(a) >= rank(b) ? a : b;
}

struct SearchFlags {
  std::uint64_t node_limit = 0;
  std::int64_t time_limit_ms = 0;
  std::string order = "degeneracy";
  bool no_symmetry = false;

  void add(CLI::App* app) {
    app->add_option("--node-limit", node_limit, "assignments per search, 0 = unlimited");
    app->add_option("--time-limit-ms", time_limit_ms, "wall-clock budget, 0 = unlimited");
    app->add_option("--order", order, "degeneracy | max-constrained | natural");
    app->add_flag("--no-symmetry", no_symmetry, "disable target symmetry pinning");
  }
  SearchConfig config() const {
    SearchConfig c;
    c.node_limit = node_limit;
    c.time_limit = std::chrono::milliseconds(time_limit_ms);
    c.order = parse_order(order);
    c.symmetry = !no_symmetry;
    return c;
  }
};

nlohmann::json chromatic_json(const ChromaticResult& r, bool with_resign) {
  nlohmann::json j{{"status", to_string(r.status)},
                   {"value", r.value},
                   {"exhausted", r.exhausted},
                   {"lower_bound", r.lower_bound},
                   {"colouring", r.witness_map},
                   {"target", graph_to_json(r.witness_target)},
                   {"nodes", r.nodes}};
  if (with_resign) j["resign_set"] = r.resign_set;
  return j;
}

struct PropertyCheck {
  int n = 0;
  int k = 0;
};

PropertyCheck parse_check(const std::string& s) {
  // P:n:k
  PropertyCheck c;
  char p = 0, c1 = 0, c2 = 0;
  std::istringstream in(s);
  if (!(in >> p >> c1 >> c.n >> c2 >> c.k) || p != 'P' || c1 != ':' || c2 != ':' || in.peek() != EOF)
    throw CLI::ValidationError("--check", "expected P:n:k, got " + s);
  return c;
}

nlohmann::json property_json(const PropertyReport& r, const LabelledTarget& t) {
  nlohmann::json j{{"n", r.n}, {"k", r.k}, {"holds", r.holds}, {"sequences", r.sequences}};
  j["min_successors"] = r.min_successors ? nlohmann::json(*r.min_successors) : nlohmann::json(nullptr);
  if (r.witness) {
    nlohmann::json clique = nlohmann::json::array();
    for (Vertex v : r.witness->clique) clique.push_back(t.labels[v].text);
    j["witness"] = {{"clique", clique}, {"alpha", r.witness->alpha.str()}, {"successors", r.witness->successors}};
  }
  return j;
}

nlohmann::json table1_json(const std::vector<Table1Row>& rows) {
  nlohmann::json out = nlohmann::json::array();
  const auto& golden = table1_golden();
  for (std::size_t i = 0; i < rows.size(); ++i)
    out.push_back({{"row", rows[i].text}, {"matches", i < golden.size() && golden[i] == rows[i].text}});
  return out;
}

// Text diff of the scan against the embedded rows; empty when equal.
std::string table1_diff(const std::vector<Table1Row>& rows) {
  const auto& golden = table1_golden();
  std::ostringstream d;
  for (std::size_t i = 0; i < std::max(rows.size(), golden.size()); ++i) {
    const std::string got = i < rows.size() ? rows[i].text : "";
    const std::string want = i < golden.size() ? golden[i] : "";
    if (got != want) d << "- " << want << "\n+ " << got << "\n";
  }
  return d.str();
}

// Display width in code points; the labels contain multi-byte "√".
std::size_t display_width(const std::string& s) {
  return std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; });
}

void print_table1(std::ostream& out, const std::vector<Table1Row>& rows) {
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, display_width(r.text.substr(0, r.text.find(") ") + 1)));
  for (const auto& r : rows) {
    const auto cut = r.text.find(") ") + 1;
    const std::string head = r.text.substr(0, cut);
    out << head << std::string(width - display_width(head) + 2, ' ') << r.text.substr(cut + 1) << "\n";
  }
}

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

}  // namespace

CommandResult dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signed and signified graph homomorphism toolkit"};
  app.require_subcommand(1);
  int jobs = default_jobs();
  std::uint64_t seed = default_seed;
  bool json = false;
  app.add_option("--jobs", jobs, "worker threads (default: $SIGNHOM_JOBS or all cores)")->check(CLI::PositiveNumber);
  // Subcommand callbacks run after the whole command line is parsed.
  auto apply_jobs = [&] { omp_set_num_threads(jobs); };
  app.add_option("--seed", seed, "seed for randomized steps");
  app.add_flag("--json", json, "JSON instead of text where both exist");

  CommandResult result;

  // build
  std::string build_name, build_format = "json";
  auto* build = app.add_subcommand("build", "emit a named target or witness graph");
  build->add_option("name", build_name, "k4star, at-k4star, zs-K, sp-Q, sp-Q-plus, at-sp-Q, tromp-Q, G1..G5prime")
      ->required();
  build->add_option("--format", build_format)->check(CLI::IsMember({"json", "dot"}));
  build->callback([&] {
    apply_jobs();
    const LabelledTarget t = named_graph(build_name);
    if (build_format == "dot") {
      out << graph_to_dot(t.graph, t.label_texts(), build_name);
      result.payload = {{"format", "dot"}};
    } else {
      result.payload = graph_to_json(t.graph);
      emit(out, result.payload);
    }
  });

  // check-hom
  std::string hom_graph, hom_target, hom_target_file;
  bool hom_signed = false;
  SearchFlags hom_flags;
  auto* hom = app.add_subcommand("check-hom", "search a homomorphism G -> H");
  hom->add_option("graph", hom_graph, "source graph (JSON file)")->required()->check(CLI::ExistingFile);
  auto* tname = hom->add_option("--target", hom_target, "named target");
  auto* tfile = hom->add_option("--target-file", hom_target_file, "target graph (JSON file)")->check(CLI::ExistingFile);
  tname->excludes(tfile);
  hom->add_flag("--signed", hom_signed, "allow resigning the source");
  hom_flags.add(hom);
  hom->callback([&] {
    apply_jobs();
    if (hom_target.empty() && hom_target_file.empty()) throw CLI::RequiredError("--target or --target-file");
    const SignifiedGraph g = read_graph_file(hom_graph);
    const LabelledTarget h = hom_target.empty() ? plain_target(read_graph_file(hom_target_file)) : named_graph(hom_target);
    const SearchConfig cfg = hom_flags.config();
    if (hom_signed) {
      const auto r = find_signed_hom(g, h.graph, cfg);
      result.status = from_search(r.status);
      result.payload = {{"status", to_string(r.status)}, {"map", r.map}, {"resign_set", r.resign_set}, {"nodes", r.nodes}};
    } else {
      const auto r = find_signified_hom(g, h, cfg);
      result.status = from_search(r.status);
      result.payload = {{"status", to_string(r.status)}, {"map", r.map}, {"nodes", r.nodes}};
    }
    emit(out, result.payload);
  });

  // chi2 / chis
  std::string chi_graph;
  SearchFlags chi_flags;
  auto* chi2 = app.add_subcommand("chi2", "exact signified chromatic number");
  auto* chis = app.add_subcommand("chis", "exact signed chromatic number");
  for (auto* sub : {chi2, chis}) {
    sub->add_option("graph", chi_graph, "graph (JSON file)")->required()->check(CLI::ExistingFile);
    sub->add_option("--time-limit-ms", chi_flags.time_limit_ms, "wall-clock budget, 0 = unlimited");
    sub->add_option("--node-limit", chi_flags.node_limit, "assignments per search, 0 = unlimited");
    sub->add_option("--order", chi_flags.order, "degeneracy | max-constrained | natural");
  }
  auto chromatic = [&](bool signed_version) {
    const SignifiedGraph g = read_graph_file(chi_graph);
    const SearchConfig cfg = chi_flags.config();
    const auto r = signed_version ? chis_exact(g, cfg) : chi2_exact(g, cfg);
    result.status = r.exhausted ? Status::ok : Status::indeterminate;
    result.payload = chromatic_json(r, signed_version);
    emit(out, result.payload);
  };
  chi2->callback([&] {
    apply_jobs();
    chromatic(false);
  });
  chis->callback([&] {
    apply_jobs();
    chromatic(true);
  });

  // props
  std::string props_target;
  std::vector<std::string> props_checks;
  bool props_serial = false, props_table1 = false, props_orbits = false;
  auto* props = app.add_subcommand("props", "check P(n,k) and related properties of a target");
  props->add_option("--target", props_target, "named target")->required();
  props->add_option("--check", props_checks, "P:n:k, repeatable");
  props->add_flag("--serial", props_serial, "use the serial reference enumeration");
  props->add_flag("--table1", props_table1, "append the AT(SP25) four-successor table");
  props->add_flag("--orbits", props_orbits, "orbits under the built-in generators (tromp-Q, sp-Q)");
  props->callback([&] {
    apply_jobs();
    const LabelledTarget t = named_graph(props_target);
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& spec : props_checks) {
      const auto c = parse_check(spec);
      const auto r = check_property(t.graph, c.n, c.k, props_serial ? Exec::serial : Exec::parallel);
      if (!r.holds) result.status = Status::property_failed;
      reports.push_back(property_json(r, t));
    }
    result.payload = {{"target", props_target}, {"order", t.graph.order()}, {"reports", reports}};
    if (props_orbits) {
      if (!t.field) throw std::invalid_argument("--orbits needs a tromp-Q or sp-Q target");
      const int q = t.field->order();
      const auto gens = t.graph.order() == 2 * q + 2 ? tromp_generators(q) : sp_generators(q);
      const auto o = orbit_closure(t.graph, gens);
      nlohmann::json tri = nlohmann::json::array();
      for (const auto& orb : o.triangle_orbits) {
        nlohmann::json pats = nlohmann::json::array();
        for (const auto& p : orb.patterns) pats.push_back({to_int(p[0]), to_int(p[1]), to_int(p[2])});
        tri.push_back({{"size", orb.size}, {"patterns", pats}});
      }
      result.payload["orbits"] = {{"vertex_orbits", o.vertex_orbits.size()},
                                  {"edge_orbits", o.edge_orbits.size()},
                                  {"triangle_orbits", tri}};
    }
    std::vector<Table1Row> rows;
    if (props_table1) {
      rows = table1_scan();
      result.payload["table1"] = table1_json(rows);
      if (!table1_diff(rows).empty()) result.status = Status::property_failed;
    }
    if (json) {
      emit(out, result.payload);
      return;
    }
    out << props_target << " (" << t.graph.order() << " vertices)\n";
    for (const auto& r : reports) {
      out << "  P(" << r["n"].get<int>() << "," << r["k"].get<int>() << ")  " << (r["holds"].get<bool>() ? "holds " : "FAILS ")
          << "  min successors " << (r["min_successors"].is_null() ? std::string("-") : r["min_successors"].dump());
      if (r.contains("witness")) out << "  witness " << r["witness"]["clique"].dump() << " " << r["witness"]["alpha"].get<std::string>();
      out << "\n";
    }
    if (result.payload.contains("orbits")) out << "  orbits " << result.payload["orbits"].dump() << "\n";
    if (props_table1) print_table1(out, rows);
  });

  // table1
  auto* table1 = app.add_subcommand("table1", "rebuild the AT(SP25) four-successor table and diff it against the embedded copy");
  table1->callback([&] {
    apply_jobs();
    const auto rows = table1_scan();
    const std::string diff = table1_diff(rows);
    result.status = diff.empty() ? Status::ok : Status::property_failed;
    result.payload = {{"rows", table1_json(rows)}, {"matches_golden", diff.empty()}};
    if (json) {
      emit(out, result.payload);
      return;
    }
    print_table1(out, rows);
    out << (diff.empty() ? "matches embedded table\n" : "differs from embedded table:\n" + diff);
  });

  // witnesses
  std::string emit_name, emit_format = "json";
  std::int64_t witness_budget_ms = 600000;
  bool raw_g4 = false;
  auto* wit = app.add_subcommand("witnesses", "run the witness certificate chain");
  wit->add_option("--emit", emit_name, "write one witness graph instead")->check(CLI::IsMember(witness_names()));
  wit->add_option("--format", emit_format)->check(CLI::IsMember({"json", "dot"}));
  wit->add_option("--budget-ms", witness_budget_ms, "budget per exact chromatic computation");
  wit->add_flag("--raw-g4", raw_g4, "also refute 18-colourings of G4 by search");
  wit->callback([&] {
    apply_jobs();
    if (!emit_name.empty()) {
      const SignifiedGraph g = build_witness(emit_name);
      if (emit_format == "dot") {
        out << graph_to_dot(g, {}, emit_name);
        result.payload = {{"format", "dot"}};
      } else {
        result.payload = graph_to_json(g);
        emit(out, result.payload);
      }
      return;
    }
    ChainOptions opt;
    opt.budget = std::chrono::milliseconds(witness_budget_ms);
    opt.raw_g4_refutation = raw_g4;
    nlohmann::json stages = nlohmann::json::array();
    auto add_chain = [&](const ChainReport& rep) {
      for (const auto& s : rep.stages) {
        stages.push_back({{"stage", s.name}, {"status", to_string(s.status)}, {"certificate", s.certificate}});
        result.status = combine(result.status, from_stage(s.status));
      }
    };
    add_chain(verify_g_chain(opt));
    add_chain(verify_g4prime(opt));
    {
      const auto cat = enumerate_4regular_9();
      const auto kept = matching_filter(cat);
      const bool iso = kept.size() == 1 && signified_iso(kept[0], build_sp(9).graph).has_value();
      const bool ok = cat.size() == 16 && iso;
      stages.push_back({{"stage", "4-regular catalogue on 9 vertices"},
                        {"status", ok ? "pass" : "fail"},
                        {"certificate", {{"graphs", cat.size()}, {"survivors", kept.size()}, {"survivor_is_sp9", iso}}}});
      if (!ok) result.status = combine(result.status, Status::property_failed);
    }
    {
      const auto r = verify_plus_shape();
      stages.push_back({{"stage", "SP9+ shape"},
                        {"status", r.passed() ? "pass" : "fail"},
                        {"certificate",
                         {{"clique", r.clique},
                          {"no_anti_twins", r.no_anti_twins},
                          {"at_isomorphic_to_tromp", r.at_isomorphic_to_tromp},
                          {"isomorphism", r.isomorphism}}}});
      if (!r.passed()) result.status = combine(result.status, Status::property_failed);
    }
    result.payload = {{"stages", stages}};
    emit(out, result.payload);
  });

  // campaign
  std::string camp_input, camp_target = "tromp9", camp_checkpoint;
  std::uint64_t camp_every = 4096, camp_stop = 0;
  int camp_samples = 16;
  bool camp_serial = false;
  SearchFlags camp_flags;
  camp_flags.order = "max-constrained";
  auto* camp = app.add_subcommand("campaign", "check every signature class of every input graph");
  camp->add_option("--input", camp_input, "planar_code file")->required();
  camp->add_option("--target", camp_target, "named target");
  camp->add_option("--checkpoint", camp_checkpoint, "checkpoint file (read if present, rewritten each round)");
  camp->add_option("--checkpoint-every", camp_every, "classes per round")->check(CLI::PositiveNumber);
  camp->add_option("--stop-after", camp_stop, "stop after this many classes (0 = run to completion)");
  camp->add_option("--samples", camp_samples, "resigned representatives re-solved per graph");
  camp->add_flag("--serial", camp_serial, "serial reference path");
  camp_flags.add(camp);
  camp->callback([&] {
    apply_jobs();
    std::ifstream in(camp_input, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + camp_input);
    const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CampaignConfig cfg;
    cfg.search = camp_flags.config();
    cfg.checkpoint_every = camp_every;
    if (!camp_checkpoint.empty()) cfg.checkpoint_path = camp_checkpoint;
    if (camp_stop) cfg.stop_after = camp_stop;
    cfg.consistency_samples = camp_samples;
    cfg.seed = seed;
    cfg.exec = camp_serial ? Exec::serial : Exec::parallel;
    nlohmann::json lines = nlohmann::json::array();
    run_campaign(bytes, named_graph(camp_target), cfg, [&](const CampaignReport& r) {
      auto j = report_to_json(r);
      out << j.dump() << std::endl;
      lines.push_back(j);
      if (!r.error.empty())
        result.status = combine(result.status, Status::error);
      else if (!r.failures.empty() || r.consistency_mismatches)
        result.status = combine(result.status, Status::property_failed);
      else if (!r.complete() || !r.undecided.empty())
        result.status = combine(result.status, Status::indeterminate);
    });
    result.payload = lines;
  });

  // selftest
  std::vector<int> self_only;
  std::string self_fixtures = SIGNHOM_FIXTURES_DIR;
  auto* self = app.add_subcommand("selftest", "run the acceptance suite");
  self->add_option("--only", self_only, "criterion ids");
  self->add_option("--fixtures", self_fixtures, "directory with the planar_code fixtures");
  self->callback([&] {
    apply_jobs();
    acceptance::Options opt;
    opt.seed = seed;
    opt.only.insert(self_only.begin(), self_only.end());
    opt.fixtures = self_fixtures;
    nlohmann::json list = nlohmann::json::array();
    acceptance::run(opt, [&](const acceptance::Criterion& c) {
      if (!json) out << acceptance::format_line(c) << std::endl;
      list.push_back({{"id", c.id},
                      {"title", c.title},
                      {"passed", c.passed()},
                      {"detail", c.detail},
                      {"seconds", c.seconds},
                      {"budget_seconds", c.budget_seconds}});
      if (!c.passed()) result.status = Status::property_failed;
    });
    result.payload = {{"criteria", list}};
    if (json) emit(out, result.payload);
  });

  std::vector<const char*> args;
  for (const auto& a : argv) args.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(args.size()), args.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return {Status::ok, {}};
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return {Status::ok, {}};
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return {Status::error, {{"error", e.what()}}};
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return {Status::error, {{"error", e.what()}}};
  }
  return result;
}

}  // namespace signhom::cli
