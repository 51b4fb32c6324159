#include "qwlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qwlab/axioms.hpp"
#include "qwlab/center.hpp"
#include "qwlab/classify.hpp"
#include "qwlab/effect.hpp"
#include "qwlab/error.hpp"
#include "qwlab/fixtures.hpp"
#include "qwlab/io.hpp"
#include "qwlab/search.hpp"
#include "qwlab/terms.hpp"

namespace qwlab {

namespace {

using Json = nlohmann::ordered_json;

struct Outcome {
  std::string id;
  Status status = Status::Pass;
  std::optional<std::vector<std::string>> witness;
  std::vector<std::string> variables;  // names for the witness positions, if any
  std::string detail;
};

// One report feeds both renderers, so text and JSON list the same outcomes.
struct Report {
  Report() = default;
  Report(std::string cmd, std::optional<std::string> file)
      : command(std::move(cmd)), model(std::move(file)) {}

  std::string command;
  std::optional<std::string> model;
  std::vector<Outcome> outcomes;
  Json counts = Json::object();
  Json extra = Json::object();      // JSON-only structured payload
  std::vector<std::string> notes;   // text-only lines printed before outcomes
  std::optional<std::string> raw;   // replaces the text rendering entirely

  void add(Outcome o) { outcomes.push_back(std::move(o)); }

  bool all_passed() const {
    for (const auto& o : outcomes) {
      if (o.status != Status::Pass) return false;
    }
    return true;
  }

  void tally() {
    int pass = 0, fail = 0, prereq = 0;
    for (const auto& o : outcomes) {
      (o.status == Status::Pass ? pass : o.status == Status::Fail ? fail : prereq)++;
    }
    counts["pass"] = pass;
    counts["fail"] = fail;
    counts["prereq_failed"] = prereq;
  }
};

std::vector<std::string> named(const std::vector<std::string>& names,
                               const std::vector<Elem>& elems) {
  std::vector<std::string> out;
  for (Elem e : elems) out.push_back(names[static_cast<std::size_t>(e)]);
  return out;
}

std::string tuple(const std::vector<std::string>& items) {
  std::string s = "(";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
  return s + ")";
}

void print_text(const Report& r, std::ostream& out) {
  if (r.raw) {
    out << *r.raw;
    return;
  }
  out << r.command;
  if (r.model) out << ": " << *r.model;
  out << '\n';
  for (const auto& n : r.notes) out << "  " << n << '\n';
  std::size_t width = 0;
  for (const auto& o : r.outcomes) width = std::max(width, o.id.size());
  for (const auto& o : r.outcomes) {
    std::string status(to_string(o.status));
    status.resize(14, ' ');
    std::string id = o.id;
    id.resize(width, ' ');
    std::string line = "  " + status + id;
    if (!o.detail.empty()) line += "  " + o.detail;
    if (o.witness) {
      line += "  witness ";
      if (!o.variables.empty()) line += tuple(o.variables) + " = ";
      line += tuple(*o.witness);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  if (!r.counts.empty()) {
    out << "counts:";
    for (const auto& [k, v] : r.counts.items()) out << ' ' << k << '=' << v.dump();
    out << '\n';
  }
}

void print_json(const Report& r, std::ostream& out) {
  Json j;
  j["command"] = r.command;
  j["model"] = r.model ? Json(*r.model) : Json(nullptr);
  Json outcomes = Json::array();
  for (const auto& o : r.outcomes) {
    Json e;
    e["id"] = o.id;
    e["status"] = std::string(to_string(o.status));
    e["witness"] = o.witness ? Json(*o.witness) : Json(nullptr);
    if (!o.variables.empty()) e["variables"] = o.variables;
    if (!o.detail.empty()) e["detail"] = o.detail;
    outcomes.push_back(std::move(e));
  }
  j["outcomes"] = std::move(outcomes);
  j["counts"] = r.counts;
  for (const auto& [k, v] : r.extra.items()) j[k] = v;
  out << j.dump(2) << '\n';
}

ClassId require_class(const std::string& text) {
  const auto c = parse_class_id(text);
  if (!c) throw ValidationError("unknown class id '" + text + "'");
  return *c;
}

Json algebra_json(const FiniteAlgebra& a) {
  Json rows = Json::array();
  for (Elem x = 0; x < a.size(); ++x) {
    Json row = Json::array();
    for (Elem y = 0; y < a.size(); ++y) row.push_back(a.name(a.imp(x, y)));
    rows.push_back(std::move(row));
  }
  return Json{{"elements", a.names()},
              {"unit", a.name(a.unit())},
              {"zero", a.name(a.zero())},
              {"imp", std::move(rows)}};
}

Outcome from_check(const CheckOutcome& c, const std::vector<std::string>& names) {
  Outcome o{std::string(to_string(c.axiom)), c.status, std::nullopt, {}, {}};
  if (c.witness) o.witness = named(names, *c.witness);
  if (c.prereq) o.detail = "requires " + std::string(to_string(*c.prereq));
  return o;
}

// ---------------------------------------------------------------------------

Report cmd_check(const std::string& file, const std::vector<std::string>& axioms) {
  const FiniteAlgebra a = load_algebra(file);
  std::vector<AxiomId> ids;
  for (const auto& t : axioms) {
    const auto id = parse_axiom_id(t);
    if (!id) throw ValidationError("unknown axiom id '" + t + "'");
    ids.push_back(*id);
  }
  if (ids.empty()) ids = class_axioms(ClassId::INVOLUTIVE_BE);
  const Model m(a);
  Report r{"check", file};
  for (AxiomId id : ids) r.add(from_check(check_axiom(m, id), a.names()));
  r.tally();
  return r;
}

Report cmd_classify(const std::string& file, const std::vector<std::string>& expect,
                    bool& expectation_failed) {
  const FiniteAlgebra a = load_algebra(file);
  const Model m(a);
  const ClassificationReport c = classify(m);
  Report r{"classify", file};
  for (const auto& co : c.classes) {
    Outcome o{std::string(to_string(co.cls)), co.member ? Status::Pass : Status::Fail, {}, {}, {}};
    if (co.first_failure) {
      const CheckOutcome& f = *co.first_failure;
      o.detail = "fails " + std::string(to_string(f.axiom));
      if (f.status == Status::PrereqFailed) o.detail += " (prerequisite failed)";
      if (f.witness) o.witness = named(a.names(), *f.witness);
    }
    r.add(std::move(o));
  }
  for (const auto& msg : c.inconsistencies) {
    r.add({"inclusion-order", Status::Fail, std::nullopt, {}, msg});
  }
  r.notes.push_back(std::string("leq antisymmetric: ") + (c.leq_antisymmetric ? "yes" : "no") +
                    ", implicative: " + (c.implicative ? "yes" : "no") +
                    ", commutative: " + (c.commutative ? "yes" : "no"));
  r.extra["flags"] = Json{{"leq_antisymmetric", c.leq_antisymmetric},
                          {"implicative", c.implicative},
                          {"commutative", c.commutative}};
  r.tally();
  expectation_failed = !c.inconsistencies.empty();
  for (const auto& e : expect) {
    if (!c.member(require_class(e))) expectation_failed = true;
  }
  r.extra["expected"] = expect;
  return r;
}

Report cmd_center(const std::string& file) {
  const FiniteAlgebra a = load_algebra(file);
  const Model m(a);
  const CenterResult c = center(m);
  Report r{"center", file};
  r.notes.push_back("center = {" + [&] {
    std::string s;
    for (std::size_t i = 0; i < c.center.size(); ++i) s += (i ? ", " : "") + a.name(c.center[i]);
    return s;
  }() + "}");
  r.extra["center"] = named(a.names(), c.center);
  if (c.subalgebra == Status::PrereqFailed) {
    r.add({"subalgebra", Status::PrereqFailed, std::nullopt, {}, "requires IOM"});
  } else {
    for (const auto& cl : c.closure) {
      const bool constant = cl.operation == "0" || cl.operation == "1";
      Outcome o{(constant ? "contains " : "closed under ") + cl.operation,
                cl.holds ? Status::Pass : Status::Fail, {}, {}, {}};
      if (cl.witness) o.witness = named(a.names(), *cl.witness);
      r.add(std::move(o));
    }
    if (!c.restriction) {
      r.add({"restriction", Status::Fail, std::nullopt, {}, "center not closed under ->"});
    }
    for (const auto& w : c.wajsberg) r.add(from_check(w, a.names()));
    const CommutationReport eq = check_commutation_equivalences(m);
    Outcome o{"commutation equivalence", eq.status, {}, {}, {}};
    if (!eq.violations.empty()) {
      o.witness = named(a.names(), {eq.violations.front().x, eq.violations.front().y});
    }
    r.add(std::move(o));
  }
  r.tally();
  return r;
}

Report cmd_effect(const std::string& file) {
  const FiniteAlgebra a = load_algebra(file);
  const PartialOpTable p = build_effect(Model(a));
  Report r{"effect", file};
  for (const auto& e : check_effect_axioms(p)) {
    Outcome o{std::string(to_string(e.axiom)), e.status, {}, {}, e.kind};
    if (e.witness) o.witness = named(a.names(), *e.witness);
    r.add(std::move(o));
  }
  int defined = 0;
  for (auto c : p.defined.cells()) defined += c;
  r.notes.push_back("partial sum defined on " + std::to_string(defined) + " of " +
                    std::to_string(p.size * p.size) + " pairs");
  r.tally();
  return r;
}

Report cmd_refute(const std::string& text, const std::string& cls, int max_size,
                  std::optional<std::uint64_t> node_limit) {
  const Statement s = parse_statement(text);
  const ClassId c = require_class(cls);
  if (max_size < 1) throw ValidationError("--max-size must be at least 1");
  Report r{"refute", std::nullopt};
  const auto found = find_counterexample(s, c, max_size, node_limit);
  Outcome o{render(s), Status::Pass, {}, {}, {}};
  if (found) {
    o.status = Status::Fail;
    o.variables = found->variables;
    o.witness = named(found->model.names(), found->assignment);
    o.detail = "counterexample of size " + std::to_string(found->model.size());
    std::istringstream body(render_document(document_for(found->model)));
    for (std::string line; std::getline(body, line);) {
      if (!line.empty()) r.notes.push_back(line);
    }
    r.extra["counterexample"] = algebra_json(found->model);
  } else {
    o.detail = "no counterexample in " + std::string(to_string(c)) + " up to size " +
               std::to_string(max_size);
    r.extra["counterexample"] = nullptr;
  }
  r.add(std::move(o));
  r.tally();
  return r;
}

Report cmd_enumerate(int size, const std::string& cls, bool count_only, bool no_iso,
                     std::optional<std::uint64_t> node_limit, bool json) {
  EnumerationConfig cfg{size, std::nullopt, !no_iso, node_limit};
  if (!cls.empty()) cfg.class_filter = require_class(cls);
  Report r{"enumerate", std::nullopt};
  std::size_t k = 0;
  std::ostringstream text;
  Json models = Json::array();
  enumerate_each(cfg, [&](const FiniteAlgebra& a) {
    ++k;
    if (!count_only) {
      if (json) {
        models.push_back(algebra_json(a));
      } else {
        AlgebraDocument d = document_for(a);
        d.header.push_back("# model " + std::to_string(k));
        text << (k > 1 ? "\n" : "") << render_document(d);
      }
    }
    return true;
  });
  r.counts["models"] = k;
  r.counts["size"] = size;
  if (!count_only) r.extra["models"] = std::move(models);
  r.raw = count_only ? std::to_string(k) + "\n" : text.str();
  return r;
}

Report cmd_transform(const std::string& file, const std::string& to) {
  AlgebraDocument in = load_document(file);
  AlgebraDocument outdoc;
  if (to == "mbe") {
    if (!in.algebra) throw ValidationError("input already holds a product table");
    outdoc = document_for(phi_to_mbe(*in.algebra));
  } else if (to == "be") {
    if (!in.product) throw ValidationError("input already holds an implication table");
    outdoc = document_for(psi_to_be(*in.product));
  } else {
    throw ValidationError("--to must be 'mbe' or 'be'");
  }
  outdoc.header = in.header;
  Report r{"transform", file};
  r.raw = render_document(outdoc);
  r.extra["output"] = *r.raw;
  return r;
}

Report cmd_verify(int size, const std::vector<std::string>& files) {
  if (size < 0) throw ValidationError("--size must be nonnegative");
  std::vector<Model> models;
  std::vector<std::string> labels;
  for (int n = 1; n <= size; ++n) {
    int k = 0;
    enumerate_each({n, std::nullopt, true, std::nullopt}, [&](const FiniteAlgebra& a) {
      models.emplace_back(a);
      labels.push_back("size " + std::to_string(n) + " #" + std::to_string(++k));
      return true;
    });
  }
  for (const auto& f : files) {
    models.emplace_back(load_algebra(f));
    labels.push_back(f);
  }
  const MetaTheoremReport rep = verify_meta_theorems(models);
  Report r{"verify-theorems", std::nullopt};
  for (const auto& v : rep.violations) {
    r.add({v.theorem, Status::Fail, std::nullopt, {}, labels[v.model]});
  }
  if (rep.ok()) r.add({"meta-theorems", Status::Pass, std::nullopt, {}, {}});
  r.tally();
  r.counts["models"] = rep.models_checked;
  r.counts["assertions"] = rep.assertions_checked;
  return r;
}

Report cmd_fixtures(const std::string& file, const std::string& cls) {
  const FiniteAlgebra a = load_algebra(file);
  const Model m(a);
  Report r{"fixtures", file};
  std::vector<const FixtureGroup*> groups;
  if (!cls.empty()) {
    const ClassId c = require_class(cls);
    if (!check_class(m, c).member) {
      r.add({"hypothesis", Status::PrereqFailed, std::nullopt, {},
             "model is not in " + std::string(to_string(c))});
      r.tally();
      return r;
    }
    groups = fixture_suite(c);
  } else {
    for (const auto& g : all_fixtures()) {
      if (check_class(m, g.hypothesis).member) {
        groups.push_back(&g);
      } else {
        r.notes.push_back("skipped " + g.key + " (requires " +
                          std::string(to_string(g.hypothesis)) + ")");
      }
    }
  }
  for (const FixtureGroup* g : groups) {
    for (const auto& item : g->items) {
      const StatementOutcome s = check_statement(m, item.statement);
      Outcome o{item.id, s.status, {}, {}, item.text};
      if (s.witness) {
        o.variables = s.variables;
        o.witness = named(a.names(), *s.witness);
      }
      r.add(std::move(o));
    }
  }
  r.tally();
  return r;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-model workbench for involutive BE algebras", "qwlab"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print a structured JSON report");
  app.fallthrough();

  std::string file, statement, cls, to;
  std::vector<std::string> axioms, expect, files;
  int size = 0, max_size = 0;
  bool count_only = false, no_iso = false;
  std::optional<std::uint64_t> node_limit;

  auto* check = app.add_subcommand("check", "Check axioms on an algebra");
  check->add_option("file", file, "Algebra file")->required();
  check->add_option("--axiom", axioms, "Axiom id, repeatable (default: the base axioms)");

  auto* classify_cmd = app.add_subcommand("classify", "Classify an algebra");
  classify_cmd->add_option("file", file, "Algebra file")->required();
  classify_cmd->add_option("--expect", expect, "Exit 1 unless a member of this class");

  auto* center_cmd = app.add_subcommand("center", "Commutative center");
  center_cmd->add_option("file", file, "Algebra file")->required();

  auto* effect = app.add_subcommand("effect", "Effect-algebra view and its axioms");
  effect->add_option("file", file, "Algebra file")->required();

  auto* refute = app.add_subcommand("refute", "Search for a counterexample to a statement");
  refute->add_option("statement", statement, "Identity or quasi-identity")->required();
  refute->add_option("--class", cls, "Class of candidate models")->required();
  refute->add_option("--max-size", max_size, "Largest model size to try")->required();
  refute->add_option("--node-limit", node_limit, "Search node budget per size");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate models of one size");
  enumerate_cmd->add_option("--size", size, "Carrier size")->required();
  enumerate_cmd->add_option("--class", cls, "Keep only members of this class");
  enumerate_cmd->add_flag("--count-only", count_only, "Print only the number of models");
  enumerate_cmd->add_flag("--no-iso", no_iso, "Keep isomorphic copies");
  enumerate_cmd->add_option("--node-limit", node_limit, "Search node budget");

  auto* transform = app.add_subcommand("transform", "Convert between -> and odot signatures");
  transform->add_option("file", file, "Algebra file")->required();
  transform->add_option("--to", to, "Target signature")
      ->required()
      ->check(CLI::IsMember({"mbe", "be"}));

  auto* verify = app.add_subcommand("verify-theorems", "Check inter-class theorems");
  verify->add_option("--size", size, "Enumerate all models up to this size")->required();
  verify->add_option("files", files, "Additional algebra files");

  auto* fixtures = app.add_subcommand("fixtures", "Run identity fixtures on an algebra");
  fixtures->add_option("file", file, "Algebra file")->required();
  fixtures->add_option("--class", cls, "Run the suites implied by this class");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Report report;
  bool failed = false;
  try {
    if (*check) {
      report = cmd_check(file, axioms);
    } else if (*classify_cmd) {
      report = cmd_classify(file, expect, failed);
    } else if (*center_cmd) {
      report = cmd_center(file);
    } else if (*effect) {
      report = cmd_effect(file);
    } else if (*refute) {
      report = cmd_refute(statement, cls, max_size, node_limit);
    } else if (*enumerate_cmd) {
      report = cmd_enumerate(size, cls, count_only, no_iso, node_limit, json);
    } else if (*transform) {
      report = cmd_transform(file, to);
    } else if (*verify) {
      report = cmd_verify(size, files);
    } else if (*fixtures) {
      report = cmd_fixtures(file, cls);
    }
  } catch (const BudgetExhausted& e) {
    err << "qwlab: " << e.what() << " (" << e.partial_results() << " complete results)\n";
    return kExitFailed;
  } catch (const Error& e) {
    err << "qwlab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "qwlab: " << e.what() << '\n';
    return kExitUsage;
  }

  if (json) {
    print_json(report, out);
  } else {
    print_text(report, out);
  }
  // classify reports non-membership as data; only --expect turns it into failure.
  if (report.command == "classify") return failed ? kExitFailed : kExitOk;
  return report.all_passed() ? kExitOk : kExitFailed;
}

}  // namespace qwlab
