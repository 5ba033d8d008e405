#include "stokes/cli.hpp"

#include "stokes/circle.hpp"
#include "stokes/enumerate.hpp"
#include "stokes/error.hpp"
#include "stokes/forest.hpp"
#include "stokes/io.hpp"
#include "stokes/level_datum.hpp"
#include "stokes/simplify.hpp"

#include <CLI11.hpp>

#include <functional>
#include <map>
#include <sstream>

namespace stokes::cli {

namespace {

using nlohmann::json;

const std::map<std::string, Mode> kModes{{"general", Mode::General}, {"infinity", Mode::Infinity}};
const std::map<std::string, TreeFormat> kTreeFormats{{"dot", TreeFormat::Dot}, {"json", TreeFormat::Json}};
const std::map<std::string, TableFormat> kTableFormats{
    {"markdown", TableFormat::Markdown}, {"json", TableFormat::Json}, {"csv", TableFormat::Csv}};

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string lines(const std::vector<LevelDatum>& data) {
  std::string out;
  for (const LevelDatum& d : data) out += format_datum(d) + "\n";
  return out;
}

json data_json(const std::vector<LevelDatum>& data) {
  json out = json::array();
  for (const LevelDatum& d : data) out.push_back(datum_to_json(d));
  return out;
}

Integer parse_integer(const std::string& text) {
  Rational value = parse_rational(text, true);
  if (!value.is_integer()) throw InvalidInput("expected an integer, got " + text);
  return value.num();
}

// Holds every option value; the chosen subcommand's action reads from it.
struct Options {
  bool json = false;
  std::string datum;
  std::string exponents;
  std::string mode = "general";
  bool full = false;
  bool trace = false;
  std::string s_text;
  std::string r_text;
  std::int64_t ram_bound = 1;
  int depth = 1;
  std::string tree_format = "dot";
  std::int64_t loops = 0;
  std::int64_t max_loops = 10;
  std::string table_format = "markdown";
  std::string circle;
  std::string twist_poly;
  std::string location;
};

void add_mode(CLI::App* sub, Options& o, bool required) {
  auto* opt = sub->add_option("--mode", o.mode, "general or infinity")->check(CLI::IsMember({"general", "infinity"}));
  if (required) opt->required();
}

std::string cmd_invariants(const Options& o) {
  LevelDatum d = parse_level_datum(o.datum);
  Integer b = balance(d);
  std::optional<Rational> top = max_level(d);
  CommonDenominatorForm form = common_denominator_form(d);
  if (o.json) {
    json nums = json::array();
    for (const Integer& s : form.numerators) nums.push_back(integer_to_json(s));
    json j = {{"datum", datum_to_json(d)},
              {"ram", integer_to_json(form.ram)},
              {"balance", integer_to_json(b)},
              {"loops", integer_to_json(b / 2)},
              {"maxLevel", top ? rational_to_json(*top) : json(nullptr)},
              {"numerators", nums},
              {"minimalGeneral", is_minimal(d, Mode::General)},
              {"minimalInfinity", is_minimal(d, Mode::Infinity)}};
    return j.dump() + "\n";
  }
  std::string nums;
  for (std::size_t i = 0; i < form.numerators.size(); ++i) nums += (i > 0 ? "," : "") + form.numerators[i].str();
  return "ram=" + form.ram.str() + " B=" + b.str() + " loops=" + Integer(b / 2).str() +
         " minimal(general)=" + bool_str(is_minimal(d, Mode::General)) +
         " minimal(infinity)=" + bool_str(is_minimal(d, Mode::Infinity)) + " max=" + (top ? top->str() : "none") +
         " numerators=(" + nums + ")\n";
}

std::string cmd_simplify(const Options& o) {
  LevelDatum d = parse_level_datum(o.datum);
  Mode mode = kModes.at(o.mode);
  if (o.full) {
    SimplificationTrace t = simplify_fully(d, mode);
    if (o.json) return trace_to_json(t).dump() + "\n";
    if (o.trace) return format_trace(t);
    std::string out;
    for (std::size_t i = 0; i < t.states.size(); ++i) out += (i > 0 ? " -> " : "") + format_datum(t.states[i]);
    return out + "\n";
  }
  StepResult r = step(d, mode);
  if (o.json) return json{{"datum", datum_to_json(r.datum)}, {"step", step_to_json(r.step)}}.dump() + "\n";
  if (o.trace) {
    SimplificationTrace t{mode, {d}, {}};
    if (r.step.kind != StepCase::Minimal) {
      t.states.push_back(r.datum);
      t.steps.push_back(r.step);
    }
    return format_trace(t);
  }
  return format_datum(r.datum) + "\n";
}

std::string cmd_circle_fourier(const Options& o) {
  FormalInvariants in = invariants_of(parse_circle(o.circle));
  FourierCase c = fourier_case(in);
  FormalInvariants out = fourier_shadow(in);
  if (o.json)
    return json{{"case", static_cast<int>(c)}, {"input", invariants_to_json(in)}, {"output", invariants_to_json(out)}}
               .dump() +
           "\n";
  return "case=" + std::to_string(static_cast<int>(c)) + " " + format_invariants(out) + "\n";
}

std::string circle_output(const StokesCircle& c, bool as_json) {
  return (as_json ? circle_to_json(c).dump() : format_circle(c)) + "\n";
}

}  // namespace

Result run(const std::vector<std::string>& args) {
  Result result;
  Options o;
  CLI::App app{"Level data of Stokes circles: simplification, forests and minimal data", "stokes"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "JSON output");

  std::map<CLI::App*, std::function<std::string()>> actions;

  auto* validate = app.add_subcommand("validate", "check a level datum");
  validate->add_option("datum", o.datum)->required();
  actions[validate] = [&] {
    LevelDatum d = parse_level_datum(o.datum);
    if (o.json) return json{{"valid", true}, {"datum", datum_to_json(d)}}.dump() + "\n";
    return format_datum(d) + "\n";
  };

  auto* levels = app.add_subcommand("levels", "level datum of a set of exponents");
  levels->add_option("--from-exponents", o.exponents)->required();
  actions[levels] = [&] {
    LevelDatum d = levels_from_exponents(parse_exponent_set(o.exponents));
    return o.json ? datum_to_json(d).dump() + "\n" : format_datum(d) + "\n";
  };

  auto* invariants = app.add_subcommand("invariants", "ramification, balance and minimality");
  invariants->add_option("datum", o.datum)->required();
  actions[invariants] = [&] { return cmd_invariants(o); };

  auto* simplify = app.add_subcommand("simplify", "one simplification step, or all of them");
  add_mode(simplify, o, false);
  simplify->add_flag("--full", o.full, "iterate to the fixed point");
  simplify->add_flag("--trace", o.trace, "show step details");
  simplify->add_option("datum", o.datum)->required();
  actions[simplify] = [&] { return cmd_simplify(o); };

  auto* tamable = app.add_subcommand("tamable", "whether full simplification reaches the empty datum");
  tamable->add_option("datum", o.datum)->required();
  actions[tamable] = [&] {
    LevelDatum d = parse_level_datum(o.datum);
    LevelDatum end = simplify_fully(d, Mode::General).final_state();
    if (o.json) return json{{"tamable", end.empty()}, {"final", datum_to_json(end)}}.dump() + "\n";
    return bool_str(end.empty()) + "\n";
  };

  auto* closed = app.add_subcommand("closed-form", "full simplification of {s/r} in closed form");
  closed->add_option("s", o.s_text)->required();
  closed->add_option("r", o.r_text)->required();
  actions[closed] = [&] {
    LevelDatum d = single_level_full(parse_integer(o.s_text), parse_integer(o.r_text));
    return o.json ? datum_to_json(d).dump() + "\n" : format_datum(d) + "\n";
  };

  auto* kids = app.add_subcommand("children", "preimages under one step, up to a ramification bound");
  add_mode(kids, o, true);
  kids->add_option("--ram-bound", o.ram_bound)->required();
  kids->add_option("datum", o.datum)->required();
  actions[kids] = [&] {
    auto found = children(parse_level_datum(o.datum), o.ram_bound, kModes.at(o.mode));
    return o.json ? data_json(found).dump() + "\n" : lines(found);
  };

  auto* tree = app.add_subcommand("tree", "bounded expansion of the tree below a datum");
  add_mode(tree, o, true);
  tree->add_option("--depth", o.depth)->required();
  tree->add_option("--ram-bound", o.ram_bound)->required();
  tree->add_option("--format", o.tree_format)->check(CLI::IsMember({"dot", "json"}));
  tree->add_option("datum", o.datum)->required();
  actions[tree] = [&] {
    TreeNode t = expand_tree(parse_level_datum(o.datum), o.depth, o.ram_bound, kModes.at(o.mode));
    return export_tree(t, o.json ? TreeFormat::Json : kTreeFormats.at(o.tree_format));
  };

  auto* enumerate = app.add_subcommand("enumerate", "minimal level data at infinity with n loops");
  enumerate->add_option("--loops", o.loops)->required();
  actions[enumerate] = [&] {
    auto found = minimal_for_loops(o.loops);
    return o.json ? data_json(found).dump() + "\n" : lines(found);
  };

  auto* table = app.add_subcommand("table", "minimal level data at infinity for 0..N loops");
  table->add_option("--max-loops", o.max_loops)->required();
  table->add_option("--format", o.table_format)->check(CLI::IsMember({"markdown", "json", "csv"}));
  actions[table] = [&] {
    return format_table(minimal_table(o.max_loops), o.json ? TableFormat::Json : kTableFormats.at(o.table_format));
  };

  auto* circle = app.add_subcommand("circle", "operations on concrete Stokes circles");
  circle->require_subcommand(1);
  auto* c_inv = circle->add_subcommand("invariants", "ram, irr, slope and levels");
  c_inv->add_option("circle", o.circle)->required();
  actions[c_inv] = [&] {
    FormalInvariants f = invariants_of(parse_circle(o.circle));
    return o.json ? invariants_to_json(f).dump() + "\n" : format_invariants(f) + "\n";
  };
  auto* c_fourier = circle->add_subcommand("fourier", "invariants of the Fourier transform");
  c_fourier->add_option("circle", o.circle)->required();
  actions[c_fourier] = [&] { return cmd_circle_fourier(o); };
  auto* c_twist = circle->add_subcommand("twist", "add an unramified polynomial");
  c_twist->add_option("circle", o.circle)->required();
  c_twist->add_option("by", o.twist_poly)->required();
  actions[c_twist] = [&] {
    std::vector<Term> by = parse_polynomial(o.twist_poly);
    return circle_output(twist(parse_circle(o.circle), by), o.json);
  };
  auto* c_move = circle->add_subcommand("relocate", "move the circle to another point");
  c_move->add_option("circle", o.circle)->required();
  c_move->add_option("location", o.location)->required();
  actions[c_move] = [&] {
    return circle_output(moebius_relocate(parse_circle(o.circle), parse_location(o.location)), o.json);
  };

  std::vector<const char*> argv{"stokes"};
  for (const std::string& a : args) argv.push_back(a.c_str());

  std::ostringstream out;
  std::ostringstream err;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? kSuccess : kUsage;
    return result;
  }

  try {
    for (auto& [sub, action] : actions) {
      if (sub->parsed()) {
        result.out = action();
        return result;
      }
    }
    result.err = app.help();
    result.exit_code = kUsage;
  } catch (const InvalidInput& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = kInvalidInput;
  } catch (const std::exception& e) {
    result.err = std::string("internal error: ") + e.what() + "\n";
    result.exit_code = kInvalidInput;
  }
  return result;
}

}  // namespace stokes::cli
