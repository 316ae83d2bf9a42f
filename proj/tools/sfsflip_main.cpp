// sfsflip: classify flippability of Heegaard splittings of Seifert fibered
// spaces from the command line. Thin shell over the flip headers; all output
// is byte-deterministic so runs can be diffed.
//
// Exit codes: 0 ok, 2 bad input, 3 orbit search gave up (node cap).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <flip/flip.hpp>

namespace {

using flip::json;

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    flip::fail(flip::errc::parse_error, what + ": " + e.what());
  }
}

// --input accepts a file path, "-" for stdin, or inline JSON.
json load_input(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return parse_json_text(ss.str(), "stdin");
  }
  auto pos = arg.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && (arg[pos] == '{' || arg[pos] == '['))
    return parse_json_text(arg, "inline input");
  std::ifstream in(arg);
  if (!in) flip::fail(flip::errc::parse_error, "cannot open input file: " + arg);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), arg);
}

// --group cyclic:M or table:PATH
flip::FiniteGroupTable load_group(const std::string& spec) {
  if (spec.rfind("cyclic:", 0) == 0) {
    long long m = 0;
    try {
      std::size_t used = 0;
      m = std::stoll(spec.substr(7), &used);
      if (used != spec.size() - 7) m = 0;
    } catch (...) {
      m = 0;
    }
    if (m < 1 || m > 4096)
      flip::fail(flip::errc::parse_error, "--group cyclic:M needs 1 <= M <= 4096, got " + spec);
    return flip::cyclic_group(static_cast<int>(m));
  }
  if (spec.rfind("table:", 0) == 0)
    return flip::group_table_from_json(load_input(spec.substr(6)));
  flip::fail(flip::errc::parse_error, "--group must be cyclic:M or table:PATH, got " + spec);
}

std::vector<long long> parse_exponents(const std::string& arg) {
  std::vector<long long> out;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (...) {
      flip::fail(flip::errc::parse_error, "--exponents wants comma-separated integers, got " + arg);
    }
  }
  if (out.empty())
    flip::fail(flip::errc::parse_error, "--exponents wants comma-separated integers, got " + arg);
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string splitting_brief(const flip::VerticalSplitting& s) {
  return "h1=" + flip::detail::indices_str(s.h1_fibers) +
         " case=" + flip::vertical_case_name(s.construction_case);
}

std::string verdict_text(const flip::Verdict& v) {
  std::string out = "outcome: ";
  out += flip::outcome_name(v.outcome);
  out += "\n";
  for (const auto& f : v.trace) {
    out += flip::rule_name(f.rule);
    out += " ";
    out += flip::rule_label(f.rule);
    out += f.matched ? " hit: " : " miss: ";
    out += f.detail;
    out += "\n";
  }
  return out;
}

std::string decided_rule(const flip::Verdict& v) {
  for (auto it = v.trace.rbegin(); it != v.trace.rend(); ++it)
    if (it->matched) return flip::rule_name(it->rule);
  return "-";
}

struct CommonArgs {
  std::string input;
  std::string format = "json";
  std::vector<long long> lens;

  std::optional<flip::LensParams> lens_params() const {
    if (lens.empty()) return std::nullopt;
    return flip::normalize_lens(flip::Integer(lens[0]), flip::Integer(lens[1]));
  }
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_lens) {
  cmd->add_option("-i,--input", args.input, "JSON input: a path, - for stdin, or inline JSON");
  cmd->add_option("-f,--format", args.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  if (with_lens)
    cmd->add_option("--lens", args.lens, "lens space parameters p q")->expected(2);
}

int run_classify(const CommonArgs& args) {
  auto lens = args.lens_params();
  flip::SeifertInvariants inv;
  std::optional<flip::SplittingDescriptor> split;
  if (args.input.empty()) {
    if (!lens)
      flip::fail(flip::errc::parse_error, "classify needs --input, or --lens to synthesize one");
    inv = flip::lens_space_invariants(*lens);
  } else {
    json j = load_input(args.input);
    inv = flip::invariants_from_json(j);
    if (j.is_object() && j.contains("splitting"))
      split = flip::splitting_from_json(j.at("splitting"), "$.splitting", &inv);
  }

  if (split) {
    flip::Verdict v = flip::classify_flippability(inv, *split, lens);
    if (args.format == "json")
      emit(flip::verdict_to_json(v));
    else
      std::cout << verdict_text(v);
    return 0;
  }

  // No splitting given: classify every canonical vertical splitting.
  json rows = json::array();
  std::string text;
  for (const auto& s : flip::enumerate_vertical(inv)) {
    auto d = flip::SplittingDescriptor::make_vertical(s);
    flip::Verdict v = flip::classify_flippability(inv, d, lens);
    rows.push_back(json{{"splitting", flip::splitting_to_json(d)},
                        {"genus", flip::genus_of(s, inv)},
                        {"verdict", flip::verdict_to_json(v)}});
    text += splitting_brief(s) + " genus=" + std::to_string(flip::genus_of(s, inv)) + " -> " +
            flip::outcome_name(v.outcome) + " (" + decided_rule(v) + ")\n";
  }
  if (args.format == "json")
    emit(rows);
  else
    std::cout << text;
  return 0;
}

int run_enumerate(const CommonArgs& args) {
  if (args.input.empty()) flip::fail(flip::errc::parse_error, "enumerate needs --input");
  flip::SeifertInvariants inv = flip::invariants_from_json(load_input(args.input));
  json rows = json::array();
  std::string text;
  for (const auto& s : flip::enumerate_vertical(inv)) {
    auto d = flip::SplittingDescriptor::make_vertical(s);
    rows.push_back(json{{"splitting", flip::splitting_to_json(d)},
                        {"genus", flip::genus_of(s, inv)}});
    text += splitting_brief(s) + " genus=" + std::to_string(flip::genus_of(s, inv)) + "\n";
  }
  if (args.format == "json")
    emit(rows);
  else
    std::cout << text;
  return 0;
}

std::string presentation_text(const flip::FinitePresentation& p) {
  std::string out = "generators:";
  for (const auto& g : p.generators) out += " " + g.name();
  out += "\nrelators:\n";
  for (const auto& r : p.relators) out += "  " + flip::word_str(r) + "\n";
  return out;
}

// pi_1 plus both quotients; the horizontal one only exists over a single
// exceptional fiber, so elsewhere it reports null.
int run_present(const CommonArgs& args) {
  if (args.input.empty()) flip::fail(flip::errc::parse_error, "present needs --input");
  flip::SeifertInvariants inv = flip::invariants_from_json(load_input(args.input));
  flip::FinitePresentation pi1 = flip::fundamental_group(inv);
  flip::FinitePresentation qh = flip::quotient_by_h(inv);
  json horizontal = nullptr;
  std::string horizontal_text = "not defined (needs exactly one exceptional fiber)";
  if (inv.fiber_count() == 1) {
    auto order = flip::quotient_by_horizontal(inv);
    horizontal = json{{"order", order ? json(flip::detail::integer_json(*order)) : json("infinite")}};
    horizontal_text = "order " + (order ? order->str() : std::string("infinite"));
  }
  if (args.format == "json") {
    emit(json{{"fundamental_group", flip::presentation_to_json(pi1)},
              {"quotient_by_h", flip::presentation_to_json(qh)},
              {"quotient_by_horizontal", horizontal}});
    return 0;
  }
  std::cout << "fundamental group:\n"
            << presentation_text(pi1) << "quotient by h:\n"
            << presentation_text(qh) << "quotient by horizontal: " << horizontal_text << "\n";
  return 0;
}

int run_homology(const CommonArgs& args) {
  if (args.input.empty()) flip::fail(flip::errc::parse_error, "homology needs --input");
  flip::SeifertInvariants inv = flip::invariants_from_json(load_input(args.input));
  auto order = flip::first_homology_order(inv);
  if (args.format == "json") {
    emit(json{{"order", order ? json(flip::detail::integer_json(*order)) : json("infinite")}});
  } else {
    std::cout << "order: " << (order ? order->str() : "infinite") << "\n";
  }
  return 0;
}

int run_nielsen_check(const CommonArgs& args, const std::string& group_spec,
                      unsigned long long node_cap, const std::string& exponents_arg,
                      std::optional<int> omit) {
  if (group_spec.empty()) flip::fail(flip::errc::parse_error, "nielsen-check needs --group");
  if (args.input.empty()) flip::fail(flip::errc::parse_error, "nielsen-check needs --input");
  flip::FiniteGroupTable G = load_group(group_spec);
  json j = load_input(args.input);

  if (j.is_object() && j.contains("tuples")) {
    auto tuples = flip::tuples_from_json(j.at("tuples"), "$.tuples");
    if (tuples.size() != 2)
      flip::fail(flip::errc::parse_error, "$.tuples: expected exactly two tuples");
    flip::Equivalence r = flip::nielsen_equivalent_finite(G, tuples[0], tuples[1], node_cap);
    if (args.format == "json")
      emit(json{{"result", flip::equivalence_name(r)}});
    else
      std::cout << "result: " << flip::equivalence_name(r) << "\n";
    return r == flip::Equivalence::exhausted ? 3 : 0;
  }

  // Oracle mode: invariants + splitting + assignment.
  flip::SeifertInvariants inv = flip::invariants_from_json(j);
  if (!j.is_object() || !j.contains("splitting"))
    flip::fail(flip::errc::parse_error, "$: missing field \"splitting\"");
  flip::SplittingDescriptor d = flip::splitting_from_json(j.at("splitting"), "$.splitting", &inv);
  std::map<flip::Generator, int> assignment;
  if (j.contains("assignment"))
    assignment = flip::assignment_from_json(j.at("assignment"), "$.assignment");

  flip::OracleOptions opt;
  opt.lens_override = args.lens_params();
  opt.node_cap = node_cap;
  opt.omitted_index = omit;
  if (!exponents_arg.empty()) opt.exponents = parse_exponents(exponents_arg);

  flip::ConsistencyReport rep = flip::oracle_consistency_check(inv, d, G, assignment, opt);
  if (args.format == "json") {
    emit(flip::consistency_report_to_json(rep));
  } else {
    std::cout << "outcome: " << flip::outcome_name(rep.verdict.outcome) << "\n"
              << "oracle: " << flip::equivalence_name(rep.oracle) << "\n"
              << "contradiction: " << (rep.contradiction ? "yes" : "no") << "\n"
              << "note: " << rep.note << "\n";
  }
  return rep.oracle == flip::Equivalence::exhausted ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"flippability of Heegaard splittings of Seifert fibered spaces"};
  app.require_subcommand(1);

  CommonArgs classify_args, enumerate_args, present_args, homology_args, nielsen_args;
  std::string group_spec;
  std::string exponents_arg;
  unsigned long long node_cap = flip::default_node_cap;
  long long omit_arg = -1;

  auto* classify = app.add_subcommand(
      "classify", "decide flippability (all canonical splittings unless one is given)");
  add_common(classify, classify_args, true);

  auto* enumerate = app.add_subcommand("enumerate", "list the canonical vertical splittings");
  add_common(enumerate, enumerate_args, false);

  auto* present = app.add_subcommand(
      "present", "print the fundamental group presentation and both quotients");
  add_common(present, present_args, false);

  auto* homology = app.add_subcommand("homology", "order of the first homology group");
  add_common(homology, homology_args, false);

  auto* nielsen = app.add_subcommand(
      "nielsen-check", "Nielsen equivalence in a finite group, or oracle replay of a verdict");
  add_common(nielsen, nielsen_args, true);
  nielsen->add_option("--group", group_spec, "finite group: cyclic:M or table:PATH");
  nielsen->add_option("--node-cap", node_cap, "orbit search node budget")->capture_default_str();
  nielsen->add_option("--exponents", exponents_arg, "per-fiber core exponents, comma separated");
  nielsen->add_option("--omit", omit_arg, "complement fiber index to omit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const CommonArgs* active = &classify_args;
  if (*enumerate) active = &enumerate_args;
  if (*present) active = &present_args;
  if (*homology) active = &homology_args;
  if (*nielsen) active = &nielsen_args;

  try {
    if (*classify) return run_classify(classify_args);
    if (*enumerate) return run_enumerate(enumerate_args);
    if (*present) return run_present(present_args);
    if (*homology) return run_homology(homology_args);
    if (*nielsen)
      return run_nielsen_check(nielsen_args, group_spec, node_cap, exponents_arg,
                               omit_arg < 0 ? std::nullopt
                                            : std::optional<int>(static_cast<int>(omit_arg)));
  } catch (const flip::Error& e) {
    if (active->format == "text")
      std::cout << "error: " << flip::errc_name(e.code()) << ": " << e.what() << "\n";
    else
      emit(flip::error_to_json(e));
    return 2;
  }
  return 2;
}
