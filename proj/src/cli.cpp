#include "qinv/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <random>
#include <sstream>

#include "qinv/errors.hpp"
#include "qinv/linkfile.hpp"
#include "qinv/moves.hpp"

namespace qinv {

using json = nlohmann::json;  // std::map backed, so keys come out sorted

namespace {

// ------------------------------------------------------------------ suites

std::string fmt(std::complex<double> z) {
  std::ostringstream s;
  s << std::setprecision(6) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return s.str();
}

void skein_suite(std::vector<CheckRecord>& out) {
  const EvalLimits limits = EvalLimits::from_env();
  auto br = [&](const MorseWord& w) { return bracket_sweep(w, limits).generic; };
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    out.push_back({"skein", std::move(name), 0, ok, std::move(detail)});
  };
  const LaurentPoly kink_pos = -LaurentPoly::monomial(3), kink_neg = -LaurentPoly::monomial(-3);

  std::vector<std::pair<std::string, FramedLinkDiagram>> cases = {
      {"unknot", unknot(0)}, {"hopf", hopf_link(0, 0)}, {"trefoil", trefoil(true, 3)},
      {"figure-eight", braid_closure(BraidWord{3, {1, -2, 1, -2}})}};
  std::mt19937_64 rng(20261019);
  for (int i = 0; i < 20; ++i) {
    const int c = std::uniform_int_distribution<int>(0, 10)(rng);
    cases.emplace_back("random-" + std::to_string(i), FramedLinkDiagram(random_morse_word(rng, c, 8)));
  }
  for (const auto& [name, d] : cases) {
    const LaurentPoly v = br(d.word());
    add(name + " engines agree", v == bracket_statesum(d.word(), limits).generic);
    add(name + " positive kink", br(insert_kinks(d, 0, 1).word()) == kink_pos * v);
    add(name + " negative kink", br(insert_kinks(d, 0, -1).word()) == kink_neg * v);
    add(name + " mirror", br(mirror(d).word()) == v.conj());
    add(name + " distant union", br(distant_union(d, hopf_link()).word()) == v * br(hopf_link().word()));
    // Reidemeister moves at the widest level of the word
    const auto widths = d.word().widths();
    const auto at = std::max_element(widths.begin(), widths.end()) - widths.begin();
    const int w = widths[at];
    if (w >= 2) {
      add(name + " R2", br(insert_r2(d.word(), at, w - 2, true)) == v && br(insert_r2(d.word(), at, 0, false)) == v);
    }
    if (w >= 4) {
      const LaurentPoly a = br(insert_braid(d.word(), at, {1, 2, 1}));
      const LaurentPoly b = br(insert_braid(d.word(), at, {2, 1, 2}));
      const LaurentPoly c = br(insert_braid(d.word(), at, {-1, -2, -1}));
      const LaurentPoly e = br(insert_braid(d.word(), at, {-2, -1, -2}));
      add(name + " R3", a == b && c == e);
    }
  }
}

const std::vector<std::pair<std::string, SpecialFramedLink>>& suite_links() {
  static const std::vector<std::pair<std::string, SpecialFramedLink>> links = {
      {"empty", SpecialFramedLink(empty_link())},
      {"U0", SpecialFramedLink(unknot(0))},
      {"hopf(0,0)", SpecialFramedLink(hopf_link(0, 0))},
      {"trefoil(-1)", SpecialFramedLink(trefoil(false, -1))},
      {"special hopf", SpecialFramedLink(hopf_link(0, 0), {false, true})},
      {"special unknot", SpecialFramedLink(unknot(0), {true})},
  };
  return links;
}

void fixture_checks(std::string_view suite, bool kirby, const std::vector<int>& levels, std::vector<CheckRecord>& out) {
  for (const auto& f : fixture_corpus()) {
    const bool is_kirby =
        f.kind == MoveKind::K1Plus || f.kind == MoveKind::K1Minus || f.kind == MoveKind::K2Slide;
    const bool negative = !f.expect_equal;
    if (kirby != (is_kirby && !negative)) continue;
    for (int k : levels) {
      const FixtureOutcome o = run_fixture(f, Level(k));
      std::string detail = std::string(to_string(f.kind)) + " " + to_string(f.invariant) + ": " + o.detail;
      if (negative) detail += o.equal ? " (expected a difference)" : " (differs as expected)";
      if (o.sign_ambiguous) detail += " (compared up to sign)";
      out.push_back({std::string(suite), f.name, k, o.passed, detail});
    }
  }
}

void kirby_suite(const std::vector<int>& levels, std::vector<CheckRecord>& out) {
  for (int k : levels) {
    const Level level(k);
    const InvariantValue s3 = rtw(empty_link(), level);
    out.push_back({"kirby", "Z(S3) = 1", k, s3.numerator == CyclotomicNumber(level, 1) && s3.denominator.size() == 2,
                   fmt(s3.approx)});
    for (const auto& [name, link] : suite_links()) {
      if (link.special_count() > 0) continue;
      const InvariantValue base = rtw(link.diagram, level);
      for (int sign : {1, -1}) {
        const InvariantValue blown = rtw(k1_add(link.diagram, sign), level);
        const Comparison c = compare(base, blown);
        out.push_back({"kirby", std::string(sign > 0 ? "K1+ " : "K1- ") + name, k, c.equal,
                       fmt(base.approx) + " vs " + fmt(blown.approx)});
      }
    }
  }
  fixture_checks("kirby", true, levels, out);
}

void gamma_suite(const std::vector<int>& levels, std::vector<CheckRecord>& out) {
  for (int k : levels) {
    const Level level(k);
    for (const auto& [name, link] : suite_links()) {
      const InvariantValue base = broda(link, level);
      const InvariantValue d = broda(gamma_d_add(link), level);
      const InvariantValue e = broda(gamma_e_add(link), level);
      out.push_back({"gamma", "Gamma-d " + name, k, compare(base, d).equal, fmt(base.approx) + " vs " + fmt(d.approx)});
      out.push_back({"gamma", "Gamma-e " + name, k, compare(base, e).equal, fmt(base.approx) + " vs " + fmt(e.approx)});
    }
  }
  fixture_checks("gamma", false, levels, out);
}

}  // namespace

std::vector<CheckRecord> run_suite(std::string_view suite, const std::vector<int>& levels) {
  std::vector<CheckRecord> out;
  if (suite == "skein") {
    skein_suite(out);
  } else if (suite == "kirby") {
    kirby_suite(levels, out);
  } else if (suite == "gamma") {
    gamma_suite(levels, out);
  } else {
    throw UsageError("unknown suite '" + std::string(suite) + "' (expected kirby, gamma or skein)");
  }
  return out;
}

// ------------------------------------------------------------------ JSON

namespace {

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

json laurent_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(json::array({e, integer_json(c)}));
  return {{"terms", terms}, {"text", p.to_string()}};
}

json cyclotomic_json(const CyclotomicNumber& z) {
  json coeffs = json::array();
  for (const auto& c : z.coefficients()) coeffs.push_back(integer_json(c));
  return {{"level", z.level().k()}, {"basis", "powers of A = exp(i pi / 2k)"}, {"coefficients", coeffs},
          {"approx", complex_json(z.complex_approx())}};
}

json inertia_json(const Inertia& i) { return {{"b_plus", i.b_plus}, {"b_minus", i.b_minus}, {"nullity", i.nullity}}; }

json invariant_json(const std::string& which, const LinkBlock& block, const InvariantValue& v) {
  json den = json::array();
  for (const auto& f : v.denominator)
    den.push_back({{"name", f.name},
                   {"base", cyclotomic_json(f.base)},
                   {"exponent", f.twice_exponent / 2.0},
                   {"twice_exponent", f.twice_exponent},
                   {"half_integer", f.twice_exponent % 2 != 0}});
  return {{"invariant", which},
          {"link", block.name},
          {"level", v.level.k()},
          {"numerator", cyclotomic_json(v.numerator)},
          {"denominator", den},
          {"half_integral", v.half_integral()},
          {"approx", complex_json(v.approx)},
          {"inertia", inertia_json(v.inertia)},
          {"N", v.ordinary},
          {"Ndot", v.special}};
}

SkeinLabel parse_label_value(const std::string& text) {
  if (text == "omega") return OmegaLabel{Parity::All};
  if (text == "omega+") return OmegaLabel{Parity::Even};
  if (text == "omega-") return OmegaLabel{Parity::Odd};
  int n = -1;
  std::istringstream in(text);
  if (!(in >> n) || !in.eof() || n < 0) throw UsageError("bad label value '" + text + "'");
  return ColorLabel{n};
}

std::vector<SkeinLabel> build_labels(const std::vector<std::string>& specs, int components) {
  std::vector<SkeinLabel> labels(components, ColorLabel{1});
  for (const auto& s : specs) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw UsageError("label must look like c=n, c=omega, c=omega+ or c=omega-");
    int c = -1;
    std::istringstream in(s.substr(0, eq));
    if (!(in >> c) || !in.eof() || c < 0 || c >= components)
      throw UsageError("label refers to component '" + s.substr(0, eq) + "', link has " + std::to_string(components));
    labels[c] = parse_label_value(s.substr(eq + 1));
  }
  return labels;
}

struct Options {
  std::optional<int> k;
  std::string engine = "sweep";
  std::string preset_name;
  std::string file;
  std::string link;
  std::vector<std::string> labels;
  std::string suite;
  bool pretty = false;
};

std::vector<LinkBlock> load_links(const Options& o) {
  std::vector<LinkBlock> blocks;
  if (!o.preset_name.empty()) {
    if (!o.file.empty()) throw UsageError("give either --preset or a FILE, not both");
    auto p = preset(o.preset_name);
    if (!p) throw UsageError("unknown preset '" + o.preset_name + "'");
    blocks.push_back(*p);
  } else if (o.file.empty() || o.file == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    blocks = parse_link_file(buf.str());
  } else {
    std::ifstream in(o.file);
    if (!in) throw UsageError("cannot read " + o.file);
    std::stringstream buf;
    buf << in.rdbuf();
    blocks = parse_link_file(buf.str());
  }
  if (!o.link.empty()) {
    std::erase_if(blocks, [&](const LinkBlock& b) { return b.name != o.link; });
    if (blocks.empty()) throw UsageError("no link named '" + o.link + "'");
  }
  if (blocks.empty()) blocks.push_back(LinkBlock{"", 0, empty_link(), {}});
  return blocks;
}

Level require_level(const Options& o) {
  if (!o.k) throw UsageError("--k is required");
  return Level(*o.k);
}

int emit(std::ostream& out, const std::vector<json>& records, bool pretty) {
  const json doc = records.size() == 1 ? records[0] : json(records);
  out << (pretty ? doc.dump(2) : doc.dump()) << "\n";
  return kExitOk;
}

int cmd_bracket(const Options& o, std::ostream& out, std::ostream& err) {
  const EvalLimits limits = EvalLimits::from_env();
  std::vector<Engine> engines;
  if (o.engine == "sweep" || o.engine == "both") engines.push_back(Engine::Sweep);
  if (o.engine == "statesum" || o.engine == "both") engines.push_back(Engine::StateSum);
  if (engines.empty()) throw UsageError("unknown engine '" + o.engine + "'");
  std::vector<json> records;
  bool agree = true;
  for (const auto& block : load_links(o)) {
    const FramedLinkDiagram& d = block.diagram;
    json r = {{"link", block.name}, {"engine", o.engine}, {"crossings", d.word().crossing_count()},
              {"components", d.component_count()}, {"framings", d.framings()}};
    std::vector<LaurentPoly> values;
    for (Engine e : engines) values.push_back(bracket(d.word(), e, limits).generic);
    if (values.size() == 2) {
      r["engines_agree"] = values[0] == values[1];
      if (values[0] != values[1]) {
        agree = false;
        r["statesum"] = laurent_json(values[1]);
      }
    }
    r["bracket"] = laurent_json(values[0]);
    if (o.k) r["specialized"] = cyclotomic_json(specialize(values[0], Level(*o.k)));
    if (!o.labels.empty()) {
      ColoredOptions opts;
      opts.engine = engines[0];
      opts.limits = limits;
      const auto labels = build_labels(o.labels, d.component_count());
      const bool plain = std::all_of(labels.begin(), labels.end(),
                                     [](const SkeinLabel& l) { return std::holds_alternative<ColorLabel>(l); });
      if (o.k) {
        r["colored"] = cyclotomic_json(evaluate_labeled_link(d, labels, Level(*o.k), opts));
      } else if (plain) {
        std::vector<int> colors;
        for (const auto& l : labels) colors.push_back(std::get<ColorLabel>(l).n);
        r["colored"] = laurent_json(evaluate_colored_generic(d, colors, opts));
      } else {
        throw UsageError("omega labels need --k");
      }
    }
    records.push_back(std::move(r));
  }
  emit(out, records, o.pretty);
  if (!agree) {
    err << "error: engines disagree\n";
    return kExitSuiteFailure;
  }
  return kExitOk;
}

ColoredOptions colored_options(const Options& o) {
  ColoredOptions opts;
  if (o.engine == "statesum") opts.engine = Engine::StateSum;
  else if (o.engine != "sweep") throw UsageError("invariants take --engine sweep or statesum");
  return opts;
}

int cmd_invariant(const Options& o, bool is_broda, std::ostream& out) {
  const Level level = require_level(o);
  const ColoredOptions opts = colored_options(o);
  std::vector<json> records;
  for (const auto& block : load_links(o)) {
    if (is_broda) {
      records.push_back(invariant_json("broda", block, broda(block.special_link(), level, opts)));
    } else {
      if (std::find(block.special.begin(), block.special.end(), true) != block.special.end())
        throw ValidationError("rtw takes ordinary components only; link '" + block.name + "' declares special ones");
      records.push_back(invariant_json("rtw", block, rtw(block.diagram, level, opts)));
    }
  }
  return emit(out, records, o.pretty);
}

int cmd_check(const Options& o, std::ostream& out) {
  std::vector<int> levels = o.k ? std::vector<int>{*o.k} : std::vector<int>{3, 4};
  const auto records = run_suite(o.suite, levels);
  int failed = 0;
  for (const auto& r : records) {
    out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(8) << r.suite << std::setw(40) << r.name
        << (r.k ? "k=" + std::to_string(r.k) : std::string("   ")) << "  " << r.detail << "\n";
    if (!r.passed) ++failed;
  }
  out << records.size() - failed << "/" << records.size() << " passed\n";
  return failed ? kExitSuiteFailure : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum invariants of 3- and 4-manifolds from framed link presentations", "qinv"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool with_file) {
    sub->add_option("--k", o.k, "level k >= 2; A = exp(i pi / 2k)");
    sub->add_option("--engine", o.engine, "statesum, sweep or both")->capture_default_str();
    if (with_file) {
      sub->add_option("--preset", o.preset_name, "bundled presentation instead of FILE");
      sub->add_option("--link", o.link, "evaluate only the named block");
      sub->add_option("file", o.file, "link file ('-' or absent reads stdin)");
    }
    sub->add_flag("--pretty", o.pretty, "indent JSON output");
  };
  auto* bracket_cmd = app.add_subcommand("bracket", "Kauffman bracket of each link");
  common(bracket_cmd, true);
  bracket_cmd->add_option("--label", o.labels, "component label c=n, c=omega, c=omega+ or c=omega-");
  auto* rtw_cmd = app.add_subcommand("rtw", "normalized 3-manifold invariant");
  common(rtw_cmd, true);
  auto* broda_cmd = app.add_subcommand("broda4", "normalized 4-manifold invariant");
  common(broda_cmd, true);
  auto* check_cmd = app.add_subcommand("check", "move-invariance suites");
  common(check_cmd, false);
  check_cmd->add_option("--suite", o.suite, "kirby, gamma or skein")->required();
  app.add_subcommand("presets", "list bundled presets");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
  try {
    if (*bracket_cmd) return cmd_bracket(o, out, err);
    if (*rtw_cmd) return cmd_invariant(o, false, out);
    if (*broda_cmd) return cmd_invariant(o, true, out);
    if (*check_cmd) return cmd_check(o, out);
    for (const auto& n : preset_names()) out << n << "\n";
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const DegenerateLevelError& e) {
    err << "degenerate level: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

}  // namespace qinv
