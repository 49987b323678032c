#include "sdcalc_cli/app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "sdcalc/error.hpp"
#include "sdcalc_cli/reports.hpp"

namespace sdcalc::cli {
namespace {

struct Options {
  std::string format = "text";
  std::string out;
  unsigned jobs = 1;
  std::vector<std::string> files;

  std::string op;
  std::size_t pos = 0;
  std::optional<int> exponent;
  std::string k;
  std::string dual;
  long long switch_k = 0;
  std::string section;
  std::uint64_t seed = 0;
  std::size_t steps = 0;
};

struct Outcome {
  int code = kSuccess;
  std::optional<Report> report;
  std::string error;
};

bool integer_text(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

Int integer_arg(const std::string& s, const char* flag) {
  if (!integer_text(s)) throw PreconditionError(std::string(flag) + ": expected an integer, got '" + s + "'");
  return Int(s[0] == '+' ? s.substr(1) : s);
}

std::vector<Int> integer_list(const std::string& s, const char* flag) {
  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream is(t);
  std::vector<Int> out;
  for (std::string tok; is >> tok;) out.push_back(integer_arg(tok, flag));
  if (out.empty()) throw PreconditionError(std::string(flag) + ": expected a list of integers");
  return out;
}

template <class F>
Outcome guarded(F&& f, const std::string& where) {
  const std::string prefix = where.empty() ? "" : where + ": ";
  try {
    return {kSuccess, f(), {}};
  } catch (const InvariantViolation& e) {
    return {kInternalError, std::nullopt, prefix + "internal error: " + e.what()};
  } catch (const Error& e) {
    return {kUsageError, std::nullopt, prefix + e.what()};
  } catch (const std::exception& e) {
    return {kInternalError, std::nullopt, prefix + "internal error: " + e.what()};
  }
}

Report command_on(const std::string& cmd, const Options& o, const Diagram& d) {
  if (cmd == "info") return info_report(d);
  if (cmd == "classify") return classify_report(d);
  if (cmd == "detect") return detect_report(d);
  if (cmd == "substitute") {
    SubstituteArgs a;
    a.op = o.op;
    a.pos = o.pos;
    a.exponent = o.exponent;
    if (!o.k.empty()) a.k = integer_arg(o.k, "--k");
    if (!o.dual.empty()) a.dual = HClass(d.genus(), integer_list(o.dual, "--dual"));
    return substitute_report(d, a);
  }
  if (cmd == "switch") return switch_report(d, o.switch_k);
  if (cmd == "double") return double_report(d);
  if (cmd == "monodromy") return monodromy_report(d);
  if (cmd == "blf") return blf_report(d);
  if (cmd == "kirby")
    return kirby_report(d, o.section.empty() ? std::nullopt : std::optional<Int>(integer_arg(o.section, "--section")));
  throw PreconditionError("unknown command '" + cmd + "'");
}

std::string failure_text(const ValidationFailure& v) {
  return v.index == 0 ? v.reason : "curve " + std::to_string(v.index) + ": " + v.reason;
}

Outcome process_file(const std::string& cmd, const Options& o, const std::string& path) {
  std::string text;
  {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {kUsageError, std::nullopt, path + ": cannot read file"};
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  DiagramFile f;
  try {
    f = parse_file(text);
  } catch (const ParseError& e) {
    return {kValidationFailure, std::nullopt, path + ": " + e.what()};
  }

  std::optional<Diagram> d;
  std::string failure;
  try {
    d = to_diagram(f);
  } catch (const PreconditionError& e) {
    failure = e.what();
  }

  if (cmd == "validate") {
    std::vector<ValidationFailure> fails;
    if (!d) {
      fails = file_failures(f);
      if (fails.empty()) fails.push_back({0, failure});
    }
    Outcome out;
    out.report = validate_report(f, d, fails);
    if (!fails.empty()) {
      out.code = kValidationFailure;
      out.error = path + ": " + failure_text(fails.front());
    }
    return out;
  }
  if (!d) return {kValidationFailure, std::nullopt, path + ": " + failure};
  return guarded([&] { return command_on(cmd, o, *d); }, path);
}

std::vector<Outcome> process_all(const std::string& cmd, const Options& o) {
  std::vector<Outcome> results(o.files.size());
  const std::size_t workers = std::min<std::size_t>(o.jobs, o.files.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < o.files.size(); ++i) results[i] = process_file(cmd, o, o.files[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < o.files.size();) results[i] = process_file(cmd, o, o.files[i]);
    });
  for (std::thread& t : pool) t.join();
  return results;
}

std::string render(const Report& r, bool json) { return json ? r.json.dump(2) + "\n" : r.text; }

std::string render_batch(const std::vector<std::string>& files, const std::vector<Outcome>& results, bool json) {
  if (json) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < files.size(); ++i) {
      Json item;
      item["file"] = files[i];
      item["exit_code"] = results[i].code;
      item["report"] = results[i].report ? results[i].report->json : Json(nullptr);
      if (!results[i].error.empty()) item["error"] = results[i].error;
      arr.push_back(std::move(item));
    }
    return Json{{"command", "batch"}, {"results", arr}}.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < files.size(); ++i) {
    out += "== " + files[i] + " ==\n";
    if (results[i].report) out += results[i].report->text;
    if (!results[i].error.empty()) out += "error: " + results[i].error + "\n";
  }
  return out;
}

void add_file_arg(CLI::App* sub, Options& o) {
  sub->add_option("FILE", o.files, "Diagram files (.sd text or JSON)")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Surface diagram calculus on the homology of closed surfaces", "sdcalc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", o.out, "Write the report to PATH instead of standard output");
  app.add_option("--jobs", o.jobs, "Files processed in parallel")->check(CLI::Range(1u, 256u));

  add_file_arg(app.add_subcommand("validate", "Check the circuit axioms"), o);
  add_file_arg(app.add_subcommand("info", "Framings, linking matrix, form invariants, Euler characteristics"), o);
  add_file_arg(app.add_subcommand("classify", "Closed genus-1 classification with reduction trace"), o);
  add_file_arg(app.add_subcommand("detect", "Blow-up, stabilization and surgery patterns"), o);

  CLI::App* sub = app.add_subcommand("substitute", "Apply a substitution");
  add_file_arg(sub, o);
  sub->add_option("--op", o.op, "Substitution")->required()->check(CLI::IsMember({"blowup", "stab", "hayano"}));
  sub->add_option("--pos", o.pos, "1-based position of the pair (or curve, for hayano)")->required();
  sub->add_option("--exp", o.exponent, "Blow-up exponent")->check(CLI::IsMember({-1, 1}));
  sub->add_option("--k", o.k, "Stabilization or surgery twist exponent");
  sub->add_option("--dual", o.dual, "Dual class for hayano, comma separated");

  CLI::App* sw = app.add_subcommand("switch", "Switch the diagram k times");
  add_file_arg(sw, o);
  sw->add_option("--k", o.switch_k, "Number of switches (negative for the inverse)")->required();

  add_file_arg(app.add_subcommand("double", "Double of the circuit"), o);
  add_file_arg(app.add_subcommand("monodromy", "Lifted monodromy, surgered action and verdict"), o);
  add_file_arg(app.add_subcommand("blf", "Broken Lefschetz fibration vanishing cycles"), o);
  CLI::App* kb = app.add_subcommand("kirby", "Handle decomposition data");
  add_file_arg(kb, o);
  kb->add_option("--section", o.section, "Section self-intersection for the last 2-handle");

  CLI::App* gen = app.add_subcommand("generate", "Random genus-1 diagram with known classification");
  gen->add_option("--seed", o.seed, "Generator seed")->required();
  gen->add_option("--steps", o.steps, "Number of substitutions")->required()->check(CLI::Range(0, 100000));

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  const bool json = o.format == "json";
  int code = kSuccess;
  std::string text;
  if (cmd == "generate") {
    const Outcome r = guarded([&] { return generate_report(o.seed, o.steps); }, "");
    if (!r.error.empty()) err << "sdcalc: " << r.error << '\n';
    if (r.report) text = render(*r.report, json);
    code = r.code;
  } else {
    const std::vector<Outcome> results = process_all(cmd, o);
    for (const Outcome& r : results) {
      if (!r.error.empty()) err << "sdcalc: " << r.error << '\n';
      code = std::max(code, r.code);
    }
    if (o.files.size() == 1) {
      if (results.front().report) text = render(*results.front().report, json);
    } else {
      text = render_batch(o.files, results, json);
    }
  }

  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!(f << text)) {
      err << "sdcalc: cannot write " << o.out << '\n';
      return kUsageError;
    }
  }
  return code;
}

}  // namespace sdcalc::cli
