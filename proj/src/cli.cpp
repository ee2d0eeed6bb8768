#include "scops/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "scops/bounds.hpp"
#include "scops/constructions.hpp"
#include "scops/document.hpp"
#include "scops/error.hpp"
#include "scops/harness.hpp"
#include "scops/minimize.hpp"
#include "scops/witnesses.hpp"

namespace scops::cli {

namespace {

Dfa read_dfa_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_dfa_document(buffer.str());
  } catch (const DocumentError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

std::string render(const Dfa& d, const std::string& format) {
  return format == "dot" ? emit_dot(d) : emit_document(d);
}

struct WitnessArgs {
  std::string family;
  std::optional<int> m, n;
  std::size_t sigma = 2;
  std::string format = "json";
};

struct ComposeArgs {
  std::string op, lhs, rhs, method = "direct", format = "json", output;
  bool minimize = false;
};

struct ScArgs {
  std::string op;
  int m = 0, n = 0;
  std::optional<int> k1;
};

struct VerifyArgs {
  std::string op, m, n;
};

struct SearchArgs {
  std::string op, out_dir = ".";
  int m = 0, n = 0;
  std::size_t sigma = 0;
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 1;
  std::uint64_t budget = SearchOptions{}.budget;
  unsigned threads = 0;
};

int do_witness(const WitnessArgs& a, std::ostream& out) {
  const WitnessFamily family = parse_witness_family(a.family);
  const auto size = a.m ? a.m : a.n;
  if (!size) throw InputError("witness needs --m or --n");
  out << render(make_witness(family, *size, a.sigma), a.format);
  return kOk;
}

int do_compose(const ComposeArgs& a, std::ostream& out) {
  const Operation op = parse_operation(a.op);
  const Method method = parse_method(a.method);
  const Dfa lhs = read_dfa_file(a.lhs);
  const Dfa rhs = read_dfa_file(a.rhs);
  const Dfa built = method == Method::direct ? combined(op, lhs, rhs) : oracle_pipeline(op, lhs, rhs);
  const Dfa minimal = minimize_hopcroft(built);
  const std::string text = render(a.minimize ? minimal : built, a.format);
  if (a.output.empty()) {
    out << text;
  } else {
    write_file(a.output, text);
  }
  out << "states=" << built.state_count() << " minimal=" << minimal.state_count() << "\n";
  return kOk;
}

int do_sc(const ScArgs& a, std::ostream& out) {
  out << evaluate(parse_bound_kind(a.op), a.m, a.n, a.k1) << "\n";
  return kOk;
}

int do_verify(const VerifyArgs& a, std::ostream& out) {
  const BoundKind kind = parse_bound_kind(a.op);
  const auto [m_lo, m_hi] = parse_range(a.m);
  const auto [n_lo, n_hi] = parse_range(a.n);
  bool all_pass = true;
  for (int m = m_lo; m <= m_hi; ++m) {
    for (int n = n_lo; n <= n_hi; ++n) {
      const BoundReport report = verify_witness(kind, m, n);
      out << format_report(report) << "\n";
      all_pass = all_pass && report.pass;
    }
  }
  return all_pass ? kOk : kVerificationFailed;
}

int do_search(const SearchArgs& a, std::ostream& out) {
  const Operation op = parse_operation(a.op);
  SearchOptions options;
  options.sample_count = a.sample;
  options.seed = a.seed;
  options.budget = a.budget;
  options.threads = a.threads;
  const SearchResult result = exhaustive_search(op, a.m, a.n, a.sigma, options);
  out << format_search(result) << "\n";
  if (result.argmax) {
    const std::string stem = "search-" + std::string(to_string(op)) + "-m" + std::to_string(a.m) +
                             "-n" + std::to_string(a.n) + "-s" + std::to_string(a.sigma);
    const std::filesystem::path dir(a.out_dir);
    std::filesystem::create_directories(dir);
    const auto lhs = dir / (stem + "-lhs.json");
    const auto rhs = dir / (stem + "-rhs.json");
    write_file(lhs, emit_document(result.argmax->first));
    write_file(rhs, emit_document(result.argmax->second));
    out << "lhs=" << lhs.string() << " rhs=" << rhs.string() << "\n";
  }
  return kOk;
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
  auto to_int = [&](const std::string& part) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size()) throw InputError("malformed range '" + text + "'");
    return value;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  const int lo = to_int(text.substr(0, dots));
  const int hi = to_int(text.substr(dots + 2));
  if (lo > hi) throw InputError("empty range '" + text + "'");
  return {lo, hi};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"State complexity of reversal/star combined with catenation"};
  app.name("scops");
  app.require_subcommand(1);

  WitnessArgs witness;
  auto* w = app.add_subcommand("witness", "Emit a worst-case witness automaton");
  w->add_option("--family", witness.family, "Witness family tag")->required();
  w->add_option("--m", witness.m, "Number of states");
  w->add_option("--n", witness.n, "Number of states (second-operand families)");
  w->add_option("--sigma", witness.sigma, "Alphabet size for sigma-star / empty");
  w->add_option("--format", witness.format)->check(CLI::IsMember({"json", "dot"}));

  ComposeArgs compose;
  auto* c = app.add_subcommand("compose", "Build L(lhs)^R L(rhs) or L(lhs)* L(rhs)");
  c->add_option("--op", compose.op)->required()->check(CLI::IsMember({"revcat", "starcat"}));
  c->add_option("--lhs", compose.lhs, "First operand (DFA document)")->required();
  c->add_option("--rhs", compose.rhs, "Second operand (DFA document)")->required();
  c->add_option("--method", compose.method)->check(CLI::IsMember({"direct", "oracle"}));
  c->add_flag("--minimize", compose.minimize, "Emit the minimized result");
  c->add_option("--format", compose.format)->check(CLI::IsMember({"json", "dot"}));
  c->add_option("--output", compose.output, "Write the automaton here instead of stdout");

  ScArgs sc;
  auto* s = app.add_subcommand("sc", "Evaluate a state-complexity formula");
  s->add_option("--op", sc.op)
      ->required()
      ->check(CLI::IsMember({"revcat", "starcat", "starcat-special"}));
  s->add_option("--m", sc.m)->required();
  s->add_option("--n", sc.n)->required();
  s->add_option("--k1", sc.k1, "Final states besides the initial one (starcat upper bound)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check witness families against the exact values");
  v->add_option("--op", verify.op)
      ->required()
      ->check(CLI::IsMember({"revcat", "starcat", "starcat-special"}));
  v->add_option("--m", verify.m, "Range A..B")->required();
  v->add_option("--n", verify.n, "Range C..D")->required();

  SearchArgs search;
  auto* x = app.add_subcommand("search", "Worst case over all (or sampled) DFA pairs");
  x->add_option("--op", search.op)->required()->check(CLI::IsMember({"revcat", "starcat"}));
  x->add_option("--m", search.m)->required();
  x->add_option("--n", search.n)->required();
  x->add_option("--sigma", search.sigma)->required();
  x->add_option("--sample", search.sample, "Random pairs instead of full enumeration");
  x->add_option("--seed", search.seed);
  x->add_option("--budget", search.budget, "Largest pair space for full mode");
  x->add_option("--threads", search.threads, "Worker threads (0 = all cores)");
  x->add_option("--out-dir", search.out_dir, "Where the argmax pair is written");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*w) return do_witness(witness, out);
    if (*c) return do_compose(compose, out);
    if (*s) return do_sc(sc, out);
    if (*v) return do_verify(verify, out);
    if (*x) return do_search(search, out);
  } catch (const std::exception& e) {
    // Bad input, budget overruns and unwritable output paths are all
    // reported the same way.
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace scops::cli
