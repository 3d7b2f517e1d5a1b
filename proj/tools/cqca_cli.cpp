// Command-line front end: classification, glider algebra, space-time
// diagrams, stabilizer and quasifree entanglement timeseries.
//
// Exit codes: 0 ok, 2 invalid input, 3 internal invariant violation.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cqca/csca.hpp"
#include "cqca/error.hpp"
#include "cqca/pauli.hpp"
#include "cqca/quasifree.hpp"
#include "cqca/spacetime.hpp"
#include "cqca/stabilizer.hpp"

namespace {

using namespace cqca;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

CscaMatrix load_automaton(const std::string& key) {
  CscaMatrix a = named_automaton(key);
  const auto problems = validate(a);
  if (!problems.empty()) {
    std::string msg = "invalid automaton:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw DomainError(msg);
  }
  return a;
}

ProductState parse_bloch(const std::string& text) {
  double v[3];
  std::istringstream in(text);
  for (int k = 0; k < 3; ++k) {
    if (!(in >> v[k])) throw ParseError("expected three comma-separated numbers", 0);
    if (k < 2 && in.get() != ',') throw ParseError("expected ','", 0);
  }
  in >> std::ws;
  if (!in.eof()) throw ParseError("trailing characters in Bloch vector", 0);
  return ProductState::from_bloch(v[0], v[1], v[2]);
}

// Writes to --out when given, stdout otherwise.
template <typename F>
void emit(const std::string& path, F&& body) {
  if (path.empty()) {
    body(std::cout);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open " + path);
  body(f);
}

struct Options {
  std::string automaton = "Gs";
  std::string word;
  std::string xi, to;
  int steps = 0;
  std::vector<int> windows;
  std::vector<double> amplitudes;
  std::string bloch = "0,0,1";
  std::string format = "ascii";
  std::string out;
  unsigned seed = 0;
};

void cmd_classify(const Options& o) {
  const CscaMatrix a = load_automaton(o.automaton);
  const Classification c = classify(a);
  std::string line = c.to_string();
  if (c.kind != Classification::Kind::Periodic) line += " trace=" + trace(a).to_string();
  emit(o.out, [&](std::ostream& s) { s << line << '\n'; });
}

void cmd_glider(const Options& o) {
  const Glider g = minimal_glider(load_automaton(o.automaton));
  emit(o.out, [&](std::ostream& s) { s << "speed=" << g.speed << " xi=" << g.xi.to_string() << '\n'; });
}

void cmd_conjugate(const Options& o) {
  const PhaseVector from = PhaseVector::parse(o.xi);
  const CscaMatrix b = o.to.empty() ? conjugator_to_standard(from) : conjugator(from, PhaseVector::parse(o.to));
  emit(o.out, [&](std::ostream& s) { s << b.to_string() << '\n'; });
}

void cmd_spacetime(const Options& o) {
  const CscaMatrix a = load_automaton(o.automaton);
  const PauliWord seed = PauliWord::parse(o.word.empty() ? "+1 0:X" : o.word);
  const SpacetimeGrid grid = evolve_grid(a, seed, o.steps);
  emit(o.out, [&](std::ostream& s) {
    if (o.format == "pgm")
      write_pgm(grid, s);
    else if (o.format == "csv")
      write_stats_csv(grid, s);
    else
      write_ascii(grid, s);
  });
}

void cmd_stab_ent(const Options& o) {
  const CscaMatrix a = load_automaton(o.automaton);
  const PhaseVector xi = parse_stabilizer_word(o.word.empty() ? "YXY" : o.word);
  const auto n = evolve_entanglement(a, xi, o.steps);
  std::vector<std::vector<std::int64_t>> regions;
  for (int L : o.windows) regions.push_back(evolve_entanglement(a, xi, o.steps, L));
  emit(o.out, [&](std::ostream& s) {
    s << "t,n,E_bipartite";
    for (int L : o.windows) s << ",E_region(" << L << ")";
    s << '\n';
    for (std::size_t t = 0; t < n.size(); ++t) {
      s << t << ',' << n[t] << ',' << n[t];
      for (const auto& r : regions) s << ',' << r[t];
      s << '\n';
    }
  });
}

void cmd_qf_ent(const Options& o) {
  const std::vector<double> as = o.amplitudes.empty() ? std::vector<double>{0.0} : o.amplitudes;
  const std::vector<int> ls = o.windows.empty() ? std::vector<int>{60} : o.windows;
  std::ostringstream buf;
  buf << "A,L,t,S\n";
  for (double A : as)
    for (int L : ls) {
      const auto s = entropy_timeseries(A, L, o.steps);
      for (std::size_t t = 0; t < s.size(); ++t) buf << num(A) << ',' << L << ',' << t << ',' << num(s[t]) << '\n';
    }
  emit(o.out, [&](std::ostream& s) { s << buf.str(); });
}

void cmd_expectation(const Options& o) {
  const CscaMatrix a = load_automaton(o.automaton);
  const ProductState st = parse_bloch(o.bloch);
  const PauliWord w = PauliWord::parse(o.word.empty() ? "+1 0:X" : o.word);
  const auto series = expectation_timeseries(a, st, w, o.steps);
  emit(o.out, [&](std::ostream& s) {
    s << "t,re,im\n";
    for (std::size_t t = 0; t < series.size(); ++t)
      s << t << ',' << num(series[t].real() + 0.0) << ',' << num(series[t].imag() + 0.0) << '\n';
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford quantum cellular automata toolkit"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "Seed for randomized sampling")->default_val(0);

  auto add_auto = [&](CLI::App* c) {
    c->add_option("--auto", o.automaton, "Gs, G, F, H, P, Gn:<n> or [[a11; a12]; [a21; a22]]");
  };
  auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "Output file (default stdout)"); };
  auto add_steps = [&](CLI::App* c) {
    c->add_option("--steps", o.steps, "Number of time steps")->check(CLI::NonNegativeNumber);
  };

  auto* classify_cmd = app.add_subcommand("classify", "Classify an automaton by its trace");
  add_auto(classify_cmd);
  add_out(classify_cmd);

  auto* glider_cmd = app.add_subcommand("glider", "Minimal glider of a glider automaton");
  add_auto(glider_cmd);
  add_out(glider_cmd);

  auto* conj_cmd = app.add_subcommand("conjugate", "Automaton mapping one glider vector to another");
  conj_cmd->add_option("--xi", o.xi, "Source vector \"(p | m)\"")->required();
  conj_cmd->add_option("--to", o.to, "Target vector (default (1 | u))");
  add_out(conj_cmd);

  auto* st_cmd = app.add_subcommand("spacetime", "Space-time diagram of a seed word");
  add_auto(st_cmd);
  st_cmd->add_option("--word", o.word, "Seed word, e.g. \"+1 0:X 1:Z\"");
  add_steps(st_cmd);
  st_cmd->add_option("--format", o.format, "ascii, pgm or csv")->check(CLI::IsMember({"ascii", "pgm", "csv"}));
  add_out(st_cmd);

  auto* stab_cmd = app.add_subcommand("stab-ent", "Stabilizer entanglement timeseries (CSV)");
  add_auto(stab_cmd);
  stab_cmd->add_option("--word", o.word, "Generator letters, e.g. YXY");
  add_steps(stab_cmd);
  stab_cmd->add_option("--window", o.windows, "Region length L (repeatable)")->check(CLI::PositiveNumber);
  add_out(stab_cmd);

  auto* qf_cmd = app.add_subcommand("qf-ent", "Quasifree entropy timeseries (CSV)");
  qf_cmd->add_option("--A", o.amplitudes, "Family parameter in [0, 1] (repeatable)");
  qf_cmd->add_option("--window", o.windows, "Window length L (repeatable)")->check(CLI::PositiveNumber);
  add_steps(qf_cmd);
  add_out(qf_cmd);

  auto* exp_cmd = app.add_subcommand("expectation", "Product-state expectation timeseries (CSV)");
  add_auto(exp_cmd);
  exp_cmd->add_option("--bloch", o.bloch, "Bloch vector x,y,z");
  exp_cmd->add_option("--word", o.word, "Observable, e.g. \"+1 0:X\"");
  add_steps(exp_cmd);
  add_out(exp_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*classify_cmd) cmd_classify(o);
    else if (*glider_cmd) cmd_glider(o);
    else if (*conj_cmd) cmd_conjugate(o);
    else if (*st_cmd) cmd_spacetime(o);
    else if (*stab_cmd) cmd_stab_ent(o);
    else if (*qf_cmd) cmd_qf_ent(o);
    else if (*exp_cmd) cmd_expectation(o);
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
