#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tribo/derivation.hpp"
#include "tribo/errors.hpp"
#include "tribo/report.hpp"
#include "tribo/sequences.hpp"
#include "tribo/symmetric.hpp"

namespace tribo::cli {

namespace {

using json = nlohmann::ordered_json;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, Format> kFormats{
    {"json", Format::Json}, {"tsv", Format::Tsv}, {"text", Format::Text}};

struct Common {
  Format format = Format::Text;
  std::string out_path;
  bool verbose = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "json, tsv or text")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  cmd->add_option("--out", c.out_path, "write the output to PATH instead of stdout");
  cmd->add_flag("-v,--verbose", c.verbose, "include parameters and notes");
}

void emit(const Common& c, const std::string& body, std::ostream& out) {
  if (c.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream file(c.out_path, std::ios::binary);
  if (!file) throw Usage("cannot open " + c.out_path);
  file << body;
}

std::string scaled_cell(const ScaledSeq& s) { return to_string(s.scale) + " " + s.triple.to_string(); }

std::string cmd_seq(const std::string& triple_text, long count, const Common& c) {
  if (count < 1) throw Usage("count must be at least 1");
  InitTriple triple;
  try {
    triple = parse_triple(triple_text);
  } catch (const std::invalid_argument& e) {
    throw Usage(e.what());
  }
  const auto terms = make_seq(triple).prefix(static_cast<std::size_t>(count));
  if (c.format == Format::Json) {
    json j = {{"triple", triple.to_string()}, {"terms", json::array()}};
    for (const auto& t : terms) j["terms"].push_back(t.get_str());
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  const char sep = c.format == Format::Tsv ? '\n' : ' ';
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (c.format == Format::Tsv) out << k << '\t' << terms[k] << sep;
    else out << (k ? " " : "") << terms[k];
  }
  if (c.format != Format::Tsv) out << '\n';
  return out.str();
}

std::string cmd_derive(const std::string& name, long n_max, bool replicate, const Common& c) {
  const auto kind = parse_family(name);
  if (!kind) throw Usage("unknown family: " + name);
  if (n_max < 1) throw Usage("n_max must be at least 1");
  std::optional<RecursionReport> replay;
  if (replicate) {
    if (*kind == FamilyKind::SumCofactorConst || *kind == FamilyKind::SumCofactorSqConst)
      throw Usage("no published recursion for " + name);
    if (n_max >= 2) replay = derive_paper_recursive(*kind, static_cast<unsigned>(n_max));
  }
  auto step_for = [&](long n) -> const RecursiveStep* {
    if (!replay) return nullptr;
    for (const auto& s : replay->steps)
      if (static_cast<long>(s.n) == n) return &s;
    return nullptr;
  };
  json rows = json::array();
  std::ostringstream text;
  if (c.format == Format::Tsv) {
    text << "n\tA\tA_factored\ttriple" << (replicate ? "\trecursive\tmatch" : "") << '\n';
  }
  for (long n = 1; n <= n_max; ++n) {
    const ScaledSeq s = derive({*kind, static_cast<unsigned>(n)});
    const std::string factored = s.integral_scale() ? factor_string(s.scale.get_num()) : to_string(s.scale);
    const RecursiveStep* step = step_for(n);
    std::string recursive = "-";
    std::string match = "-";
    if (step) {
      recursive = step->error ? "error: " + *step->error
                  : step->replicated ? scaled_cell(*step->replicated) : "-";
      match = step->match ? "yes" : "no";
    }
    if (c.format == Format::Json) {
      json row = {{"n", std::to_string(n)}, {"A", to_string(s.scale)},
                  {"A_factored", factored}, {"triple", s.triple.to_string()}};
      if (replicate) {
        row["recursive"] = recursive;
        row["match"] = match;
      }
      rows.push_back(row);
    } else if (c.format == Format::Tsv) {
      text << n << '\t' << to_string(s.scale) << '\t' << factored << '\t' << s.triple.to_string();
      if (replicate) text << '\t' << recursive << '\t' << match;
      text << '\n';
    } else {
      text << "n=" << n << "  A=" << to_string(s.scale) << " (" << factored << ")  "
           << s.triple.to_string();
      if (replicate) text << "  recursive: " << recursive << "  match: " << match;
      text << '\n';
    }
  }
  if (c.format == Format::Json) {
    json j = {{"family", name}, {"rows", rows}};
    if (replay) j["all_match"] = replay->all_match;
    return j.dump(2) + "\n";
  }
  return text.str();
}

int cmd_conjecture(long n_max, const Common& c, std::string& body) {
  if (n_max < 1) throw Usage("N must be at least 1");
  const ConjectureReport rep = conjecture_check(static_cast<unsigned>(n_max));
  std::ostringstream out;
  json rows = json::array();
  if (c.format == Format::Tsv) out << "n\tA1(2n)\tA2(n)\tequal\n";
  for (const auto& r : rep.rows) {
    const std::string a = to_string(r.a1_2n);
    const std::string b = to_string(r.a2_n);
    if (c.format == Format::Json) {
      rows.push_back({{"n", std::to_string(r.n)}, {"a1_2n", a}, {"a2_n", b}, {"equal", r.equal}});
    } else if (c.format == Format::Tsv) {
      out << r.n << '\t' << a << '\t' << b << '\t' << (r.equal ? "yes" : "no") << '\n';
    } else {
      const std::string f = r.a1_2n.get_den() == 1 ? factor_string(r.a1_2n.get_num()) : a;
      out << "n=" << r.n << "  " << a << (r.equal ? " = " : " != ") << b << "  (" << f << ")\n";
    }
  }
  if (c.format == Format::Json) {
    json j = {{"rows", rows}, {"holds", rep.holds}};
    j["first_counterexample"] =
        rep.first_counterexample ? json(std::to_string(*rep.first_counterexample)) : json(nullptr);
    body = j.dump(2) + "\n";
  } else {
    if (rep.holds) {
      out << (c.format == Format::Tsv ? "# " : "") << "verdict: A1(2n) = A2(n) for n = 1.."
          << n_max << '\n';
    } else {
      out << (c.format == Format::Tsv ? "# " : "") << "verdict: counterexample at n = "
          << *rep.first_counterexample << '\n';
    }
    body = out.str();
  }
  return rep.holds ? kPass : kUnexpectedFailure;
}

int cmd_symcheck(std::uint64_t seed, unsigned draws, unsigned grid, const Common& c,
                 std::string& body) {
  std::mt19937_64 rng(seed);
  bool all = true;
  std::ostringstream out;
  json rows = json::array();
  for (unsigned degree = 3; degree <= 5; ++degree) {
    unsigned held = 0;
    for (unsigned i = 0; i < draws; ++i) {
      const SymParams p = random_sym_params(degree, rng);
      SymCheck chk;
      try {
        chk = certify_sym_identity(degree, p, grid);
      } catch (const std::invalid_argument& e) {
        throw Usage(e.what());
      }
      held += chk.holds ? 1 : 0;
      all = all && chk.holds;
      if (c.format == Format::Json) {
        json row = {{"degree", std::to_string(degree)}, {"params", describe(p)}, {"holds", chk.holds}};
        if (chk.counterexample) {
          const auto& [a, b, cc] = *chk.counterexample;
          row["counterexample"] = std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(cc);
        }
        rows.push_back(row);
      } else if (c.verbose || !chk.holds) {
        out << "degree " << degree << "  " << describe(p) << "  " << (chk.holds ? "ok" : "FAILS");
        if (chk.counterexample) {
          const auto& [a, b, cc] = *chk.counterexample;
          out << " at (" << a << "," << b << "," << cc << ")";
        }
        out << '\n';
      }
    }
    if (c.format != Format::Json) {
      out << "degree " << degree << ": " << held << "/" << draws << " draws certified on grid "
          << grid << '\n';
    }
  }
  if (c.format == Format::Json) {
    body = json{{"seed", std::to_string(seed)}, {"grid", std::to_string(grid)},
                {"draws", rows}, {"holds", all}}.dump(2) + "\n";
  } else {
    body = out.str();
  }
  return all ? kPass : kUnexpectedFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Catalog& catalog) {
  CLI::App app{"Exact checks of Tribonacci convolution identities"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common seq_c, derive_c, verify_c, conj_c, sym_c;

  std::string triple_text;
  long count = 0;
  auto* seq = app.add_subcommand("seq", "print terms 0..COUNT-1 of T^(s0,s1,s2)");
  seq->add_option("triple", triple_text, "initial triple, e.g. 0,1,1")->required();
  seq->add_option("count", count, "number of terms")->required();
  add_common(seq, seq_c);

  std::string family;
  long derive_n = 0;
  bool replicate = false;
  auto* derive_cmd = app.add_subcommand("derive", "closed-form (A, triple) table for a power family");
  derive_cmd->add_option("family", family, "cpower, cofactor, sumcofactor, sumcofactorsq, pairsumsq")
      ->required();
  derive_cmd->add_option("nmax", derive_n, "largest power")->required();
  derive_cmd->add_flag("--replicate-paper", replicate, "also replay the published step recursion");
  add_common(derive_cmd, derive_c);

  std::string id;
  std::optional<long> n_max, m_max;
  std::uint64_t seed = 42;
  auto* verify = app.add_subcommand("verify", "verify one identity, or all");
  verify->add_option("id", id, "identity id or 'all'")->required();
  verify->add_option("--nmax", n_max, "override the upper index");
  verify->add_option("--mmax", m_max, "override the second upper index");
  verify->add_option("--seed", seed, "seed for generic parameter points");
  add_common(verify, verify_c);

  long conj_n = 0;
  auto* conj = app.add_subcommand("conjecture", "compare A1 of c^(2n) with A2 of cofactor^n");
  conj->add_option("N", conj_n, "largest n")->required();
  add_common(conj, conj_c);

  std::uint64_t sym_seed = 42;
  unsigned draws = 20;
  unsigned grid = 6;
  auto* sym = app.add_subcommand("symcheck", "grid-certify the symmetric expansions of degree 3..5");
  sym->add_option("--seed", sym_seed, "parameter seed");
  sym->add_option("--draws", draws, "draws per degree");
  sym->add_option("--grid", grid, "grid size g (points 0..g-1)");
  add_common(sym, sym_c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*seq) {
      emit(seq_c, cmd_seq(triple_text, count, seq_c), out);
      return kPass;
    }
    if (*derive_cmd) {
      emit(derive_c, cmd_derive(family, derive_n, replicate, derive_c), out);
      return kPass;
    }
    if (*conj) {
      std::string body;
      const int code = cmd_conjecture(conj_n, conj_c, body);
      emit(conj_c, body, out);
      return code;
    }
    if (*sym) {
      std::string body;
      const int code = cmd_symcheck(sym_seed, draws, grid, sym_c, body);
      emit(sym_c, body, out);
      return code;
    }
    VerifyOptions options;
    options.n_max = n_max;
    options.m_max = m_max;
    options.seed = seed;
    SummaryReport summary;
    if (id == "all") {
      summary = catalog.verify_all(options);
    } else {
      summary.seed = seed;
      VerifyReport rep = catalog.verify(id, options);
      switch (rep.status) {
        case Status::Pass: ++summary.passed; break;
        case Status::Fail: ++summary.failed; break;
        case Status::KnownDiscrepancy: ++summary.known_discrepancies; break;
        case Status::Vacuous: ++summary.vacuous; break;
      }
      summary.reports.push_back(std::move(rep));
    }
    emit(verify_c, render(summary, verify_c.format, verify_c.verbose), out);
    return summary.ok() ? kPass : kUnexpectedFailure;
  } catch (const Usage& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnknownIdentity& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const RangeTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUnexpectedFailure;
  }
}

}  // namespace tribo::cli
