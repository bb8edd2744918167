#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fsr/census.hpp"
#include "fsr/cycles.hpp"
#include "fsr/omega.hpp"
#include "fsr/symfn.hpp"

namespace fsrtool {

namespace {

using ordered_json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

fsr::RegisterKind parse_register(const std::string& name) {
  if (name == "psr") return fsr::RegisterKind::psr;
  if (name == "csr") return fsr::RegisterKind::csr;
  throw UsageError("--register must be psr or csr");
}

std::string strip_whitespace(std::istream& in) {
  std::string out;
  char c;
  while (in.get(c)) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

// ---- cycles -------------------------------------------------------------

struct CyclesOptions {
  std::string reg = "csr";
  unsigned n = 0;
  std::string method = "formula";
  bool json = false;
};

int cmd_cycles(const CyclesOptions& o, std::ostream& out) {
  const auto kind = parse_register(o.reg);
  if (o.method != "formula" && o.method != "enumerate" && o.method != "both") {
    throw UsageError("--method must be formula, enumerate or both");
  }
  const bool want_formula = o.method != "enumerate";
  const bool want_enum = o.method != "formula";
  fsr::CensusTable formula{kind, o.n, fsr::CensusSource::formula, {}};
  fsr::CensusTable enumeration{kind, o.n, fsr::CensusSource::enumeration, {}};
  if (want_formula) formula = fsr::census(kind, o.n, fsr::CensusSource::formula);
  if (want_enum) enumeration = fsr::census(kind, o.n, fsr::CensusSource::enumeration);

  std::vector<std::uint64_t> lengths;
  for (const auto* t : {&formula, &enumeration}) {
    for (const auto& [d, c] : t->entries) lengths.push_back(d);
  }
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());

  auto count_in = [](const fsr::CensusTable& t, std::uint64_t d) {
    auto it = t.entries.find(d);
    return it == t.entries.end() ? fsr::Count(0) : it->second;
  };

  bool all_match = true;
  ordered_json rows = ordered_json::array();
  std::ostringstream text;
  text << "# " << fsr::to_string(kind) << " n=" << o.n << ": cycle lengths d divide n+1 = "
       << o.n + 1 << "\n";
  if (o.method == "both") {
    text << "d\tformula\tenumeration\tverdict\n";
  } else {
    text << "d\tcount\n";
  }
  for (auto d : lengths) {
    ordered_json row;
    row["d"] = d;
    text << d;
    if (o.method == "both") {
      const auto a = count_in(formula, d);
      const auto b = count_in(enumeration, d);
      const bool match = a == b;
      all_match = all_match && match;
      row["formula"] = a.str();
      row["enumeration"] = b.str();
      row["match"] = match;
      text << '\t' << a << '\t' << b << '\t' << (match ? "match" : "mismatch");
    } else {
      const auto c = count_in(want_formula ? formula : enumeration, d);
      row["count"] = c.str();
      text << '\t' << c;
    }
    text << '\n';
    rows.push_back(std::move(row));
  }

  if (o.json) {
    ordered_json doc;
    doc["command"] = "cycles";
    doc["register"] = o.reg;
    doc["n"] = o.n;
    doc["method"] = o.method;
    doc["convention"] = "cycle length d divides n+1";
    doc["rows"] = std::move(rows);
    if (o.method == "both") doc["match"] = all_match;
    out << doc.dump(2) << '\n';
  } else {
    out << text.str();
  }
  return all_match ? kExitOk : kExitFailure;
}

// ---- generate -----------------------------------------------------------

struct GenerateOptions {
  unsigned n = 0;
  std::string utable_file;
  std::string seed;
};

fsr::UTable load_utable(unsigned n, const std::string& path) {
  if (path.empty()) return fsr::default_utable(n);
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open bridge table file " + path);
  return parse_utable(n, file);
}

void require_valid_utable(unsigned n, const fsr::UTable& u) {
  const auto report = fsr::validate_utable(n, u);
  if (report.ok()) return;
  std::string msg = "invalid bridge table";
  for (const auto& v : report.violations) msg += "\n  " + v;
  throw UsageError(msg);
}

int cmd_generate(const GenerateOptions& o, std::ostream& out, std::ostream& err) {
  if (o.n < 2 || o.n > fsr::kMaxGeneratorOrder) {
    throw UsageError("--n must lie in [2, " + std::to_string(fsr::kMaxGeneratorOrder) + "]");
  }
  const auto u = load_utable(o.n, o.utable_file);
  require_valid_utable(o.n, u);
  const auto seed = o.seed.empty() ? fsr::default_seed(o.n) : fsr::State::from_bits(o.seed);
  if (seed.order() != o.n) throw UsageError("--seed must have exactly n bits");

  const auto bits = fsr::generate(o.n, u, seed);
  if (!fsr::verify_debruijn(bits, o.n)) {
    err << "generated stream failed the de Bruijn check\n";
    return kExitFailure;
  }
  out << bits << '\n';
  return kExitOk;
}

// ---- verify -------------------------------------------------------------

struct VerifyOptions {
  unsigned n = 0;
  std::string input;
};

int cmd_verify(const VerifyOptions& o, std::istream& in, std::ostream& out) {
  std::string seq;
  if (o.input.empty() || o.input == "-") {
    seq = strip_whitespace(in);
  } else {
    std::ifstream file(o.input);
    if (!file) throw UsageError("cannot open input file " + o.input);
    seq = strip_whitespace(file);
  }
  if (auto bad = seq.find_first_not_of("01"); bad != std::string::npos) {
    throw UsageError(std::string("parse error: unexpected character '") + seq[bad] +
                     "' at offset " + std::to_string(bad));
  }
  if (o.n < 1 || o.n > fsr::kMaxGeneratorOrder) {
    throw UsageError("--n must lie in [1, " + std::to_string(fsr::kMaxGeneratorOrder) + "]");
  }
  const auto check = fsr::check_debruijn(seq, o.n);
  if (check.ok) {
    out << "PASS\n";
    return kExitOk;
  }
  out << "FAIL";
  if (check.repeated_window) out << " repeated window " << *check.repeated_window;
  if (check.length != check.expected_length) {
    out << " length " << check.length << " expected " << check.expected_length;
  }
  out << '\n';
  return kExitFailure;
}

// ---- join ---------------------------------------------------------------

struct JoinOptions {
  unsigned n = 0;
  int k = -1;
  bool all = false;
  std::string utable_file;
  bool json = false;
};

int cmd_join(const JoinOptions& o, std::ostream& out) {
  if (o.n < 2) throw UsageError("--n must be at least 2");
  const auto f = fsr::FeedbackSpec::csr(o.n);
  std::vector<fsr::State> states;
  std::vector<std::pair<fsr::State, fsr::State>> pairs;
  std::string title;
  if (o.all) {
    const auto u = load_utable(o.n, o.utable_file);
    require_valid_utable(o.n, u);
    const auto full = fsr::join_main_cycles(o.n, u);
    states = full.states_from(fsr::default_seed(o.n));
    for (unsigned k = u.max_k(); k >= 1; --k) {
      pairs.emplace_back(u.bridge(k), fsr::companion(u.bridge(k)));
    }
    title = "full cycle";
  } else {
    if (o.k < 0 || static_cast<unsigned>(o.k) > o.n / 2) {
      throw UsageError("--k must lie in [0, " + std::to_string(o.n / 2) + "]");
    }
    const auto mc = fsr::build_main_cycle(f, static_cast<unsigned>(o.k));
    states = mc.cycle.states();
    pairs = mc.joins;
    title = "MC_" + std::to_string(o.k);
  }

  if (o.json) {
    ordered_json doc;
    doc["command"] = "join";
    doc["n"] = o.n;
    if (o.all) {
      doc["all"] = true;
    } else {
      doc["k"] = o.k;
    }
    doc["numbering"] = "state value + 1";
    ordered_json labels = ordered_json::array();
    for (const auto& s : states) labels.push_back(s.label());
    doc["states"] = std::move(labels);
    ordered_json joined = ordered_json::array();
    for (const auto& [a, b] : pairs) joined.push_back({a.label(), b.label()});
    doc["pairs"] = std::move(joined);
    out << doc.dump(2) << '\n';
    return kExitOk;
  }

  out << "# " << title << " of CSR n=" << o.n << ", states numbered value+1\n";
  out << "states:";
  for (const auto& s : states) out << ' ' << s.label();
  out << "\npairs:";
  for (const auto& [a, b] : pairs) out << " (" << a.label() << ',' << b.label() << ')';
  out << '\n';
  return kExitOk;
}

// ---- omega --------------------------------------------------------------

struct OmegaOptions {
  unsigned n = 0;
  std::string scope = "symmetric";
  bool json = false;
};

int cmd_omega(const OmegaOptions& o, std::ostream& out) {
  fsr::OmegaScope scope;
  if (o.scope == "exhaustive") {
    scope = fsr::OmegaScope::exhaustive;
  } else if (o.scope == "symmetric" || o.scope == "symmetric-only") {
    scope = fsr::OmegaScope::symmetric;
  } else {
    throw UsageError("--scope must be exhaustive or symmetric");
  }
  if (o.n < 2) throw UsageError("--n must be at least 2");
  const auto report = fsr::enumerate_omega(o.n, scope);
  constexpr std::size_t kExpected = 2;
  const bool ok = report.members.size() == kExpected;

  if (o.json) {
    ordered_json doc;
    doc["command"] = "omega";
    doc["n"] = o.n;
    doc["scope"] = scope == fsr::OmegaScope::exhaustive ? "exhaustive" : "symmetric";
    doc["candidates"] = report.verdicts.size();
    ordered_json members = ordered_json::array();
    for (const auto& f : report.members) {
      members.push_back({{"g", f.g_table().to_string()}, {"kind", fsr::to_string(f.kind())}});
    }
    doc["members"] = std::move(members);
    doc["count"] = report.members.size();
    doc["expected"] = kExpected;
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& f : report.members) {
      out << "member g=" << f.g_table().to_string() << " kind=" << fsr::to_string(f.kind()) << '\n';
    }
    out << "count=" << report.members.size() << " expected=" << kExpected << '\n';
  }
  return ok ? kExitOk : kExitFailure;
}

// ---- symfn --------------------------------------------------------------

int cmd_symfn(const std::string& direction, const std::string& vector, std::ostream& out) {
  if (vector.empty()) throw UsageError("vector must have at least one bit");
  const auto bits = fsr::bits_from_string(vector);
  fsr::BitVector result;
  if (direction == "v2a") {
    result = fsr::value_to_anf(bits);
  } else if (direction == "a2v") {
    result = fsr::anf_to_value(bits);
  } else {
    throw UsageError("direction must be v2a or a2v");
  }
  out << fsr::bits_to_string(result) << '\n';
  return kExitOk;
}

}  // namespace

fsr::UTable parse_utable(unsigned n, std::istream& in) {
  auto table = fsr::default_utable(n);
  std::string line;
  unsigned line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head)) continue;
    const auto where = "bridge table line " + std::to_string(line_no) + ": ";
    std::string bits;
    if (head.back() == ':') {
      head.pop_back();
      fields >> bits;
    } else if (auto colon = head.find(':'); colon != std::string::npos) {
      bits = head.substr(colon + 1);
      head.erase(colon);
    } else {
      throw std::invalid_argument(where + "expected \"k: bits\"");
    }
    std::string extra;
    if (bits.empty() || (fields >> extra)) {
      throw std::invalid_argument(where + "expected \"k: bits\"");
    }
    unsigned k = 0;
    try {
      std::size_t used = 0;
      k = static_cast<unsigned>(std::stoul(head, &used));
      if (used != head.size()) throw std::invalid_argument("k");
    } catch (const std::exception&) {
      throw std::invalid_argument(where + "k must be a positive integer, got \"" + head + "\"");
    }
    if (k < 1 || k > table.max_k()) {
      throw std::invalid_argument(where + "k = " + std::to_string(k) + " outside [1, " +
                                  std::to_string(table.max_k()) + "]");
    }
    if (bits.size() != n) {
      throw std::invalid_argument(where + "bridge needs " + std::to_string(n) + " bits, got \"" +
                                  bits + "\"");
    }
    try {
      table.set_bridge(k, fsr::State::from_bits(bits));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + e.what());
    }
  }
  return table;
}

std::string format_utable(const fsr::UTable& u) {
  std::string out;
  for (unsigned k = 1; k <= u.bridges().size(); ++k) {
    out += std::to_string(k) + ": " + u.bridge(k).to_string() + "\n";
  }
  return out;
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Shift-register cycle analysis and de Bruijn generation from CSR", "fsrtool"};
  app.require_subcommand(1);

  CyclesOptions cycles;
  auto* c = app.add_subcommand("cycles", "cycle-length census of PSR_n or CSR_n");
  c->add_option("--register", cycles.reg, "psr or csr")->default_val("csr");
  c->add_option("-n,--n", cycles.n, "register order")->required()->check(CLI::Range(2u, 4096u));
  c->add_option("--method", cycles.method, "formula, enumerate or both")->default_val("formula");
  c->add_flag("--json", cycles.json, "JSON output");

  GenerateOptions gen;
  auto* g = app.add_subcommand("generate", "de Bruijn sequence of order n from CSR_n");
  g->add_option("-n,--n", gen.n, "register order")->required();
  g->add_option("--utable", gen.utable_file, "bridge table file (\"k: bits\" per line)");
  g->add_option("--seed", gen.seed, "initial state bits (default 01...1)");

  VerifyOptions ver;
  auto* v = app.add_subcommand("verify", "check that a bit string is a de Bruijn cycle");
  v->add_option("-n,--n", ver.n, "order")->required();
  v->add_option("--input", ver.input, "input file (default stdin)");

  JoinOptions join;
  auto* j = app.add_subcommand("join", "main cycle MC_k of CSR_n by cycle joining");
  j->add_option("-n,--n", join.n, "register order")->required()->check(CLI::Range(2u, 22u));
  auto* k_opt = j->add_option("-k,--k", join.k, "extended weight index (weight 2k+1)");
  auto* all_opt = j->add_flag("--all", join.all, "join every MC_k through the bridge table");
  k_opt->excludes(all_opt);
  j->add_option("--utable", join.utable_file, "bridge table file for --all");
  j->add_flag("--json", join.json, "JSON output");

  OmegaOptions omega;
  auto* o = app.add_subcommand("omega", "search registers whose cycle lengths all divide n+1");
  o->add_option("-n,--n", omega.n, "register order")->required();
  o->add_option("--scope", omega.scope, "exhaustive or symmetric")->default_val("symmetric");
  o->add_flag("--json", omega.json, "JSON output");

  std::string direction;
  std::string vector;
  auto* s = app.add_subcommand("symfn", "convert symmetric-function value/ANF vectors");
  s->add_option("direction", direction, "v2a or a2v")->required();
  s->add_option("vector", vector, "bit vector")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*c) return cmd_cycles(cycles, out);
    if (*g) return cmd_generate(gen, out, err);
    if (*v) return cmd_verify(ver, in, out);
    if (*j) {
      if (!join.all && join.k < 0) throw UsageError("join needs --k or --all");
      return cmd_join(join, out);
    }
    if (*o) return cmd_omega(omega, out);
    if (*s) return cmd_symfn(direction, vector, out);
  } catch (const fsr::LimitError& e) {
    err << "refused: " << e.what() << '\n';
    return kExitUsage;
  } catch (const fsr::GenerationError& e) {
    err << "generation failed after " << e.steps() << " steps: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace fsrtool
