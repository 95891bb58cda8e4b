#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fockq/errors.hpp"
#include "fockq/fockspace.hpp"
#include "fockq/operators.hpp"
#include "fockq/relations.hpp"
#include "fockq/scalars.hpp"
#include "fockq/statistics.hpp"

namespace fockq::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

enum class Mode { Exact, Numeric, Classical };

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Exact: return "exact";
    case Mode::Numeric: return "numeric";
    case Mode::Classical: return "classical";
  }
  return "?";
}

// Flags shared by the subcommands; each subcommand binds the ones it uses.
struct Flags {
  int n = 1;
  int m = 1;
  int p = 1;
  std::string mode = "exact";
  std::optional<std::string> q;
  std::optional<std::string> convention;
  double tol = 1e-9;
  std::string format;
  std::string out_path;
  std::size_t cap = kDefaultStateCap;
  unsigned workers = 0;
  std::vector<std::string> eps;
};

struct RunConfig {
  Signature sig{1, 0, 0};
  Mode mode = Mode::Exact;
  Convention convention = Convention::Unnormalized;
  Complex q{1.0, 0.0};
};

void add_signature_flags(CLI::App* app, Flags& f) {
  app->add_option("--n", f.n, "bosonic index count")->capture_default_str();
  app->add_option("--m", f.m, "fermionic index count")->capture_default_str();
  app->add_option("--p", f.p, "order of statistics")->capture_default_str();
  app->add_option("--cap", f.cap, "maximum number of basis states")->capture_default_str();
}

void add_mode_flags(CLI::App* app, Flags& f) {
  app->add_option("--mode", f.mode, "exact | numeric | classical")->capture_default_str();
  app->add_option("--q", f.q, "numeric q: a/b, decimal, or complex a+bi");
  app->add_option("--convention", f.convention, "orthonormal | unnormalized");
}

void add_output_flags(CLI::App* app, Flags& f, const std::string& formats) {
  app->add_option("--format", f.format, formats);
  app->add_option("--out", f.out_path, "write output to this file instead of stdout");
}

Mode parse_mode(const std::string& text) {
  if (text == "exact") return Mode::Exact;
  if (text == "numeric") return Mode::Numeric;
  if (text == "classical") return Mode::Classical;
  throw UsageError("--mode must be exact, numeric or classical, got '" + text + "'");
}

// `strict` rejects q = 1 and q = -1, where relations divide by q - 1/q.
RunConfig resolve(const Flags& f, bool strict) {
  RunConfig rc;
  rc.sig = Signature(f.n, f.m, f.p);
  rc.mode = parse_mode(f.mode);
  if (!(f.tol > 0.0)) throw UsageError("--tol must be positive");

  std::optional<Convention> conv;
  if (f.convention) {
    if (*f.convention == "orthonormal") {
      conv = Convention::Orthonormal;
    } else if (*f.convention == "unnormalized") {
      conv = Convention::Unnormalized;
    } else {
      throw UsageError("--convention must be orthonormal or unnormalized, got '" + *f.convention + "'");
    }
  }

  switch (rc.mode) {
    case Mode::Exact:
      if (f.q) throw UsageError("--q applies to numeric mode only; exact mode keeps q symbolic");
      if (conv == Convention::Orthonormal) throw UsageError("exact mode requires the unnormalized convention");
      rc.convention = Convention::Unnormalized;
      break;
    case Mode::Classical:
      if (f.q && parse_numeric_q(*f.q) != Complex(1.0, 0.0)) throw UsageError("classical mode fixes q = 1");
      if (conv == Convention::Orthonormal) throw UsageError("classical mode requires the unnormalized convention");
      rc.convention = Convention::Unnormalized;
      break;
    case Mode::Numeric:
      if (!f.q) throw UsageError("numeric mode requires --q");
      rc.q = parse_numeric_q(*f.q);
      if (strict) {
        (void)NumericRing(rc.q);
      } else {
        (void)NumericRing::for_construction(rc.q);
      }
      rc.convention = conv.value_or(Convention::Orthonormal);
      break;
  }
  return rc;
}

json q_json(const RunConfig& rc) {
  switch (rc.mode) {
    case Mode::Exact: return "symbolic";
    case Mode::Classical: return 1;
    case Mode::Numeric: return json::array({rc.q.real(), rc.q.imag()});
  }
  return nullptr;
}

json config_json(const RunConfig& rc) {
  json j;
  j["signature"] = to_json(rc.sig);
  j["mode"] = to_string(rc.mode);
  j["q"] = q_json(rc);
  j["convention"] = to_string(rc.convention);
  return j;
}

// Output goes to --out when given.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot open --out file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::string resolve_format(const std::string& given, const std::string& fallback, std::set<std::string> allowed) {
  const std::string fmt = given.empty() ? fallback : given;
  if (!allowed.count(fmt)) {
    std::string list;
    for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
    throw UsageError("--format must be one of " + list + ", got '" + fmt + "'");
  }
  return fmt;
}

// ---- dim ------------------------------------------------------------------

int cmd_dim(const Flags& f, std::ostream& out) {
  const Signature sig(f.n, f.m, f.p);
  json j;
  j["signature"] = to_json(sig);
  j["dimension"] = dimension(sig);
  json hist = json::object();
  for (const auto& [total, count] : state_count_by_total(sig, f.cap)) hist[std::to_string(total)] = count;
  j["histogram"] = hist;
  Sink sink(f.out_path, out);
  sink.stream() << j.dump() << '\n';
  return kExitOk;
}

// ---- matrix ---------------------------------------------------------------

struct OperatorSpec {
  std::string name;
  std::vector<int> indices;
};

OperatorSpec parse_operator(const std::vector<std::string>& words, const Signature& sig) {
  if (words.empty()) throw UsageError("matrix: missing operator spec");
  OperatorSpec spec{words[0], {}};
  for (std::size_t k = 1; k < words.size(); ++k) {
    try {
      std::size_t used = 0;
      spec.indices.push_back(std::stoi(words[k], &used));
      if (used != words[k].size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw UsageError("matrix: index '" + words[k] + "' is not an integer");
    }
  }
  static const std::map<std::string, int> arity = {{"a+", 1}, {"a-", 1}, {"H", 1},  {"L", 1},  {"Lbar", 1},
                                                   {"E", 2},  {"e^", 1}, {"f^", 1}, {"h^", 1}};
  const auto it = arity.find(spec.name);
  if (it == arity.end()) {
    throw UsageError("matrix: unknown operator '" + spec.name + "' (expected a+, a-, H, L, Lbar, E, e^, f^ or h^)");
  }
  if (static_cast<int>(spec.indices.size()) != it->second) {
    throw UsageError("matrix: operator '" + spec.name + "' takes " + std::to_string(it->second) + " index(es)");
  }
  const int lo = spec.name == "E" ? 0 : 1;
  for (int i : spec.indices) {
    if (i < lo || i > sig.rank()) {
      throw UsageError("matrix: index " + std::to_string(i) + " outside [" + std::to_string(lo) + ", " +
                       std::to_string(sig.rank()) + "]");
    }
  }
  return spec;
}

bool is_q1_only(const std::string& name) { return name == "E" || name == "e^" || name == "f^" || name == "h^"; }

template <class Ring>
MatrixOver<Ring> build_operator(const FockBasis& basis, const Ring& ring, Convention conv, const OperatorSpec& spec) {
  const int i = spec.indices.at(0);
  if (spec.name == "a+") return build_a_plus(basis, i, ring, conv);
  if (spec.name == "a-") return build_a_minus(basis, i, ring, conv);
  if (spec.name == "H") return build_H(basis, i, ring);
  if (spec.name == "L") return build_L(basis, i, ring);
  if (spec.name == "Lbar") return build_Lbar(basis, i, ring);
  if constexpr (std::is_same_v<Ring, ClassicalRing>) {
    if (spec.name == "E") return build_gl_generator(basis, i, spec.indices.at(1));
    const ChevalleySet ch = build_chevalley(basis);
    if (spec.name == "e^") return ch.e_hat(i);
    if (spec.name == "f^") return ch.f_hat(i);
    if (spec.name == "h^") return ch.h_hat(i);
  }
  throw UsageError("matrix: operator '" + spec.name + "' is not available in this mode");
}

json value_json(const LaurentPoly& v) { return to_json(v); }
json value_json(const Rational& v) { return rational_to_string(v); }
json value_json(const Complex& v) { return json::array({v.real(), v.imag()}); }

std::string value_text(const LaurentPoly& v, char) { return to_string(v); }
std::string value_text(const Rational& v, char) { return rational_to_string(v); }
std::string value_text(const Complex& v, char sep) { return format_double(v.real()) + sep + format_double(v.imag()); }

template <class T>
void write_matrix(std::ostream& os, const std::string& format, const FockBasis& basis, const RunConfig& rc,
                  const OperatorSpec& spec, const GradedMatrix<T>& a) {
  constexpr bool complex_values = std::is_same_v<T, Complex>;
  if (format == "json") {
    json j = config_json(rc);
    j["operator"] = spec.name;
    j["indices"] = spec.indices;
    j["dimension"] = a.dim();
    j["degree"] = a.degree() == Parity::Odd ? "odd" : "even";
    j["basis"] = to_json(basis)["states"];
    json entries = json::array();
    a.for_each([&](std::size_t r, std::size_t c, const T& v) {
      entries.push_back(json{{"row", r}, {"col", c}, {"value", value_json(v)}});
    });
    j["entries"] = std::move(entries);
    os << j.dump() << '\n';
  } else if (format == "coord") {
    os << "% " << spec.name;
    for (int i : spec.indices) os << ' ' << i;
    os << " dim " << a.dim() << " nnz " << a.nnz() << '\n';
    a.for_each([&](std::size_t r, std::size_t c, const T& v) { os << r << ' ' << c << ' ' << value_text(v, ' ') << '\n'; });
  } else {
    os << (complex_values ? "row,col,re,im" : "row,col,value") << '\n';
    a.for_each([&](std::size_t r, std::size_t c, const T& v) { os << r << ',' << c << ',' << value_text(v, ',') << '\n'; });
  }
}

int cmd_matrix(const Flags& f, const std::vector<std::string>& words, std::ostream& out) {
  const RunConfig rc = resolve(f, false);
  const OperatorSpec spec = parse_operator(words, rc.sig);
  if (is_q1_only(spec.name) && rc.mode != Mode::Classical) {
    throw UsageError("matrix: '" + spec.name + "' is reconstructed at q = 1 only; use --mode classical");
  }
  const std::string format = resolve_format(f.format, "json", {"json", "coord", "csv"});
  const FockBasis basis = enumerate(rc.sig, f.cap);
  Sink sink(f.out_path, out);
  switch (rc.mode) {
    case Mode::Exact:
      write_matrix(sink.stream(), format, basis, rc, spec, build_operator(basis, ExactRing{}, rc.convention, spec));
      break;
    case Mode::Classical:
      write_matrix(sink.stream(), format, basis, rc, spec, build_operator(basis, ClassicalRing{}, rc.convention, spec));
      break;
    case Mode::Numeric:
      write_matrix(sink.stream(), format, basis, rc, spec,
                   build_operator(basis, NumericRing::for_construction(rc.q), rc.convention, spec));
      break;
  }
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------

const std::vector<std::string> kSuites = {"deformed", "cartan-weyl", "classical", "serre", "gl", "vacuum", "ladder"};

std::vector<Rational> parse_levels(const std::vector<std::string>& given, int n) {
  std::vector<Rational> eps;
  for (const auto& text : given) eps.push_back(parse_rational(text));
  if (eps.empty()) eps.assign(static_cast<std::size_t>(n), Rational(1));
  if (eps.size() == 1 && n > 1) eps.assign(static_cast<std::size_t>(n), eps.front());
  if (eps.size() != static_cast<std::size_t>(n)) {
    throw UsageError("--eps needs 1 or " + std::to_string(n) + " values, got " + std::to_string(eps.size()));
  }
  return eps;
}

template <class Ring>
void run_deformed_suites(const FockBasis& basis, const Ring& ring, const RunConfig& rc, const std::set<std::string>& wanted,
                         const SuiteOptions& opts, std::vector<RelationReport>& reports) {
  const auto ops = build_cao_set(basis, ring, rc.convention);
  auto append = [&](std::vector<RelationReport> more) {
    for (auto& r : more) reports.push_back(std::move(r));
  };
  if (wanted.count("deformed")) append(verify_deformed_defining(ops, ring, opts));
  if (wanted.count("cartan-weyl")) append(verify_cartan_weyl(ops, ring, opts));
}

int cmd_verify(const Flags& f, const std::vector<std::string>& suites, bool all, std::ostream& out,
               std::ostream& err) {
  const RunConfig rc = resolve(f, true);
  const std::string format = resolve_format(f.format, "json", {"json", "csv"});
  if (all == !suites.empty()) throw UsageError("verify: give either --all or --suite");

  std::set<std::string> wanted;
  if (all) {
    wanted.insert(kSuites.begin(), kSuites.end());
    if (rc.mode == Mode::Classical) {
      wanted.erase("deformed");
      wanted.erase("cartan-weyl");
    }
  } else {
    for (const auto& s : suites) {
      if (std::find(kSuites.begin(), kSuites.end(), s) == kSuites.end()) {
        throw UsageError("verify: unknown suite '" + s + "'");
      }
      wanted.insert(s);
    }
    if (rc.mode == Mode::Classical && (wanted.count("deformed") || wanted.count("cartan-weyl"))) {
      throw UsageError("verify: the deformed and cartan-weyl suites need --mode exact or numeric");
    }
    if (wanted.count("ladder") && rc.sig.n() != rc.sig.m()) throw UsageError("verify: the ladder suite needs n = m");
  }

  const FockBasis basis = enumerate(rc.sig, f.cap);
  SuiteOptions opts;
  opts.tolerance = f.tol;
  opts.workers = f.workers;

  std::vector<RelationReport> reports;
  auto append = [&](std::vector<RelationReport> more) {
    for (auto& r : more) reports.push_back(std::move(r));
  };
  for (const auto& suite : kSuites) {
    if (!wanted.count(suite)) continue;
    if (suite == "deformed" || suite == "cartan-weyl") {
      if (suite == "cartan-weyl" && wanted.count("deformed")) continue;  // run together below
      std::set<std::string> pair;
      for (const char* s : {"deformed", "cartan-weyl"}) {
        if (wanted.count(s)) pair.insert(s);
      }
      if (rc.mode == Mode::Exact) {
        run_deformed_suites(basis, ExactRing{}, rc, pair, opts, reports);
      } else {
        run_deformed_suites(basis, NumericRing(rc.q), rc, pair, opts, reports);
      }
    } else if (suite == "classical") {
      append(verify_classical(basis, opts));
    } else if (suite == "serre") {
      append(verify_serre(basis, opts));
    } else if (suite == "gl") {
      append(verify_gl(basis, opts));
    } else if (suite == "vacuum") {
      switch (rc.mode) {
        case Mode::Exact: reports.push_back(verify_vacuum(basis, ExactRing{}, rc.convention, opts)); break;
        case Mode::Classical: reports.push_back(verify_vacuum(basis, ClassicalRing{}, rc.convention, opts)); break;
        case Mode::Numeric: reports.push_back(verify_vacuum(basis, NumericRing(rc.q), rc.convention, opts)); break;
      }
    } else if (suite == "ladder") {
      if (rc.sig.n() != rc.sig.m()) {
        RelationReport r;
        r.relation = RelationId::R33;
        r.variant = "needs n = m";
        r.status = Status::Skipped;
        reports.push_back(r);
      } else {
        append(verify_ladder_commutators(rc.sig, parse_levels(f.eps, rc.sig.n())));
      }
    }
  }

  const SuiteSummary summary = summarize(reports);
  Sink sink(f.out_path, out);
  if (format == "json") {
    json j = config_json(rc);
    j["tolerance"] = f.tol;
    j["suites"] = json::array();
    for (const auto& s : kSuites) {
      if (wanted.count(s)) j["suites"].push_back(s);
    }
    j["summary"] = json{{"passed", summary.passed}, {"failed", summary.failed}, {"skipped", summary.skipped}};
    json agg = json::array();
    for (const auto& a : aggregate(reports)) agg.push_back(to_json(a));
    j["aggregate"] = std::move(agg);
    j["reports"] = to_json(reports);
    sink.stream() << j.dump() << '\n';
  } else {
    auto join = [](const std::vector<int>& v) {
      std::string s;
      for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ";" : "") + std::to_string(v[k]);
      return s;
    };
    sink.stream() << "relation,variant,indices,signs,status,residual\n";
    for (const auto& r : reports) {
      sink.stream() << to_string(r.relation) << ',' << r.variant << ',' << join(r.indices) << ',' << join(r.signs)
                    << ',' << to_string(r.status) << ',' << (r.residual ? format_double(*r.residual) : "") << '\n';
    }
  }
  err << "verify: passed=" << summary.passed << " failed=" << summary.failed << " skipped=" << summary.skipped
      << '\n';
  return summary.ok() ? kExitOk : kExitVerificationFailed;
}

// ---- stats ----------------------------------------------------------------

int cmd_stats_config(const Flags& f, const std::string& box, std::ostream& out) {
  if (f.p < 0) throw UsageError("--p must be non-negative");
  const OrbitalConfig config = parse_box_string(box, f.p);
  const ConfigVerdict verdict = validate_config(config);
  json j;
  j["p"] = config.p;
  j["boxes"] = to_box_string(config);
  json orbitals = json::array();
  for (const auto& o : config.orbitals) orbitals.push_back(json{{"b", o.b}, {"f", o.f}});
  j["orbitals"] = std::move(orbitals);
  j["total"] = config.total();
  const json verdict_json = to_json(verdict);
  for (const auto& [k, v] : verdict_json.items()) j[k] = v;
  if (verdict.verdict == Verdict::Valid) {
    json adds = json::array();
    for (const auto& a : allowed_additions(config)) adds.push_back(json{{"b", a.b}, {"f", a.f}});
    j["allowed_additions"] = std::move(adds);
  }
  Sink sink(f.out_path, out);
  sink.stream() << j.dump() << '\n';
  return kExitOk;
}

int cmd_stats_sweep(const Flags& f, const std::string& beta_text, std::ostream& out) {
  const Signature sig(f.n, f.m, f.p);
  if (sig.n() != sig.m()) throw UsageError("stats sweep: needs n = m");
  const std::string format = resolve_format(f.format, "csv", {"csv", "json"});
  EnergyLevels levels;
  for (const auto& e : parse_levels(f.eps, sig.n())) levels.eps.push_back(to_double(e));
  const std::vector<double> betas = parse_beta_range(beta_text);
  const FockBasis basis = enumerate(sig, f.cap);

  Sink sink(f.out_path, out);
  auto& os = sink.stream();
  if (format == "csv") {
    os << "beta,Z";
    for (int i = 1; i <= sig.n(); ++i) os << ",mean_occ_" << i;
    os << '\n';
    for (double beta : betas) {
      const PartitionResult r = partition_function(basis, levels, beta);
      os << format_double(beta) << ',' << format_double(r.Z);
      for (double occ : r.mean_occupations) os << ',' << format_double(occ);
      os << '\n';
    }
  } else {
    json rows = json::array();
    for (double beta : betas) {
      const PartitionResult r = partition_function(basis, levels, beta);
      rows.push_back(json{{"beta", beta}, {"Z", r.Z}, {"mean_occupations", r.mean_occupations}});
    }
    json j;
    j["signature"] = to_json(sig);
    j["eps"] = levels.eps;
    j["sweep"] = std::move(rows);
    os << j.dump() << '\n';
  }
  return kExitOk;
}

}  // namespace

Complex parse_numeric_q(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  }
  if (text.empty()) throw ArgumentError("q: empty value");
  if (text.back() != 'i') return {to_double(parse_rational(text)), 0.0};

  const std::string body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not leading and not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "0" : body.substr(0, split);
  std::string im = split == std::string::npos ? body : body.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {to_double(parse_rational(re)), to_double(parse_rational(im))};
}

std::vector<double> parse_beta_range(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() == 1) return {to_double(parse_rational(parts[0]))};
  if (parts.size() != 3) throw ArgumentError("beta range must be start:stop:step, got '" + text + "'");
  const Rational start = parse_rational(parts[0]);
  const Rational stop = parse_rational(parts[1]);
  const Rational step = parse_rational(parts[2]);
  if (sgn(step) <= 0) throw ArgumentError("beta range: step must be positive");
  if (stop < start) throw ArgumentError("beta range: stop is below start");
  std::vector<double> out;
  for (Rational b = start; b <= stop; b += step) {
    out.push_back(to_double(b));
    if (out.size() > 1000000) throw ArgumentError("beta range: more than 10^6 points");
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fock representations of sl(n+1|m) and U_q[sl(n+1|m)]: matrices, relation checks, statistics", "fockq"};
  app.require_subcommand(1);

  Flags flags;
  std::vector<std::string> op_words;
  std::vector<std::string> suites;
  bool all = false;
  std::string box;
  std::string beta = "0:1:1";

  auto* dim = app.add_subcommand("dim", "dimension and per-total histogram of W_p");
  add_signature_flags(dim, flags);
  dim->add_option("--out", flags.out_path, "write output to this file instead of stdout");

  auto* matrix = app.add_subcommand("matrix", "dump one operator matrix");
  matrix->add_option("operator", op_words, "a+ i | a- i | H i | L i | Lbar i | E i j | e^ i | f^ i | h^ i")
      ->required()
      ->allow_extra_args();
  add_signature_flags(matrix, flags);
  add_mode_flags(matrix, flags);
  add_output_flags(matrix, flags, "json | coord | csv");

  auto* verify = app.add_subcommand("verify", "run relation suites");
  verify->add_option("--suite", suites, "deformed, cartan-weyl, classical, serre, gl, vacuum, ladder")->delimiter(',');
  verify->add_flag("--all", all, "run every suite the mode supports");
  verify->add_option("--tol", flags.tol, "relative residual bound in numeric mode")->capture_default_str();
  verify->add_option("--workers", flags.workers, "worker threads, 0 = available parallelism")->capture_default_str();
  verify->add_option("--eps", flags.eps, "ladder energy levels (rational)")->delimiter(',');
  add_signature_flags(verify, flags);
  add_mode_flags(verify, flags);
  add_output_flags(verify, flags, "json | csv");

  auto* stats = app.add_subcommand("stats", "exclusion statistics");
  stats->require_subcommand(1);
  auto* config = stats->add_subcommand("config", "validate a box configuration");
  config->add_option("boxes", box, "e.g. \"2b1f|1b||\" or \"•◦•|◦•||||\"")->required();
  config->add_option("--p", flags.p, "order of statistics")->required();
  config->add_option("--out", flags.out_path, "write output to this file instead of stdout");
  auto* sweep = stats->add_subcommand("sweep", "partition function over a beta range");
  add_signature_flags(sweep, flags);
  sweep->add_option("--eps", flags.eps, "energy levels, one per orbital")->delimiter(',');
  sweep->add_option("--beta", beta, "start:stop:step (stop inclusive) or a single value")->capture_default_str();
  add_output_flags(sweep, flags, "csv | json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*dim) return cmd_dim(flags, out);
    if (*matrix) return cmd_matrix(flags, op_words, out);
    if (*verify) return cmd_verify(flags, suites, all, out, err);
    if (*config) return cmd_stats_config(flags, box, out);
    if (*sweep) return cmd_stats_sweep(flags, beta, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const StateCapExceeded& e) {
    err << "error: " << e.what() << " (raise --cap)\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fockq::cli
