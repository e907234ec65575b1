// radon: experiment harness for the discrete Radon operator toolkit.
//
// Exit codes: 0 success, 1 assertion failure, 2 invalid configuration.
// All outputs are deterministic given (flags, --seed) and RADON_THREADS.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "radon/acceptance.hpp"
#include "radon/arithmetic.hpp"
#include "radon/expsums.hpp"
#include "radon/gauss_scan.hpp"
#include "radon/geometry.hpp"
#include "radon/kernels.hpp"
#include "radon/lattice_function.hpp"
#include "radon/multiindex.hpp"
#include "radon/operators.hpp"
#include "radon/polynomial.hpp"
#include "radon/rademacher_menshov.hpp"
#include "radon/rng.hpp"

namespace {

using nlohmann::ordered_json;

// thrown after outputs are written when a checked property failed (exit 1)
struct AssertionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file: " + tmp);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed: " + path);
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << "\n";
  }
  return out.str();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<std::int64_t> parse_i64_list(const std::string& s) {
  std::vector<std::int64_t> out;
  for (const auto& tok : split_list(s)) out.push_back(std::stoll(tok));
  return out;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  for (const auto& tok : split_list(s)) out.push_back(std::stod(tok));
  return out;
}

// "a1,a2,.../q"
std::pair<std::vector<std::int64_t>, std::int64_t> parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) throw std::invalid_argument("rational spec needs 'a,.../q'");
  return {parse_i64_list(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
}

// mapping specs: "moment:<d>" (y, y^2, ..., y^d), "canonical:k=<k>,N0=<n>",
// an inline JSON object, or a path to a JSON file
// {"k":..., "d0":..., "terms": [[{"gamma":[...], "c":...}, ...], ...]}.
radon::PolynomialMapping parse_mapping(const std::string& spec) {
  if (spec.rfind("moment:", 0) == 0) {
    int d = std::stoi(spec.substr(7));
    if (d < 1 || d > 12) throw std::invalid_argument("moment mapping degree must be in [1,12]");
    std::vector<std::vector<std::int64_t>> rows;
    for (int j = 1; j <= d; ++j) {
      std::vector<std::int64_t> row(static_cast<std::size_t>(j), 0);
      row.back() = 1;
      rows.push_back(row);
    }
    return radon::PolynomialMapping::one_dim(rows);
  }
  if (spec.rfind("canonical:", 0) == 0) {
    int k = -1, N0 = -1;
    for (const auto& tok : split_list(spec.substr(10))) {
      if (tok.rfind("k=", 0) == 0) k = std::stoi(tok.substr(2));
      else if (tok.rfind("N0=", 0) == 0) N0 = std::stoi(tok.substr(3));
      else throw std::invalid_argument("canonical mapping: unknown field '" + tok + "'");
    }
    if (k < 1 || N0 < 1) throw std::invalid_argument("canonical mapping needs k>=1, N0>=1");
    return radon::PolynomialMapping::canonical(radon::build_gamma(k, N0));
  }
  std::string text;
  if (!spec.empty() && spec.front() == '{') {
    text = spec;
  } else {
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot read mapping file: " + spec);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  ordered_json j = ordered_json::parse(text);
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "k" && key != "d0" && key != "terms")
      throw std::invalid_argument("mapping json: unknown key '" + key + "'");
  }
  radon::PolynomialMapping P;
  P.k = j.at("k").get<int>();
  P.d0 = j.at("d0").get<int>();
  for (const auto& comp : j.at("terms")) {
    std::vector<std::pair<radon::MultiIndex, std::int64_t>> terms;
    for (const auto& t : comp) {
      for (const auto& [key, value] : t.items()) {
        (void)value;
        if (key != "gamma" && key != "c")
          throw std::invalid_argument("mapping json: unknown term key '" + key + "'");
      }
      terms.emplace_back(t.at("gamma").get<radon::MultiIndex>(), t.at("c").get<std::int64_t>());
    }
    P.terms.push_back(std::move(terms));
  }
  P.validate();
  return P;
}

radon::CZKernel resolve_kernel(const std::string& name, int k) {
  return radon::make_builtin_kernel(name.empty() ? (k == 1 ? "hilbert" : "riesz-1") : name, k);
}

int log2_exact(std::int64_t N) {
  int n = 0;
  while ((std::int64_t{1} << n) < N) ++n;
  if ((std::int64_t{1} << n) != N)
    throw std::invalid_argument("dyadic operators need N to be a power of two");
  return n;
}

radon::FunctionFamily parse_family(const std::string& spec, int dim, std::uint64_t seed) {
  radon::FunctionFamily fam;
  if (spec.rfind("deltas:", 0) == 0) {
    int n = std::stoi(spec.substr(7));
    if (n < 1 || n > 64) throw std::invalid_argument("family deltas:<n> needs n in [1,64]");
    for (int j = 0; j < n; ++j) {
      radon::Point p(static_cast<std::size_t>(dim), 0);
      p[0] = j;
      fam.members.push_back(radon::delta(p));
    }
  } else if (spec.rfind("random:", 0) == 0) {
    int n = std::stoi(spec.substr(7));
    if (n < 1 || n > 64) throw std::invalid_argument("family random:<n> needs n in [1,64]");
    radon::CounterRng rng = radon::CounterRng(seed).split("family");
    for (int j = 0; j < n; ++j) {
      radon::LatticeFunction f(dim);
      for (int t = 0; t < 3; ++t) {
        radon::Point p(static_cast<std::size_t>(dim));
        for (int c = 0; c < dim; ++c) p[static_cast<std::size_t>(c)] = rng.next_int(-4, 4);
        f.set(p, rng.next_complex(1.0));
      }
      fam.members.push_back(f);
    }
  } else {
    throw std::invalid_argument("family spec must be deltas:<n> or random:<n>");
  }
  fam.validate();
  return fam;
}

// --config <file>: JSON object whose keys are the long option names of the
// chosen subcommand. Flags already present on the command line win. Unknown
// keys are a schema error (exit 2).
std::vector<std::string> expand_config(const CLI::App& app, std::vector<std::string> args) {
  std::size_t cfgAt = args.size();
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == "--config") cfgAt = i;
  if (cfgAt == args.size()) return args;

  const std::string path = args[cfgAt + 1];
  std::string subName;
  for (const auto& a : args)
    if (!a.empty() && a[0] != '-') {
      subName = a;
      break;
    }
  if (subName.empty()) throw std::invalid_argument("--config requires a subcommand");
  const CLI::App* sub = nullptr;
  for (const CLI::App* s : app.get_subcommands(nullptr))
    if (s->get_name() == subName) sub = s;
  if (!sub) throw std::invalid_argument("unknown subcommand '" + subName + "'");

  std::set<std::string> known, flagsOnly;
  for (const CLI::Option* opt : sub->get_options()) {
    for (const auto& n : opt->get_lnames()) {
      known.insert(n);
      if (opt->get_expected_min() == 0) flagsOnly.insert(n);
    }
  }
  std::set<std::string> present;
  for (const auto& a : args)
    if (a.rfind("--", 0) == 0) present.insert(a.substr(2));

  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file: " + path);
  ordered_json cfg = ordered_json::parse(in, nullptr, true);
  if (!cfg.is_object()) throw std::invalid_argument("config must be a JSON object");

  std::vector<std::string> out(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(cfgAt));
  out.insert(out.end(), args.begin() + static_cast<std::ptrdiff_t>(cfgAt) + 2, args.end());
  for (const auto& [key, value] : cfg.items()) {
    if (!known.count(key)) throw std::invalid_argument("config: unknown key '" + key + "'");
    if (present.count(key)) continue;
    if (flagsOnly.count(key)) {
      if (!value.is_boolean()) throw std::invalid_argument("config: '" + key + "' must be a boolean");
      if (value.get<bool>()) out.push_back("--" + key);
      continue;
    }
    std::string v;
    if (value.is_string()) v = value.get<std::string>();
    else if (value.is_number_integer()) v = std::to_string(value.get<std::int64_t>());
    else if (value.is_number_float()) v = fmt17(value.get<double>());
    else if (value.is_boolean()) v = value.get<bool>() ? "true" : "false";
    else throw std::invalid_argument("config: unsupported value type for '" + key + "'");
    out.push_back("--" + key);
    out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// subcommand state

struct Cli {
  // shared
  std::string output = "-";
  std::uint64_t seed = 7;
  std::string configPath;  // registered so --config appears in help

  // apply / maximal
  std::string kind = "avg";
  std::string mapping = "moment:2";
  std::string kernel;
  std::int64_t N = 8;
  std::string input;
  std::string grid = "dyadic:4";

  // normratio
  std::string pList = "2";
  std::string family = "deltas:1";

  // expsums
  int k = 1;
  int degree = 2;
  int N0 = 2;
  std::string xi;
  std::string rational;
  std::string Nlist = "4,8,16";
  int d = 2;
  std::int64_t q = 0;
  std::string a;
  std::int64_t qmax = 0;
  double slack = 0.05;
  double L1 = 0.0, L2 = 1.0, L3 = 2.0;
  bool edgeOffset = false;
  int gamma0 = 2;
  double alpha = 0.0;
  std::string phase = "minor";

  // arithmetic
  double rho = 1.0;
  std::int64_t listMax = 200;
  int partitionK = 1;
  std::string primes = "5,7,11";
  int D = 2;
  std::int64_t odecompN = 0;

  // rm
  bool rmCheck = false;
  int s = 3;
  std::int64_t trials = 1000;
  std::int64_t j0 = -1;

  // lattice
  std::string body = "ball:r=50";
  int latticeK = 2;
  double latticeS = 1.0;
  double sigma = 0.0;
  double delta = 0.0;

  // verify
  std::string suite = "all";
};

void add_common(CLI::App* sub, Cli& c) {
  sub->add_option("--output", c.output, "output path ('-' = stdout)");
  sub->add_option("--config", c.configPath,
                  "JSON config file; keys are this subcommand's long options");
}

const std::vector<std::string> kCsvHeader{"N", "value_re", "value_im", "bound", "ratio"};

std::vector<std::string> csv_row(std::int64_t N, radon::cplx v, double bound, double ratio) {
  return {std::to_string(N), fmt17(v.real()), fmt17(v.imag()), fmt17(bound), fmt17(ratio)};
}

// lex-ordered monomials of total degree 1..degree, as used by WeylPhase
std::vector<radon::MultiIndex> phase_gammas(int k, int degree) {
  return radon::WeylPhase::zero(k, degree).gammas;
}

radon::WeylPhase build_phase(const Cli& c) {
  radon::WeylPhase ph = radon::WeylPhase::zero(c.k, c.degree);
  const auto& gs = ph.gammas;
  if (!c.rational.empty()) {
    auto [nums, den] = parse_rational(c.rational);
    if (nums.size() != gs.size())
      throw std::invalid_argument("rational spec needs one numerator per monomial (" +
                                  std::to_string(gs.size()) + ")");
    for (std::size_t i = 0; i < gs.size(); ++i) ph.set_rational(gs[i], nums[i], den);
    return ph;
  }
  if (c.xi.empty()) throw std::invalid_argument("weyl needs --xi or --rational");
  auto vals = parse_double_list(c.xi);
  if (vals.size() != gs.size())
    throw std::invalid_argument("--xi needs one value per monomial (" +
                                std::to_string(gs.size()) + " for k=" + std::to_string(c.k) +
                                ", degree=" + std::to_string(c.degree) + ")");
  for (std::size_t i = 0; i < gs.size(); ++i) ph.set(gs[i], vals[i]);
  return ph;
}

int run(int argc, char** argv) {
  CLI::App app{"radon: discrete Radon operators, exponential sums, and the acceptance suite"};
  app.require_subcommand(1);
  app.footer("Thread count comes from RADON_THREADS (default 1); reductions are\n"
             "order-fixed, so results are identical for any thread count.");
  Cli c;
  int rc = 0;

  // ---- apply ----
  CLI::App* apply = app.add_subcommand("apply", "apply M_N / T_N / dyadic partial sums");
  apply->add_option("--kind", c.kind, "avg | trunc | dyadic")->capture_default_str();
  apply->add_option("--mapping", c.mapping, "moment:<d> | canonical:k=..,N0=.. | json")
      ->capture_default_str();
  apply->add_option("--kernel", c.kernel, "hilbert | riesz-<i> (trunc/dyadic)");
  apply->add_option("--N", c.N, "truncation parameter")->capture_default_str();
  apply->add_option("--input", c.input, "lattice function JSON file")->required();
  add_common(apply, c);
  apply->callback([&] {
    radon::PolynomialMapping P = parse_mapping(c.mapping);
    radon::LatticeFunction f = radon::load_lattice_function(c.input);
    radon::OperatorKind kind = radon::parse_operator_kind(c.kind);
    radon::OperatorResult res;
    if (kind == radon::OperatorKind::average) {
      res = radon::apply_average(f, P, c.N);
    } else if (kind == radon::OperatorKind::truncated) {
      radon::CZKernel K = resolve_kernel(c.kernel, P.k);
      res = radon::apply_truncated(f, P, K, c.N);
    } else {
      int n = log2_exact(c.N);
      radon::CZKernel K = resolve_kernel(c.kernel, P.k);
      auto pieces = radon::dyadic_decompose_kernel(K, n);
      res = radon::apply_dyadic_singular_sum(f, P, pieces, n);
    }
    write_output(c.output, radon::to_json_string(res.g) + "\n");
  });

  // ---- maximal ----
  CLI::App* maximal = app.add_subcommand("maximal", "pointwise sup over a grid of N");
  maximal->add_option("--kind", c.kind, "avg | trunc | dyadic")->capture_default_str();
  maximal->add_option("--mapping", c.mapping, "mapping spec")->capture_default_str();
  maximal->add_option("--kernel", c.kernel, "kernel for trunc/dyadic");
  maximal->add_option("--grid", c.grid, "dyadic:<nmax> or comma list")->capture_default_str();
  maximal->add_option("--input", c.input, "lattice function JSON file")->required();
  add_common(maximal, c);
  maximal->callback([&] {
    radon::PolynomialMapping P = parse_mapping(c.mapping);
    radon::LatticeFunction f = radon::load_lattice_function(c.input);
    radon::OperatorKind kind = radon::parse_operator_kind(c.kind);
    std::vector<std::int64_t> grid = radon::parse_grid(c.grid);
    radon::LatticeFunction g;
    if (kind == radon::OperatorKind::average) {
      g = radon::maximal(f, P, kind, grid);
    } else {
      radon::CZKernel K = resolve_kernel(c.kernel, P.k);
      if (kind == radon::OperatorKind::truncated) {
        g = radon::maximal(f, P, kind, grid, &K);
      } else {
        int jmax = 0;
        for (std::int64_t n : grid) jmax = std::max(jmax, log2_exact(n));
        auto pieces = radon::dyadic_decompose_kernel(K, jmax);
        g = radon::maximal(f, P, kind, grid, &K, &pieces);
      }
    }
    write_output(c.output, radon::to_json_string(g) + "\n");
  });

  // ---- normratio ----
  CLI::App* normratio = app.add_subcommand("normratio", "maximal-vs-family norm ratios");
  normratio->add_option("--p", c.pList, "comma list of exponents p > 1")->capture_default_str();
  normratio->add_option("--grid", c.grid, "grid spec")->capture_default_str();
  normratio->add_option("--family", c.family, "deltas:<n> | random:<n>")->capture_default_str();
  normratio->add_option("--mapping", c.mapping, "mapping spec")->capture_default_str();
  normratio->add_option("--kind", c.kind, "avg | trunc | dyadic")->capture_default_str();
  normratio->add_option("--kernel", c.kernel, "kernel for trunc/dyadic");
  normratio->add_option("--seed", c.seed, "seed for random families")->capture_default_str();
  add_common(normratio, c);
  normratio->callback([&] {
    radon::PolynomialMapping P = parse_mapping(c.mapping);
    radon::OperatorKind kind = radon::parse_operator_kind(c.kind);
    std::vector<std::int64_t> grid = radon::parse_grid(c.grid);
    radon::FunctionFamily fam = parse_family(c.family, P.d0, c.seed);
    radon::CZKernel K = resolve_kernel(c.kernel, P.k);
    std::vector<radon::DyadicKernelPiece> pieces;
    const radon::CZKernel* Kp = nullptr;
    const std::vector<radon::DyadicKernelPiece>* piecesP = nullptr;
    if (kind != radon::OperatorKind::average) {
      Kp = &K;
      if (kind == radon::OperatorKind::dyadicSum) {
        int jmax = 0;
        for (std::int64_t n : grid) jmax = std::max(jmax, log2_exact(n));
        pieces = radon::dyadic_decompose_kernel(K, jmax);
        piecesP = &pieces;
      }
    }
    std::vector<std::vector<std::string>> rows;
    for (double p : parse_double_list(c.pList)) {
      radon::NormRatioReport rep = radon::norm_ratio_experiment(fam, P, kind, p, grid, Kp, piecesP);
      rows.push_back({fmt17(p), fmt17(rep.ratio), fmt17(rep.numerator), fmt17(rep.denominator)});
    }
    write_output(c.output, csv_table({"p", "ratio", "numerator", "denominator"}, rows));
  });

  // ---- weyl ----
  CLI::App* weyl = app.add_subcommand("weyl", "Weyl sums over the window {1..N}^k");
  weyl->add_option("--k", c.k, "number of variables")->capture_default_str();
  weyl->add_option("--degree", c.degree, "phase degree")->capture_default_str();
  weyl->add_option("--xi", c.xi, "phase coefficients, lex monomial order");
  weyl->add_option("--rational", c.rational, "exact phase 'a1,a2,.../q'");
  weyl->add_option("--N", c.Nlist, "comma list of window sizes")->capture_default_str();
  add_common(weyl, c);
  weyl->callback([&] {
    radon::WeylPhase ph = build_phase(c);
    std::vector<std::vector<std::string>> rows;
    for (std::int64_t N : parse_i64_list(c.Nlist)) {
      radon::cplx S = radon::weyl_sum(ph, radon::ConvexBody::window(c.k, N));
      double bound = std::pow(static_cast<double>(N), c.k);
      rows.push_back(csv_row(N, S, bound, std::abs(S) / bound));
    }
    write_output(c.output, csv_table(kCsvHeader, rows));
  });

  // ---- gauss ----
  CLI::App* gauss = app.add_subcommand("gauss", "Gauss sums G(a/q) for the moment mapping");
  gauss->add_option("--d", c.d, "moment-curve degree (k=1)")->capture_default_str();
  gauss->add_option("--q", c.q, "denominator (with --a)");
  gauss->add_option("--a", c.a, "numerators 'a1,..,ad'");
  gauss->add_option("--qmax", c.qmax, "scan max_a |G(a/q)| for q <= qmax");
  gauss->add_option("--slack", c.slack, "decay-bound exponent slack")->capture_default_str();
  add_common(gauss, c);
  gauss->callback([&] {
    radon::MultiIndexSet gamma = radon::build_gamma(1, c.d);
    std::vector<std::vector<std::string>> rows;
    if (c.qmax > 0) {
      for (const auto& row : radon::gauss_max_scan(c.d, c.qmax, c.slack))
        rows.push_back(csv_row(row.q, {row.maxAbsG, 0.0}, row.bound, row.ratio));
    } else {
      if (c.q < 1 || c.a.empty())
        throw std::invalid_argument("gauss needs --q and --a, or --qmax");
      radon::RationalPoint pt(parse_i64_list(c.a), c.q);
      radon::cplx G = radon::gauss_sum(pt, gamma);
      double bound = std::pow(static_cast<double>(c.q), -1.0 / c.d);
      rows.push_back(csv_row(c.q, G, bound, std::abs(G) / bound));
    }
    write_output(c.output, csv_table(kCsvHeader, rows));
  });

  // ---- multiplier ----
  CLI::App* multiplier = app.add_subcommand("multiplier", "averaging multiplier m_N(xi)");
  multiplier->add_option("--k", c.k, "variables")->capture_default_str();
  multiplier->add_option("--N0", c.N0, "monomial box degree")->capture_default_str();
  multiplier->add_option("--xi", c.xi, "frequency, one value per monomial")->required();
  multiplier->add_option("--N", c.Nlist, "comma list of N")->capture_default_str();
  add_common(multiplier, c);
  multiplier->callback([&] {
    radon::MultiIndexSet gamma = radon::build_gamma(c.k, c.N0);
    radon::TorusPoint xi(parse_double_list(c.xi));
    if (xi.dim() != gamma.dim())
      throw std::invalid_argument("--xi needs " + std::to_string(gamma.dim()) + " values");
    std::vector<std::vector<std::string>> rows;
    for (std::int64_t N : parse_i64_list(c.Nlist)) {
      radon::cplx m = radon::multiplier_m(xi, N, gamma);
      rows.push_back(csv_row(N, m, 1.0, std::abs(m)));
    }
    write_output(c.output, csv_table(kCsvHeader, rows));
  });

  // ---- phi ----
  CLI::App* phiCmd = app.add_subcommand("phi", "continuous multiplier Phi_N(xi)");
  phiCmd->add_option("--k", c.k, "variables")->capture_default_str();
  phiCmd->add_option("--N0", c.N0, "monomial box degree")->capture_default_str();
  phiCmd->add_option("--xi", c.xi, "frequency, one value per monomial")->required();
  phiCmd->add_option("--N", c.Nlist, "comma list of N")->capture_default_str();
  add_common(phiCmd, c);
  phiCmd->callback([&] {
    radon::MultiIndexSet gamma = radon::build_gamma(c.k, c.N0);
    std::vector<double> xi = parse_double_list(c.xi);
    if (static_cast<int>(xi.size()) != gamma.dim())
      throw std::invalid_argument("--xi needs " + std::to_string(gamma.dim()) + " values");
    const auto orders = gamma.orders();
    std::vector<std::vector<std::string>> rows;
    for (std::int64_t N : parse_i64_list(c.Nlist)) {
      radon::cplx v = radon::phi(xi, N, gamma);
      double t = 0.0;
      for (int i = 0; i < gamma.dim(); ++i)
        t = std::max(t, std::pow(static_cast<double>(N), orders[static_cast<std::size_t>(i)]) *
                            std::abs(xi[static_cast<std::size_t>(i)]));
      double bound =
          std::min(1.0, t == 0.0 ? 1.0 : std::pow(t, -1.0 / gamma.dim()));
      rows.push_back(csv_row(N, v, bound, std::abs(v) / bound));
    }
    write_output(c.output, csv_table(kCsvHeader, rows));
  });

  // ---- approx ----
  CLI::App* approx = app.add_subcommand("approx", "major-arc error |m_N - G Phi_N(.-a/q)|");
  approx->add_option("--k", c.k, "variables")->capture_default_str();
  approx->add_option("--N0", c.N0, "monomial box degree")->capture_default_str();
  approx->add_option("--a", c.a, "rational numerators")->required();
  approx->add_option("--q", c.q, "rational denominator")->required();
  approx->add_option("--xi", c.xi, "frequency (omit with --edge-offset)");
  approx->add_option("--N", c.Nlist, "comma list of N")->capture_default_str();
  approx->add_option("--L1", c.L1, "window parameter L1 (0 = use N)")->capture_default_str();
  approx->add_option("--L2", c.L2, "window parameter L2")->capture_default_str();
  approx->add_option("--L3", c.L3, "window parameter L3")->capture_default_str();
  approx->add_flag("--edge-offset", c.edgeOffset, "xi = a/q + 1/(2N) per row (k=1)");
  add_common(approx, c);
  approx->callback([&] {
    radon::MultiIndexSet gamma = radon::build_gamma(c.k, c.N0);
    radon::RationalPoint a(parse_i64_list(c.a), c.q);
    if (a.dim() != gamma.dim())
      throw std::invalid_argument("--a needs " + std::to_string(gamma.dim()) + " numerators");
    if (!c.edgeOffset && c.xi.empty())
      throw std::invalid_argument("approx needs --xi or --edge-offset");
    if (c.edgeOffset && gamma.dim() != 1)
      throw std::invalid_argument("--edge-offset is defined for the single-monomial case");
    std::vector<std::vector<std::string>> rows;
    for (std::int64_t N : parse_i64_list(c.Nlist)) {
      radon::TorusPoint xi = c.edgeOffset
          ? radon::TorusPoint({static_cast<double>(a.a[0]) / static_cast<double>(a.q) +
                               0.5 / static_cast<double>(N)})
          : radon::TorusPoint(parse_double_list(c.xi));
      if (xi.dim() != gamma.dim())
        throw std::invalid_argument("--xi needs " + std::to_string(gamma.dim()) + " values");
      double L1 = c.L1 > 0 ? c.L1 : static_cast<double>(N);
      radon::ApproxErrorResult r = radon::approx_error(a, xi, N, gamma, L1, c.L2, c.L3);
      rows.push_back(csv_row(N, {r.error, 0.0}, r.bound,
                             r.bound > 0 ? r.error / r.bound : 0.0));
    }
    write_output(c.output, csv_table(kCsvHeader, rows));
  });

  // ---- weyl-decay ----
  CLI::App* wdecay = app.add_subcommand("weyl-decay", "single-monomial log-decay ladder");
  wdecay->add_option("--gamma0", c.gamma0, "monomial degree (k=1)")->capture_default_str();
  wdecay->add_option("--alpha", c.alpha, "log exponent alpha")->capture_default_str();
  wdecay->add_option("--N", c.Nlist, "comma list of N")
      ->capture_default_str()
      ->default_str("1024,4096,16384,65536");
  wdecay->add_option("--phase", c.phase,
                     "minor | rational:a/q | value:<x> (minor: prime q ~ (ln N)^2)")
      ->capture_default_str();
  add_common(wdecay, c);
  wdecay->callback([&] {
    radon::MultiIndex g0{c.gamma0};
    radon::PhaseBuilder builder;
    if (c.phase == "minor") {
      builder = [](std::int64_t N) {
        double L = std::log(static_cast<double>(N));
        std::int64_t q = static_cast<std::int64_t>(std::ceil(L * L));
        auto isPrime = [](std::int64_t n) {
          if (n < 2) return false;
          for (std::int64_t f = 2; f * f <= n; ++f)
            if (n % f == 0) return false;
          return true;
        };
        while (!isPrime(q)) ++q;
        std::int64_t a = (q - 1) / 2;
        return radon::PhaseChoice{static_cast<double>(a) / static_cast<double>(q), a, q, true};
      };
    } else if (c.phase.rfind("rational:", 0) == 0) {
      auto [nums, den] = parse_rational(c.phase.substr(9));
      if (nums.size() != 1) throw std::invalid_argument("phase rational:a/q needs one numerator");
      std::int64_t a = nums[0], q = den;
      builder = [a, q](std::int64_t) {
        return radon::PhaseChoice{static_cast<double>(a) / static_cast<double>(q), a, q, true};
      };
    } else if (c.phase.rfind("value:", 0) == 0) {
      double x = std::stod(c.phase.substr(6));
      builder = [x](std::int64_t N) {
        auto [a, q] = radon::dirichlet(x, static_cast<std::int64_t>(std::sqrt(static_cast<double>(N))));
        return radon::PhaseChoice{x, a, q, false};
      };
    } else {
      throw std::invalid_argument("phase must be minor, rational:a/q, or value:<x>");
    }
    radon::WeylDecayResult res =
        radon::weyl_log_decay_experiment(g0, c.alpha, parse_i64_list(c.Nlist), builder);
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : res.rows)
      rows.push_back(csv_row(row.N, {row.snAbs, 0.0}, row.bound,
                             row.bound > 0 ? row.snAbs / row.bound : 0.0));
    write_output(c.output, csv_table(kCsvHeader, rows));
  });

  // ---- un ----
  CLI::App* un = app.add_subcommand("un", "Ionescu-Wainger denominator set");
  un->add_option("--N", c.N, "scale parameter")->required();
  un->add_option("--rho", c.rho, "density parameter in (0, 2]")->required();
  un->add_option("--list-max", c.listMax, "cap on listed members")->capture_default_str();
  add_common(un, c);
  un->callback([&] {
    radon::DenominatorSet S = radon::build_denominator_set(c.N, c.rho);
    std::vector<radon::BigInt> members = S.all_members();
    bool containsAll = true;
    for (std::int64_t n = 1; n <= c.N; ++n)
      if (!S.contains(n)) containsAll = false;
    ordered_json j;
    j["N"] = c.N;
    j["rho"] = c.rho;
    j["N0"] = S.N0;
    j["D"] = S.D;
    j["Q0"] = S.Q0.str();
    j["windowPrimes"] = S.primesWindow;
    j["memberCount"] = members.size();
    j["containsAllUpToN"] = containsAll;
    ordered_json list = ordered_json::array();
    for (std::size_t i = 0; i < members.size() && i < static_cast<std::size_t>(c.listMax); ++i)
      list.push_back(members[i].str());
    j["members"] = list;
    write_output(c.output, j.dump(2) + "\n");
    if (!containsAll) throw AssertionFailure("denominator set is missing some q <= N");
  });

  // ---- partition ----
  CLI::App* partition = app.add_subcommand("partition", "covering partition family");
  partition->add_option("--N", c.N, "base set size")->required();
  partition->add_option("--k", c.partitionK, "subset size to separate")->required();
  partition->add_option("--seed", c.seed, "sampling seed")->capture_default_str();
  add_common(partition, c);
  partition->callback([&] {
    radon::PartitionFamily fam = radon::partition_family(c.N, c.partitionK, c.seed);
    ordered_json j;
    j["N"] = fam.N;
    j["k"] = fam.k;
    j["rBound"] = fam.rBound;
    j["familySize"] = fam.partitions.size();
    j["partitions"] = fam.partitions;
    j["verified"] = true;  // construction re-checks the covering property exhaustively
    write_output(c.output, j.dump(2) + "\n");
  });

  // ---- odecomp ----
  CLI::App* odecomp = app.add_subcommand("odecomp", "O-property decomposition of Pi(V)");
  odecomp->add_option("--primes", c.primes, "comma list of primes")->capture_default_str();
  odecomp->add_option("--D", c.D, "degree budget")->capture_default_str();
  odecomp->add_option("--N", c.odecompN, "window bound (default: max prime)");
  odecomp->add_option("--seed", c.seed, "sampling seed")->capture_default_str();
  add_common(odecomp, c);
  odecomp->callback([&] {
    std::vector<std::int64_t> V = parse_i64_list(c.primes);
    std::int64_t N = c.odecompN;
    if (N == 0)
      for (std::int64_t p : V) N = std::max(N, p);
    radon::ODecomposition dec = radon::decompose_o_property(V, c.D, N, c.seed);
    std::set<std::int64_t> covered;
    ordered_json sets = ordered_json::array();
    for (std::size_t i = 0; i < dec.lambdas.size(); ++i) {
      ordered_json s;
      s["label"] = dec.labels[i];
      s["members"] = dec.lambdas[i];
      sets.push_back(s);
      covered.insert(dec.lambdas[i].begin(), dec.lambdas[i].end());
    }
    ordered_json j;
    j["primes"] = V;
    j["D"] = c.D;
    j["N"] = N;
    j["familyBound"] = dec.familyBound;
    j["familySize"] = dec.lambdas.size();
    j["piSize"] = covered.size();
    j["sets"] = sets;
    j["verified"] = true;  // construction re-checks coverage and the O property
    write_output(c.output, j.dump(2) + "\n");
  });

  // ---- rm ----
  CLI::App* rm = app.add_subcommand("rm", "maximal-inequality sampling check");
  rm->add_flag("--check", c.rmCheck, "run the inequality check")->required();
  rm->add_option("--s", c.s, "sequence length 2^s + 1")->capture_default_str();
  rm->add_option("--trials", c.trials, "number of random sequences")->capture_default_str();
  rm->add_option("--seed", c.seed, "sampling seed")->capture_default_str();
  rm->add_option("--j0", c.j0, "fixed base index (-1 = random per trial)")->capture_default_str();
  add_common(rm, c);
  rm->callback([&] {
    if (c.s < 0 || c.s > 20) throw std::invalid_argument("rm needs 0 <= s <= 20");
    radon::CounterRng rng = radon::CounterRng(c.seed).split("rm");
    std::size_t len = (static_cast<std::size_t>(1) << c.s) + 1;
    std::int64_t failures = 0;
    double worst = 0.0;
    for (std::int64_t t = 0; t < c.trials; ++t) {
      std::vector<radon::cplx> a(len);
      for (auto& v : a) v = rng.next_complex(1.0);
      std::size_t j0 = c.j0 >= 0 ? static_cast<std::size_t>(c.j0)
                                 : static_cast<std::size_t>(
                                       rng.next_int(0, static_cast<std::int64_t>(len) - 1));
      if (j0 >= len) throw std::invalid_argument("--j0 out of range");
      double lhs = 0.0;
      for (const auto& v : a) lhs = std::max(lhs, std::abs(v));
      double rhs = radon::rm_rhs(a, j0);
      worst = std::max(worst, rhs > 0 ? lhs / rhs : 0.0);
      if (!radon::rm_check(a, j0)) ++failures;
    }
    ordered_json j;
    j["s"] = c.s;
    j["trials"] = c.trials;
    j["failures"] = failures;
    j["maxLhsOverRhs"] = worst;
    write_output(c.output, j.dump(2) + "\n");
    if (failures > 0) throw AssertionFailure("maximal inequality failed on sampled sequences");
  });

  // ---- lattice ----
  CLI::App* lattice = app.add_subcommand("lattice", "lattice counts for a convex body");
  lattice->add_option("--body", c.body, "ball:r=.. | box:half=.. | box:lo=..,hi=..")
      ->capture_default_str();
  lattice->add_option("--k", c.latticeK, "ambient dimension")->capture_default_str();
  lattice->add_option("--s", c.latticeS, "boundary shell width")->capture_default_str();
  lattice->add_option("--sigma", c.sigma, "comparison exponent in [0, 1/3]")->capture_default_str();
  lattice->add_option("--delta", c.delta, "also count the delta-dilate (0 = off)");
  add_common(lattice, c);
  lattice->callback([&] {
    radon::ConvexBody body = radon::parse_body(c.body, c.latticeK);
    radon::LatticeCount count = radon::lattice_points(body, false);
    radon::BoundaryCount near = radon::boundary_near_count(body, c.latticeS, c.sigma);
    ordered_json j;
    j["body"] = c.body;
    j["k"] = c.latticeK;
    j["count"] = count.count;
    j["boundaryNear"] = near.count;
    j["comparisonSigma"] = near.comparisonSigma;
    j["comparisonInner"] = near.comparisonInner;
    if (c.delta > 0.0) {
      radon::LatticeCount dcount = radon::lattice_points(radon::dilate_body(body, c.delta), false);
      j["delta"] = c.delta;
      j["dilatedCount"] = dcount.count;
      j["monotone"] = dcount.count <= count.count;
    }
    write_output(c.output, j.dump(2) + "\n");
  });

  // ---- verify ----
  CLI::App* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--suite", c.suite, "all | comma list of criterion ids")
      ->capture_default_str();
  verify->add_option("--seed", c.seed, "suite seed")->capture_default_str();
  add_common(verify, c);
  verify->callback([&] {
    std::vector<int> ids;
    if (c.suite == "all") {
      for (int i = 1; i <= 12; ++i) ids.push_back(i);
    } else {
      for (std::int64_t v : parse_i64_list(c.suite)) {
        if (v < 1 || v > 12) throw std::invalid_argument("criterion ids are 1..12");
        ids.push_back(static_cast<int>(v));
      }
    }
    std::vector<radon::CriterionResult> results;
    for (int id : ids) {
      results.push_back(radon::run_criterion(id, c.seed));
      const auto& r = results.back();
      std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " [" << r.name
                << "]: " << r.detail << "\n";
    }
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    // the summary is written even when a criterion fails; only schema errors
    // suppress output files
    write_output(c.output == "-" ? "acceptance_summary.json" : c.output,
                 radon::acceptance_summary_json(results, c.seed));
    std::cout << (all ? "suite PASS" : "suite FAIL") << " (" << results.size() << " criteria)\n";
    if (!all) rc = 1;
  });

  std::vector<std::string> args(argv + 1, argv + argc);
  args = expand_config(app, args);
  std::vector<const char*> cargs{argv[0]};
  for (const auto& a : args) cargs.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const AssertionFailure& e) {
    std::cerr << "assertion failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
