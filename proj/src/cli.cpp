#include "rcoh/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rcoh/iso.hpp"
#include "rcoh/random.hpp"
#include "rcoh/serialize.hpp"
#include "rcoh/verify.hpp"

namespace rcoh::cli {
namespace {

struct Config {
  std::int64_t prime = 0;
  std::string primes;
  std::string lambda = "zero";
  std::string lambda_prime;
  int degree = 2;
  bool restricted = false;
  std::string format = "table";
  std::string output;
  std::string cocycle = "ebar:1";
  bool ordinary = false;
  std::string algebra_file;
  std::uint64_t seed = 0;
  std::size_t samples = 20;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const auto v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("invalid " + what + " '" + s + "'");
  }
}

std::string lambda_text(const Vector& lambda) {
  std::string s;
  for (std::size_t i = 0; i < lambda.size(); ++i) s += (i ? "," : "") + std::to_string(lambda[i]);
  return s;
}

// Left-aligned columns separated by two spaces.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    os << line << "\n";
  }
  return os.str();
}

Residue require_prime(const Config& cfg) {
  if (cfg.prime == 0) throw UsageError("--prime is required");
  return parse_prime(cfg.prime);
}

Vector single_lambda(Residue p, const std::string& spec, std::uint64_t seed) {
  auto sel = expand_lambda_spec(p, spec, seed);
  if (sel.lambdas.size() != 1) throw UsageError("lambda spec '" + spec + "' must name exactly one vector here");
  return sel.lambdas.front();
}

std::string mismatch_text(const ComparisonReport& r, const FieldCheck& c) {
  std::string group = r.degree == 1 ? "H1" : "H2";
  if (r.restricted) group += "*";
  return group + "." + c.field + ": expected " + std::to_string(c.expected) + ", computed " + std::to_string(c.computed);
}

Json row_json(const DimsRow& row) {
  Json j;
  j["prime"] = row.prime;
  j["lambda"] = row.lambda;
  j["H1"] = to_json(row.h1);
  j["H1*"] = to_json(row.h1_star);
  j["H2"] = to_json(row.h2);
  j["H2*"] = to_json(row.h2_star);
  j["expected"] = {{"H1", row.expected.h1}, {"H1*", row.expected.h1_star}, {"H2", row.expected.h2},
                   {"H2*", row.expected.h2_star}};
  Json mism = Json::array();
  for (const auto& r : row.reports)
    for (const auto& c : r.checks)
      if (!c.pass) mism.push_back(mismatch_text(r, c));
  j["mismatches"] = mism;
  j["pass"] = row.pass();
  return j;
}

std::string dims_table(const std::vector<DimsRow>& rows) {
  std::vector<std::vector<std::string>> t{{"p", "lambda", "H1", "H1*", "H2", "H2*", "expected", "status"}};
  std::vector<std::string> notes;
  for (const auto& row : rows) {
    const auto& e = row.expected;
    t.push_back({std::to_string(row.prime), lambda_text(row.lambda), std::to_string(row.h1.dimension),
                 std::to_string(row.h1_star.dimension), std::to_string(row.h2.dimension),
                 std::to_string(row.h2_star.dimension),
                 std::to_string(e.h1) + " " + std::to_string(e.h1_star) + " " + std::to_string(e.h2) + " " +
                     std::to_string(e.h2_star),
                 row.pass() ? "ok" : "MISMATCH"});
    for (const auto& r : row.reports)
      for (const auto& c : r.checks)
        if (!c.pass) notes.push_back("p=" + std::to_string(row.prime) + " lambda=" + lambda_text(row.lambda) + " " +
                                     mismatch_text(r, c));
  }
  std::string out = render_table(t);
  for (const auto& n : notes) out += "! " + n + "\n";
  return out;
}

int emit_dims(const Config& cfg, const std::string& spec_text, const std::vector<DimsRow>& rows, std::ostream& os) {
  bool all = true;
  for (const auto& r : rows) all = all && r.pass();
  if (cfg.format == "json") {
    Json j;
    j["lambda_spec"] = spec_text;
    j["seed"] = cfg.seed;
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(row_json(r));
    j["rows"] = arr;
    j["pass"] = all;
    os << j.dump(2) << "\n";
  } else {
    os << "# lambda: " << spec_text << "\n" << dims_table(rows);
    std::size_t bad = 0;
    for (const auto& r : rows) bad += r.pass() ? 0 : 1;
    os << "# " << rows.size() << " rows, " << (bad ? std::to_string(bad) + " mismatched" : "all match") << "\n";
  }
  return all ? kOk : kMismatch;
}

int cmd_dims(const Config& cfg, std::ostream& os) {
  const Residue p = require_prime(cfg);
  const auto sel = expand_lambda_spec(p, cfg.lambda, cfg.seed);
  std::vector<DimsCase> cases;
  for (const auto& l : sel.lambdas) cases.push_back({p, l});
  return emit_dims(cfg, sel.description, compute_dims_rows(cases), os);
}

int cmd_sweep(const Config& cfg, std::ostream& os) {
  if (cfg.primes.empty()) throw UsageError("--primes is required");
  const auto primes = parse_primes(cfg.primes);
  std::vector<DimsCase> cases;
  std::string spec_text;
  for (auto p : primes) {
    const auto sel = expand_lambda_spec(p, cfg.lambda, cfg.seed);
    if (spec_text.empty()) spec_text = sel.description;
    for (const auto& l : sel.lambdas) cases.push_back({p, l});
  }
  return emit_dims(cfg, spec_text, compute_dims_rows(cases), os);
}

int cmd_basis(const Config& cfg, std::ostream& os) {
  const Residue p = require_prime(cfg);
  if (cfg.degree != 1 && cfg.degree != 2) throw UsageError("--degree must be 1 or 2");
  const auto sel = expand_lambda_spec(p, cfg.lambda, cfg.seed);
  bool all = true;
  Json arr = Json::array();
  std::ostringstream text;
  text << "# lambda: " << sel.description << "\n";
  for (const auto& l : sel.lambdas) {
    const auto r = make_m0_lambda(p, l);
    CohomologySummary s;
    if (cfg.degree == 1)
      s = cfg.restricted ? h1_star(r) : h1(r.algebra());
    else
      s = cfg.restricted ? h2_star(r) : h2(r.algebra());
    const auto report = compare(s, expected_summary(p, l));
    all = all && report.pass();
    auto j = to_json(s);
    j["pass"] = report.pass();
    arr.push_back(j);
    text << "H^" << cfg.degree << (cfg.restricted ? "_*" : "") << "(m_0^lambda(" << p << ")), lambda=" << lambda_text(l)
         << ": dim " << s.dimension << " (kernel " << s.kernel_dim << ", image " << s.image_dim << ")\n";
    for (const auto& label : s.labels) text << "  " << label << "\n";
    for (const auto& c : report.checks)
      if (!c.pass) text << "! " << mismatch_text(report, c) << "\n";
  }
  if (cfg.format == "json") {
    Json j;
    j["lambda_spec"] = sel.description;
    j["seed"] = cfg.seed;
    j["summaries"] = arr;
    j["pass"] = all;
    os << j.dump(2) << "\n";
  } else {
    os << text.str();
  }
  return all ? kOk : kMismatch;
}

std::string status_text(CheckLine::Status s) {
  switch (s) {
    case CheckLine::Status::Pass: return "PASS";
    case CheckLine::Status::Fail: return "FAIL";
    default: return "INFO";
  }
}

int cmd_verify(const Config& cfg, std::ostream& os) {
  const Residue p = require_prime(cfg);
  const auto sel = expand_lambda_spec(p, cfg.lambda, cfg.seed);
  const auto rep = run_verification(p, sel.lambdas, cfg.seed, cfg.samples);
  if (cfg.format == "json") {
    Json j;
    j["prime"] = p;
    j["lambda_spec"] = sel.description;
    j["seed"] = cfg.seed;
    j["samples"] = cfg.samples;
    j["lambda_count"] = rep.lambda_count;
    Json checks = Json::array();
    for (const auto& l : rep.lines) checks.push_back({{"name", l.name}, {"status", status_text(l.status)}, {"detail", l.detail}});
    j["checks"] = checks;
    j["pass"] = rep.pass();
    os << j.dump(2) << "\n";
  } else {
    os << "# verify m_0^lambda(" << p << "), lambda: " << sel.description << "; check seed " << cfg.seed
       << ", " << cfg.samples << " samples per lambda\n";
    for (const auto& l : rep.lines) os << "[" << status_text(l.status) << "] " << l.name << ": " << l.detail << "\n";
    os << "result: " << (rep.pass() ? "pass" : "FAIL") << "\n";
  }
  return rep.pass() ? kOk : kMismatch;
}

std::string witness_text(const IsoWitness& w) {
  return "mu1=" + std::to_string(w.mu1) + ", mu2=" + std::to_string(w.mu2);
}

int cmd_iso(const Config& cfg, std::ostream& os) {
  const Residue p = require_prime(cfg);
  if (p > kIsoSearchLimit) throw UsageError("isomorphism search is limited to p <= " + std::to_string(kIsoSearchLimit));
  if (!cfg.lambda_prime.empty()) {
    const auto l = single_lambda(p, cfg.lambda, cfg.seed);
    const auto lp = single_lambda(p, cfg.lambda_prime, cfg.seed);
    const auto report = proposition_formula_check(p, l, lp);
    const std::string verdict =
        report.bruteforce_witness ? "isomorphic, " + witness_text(*report.bruteforce_witness) : "not isomorphic";
    const std::string statement = report.statement_witness ? "witness " + witness_text(*report.statement_witness)
                                                           : "no witness";
    if (cfg.format == "json") {
      Json j;
      j["prime"] = p;
      j["lambda"] = l;
      j["lambda_prime"] = lp;
      j["isomorphic"] = report.bruteforce_witness.has_value();
      if (report.bruteforce_witness)
        j["witness"] = {{"mu1", report.bruteforce_witness->mu1}, {"mu2", report.bruteforce_witness->mu2}};
      j["statement_conditions"] = statement;
      j["statement_agrees"] = report.agree();
      os << j.dump(2) << "\n";
    } else {
      os << verdict << "\n# statement conditions: " << statement << "\n";
    }
    return kOk;
  }
  const auto sel = expand_lambda_spec(p, cfg.lambda, cfg.seed);
  const auto classes = iso_classes(p, sel.lambdas);
  Json arr = Json::array();
  for (const auto& c : classes) arr.push_back(c);
  if (cfg.format == "json") {
    Json j;
    j["prime"] = p;
    j["lambda_spec"] = sel.description;
    j["seed"] = cfg.seed;
    j["classes"] = arr;
    os << j.dump(2) << "\n";
  } else {
    os << "# lambda: " << sel.description << "; " << classes.size() << " classes\n";
    for (const auto& c : arr) os << c.dump() << "\n";
  }
  return kOk;
}

RestrictedTwoCochain parse_cocycle(const std::string& spec, Residue p, std::size_t n,
                                   const std::optional<RestrictedAlgebra>& r, const LieAlgebra& a, bool ordinary) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto index = [&](const std::string& s) {
    const auto k = parse_int(s, "cocycle index");
    if (k < 1 || static_cast<std::size_t>(k) > n) throw UsageError("cocycle index " + s + " out of range");
    return static_cast<std::size_t>(k - 1);
  };
  if (kind == "zero") return {Cochain2(p, n), Vector(n, 0)};
  if (kind == "ebar") return ebar(p, n, index(arg));
  if (kind == "e") {
    const auto parts = split(arg, ',');
    if (parts.size() != 2) throw UsageError("expected e:I,J");
    Cochain2 phi(p, n);
    phi.add({index(parts[0]), index(parts[1])}, 1);
    return with_tilde(phi);
  }
  if (kind == "phi") {
    if (n != p) throw UsageError("phi:K needs an algebra of dimension p");
    return with_tilde(phi_k(p, static_cast<int>(parse_int(arg, "weight"))));
  }
  if (kind == "rep") {
    const auto s = (ordinary || !r) ? h2(a) : h2_star(*r);
    const auto k = parse_int(arg, "representative number");
    if (k < 1 || static_cast<std::size_t>(k) > s.representatives.size())
      throw UsageError("representative number out of range");
    const auto& v = s.representatives[static_cast<std::size_t>(k - 1)];
    if (s.restricted) return from_coordinates(p, n, v);
    return with_tilde(Cochain2(p, n, v));
  }
  throw UsageError("unknown cocycle spec '" + spec + "'");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int cmd_extend(const Config& cfg, std::ostream& os) {
  std::optional<AlgebraDocument> doc;
  Json base;
  if (!cfg.algebra_file.empty()) {
    doc = algebra_from_json(read_json_file(cfg.algebra_file));
    base["file"] = cfg.algebra_file;
  } else {
    const Residue p = require_prime(cfg);
    const auto l = single_lambda(p, cfg.lambda, cfg.seed);
    doc = document_for(make_m0_lambda(p, l));
    base["algebra"] = "m_0^lambda(p)";
    base["prime"] = p;
    base["lambda"] = l;
  }
  const auto& a = doc->algebra;
  std::optional<RestrictedAlgebra> r;
  if (doc->pmap) r = doc->restricted();
  if (!cfg.ordinary && !r) throw UsageError("algebra has no p-map; use --ordinary");
  const auto c2 = parse_cocycle(cfg.cocycle, a.prime(), a.dim(), r, a, cfg.ordinary);
  base["cocycle_spec"] = cfg.cocycle;
  const auto ext = cfg.ordinary ? extend_ordinary(a, c2.phi) : extend_restricted(*r, c2);
  if (jacobi_violation(ext.algebra)) return kMismatch;
  if (ext.pmap && restricted_map_violation(ext.restricted())) return kMismatch;
  os << to_json(document_for(ext, base)).dump(2) << "\n";
  return kOk;
}

int cmd_algebra(const Config& cfg, std::ostream& os) {
  AlgebraDocument doc = cfg.algebra_file.empty()
                            ? document_for(make_m0_lambda(require_prime(cfg), single_lambda(require_prime(cfg), cfg.lambda, cfg.seed)))
                            : algebra_from_json(read_json_file(cfg.algebra_file));
  os << to_json(doc).dump(2) << "\n";
  if (jacobi_violation(doc.algebra)) return kMismatch;
  if (doc.pmap && restricted_map_violation(doc.restricted())) return kMismatch;
  return kOk;
}

}  // namespace

Residue parse_prime(std::int64_t value) {
  if (value < 2 || value > 1000 || !is_prime(static_cast<std::uint64_t>(value)))
    throw UsageError(std::to_string(value) + " is not prime" + (value > 1000 ? " or exceeds 1000" : ""));
  return static_cast<Residue>(value);
}

std::vector<Residue> parse_primes(const std::string& text) {
  std::vector<Residue> out;
  for (const auto& s : split(text, ',')) out.push_back(parse_prime(parse_int(s, "prime")));
  if (out.empty()) throw UsageError("empty prime list");
  return out;
}

LambdaSelection expand_lambda_spec(Residue p, const std::string& spec, std::uint64_t seed) {
  LambdaSelection sel;
  auto add_random = [&](std::uint64_t s, std::size_t count) {
    Rng rng(s);
    for (std::size_t i = 0; i < count; ++i) sel.lambdas.push_back(rng.nonzero_vector(p, p));
  };
  if (spec == "zero") {
    sel.lambdas.push_back(Vector(p, 0));
    sel.description = "zero";
  } else if (spec == "onehot") {
    for (std::size_t k = 0; k < p; ++k) sel.lambdas.push_back(PrimeField(p).unit(p, k));
    sel.description = "onehot";
  } else if (spec == "standard") {
    sel.lambdas.push_back(Vector(p, 0));
    for (std::size_t k = 0; k < p; ++k) sel.lambdas.push_back(PrimeField(p).unit(p, k));
    add_random(seed, 5);
    sel.description = "standard (zero, onehot, 5 random, seed " + std::to_string(seed) + ")";
  } else if (spec == "all") {
    if (p <= 3) {
      std::size_t total = 1;
      for (std::size_t i = 0; i < p; ++i) total *= p;
      for (std::size_t code = 0; code < total; ++code) {
        Vector v(p);
        std::size_t c = code;
        for (std::size_t i = p; i-- > 0; c /= p) v[i] = static_cast<Residue>(c % p);
        sel.lambdas.push_back(v);
      }
      sel.description = "all (" + std::to_string(total) + " vectors)";
    } else {
      sel.lambdas.push_back(Vector(p, 0));
      add_random(seed, 200);
      sel.description = "all, sampled: zero + 200 random, seed " + std::to_string(seed);
    }
  } else if (spec.rfind("random:", 0) == 0) {
    const auto parts = split(spec.substr(7), ':');
    if (parts.empty() || parts.size() > 2) throw UsageError("expected random:SEED or random:SEED:COUNT");
    const auto s = parse_int(parts[0], "seed");
    const auto count = parts.size() == 2 ? parse_int(parts[1], "count") : 1;
    if (s < 0 || count < 1) throw UsageError("invalid random lambda spec '" + spec + "'");
    add_random(static_cast<std::uint64_t>(s), static_cast<std::size_t>(count));
    sel.description = "random, seed " + parts[0] + ", " + std::to_string(count) + " vector" + (count > 1 ? "s" : "");
  } else {
    const auto parts = split(spec, ',');
    if (parts.size() != p)
      throw UsageError("lambda needs " + std::to_string(p) + " entries, got " + std::to_string(parts.size()));
    const PrimeField f(p);
    Vector v;
    for (const auto& s : parts) v.push_back(f.reduce(parse_int(s, "lambda entry")));
    sel.lambdas.push_back(v);
    sel.description = lambda_text(v);
  }
  return sel;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Cohomology and central extensions of the restricted filiform Lie algebras m_0^lambda(p)", "rcoh"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--prime,-p", cfg.prime, "prime p");
    sub->add_option("--lambda", cfg.lambda, "lambda spec: a,b,..|zero|onehot|standard|random:SEED[:N]|all");
    sub->add_option("--seed", cfg.seed, "seed for sampled lambda vectors and random checks");
    sub->add_option("--format", cfg.format, "table or json")->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--output,-o", cfg.output, "write to this file instead of stdout");
  };
  auto* dims = app.add_subcommand("dims", "computed vs expected dimensions of H1, H1*, H2, H2*");
  common(dims);
  auto* basis = app.add_subcommand("basis", "representative cocycles");
  common(basis);
  basis->add_option("--degree", cfg.degree, "1 or 2");
  basis->add_flag("--restricted", cfg.restricted, "restricted cohomology");
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  common(verify);
  verify->add_option("--samples", cfg.samples, "random arguments per lambda");
  auto* iso = app.add_subcommand("iso", "graded isomorphism between m_0^lambda(p) and m_0^lambda'(p)");
  common(iso);
  iso->add_option("--lambda-prime", cfg.lambda_prime, "second lambda; omit to partition the --lambda set");
  auto* extend = app.add_subcommand("extend", "one-dimensional central extension as algebra JSON");
  common(extend);
  extend->add_option("--cocycle", cfg.cocycle, "zero|ebar:K|e:I,J|phi:K|rep:N");
  extend->add_flag("--ordinary", cfg.ordinary, "ordinary extension (drop the p-map)");
  extend->add_option("--algebra", cfg.algebra_file, "base algebra JSON instead of m_0^lambda(p)");
  auto* sweep = app.add_subcommand("sweep", "dims over a grid of primes");
  common(sweep);
  sweep->add_option("--primes", cfg.primes, "comma-separated primes");
  auto* algebra = app.add_subcommand("algebra", "write (or normalize) an algebra JSON file");
  common(algebra);
  algebra->add_option("--algebra", cfg.algebra_file, "algebra JSON to read back");

  std::vector<std::string> argv_store{"rcoh"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    std::ostringstream os;
    int code = kOk;
    if (dims->parsed())
      code = cmd_dims(cfg, os);
    else if (basis->parsed())
      code = cmd_basis(cfg, os);
    else if (verify->parsed())
      code = cmd_verify(cfg, os);
    else if (iso->parsed())
      code = cmd_iso(cfg, os);
    else if (extend->parsed())
      code = cmd_extend(cfg, os);
    else if (sweep->parsed())
      code = cmd_sweep(cfg, os);
    else if (algebra->parsed())
      code = cmd_algebra(cfg, os);
    if (cfg.output.empty()) {
      out << os.str();
    } else {
      std::ofstream f(cfg.output, std::ios::binary);
      if (!f) throw UsageError("cannot write " + cfg.output);
      f << os.str();
    }
    return code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kMismatch;
  }
}

}  // namespace rcoh::cli
