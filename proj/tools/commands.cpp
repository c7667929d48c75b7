#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "qcorr/bounds.hpp"
#include "qcorr/dqc1.hpp"
#include "qcorr/entropy.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/random.hpp"
#include "qcorr/report.hpp"
#include "qcorr/state_io.hpp"
#include "qcorr/states.hpp"

namespace qcorr::cli {

std::string formatDouble(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

using nlohmann::ordered_json;

struct Globals {
  std::uint64_t seed = 0;
  std::size_t restarts = OptimizerConfig{}.restarts;
  std::size_t iters = OptimizerConfig{}.maxIters;
  double tol = OptimizerConfig{}.tolerance;
  std::string method = "simplex";
  std::string outPath;

  OptimizerConfig config() const {
    OptimizerConfig cfg;
    cfg.seed = seed;
    cfg.restarts = restarts;
    cfg.maxIters = iters;
    cfg.tolerance = tol;
    cfg.method = parseSearchMethod(method);
    cfg.validate();
    return cfg;
  }
};

class Csv {
 public:
  explicit Csv(std::initializer_list<std::string> header) : width_(header.size()) {
    row(std::vector<std::string>(header));
  }

  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) text_ += ',';
      text_ += cells[i];
    }
    text_ += '\n';
  }

  std::size_t width() const { return width_; }
  const std::string& text() const { return text_; }

 private:
  std::size_t width_;
  std::string text_;
};

std::string num(double x) { return formatDouble(x); }
std::string num(std::size_t x) { return std::to_string(x); }
std::string flag(bool b) { return b ? "1" : "0"; }

/// Sample k of a campaign owns the stream deriveSeed(seed, k); the same
/// value passed to --replay regenerates it.
template <class Result>
std::vector<Result> parallelMap(std::size_t count, const std::function<Result(std::size_t)>& f) {
  std::vector<Result> results(count);
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(count, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) results[k] = f(k);
    return results;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t k = w; k < count; k += workers) results[k] = f(k);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

std::vector<std::size_t> parseDims(const std::string& text) {
  std::vector<std::size_t> dims;
  const auto range = text.find("..");
  try {
    if (range != std::string::npos) {
      const std::size_t lo = std::stoul(text.substr(0, range));
      const std::size_t hi = std::stoul(text.substr(range + 2));
      for (std::size_t d = lo; d <= hi; ++d) dims.push_back(d);
    } else {
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ',')) dims.push_back(std::stoul(item));
    }
  } catch (const std::logic_error&) {
    throw InvalidArgument("--dims: expected a list like 2,3 or a range like 2..3, got '" + text + "'");
  }
  if (dims.empty()) throw InvalidArgument("--dims: empty list");
  for (std::size_t d : dims)
    if (d < 2) throw InvalidArgument("--dims: every dimension must be >= 2");
  return dims;
}

std::vector<double> parseDoubles(const std::string& text, std::size_t expected, const char* name) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  try {
    while (std::getline(ss, item, ',')) v.push_back(std::stod(item));
  } catch (const std::logic_error&) {
    throw InvalidArgument(std::string(name) + ": could not parse '" + text + "'");
  }
  if (v.size() != expected)
    throw InvalidArgument(std::string(name) + ": expected " + std::to_string(expected) + " values");
  return v;
}

template <class T>
const T& pick(const std::vector<T>& v, Rng& rng) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

std::size_t uniformInt(std::size_t lo, std::size_t hi, Rng& rng) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// ---------------------------------------------------------------------------
// Commands. Each returns the text to emit and an exit code.

struct Output {
  Output(std::string t = {}, int c = kOk, std::string s = {})
      : text(std::move(t)), code(c), summary(std::move(s)) {}

  std::string text;
  int code;
  std::string summary;  // printed on stderr
};

Output cmdAnalyze(const std::string& path, const Globals& g, bool noDiscordB, std::size_t povmA,
                  std::size_t povmB) {
  const DensityMatrix rho = readStateFile(path);
  ReportOptions opts;
  opts.includeDiscordB = !noDiscordB;
  opts.povmOutcomesA = povmA;
  opts.povmOutcomesB = povmB;
  return {toJson(fullReport(rho, g.config(), opts)) + "\n"};
}

Output cmdWernerScan(const std::string& dims, std::size_t steps) {
  if (steps < 2) throw InvalidArgument("--alpha-steps must be >= 2");
  Csv csv{"d", "alpha", "smut", "ipmax", "q"};
  for (std::size_t d : parseDims(dims))
    for (std::size_t k = 0; k < steps; ++k) {
      const double alpha = static_cast<double>(k) / static_cast<double>(steps - 1);
      const auto a = wernerAnalytics({d, alpha});
      csv.row({num(d), num(alpha), num(a.smut), num(a.ipMax), num(a.qP)});
    }
  return {csv.text()};
}

Output cmdDqc1Scan(std::size_t n, std::size_t steps, const std::string& phaseModel,
                   std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("--n must be >= 1");
  Csv csv{"alpha", "smut", "ipmax", "q"};
  for (const auto& r : dqc1Scan(n, steps, parsePhaseModel(phaseModel), seed))
    csv.row({num(r.alpha), num(r.smut), num(r.ipMax), num(r.q)});
  return {csv.text()};
}

// --- campaigns -------------------------------------------------------------

struct SampleRows {
  std::vector<std::vector<std::string>> rows;
  bool ok = true;
};

SampleRows prop1Sample(std::size_t k, std::uint64_t sampleSeed, const std::vector<std::size_t>& dims) {
  Rng rng(sampleSeed);
  const std::size_t da = pick(dims, rng);
  const std::size_t db = pick(dims, rng);
  const std::size_t rank = uniformInt(1, da * db, rng);
  const DensityMatrix rho = randomDensityMatrix(da, db, rank, rng);
  const std::size_t na = uniformInt(da, 9, rng);
  const std::size_t nb = uniformInt(db, 9, rng);
  const Povm ma = randomRankOnePovm(da, na, rng);
  const Povm mb = randomRankOnePovm(db, nb, rng);
  const double info = classicalMutualInfo(jointDistribution(rho, ma, mb));
  const double sa = vonNeumannEntropy(partialTrace(rho, Subsystem::A));
  const double sb = vonNeumannEntropy(partialTrace(rho, Subsystem::B));
  const double smut = quantumMutualInfo(rho);
  const double bound = std::min({sa, sb, smut});
  const bool ok = info <= bound + 1e-9;
  return {{{num(k), std::to_string(sampleSeed), num(da), num(db), num(na), num(nb), num(info),
            num(sa), num(sb), num(smut), flag(ok)}},
          ok};
}

SampleRows boundsSample(std::size_t k, std::uint64_t sampleSeed,
                        const std::vector<std::size_t>& dims, std::size_t mubs) {
  Rng rng(sampleSeed);
  const std::size_t da = pick(dims, rng);
  const std::size_t db = uniformInt(2, 3, rng);
  const std::size_t M = mubs == 0 ? da + 1 : mubs;
  const std::size_t rank = uniformInt(1, da * db, rng);
  const DensityMatrix rho = randomDensityMatrix(da, db, rank, rng);
  const Povm bob = randomRankOnePovm(db, uniformInt(db, 9, rng), rng);
  const BoundReport rep = iTotal(rho, mubFamily(da, M), bob);
  SampleRows out;
  for (const auto& c : rep.checks) {
    if (!c.applicable) continue;
    out.rows.push_back({num(k), std::to_string(sampleSeed), num(da), num(db), num(M), c.name,
                        num(c.lhs), num(c.bound), flag(c.satisfied)});
  }
  out.ok = rep.allSatisfied();
  return out;
}

SampleRows qVsDiscordSample(std::size_t k, std::uint64_t sampleSeed,
                            const std::vector<std::size_t>& dims, const OptimizerConfig& cfg) {
  Rng rng(sampleSeed);
  const std::size_t da = pick(dims, rng);
  const std::size_t db = pick(dims, rng);
  const std::size_t rank = uniformInt(1, da * db, rng);
  const DensityMatrix rho = randomDensityMatrix(da, db, rank, rng);
  ReportOptions opts;
  opts.includeDiscordB = false;
  const CorrelationReport r = fullReport(rho, cfg, opts);
  const bool ok = r.qP >= r.jAp - 1e-6 && r.midD >= r.qP - 1e-6;
  return {{{num(k), std::to_string(sampleSeed), num(da), num(db), num(r.smut), num(r.ipMax),
            num(r.qP), num(r.cAp), num(r.jAp), num(r.iE), num(r.midD), flag(ok)}},
          ok};
}

Output cmdCampaign(const std::string& kind, std::size_t samples, std::string dims,
                   std::size_t mubs, std::optional<std::uint64_t> replay, const Globals& g) {
  std::function<SampleRows(std::size_t, std::uint64_t)> run;
  std::unique_ptr<Csv> csv;
  if (kind == "prop1") {
    if (dims.empty()) dims = "2,3";
    const auto d = parseDims(dims);
    csv = std::make_unique<Csv>(std::initializer_list<std::string>{
        "sample", "seed", "dim_a", "dim_b", "outcomes_a", "outcomes_b", "info", "s_a", "s_b",
        "smut", "ok"});
    run = [d](std::size_t k, std::uint64_t s) { return prop1Sample(k, s, d); };
  } else if (kind == "bounds") {
    if (dims.empty()) dims = "3";
    const auto d = parseDims(dims);
    for (std::size_t x : d) mubFamily(x, mubs == 0 ? x + 1 : mubs);  // fail fast on bad dims
    csv = std::make_unique<Csv>(std::initializer_list<std::string>{
        "sample", "seed", "dim_a", "dim_b", "m", "bound", "lhs", "value", "satisfied"});
    run = [d, mubs](std::size_t k, std::uint64_t s) { return boundsSample(k, s, d, mubs); };
  } else if (kind == "qVsDiscord") {
    if (dims.empty()) dims = "2,3";
    const auto d = parseDims(dims);
    for (std::size_t x : d)
      if (x > kMaxOptimizerDim) throw UnsupportedDimension("qVsDiscord: dimension too large");
    const OptimizerConfig cfg = g.config();
    csv = std::make_unique<Csv>(std::initializer_list<std::string>{
        "sample", "seed", "dim_a", "dim_b", "smut", "ip_max", "q_p", "c_a_p", "j_a_p", "i_e",
        "mid_d", "ok"});
    run = [d, cfg](std::size_t k, std::uint64_t s) { return qVsDiscordSample(k, s, d, cfg); };
  } else {
    throw InvalidArgument("unknown campaign '" + kind + "' (expected prop1, bounds or qVsDiscord)");
  }

  std::vector<SampleRows> results;
  std::vector<std::uint64_t> seeds;
  if (replay) {
    seeds = {*replay};
    results = {run(0, *replay)};
  } else {
    for (std::size_t k = 0; k < samples; ++k) seeds.push_back(deriveSeed(g.seed, k));
    results = parallelMap<SampleRows>(samples, [&](std::size_t k) { return run(k, seeds[k]); });
  }

  Output out;
  std::size_t failed = 0;
  std::ostringstream summary;
  for (std::size_t k = 0; k < results.size(); ++k) {
    for (const auto& row : results[k].rows) csv->row(row);
    if (!results[k].ok) {
      ++failed;
      summary << "violation: sample " << k << " (replay with --replay " << seeds[k] << ")\n";
    }
  }
  summary << kind << ": " << results.size() - failed << " passed, " << failed << " failed\n";
  out.text = csv->text();
  out.summary = summary.str();
  out.code = failed ? kViolation : kOk;
  return out;
}

ordered_json lockingJson(const LockingReport& r, const std::string& variant) {
  ordered_json j;
  j["variant"] = variant;
  j["d"] = r.d;
  j["smut"] = r.smut;
  j["i_max_no_comm"] = r.iMaxNoComm;
  j["i_with_comm"] = r.iWithComm;
  j["comm_cost"] = r.commCost;
  j["i_after_one_bit"] = r.iAfterOneBit;
  j["unlock_gain"] = r.unlockGain;
  j["q_p"] = r.smut - r.iMaxNoComm;
  return j;
}

Output cmdLock(std::size_t d, const std::string& variant, const Globals& g) {
  if (variant == "unbiased")
    return {lockingJson(lockingDemo(LockingParams::fourier(d), g.config()), variant).dump(2) + "\n"};
  if (variant == "shift")
    return {lockingJson(sigmaLockingDemo(d, g.config()), variant).dump(2) + "\n"};
  throw InvalidArgument("--variant must be unbiased or shift");
}

Output cmdTrine(std::size_t grid, const Globals& g) {
  const DensityMatrix rho = trineState();
  const OptimizerConfig cfg = g.config();
  const TrineGridOptimum brute = trineProjectiveGrid(grid);
  const ProjectiveOptimum proj = maximizeMIProjective(rho, cfg);
  const PovmOptimum povm = maximizeMIPovm(rho, 3, 3, cfg);
  ordered_json j;
  j["projective_grid"] = brute.value;
  j["grid_points"] = grid * grid;
  j["grid_theta"] = brute.theta;
  j["grid_phi"] = brute.phi;
  j["projective_optimizer"] = proj.value;
  j["povm"] = povm.value;
  j["povm_outcomes_a"] = 3;
  j["povm_outcomes_b"] = 3;
  j["gap"] = povm.value - std::max(brute.value, proj.value);
  j["seed"] = cfg.seed;
  return {j.dump(2) + "\n"};
}

struct ExportArgs {
  std::size_t d = 2;
  double alpha = 0.5;
  std::string r = "-1,-1,-1";
  std::string variant = "unbiased";
  std::size_t n = 2;
  std::string phaseModel = "uniform";
  std::string dims = "2,2";
  std::size_t rank = 0;
};

Output cmdExport(const std::string& family, const ExportArgs& a, const Globals& g) {
  auto emit = [](const DensityMatrix& rho) { return Output{serializeState(rho)}; };
  if (family == "werner") return emit(wernerState({a.d, a.alpha}));
  if (family == "two-qubit") {
    const auto r = parseDoubles(a.r, 3, "--r");
    return emit(twoQubitState({{r[0], r[1], r[2]}}));
  }
  if (family == "singlet") return emit(twoQubitState({{-1.0, -1.0, -1.0}}));
  if (family == "locking") {
    if (a.variant == "shift") return emit(sigmaLockingState(a.d));
    if (a.variant != "unbiased") throw InvalidArgument("--variant must be unbiased or shift");
    return emit(lockingState(LockingParams::fourier(a.d)));
  }
  if (family == "trine") return emit(trineState());
  if (family == "dqc1") {
    const PhaseModel pm = parsePhaseModel(a.phaseModel);
    const Dqc1Model m = pm == PhaseModel::Uniform ? Dqc1Model::uniform(a.n, a.alpha)
                                                  : Dqc1Model::haar(a.n, a.alpha, g.seed);
    return emit(buildExplicitState(m));
  }
  if (family == "random") {
    const auto dims = parseDims(a.dims);
    if (dims.size() != 2) throw InvalidArgument("--dims: random export needs two dimensions");
    const std::size_t rank = a.rank == 0 ? dims[0] * dims[1] : a.rank;
    return emit(randomDensityMatrix(dims[0], dims[1], rank, g.seed));
  }
  throw InvalidArgument("unknown family '" + family +
                        "' (werner, two-qubit, singlet, locking, trine, dqc1, random)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum and classical correlation measures of bipartite states"};
  app.name("qcorr");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Base RNG seed")->capture_default_str();
  app.add_option("--restarts", g.restarts, "Random restarts per optimization")->capture_default_str();
  app.add_option("--iters", g.iters, "Iteration budget per local search")->capture_default_str();
  app.add_option("--tol", g.tol, "Local search tolerance")->capture_default_str();
  app.add_option("--method", g.method, "simplex, annealing or grid")->capture_default_str();
  app.add_option("--out", g.outPath, "Write the result to this file instead of stdout");

  std::string statePath;
  bool noDiscordB = false;
  std::size_t povmA = 0;
  std::size_t povmB = 0;
  auto* analyze = app.add_subcommand("analyze", "Full correlation report of a state file (JSON)");
  analyze->add_option("state", statePath, "State file")->required();
  analyze->add_flag("--no-discord-b", noDiscordB, "Skip C_B^p and J_B^p");
  analyze->add_option("--povm-a", povmA, "Outcomes for Alice's POVM search (0 skips it)");
  analyze->add_option("--povm-b", povmB, "Outcomes for Bob's POVM search (0 skips it)");

  std::string dims;
  std::size_t alphaSteps = 101;
  auto* werner = app.add_subcommand("werner-scan", "Closed-form Werner curves (CSV)");
  werner->add_option("--dims", dims, "Comma list of d")->default_str("2,3,10");
  werner->add_option("--alpha-steps", alphaSteps, "Points on alpha in [0, 1]")->capture_default_str();

  std::size_t n = 10;
  std::size_t dqcSteps = 100;
  std::string phaseModel = "uniform";
  auto* dqc = app.add_subcommand("dqc1-scan", "DQC1 S(A:B), I, Q versus alpha (CSV)");
  dqc->add_option("--n", n, "Target qubits")->capture_default_str();
  dqc->add_option("--alpha-steps", dqcSteps, "Points on alpha in [0, 1]")->capture_default_str();
  dqc->add_option("--phase-model", phaseModel, "uniform or haar")->capture_default_str();

  std::string kind;
  std::size_t samples = 100;
  std::size_t mubs = 0;
  std::optional<std::uint64_t> replay;
  auto* campaign = app.add_subcommand("campaign", "Property campaigns (CSV rows, summary on stderr)");
  campaign->add_option("kind", kind, "prop1, bounds or qVsDiscord")->required();
  campaign->add_option("--samples", samples, "Number of samples")->capture_default_str();
  campaign->add_option("--dims", dims, "Dimensions to draw from, e.g. 2,3 or 2..3");
  campaign->add_option("--mubs", mubs, "MUB count for bounds (default d + 1)");
  campaign->add_option("--replay", replay, "Rerun the single sample with this seed");

  std::size_t lockD = 2;
  std::string variant = "unbiased";
  auto* lock = app.add_subcommand("lock", "Locking protocol report (JSON)");
  lock->add_option("--d", lockD, "Qudit dimension")->capture_default_str();
  lock->add_option("--variant", variant, "unbiased or shift")->capture_default_str();

  std::size_t trineGrid = 100;
  auto* trine = app.add_subcommand("trine", "Projective grid vs POVM optimum for the trine state");
  trine->add_option("--grid", trineGrid, "Grid points per Bloch angle")->capture_default_str();

  std::string family;
  ExportArgs ex;
  auto* exportCmd = app.add_subcommand("export-state", "Write a named state family as JSON");
  exportCmd->add_option("family", family, "werner, two-qubit, singlet, locking, trine, dqc1, random")
      ->required();
  exportCmd->add_option("--d", ex.d, "Dimension (werner, locking)");
  exportCmd->add_option("--alpha", ex.alpha, "Werner or DQC1 alpha");
  exportCmd->add_option("--r", ex.r, "Two-qubit r1,r2,r3");
  exportCmd->add_option("--variant", ex.variant, "Locking variant: unbiased or shift");
  exportCmd->add_option("--n", ex.n, "DQC1 target qubits");
  exportCmd->add_option("--phase-model", ex.phaseModel, "DQC1 phases: uniform or haar");
  exportCmd->add_option("--dims", ex.dims, "Random state dimensions dA,dB");
  exportCmd->add_option("--rank", ex.rank, "Random state rank (0 = full)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kIoOrParse;
  }

  Output result;
  try {
    if (*analyze) result = cmdAnalyze(statePath, g, noDiscordB, povmA, povmB);
    else if (*werner) result = cmdWernerScan(dims.empty() ? "2,3,10" : dims, alphaSteps);
    else if (*dqc) result = cmdDqc1Scan(n, dqcSteps, phaseModel, g.seed);
    else if (*campaign) result = cmdCampaign(kind, samples, dims, mubs, replay, g);
    else if (*lock) result = cmdLock(lockD, variant, g);
    else if (*trine) result = cmdTrine(trineGrid, g);
    else if (*exportCmd) result = cmdExport(family, ex, g);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kIoOrParse;
  } catch (const InvalidState& e) {
    err << "invalid state: " << e.what() << "\n";
    return kInvalidState;
  } catch (const DimensionMismatch& e) {
    err << "invalid state: " << e.what() << "\n";
    return kInvalidState;
  } catch (const NotHermitian& e) {
    err << "invalid state: " << e.what() << "\n";
    return kInvalidState;
  } catch (const UnsupportedDimension& e) {
    err << "unsupported dimension: " << e.what() << "\n";
    return kUnsupportedDimension;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kIoOrParse;
  }

  if (!g.outPath.empty()) {
    std::ofstream file(g.outPath, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << g.outPath << "'\n";
      return kIoOrParse;
    }
    file << result.text;
  } else {
    out << result.text;
  }
  err << result.summary;
  return result.code;
}

}  // namespace qcorr::cli
