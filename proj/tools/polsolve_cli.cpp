// polsolve command line: instance generation, corruption, solving, IRS
// simulation, bound formulas and Monte-Carlo experiments.
//
// Exit codes: 0 success, 1 decode failure (solve), 2 usage/parse error.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "polsolve/polsolve.hpp"

namespace {

using namespace polsolve;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << content;
}

struct GlobalOpts {
  uint64_t seed = 0;
  bool quiet = false;
};

void add_gen(CLI::App& app, const GlobalOpts& g) {
  auto* cmd = app.add_subcommand("gen", "generate a random instance file");
  auto opts = std::make_shared<std::map<std::string, std::string>>();
  auto field_spec = std::make_shared<std::string>("GF(2^4)");
  auto n = std::make_shared<size_t>(3);
  auto m = std::make_shared<size_t>(3);
  auto degA = std::make_shared<int>(2);
  auto df = std::make_shared<int>(2);
  auto dg = std::make_shared<int>(2);
  auto mode = std::make_shared<std::string>("planted");
  auto out = std::make_shared<std::string>("-");
  cmd->add_option("--field", *field_spec, "field spec, e.g. GF(7) or GF(2^4;1,1,0,0,1)");
  cmd->add_option("-n", *n, "number of unknowns");
  cmd->add_option("-m", *m, "number of equations (m >= n)");
  cmd->add_option("--degA", *degA, "entry degree bound of the random matrix");
  cmd->add_option("--df", *df, "max numerator degree");
  cmd->add_option("--dg", *dg, "exact denominator degree");
  cmd->add_option("--mode", *mode, "planted | cramer")
      ->check(CLI::IsMember({"planted", "cramer"}));
  cmd->add_option("-o,--out", *out, "output path ('-' for stdout)");
  cmd->callback([=, &g] {
    Field field = Field::parse(*field_spec);
    auto gen_mode = *mode == "cramer" ? GeneratorMode::kCramer : GeneratorMode::kPlanted;
    auto [sys, sol] = generate_instance(field, *n, *m, *degA, *df, *dg, g.seed, gen_mode);
    write_file(*out, serialize_instance(sys, &sol));
  });
}

void add_corrupt(CLI::App& app, const GlobalOpts& g) {
  auto* cmd = app.add_subcommand("corrupt",
                                 "evaluate an instance at L points with e random errors");
  auto in = std::make_shared<std::string>();
  auto out = std::make_shared<std::string>("-");
  auto L = std::make_shared<size_t>(0);
  auto e = std::make_shared<size_t>(0);
  cmd->add_option("-i,--in", *in, "instance file (with planted SOLUTION)")->required();
  cmd->add_option("-L", *L, "number of evaluation points")->required();
  cmd->add_option("-e", *e, "number of erroneous points");
  cmd->add_option("-o,--out", *out, "samples output path");
  cmd->callback([=, &g] {
    Instance inst = parse_instance(read_file(*in));
    if (!inst.solution)
      throw UsageError("instance has no SOLUTION block; corrupt needs the planted solution");
    Rng rng(g.seed);
    auto points = choose_evaluation_points(inst.sys, inst.solution->g, *L, rng);
    auto plan = ErrorPlan::random(*L, *e, rng);
    auto samples = sample_black_box(inst.sys, *inst.solution, points, plan, rng);
    write_file(*out, serialize_samples(*inst.field, inst.sys.m, inst.sys.n, samples));
  });
}

void add_solve(CLI::App& app, const GlobalOpts& g, int& exit_code) {
  auto* cmd = app.add_subcommand("solve", "decode a samples file");
  auto in = std::make_shared<std::string>();
  auto method = std::make_shared<std::string>("glz");
  auto df = std::make_shared<int>(0);
  auto dg = std::make_shared<int>(0);
  auto e = std::make_shared<int>(0);
  cmd->add_option("-i,--in", *in, "samples file")->required();
  cmd->add_option("--method", *method, "glz | bk")->check(CLI::IsMember({"glz", "bk"}));
  cmd->add_option("--df", *df, "max numerator degree")->required();
  cmd->add_option("--dg", *dg, "exact denominator degree")->required();
  cmd->add_option("-e", *e, "error bound");
  cmd->callback([=, &g, &exit_code] {
    SampleFile sf = parse_samples(read_file(*in));
    DecodeOutcome out{DecodeStatus::kRankDeficient, {}, Poly(*sf.field)};
    if (*method == "bk") {
      out = bk_solve(sf.samples, sf.n, *df, *dg, *e);
    } else {
      DecodeParams dp;
      dp.n = sf.n;
      dp.df = *df;
      dp.dg = *dg;
      dp.e = *e;
      Rng rng(g.seed);
      out = decode(sf.samples, dp, rng);
    }
    if (!out.ok()) {
      if (!g.quiet) std::cout << "FAIL " << to_string(out.status) << "\n";
      exit_code = 1;
      return;
    }
    for (size_t i = 0; i < out.solution.f.size(); ++i)
      std::cout << "SOLUTION F " << (i + 1) << " : " << out.solution.f[i].to_string() << "\n";
    std::cout << "SOLUTION G : " << out.solution.g.to_string() << "\n";
    if (!g.quiet) std::cout << "LOCATOR : " << out.locator.to_string() << "\n";
  });
}

void add_bounds(CLI::App& app) {
  auto* cmd = app.add_subcommand("bounds", "print point-count and probability bounds");
  auto field_spec = std::make_shared<std::string>("GF(2^4)");
  auto n = std::make_shared<size_t>(3);
  auto df = std::make_shared<int>(2);
  auto dg = std::make_shared<int>(2);
  auto e = std::make_shared<int>(5);
  auto t = std::make_shared<int>(0);
  cmd->add_option("--field", *field_spec, "field spec");
  cmd->add_option("-n", *n, "number of unknowns / interleaving degree");
  cmd->add_option("--df", *df, "max numerator degree");
  cmd->add_option("--dg", *dg, "denominator degree");
  cmd->add_option("-e", *e, "error bound");
  cmd->add_option("-t", *t, "rank-drop bound (formula only)");
  cmd->callback([=] {
    Field field = Field::parse(*field_spec);
    const double q = static_cast<double>(field.q());
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "L_GLZ=%zu L_BK=%zu L*=%zu p_glz=%.6g p_bms=%.6g\n",
                  l_glz(*n, *df, *dg, *e), l_bk(*df, *dg, *e, *t), l_star(*n, *df, *dg, *e),
                  static_cast<double>(*dg + *e) / q,
                  std::exp(std::pow(q, 2.0 - static_cast<double>(*n))) / (q - 1.0));
    std::cout << buf;
  });
}

void add_irs(CLI::App& app, const GlobalOpts& g) {
  auto* cmd = app.add_subcommand("irs", "interleaved RS / SPR Monte-Carlo simulation");
  auto q = std::make_shared<uint64_t>(16);
  auto n_c = std::make_shared<size_t>(16);
  auto k = std::make_shared<size_t>(4);
  auto r = std::make_shared<size_t>(3);
  auto e = std::make_shared<size_t>(7);
  auto trials = std::make_shared<size_t>(1000);
  cmd->add_option("-q", *q, "field size (prime or power of two)");
  cmd->add_option("--nc", *n_c, "code length");
  cmd->add_option("-k", *k, "code dimension");
  cmd->add_option("-r", *r, "interleaving degree");
  cmd->add_option("-e", *e, "corrupted columns per trial");
  cmd->add_option("--trials", *trials, "number of trials");
  cmd->callback([=, &g] {
    Field field = (*q & (*q - 1)) == 0 && *q > 2
                      ? Field::gf2ext(static_cast<unsigned>(63 - __builtin_clzll(*q)))
                      : Field(*q);
    IRSParams params = IRSParams::make(field, *n_c, *k, *r);
    size_t failures = 0;
    for (size_t trial = 0; trial < *trials; ++trial) {
      Rng rng(derive_seed(g.seed, trial + 1));
      std::vector<Poly> messages;
      for (size_t i = 0; i < *r; ++i)
        messages.push_back(Poly::random(field, static_cast<int>(*k) - 1, rng));
      SPRInstance inst = make_spr_instance(params, std::move(messages), *e, rng);
      DecodeOutcome out = spr_decode(inst.received, params, *e);
      if (!out.ok() || out.solution.f != inst.messages) ++failures;
    }
    ReferenceBounds b = reference_bounds(field.q(), *n_c, *k, *r, *e, 0);
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "q=%llu nc=%zu k=%zu r=%zu e=%zu trials=%zu failures=%zu "
                  "p_observed=%.6g e_max_collab=%zu p_spr=%.6g p_bms=%.6g\n",
                  static_cast<unsigned long long>(field.q()), *n_c, *k, *r, *e, *trials,
                  failures, static_cast<double>(failures) / static_cast<double>(*trials),
                  b.e_max_collab, b.p_spr, b.p_bms);
    std::cout << buf;
  });
}

void add_experiment(CLI::App& app, const GlobalOpts& g) {
  auto* cmd = app.add_subcommand("experiment", "Monte-Carlo failure-rate batches, CSV out");
  auto fields = std::make_shared<std::vector<std::string>>(
      std::vector<std::string>{"GF(2^4)", "GF(2^5)", "GF(2^6)"});
  auto n = std::make_shared<size_t>(3);
  auto m = std::make_shared<size_t>(3);
  auto degA = std::make_shared<int>(2);
  auto df = std::make_shared<int>(2);
  auto dg = std::make_shared<int>(2);
  auto e = std::make_shared<int>(5);
  auto modes = std::make_shared<std::vector<std::string>>(std::vector<std::string>{"glz"});
  auto L = std::make_shared<size_t>(0);
  auto systems = std::make_shared<size_t>(20);
  auto trials = std::make_shared<size_t>(1000);
  auto method = std::make_shared<std::string>("glz");
  auto threads = std::make_shared<unsigned>(std::thread::hardware_concurrency());
  auto out = std::make_shared<std::string>("-");
  cmd->add_option("--fields", *fields, "field specs to sweep");
  cmd->add_option("-n", *n, "unknowns");
  cmd->add_option("-m", *m, "equations");
  cmd->add_option("--degA", *degA, "matrix entry degree");
  cmd->add_option("--df", *df, "max numerator degree");
  cmd->add_option("--dg", *dg, "exact denominator degree");
  cmd->add_option("-e", *e, "errors per trial");
  cmd->add_option("--L-mode", *modes, "point-count modes to sweep: glz|bk|star|explicit");
  cmd->add_option("-L", *L, "explicit point count (mode explicit)");
  cmd->add_option("--systems", *systems, "systems per row");
  cmd->add_option("--trials", *trials, "trials per system");
  cmd->add_option("--method", *method, "glz | bk")->check(CLI::IsMember({"glz", "bk"}));
  cmd->add_option("--threads", *threads, "worker threads");
  cmd->add_option("--out", *out, "CSV output path ('-' for stdout)");
  cmd->callback([=, &g] {
    std::string csv = csv_header() + "\n";
    for (const std::string& fs : *fields) {
      for (const std::string& mode_name : *modes) {
        ExperimentConfig cfg{Field::parse(fs)};
        cfg.n = *n;
        cfg.m = *m;
        cfg.degA = *degA;
        cfg.df = *df;
        cfg.dg = *dg;
        cfg.e = *e;
        cfg.systems = *systems;
        cfg.trials = *trials;
        cfg.seed = g.seed;
        cfg.threads = std::max(1u, *threads);
        cfg.method = *method == "bk" ? Method::kBk : Method::kGlz;
        if (mode_name == "glz") cfg.l_mode = LMode::kGlz;
        else if (mode_name == "bk") cfg.l_mode = LMode::kBk;
        else if (mode_name == "star") cfg.l_mode = LMode::kStar;
        else if (mode_name == "explicit") cfg.l_mode = LMode::kExplicit, cfg.explicit_L = *L;
        else throw UsageError("unknown L mode: " + mode_name);
        ExperimentResult r = run_experiment(cfg);
        csv += csv_row(r) + "\n";
        if (!g.quiet && *out != "-") std::cerr << csv_row(r) << "\n";
      }
    }
    write_file(*out, csv);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polynomial linear system solving with erroneous evaluations"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--seed", g.seed, "master seed");
  app.add_flag("--quiet", g.quiet, "suppress auxiliary output");

  int exit_code = 0;
  add_gen(app, g);
  add_corrupt(app, g);
  add_solve(app, g, exit_code);
  add_bounds(app);
  add_irs(app, g);
  add_experiment(app, g);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
