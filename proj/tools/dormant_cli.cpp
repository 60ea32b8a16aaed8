// Command-line front end. Exit codes: 0 ok, 2 bad input, 3 internal
// inconsistency, 4 I/O failure, 5 cross-check mismatch, 6 unmet
// mathematical precondition (e.g. a non-dormant base).

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "dormant/closed_form.hpp"
#include "dormant/enumeration.hpp"
#include "dormant/errors.hpp"
#include "dormant/fusion.hpp"
#include "dormant/graph.hpp"
#include "dormant/io.hpp"

using namespace dormant;

namespace {

enum Exit { kOk = 0, kInput = 2, kInternal = 3, kIo = 4, kMismatch = 5, kPrecondition = 6 };

struct ExitError : std::runtime_error {
  ExitError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

using Clock = std::chrono::steady_clock;

Json report(const std::string& command, Json inputs, Json outputs, Clock::time_point t0) {
  Json r;
  r["schema"] = kReportSchema;
  r["command"] = command;
  r["inputs"] = std::move(inputs);
  r["outputs"] = std::move(outputs);
  r["timing"] = Json{{"seconds", std::chrono::duration<double>(Clock::now() - t0).count()}};
  return r;
}

uint32_t checked_prime(int64_t p) {
  if (p <= 0 || p > static_cast<int64_t>(kMaxModulus))
    throw PreconditionViolated("p must be an odd prime (got " + std::to_string(p) + ")");
  require_odd_prime(static_cast<uint64_t>(p));
  return static_cast<uint32_t>(p);
}

NTable read_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ExitError(kIo, "cannot read " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ExitError(kInput, path + ": " + e.what());
  }
  return ntable_from_json(doc);
}

// ------------------------------------------------------------------ commands

struct PcurvatureArgs {
  int rank = 2;
  std::string potentials;
  int64_t p = 0;
  bool json = false;
};

int run_pcurvature(const PcurvatureArgs& a) {
  const auto t0 = Clock::now();
  const uint32_t p = checked_prime(a.p);
  if (a.rank < 1) throw PreconditionViolated("rank must be positive");
  const CompanionOper oper(p, static_cast<std::size_t>(a.rank), parse_potentials(p, a.potentials));
  const auto psi = p_curvature(companion_connection(oper));
  const bool dormant = psi.is_zero();
  if (a.json) {
    Json outputs;
    outputs["dormant"] = dormant;
    if (dormant) {
      outputs["psi"] = "zero";
    } else {
      Json rows = Json::array();
      for (std::size_t i = 0; i < psi.psi.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < psi.psi.cols(); ++j) row.push_back(rational_to_json(psi.psi(i, j)));
        rows.push_back(std::move(row));
      }
      outputs["psi"] = std::move(rows);
    }
    Json pots = Json::array();
    for (const auto& f : oper.potentials()) pots.push_back(polynomial_to_json(f));
    std::cout << report("pcurvature", Json{{"p", p}, {"rank", a.rank}, {"potentials", pots}},
                        std::move(outputs), t0)
                     .dump(2)
              << "\n";
  } else {
    if (dormant) {
      std::cout << "psi: zero\n";
    } else {
      std::cout << "psi:\n";
      for (std::size_t i = 0; i < psi.psi.rows(); ++i) {
        std::cout << " ";
        for (std::size_t j = 0; j < psi.psi.cols(); ++j) std::cout << " [" << psi.psi(i, j).to_string() << "]";
        std::cout << "\n";
      }
    }
    std::cout << "dormant: " << (dormant ? "true" : "false") << "\n";
  }
  return kOk;
}

struct EnumerateArgs {
  int64_t p = 0;
  std::string out;
  unsigned threads = 1;
};

int run_enumerate(const EnumerateArgs& a) {
  const uint32_t p = checked_prime(a.p);
  const auto e = enumerate_dormant_sl2(p, a.threads);
  const auto doc = ntable_to_json(e.table, "enumerate-sl2");
  std::ofstream out(a.out, std::ios::binary);
  if (!out) throw ExitError(kIo, "cannot write " + a.out);
  out << doc.dump(2) << "\n";
  out.close();
  if (!out) throw ExitError(kIo, "write failed for " + a.out);
  std::cout << "p = " << p << ": " << e.witnesses.size() << " dormant opers, table total "
            << e.table.total() << "\n";
  for (const auto& [k, n] : e.table.entries())
    std::cout << "  (" << k[0] << "," << k[1] << "," << k[2] << "): " << n << "\n";
  return kOk;
}

struct DegreeArgs {
  std::string table;
  int g = 0;
  int r = 0;
  std::string rho;
  std::string method = "character";
  uint64_t seed = kDefaultSeed;
  bool json = false;
};

int run_degree(const DegreeArgs& a) {
  const auto t0 = Clock::now();
  const NTable table = read_table(a.table);
  const auto rho = parse_int_list(a.rho);
  if (static_cast<int>(rho.size()) != a.r)
    throw PreconditionViolated("rho has " + std::to_string(rho.size()) + " labels but r = " +
                               std::to_string(a.r));
  Json outputs;
  std::optional<int64_t> value;
  if (a.method == "character" || a.method == "both") {
    const auto ring = build_ring(table);
    const auto d = degree_detailed(ring, characters(ring, a.seed), a.g, rho);
    outputs["character"] = Json{{"value", d.value}, {"residual", d.residual}};
    value = d.value;
  }
  if (a.method == "graph" || a.method == "both") {
    Json graphs = Json::array();
    for (const auto& graph : canonical_graphs(a.g, a.r)) {
      const auto d = graph_degree(graph, table, a.g, rho);
      graphs.push_back(Json{{"graph", graph.name()}, {"value", d}});
      if (value && *value != d) {
        std::cerr << "mismatch: " << graph.name() << " gives " << d << ", expected " << *value << "\n";
        if (a.json) std::cout << report("degree", Json{}, outputs, t0).dump(2) << "\n";
        return kMismatch;
      }
      value = d;
    }
    outputs["graphs"] = std::move(graphs);
  }
  outputs["degree"] = *value;
  if (a.json) {
    std::cout << report("degree",
                        Json{{"table", a.table}, {"g", a.g}, {"r", a.r}, {"rho", rho},
                             {"method", a.method}, {"seed", a.seed}},
                        std::move(outputs), t0)
                     .dump(2)
              << "\n";
  } else {
    std::cout << *value << "\n";
  }
  return kOk;
}

struct ProfileArgs {
  int ell = 4;
  int64_t p = 0;
  std::string witness = "sym";
  std::string base;
};

int run_profile(const ProfileArgs& a) {
  const auto t0 = Clock::now();
  const uint32_t p = checked_prime(a.p);
  if (a.witness != "sym") throw PreconditionViolated("unknown witness kind " + a.witness);
  if (a.ell < 2) throw PreconditionViolated("ell must be at least 2");
  const std::size_t m = static_cast<std::size_t>(2 * a.ell - 2);
  if (2 * a.ell - 1 >= static_cast<int>(p)) throw PreconditionViolated("need 2 ell - 1 < p");
  const CompanionOper base(p, 2, {parse_polynomial(p, a.base)});
  if (!is_dormant(companion_connection(base)))
    throw NotDormant("base f_2 = " + base.potential(2).to_string() + " is not dormant");
  const auto w = symmetric_power(base, m).companion;
  const auto kernel = kernel_sheaf_profile(w, true);
  const auto image = image_profile(w, true);
  const bool guaranteed = a.ell > 3 && 4 * a.ell < static_cast<int>(p) + 2 &&
                          static_cast<int>(p) > 2 * (2 * a.ell - 1);
  Json pots = Json::array();
  for (const auto& f : w.potentials()) pots.push_back(polynomial_to_json(f));
  Json outputs;
  outputs["witness_potentials"] = std::move(pots);
  outputs["kernel"] = profile_to_json(kernel);
  outputs["image"] = profile_to_json(image.profile);
  outputs["h0"] = image.h0;
  outputs["unramified"] = image.h0 == 0;
  outputs["pushforward_degree"] = pushforward_degree(p, a.ell);
  outputs["degrees_add_up"] = kernel.degree + image.profile.degree == pushforward_degree(p, a.ell);
  outputs["guaranteed_regime"] = guaranteed;
  std::cout << report("profile",
                      Json{{"ell", a.ell}, {"p", p}, {"witness", a.witness},
                           {"base", polynomial_to_json(base.potential(2))}},
                      std::move(outputs), t0)
                   .dump(2)
            << "\n";
  return kOk;
}

struct ClosedFormArgs {
  int64_t p = 0;
  int g = 0;
  int r = 0;
  int n = 2;
  bool ordered = false;
};

int run_verlinde(const ClosedFormArgs& a) {
  const auto t0 = Clock::now();
  const auto res = verlinde_sl2(checked_prime(a.p), a.g, a.r);
  std::cout << report("closed-form verlinde-sl2", Json{{"p", a.p}, {"g", a.g}, {"r", a.r}},
                      closed_form_to_json(res), t0)
                   .dump(2)
            << "\n";
  return kOk;
}

int run_joshi(const ClosedFormArgs& a) {
  const auto t0 = Clock::now();
  const auto res = joshi_sln(checked_prime(a.p), a.n, a.g, a.ordered);
  std::cout << report("closed-form joshi-sln",
                      Json{{"p", a.p}, {"n", a.n}, {"g", a.g}, {"ordered", a.ordered}},
                      closed_form_to_json(res), t0)
                   .dump(2)
            << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dormant opers on the 3-pointed projective line"};
  app.require_subcommand(1);
  std::function<int()> action;

  PcurvatureArgs pc;
  auto* cmd_pc = app.add_subcommand("pcurvature", "p-curvature of a companion oper");
  cmd_pc->add_option("--rank", pc.rank, "order of the oper")->required();
  cmd_pc->add_option("--potentials", pc.potentials,
                     "f_2/f_3/... with ascending coefficients separated by commas");
  cmd_pc->add_option("--p", pc.p, "odd prime")->required();
  cmd_pc->add_flag("--json", pc.json, "emit a JSON run report");
  cmd_pc->callback([&] { action = [&] { return run_pcurvature(pc); }; });

  EnumerateArgs en;
  auto* cmd_en = app.add_subcommand("enumerate-sl2", "enumerate dormant rank-2 opers");
  cmd_en->add_option("--p", en.p, "odd prime >= 5")->required();
  cmd_en->add_option("--out", en.out, "output table file")->required();
  cmd_en->add_option("--threads", en.threads, "worker threads (0 = all cores)");
  cmd_en->callback([&] { action = [&] { return run_enumerate(en); }; });

  DegreeArgs dg;
  auto* cmd_dg = app.add_subcommand("degree", "generic degree from a structure-constant table");
  cmd_dg->add_option("--table", dg.table, "table file")->required();
  cmd_dg->add_option("--g", dg.g, "genus")->required();
  cmd_dg->add_option("--r", dg.r, "number of marked points")->required();
  cmd_dg->add_option("--rho", dg.rho, "comma-separated labels");
  cmd_dg->add_option("--method", dg.method, "character, graph or both")
      ->check(CLI::IsMember({"character", "graph", "both"}));
  cmd_dg->add_option("--seed", dg.seed, "seed for character extraction");
  cmd_dg->add_flag("--json", dg.json, "emit a JSON run report");
  cmd_dg->callback([&] { action = [&] { return run_degree(dg); }; });

  ProfileArgs pr;
  auto* cmd_pr = app.add_subcommand("profile", "kernel and image profiles of a Sym witness");
  cmd_pr->add_option("--ell", pr.ell, "ell; the witness has order 2 ell - 1")->required();
  cmd_pr->add_option("--p", pr.p, "odd prime")->required();
  cmd_pr->add_option("--witness", pr.witness, "witness kind (sym)");
  cmd_pr->add_option("--base", pr.base, "f_2 coefficients c0,c1,c2 of the rank-2 base")->required();
  cmd_pr->callback([&] { action = [&] { return run_profile(pr); }; });

  ClosedFormArgs cf;
  auto* cmd_cf = app.add_subcommand("closed-form", "closed-form degree sums");
  cmd_cf->require_subcommand(1);
  auto* cmd_v = cmd_cf->add_subcommand("verlinde-sl2", "trigonometric sl2 sum");
  cmd_v->add_option("--p", cf.p)->required();
  cmd_v->add_option("--g", cf.g)->required();
  cmd_v->add_option("--r", cf.r);
  cmd_v->callback([&] { action = [&] { return run_verlinde(cf); }; });
  auto* cmd_j = cmd_cf->add_subcommand("joshi-sln", "root-of-unity sl_n sum");
  cmd_j->add_option("--p", cf.p)->required();
  cmd_j->add_option("--n", cf.n)->required();
  cmd_j->add_option("--g", cf.g)->required();
  cmd_j->add_flag("--ordered", cf.ordered, "sum over ordered tuples");
  cmd_j->callback([&] { action = [&] { return run_joshi(cf); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    return action();
  } catch (const ExitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code;
  } catch (const NotDormant& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const PreconditionViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const DegreeBoundViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const TypeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const ComplexityRefusal& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
