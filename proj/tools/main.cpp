#include <cctype>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "swapalg/bracket.hpp"
#include "swapalg/cluster.hpp"
#include "swapalg/errors.hpp"
#include "swapalg/expr.hpp"
#include "swapalg/rank_model.hpp"
#include "swapalg/verify.hpp"

namespace {

using namespace swapalg;

std::vector<std::string> split_commas(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

PointSetPtr points_from(const std::string& csv) {
  auto names = split_commas(csv);
  for (const auto& n : names)
    if (n.empty()) throw BadParams("--points has an empty name");
  return mk_point_set(std::move(names));
}

Edge parse_edge_text(const std::string& s) {
  const auto dash = s.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == s.size())
    throw BadParams("edge '" + s + "' is not of the form U-V (1-based vertices)");
  int u = 0, v = 0;
  try {
    u = std::stoi(s.substr(0, dash));
    v = std::stoi(s.substr(dash + 1));
  } catch (const std::exception&) {
    throw BadParams("edge '" + s + "' is not of the form U-V (1-based vertices)");
  }
  return mk_edge(u - 1, v - 1);
}

std::vector<Edge> parse_edges(const std::string& csv) {
  std::vector<Edge> out;
  for (const auto& part : split_commas(csv)) out.push_back(parse_edge_text(part));
  return out;
}

std::string model_nf_str(const SwapPoly& f, int n) {
  const RankModel M = make_rank_model(n, f.point_set()->size());
  const ModelPoly nf = normal_form_model(expand_to_model(f, M), M);
  return nf.str([&](int v) { return model_var_name(M, v); });
}

void print_value(const SwapFraction& val, int rank) {
  const bool is_poly = val.den() == SwapPoly::constant(val.point_set(), Rat(1));
  if (rank != 0 && !is_poly && is_zero_Zn(val.den(), rank))
    throw DenominatorVanishesInZn("denominator vanishes in the rank-" + std::to_string(rank) +
                                  " quotient");
  std::cout << "value: " << val.str() << "\n";
  if (rank == 0) return;
  std::cout << "rank-" << rank << " numerator normal form: " << model_nf_str(val.num(), rank)
            << "\n";
  if (!is_poly)
    std::cout << "rank-" << rank << " denominator normal form: "
              << model_nf_str(val.den(), rank) << "\n";
}

int cmd_eval(const std::string& points_csv, const std::string& text, int rank) {
  const PointSetPtr ps = points_from(points_csv);
  print_value(eval_expr(parse_expr(text, ps), ps), rank);
  return 0;
}

int cmd_bracket(const std::string& points_csv, const std::string& e1, const std::string& e2) {
  const PointSetPtr ps = points_from(points_csv);
  const SwapFraction f = eval_expr(parse_expr(e1, ps), ps);
  const SwapFraction g = eval_expr(parse_expr(e2, ps), ps);
  print_value(bracket_fraction(f, g), 0);
  return 0;
}

int cmd_reduce(const std::string& points_csv, const std::string& text, int rank) {
  const PointSetPtr ps = points_from(points_csv);
  const SwapFraction val = eval_expr(parse_expr(text, ps), ps);
  const bool is_poly = val.den() == SwapPoly::constant(ps, Rat(1));
  if (is_poly) {
    std::cout << "normal form: " << model_nf_str(val.num(), rank) << "\n";
    return 0;
  }
  if (is_zero_Zn(val.den(), rank))
    throw DenominatorVanishesInZn("denominator vanishes in the rank-" + std::to_string(rank) +
                                  " quotient");
  std::cout << "numerator normal form: " << model_nf_str(val.num(), rank) << "\n";
  std::cout << "denominator normal form: " << model_nf_str(val.den(), rank) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, const std::map<std::string, std::string>& params,
               std::uint64_t seed, bool json) {
  const SuiteReport rep = run_suite(suite, params, seed);
  if (json) {
    std::cout << rep.to_json() << "\n";
  } else {
    std::cout << "suite " << rep.suite << ": " << rep.trials << " checks, "
              << rep.failures.size() << " failures (" << rep.elapsed_ms << " ms)\n";
    for (const Failure& f : rep.failures)
      std::cout << "  FAIL " << f.input << " | expected: " << f.expected
                << " | got: " << f.got << "\n";
  }
  return rep.passed() ? 0 : 1;
}

nlohmann::ordered_json report_json(const CheckReport& rep) {
  nlohmann::ordered_json j;
  j["name"] = rep.name;
  j["passed"] = rep.passed();
  auto items = nlohmann::ordered_json::array();
  for (const CheckItem& it : rep.items) {
    nlohmann::ordered_json ji;
    ji["label"] = it.label;
    ji["ok"] = it.ok;
    if (!it.detail.empty()) ji["detail"] = it.detail;
    items.push_back(std::move(ji));
  }
  j["items"] = std::move(items);
  return j;
}

void print_report(const CheckReport& rep) {
  std::cout << (rep.passed() ? "PASS " : "FAIL ") << rep.name << " (" << rep.items.size()
            << " checks)\n";
  for (const CheckItem& it : rep.items)
    if (!it.ok) std::cout << "  FAIL " << it.label << ": " << it.detail << "\n";
}

int cmd_cluster(const std::string& action, int k, const std::string& edges_csv, bool json) {
  const std::vector<Edge> edges = edges_csv.empty() ? std::vector<Edge>{}
                                                    : parse_edges(edges_csv);
  nlohmann::ordered_json j;
  j["k"] = k;
  if (action == "list") {
    const auto tris = enumerate_triangulations(k);
    if (json) {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& T : tris) {
        auto names = nlohmann::ordered_json::array();
        for (const Edge& e : T.diagonals()) names.push_back(edge_name(e));
        arr.push_back(std::move(names));
      }
      j["count"] = tris.size();
      j["triangulations"] = std::move(arr);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << tris.size() << " triangulations of the " << k << "-gon\n";
      for (size_t i = 0; i < tris.size(); ++i)
        std::cout << "  " << i << ": " << tris[i].str() << "\n";
    }
    return 0;
  }
  if (action == "epsilon") {
    const Triangulation T(k, edges);
    const auto eps = epsilon_matrix(T);
    if (json) {
      auto names = nlohmann::ordered_json::array();
      for (const Edge& e : T.diagonals()) names.push_back(edge_name(e));
      j["diagonals"] = std::move(names);
      j["eps"] = eps;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "diagonals:";
      for (const Edge& e : T.diagonals()) std::cout << " " << edge_name(e);
      std::cout << "\n";
      for (const auto& row : eps) {
        std::cout << "  [";
        for (size_t i = 0; i < row.size(); ++i) std::cout << (i ? " " : "") << row[i];
        std::cout << "]\n";
      }
    }
    return 0;
  }
  if (action == "flip") {
    if (edges.size() < 2)
      throw BadParams("flip needs --edges with the triangulation's diagonals plus the edge "
                      "to flip as the last entry");
    std::vector<Edge> diags(edges.begin(), edges.end() - 1);
    const Edge target = edges.back();
    const Triangulation T(k, diags);
    const auto [T2, e2] = flip(T, target);
    if (json) {
      j["flipped"] = edge_name(target);
      j["replacement"] = edge_name(e2);
      auto names = nlohmann::ordered_json::array();
      for (const Edge& e : T2.diagonals()) names.push_back(edge_name(e));
      j["diagonals"] = std::move(names);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "flip " << edge_name(target) << " -> " << edge_name(e2) << "\n";
      std::cout << "triangulation " << T2.str() << "\n";
    }
    return 0;
  }
  if (action == "theta") {
    std::vector<Edge> diags = edges;
    std::vector<Edge> targets;
    if (static_cast<int>(edges.size()) == k - 2) {
      diags.assign(edges.begin(), edges.end() - 1);
      targets = {edges.back()};
    }
    const Triangulation T(k, diags);
    if (targets.empty()) targets = T.diagonals();
    const PointSetPtr ps = polygon_points(k);
    if (json) {
      auto m = nlohmann::ordered_json::object();
      for (const Edge& e : targets) m[edge_name(e)] = theta_edge(ps, T, e).str();
      j["triangulation"] = T.str();
      j["theta"] = std::move(m);
      std::cout << j.dump(2) << "\n";
    } else {
      for (const Edge& e : targets)
        std::cout << "theta(" << edge_name(e) << ") = " << theta_edge(ps, T, e).str() << "\n";
    }
    return 0;
  }
  if (action == "check") {
    std::vector<Triangulation> tris;
    if (edges.empty())
      tris = enumerate_triangulations(k);
    else
      tris.emplace_back(k, edges);
    bool all_ok = true;
    auto arr = nlohmann::ordered_json::array();
    for (const Triangulation& T : tris) {
      std::vector<CheckReport> reports;
      reports.push_back(check_theta_poisson(T));
      for (const Edge& e : T.diagonals()) {
        reports.push_back(check_flip_compat(T, e));
        reports.push_back(check_mutation_poisson(T, e));
      }
      for (const CheckReport& rep : reports) {
        all_ok = all_ok && rep.passed();
        if (json)
          arr.push_back(report_json(rep));
        else
          print_report(rep);
      }
    }
    if (json) {
      j["passed"] = all_ok;
      j["reports"] = std::move(arr);
      std::cout << j.dump(2) << "\n";
    }
    return all_ok ? 0 : 1;
  }
  throw BadParams("unknown cluster action '" + action + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculator for the swapping algebra, its rank-n quotient, and the "
               "rank-2 cluster chart of the marked disc"};
  app.require_subcommand(1);
  app.footer("Set SWAPALG_THREADS to cap suite parallelism.");

  std::string points_csv, expr1, expr2, suite, cluster_action, edges_csv, mode;
  int rank = 0, k = 0, trials = 0, points_n = 0, size = 0, degree = 0, rand_trials = 0;
  std::uint64_t seed = 0;
  bool json = false;

  auto* eval = app.add_subcommand("eval", "evaluate an expression over a point set");
  eval->add_option("--points", points_csv, "comma-separated point names, anticlockwise")
      ->required();
  eval->add_option("--rank", rank, "also report normal forms in the rank-N quotient");
  eval->add_option("expr", expr1, "expression, e.g. br(p(x,z), det([x,z,y],[z,x,t]))")
      ->required();

  auto* bracket = app.add_subcommand("bracket", "bracket of two expressions");
  bracket->add_option("--points", points_csv, "comma-separated point names")->required();
  bracket->add_option("expr1", expr1, "first expression")->required();
  bracket->add_option("expr2", expr2, "second expression")->required();

  auto* reduce = app.add_subcommand("reduce", "normal form in the rank-N quotient");
  reduce->add_option("--rank", rank, "rank of the quotient (at least 2)")->required();
  reduce->add_option("--points", points_csv, "comma-separated point names")->required();
  reduce->add_option("expr", expr1, "expression")->required();

  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("suite", suite, "one of: jacobi, poisson_ideal, delta_r_l, domain, "
                                     "cross_ratio, nesting, theta_poisson, flip_compat, "
                                     "mutation_poisson, oracle_agreement")
      ->required();
  auto* opt_points = verify->add_option("--points", points_n, "number of circle points");
  auto* opt_rank = verify->add_option("--rank", rank, "rank of the quotient");
  auto* opt_k = verify->add_option("--k", k, "polygon size for the cluster suites");
  auto* opt_trials = verify->add_option("--trials", trials, "number of random trials");
  verify->add_option("--seed", seed, "random seed (default 0)");
  auto* opt_mode = verify->add_option("--mode", mode, "exhaustive or random");
  auto* opt_size = verify->add_option("--size", size, "determinant size");
  auto* opt_degree = verify->add_option("--degree", degree, "max degree of random elements");
  auto* opt_rand_trials =
      verify->add_option("--rand-trials", rand_trials, "randomized-oracle trials per element");
  verify->add_flag("--json", json, "emit the report as JSON");

  auto* cluster = app.add_subcommand("cluster", "triangulations and cluster coordinates");
  cluster->add_option("action", cluster_action, "list | epsilon | flip | theta | check")
      ->required();
  cluster->add_option("--k", k, "polygon size")->required();
  cluster->add_option("--edges", edges_csv,
                      "comma-separated diagonals as U-V (1-based), e.g. 1-3,1-4; for flip, "
                      "append the edge to flip as the last entry; for theta, optionally "
                      "append the target edge");
  cluster->add_flag("--json", json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(eval)) return cmd_eval(points_csv, expr1, rank);
    if (app.got_subcommand(bracket)) return cmd_bracket(points_csv, expr1, expr2);
    if (app.got_subcommand(reduce)) return cmd_reduce(points_csv, expr1, rank);
    if (app.got_subcommand(verify)) {
      std::map<std::string, std::string> params;
      if (opt_points->count()) params["points"] = std::to_string(points_n);
      if (opt_rank->count()) params["n"] = std::to_string(rank);
      if (opt_k->count()) params["k"] = std::to_string(k);
      if (opt_trials->count()) params["trials"] = std::to_string(trials);
      if (opt_mode->count()) params["mode"] = mode;
      if (opt_size->count()) params["size"] = std::to_string(size);
      if (opt_degree->count()) params["degree"] = std::to_string(degree);
      if (opt_rand_trials->count()) params["rand_trials"] = std::to_string(rand_trials);
      return cmd_verify(suite, params, seed, json);
    }
    if (app.got_subcommand(cluster)) return cmd_cluster(cluster_action, k, edges_csv, json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
