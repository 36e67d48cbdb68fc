// Command-line front end: bound queries, survey tables, code construction,
// verification and parameter sweeps for constant dimension codes.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cdc/asymptotics.hpp"
#include "cdc/bounds_lower.hpp"
#include "cdc/bounds_upper.hpp"
#include "cdc/codefile.hpp"
#include "cdc/construction.hpp"
#include "cdc/errors.hpp"
#include "cdc/partial_spreads.hpp"
#include "cdc/tables.hpp"
#include "cdc/verify.hpp"
#include "json.hpp"

using json = nlohmann::json;
using namespace cdc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParameter = 2;
constexpr int kExitBudget = 3;

std::ostream& output_stream(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw ParameterError("cannot open output file: " + path);
  return file;
}

json bound_json(const BoundValue& b) {
  return json{{"name", b.source}, {"value", b.value.get_str()}};
}

int cmd_bound(std::uint32_t q, int v, int d, int k, const std::string& format,
              const std::string& out_path) {
  auto up = upper_bound_report(q, v, d, k);
  auto lo = lower_bound_report(q, v, d, k);
  std::ofstream file;
  auto& out = output_stream(out_path, file);
  if (format == "json") {
    json j;
    j["params"] = {{"q", q}, {"v", v}, {"d", d}, {"k", k}};
    j["lower"] = json::array();
    for (const auto& b : lo.lower) j["lower"].push_back(bound_json(b));
    j["upper"] = json::array();
    for (const auto& b : up.upper) j["upper"].push_back(bound_json(b));
    j["best_lower"] = bound_json(lo.best_lower);
    j["best_upper"] = bound_json(up.best_upper);
    if (up.mrd_subclass_upper)
      j["mrd_subclass_upper"] = bound_json(*up.mrd_subclass_upper);
    out << j.dump(2) << '\n';
  } else {
    out << "A_" << q << "(" << v << "," << d << ";" << k << ")\n";
    out << "lower bounds:\n";
    for (const auto& b : lo.lower)
      out << "  " << b.value.get_str() << "  [" << b.source << "]\n";
    out << "upper bounds:\n";
    for (const auto& b : up.upper)
      out << "  " << b.value.get_str() << "  [" << b.source << "]\n";
    out << "best: " << lo.best_lower.value.get_str() << " <= A <= "
        << up.best_upper.value.get_str() << "   (" << lo.best_lower.source
        << " / " << up.best_upper.source << ")\n";
    if (up.mrd_subclass_upper)
      out << "codes containing a lifted MRD subcode: <= "
          << up.mrd_subclass_upper->value.get_str() << "\n";
  }
  return kExitOk;
}

int cmd_table(int which, const std::string& format,
              const std::string& out_path) {
  std::ofstream file;
  auto& out = output_stream(out_path, file);
  const char* headers[] = {"v", "bklb", "mrdb", "bkub", "lold", "lnew", "ea"};
  const std::string sep = format == "csv" ? "," : "  ";
  for (int c = 0; c < 7; ++c) out << (c ? sep : "") << headers[c];
  out << '\n';
  if (which == 1) {
    for (const auto& row : survey_table_sizes()) {
      out << row.v << sep << row.bklb.get_str() << sep << row.mrdb.get_str()
          << sep << row.bkub.get_str() << sep << row.lold.get_str() << sep
          << row.lnew.get_str() << sep << (row.ea ? row.ea->get_str() : "");
      out << '\n';
    }
  } else {
    auto rows = which == 2 ? survey_table_vs_lmrd() : survey_table_vs_mrd_bound();
    for (const auto& row : rows) {
      out << row.v;
      for (const auto& cell : row.cols)
        out << sep << (cell ? format_fixed(*cell, 6) : "");
      out << '\n';
    }
  }
  return kExitOk;
}

int cmd_construct(const std::string& method, std::uint32_t q, int v, int d,
                  int k, const std::string& order_name,
                  const std::string& out_path) {
  SubspaceCode code;
  if (method == "lmrd") {
    if (d / 2 <= std::min(k, v - k))
      code = lift(gabidulin(q, k, v - k, d / 2));
    else
      code = single_subspace_code(q, v, k);
  } else if (method == "spread") {
    code = spread_construct(q, v, k);
  } else if (method == "greedy") {
    GreedyOrder order = GreedyOrder::weight;
    if (order_name == "enumeration") order = GreedyOrder::enumeration;
    else if (order_name == "reverse") order = GreedyOrder::reverse;
    else if (order_name != "weight")
      throw ParameterError("unknown order: " + order_name);
    code = greedy_cdc(q, v, d, k, order);
  } else if (method == "improved-linkage") {
    code = best_linkage_construct(q, v, d, k);
  } else {
    throw ParameterError("unknown construction method: " + method);
  }
  std::ofstream file;
  auto& out = output_stream(out_path, file);
  write_code_file(out, code);
  std::cerr << "constructed (" << code.v << "," << code.words.size() << ","
            << (code.claimed_d ? std::to_string(*code.claimed_d) : "inf")
            << ";" << code.k << ")_" << q << " via " << method;
  if (method == "greedy") std::cerr << " order=" << order_name;
  std::cerr << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& path, std::uint64_t budget, bool serial,
               bool as_json) {
  SubspaceCode code = read_code_file_path(path);
  VerifyReport rep =
      serial ? verify_code_serial(code, budget) : verify_code(code, budget);
  bool ok = rep.meets(code.claimed_d);
  if (as_json) {
    json j;
    j["n"] = rep.n;
    j["k_uniform"] = rep.k_uniform;
    j["rref_ok"] = rep.rref_ok;
    j["distinct_ok"] = rep.distinct_ok;
    j["budget_exceeded"] = rep.budget_exceeded;
    j["pairs_checked"] = rep.pairs_checked;
    if (rep.min_distance) j["min_distance"] = *rep.min_distance;
    if (code.claimed_d) j["claimed_distance"] = *code.claimed_d;
    if (rep.witness) j["witness"] = {rep.witness->first, rep.witness->second};
    j["ok"] = ok;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "codewords: " << rep.n << '\n';
    std::cout << "well-formed: "
              << (rep.k_uniform && rep.rref_ok && rep.distinct_ok ? "yes" : "no");
    if (!rep.k_uniform) std::cout << " (mixed dimensions)";
    if (!rep.rref_ok) std::cout << " (non-rref codeword)";
    if (!rep.distinct_ok) std::cout << " (duplicate codeword)";
    std::cout << '\n';
    if (rep.min_distance)
      std::cout << "minimum distance: " << *rep.min_distance
                << (rep.budget_exceeded ? " (partial scan)" : "") << '\n';
    else if (rep.n <= 1)
      std::cout << "minimum distance: infinite\n";
    if (code.claimed_d) std::cout << "claimed distance: " << *code.claimed_d << '\n';
    if (!ok && rep.witness)
      std::cout << "witness pair: " << rep.witness->first << " "
                << rep.witness->second << '\n';
    std::cout << (ok ? "OK" : "FAILED") << '\n';
  }
  if (rep.budget_exceeded) return kExitBudget;
  return ok ? kExitOk : kExitVerifyFailed;
}

struct SweepRow {
  std::uint32_t q;
  int v, d, k;
  Int lower, upper;
  std::string lower_src, upper_src;
  bool linkage_attains;
};

int cmd_sweep(const std::vector<std::uint32_t>& qs, int vmax,
              const std::string& format, const std::string& out_path) {
  std::vector<std::tuple<std::uint32_t, int, int, int>> cells;
  for (std::uint32_t q : qs) {
    prime_power_decompose(q);
    for (int v = 4; v <= vmax; ++v)
      for (int k = 2; 2 * k <= v; ++k)
        for (int d = 4; d <= 2 * k; d += 2) cells.emplace_back(q, v, d, k);
  }
  std::vector<SweepRow> rows(cells.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(cells.size()); ++i) {
    auto [q, v, d, k] = cells[i];
    auto lo = lower_bound_report(q, v, d, k);
    auto up = upper_bound_report(q, v, d, k);
    Int linkage = 0;
    for (const auto& b : lo.lower)
      if (b.source.rfind("improved-linkage", 0) == 0)
        linkage = std::max(linkage, b.value);
    rows[i] = {q,
               v,
               d,
               k,
               lo.best_lower.value,
               up.best_upper.value,
               lo.best_lower.source,
               up.best_upper.source,
               linkage == lo.best_lower.value};
  }
  std::ofstream file;
  auto& out = output_stream(out_path, file);
  const std::string sep = format == "csv" ? "," : "  ";
  out << "q" << sep << "v" << sep << "d" << sep << "k" << sep << "lower" << sep
      << "lower_source" << sep << "upper" << sep << "upper_source" << sep
      << "improved_linkage_attains\n";
  std::size_t attained = 0;
  for (const auto& r : rows) {
    out << r.q << sep << r.v << sep << r.d << sep << r.k << sep
        << r.lower.get_str() << sep << r.lower_src << sep << r.upper.get_str()
        << sep << r.upper_src << sep << (r.linkage_attains ? 1 : 0) << '\n';
    attained += r.linkage_attains;
  }
  out << "# improved_linkage_attains_fraction "
      << format_fixed(Rat(static_cast<unsigned long>(attained),
                          static_cast<unsigned long>(rows.size())),
                      4)
      << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounds, constructions and verification for constant dimension codes"};
  app.require_subcommand(1);

  std::uint32_t q = 2;
  int v = 7, d = 4, k = 3;
  std::string format = "text", out_path, order = "weight", method, path;
  std::uint64_t budget = kDefaultPairBudget;
  bool serial = false, as_json = false;
  int which = 1, vmax = 10;
  std::vector<std::uint32_t> qset{2};

  auto add_params = [&](CLI::App* cmd, bool with_d) {
    cmd->add_option("-q", q, "field size (prime power)");
    cmd->add_option("-v", v, "ambient dimension");
    if (with_d) cmd->add_option("-d", d, "minimum subspace distance (even)");
    cmd->add_option("-k", k, "codeword dimension");
  };

  auto* bound = app.add_subcommand("bound", "print all applicable bounds");
  add_params(bound, true);
  bound->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  bound->add_option("--out", out_path);

  auto* table = app.add_subcommand("table", "survey tables for A_2(v,4;3)");
  table->add_option("which", which, "1 = sizes, 2 = vs LMRD, 3 = vs MRD bound")
      ->check(CLI::Range(1, 3));
  table->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));
  table->add_option("--out", out_path);

  auto* construct = app.add_subcommand("construct", "build an explicit code");
  construct
      ->add_option("method", method,
                   "lmrd | spread | greedy | improved-linkage")
      ->required();
  add_params(construct, true);
  construct->add_option("--order", order, "greedy scan order")
      ->check(CLI::IsMember({"weight", "enumeration", "reverse"}));
  construct->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "check a code file");
  verify->add_option("file", path)->required();
  verify->add_option("--budget", budget, "pairwise distance budget");
  verify->add_flag("--serial", serial, "use the serial reference scan");
  verify->add_flag("--json", as_json);

  auto* sweep = app.add_subcommand("sweep", "bounds over a parameter range");
  sweep->add_option("--q", qset, "field sizes")->delimiter(',');
  sweep->add_option("--vmax", vmax);
  sweep->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));
  sweep->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
    if (bound->parsed()) return cmd_bound(q, v, d, k, format, out_path);
    if (table->parsed()) return cmd_table(which, format, out_path);
    if (construct->parsed())
      return cmd_construct(method, q, v, d, k, order, out_path);
    if (verify->parsed()) return cmd_verify(path, budget, serial, as_json);
    if (sweep->parsed()) return cmd_sweep(qset, vmax, format, out_path);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParameter;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return kExitParameter;
  }
  return kExitOk;
}
