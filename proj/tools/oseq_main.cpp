// Command-line front end: generate sequences, verify files, print counts and
// reference tables.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "oseq/circuits.hpp"
#include "oseq/counting.hpp"
#include "oseq/graph.hpp"
#include "oseq/lempel.hpp"
#include "oseq/sequence_io.hpp"
#include "oseq/verify.hpp"

namespace {

using nlohmann::json;
using namespace oseq;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

rank_t env_max_rank() {
  const char* env = std::getenv("OSEQ_MAX_RANK");
  if (env == nullptr || *env == '\0') return kDefaultRankCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) {
    throw std::invalid_argument("OSEQ_MAX_RANK must be a positive integer");
  }
  return std::min<rank_t>(v, kHardRankLimit);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string kind_label(bool is_os) { return is_os ? "os" : "nos"; }

int run_generate(const std::string& kind, int k, int n,
                 const std::string& format, const std::string& out_path) {
  const Params p(k, n, env_max_rank());
  p.require_materializable();

  const bool is_os = kind == "os";
  const Sequence s = is_os ? os_from_x(p) : nos_from_x(p);

  // Re-check the emitted artifact end to end before writing anything.
  const bool ok = is_os ? is_orientable(s, s.order)
                        : is_negative_orientable(s, s.order);
  const count_t expected = is_os
                               ? checked_mul(static_cast<count_t>(k), x_size(p))
                               : x_size(p);
  if (!ok || s.period() != expected) {
    std::cerr << "error: generated sequence failed self-verification\n";
    return kExitInternal;
  }

  const std::string line = format_sequence_line(s);
  const std::string manifest = manifest_json(kind_label(is_os), s, line);

  if (format == "json") {
    json doc = json::parse(manifest);
    doc["sequence"] = line;
    const std::string payload = doc.dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << payload;
    } else {
      write_file(out_path, payload);
    }
    return kExitOk;
  }

  if (out_path.empty()) {
    std::cout << line << "\n";
  } else {
    write_file(out_path, line + "\n");
    write_file(out_path + ".json", manifest);
    std::cout << manifest;
  }
  return kExitOk;
}

int run_verify(const std::string& path, int k, int n, const std::string& mode) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    return kExitUsage;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();

  const Sequence s = parse_sequence_line(buffer.str(), k, n);
  const VerifyMode vm = mode == "window" ? VerifyMode::window
                        : mode == "os"   ? VerifyMode::orientable
                                         : VerifyMode::negative_orientable;
  const auto violation = find_violation(s, n, vm);
  if (!violation) {
    std::cout << "ok: " << mode << " property holds (k=" << k << ", n=" << n
              << ", period=" << s.period() << ")\n";
    return kExitOk;
  }
  const char* transform = nullptr;
  switch (violation->kind) {
    case Violation::Kind::duplicate: transform = "duplicate"; break;
    case Violation::Kind::reverse_match: transform = "reverse"; break;
    case Violation::Kind::reverse_negate_match: transform = "reverse-negate"; break;
  }
  std::cout << "violation: i=" << violation->i << " j=" << violation->j
            << " transform=" << transform << "\n";
  return kExitViolation;
}

json counts_json(int k, int n, rank_t cap) {
  const CountReport rep = count_report(k, n);
  const Params p(k, n, cap);
  p.require_materializable();
  const NiCounts enumerated = n_i_counts_enumerated(p);
  const count_t achieved = x_size(p);

  json j;
  j["k"] = rep.k;
  j["n"] = rep.n;
  j["delta"] = rep.delta;
  j["m_odd_part"] = rep.m_odd_part;
  j["r_middle"] = rep.r_middle;
  j["e_size"] = rep.e_size;
  j["nega_tuples"] = rep.nega_tuples;
  j["n_formula"] = {rep.n_formula.n0, rep.n_formula.n1, rep.n_formula.n2};
  j["n_enumerated"] = {enumerated.n0, enumerated.n1, enumerated.n2};
  j["s_partition"] = rep.s_partition;
  j["s_bound"] = rep.s_bound;
  j["x_achieved"] = achieved;
  j["nos_upper_bound"] = rep.nos_ub;
  j["os_upper_bound_next"] = rep.os_ub_next;
  return j;
}

int run_counts(int k, int n, const std::string& format) {
  const json j = counts_json(k, n, env_max_rank());
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  const auto triple = [](const json& arr) {
    std::ostringstream os;
    os << "(" << arr[0] << ", " << arr[1] << ", " << arr[2] << ")";
    return os.str();
  };
  std::cout << "k                     " << j["k"] << "\n"
            << "n                     " << j["n"] << "\n"
            << "delta                 " << j["delta"] << "\n"
            << "odd part of n         " << j["m_odd_part"] << "\n"
            << "r (middle shell)      " << j["r_middle"] << "\n"
            << "|E|                   " << j["e_size"] << "\n"
            << "negasymmetric tuples  " << j["nega_tuples"] << "\n"
            << "N by formula          " << triple(j["n_formula"]) << "\n"
            << "N by enumeration      " << triple(j["n_enumerated"]) << "\n"
            << "s (partition form)    " << j["s_partition"] << "\n"
            << "s lower bound         " << j["s_bound"] << "\n"
            << "|X| achieved          " << j["x_achieved"] << "\n"
            << "NOS period bound      " << j["nos_upper_bound"] << "\n"
            << "OS period bound (n+1) " << j["os_upper_bound_next"] << "\n";
  return kExitOk;
}

int run_table(const std::string& which, int k_min, int k_max, int n_min,
              int n_max, const std::string& format) {
  if (k_min < 3 || k_min > k_max || n_min < 3 || n_min > n_max) {
    std::cerr << "error: invalid table range\n";
    return kExitUsage;
  }
  if (which == "os_periods" && n_min < 4) {
    std::cerr << "error: os_periods needs n >= 4\n";
    return kExitUsage;
  }
  const rank_t cap = env_max_rank();

  json rows = json::array();
  std::ostringstream text;
  text << "n\\k";
  for (int k = k_min; k <= k_max; ++k) text << "\t" << k;
  text << "\n";

  try {
    for (int n = n_min; n <= n_max; ++n) {
      json row;
      row["n"] = n;
      json cells = json::array();
      text << n;
      for (int k = k_min; k <= k_max; ++k) {
        json cell;
        cell["k"] = k;
        const rank_t span = [&] {
          long double v = 1;
          for (int i = 0; i < n; ++i) v *= k;
          return v > static_cast<long double>(kHardRankLimit)
                     ? kHardRankLimit + 1
                     : static_cast<rank_t>(checked_pow(k, n));
        }();
        cell["formula_only"] = span > cap;
        std::string shown;
        if (which == "n_i") {
          const NiCounts ni = n_i_counts_formula(k, n);
          cell["n0"] = ni.n0;
          cell["n1"] = ni.n1;
          cell["n2"] = ni.n2;
          shown = "(" + std::to_string(ni.n0) + "," + std::to_string(ni.n1) +
                  "," + std::to_string(ni.n2) + ")";
        } else if (which == "xbound") {
          const count_t s = s_partition_bound(k, n);
          const count_t e = e_size(k, n);
          cell["s"] = s;
          cell["e"] = e;
          shown = std::to_string(s) + " (" + std::to_string(e) + ")";
        } else {  // os_periods: guaranteed period at order n
          const count_t period =
              checked_mul(static_cast<count_t>(k), s_partition_bound(k, n - 1));
          cell["period"] = period;
          shown = std::to_string(period);
        }
        if (cell["formula_only"].get<bool>()) shown += "*";
        text << "\t" << shown;
        cells.push_back(cell);
      }
      text << "\n";
      row["cells"] = cells;
      rows.push_back(row);
    }
  } catch (const internal_error&) {
    std::cerr << "error: requested range overflows exact integer arithmetic\n";
    return kExitUsage;
  }

  if (format == "json") {
    json doc;
    doc["which"] = which;
    doc["k_range"] = {k_min, k_max};
    doc["n_range"] = {n_min, n_max};
    doc["rows"] = rows;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text.str();
    bool any_flag = false;
    for (const auto& row : rows) {
      for (const auto& cell : row["cells"]) {
        any_flag = any_flag || cell["formula_only"].get<bool>();
      }
    }
    if (any_flag) std::cout << "(* formula value only: beyond materialization cap)\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-ary orientable and negative orientable sequence toolkit"};
  app.require_subcommand(1);

  std::string kind = "nos";
  std::string mode = "nos";
  std::string format = "text";
  std::string out_path;
  std::string file_path;
  std::string which = "xbound";
  int k = 0;
  int n = 0;
  int k_min = -1, k_max = -1, n_min = -1, n_max = -1;

  auto* generate = app.add_subcommand(
      "generate", "Construct a sequence and emit one period plus a manifest");
  generate->add_option("--kind", kind, "nos or os")
      ->check(CLI::IsMember({"nos", "os"}));
  generate->add_option("--k", k, "alphabet size")->required();
  generate->add_option("--n", n, "construction order")->required();
  generate->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  generate->add_option("--out", out_path, "output path");

  auto* verify = app.add_subcommand("verify", "Check a sequence file");
  verify->add_option("path", file_path, "sequence file")->required();
  verify->add_option("--k", k, "alphabet size")->required();
  verify->add_option("--n", n, "window length")->required();
  verify->add_option("--mode", mode, "window, os or nos")
      ->check(CLI::IsMember({"window", "os", "nos"}));

  auto* counts = app.add_subcommand("counts", "Print the count report for (k, n)");
  counts->add_option("--k", k, "alphabet size")->required();
  counts->add_option("--n", n, "order")->required();
  counts->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* table = app.add_subcommand("table", "Reproduce a reference table");
  table->add_option("--which", which, "n_i, xbound or os_periods")
      ->check(CLI::IsMember({"n_i", "xbound", "os_periods"}));
  table->add_option("--k-min", k_min, "first alphabet size");
  table->add_option("--k-max", k_max, "last alphabet size");
  table->add_option("--n-min", n_min, "first order");
  table->add_option("--n-max", n_max, "last order");
  table->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate->parsed()) return run_generate(kind, k, n, format, out_path);
    if (verify->parsed()) return run_verify(file_path, k, n, mode);
    if (counts->parsed()) return run_counts(k, n, format);
    if (table->parsed()) {
      if (k_min < 0) k_min = 3;
      if (n_min < 0) n_min = which == "os_periods" ? 4 : 3;
      if (k_max < 0) k_max = which == "xbound" ? 10 : (which == "n_i" ? 6 : 8);
      if (n_max < 0) n_max = which == "xbound" ? 9 : 8;
      return run_table(which, k_min, k_max, n_min, n_max, format);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const not_eulerian& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
