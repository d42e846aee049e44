#include "oddsigma/cli.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "oddsigma/arith.hpp"
#include "oddsigma/convolution.hpp"
#include "oddsigma/errors.hpp"
#include "oddsigma/output_record.hpp"
#include "oddsigma/representations.hpp"
#include "oddsigma/verify.hpp"

namespace oddsigma::cli {

namespace {

using nlohmann::json;

enum class Format { kPlain, kJson, kCsv };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "plain";
  int threads = 0;

  Format fmt() const {
    if (format == "json") return Format::kJson;
    if (format == "csv") return Format::kCsv;
    return Format::kPlain;
  }
  int thread_count() const {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
  }
};

void require_positive(std::int64_t value, const char* flag) {
  if (value < 1) {
    throw UsageError(std::string(flag) + " must be >= 1, got " + std::to_string(value));
  }
}

// Result of a command body: exit status plus the payload to emit.
struct Outcome {
  int status = kOk;
  json results = json::object();
  std::string plain;
  std::string csv;
};

std::string set_string(const std::vector<std::int64_t>& values) {
  std::string s = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(values[i]);
  }
  return s + "}";
}

std::string witness_set(const std::vector<Witness>& ws) {
  std::string s = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) s += ", ";
    s += "(" + std::to_string(ws[i].ell) + "," + std::to_string(ws[i].k) + ")";
  }
  return s + "}";
}

std::string report_line(const CongruenceReport& r) {
  std::ostringstream os;
  os << "conjecture " << to_string(r.congruence_case.conjecture) << " m=" << r.congruence_case.m
     << " n_max=" << r.n_max << ": ";
  if (r.holds) {
    os << (r.trivial ? "holds (trivial, modulus 1)" : "holds");
  } else {
    const auto& cx = *r.minimal_counterexample;
    os << "fails at n=" << cx.n << " (lhs=" << cx.lhs_value << ", required "
       << cx.required_residue << " mod " << cx.modulus << ")";
  }
  return os.str();
}

constexpr const char* kReportCsvHeader =
    "conjecture,m,n_max,holds,trivial,n,lhs_value,required_residue,modulus\n";

std::string report_csv_row(const CongruenceReport& r) {
  std::ostringstream os;
  os << static_cast<int>(r.congruence_case.conjecture) << "," << r.congruence_case.m << ","
     << r.n_max << "," << (r.holds ? "true" : "false") << "," << (r.trivial ? "true" : "false");
  if (r.minimal_counterexample) {
    const auto& cx = *r.minimal_counterexample;
    os << "," << cx.n << "," << cx.lhs_value << "," << cx.required_residue << "," << cx.modulus;
  } else {
    os << ",,,,";
  }
  os << "\n";
  return os.str();
}

// --- command bodies -------------------------------------------------------

Outcome sigma_cmd(std::int64_t n_max, const std::string& which, const Common& common) {
  require_positive(n_max, "--n-max");
  const SigmaTable table = build_sigma_table(n_max, common.thread_count());
  std::vector<std::string> columns{"n"};
  if (which != "full") columns.push_back("sigma_odd");
  if (which != "odd") columns.push_back("sigma");

  Outcome out;
  json rows = json::array();
  std::ostringstream plain;
  std::ostringstream csv;
  for (std::size_t i = 0; i < columns.size(); ++i) csv << (i ? "," : "") << columns[i];
  csv << "\n";
  for (std::int64_t n = 1; n <= n_max; ++n) {
    json row = json::array({n});
    plain << n;
    csv << n;
    if (which != "full") {
      row.push_back(table.sigma_odd(n));
      plain << " " << table.sigma_odd(n);
      csv << "," << table.sigma_odd(n);
    }
    if (which != "odd") {
      row.push_back(table.sigma(n));
      plain << " " << table.sigma(n);
      csv << "," << table.sigma(n);
    }
    plain << "\n";
    csv << "\n";
    rows.push_back(std::move(row));
  }
  out.results = json{{"columns", columns}, {"rows", std::move(rows)}};
  out.plain = plain.str();
  out.csv = csv.str();
  return out;
}

Outcome convolve_cmd(std::int64_t m, std::int64_t n, const std::string& weight_name) {
  require_convergent_order(m);
  require_positive(n, "--n");
  const WeightMode mode = parse_weight_mode(weight_name);
  const SigmaTable table = build_sigma_table_serial(n);
  const ConvolutionValue v = convolve_sigma_odd(table, m, n, mode);

  Outcome out;
  out.results = v;
  std::ostringstream os;
  os << "m=" << v.m_polygonal << " n=" << v.n << " weight=" << to_string(v.weight_mode)
     << " value=" << v.value << " support=" << v.support_size << "\n";
  out.plain = os.str();
  std::ostringstream csv;
  csv << "m,n,weight,value,support\n"
      << v.m_polygonal << "," << v.n << "," << to_string(v.weight_mode) << "," << v.value << ","
      << v.support_size << "\n";
  out.csv = csv.str();
  return out;
}

Outcome reps_cmd(std::int64_t m, std::int64_t n, bool witnesses) {
  require_positive(n, "--n");
  const RepresentationWitnesses r = count_representations(m, n);

  Outcome out;
  out.results = r;
  if (!witnesses) {
    out.results.erase("a_witnesses");
    out.results.erase("b_witnesses");
  }
  std::ostringstream os;
  os << "m=" << r.m << " n=" << r.n << " a=" << r.a_count() << " b=" << r.b_count() << "\n";
  if (witnesses) {
    os << "A = " << witness_set(r.a_witnesses) << "\n";
    os << "B = " << witness_set(r.b_witnesses) << "\n";
  }
  out.plain = os.str();
  std::ostringstream csv;
  if (witnesses) {
    csv << "set,ell,k\n";
    for (const auto& w : r.a_witnesses) csv << "A," << w.ell << "," << w.k << "\n";
    for (const auto& w : r.b_witnesses) csv << "B," << w.ell << "," << w.k << "\n";
  } else {
    csv << "m,n,a,b\n" << r.m << "," << r.n << "," << r.a_count() << "," << r.b_count() << "\n";
  }
  out.csv = csv.str();
  return out;
}

Outcome check_cmd(int conjecture, std::int64_t m, std::int64_t n_max, const Common& common) {
  const CongruenceCase c{conjecture_from_int(conjecture), m};
  validate(c);
  require_positive(n_max, "--n-max");
  const SigmaTable table = build_sigma_table(n_max, common.thread_count());
  const CongruenceReport r = check_congruence(c, n_max, table, common.thread_count());

  Outcome out;
  out.status = r.holds ? kOk : kCounterexample;
  out.results = r;
  out.plain = report_line(r) + "\n";
  out.csv = std::string(kReportCsvHeader) + report_csv_row(r);
  return out;
}

Outcome scan_cmd(int conjecture, std::int64_t m_min, std::int64_t m_max, std::int64_t n_max,
                 const Common& common) {
  const Conjecture id = conjecture_from_int(conjecture);
  require_positive(n_max, "--n-max");
  if (m_min > m_max) throw UsageError("--m-min must not exceed --m-max");
  const SigmaTable table = build_sigma_table(n_max, common.thread_count());
  const auto reports = scan_iff(id, m_min, m_max, n_max, table, common.thread_count());
  const auto holding = holds_set(reports);
  std::vector<std::int64_t> trivial;
  for (const auto& r : reports) {
    if (r.trivial) trivial.push_back(r.congruence_case.m);
  }

  Outcome out;
  out.results = json{{"reports", reports}, {"holds_set", holding}, {"trivial", trivial}};
  std::string plain;
  std::string csv = kReportCsvHeader;
  for (const auto& r : reports) {
    plain += report_line(r) + "\n";
    csv += report_csv_row(r);
  }
  plain += "holds-set: " + set_string(holding) + "\n";
  if (!trivial.empty()) plain += "trivial: " + set_string(trivial) + "\n";
  out.plain = std::move(plain);
  out.csv = std::move(csv);
  return out;
}

Outcome euler_cmd(const std::string& which, std::int64_t n_max, const Common& common) {
  require_positive(n_max, "--n-max");
  Outcome out;
  std::int64_t n_min = 0;
  std::optional<std::pair<std::int64_t, std::string>> failure;
  json residual_json;
  if (which == "partition") {
    const PartitionTable ptable = build_partition_table(n_max);
    for (std::int64_t n = 0; n <= n_max && !failure; ++n) {
      const mpz_class r = euler_partition_residual(ptable, n);
      if (r != (n == 0 ? 1 : 0)) failure.emplace(n, r.get_str());
    }
  } else {
    n_min = 1;
    const SigmaTable table = build_sigma_table(n_max, common.thread_count());
    for (std::int64_t n = 1; n <= n_max && !failure; ++n) {
      const std::int64_t r = euler_sigma_residual(table, n);
      if (r != 0) failure.emplace(n, std::to_string(r));
    }
  }
  out.status = failure ? kCounterexample : kOk;
  out.results = json{{"which", which}, {"n_min", n_min}, {"n_max", n_max},
                     {"pass", !failure}, {"first_failure", nullptr}};
  if (failure) {
    out.results["first_failure"] = json{{"n", failure->first}, {"residual", failure->second}};
  }
  std::ostringstream os;
  os << which << " residuals n=" << n_min << ".." << n_max << ": ";
  if (failure) {
    os << "fail at n=" << failure->first << " (residual " << failure->second << ")\n";
  } else {
    os << "pass\n";
  }
  out.plain = os.str();
  std::ostringstream csv;
  csv << "which,n_min,n_max,pass,failure_n,residual\n"
      << which << "," << n_min << "," << n_max << "," << (failure ? "false" : "true") << ",";
  if (failure) csv << failure->first << "," << failure->second;
  else csv << ",";
  csv << "\n";
  out.csv = csv.str();
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Odd divisor sums convolved with generalized polygonal numbers"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--threads", common.threads, "Worker threads (default: all processors)")
      ->check(CLI::NonNegativeNumber);

  // Each subcommand binds its own flags and stores the body to run.
  std::function<Outcome()> body;
  json parameters = json::object();
  std::string command;

  std::int64_t n_max = 0;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t m_min = 0;
  std::int64_t m_max = 0;
  int conjecture = 0;
  std::string which;
  std::string weight = "unsigned";
  bool witnesses = false;

  auto* sigma = app.add_subcommand("sigma", "Print sigma_odd(n) and/or sigma(n) for n = 1..n_max");
  sigma->add_option("--n-max", n_max)->required();
  sigma->add_option("--which", which, "odd, full or both")
      ->check(CLI::IsMember({"odd", "full", "both"}))
      ->default_str("both");
  sigma->callback([&] {
    if (which.empty()) which = "both";
    command = "sigma";
    parameters = json{{"n_max", n_max}, {"which", which}};
    body = [&] { return sigma_cmd(n_max, which, common); };
  });

  auto* convolve = app.add_subcommand("convolve", "Evaluate sum_k w(k) sigma_odd(n - P_m(k))");
  convolve->add_option("--m", m, "Polygonal order")->required();
  convolve->add_option("--n", n)->required();
  convolve->add_option("--weight", weight, "unsigned, alternating or triangular-sign")
      ->check(CLI::IsMember({"unsigned", "alternating", "triangular-sign"}));
  convolve->callback([&] {
    command = "convolve";
    parameters = json{{"m", m}, {"n", n}, {"weight", weight}};
    body = [&] { return convolve_cmd(m, n, weight); };
  });

  auto* reps = app.add_subcommand("reps", "Count solutions of l^2 + P_m(k) = n and 2l^2 + P_m(k) = n");
  reps->add_option("--m", m, "Polygonal order")->required();
  reps->add_option("--n", n)->required();
  reps->add_flag("--witnesses", witnesses, "List the solutions");
  reps->callback([&] {
    command = "reps";
    parameters = json{{"m", m}, {"n", n}, {"witnesses", witnesses}};
    body = [&] { return reps_cmd(m, n, witnesses); };
  });

  auto* check = app.add_subcommand("check", "Check one congruence family for n = 1..n_max");
  check->add_option("--conjecture", conjecture)->required()->check(CLI::Range(1, 3));
  check->add_option("--m", m)->required();
  check->add_option("--n-max", n_max)->required();
  check->callback([&] {
    command = "check";
    parameters = json{{"conjecture", conjecture}, {"m", m}, {"n_max", n_max}};
    body = [&] { return check_cmd(conjecture, m, n_max, common); };
  });

  auto* scan = app.add_subcommand("scan", "Check a congruence family for every m in a range");
  scan->add_option("--conjecture", conjecture)->required()->check(CLI::Range(1, 3));
  scan->add_option("--m-min", m_min)->required();
  scan->add_option("--m-max", m_max)->required();
  scan->add_option("--n-max", n_max)->required();
  scan->callback([&] {
    command = "scan";
    parameters = json{{"conjecture", conjecture}, {"m_min", m_min}, {"m_max", m_max},
                      {"n_max", n_max}};
    body = [&] { return scan_cmd(conjecture, m_min, m_max, n_max, common); };
  });

  auto* euler = app.add_subcommand("euler", "Check the pentagonal recurrences for p(n) and sigma(n)");
  euler->add_option("--which", which, "partition or sigma")
      ->required()
      ->check(CLI::IsMember({"partition", "sigma"}));
  euler->add_option("--n-max", n_max)->required();
  euler->callback([&] {
    command = "euler";
    parameters = json{{"which", which}, {"n_max", n_max}};
    body = [&] { return euler_cmd(which, n_max, common); };
  });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DivergenceError& e) {
    err << "divergence error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;

  switch (common.fmt()) {
    case Format::kPlain:
      out << outcome.plain;
      break;
    case Format::kCsv:
      out << outcome.csv;
      break;
    case Format::kJson: {
      parameters["format"] = common.format;
      parameters["threads"] = common.thread_count();
      OutputRecord record;
      record.command = command;
      record.parameters = parameters;
      record.results = std::move(outcome.results);
      record.timing_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
      out << json(record).dump() << "\n";
      break;
    }
  }
  return outcome.status;
}

}  // namespace oddsigma::cli
