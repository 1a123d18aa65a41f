// monomat: exact polynomial evaluation and nonnegativity checks for monomial
// matrices.
//
// Exit codes: 0 success (or a true verdict), 1 false verdict / discrepancy,
// 2 input error.

#include <monomat/bench.hpp>
#include <monomat/monomat.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace monomat;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;

std::string read_source(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text;
}

// Prints every entry where the two results differ; returns how many.
std::size_t report_diff(const DenseMatrix& structured, const DenseMatrix& dense) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < structured.rows(); ++i)
    for (std::size_t j = 0; j < structured.cols(); ++j)
      if (structured(i, j) != dense(i, j)) {
        ++count;
        std::cout << "  (" << i + 1 << "," << j + 1 << "): structured " << structured(i, j).get_str() << " vs oracle "
                  << dense(i, j).get_str() << "\n";
      }
  std::cout << "discrepancies: " << count << "\n";
  return count;
}

int print_with_diff(const DenseMatrix& structured, const DenseMatrix& dense) {
  std::cout << "# structured\n" << io::format_dense(structured) << "# oracle\n" << io::format_dense(dense);
  return report_diff(structured, dense) == 0 ? kOk : kFalse;
}

nlohmann::json structured_json(const StructuredEvaluation& ev) {
  nlohmann::json blocks = nlohmann::json::array();
  for (std::size_t b = 0; b < ev.fnf.blocks.size(); ++b) {
    nlohmann::json values = nlohmann::json::array();
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& v : ev.fnf.blocks[b]) values.push_back(v.get_str());
    for (const auto& c : ev.coefficients[b].c) coeffs.push_back(c.get_str());
    blocks.push_back({{"values", values}, {"coefficients", coeffs}});
  }
  return {{"n", ev.size()}, {"gamma", ev.fnf.gamma.images()}, {"blocks", blocks}};
}

struct MatrixOptions {
  std::string source;
  std::string format = "auto";
  std::string via = "structured";
  std::string output = "dense";
  bool diff = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("-A,--matrix", source, "Matrix file ('-' for stdin)")->required();
    cmd->add_option("--format", format, "Input format")->check(CLI::IsMember({"auto", "dense", "structured"}));
    cmd->add_option("--via", via, "Evaluation route")->check(CLI::IsMember({"structured", "oracle"}));
    cmd->add_option("--output", output, "Output format")->check(CLI::IsMember({"dense", "structured"}));
    cmd->add_flag("--diff", diff, "Print structured and oracle results and any discrepancy");
  }

  MonomialMatrix load() const { return io::parse_monomial(read_source(source), io::parse_format_name(format)); }
};

int cmd_eval(const std::string& poly_text, const MatrixOptions& opt) {
  const Polynomial p = parse_polynomial(poly_text);
  const MonomialMatrix a = opt.load();
  if (opt.diff) return print_with_diff(eval_monomial(p, a), oracle::dense_horner_eval(p, to_dense(a)));
  if (opt.via == "oracle") {
    std::cout << io::format_dense(oracle::dense_horner_eval(p, to_dense(a)));
  } else if (opt.output == "structured") {
    std::cout << structured_json(eval_structured(p, a)).dump() << "\n";
  } else {
    std::cout << io::format_dense(eval_monomial(p, a));
  }
  return kOk;
}

int cmd_power(unsigned long j, const MatrixOptions& opt) {
  const MonomialMatrix a = opt.load();
  if (opt.diff) return print_with_diff(to_dense(power(a, j)), oracle::dense_power(to_dense(a), j));
  if (opt.via == "oracle") {
    std::cout << io::format_dense(oracle::dense_power(to_dense(a), j));
  } else if (opt.output == "structured") {
    std::cout << io::format_structured(power(a, j));
  } else {
    std::cout << io::format_dense(to_dense(power(a, j)));
  }
  return kOk;
}

int cmd_parts(const std::string& poly_text, std::size_t n) {
  if (n == 0) throw InvalidArgument("n must be at least 1");
  const Polynomial p = parse_polynomial(poly_text);
  Polynomial sum;
  for (std::size_t r = 0; r < n; ++r) {
    const Polynomial pr = part(p, r, n);
    std::cout << "p_(" << r << "," << n << ") = " << format_polynomial(pr) << "\n";
    sum += pr;
  }
  const bool ok = sum == p;
  std::cout << "sum of parts equals p: " << (ok ? "yes" : "NO") << "\n";
  return ok ? kOk : kFalse;
}

int cmd_check(const std::string& poly_text, std::size_t n, const std::string& witness_path, bool json) {
  if (n == 0) throw InvalidArgument("n must be at least 1");
  const Polynomial p = parse_polynomial(poly_text);
  const MembershipReport report = in_Pn_mon(p, n);
  std::optional<Counterexample> cex;
  if (!report.verdict && !witness_path.empty()) {
    cex = counterexample(p, preferred_failure(report));
    nlohmann::json doc = io::to_json(cex->matrix);
    doc["entry"] = {{"row", cex->row}, {"col", cex->col}, {"value", cex->value.get_str()}};
    write_file(witness_path, doc.dump() + "\n");
  }
  if (json) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : report.failures)
      failures.push_back({{"k", f.k}, {"r", f.r}, {"witness", f.witness.get_str()}});
    nlohmann::json doc = {{"n", report.n}, {"verdict", report.verdict}, {"failures", failures}};
    if (cex) doc["counterexample"] = {{"row", cex->row}, {"col", cex->col}, {"value", cex->value.get_str()}};
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "n = " << report.n << "\nverdict: " << (report.verdict ? "true" : "false") << "\n";
    for (const auto& f : report.failures)
      std::cout << "failure k=" << f.k << " r=" << f.r << " witness=" << f.witness.get_str()
                << " part=" << format_polynomial(part(p, f.r, f.k)) << "\n";
    if (cex)
      std::cout << "counterexample written to " << witness_path << ": entry (" << cex->row << "," << cex->col
                << ") = " << cex->value.get_str() << "\n";
  }
  return report.verdict ? kOk : kFalse;
}

int cmd_bench(const std::vector<std::size_t>& sizes, const std::vector<std::size_t>& degrees, std::uint64_t seed,
              std::uint64_t value_bound, unsigned threads) {
  struct Case {
    std::size_t n, m;
    std::uint64_t seed;
  };
  std::vector<Case> cases;
  for (std::size_t n : sizes)
    for (std::size_t m : degrees) cases.push_back({n, m, seed + cases.size()});
  std::vector<bench::BenchRow> rows(cases.size());
  std::vector<std::string> errors(cases.size());
  auto worker = [&](std::size_t shard) {
    for (std::size_t i = shard; i < cases.size(); i += threads) {
      try {
        rows[i] = bench::run_case(bench::make_input(cases[i].n, cases[i].m, cases[i].seed, value_bound));
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  threads = std::max(1u, threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
  worker(0);
  for (auto& th : pool) th.join();

  std::cout << "n,m,t_closed_form,t_dense,speedup\n";
  int status = kOk;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!errors[i].empty()) {
      std::cerr << "error: " << errors[i] << "\n";
      status = kFalse;
      continue;
    }
    const auto& r = rows[i];
    char line[160];
    std::snprintf(line, sizeof line, "%zu,%zu,%.6g,%.6g,%.4g", r.n, r.m, r.t_closed_form, r.t_dense, r.speedup());
    std::cout << line << "\n";
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polynomial evaluation and nonnegativity checks for monomial matrices"};
  app.require_subcommand(1);

  std::string poly;
  std::size_t n = 1;
  unsigned long j = 0;

  MatrixOptions eval_opts;
  auto* eval = app.add_subcommand("eval", "Evaluate p(A) exactly");
  eval->add_option("-p,--poly", poly, "Polynomial, e.g. \"t^2 - 2*t + 1\"")->required();
  eval_opts.attach(eval);

  MatrixOptions power_opts;
  auto* pow_cmd = app.add_subcommand("power", "Compute A^j exactly");
  pow_cmd->add_option("-j", j, "Exponent")->required();
  power_opts.attach(pow_cmd);

  auto* parts = app.add_subcommand("parts", "List the r mod n parts of p");
  parts->add_option("-p,--poly", poly, "Polynomial")->required();
  parts->add_option("-n", n, "Modulus")->required();

  std::string witness_path;
  bool json = false;
  auto* check = app.add_subcommand("check", "Decide whether p preserves nonnegativity on monomial matrices of order <= n");
  check->add_option("-p,--poly", poly, "Polynomial")->required();
  check->add_option("-n", n, "Order")->required();
  check->add_option("--witness-matrix", witness_path, "Write a counterexample matrix here when the verdict is false");
  check->add_flag("--json", json, "Structured output");

  std::vector<std::size_t> sizes{1, 4, 16, 64};
  std::vector<std::size_t> degrees{20, 1000};
  std::uint64_t seed = 1;
  std::uint64_t value_bound = 4;
  unsigned threads = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Time the closed form against dense Horner (CSV)");
  bench_cmd->add_option("--sizes", sizes, "Matrix orders")->delimiter(',');
  bench_cmd->add_option("--degrees", degrees, "Polynomial degrees")->delimiter(',');
  bench_cmd->add_option("--seed", seed, "Base seed");
  bench_cmd->add_option("--value-bound", value_bound, "Bound on value numerators/denominators")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*eval) return cmd_eval(poly, eval_opts);
    if (*pow_cmd) return cmd_power(j, power_opts);
    if (*parts) return cmd_parts(poly, n);
    if (*check) return cmd_check(poly, n, witness_path, json);
    if (*bench_cmd) return cmd_bench(sizes, degrees, seed, value_bound, threads);
  } catch (const monomat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
