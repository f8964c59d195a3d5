// Copyright (c) 2026 The cnl developers.
// Distributed under the Boost Software License, Version 1.0.
// (See https://www.boost.org/LICENSE_1_0.txt)

#include "cnl/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <array>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cnl/arith.hpp"
#include "cnl/hpc.hpp"
#include "cnl/identities.hpp"
#include "cnl/lvalue.hpp"
#include "cnl/theta.hpp"
#include "cnl/tunnell.hpp"
#include "cnl/zeros.hpp"

namespace cnl::cli {

namespace {

using json = nlohmann::ordered_json;
using arith::int64;
using hpc::precision_context;
using hpc::real;

int sig_digits(long bits) {
  return static_cast<int>(std::ceil(static_cast<double>(bits) * 0.3));
}

std::string fmt(const real& v, int digits) { return v.str(digits); }

const char* verdict_str(lvalue::vanishing_verdict v) {
  switch (v) {
    case lvalue::vanishing_verdict::zero: return "zero";
    case lvalue::vanishing_verdict::nonzero: return "nonzero";
    default: return "indeterminate";
  }
}

std::string sanitize(std::string s) {
  for (char& c : s)
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  return s;
}

json record_to_json(const zeros::scan_record& rec, int digits) {
  json j;
  j["n"] = rec.n;
  if (!rec.valid || !rec.report) {
    j["status"] = rec.valid ? rec.error : rec.skip_reason;
    return j;
  }
  const lvalue::lvalue_report& rep = *rec.report;
  j["case"] =
      rep.input.pcase == arith::parity_case::odd ? "odd" : "even";
  j["b"] = rep.b;
  j["tau"] = json{{"num_b", rep.b},
                  {"num_offset", rep.tau_offset},
                  {"den", rep.tau.d}};
  j["theta_abs"] = fmt(rep.theta_abs, digits);
  j["lvalue"] = fmt(rep.lvalue, digits);
  j["err"] = fmt(rep.err, digits);
  j["vanishing"] = verdict_str(rep.vanishing);
  if (rep.sha_rounded) {
    j["sha_predicted"] = fmt(rep.sha_predicted, digits);
    j["sha_rounded"] = *rep.sha_rounded;
  } else {
    j["sha_predicted"] = nullptr;
    j["sha_rounded"] = nullptr;
  }
  if (rec.counts) {
    j["tunnell"] = json{{"a", rec.counts->a_count},
                        {"b", rec.counts->b_count},
                        {"vanishing", rec.counts->vanishing}};
  } else {
    j["tunnell"] = nullptr;
  }
  if (rec.order)
    j["zero_order"] = rec.order->order;
  else
    j["zero_order"] = nullptr;
  return j;
}

std::string record_to_csv(const zeros::scan_record& rec, int digits) {
  std::ostringstream os;
  const lvalue::lvalue_report& rep = *rec.report;
  os << rec.n << ','
     << (rep.input.pcase == arith::parity_case::odd ? "odd" : "even") << ','
     << rep.b << ',' << fmt(rep.theta_abs, digits) << ','
     << fmt(rep.lvalue, digits) << ',' << fmt(rep.err, digits) << ','
     << verdict_str(rep.vanishing) << ',';
  if (rep.sha_rounded) os << *rep.sha_rounded;
  os << ',';
  if (rec.counts)
    os << rec.counts->a_count << ',' << rec.counts->b_count;
  else
    os << ',';
  os << ',';
  if (rec.order) os << rec.order->order;
  os << ',' << (rec.error.empty() ? "ok" : sanitize(rec.error));
  return os.str();
}

constexpr const char* csv_header =
    "n,case,b,theta_abs,lvalue,err,vanishing,sha_rounded,tunnell_a,"
    "tunnell_b,zero_order,status";

void print_human(std::ostream& os, const zeros::scan_record& rec,
                 int digits) {
  const lvalue::lvalue_report& rep = *rec.report;
  os << "n: " << rec.n << " ("
     << (rep.input.pcase == arith::parity_case::odd ? "odd" : "even")
     << ")\n";
  os << "b: " << rep.b << "\n";
  os << "tau: (" << rep.b;
  if (rep.tau_offset) os << " + " << rep.tau_offset;
  os << " + i)/" << rep.tau.d << "\n";
  os << "theta_abs: " << fmt(rep.theta_abs, digits) << "\n";
  os << "lvalue: " << fmt(rep.lvalue, digits) << "\n";
  os << "err: " << fmt(rep.err, digits) << "\n";
  os << "vanishing: " << verdict_str(rep.vanishing) << "\n";
  if (rep.sha_rounded) {
    os << "sha_predicted: " << fmt(rep.sha_predicted, digits) << "\n";
    os << "sha_rounded: " << *rep.sha_rounded
       << (rep.sha_square ? " (perfect square)" : "") << "\n";
  }
  if (rec.counts)
    os << "tunnell: a=" << rec.counts->a_count
       << " b=" << rec.counts->b_count << " vanishing="
       << (rec.counts->vanishing ? "true" : "false") << "\n";
  if (rec.order) os << "zero_order: " << rec.order->order << "\n";
}

struct verify_line {
  bool pass;
  std::string text;
};

void emit(std::ostream& os, std::vector<verify_line>& acc, bool pass,
          const std::string& text) {
  acc.push_back({pass, text});
  os << (pass ? "PASS " : "FAIL ") << text << "\n";
}

void run_gauss_suite(std::ostream& os, const precision_context& ctx,
                     std::vector<verify_line>& acc) {
  for (const auto& item : identities::verify_gauss(ctx)) {
    emit(os, acc, item.pass(),
         item.name + "  residual=" + fmt(item.residual, 6) +
             " bound=" + fmt(item.tolerance, 6));
  }
}

void run_al_suite(std::ostream& os, const precision_context& ctx,
                  std::vector<verify_line>& acc) {
  std::mt19937_64 rng(20260810u);
  for (int64 n : {5, 13, 17, 29, 37, 41, 65, 73}) {
    arith::curve_input input = arith::validate_curve(n);
    bool all_ok = true;
    real worst = hpc::err_zero();
    real worst_tol = hpc::err_zero();
    for (int k = 0; k < 20; ++k) {
      long re_m = static_cast<long>(rng() % 1001) - 500;   // [-0.5, 0.5]
      long im_m = 200 + static_cast<long>(rng() % 1801);   // [0.2, 2.0]
      hpc::complex tau(real::of_ratio(re_m, 1000, ctx.work()),
                       real::of_ratio(im_m, 1000, ctx.work()));
      zeros::al_residual res = zeros::verify_atkin_lehner(input, tau, ctx);
      if (!(res.residual <= res.tolerance)) all_ok = false;
      if (res.residual > worst) {
        worst = res.residual;
        worst_tol = res.tolerance;
      }
    }
    emit(os, acc, all_ok,
         "atkin-lehner n=" + std::to_string(n) + " trials=20 max_residual=" +
             fmt(worst, 6) + " bound_at_max=" + fmt(worst_tol, 6));
  }
}

void run_factorization_suite(std::ostream& os, const precision_context& ctx,
                             std::vector<verify_line>& acc) {
  struct tup {
    int64 a, a1, D, b;
  };
  // The identity needs b even and a = 1 (mod 2D); see the sharpened
  // preconditions on verify_factorization.
  std::vector<tup> tuples = {
      {1, 1, 1, 0}, {1, 1, 5, 2}, {5, 1, 1, 18}, {1, 1, 13, 70},
      {13, 1, 1, 70}, {41, 1, 5, 7102}, {53, 1, 13, 34208}};
  std::mt19937_64 rng(715u);
  const int64 ds[] = {1, 5, 13};
  const int64 a1s[] = {1, 5, 13, 17};
  auto admissible_a = [](int64 D) {
    switch (D) {
      case 5: return std::vector<int64>{1, 41, 61};
      case 13: return std::vector<int64>{1, 53};
      default: return std::vector<int64>{1, 5, 13, 17, 29};
    }
  };
  std::set<std::array<int64, 3>> seen;
  for (const auto& t : tuples) seen.insert({t.a, t.a1, t.D});
  while (tuples.size() < 17) {
    int64 D = ds[rng() % 3];
    std::vector<int64> as = admissible_a(D);
    int64 a = as[rng() % as.size()], a1 = a1s[rng() % 4];
    int64 M = D * a * a * a1;
    if (M > 400000 || !seen.insert({a, a1, D}).second) continue;
    int64 b = identities::even_root_for_modulus(M);
    tuples.push_back({a, a1, D, b});
  }
  for (const auto& t : tuples) {
    identities::residual_item item =
        identities::verify_factorization(t.a, t.a1, t.D, t.b, ctx);
    emit(os, acc, item.pass(),
         item.name + "  residual=" + fmt(item.residual, 6) +
             " bound=" + fmt(item.tolerance, 6));
  }

  struct ftup {
    int64 np, a, a1, b;
  };
  std::vector<ftup> ftuples = {{5, 1, 1, 2}, {1, 1, 1, 0}, {13, 1, 1, 70}};
  std::set<std::array<int64, 3>> fseen;
  for (const auto& t : ftuples) fseen.insert({t.np, t.a, t.a1});
  while (ftuples.size() < 9) {
    int64 np = ds[rng() % 2 + 1];  // 5 or 13
    std::vector<int64> as = admissible_a(np);
    int64 a = as[rng() % as.size()], a1 = a1s[rng() % 4];
    int64 M = np * a * a * a1;
    if (M > 400000 || !fseen.insert({np, a, a1}).second) continue;
    int64 b = identities::even_root_for_modulus(M);
    ftuples.push_back({np, a, a1, b});
  }
  for (const auto& t : ftuples) {
    identities::residual_item item =
        identities::verify_corthetaf(t.np, t.a, t.a1, t.b, ctx);
    emit(os, acc, item.pass(),
         item.name + "  residual=" + fmt(item.residual, 6) +
             " bound=" + fmt(item.tolerance, 6));
  }

  for (long num : {0L, 1L}) {
    hpc::complex tau(real::of(num, ctx.work()),
                     real::of(1L + num, ctx.work()));
    identities::residual_item item = identities::verify_lemtheta1(tau, ctx);
    emit(os, acc, item.pass(),
         item.name + " at tau=" + std::to_string(num) + "+" +
             std::to_string(1 + num) + "i  residual=" +
             fmt(item.residual, 6) + " bound=" + fmt(item.tolerance, 6));
  }
}

void run_tunnell_suite(std::ostream& os, const precision_context& ctx,
                       std::vector<verify_line>& acc) {
  int agree = 0, total = 0, indet = 0;
  std::vector<int64> mismatches;
  for (int64 n = 1; n <= 500; ++n) {
    arith::curve_input input;
    try {
      input = arith::validate_curve(n);
    } catch (const error&) {
      continue;
    }
    ++total;
    lvalue::lvalue_report rep = lvalue::central_lvalue(input, ctx);
    tunnell::tunnell_counts tc = tunnell::tunnell_vanishing(input);
    if (rep.vanishing == lvalue::vanishing_verdict::indeterminate) {
      ++indet;
      mismatches.push_back(n);
      continue;
    }
    bool zero = rep.vanishing == lvalue::vanishing_verdict::zero;
    if (zero == tc.vanishing)
      ++agree;
    else
      mismatches.push_back(n);
  }
  std::string detail;
  for (int64 n : mismatches) detail += " " + std::to_string(n);
  emit(os, acc, agree == total && indet == 0,
       "tunnell-oracle n<=500 agreements=" + std::to_string(agree) + "/" +
           std::to_string(total) + " indeterminate=" + std::to_string(indet) +
           (detail.empty() ? "" : " mismatches:" + detail));
}

// Resume support: n values already present in an output file.
std::set<int64> completed_ns(const std::string& path, bool jsonl) {
  std::set<int64> done;
  std::ifstream in(path);
  if (!in) return done;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (jsonl) {
      auto parsed = json::parse(line, nullptr, false);
      if (!parsed.is_discarded() && parsed.contains("n") &&
          parsed["n"].is_number_integer())
        done.insert(parsed["n"].get<int64>());
    } else {
      if (line.rfind("n,", 0) == 0) continue;  // header
      std::size_t comma = line.find(',');
      if (comma == std::string::npos) continue;
      try {
        done.insert(std::stoll(line.substr(0, comma)));
      } catch (...) {
      }
    }
  }
  return done;
}

struct options {
  long precision = 128;
  bool as_json = false;
  std::string out_path;
  int jobs = 0;
};

int cmd_scan(int64 from, int64 to, const options& opt, std::ostream& out,
             std::ostream& err) {
  precision_context ctx(opt.precision);
  int digits = sig_digits(opt.precision);

  std::set<int64> done;
  bool to_file = !opt.out_path.empty();
  if (to_file) done = completed_ns(opt.out_path, opt.as_json);

  std::vector<int64> ns;
  for (int64 n = std::max<int64>(1, from); n <= to; ++n)
    if (!done.count(n)) ns.push_back(n);
  std::vector<zeros::scan_record> records = zeros::scan_ns(ns, ctx, opt.jobs);

  std::ofstream file;
  if (to_file) {
    bool fresh = done.empty();
    file.open(opt.out_path, std::ios::app);
    if (!file) {
      err << "cannot open " << opt.out_path << "\n";
      return exit_domain;
    }
    if (fresh && !opt.as_json) file << csv_header << "\n";
  }
  std::ostream& os = to_file ? static_cast<std::ostream&>(file) : out;
  if (!to_file && !opt.as_json) os << csv_header << "\n";

  for (const auto& rec : records) {
    if (!rec.valid) continue;  // skipped inputs are recorded, not emitted
    if (opt.as_json)
      os << record_to_json(rec, digits).dump() << "\n";
    else
      os << record_to_csv(rec, digits) << "\n";
  }
  return exit_ok;
}

// Payload destination: --out redirects the main output to a file.
struct sink {
  std::ofstream file;
  std::ostream* os;

  sink(const options& opt, std::ostream& fallback) : os(&fallback) {
    if (!opt.out_path.empty()) {
      file.open(opt.out_path);
      if (!file) throw error("cannot open " + opt.out_path);
      os = &file;
    }
  }
  std::ostream& stream() { return *os; }
};

int cmd_single(int64 n, const options& opt, std::ostream& out,
               std::ostream& err, bool sha_mode) {
  precision_context ctx(opt.precision);
  int digits = sig_digits(opt.precision);
  arith::curve_input input = arith::validate_curve(n);  // throws on bad n
  zeros::scan_record rec = zeros::scan_one(
      n, ctx, input.pcase == arith::parity_case::odd);
  if (!rec.error.empty()) {
    err << "error: " << rec.error << "\n";
    return exit_domain;
  }
  if (sha_mode && rec.report &&
      rec.report->vanishing != lvalue::vanishing_verdict::nonzero)
    throw lvalue::vanishing_lvalue_error(
        "predicted Sha is undefined when the L-value vanishes (n = " +
        std::to_string(n) + ")");
  sink dest(opt, out);
  if (opt.as_json)
    dest.stream() << record_to_json(rec, digits).dump() << "\n";
  else
    print_human(dest.stream(), rec, digits);
  return exit_ok;
}

int cmd_zero_order(int64 n, const options& opt, std::ostream& raw_out,
                   std::ostream& /*err*/) {
  precision_context ctx(opt.precision);
  int digits = sig_digits(opt.precision);
  arith::curve_input input = arith::validate_curve(n);
  zeros::zero_order_report rep = zeros::vanishing_order(input, ctx);
  sink dest(opt, raw_out);
  std::ostream& out = dest.stream();
  if (opt.as_json) {
    json j;
    j["n"] = rep.n;
    j["zero_order"] = rep.order;
    json mags = json::array();
    for (const real& m : rep.coeff_mags) mags.push_back(fmt(m, digits));
    j["coeff_mags"] = mags;
    j["radius_den"] = rep.radius_den;
    j["samples"] = rep.samples;
    out << j.dump() << "\n";
  } else {
    out << "n: " << rep.n << "\n";
    out << "zero_order: " << rep.order << "\n";
    out << "radius: 1/" << rep.radius_den << "\n";
    out << "samples: " << rep.samples << "\n";
    for (std::size_t jdx = 0; jdx < rep.coeff_mags.size(); ++jdx)
      out << "|c_" << jdx << " r^" << jdx
          << "|: " << fmt(rep.coeff_mags[jdx], digits) << "\n";
  }
  return exit_ok;
}

int cmd_verify(const std::string& suite, const options& opt,
               std::ostream& out, std::ostream& err) {
  precision_context ctx(opt.precision);
  std::vector<verify_line> acc;
  std::ofstream file;
  bool to_file = !opt.out_path.empty();
  if (to_file) {
    file.open(opt.out_path);
    if (!file) {
      err << "cannot open " << opt.out_path << "\n";
      return exit_domain;
    }
  }
  std::ostream& os = to_file ? static_cast<std::ostream&>(file) : out;

  if (suite == "gauss" || suite == "all") run_gauss_suite(os, ctx, acc);
  if (suite == "atkin-lehner" || suite == "all") run_al_suite(os, ctx, acc);
  if (suite == "factorization" || suite == "all")
    run_factorization_suite(os, ctx, acc);
  if (suite == "tunnell" || suite == "all") run_tunnell_suite(os, ctx, acc);

  bool all_pass = std::all_of(acc.begin(), acc.end(),
                              [](const verify_line& l) { return l.pass; });
  return all_pass ? exit_ok : exit_verify;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"central L-values of congruent number curves from theta CM values"};
  app.require_subcommand(1);
  options opt;
  app.add_option("--precision", opt.precision,
                 "working precision in bits (default 128)")
      ->check(CLI::Range(64L, 65536L));
  app.add_flag("--json", opt.as_json, "machine-readable output");
  app.add_option("--out", opt.out_path, "write output to a file");
  app.add_option("--jobs", opt.jobs,
                 "scan parallelism (default: available cores)");

  int64 n_arg = 0;
  int64 from_arg = 0, to_arg = 0;
  std::string suite = "all";

  CLI::App* c_lvalue = app.add_subcommand("lvalue", "central L-value report");
  c_lvalue->add_option("n", n_arg, "curve index")->required();

  CLI::App* c_sha = app.add_subcommand("sha", "predicted Sha order");
  c_sha->add_option("n", n_arg, "curve index")->required();

  CLI::App* c_zero =
      app.add_subcommand("zero-order", "vanishing order at the CM point");
  c_zero->add_option("n", n_arg, "curve index (odd)")->required();

  CLI::App* c_scan = app.add_subcommand("scan", "batch range scan");
  c_scan->add_option("from", from_arg, "first n")->required();
  c_scan->add_option("to", to_arg, "last n")->required();

  CLI::App* c_verify =
      app.add_subcommand("verify", "run a verification suite");
  c_verify->add_option("--suite", suite, "gauss|atkin-lehner|factorization|tunnell|all")
      ->check(CLI::IsMember(
          {"gauss", "atkin-lehner", "factorization", "tunnell", "all"}));

  for (CLI::App* sub : {c_lvalue, c_sha, c_zero, c_scan, c_verify})
    sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return exit_usage;
  }

  try {
    if (c_lvalue->parsed()) return cmd_single(n_arg, opt, out, err, false);
    if (c_sha->parsed()) return cmd_single(n_arg, opt, out, err, true);
    if (c_zero->parsed()) return cmd_zero_order(n_arg, opt, out, err);
    if (c_scan->parsed()) return cmd_scan(from_arg, to_arg, opt, out, err);
    if (c_verify->parsed()) return cmd_verify(suite, opt, out, err);
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return exit_domain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_domain;
  }
  return exit_usage;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace cnl::cli
