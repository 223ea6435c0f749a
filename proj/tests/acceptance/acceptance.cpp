// One PASS/FAIL line per acceptance criterion. Exit status is 0 only if every
// selected criterion passes.

#include <CLI11.hpp>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sepstat/asymptotics.hpp"
#include "sepstat/brute_oracle.hpp"
#include "sepstat/exact_numbers.hpp"
#include "sepstat/formulas.hpp"
#include "sepstat/gf_series.hpp"

namespace {

using namespace sepstat;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

template <typename... Ts>
std::string cat(const Ts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

Outcome criterion1() {
  Outcome o;
  std::size_t cells = 0;
  for (std::size_t n = 1; n <= kBruteMaxN; ++n) {
    const auto brute = brute_totals_by_k(n);
    for (std::size_t k = 1; k <= n; ++k, ++cells) {
      const BigInt f = total_sep_nk(n, k);
      if (f != brute[k]) o.fail(cat("(", n, ",", k, "): formula ", f, " enumeration ", brute[k]));
    }
  }
  const std::array<std::array<long, 3>, 4> spots{{{3, 2, 4}, {4, 2, 11}, {4, 3, 29}, {4, 4, 10}}};
  for (const auto& [n, k, v] : spots) {
    if (total_sep_nk(n, k) != v) o.fail(cat("spot (", n, ",", k, ") != ", v));
  }
  if (o.pass) o.detail = cat(cells, " cells, n <= ", kBruteMaxN);
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (std::size_t n = 1; n <= kBruteMaxN; ++n) {
    const BigInt f = total_sep_n(n);
    const BigInt b = brute_total(n);
    if (f != b) o.fail(cat("n=", n, ": formula ", f, " enumeration ", b));
  }
  if (total_sep_n(2) != 1 || total_sep_n(3) != 8 || total_sep_n(4) != 50) o.fail("spot values");
  if (o.pass) o.detail = cat("n <= ", kBruteMaxN);
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t triples = 0;
  for (std::size_t k = 1; k <= kDistributionMaxN; ++k) {
    for (std::size_t a = 1; a <= k; ++a) {
      const auto series = series_Pka(k, a, kDistributionMaxN);
      for (std::size_t n = k; n <= kDistributionMaxN; ++n, ++triples) {
        const auto dist = brute_distribution_a(n, k, a);
        std::vector<BigInt> coeffs;
        for (const auto& [s, c] : dist.counts) {
          if (coeffs.size() <= s) coeffs.resize(s + 1, BigInt(0));
          coeffs[s] = c;
        }
        if (series[n] != QPolynomial(coeffs)) {
          o.fail(cat("(n,k,a)=(", n, ",", k, ",", a, "): series ", series[n].to_string()));
        }
      }
    }
  }
  if (o.pass) o.detail = cat(triples, " (n,k,a) triples, n <= ", kDistributionMaxN);
  return o;
}

Outcome criterion4() {
  Outcome o;
  const std::size_t N = kBruteMaxN;
  for (std::size_t k = 1; k <= N; ++k) {
    const auto lemma = lemma_coeff(k, N);
    const auto qd = qderiv_at_1_total(k, N);
    for (std::size_t n = k; n <= N; ++n) {
      const BigInt f = total_sep_nk(n, k);
      if (lemma[n] != f || qd[n] != f) {
        o.fail(cat("(", n, ",", k, "): lemma ", lemma[n], " series ", qd[n], " formula ", f));
      }
    }
  }
  if (o.pass) o.detail = cat("three routes agree for k <= n <= ", N);
  return o;
}

Outcome criterion5() {
  Outcome o;
  constexpr std::size_t kMaxK = 15;
  for (std::size_t k = 1; k <= kMaxK; ++k) {
    const auto c = pfd_coeffs(k);
    if (c != pfd_oracle(k)) o.fail(cat("k=", k, ": closed form differs from residues"));
    for (std::size_t j = 0; j <= 2 * k; ++j) {
      const BigRational y(BigInt(2 * j + 1), BigInt(2));
      if (pfd_evaluate(c, y) != pfd_function_value(k, y)) {
        o.fail(cat("k=", k, ": reconstruction fails at y=", y));
      }
    }
  }
  const auto w = pfd_coeffs(2);
  if (w.at(1).b != -2 || w.at(2).b != 2) o.fail("k=2 witness b_{2,1}=-2, b_{2,2}=2");
  if (o.pass) o.detail = cat("k <= ", kMaxK, ", 2k+1 probes each");
  return o;
}

Outcome criterion6() {
  Outcome o;
  constexpr std::size_t kMaxN = 30;
  const auto egf = egf_coeffs(kMaxN);
  for (std::size_t n = 1; n <= kMaxN; ++n) {
    if (egf.integer_total(n) != total_sep_n(n)) o.fail(cat("n=", n, ": n! e_n != total"));
  }
  for (const auto& id : bell_shift_identities_check(kMaxN)) {
    if (!id.holds()) o.fail(cat("identity ", id.name, " fails at n=", *id.first_failure));
  }
  if (o.pass) o.detail = cat("n <= ", kMaxN, ", Bell-shift identities exact");
  return o;
}

Outcome criterion7() {
  Outcome o;
  constexpr std::size_t kMaxN = 200;
  for (std::size_t n = 0; n <= kMaxN; ++n) {
    const BigInt m = 6 * BigInt(n);
    const BigInt v = 4 * bell(n + 3) - 3 * bell(n + 2) - (m + 13) * bell(n + 1) - (m + 1) * bell(n);
    if (v % 12 != 0) o.fail(cat("n=", n, ": residue ", BigInt(v % 12)));
  }
  if (o.pass) o.detail = cat("n <= ", kMaxN);
  return o;
}

Outcome criterion8() {
  Outcome o;
  constexpr std::size_t kMaxN = 40;
  for (std::size_t n = 1; n <= kMaxN; ++n) {
    BigInt sum = 0;
    for (std::size_t k = 1; k <= n; ++k) sum += total_sep_nk(n, k);
    if (sum != total_sep_n(n)) o.fail(cat("n=", n, ": row sum ", sum));
  }
  if (o.pass) o.detail = cat("n <= ", kMaxN);
  return o;
}

Outcome criterion9() {
  Outcome o;
  const std::array<std::size_t, 4> ns{50, 100, 200, 400};
  std::ostringstream errs;
  errs.precision(4);
  double prev = INFINITY;
  double last = 0.0;
  for (std::size_t n : ns) {
    const auto rep = estimate_ratio(n);
    errs << (n == ns.front() ? "" : " ") << "n=" << n << ":" << rep.abs_err;
    if (!(rep.abs_err < prev)) o.fail(cat("|ratio-1| not strictly decreasing at n=", n));
    prev = rep.abs_err;
    last = rep.abs_err;
  }
  if (last > 0.15) o.fail(cat("|ratio-1| = ", last, " > 0.15 at n=400 (", errs.str(), ")"));
  for (std::size_t n : {1u, 10u, 100u, 1000u}) {
    const double r = solve_r(n);
    const double target = static_cast<double>(n) + 1.0;
    const double rel = std::abs(r * std::exp(r) - target) / target;
    if (rel > 1e-12) o.fail(cat("solve_r residual ", rel, " at n=", n));
  }
  if (o.pass) o.detail = errs.str();
  return o;
}

std::string capture(const std::string& command, int& status) {
  std::string output;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return output;
  }
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
  status = ::pclose(pipe);
  return output;
}

Outcome criterion10(const std::string& sepstat_bin) {
  Outcome o;
  if (sepstat_bin.empty()) {
    o.fail("no sepstat binary given (--sepstat)");
    return o;
  }
  const std::string cmd = "'" + sepstat_bin + "' verify --max-n 10";
  int s1 = 0, s2 = 0;
  const std::string first = capture(cmd, s1);
  const std::string second = capture(cmd, s2);
  if (s1 != 0 || s2 != 0) o.fail(cat("verify exited with status ", s1, "/", s2));
  if (first.empty()) o.fail("empty report");
  if (first != second) o.fail("reports differ between runs");
  if (o.pass) o.detail = cat(first.size(), " identical bytes");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria", "acceptance"};
  std::vector<int> selected;
  std::string sepstat_bin;
  app.add_option("--criterion", selected, "Criteria to run (default all)")
      ->delimiter(',')
      ->check(CLI::Range(1, 10));
  app.add_option("--sepstat", sepstat_bin, "Path to the sepstat executable");
  CLI11_PARSE(app, argc, argv);
  if (selected.empty()) {
    for (int i = 1; i <= 10; ++i) selected.push_back(i);
  }

  const std::map<int, std::function<Outcome()>> criteria{
      {1, criterion1},
      {2, criterion2},
      {3, criterion3},
      {4, criterion4},
      {5, criterion5},
      {6, criterion6},
      {7, criterion7},
      {8, criterion8},
      {9, criterion9},
      {10, [&] { return criterion10(sepstat_bin); }},
  };

  bool all = true;
  for (int id : selected) {
    Outcome o;
    try {
      o = criteria.at(id)();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail
              << std::endl;
  }
  return all ? 0 : 1;
}
