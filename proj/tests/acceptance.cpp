// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Exit status is 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "eqschubert/error.hpp"
#include "eqschubert/giambelli.hpp"
#include "eqschubert/gkm.hpp"
#include "eqschubert/latticepaths.hpp"
#include "eqschubert/restriction.hpp"
#include "support/oracles.hpp"

using namespace eqschubert;

namespace {

using Space = std::pair<std::size_t, std::size_t>;
const std::vector<Space> kSweep{{2, 4}, {2, 5}, {3, 6}};

// Wall-clock bounds in seconds. Equality checks are exact throughout.
constexpr double kExample2Seconds = 5;
constexpr double kExample1Seconds = 1;
constexpr double kSweepSeconds = 120;
constexpr double kGiambelliSeconds = 120;
constexpr double kVanishingSeconds = 120;
constexpr double kGkmSeconds = 60;
constexpr double kStructConstSeconds = 300;
constexpr double kClassicalSeconds = 60;
constexpr double kPropertySeconds = 300;
constexpr int kHkCases = 250;

// Collects the first few failure messages of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) detail_ << (failures_ > 1 ? "; " : "") << what;
  }
  bool ok() const { return failures_ == 0; }
  std::string detail() const {
    std::string d = detail_.str();
    if (failures_ > 3) d += "; ... " + std::to_string(failures_) + " failures in all";
    return d;
  }

 private:
  int failures_ = 0;
  std::ostringstream detail_;
};

GIndex I(const char* literal, std::size_t d, std::size_t n) { return GIndex::parse(literal, d, n); }

std::string pair_name(const GIndex& u, const GIndex& v) {
  return "u=" + u.to_string() + " v=" + v.to_string();
}

void example2(Check& c) {
  const std::size_t n = 13;
  const auto u = I("4,6,7,10,11,13", 6, n);
  const auto v = I("1,2,3,8,9,10", 6, n);
  Polynomial expected = Polynomial::constant(n, 1);
  for (int r = 11; r <= 13; ++r) {
    for (int col = 1; col <= 3; ++col) expected *= eps(n, r, col);
  }
  expected *= eps(n, 12, 9) * eps(n, 12, 10) + eps(n, 13, 8) * eps(n, 12, 10) +
              eps(n, 13, 8) * eps(n, 13, 9);
  expected *= eps(n, 5, 3) + eps(n, 6, 2) + eps(n, 7, 1);
  c.expect(restrict_det(u, v) == expected, "restrict_det differs from the displayed product");
  c.expect(path_sum(u, v) == expected, "path_sum differs from the displayed product");
  const auto count = enumerate_tuples(u, v).size();
  c.expect(count == 9, "tuple count " + std::to_string(count));
}

void example1(Check& c) {
  const auto u = I("1,4,5,9,12,13,16,17,19,22,24,25,26,27", 14, 27);
  const auto v = I("1,2,3,4,5,10,11,12,13,18,19,20,21,22", 14, 27);
  const std::vector<Cell> expected{{9, 3},   {16, 11}, {17, 10}, {24, 21},
                                   {25, 20}, {26, 18}, {27, 2}};
  c.expect(mon(u, v) == expected, "mon(u,v) differs");
  const auto ends = beta_endpoints({16, 11}, v);
  c.expect(ends.start == Cell{14, 11} && ends.finish == Cell{16, 13},
           "endpoints " + to_string(ends.start) + " " + to_string(ends.finish));
}

void sweep(Check& c) {
  for (auto [d, n] : kSweep) {
    const auto all = all_indices(d, n);
    for (const auto& u : all) {
      for (const auto& v : all) {
        if (leq(v, u)) c.expect(restrict_det(u, v) == path_sum(u, v), pair_name(u, v));
      }
    }
  }
}

void giambelli(Check& c) {
  for (auto [d, n] : std::vector<Space>{{2, 4}, {2, 5}}) {
    for (const auto& u : all_indices(d, n)) {
      c.expect(giambelli_class(u) == schubert_class(u), "u=" + u.to_string());
    }
  }
}

void vanishing(Check& c) {
  for (auto [d, n] : kSweep) {
    const auto all = all_indices(d, n);
    const auto top = GIndex::top(d, n);
    const auto one = Polynomial::constant(n, 1);
    for (const auto& u : all) {
      Polynomial diag = one;
      for (const auto& cell : pos_of(u)) diag *= eps(n, cell.r, cell.c);
      c.expect(restrict_det(u, u) == diag, "diagonal at " + u.to_string());
      c.expect(restrict_det(top, u) == one, "top class at " + u.to_string());
      for (const auto& v : all) {
        c.expect(restrict_det(u, v).is_zero() == !leq(v, u), "vanishing at " + pair_name(u, v));
      }
    }
  }
}

void gkm(Check& c) {
  for (const auto& u : all_indices(2, 4)) {
    c.expect(gkm_check(schubert_class(u)).ok, "u=" + u.to_string());
  }
  EqClass broken(1, 2);
  broken.set(I("1", 1, 2), Polynomial::constant(2, 1));
  const auto report = gkm_check(broken);
  const bool edge = report.violations.size() == 1 && report.violations[0].w == I("1", 1, 2) &&
                    report.violations[0].x == I("2", 1, 2);
  c.expect(!report.ok && edge, "broken class not reported on the edge (1)-(2)");
}

void struct_consts(Check& c) {
  for (auto [d, n] : std::vector<Space>{{1, 3}, {2, 4}}) {
    const SchubertBasis basis(d, n);
    for (const auto& u : basis.indices()) {
      for (const auto& v : basis.indices()) {
        const auto solved = struct_consts_solve(u, v, basis);
        for (const auto& w : basis.indices()) {
          const auto it = solved.find(w);
          const Polynomial expected = it == solved.end() ? Polynomial(n) : it->second;
          Polynomial chained(n);
          try {
            chained = struct_const_chain(u, v, w, basis);
          } catch (const NotPolynomial&) {
            c.expect(false, "denominator left at " + pair_name(u, v) + " w=" + w.to_string());
            continue;
          }
          const std::string where = pair_name(u, v) + " w=" + w.to_string();
          c.expect(chained == expected, "chain != solve at " + where);
          if (chained.is_zero()) continue;
          c.expect(leq(w, u) && leq(w, v), "support at " + where);
          c.expect(codim(w) >= std::max(codim(u), codim(v)) && codim(w) <= codim(u) + codim(v),
                   "codimension window at " + where);
          c.expect(chained.is_homogeneous() &&
                       chained.degree() == codim(u) + codim(v) - codim(w),
                   "degree at " + where);
        }
      }
    }
  }
}

void classical(Check& c) {
  const SchubertBasis basis(2, 4);
  const auto s1 = I("2,4", 2, 4), s2 = I("1,4", 2, 4), s11 = I("2,3", 2, 4), s21 = I("1,3", 2, 4);
  auto classical_part = [&](const GIndex& u, const GIndex& v) {
    std::map<oracle::Part, long> out;
    for (const auto& [w, coeff] : struct_consts_solve(u, v, basis)) {
      const auto c0 = specialize_zero(coeff);
      if (codim(w) != codim(u) + codim(v)) {
        c.expect(c0.is_zero(), "degree-mismatched entry survives at " + pair_name(u, v) +
                                   " w=" + w.to_string());
        continue;
      }
      if (!c0.is_zero()) out[lambda_of(w).parts] = c0.constant_term().get_si();
    }
    return out;
  };
  const std::map<oracle::Part, long> s1s1{{{2, 0}, 1}, {{1, 1}, 1}};
  const std::map<oracle::Part, long> s1s2{{{2, 1}, 1}};
  c.expect(classical_part(s1, s1) == s1s1, "sigma1^2 != sigma2 + sigma11");
  c.expect(classical_part(s1, s2) == s1s2, "sigma1 sigma2 != sigma21");
  c.expect(lambda_of(s11).parts == oracle::Part{1, 1} && lambda_of(s21).parts == oracle::Part{2, 1},
           "partition labels");
  for (const auto& u : basis.indices()) {
    for (const auto& v : basis.indices()) {
      const auto want = oracle::classical_product(lambda_of(u).parts, lambda_of(v).parts, 2);
      c.expect(classical_part(u, v) == want, "Pieri oracle disagrees at " + pair_name(u, v));
    }
  }
}

void properties(Check& c) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto a = oracle::random_polynomial(n, rng);
    const auto b = oracle::random_polynomial(n, rng);
    const auto z = oracle::random_polynomial(n, rng);
    c.expect(a + b == b + a && a * b == b * a, "commutativity");
    c.expect((a * b) * z == a * (b * z) && (a + b) + z == a + (b + z), "associativity");
    c.expect(a * (b + z) == a * b + a * z, "distributivity");
    c.expect(a * Polynomial::constant(n, 1) == a && (a - a).is_zero(), "identities");
    if (!b.is_zero()) c.expect(exact_div(a * b, b) == a, "exact_div round-trip");
  }

  for (unsigned m = 1; m <= 6; ++m) {
    std::vector<std::size_t> vars;
    for (std::size_t v = 1; v <= m; ++v) vars.push_back(v);
    for (unsigned k = 0; k <= 6; ++k) {
      mpz_class expected;
      mpz_bin_uiui(expected.get_mpz_t(), m + k - 1, k);
      c.expect(mpz_class(complete_homog(6, k, vars).size()) == expected,
               "h_" + std::to_string(k) + " in " + std::to_string(m) + " variables");
    }
  }

  for (int trial = 0; trial < kHkCases; ++trial) {
    HkIdentityParams p;
    p.n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    p.ui = std::uniform_int_distribution<int>(1, static_cast<int>(p.n))(rng);
    p.j = std::uniform_int_distribution<int>(1, p.ui)(rng);
    p.m = std::uniform_int_distribution<int>(0, p.j - 1)(rng);
    p.vs = std::uniform_int_distribution<int>(1, static_cast<int>(p.n))(rng);
    c.expect(hk_identity_check(p), "h_k identity fails");
  }

  for (auto [d, n] : kSweep) {
    const auto all = all_indices(d, n);
    for (const auto& u : all) {
      for (const auto& v : all) {
        const auto p = restrict_det(u, v);
        if (p.is_zero()) continue;
        c.expect(p.is_homogeneous() && p.degree() == codim(u), "degree at " + pair_name(u, v));
        c.expect(is_graham_positive(path_sum(u, v)), "positivity at " + pair_name(u, v));
      }
    }
  }
}

struct Criterion {
  int number;
  const char* name;
  double seconds;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "6x13 worked example: restriction, path sum, 9 tuples", kExample2Seconds, example2},
      {2, "14x27 worked example: mon and beta endpoints", kExample1Seconds, example1},
      {3, "determinant == path sum on Gr(2,4), Gr(2,5), Gr(3,6)", kSweepSeconds, sweep},
      {4, "Giambelli determinant == Schubert class on Gr(2,4), Gr(2,5)", kGiambelliSeconds,
       giambelli},
      {5, "vanishing, diagonal and top-class normalization", kVanishingSeconds, vanishing},
      {6, "GKM condition and the broken Gr(1,2) class", kGkmSeconds, gkm},
      {7, "chain == solve structure constants on Gr(1,3), Gr(2,4)", kStructConstSeconds,
       struct_consts},
      {8, "classical limit on Gr(2,4) against Pieri", kClassicalSeconds, classical},
      {9, "ring, h_k, telescoping identity, homogeneity, positivity", kPropertySeconds,
       properties},
  };

  int failed = 0;
  for (const auto& crit : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(elapsed <= crit.seconds, "took longer than " + std::to_string(crit.seconds) + " s");
    const bool ok = check.ok();
    if (!ok) ++failed;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", elapsed);
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << crit.number << ": " << crit.name << " ("
              << timing << ")";
    if (!ok) std::cout << " -- " << check.detail();
    std::cout << '\n';
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
