// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only,
// with wall-clock timings checked against each criterion's budget.
#include "fslr/change_basis.hpp"
#include "fslr/coeff_table.hpp"
#include "fslr/lr_rule.hpp"
#include "fslr/verify.hpp"

#include "../oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

using namespace fslr;

namespace {

Polynomial y(int f, int j) { return Polynomial::variable(VarId::y(f, j)); }

BarredSkewTableau from_rows(const std::vector<std::vector<std::string>>& diagrams, int n) {
  std::vector<Partition> shape;
  std::vector<BarredEntry> entries;
  for (const auto& rows : diagrams) {
    std::vector<int> parts;
    for (const auto& row : rows) {
      std::istringstream in(row);
      std::string token;
      int count = 0;
      while (in >> token) {
        const bool barred = token.back() == '~';
        entries.push_back({std::stoi(barred ? token.substr(0, token.size() - 1) : token), barred});
        ++count;
      }
      parts.push_back(count);
    }
    shape.emplace_back(parts);
  }
  return BarredSkewTableau(MultiShape(shape), n, entries);
}

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

FactorialSchurCache g_cache;

Outcome suite_outcome(const std::string& name) {
  Outcome out;
  const VerifyBounds bounds;  // max_boxes 6, n <= 3, r <= 3, |lambda|,|mu| <= 4
  for (const auto& report : run_verify(name, bounds, &g_cache)) {
    out.require(report.ok(), report.to_plain());
    if (out.ok) out.detail = std::to_string(report.checks) + " checks";
  }
  return out;
}

Outcome criterion1() {
  Outcome out;
  const MultiShape shape{{2, 1}, {1, 1}};
  const Partition mu{2, 2};
  out.require(lr_coefficient(shape, mu, 2) == y(1, 1) + y(1, 2) + y(1, 3) + y(2, 1), "coefficient");
  const auto found = enumerate_lr_tableaux(shape, mu, 2);
  const std::vector<BarredSkewTableau> expected = {
      from_rows({{"1~ 1", "2"}, {"1", "2"}}, 2),
      from_rows({{"1 1~", "2"}, {"1", "2"}}, 2),
      from_rows({{"1 2~", "2"}, {"1", "2"}}, 2),
      from_rows({{"1 1", "2"}, {"1~", "2"}}, 2),
  };
  out.require(found.size() == expected.size(), "tableau count " + std::to_string(found.size()));
  for (const auto& t : expected) {
    out.require(std::count(found.begin(), found.end(), t) == 1, "missing tableau\n" + t.render());
  }
  return out;
}

Outcome criterion2() {
  Outcome out;
  const auto j = nlohmann::json::parse(
      from_rows({{"1 1 1~ 1", "2 2", "3 3"}, {"3~ 4~", "4"}, {"1~ 1 1 1 2", "3 3~ 4 5~", "4 5~", "5"}}, 5)
          .to_json()
          .dump());
  const BarredSkewTableau t = BarredSkewTableau::from_json(j, 5);
  std::string word;
  for (int v : column_word(t)) word += std::to_string(v);
  out.require(word == "1123123421141345", "column word " + word);
  out.require(is_yamanouchi(column_word(t)), "Yamanouchi");
  out.require(unbarred_content(t) == ContentVector{6, 3, 3, 3, 1}, "content");
  out.require(weight(t) == y(1, 3) * y(2, 3) * y(2, 5) * y(3, 1) * y(3, 3) * y(3, 7) * y(3, 4), "weight");
  return out;
}

Outcome criterion3() {
  Outcome out;
  const Partition c = complement(Partition{5, 3, 1}, 4, 8);
  out.require(c == Partition{4, 4, 4, 3, 3, 2, 2, 1}, "complement " + c.to_string());
  return out;
}

Outcome criterion10() {
  Outcome out;
  YSpecialization zero;
  zero.zero_family(1);
  zero.zero_family(2);
  const MultiShape shape{{2, 1}, {2, 1}};
  const int n = 3;
  out.require(zero.apply(lr_coefficient(shape, Partition{3, 2, 1}, n)) == 2, "c^(3,2,1) at y = 0");

  // Bar-free brute force: all fillings of the two diagrams without bars,
  // filtered by the Yamanouchi condition, counted by content.
  std::map<Partition, long, PartitionDescending> brute;
  Polynomial product;
  for (const auto& entries : oracle::naive_barred(shape, n)) {
    if (std::any_of(entries.begin(), entries.end(), [](const BarredEntry& e) { return e.barred; })) continue;
    product += Polynomial::term(Monomial::x_power(oracle::content(entries, n)));
    if (oracle::yamanouchi(oracle::column_word(shape, entries))) ++brute[Partition(oracle::content(entries, n))];
  }
  const CoeffTable table = specialize(lr_expand(shape, n), zero);
  CoeffTable expected;
  for (const auto& [mu, count] : brute) expected.set(mu, Polynomial(count));
  out.require(table == expected, "expansion differs from brute force:\n" + table.to_plain());
  // s_(2,1)^2 = s_(4,2) + s_(4,1,1) + s_(3,3) + 2 s_(3,2,1) + s_(2,2,2) in three variables.
  const std::map<Partition, long, PartitionDescending> known = {
      {Partition{4, 2}, 1}, {Partition{4, 1, 1}, 1}, {Partition{3, 3}, 1}, {Partition{3, 2, 1}, 2}, {Partition{2, 2, 2}, 1}};
  out.require(brute == known, "brute force differs from the known expansion");
  Polynomial rebuilt;
  for (const auto& [mu, c] : table.entries()) rebuilt += c * schur(mu, n);
  out.require(rebuilt == product, "sum c s_mu differs from s_(2,1)^2");
  out.require(product == schur(Partition{2, 1}, n) * schur(Partition{2, 1}, n), "product of Schur polynomials");
  return out;
}

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Example 3 coefficient and its four LR tableaux", 1, criterion1},
      {2, "Figure 1 column word, content and weight", 1, criterion2},
      {3, "complement((5,3,1), 4, 8)", 1, criterion3},
      {4, "tableau rule equals alternant oracle (<= 6 boxes, r <= 3, n <= 3)", 300,
       [] { return suite_outcome("theorem"); }},
      {5, "alternant-weighted tableau sums and complement cancellation", 300, [] { return suite_outcome("lemma3"); }},
      {6, "Bender-Knuth involutions (<= 6 boxes, n = 3)", 120, [] { return suite_outcome("involutions"); }},
      {7, "bad-guy pairing cancels non-Yamanouchi tableaux", 120, [] { return suite_outcome("cancellation"); }},
      {8, "change-of-basis determinants, duality and inverses", 300, [] { return suite_outcome("basis"); }},
      {9, "composition through classical coefficients and factorial-basis expansion", 300,
       [] { return suite_outcome("remark"); }},
      {10, "classical specialization y = 0 against bar-free brute force", 60, criterion10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && seconds > c.budget_seconds) {
      out.ok = false;
      out.detail = "over time budget of " + std::to_string(c.budget_seconds) + " s";
    }
    failed += !out.ok;
    std::printf("%s criterion %2d: %s [%.3f s] %s\n", out.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds,
                out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
