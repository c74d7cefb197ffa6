#include "fslr/tableau.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace fslr;

namespace {

/// Rows of entries like "1 1 1~ 1" per diagram, diagrams in order.
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

BarredSkewTableau figure1() {
  return from_rows({{"1 1 1~ 1", "2 2", "3 3"}, {"3~ 4~", "4"}, {"1~ 1 1 1 2", "3 3~ 4 5~", "4 5~", "5"}}, 5);
}

Polynomial y(int f, int j) { return Polynomial::variable(VarId::y(f, j)); }

std::set<std::vector<std::pair<int, bool>>> as_set(const std::vector<std::vector<BarredEntry>>& all) {
  std::set<std::vector<std::pair<int, bool>>> out;
  for (const auto& e : all) {
    std::vector<std::pair<int, bool>> v;
    for (const auto& b : e) v.emplace_back(b.value, b.barred);
    out.insert(v);
  }
  return out;
}

}  // namespace

TEST_CASE("multishape geometry") {
  const MultiShape s{{4, 2, 2}, {2, 1}, {5, 4, 2, 1}};
  CHECK(s.count() == 3);
  CHECK(s.total_boxes() == 8 + 3 + 12);
  CHECK(s.total_columns() == 11);
  // Diagram 3 is leftmost, diagram 1 rightmost.
  CHECK(s.column_offset(3) == 0);
  CHECK(s.column_offset(2) == 5);
  CHECK(s.column_offset(1) == 7);
  CHECK(s.locate_column(6) == std::pair<int, int>{2, 1});
  CHECK(s.row_offset(3) == 5);
  CHECK(s.fits(4));
  CHECK(!s.fits(3));
  CHECK(MultiShape::from_json(s.to_json()) == s);
  CHECK(s.to_json().dump() == "[[4,2,2],[2,1],[5,4,2,1]]");
}

TEST_CASE("Figure 1 tableau statistics") {
  const BarredSkewTableau t = figure1();
  const std::vector<int> word = column_word(t);
  std::string text;
  for (int v : word) text += std::to_string(v);
  CHECK(text == "1123123421141345");
  CHECK(is_yamanouchi(word));
  CHECK(unbarred_content(t) == ContentVector{6, 3, 3, 3, 1});
  CHECK(weight(t) == y(1, 3) * y(2, 3) * y(2, 5) * y(3, 1) * y(3, 3) * y(3, 7) * y(3, 4));
  CHECK(BarredSkewTableau::from_json(t.to_json(), 5) == t);
}

TEST_CASE("column words, Yamanouchi and content on small cases") {
  CHECK(is_yamanouchi(std::vector<int>{}));
  CHECK(!is_yamanouchi(std::vector<int>{2, 1}));
  CHECK(is_yamanouchi(std::vector<int>{1, 2, 1, 3}));
  const BarredSkewTableau row = from_rows({{"1 1"}}, 2);
  CHECK(column_word(row) == std::vector<int>{1, 1});
  const BarredSkewTableau barred = from_rows({{"1~ 2~", "2~"}}, 2);
  CHECK(column_word(barred).empty());
  CHECK(unbarred_content(barred) == ContentVector{0, 0});
  CHECK(weight(barred) == y(1, 1) * y(1, 3) * y(1, 1));
  CHECK(unbarred_content(from_rows({{"1 1 2"}}, 3)) == ContentVector{2, 1, 0});
  CHECK(weight(from_rows({{"1~"}}, 1)) == y(1, 1));
  CHECK(weight(row) == 1);
}

TEST_CASE("column word, content and weight agree with the geometric oracle") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& shape : multishapes_up_to(3, n, 4)) {
      enumerate_barred(shape, n, [&](const BarredSkewTableau& t) {
        const std::vector<BarredEntry> entries(t.entries().begin(), t.entries().end());
        CHECK(column_word(t) == oracle::column_word(shape, entries));
        CHECK(is_yamanouchi(column_word(t)) == oracle::yamanouchi(oracle::column_word(shape, entries)));
        CHECK(unbarred_content(t) == oracle::content(entries, n));
        CHECK(weight(t) == oracle::weight(shape, entries));
      });
    }
  }
}

TEST_CASE("barred enumeration equals naive fill-and-filter") {
  CHECK(enumerate_barred(MultiShape{{1}}, 1).size() == 2);
  CHECK_THROWS_AS(enumerate_barred(MultiShape{{1, 1}}, 1), std::invalid_argument);
  CHECK(enumerate_barred(MultiShape{{2, 1}, {1, 1}}, 2).size() == oracle::naive_barred(MultiShape{{2, 1}, {1, 1}}, 2).size());
  for (int n = 1; n <= 2; ++n) {
    for (const auto& shape : multishapes_up_to(3, n, 5)) {
      std::vector<std::vector<BarredEntry>> ours;
      for (const auto& t : enumerate_barred(shape, n)) ours.emplace_back(t.entries().begin(), t.entries().end());
      const auto naive = oracle::naive_barred(shape, n);
      CHECK_MESSAGE(ours.size() == naive.size(), shape.to_string());
      CHECK(as_set(ours) == as_set(naive));
    }
  }
  for (const MultiShape& shape : {MultiShape{{2, 1}, {2, 1}}, MultiShape{{3, 2, 1}}, MultiShape{{2, 2}, {1}, {1}}}) {
    CHECK(enumerate_barred(shape, 3).size() == oracle::naive_barred(shape, 3).size());
  }
}

TEST_CASE("barred enumeration order is deterministic") {
  const auto all = enumerate_barred(MultiShape{{1}}, 2);
  REQUIRE(all.size() == 4);
  CHECK(all[0].entries()[0] == BarredEntry{1, false});
  CHECK(all[1].entries()[0] == BarredEntry{1, true});
  CHECK(all[2].entries()[0] == BarredEntry{2, false});
  CHECK(all[3].entries()[0] == BarredEntry{2, true});
  const auto two = enumerate_barred(MultiShape{{1}, {1}}, 1);
  REQUIRE(two.size() == 4);
  // The last diagram varies fastest.
  CHECK(two[0].entries()[1] == BarredEntry{1, false});
  CHECK(two[1].entries()[1] == BarredEntry{1, true});
  CHECK(two[1].entries()[0] == BarredEntry{1, false});
}

TEST_CASE("semistandard enumeration") {
  const auto one = enumerate_semistandard(Partition{1}, 2);
  REQUIRE(one.size() == 2);
  CHECK(one[0].entries()[0].value == 1);
  CHECK(one[1].entries()[0].value == 2);
  CHECK(enumerate_semistandard(Partition{2, 1}, 3).size() == 8);
  CHECK_THROWS_AS(enumerate_semistandard(Partition{1, 1, 1}, 2), std::invalid_argument);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lambda : partitions_in_box(n, 5, 5)) {
      const auto all = enumerate_semistandard(lambda, n);
      CHECK(static_cast<long>(all.size()) == oracle::hook_content_count(lambda, n));
      for (const auto& t : all) CHECK(!t.has_bars());
    }
  }
}

TEST_CASE("validation and JSON errors") {
  const MultiShape shape{{2}, {1}};
  CHECK_THROWS_AS(BarredSkewTableau(shape, 2, {{2, false}, {1, false}, {1, false}}), std::invalid_argument);
  CHECK_THROWS_AS(BarredSkewTableau(shape, 2, {{1, false}, {1, false}}), std::invalid_argument);
  CHECK_THROWS_AS(BarredSkewTableau(shape, 2, {{1, false}, {3, false}, {1, false}}), std::invalid_argument);
  CHECK_THROWS_AS(BarredSkewTableau(MultiShape{{1, 1}}, 2, {{1, false}, {1, true}}), std::invalid_argument);
  CHECK_NOTHROW(BarredSkewTableau(MultiShape{{1, 1}}, 2, {{1, true}, {2, false}}));
  const auto bad = nlohmann::json::parse(R"({"shape":[[1]],"cells":[{"d":1,"r":1,"c":2,"v":1,"b":false}]})");
  CHECK_THROWS_AS(BarredSkewTableau::from_json(bad, 2), std::invalid_argument);
}

TEST_CASE("ASCII rendering") {
  const BarredSkewTableau t = from_rows({{"1 1~", "2"}, {"1"}}, 2);
  CHECK(t.render() == "   1  1~\n   2\n1\n");
}

TEST_CASE("multishape sweep covers each shape once") {
  const auto shapes = multishapes_up_to(2, 2, 3);
  std::set<std::string> seen;
  for (const auto& s : shapes) {
    CHECK(s.total_boxes() <= 3);
    CHECK(s.count() == 2);
    CHECK(s.fits(2));
    CHECK(seen.insert(s.to_string()).second);
  }
  CHECK(seen.count("((),())") == 1);
}
