#include "fslr/partition.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace fslr;

TEST_CASE("construction and validation") {
  const Partition p{3, 1, 0, 0};
  CHECK(p == Partition{3, 1});
  CHECK(p.length() == 2);
  CHECK(p.width() == 3);
  CHECK(p.size() == 4);
  CHECK(p[1] == 3);
  CHECK(p[5] == 0);
  CHECK(p.padded(4) == std::vector<int>{3, 1, 0, 0});
  CHECK_THROWS_AS(p.padded(1), std::invalid_argument);
  CHECK_THROWS_AS((Partition{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS((Partition{2, -1}), std::invalid_argument);
  CHECK(Partition().empty());
  CHECK(p.to_string() == "(3,1)");
  CHECK(Partition().to_string() == "()");
}

TEST_CASE("conjugate and containment") {
  CHECK(Partition{5, 3, 1}.conjugate() == Partition{3, 2, 2, 1, 1});
  CHECK(Partition{5, 3, 1}.conjugate().conjugate() == Partition{5, 3, 1});
  CHECK(Partition{3, 2}.contains(Partition{2, 2}));
  CHECK(!Partition{3, 2}.contains(Partition{2, 2, 1}));
  CHECK(Partition{1}.contains(Partition{}));
}

TEST_CASE("JSON round trip") {
  const Partition p{4, 4, 2};
  CHECK(p.to_json().dump() == "[4,4,2]");
  CHECK(Partition::from_json(p.to_json()) == p);
  CHECK_THROWS_AS(Partition::from_json(nlohmann::json::parse("[1,\"a\"]")), std::invalid_argument);
  CHECK_THROWS_AS(Partition::from_json(nlohmann::json::parse("{}")), std::invalid_argument);
}

TEST_CASE("bounded enumeration matches a brute-force generator") {
  for (int n = 1; n <= 4; ++n) {
    for (int size = 0; size <= 6; ++size) {
      auto expected = oracle::small_partitions(n, size);
      std::sort(expected.begin(), expected.end(), PartitionDescending());
      CHECK(partitions_in_box(n, size, size) == expected);
      std::size_t exact = 0;
      for (const auto& p : expected) exact += p.size() == size;
      CHECK(partitions_of(size, n).size() == exact);
    }
  }
  for (const auto& p : partitions_in_box(3, 2, 5)) CHECK((p.width() <= 2 && p.length() <= 3 && p.size() <= 5));
}
