#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "gca/errors.hpp"
#include "gca/rng.hpp"
#include "gca/words.hpp"

using namespace gca;

namespace {

// Independent oracle: every freely reduced word over rank generators up to
// length max_len, as text, by plain recursion over letters.
void reduced_words(int rank, int max_len, std::string& cur, char last,
                   std::vector<std::string>& out) {
  out.push_back(cur);
  if (static_cast<int>(cur.size()) == max_len) return;
  for (int g = 0; g < rank; ++g) {
    char lo = static_cast<char>('a' + g), up = static_cast<char>('A' + g);
    if (last != up) {
      cur.push_back(lo);
      reduced_words(rank, max_len, cur, lo, out);
      cur.pop_back();
    }
    if (last != lo) {
      cur.push_back(up);
      reduced_words(rank, max_len, cur, up, out);
      cur.pop_back();
    }
  }
}

std::vector<std::string> reduced_words(int rank, int max_len) {
  std::vector<std::string> out;
  std::string cur;
  reduced_words(rank, max_len, cur, '\0', out);
  return out;
}

long long l1(const std::vector<long long>& v) {
  long long s = 0;
  for (long long c : v) s += std::llabs(c);
  return s;
}

}  // namespace

TEST_CASE("group specs parse and validate") {
  CHECK(parse_group_name("f2") == free_group(2));
  CHECK(parse_group_name("z3") == free_abelian(3));
  CHECK(parse_group_name("f26") == free_group(26));
  CHECK_THROWS_AS(parse_group_name("g2"), UsageError);
  CHECK_THROWS_AS(parse_group_name("f0"), UsageError);
  CHECK_THROWS_AS(parse_group_name("f27"), UsageError);
  CHECK_THROWS_AS(parse_group_name("z0"), UsageError);
  CHECK_THROWS_AS(parse_group_name(""), UsageError);
  CHECK_THROWS_AS(free_group(0), UsageError);
  CHECK_THROWS_AS(free_abelian(-1), UsageError);
}

TEST_CASE("parsing and formatting round-trip") {
  GroupSpec f2 = free_group(2);
  CHECK(GroupElement::parse(f2, "").is_identity());
  CHECK(GroupElement::parse(f2, "abAB").str() == "abAB");
  CHECK(GroupElement::parse(f2, "aA").is_identity());  // reduced on parse
  CHECK(GroupElement::parse(f2, "abBA").is_identity());
  CHECK(GroupElement::parse(f2, "abBa") == GroupElement::parse(f2, "aa"));
  GroupSpec f3 = free_group(3);
  CHECK(GroupElement::parse(f3, "abBc") == GroupElement::parse(f3, "ac"));
  CHECK_THROWS_AS(GroupElement::parse(f2, "ax"), UsageError);  // rank 2 has a, b
  CHECK_THROWS_AS(GroupElement::parse(f2, "a b"), UsageError);
  CHECK_THROWS_AS(GroupElement::parse(f2, "[1,2]"), UsageError);

  GroupSpec z2 = free_abelian(2);
  CHECK(GroupElement::parse(z2, "[1,-2]").coords() == std::vector<long long>{1, -2});
  CHECK(GroupElement::parse(z2, "[0,0]").is_identity());
  CHECK(GroupElement::parse(z2, "[1,-2]").str() == "[1,-2]");
  CHECK_THROWS_AS(GroupElement::parse(z2, "[1]"), UsageError);
  CHECK_THROWS_AS(GroupElement::parse(z2, "[1,2,3]"), UsageError);
  CHECK_THROWS_AS(GroupElement::parse(z2, "1,2"), UsageError);
  CHECK_THROWS_AS(GroupElement::parse(z2, "[1,x]"), UsageError);
  CHECK_THROWS_AS(GroupElement::parse(z2, "abc"), UsageError);
}

TEST_CASE("multiplication follows the group law") {
  GroupSpec f2 = free_group(2);
  auto w = [&](const char* s) { return GroupElement::parse(f2, s); };

  CHECK(multiply(w("a"), w("A")).is_identity());
  CHECK(multiply(w("ab"), w("Ba")) == w("aa"));
  CHECK(multiply(w("ab"), w("BA")).is_identity());
  CHECK(multiply(w("aB"), w("ba")) == w("aa"));

  GroupSpec z2 = free_abelian(2);
  GroupElement u = GroupElement::parse(z2, "[1,-2]");
  GroupElement v = GroupElement::parse(z2, "[3,2]");
  CHECK(multiply(u, v) == GroupElement::parse(z2, "[4,0]"));

  CHECK_THROWS_AS(multiply(w("a"), u), UsageError);  // group mismatch
}

TEST_CASE("length satisfies the axioms") {
  GroupSpec f2 = free_group(2);
  CHECK(GroupElement(f2).length() == 0);
  CHECK(GroupElement::parse(f2, "abA").length() == 3);
  CHECK(GroupElement::parse(free_abelian(2), "[2,-3]").length() == 5);

  // l(uv) <= l(u) + l(v), l(u^-1) = l(u), l(g) = 0 only at e.
  Rng rng(7);
  BallIndex ball(f2, 4);
  for (int t = 0; t < 200; ++t) {
    const GroupElement& u = ball.at(rng.below(ball.size()));
    const GroupElement& v = ball.at(rng.below(ball.size()));
    GroupElement uv = multiply(u, v);
    CHECK(uv.length() <= u.length() + v.length());
    CHECK(u.inverse().length() == u.length());
    CHECK(multiply(u, u.inverse()).is_identity());
    if (!u.is_identity()) CHECK(u.length() > 0);
  }
  BallIndex zball(free_abelian(2), 5);
  for (int t = 0; t < 200; ++t) {
    const GroupElement& u = zball.at(rng.below(zball.size()));
    const GroupElement& v = zball.at(rng.below(zball.size()));
    CHECK(multiply(u, v).length() <= u.length() + v.length());
    CHECK(u.inverse().length() == u.length());
    CHECK(multiply(u.inverse(), u).is_identity());
  }
}

TEST_CASE("free ball enumeration matches brute-force reduced words") {
  GroupSpec f2 = free_group(2);
  BallIndex ball(f2, 4);

  auto oracle = reduced_words(2, 4);
  REQUIRE(ball.size() == oracle.size());
  std::set<std::string> expect(oracle.begin(), oracle.end());
  std::set<std::string> got;
  for (std::size_t i = 0; i < ball.size(); ++i) got.insert(ball.at(i).str());
  CHECK(got == expect);

  // Sphere sizes 2n(2n-1)^{m-1}; ball at L=2 has 1 + 4 + 12 = 17 elements.
  CHECK(BallIndex(f2, 2).size() == 17);
  std::size_t expected_sphere = 4;
  BallIndex big(f2, 8);
  for (int m = 1; m <= 8; ++m) {
    CHECK(big.sphere_size(m) == expected_sphere);
    expected_sphere *= 3;
  }
  CHECK(BallIndex(f2, 0).size() == 1);
  CHECK(BallIndex(f2, 0).at(0).is_identity());

  BallIndex f3(free_group(3), 3);
  CHECK(f3.size() == 1 + 6 + 30 + 150);
  auto oracle3 = reduced_words(3, 3);
  CHECK(f3.size() == oracle3.size());
}

TEST_CASE("canonical order is length first, then letter code") {
  BallIndex ball(free_group(2), 2);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ball.size(); ++i) names.push_back(ball.at(i).str());
  std::vector<std::string> expect = {"",   "a",  "A",  "b",  "B",  "aa",
                                     "ab", "aB", "AA", "Ab", "AB", "ba",
                                     "bA", "bb", "Ba", "BA", "BB"};
  CHECK(names == expect);
  for (std::size_t i = 0; i + 1 < ball.size(); ++i) {
    CHECK(ball.at(i) < ball.at(i + 1));
    CHECK_FALSE(ball.at(i + 1) < ball.at(i));
  }
}

TEST_CASE("abelian ball enumeration") {
  BallIndex z1(free_abelian(1), 3);
  std::vector<long long> flat;
  for (std::size_t i = 0; i < z1.size(); ++i) flat.push_back(z1.at(i).coords()[0]);
  CHECK(flat == std::vector<long long>{0, -1, 1, -2, 2, -3, 3});

  // Grid brute force for Z^2.
  BallIndex z2(free_abelian(2), 3);
  std::set<std::vector<long long>> expect;
  for (long long i = -3; i <= 3; ++i)
    for (long long j = -3; j <= 3; ++j)
      if (std::llabs(i) + std::llabs(j) <= 3) expect.insert({i, j});
  std::set<std::vector<long long>> got;
  for (std::size_t i = 0; i < z2.size(); ++i) got.insert(z2.at(i).coords());
  CHECK(got == expect);
  CHECK(z2.size() == 25);

  for (std::size_t i = 0; i + 1 < z2.size(); ++i) CHECK(z2.at(i) < z2.at(i + 1));
  for (std::size_t i = 0; i < z2.size(); ++i)
    CHECK(z2.levels()[i] == l1(z2.at(i).coords()));
}

TEST_CASE("ball index lookups and sphere ranges") {
  for (GroupSpec spec : {free_group(2), free_abelian(2)}) {
    BallIndex ball(spec, 3);
    for (std::size_t i = 0; i < ball.size(); ++i) {
      auto idx = ball.index_of(ball.at(i));
      REQUIRE(idx.has_value());
      CHECK(*idx == i);
      CHECK(GroupElement::parse(spec, ball.at(i).str()) == ball.at(i));
    }
    // Levels nondecreasing, spheres contiguous and exhaustive.
    std::size_t total = 0;
    for (int m = 0; m <= 3; ++m) {
      auto [lo, hi] = ball.sphere_range(m);
      CHECK(hi - lo == ball.sphere_size(m));
      for (std::size_t i = lo; i < hi; ++i) CHECK(ball.levels()[i] == m);
      total += hi - lo;
    }
    CHECK(total == ball.size());

    GroupElement outside = spec.kind == GroupKind::FreeGroup
                               ? GroupElement::parse(spec, "abab")
                               : GroupElement::parse(spec, "[4,0]");
    CHECK_FALSE(ball.index_of(outside).has_value());
  }
}

TEST_CASE("ball growth respects |B_L| = |B_{L-1}| + |sphere L|") {
  for (GroupSpec spec : {free_group(2), free_abelian(3)}) {
    for (int L = 1; L <= 4; ++L) {
      BallIndex prev(spec, L - 1), cur(spec, L);
      CHECK(cur.size() == prev.size() + cur.sphere_size(L));
    }
  }
}

TEST_CASE("capacity guard rejects oversized balls") {
  CHECK_THROWS_AS(BallIndex(free_group(2), 10, 1000), CapacityError);
  CHECK_THROWS_AS(BallIndex(free_group(2), 12), CapacityError);  // 1062881 words
  CHECK_THROWS_AS(BallIndex(free_abelian(4), 40), CapacityError);
  CHECK_NOTHROW(BallIndex(free_group(2), 7));  // 4373 fits the default cap
}

TEST_CASE("generators and inverses") {
  GroupSpec f2 = free_group(2);
  CHECK(GroupElement::generator(f2, 0).str() == "a");
  CHECK(GroupElement::generator(f2, 1).str() == "b");
  CHECK(GroupElement::generator(f2, 1, true).str() == "B");
  CHECK(GroupElement::generator(f2, 0).inverse().str() == "A");
  CHECK(GroupElement::parse(f2, "ab").inverse().str() == "BA");
  CHECK_THROWS_AS(GroupElement::generator(f2, 2), UsageError);

  GroupSpec z2 = free_abelian(2);
  CHECK(GroupElement::generator(z2, 1).coords() == std::vector<long long>{0, 1});
  CHECK(GroupElement::generator(z2, 1, true).coords() == std::vector<long long>{0, -1});
  CHECK(GroupElement::parse(z2, "[2,-3]").inverse().str() == "[-2,3]");
}
