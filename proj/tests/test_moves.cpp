#include <doctest.h>

#include <set>

#include "dtwist/explore.hpp"
#include "dtwist/moves.hpp"
#include "support.hpp"

using namespace dtwist;

TEST_CASE("flip lists agree with a pairwise slab scan") {
  for (const Tiling& t : enumerate_all(make_box(2, 3, 4))) {
    REQUIRE(static_cast<int>(flips(t).size()) == oracle::count_flips(t));
  }
  for (const Tiling& t : enumerate_all(make_box(3, 3, 2))) {
    REQUIRE(static_cast<int>(flips(t).size()) == oracle::count_flips(t));
  }
}

TEST_CASE("the three-flip fixture has one flip per slab direction") {
  const Tiling t = oracle::load_fixture("three_flips.txt");
  const auto fs = flips(t);
  REQUIRE(fs.size() == 3);
  std::set<int> normals;
  std::set<std::string> results;
  for (const Flip& f : fs) {
    normals.insert(f.normal);
    const Tiling next = apply_flip(t, f);
    CHECK(next != t);
    results.insert(io::to_floors(next));
    CHECK(apply_flip(next, reverse(f)) == t);
    CHECK(f.normal != f.along);
  }
  CHECK(normals == std::set<int>{0, 1, 2});
  CHECK(results.size() == 3);
}

TEST_CASE("frozen fixtures admit no local move") {
  for (const char* name : {"frozen_depth3.txt", "frozen_depth6.txt"}) {
    const Tiling t = oracle::load_fixture(name);
    CHECK(flips(t).empty() == (std::string(name) == "frozen_depth3.txt"));
    CHECK(trits(t).empty());
  }
}

TEST_CASE("trits are reversible and change exactly three dominoes") {
  std::size_t seen = 0;
  for (const Tiling& t : enumerate_all(make_box(3, 3, 2))) {
    for (const Trit& tr : trits(t)) {
      ++seen;
      const Tiling next = apply_trit(t, tr);
      const Trit back = reverse(tr);
      CHECK(back.sign == -tr.sign);
      CHECK(apply_trit(next, back) == t);
      int changed = 0;
      for (const Domino& d : t.dominoes()) changed += next.has(d) ? 0 : 1;
      CHECK(changed == 3);
      std::set<int> axes;
      for (const Domino& d : tr.removed) axes.insert(d.axis());
      CHECK(axes.size() == 3);
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("trit signs: four of the eight window configurations are positive") {
  int positive = 0;
  for (int diagonal = 0; diagonal < 4; ++diagonal) {
    const auto& c = trit_cycle(diagonal);
    for (int m = 0; m < 2; ++m) {
      std::array<Domino, 3> removed;
      for (int k = 0; k < 3; ++k)
        removed[static_cast<std::size_t>(k)] = Domino::from_cubes(Cube{c[static_cast<std::size_t>(m + 2 * k)]}, Cube{c[static_cast<std::size_t>((m + 2 * k + 1) % 6)]});
      const int s = trit_sign(removed, {0, 0, 0});
      CHECK((s == 1 || s == -1));
      positive += s > 0;
      // A translation by one cube swaps colors but not the sign.
      std::array<Domino, 3> shifted;
      for (int k = 0; k < 3; ++k) {
        const auto& d = removed[static_cast<std::size_t>(k)];
        shifted[static_cast<std::size_t>(k)] = Domino::from_cubes(d.white + Vec3{1, 0, 0}, d.black + Vec3{1, 0, 0});
      }
      CHECK(trit_sign(shifted, {1, 0, 0}) == s);
    }
  }
  CHECK(positive == 4);
}

TEST_CASE("reflections reverse trit signs, rotations keep them") {
  for (const Tiling& t : enumerate_all(make_box(2, 3, 4))) {
    const auto ts = trits(t);
    if (ts.empty()) continue;
    int sum = 0;
    for (const Trit& tr : ts) sum += tr.sign;
    for (int axis = 0; axis < 3; ++axis) {
      int rs = 0, ro = 0;
      for (const Trit& tr : trits(reflected(t, axis))) rs += tr.sign;
      for (const Trit& tr : trits(rotated(t, axis, 1))) ro += tr.sign;
      CHECK(rs == -sum);
      CHECK(ro == sum);
    }
  }
}

TEST_CASE("move ids and json") {
  const Tiling t = oracle::load_fixture("three_flips.txt");
  const Flip f = flips(t).front();
  const std::string id = move_id(f);
  CHECK(id.rfind("flip:", 0) == 0);
  const auto j = to_json(f);
  CHECK(j["id"] == id);
  CHECK(j["kind"] == "flip");
  CHECK(j["sign"] == 0);
  for (const Trit& tr : trits(t)) {
    CHECK(move_id(tr).rfind("trit:", 0) == 0);
    CHECK(to_json(tr)["sign"] == tr.sign);
  }
}

TEST_CASE("applying a move to the wrong tiling is rejected") {
  const Tiling t = oracle::load_fixture("three_flips.txt");
  const Flip f = flips(t).front();
  const Tiling next = apply_flip(t, f);
  CHECK_THROWS_AS(apply_flip(next, f), Error);
}
