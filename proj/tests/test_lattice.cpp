#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latfold/lattice.hpp"

#include <algorithm>
#include <set>

using namespace latfold;

TEST_CASE("compass steps") {
  CHECK(step(Dir::Down) == std::pair{0, -1});
  CHECK(step(Dir::Right) == std::pair{1, 0});
  CHECK(step(Dir::Left) == std::pair{-1, 0});
  CHECK(step(Dir::Up) == std::pair{0, 1});
}

TEST_CASE("fold_to_coords walks the chain") {
  const Fold f{{Dir::Right, Dir::Down, Dir::Down, Dir::Left, Dir::Up}};
  const Conformation c = fold_to_coords(f);
  REQUIRE(c.coords.size() == 6);
  CHECK(c.coords[0] == std::pair{0, 0});
  CHECK(c.coords[1] == std::pair{1, 0});
  CHECK(c.coords[2] == std::pair{1, -1});
  CHECK(c.coords[3] == std::pair{1, -2});
  CHECK(c.coords[4] == std::pair{0, -2});
  CHECK(c.coords[5] == std::pair{0, -1});
  CHECK(is_saw(c));
}

TEST_CASE("backtracking is not self-avoiding") {
  const Fold f{{Dir::Right, Dir::Left}};
  CHECK_FALSE(is_saw(fold_to_coords(f)));
}

TEST_CASE("SAW counts on the square lattice") {
  CHECK(enumerate_saws(4, false).size() == 36);
  CHECK(enumerate_saws(4, true).size() == 6);
  CHECK(enumerate_saws(5, false).size() == 100);
  CHECK(enumerate_saws(6, false).size() == 284);
}

TEST_CASE("symmetry-fixed enumeration covers every walk exactly once") {
  for (int n : {4, 5}) {
    const auto fixed = enumerate_saws(n, true);
    const auto all = enumerate_saws(n, false);
    // Map every unfixed walk through the 8 symmetries; exactly the fixed
    // set must appear, and each orbit must contain a fixed representative.
    std::set<Fold> fixed_set(fixed.begin(), fixed.end());
    std::set<Fold> reached;
    for (const auto& f : all) {
      const Conformation c = fold_to_coords(f);
      bool found = false;
      for (int sym = 0; sym < 8; ++sym) {
        const auto g = coords_to_fold(apply_symmetry(c, sym));
        REQUIRE(g.has_value());
        if (fixed_set.count(*g)) {
          reached.insert(*g);
          found = true;
        }
      }
      CHECK(found);
    }
    CHECK(reached.size() == fixed_set.size());
  }
}

TEST_CASE("coords_to_fold inverts fold_to_coords") {
  for (const auto& f : enumerate_saws(5, false)) {
    const auto g = coords_to_fold(fold_to_coords(f));
    REQUIRE(g.has_value());
    CHECK(*g == f);
  }
}

TEST_CASE("interaction mask zeroes non-interactable entries") {
  // All-ones lower triangle; only odd separations >= 3 survive.
  std::vector<std::vector<long long>> j(5, std::vector<long long>(5, -1));
  const Instance inst({"A", "A", "A", "A", "A"}, j);
  CHECK(inst.j(1, 2) == 0);
  CHECK(inst.j(1, 3) == 0);
  CHECK(inst.j(1, 4) == -1);
  CHECK(inst.j(4, 1) == -1);
  CHECK(inst.j(1, 5) == 0);
  CHECK(inst.j(2, 5) == -1);
  CHECK(inst.interacting_pairs() == std::vector<std::pair<int, int>>{{1, 4}, {2, 5}});
  CHECK(inst.j_sum() == -2);
}

TEST_CASE("hp model marks H-H pairs") {
  const Instance inst = Instance::hp("HPPHP");
  CHECK(inst.j(1, 4) == -1);
  CHECK(inst.j(2, 5) == 0);
  CHECK(inst.j_sum() == -1);
}

TEST_CASE("mj contact energies for PSVKMA") {
  const Instance inst = Instance::mj("PSVKMA");
  CHECK(inst.j(1, 4) == -1);  // P-K
  CHECK(inst.j(1, 6) == -2);  // P-A
  CHECK(inst.j(2, 5) == -3);  // S-M
  CHECK(inst.j(3, 6) == -4);  // V-A
  CHECK(inst.j(2, 6) == 0);
  CHECK(inst.j_sum() == -10);
}

TEST_CASE("instance file parsing") {
  const Instance hp = Instance::parse("# comment\nHPPHP\nmodel hp\n");
  CHECK(hp.chain_length() == 5);
  CHECK(hp.j(1, 4) == -1);

  const Instance raw = Instance::parse("ABCD\nj\n0\n0 0\n-2 0 0\n");
  CHECK(raw.j(1, 4) == -2);
  CHECK(raw.j(2, 3) == 0);

  CHECK_THROWS(Instance::parse("ABCD\nj\n0\n"));          // missing rows
  CHECK_THROWS(Instance::parse("ABCD\nj\n0\n0 0\n2 0 0\n"));  // positive energy
}

TEST_CASE("conformation energy counts lattice contacts") {
  const Instance inst = Instance::hp("HPPH");
  const Fold u{{Dir::Right, Dir::Down, Dir::Left}};  // 1 and 4 adjacent
  CHECK(native_energy(u, inst) == -1);
  const Fold line{{Dir::Right, Dir::Right, Dir::Right}};
  CHECK(native_energy(line, inst) == 0);
  CHECK_THROWS(conformation_energy(fold_to_coords(Fold{{Dir::Right, Dir::Left, Dir::Right}}), inst));
}

TEST_CASE("ground truth HPPHP") {
  const GroundTruth gt = ground_truth(Instance::hp("HPPHP"));
  CHECK(gt.energy == -1);
  CHECK(std::is_sorted(gt.folds.begin(), gt.folds.end()));
  for (const auto& f : gt.folds) CHECK(native_energy(f, Instance::hp("HPPHP")) == -1);
}

TEST_CASE("ground truth PSVKMA") {
  const GroundTruth gt = ground_truth(Instance::mj("PSVKMA"));
  CHECK(gt.energy == -6);
  const Fold printed{{Dir::Right, Dir::Down, Dir::Down, Dir::Left, Dir::Up}};
  CHECK(std::binary_search(gt.folds.begin(), gt.folds.end(), printed));
}

TEST_CASE("all-zero J makes every SAW optimal") {
  const Instance inst = Instance::hp("PPPP");
  const GroundTruth gt = ground_truth(inst);
  CHECK(gt.energy == 0);
  CHECK(gt.folds.size() == enumerate_saws(4, true).size());
}
