#include <doctest.h>

#include <cmath>
#include <random>

#include "mawdist/errors.hpp"
#include "mawdist/phylogeny.hpp"
#include "test_util.hpp"

using namespace mawdist;

namespace {

double leaf_depth(const PhyloTree& tree, int node) {
  double depth = 0.0;
  while (node != tree.root()) {
    depth += tree.nodes()[static_cast<std::size_t>(node)].length;
    node = tree.nodes()[static_cast<std::size_t>(node)].parent;
  }
  return depth;
}

}  // namespace

TEST_CASE("two-taxon clustering") {
  DistanceMatrix m({"A", "B"}, {0, 2, 2, 0}, "t");
  PhyloTree tree = upgma(m);
  CHECK(tree.rooted());
  CHECK(tree.leaf_count() == 2);
  CHECK(to_newick(tree) == "(A:1,B:1);");
  CHECK_THROWS_AS(neighbor_joining(m), InputError);
}

TEST_CASE("three-taxon clustering merges the close pair first") {
  DistanceMatrix m({"A", "B", "C"}, {0, 2, 8, 2, 0, 8, 8, 8, 0}, "t");
  PhyloTree tree = upgma(m);
  CHECK(to_newick(tree) == "((A:1,B:1):3,C:4);");
  CHECK(to_newick(tree, false) == "((A,B),C);");
  // k leaves produce k-1 merges
  CHECK(tree.nodes().size() == 3 + 2);
}

TEST_CASE("neighbor joining recovers a hand-built additive matrix") {
  // tree: (A:1,B:2) joined to (C:3,D:4) through an internal edge of 1
  DistanceMatrix m({"A", "B", "C", "D"},
                   {0, 3, 5, 6,
                    3, 0, 6, 7,
                    5, 6, 0, 7,
                    6, 7, 7, 0},
                   "t");
  PhyloTree tree = neighbor_joining(m);
  CHECK_FALSE(tree.rooted());
  CHECK(to_newick(tree) == "((A:1,B:2):1,C:3,D:4);");
  // k leaves produce k-2 internal nodes, all of degree 3
  CHECK(tree.nodes().size() == 4 + 2);
  CHECK(has_clade(tree, std::vector<std::string>{"A", "B"}));
  CHECK(has_clade(tree, std::vector<std::string>{"C", "D"}));
  CHECK_FALSE(has_clade(tree, std::vector<std::string>{"A", "C"}));
}

TEST_CASE("upgma trees are ultrametric") {
  std::mt19937 rng(5);
  for (int round = 0; round < 40; ++round) {
    std::uniform_int_distribution<std::size_t> taxa(2, 12);
    DistanceMatrix m = mawtest::random_symmetric_matrix(rng, taxa(rng));
    PhyloTree tree = upgma(m);
    double reference = -1.0;
    for (std::size_t n = 0; n < tree.nodes().size(); ++n) {
      if (!tree.nodes()[n].children.empty()) {
        CHECK(tree.nodes()[n].length >= 0.0);
        continue;
      }
      double depth = leaf_depth(tree, static_cast<int>(n));
      if (reference < 0.0) {
        reference = depth;
      } else {
        CHECK(depth == doctest::Approx(reference).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("neighbor joining inverts additive matrices exactly") {
  std::mt19937 rng(6);
  for (int round = 0; round < 30; ++round) {
    std::uniform_int_distribution<std::size_t> taxa(5, 8);
    mawtest::RandomTree generated = mawtest::random_binary_tree(rng, taxa(rng));
    PhyloTree recovered = neighbor_joining(mawtest::additive_matrix(generated));
    mawtest::SplitMap want = mawtest::splits_of(generated);
    mawtest::SplitMap got = mawtest::splits_of(recovered);
    REQUIRE(want.size() == got.size());
    for (const auto& [side, length] : want) {
      REQUIRE(got.count(side) == 1);
      CHECK(got[side] == doctest::Approx(length).epsilon(1e-9));
    }
  }
}

TEST_CASE("label permutations do not change the result") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<std::size_t> taxa(4, 9);
  for (int round = 0; round < 25; ++round) {
    std::size_t k = taxa(rng);
    DistanceMatrix m = mawtest::random_symmetric_matrix(rng, k);
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::string> labels(k);
    std::vector<double> cells(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      labels[i] = m.labels()[perm[i]];
      for (std::size_t j = 0; j < k; ++j) {
        cells[i * k + j] = m.at(perm[i], perm[j]);
      }
    }
    DistanceMatrix shuffled(labels, cells, m.tag());
    CHECK(to_newick(upgma(m)) == to_newick(upgma(shuffled)));
    CHECK(to_newick(neighbor_joining(m)) ==
          to_newick(neighbor_joining(shuffled)));
  }
}

TEST_CASE("clade queries") {
  DistanceMatrix m({"A", "B", "C", "D"},
                   {0, 1, 4, 4,
                    1, 0, 4, 4,
                    4, 4, 0, 2,
                    4, 4, 2, 0},
                   "t");
  PhyloTree tree = upgma(m);
  CHECK(has_clade(tree, std::vector<std::string>{"A", "B"}));
  CHECK(has_clade(tree, std::vector<std::string>{"C", "D"}));
  CHECK(has_clade(tree, std::vector<std::string>{"A", "B", "C", "D"}));
  CHECK(has_clade(tree, std::vector<std::string>{"D"}));
  CHECK_FALSE(has_clade(tree, std::vector<std::string>{"B", "C"}));
  CHECK_FALSE(has_clade(tree, std::vector<std::string>{}));
  CHECK_THROWS_AS(has_clade(tree, std::vector<std::string>{"E"}), InputError);
}

TEST_CASE("negative neighbor-joining limbs clamp to zero") {
  // non-additive: the first join (A, C) gets a limb of -1/4 before clamping
  DistanceMatrix m({"A", "B", "C", "D"},
                   {0, 1, 1, 1,
                    1, 0, 1, 1,
                    1, 1, 0, 4,
                    1, 1, 4, 0},
                   "t");
  PhyloTree tree = neighbor_joining(m);
  for (const PhyloNode& node : tree.nodes()) {
    CHECK(node.length >= 0.0);
    if (node.label == "A" || node.label == "B") {
      CHECK(node.length == 0.0);
    }
  }
}

TEST_CASE("ascii rendering lists every taxon") {
  DistanceMatrix m({"A", "B", "C"}, {0, 2, 8, 2, 0, 8, 8, 8, 0}, "t");
  std::string art = render_ascii(upgma(m));
  CHECK(art.find("A:1") != std::string::npos);
  CHECK(art.find("B:1") != std::string::npos);
  CHECK(art.find("C:4") != std::string::npos);
}
