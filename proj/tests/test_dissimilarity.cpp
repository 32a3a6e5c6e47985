#include "phylotrop/dissimilarity.hpp"
#include "phylotrop/newick.hpp"

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace phylotrop;

namespace {

std::vector<std::vector<Rational>> rows_of(const DistanceMatrix& dm) {
  std::vector<std::vector<Rational>> rows(dm.size(), std::vector<Rational>(dm.size()));
  for (int i = 1; i <= dm.size(); ++i)
    for (int j = 1; j <= dm.size(); ++j) rows[i - 1][j - 1] = dm(i, j);
  return rows;
}

DistanceMatrix three_point(long xy, long yz, long xz) {
  return DistanceMatrix({{0, xy, xz}, {xy, 0, yz}, {xz, yz, 0}});
}

}  // namespace

TEST_CASE("steiner_weight on the fixtures", "[dissimilarity]") {
  Tree bal4 = parse_newick(fixtures::kBal4);
  Tree fig1 = parse_newick(fixtures::kFig1);
  CHECK(steiner_weight(bal4, std::vector<int>{1, 2}) == 2);
  CHECK(steiner_weight(bal4, std::vector<int>{1, 2, 3, 4}) == 6);
  CHECK(steiner_weight(fig1, std::vector<int>{1, 2}) == 2);
  CHECK(steiner_weight(fig1, std::vector<int>{1, 10}) == 18);
  CHECK(steiner_weight(fig1, std::vector<int>{4, 5, 3}) == 5);
}

TEST_CASE("steiner_weight rejects bad subsets", "[dissimilarity]") {
  Tree bal4 = parse_newick(fixtures::kBal4);
  CHECK_THROWS_AS(steiner_weight(bal4, std::vector<int>{1}), std::invalid_argument);
  CHECK_THROWS_AS(steiner_weight(bal4, std::vector<int>{1, 5}), std::invalid_argument);
  CHECK_THROWS_AS(steiner_weight(bal4, std::vector<int>{2, 2}), std::invalid_argument);
}

TEST_CASE("dissimilarity vectors of the balanced tree", "[dissimilarity]") {
  Tree bal4 = parse_newick(fixtures::kBal4);
  auto d2 = dissimilarity_vector(bal4, 2);
  CHECK(d2.values == std::vector<Rational>{2, 4, 4, 4, 4, 2});
  CHECK(d2.subsets.front() == LeafSet{1, 2});
  CHECK(d2.subsets.back() == LeafSet{3, 4});
  CHECK(dissimilarity_vector(bal4, 3).values == std::vector<Rational>{5, 5, 5, 5});
  CHECK(dissimilarity_vector(bal4, 4).values == std::vector<Rational>{6});
  CHECK(d2.at(std::vector<int>{2, 4}) == 4);
  CHECK_THROWS_AS(dissimilarity_vector(bal4, 1), std::invalid_argument);
  CHECK_THROWS_AS(dissimilarity_vector(bal4, 5), std::invalid_argument);
}

TEST_CASE("steiner_weight agrees with the union of pairwise paths", "[dissimilarity][property]") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 2 + static_cast<int>(seed % 7);
    Tree tree = seed % 3 == 0 ? random_ultrametric(n, Rational(3), seed).tree() : random_phylogenetic(n, seed);
    for (int m = 2; m <= n; ++m)
      for (const auto& sigma : k_subsets(n, m)) REQUIRE(steiner_weight(tree, sigma) == oracle::union_of_paths_weight(tree, sigma));
    REQUIRE(dissimilarity_vector(tree, n).values == std::vector<Rational>{total_weight(tree)});
  }
}

TEST_CASE("ultrametric distances are twice the lca height", "[dissimilarity][property]") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto ut = random_ultrametric(2 + static_cast<int>(seed % 9), Rational(4), seed);
    const Tree& tree = ut.tree();
    auto dm = leaf_distances(tree);
    REQUIRE(is_ultrametric(dm));
    for (int i = 1; i <= dm.size(); ++i)
      for (int j = i + 1; j <= dm.size(); ++j) {
        NodeId v = tree.leaf(i);
        while (!tree_order_leq(tree, v, tree.leaf(j))) v = *tree.parent(v);
        REQUIRE(dm(i, j) == 2 * ut.height(v));
      }
  }
}

TEST_CASE("relabeling permutes the dissimilarity vector", "[dissimilarity][property]") {
  Rng rng(5);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 3 + static_cast<int>(seed % 6);
    Tree tree = random_phylogenetic(n, seed);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    Tree moved = tree.relabeled(perm);
    for (int m = 2; m <= n; ++m) {
      auto before = dissimilarity_vector(tree, m);
      auto after = dissimilarity_vector(moved, m);
      for (std::size_t k = 0; k < before.subsets.size(); ++k) {
        LeafSet image;
        for (int l : before.subsets[k]) image.push_back(perm[l - 1]);
        std::sort(image.begin(), image.end());
        REQUIRE(after.at(image) == before.values[k]);
      }
    }
  }
}

TEST_CASE("ultrametric test and witness", "[dissimilarity]") {
  auto w = find_ultrametric_violation(three_point(1, 2, 4));
  REQUIRE(w);
  CHECK(w->x == 1);
  CHECK(w->y == 2);
  CHECK(w->z == 3);
  CHECK(is_ultrametric(three_point(3, 3, 3)));
  CHECK(is_ultrametric(three_point(2, 4, 4)));
  CHECK(is_ultrametric(leaf_distances(parse_newick(fixtures::kFig1))));
}

TEST_CASE("distance matrix validation", "[dissimilarity]") {
  using Rows = std::vector<std::vector<Rational>>;
  CHECK_THROWS_AS(DistanceMatrix(Rows{{0, 1}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(DistanceMatrix(Rows{{1, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(DistanceMatrix(Rows{{0, -1}, {-1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(DistanceMatrix(Rows{{0, 1}}), std::invalid_argument);
}

TEST_CASE("realize_ultrametric round trips", "[dissimilarity]") {
  for (auto text : {fixtures::kBal4, fixtures::kFig1, fixtures::kCherry}) {
    auto dm = leaf_distances(parse_newick(text));
    auto ut = realize_ultrametric(dm);
    CHECK(rows_of(leaf_distances(ut.tree())) == rows_of(dm));
  }
  auto fig1 = realize_ultrametric(leaf_distances(parse_newick(fixtures::kFig1)));
  CHECK(fig1.depth() == 9);
  CHECK(serialize_newick(fig1.tree()) == fixtures::kFig1);
}

TEST_CASE("realize_ultrametric resolves a star with a zero-weight edge", "[dissimilarity]") {
  auto ut = realize_ultrametric(three_point(2, 2, 2));
  CHECK(ut.depth() == 1);
  CHECK(serialize_newick(ut.tree()) == "((1:1,2:1):0,3:1);");
}

TEST_CASE("realize_ultrametric rejects bad input", "[dissimilarity]") {
  try {
    realize_ultrametric(three_point(1, 2, 4));
    FAIL("accepted a non-ultrametric matrix");
  } catch (const NotUltrametricError& e) {
    REQUIRE(e.witness());
    CHECK(e.witness()->z == 3);
  }
  CHECK_THROWS_AS(realize_ultrametric(three_point(0, 2, 2)), NotUltrametricError);
  CHECK_THROWS_AS(realize_ultrametric(DistanceMatrix(std::vector<std::vector<Rational>>{{Rational(0)}})), NotUltrametricError);
}

TEST_CASE("realize_ultrametric on random matrices", "[dissimilarity][property]") {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    auto dm = oracle::random_ultrametric_matrix(rng, 2 + trial % 9);
    REQUIRE(is_ultrametric(dm));
    auto ut = realize_ultrametric(dm);
    REQUIRE(rows_of(leaf_distances(ut.tree())) == rows_of(dm));
  }
}
