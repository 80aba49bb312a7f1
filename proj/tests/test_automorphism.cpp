#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "symgame/automorphism.hpp"

using namespace symgame;

namespace {

// Reference: enumerate every involution and test the fixed-edge-free
// automorphism property directly.
bool has_iffa_brute(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    VertexPermutation phi{std::vector<int>(perm.begin(), perm.end())};
    if (phi.is_involution() && phi.is_automorphism(g) && phi.is_fixed_edge_free(g))
      return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("involutory fixed-edge-free search matches brute force") {
  std::vector<Graph> corpus;
  for (int n = 2; n <= 6; ++n) corpus.push_back(make_path(n));
  for (int n = 3; n <= 6; ++n) corpus.push_back(make_cycle(n));
  for (int n = 3; n <= 5; ++n) corpus.push_back(make_complete(n));
  corpus.push_back(make_complete_bipartite(1, 3));
  corpus.push_back(make_complete_bipartite(2, 3));
  corpus.push_back(make_complete_bipartite(3, 3));

  for (const auto& g : corpus) {
    auto found = find_involutory_fixed_edge_free_automorphism(g);
    CHECK(found.has_value() == has_iffa_brute(g));
    if (found) {
      CHECK(found->is_involution());
      CHECK(found->is_automorphism(g));
      CHECK(found->is_fixed_edge_free(g));
    }
  }
}

TEST_CASE("paths with even edge count admit the reflection") {
  auto even = find_involutory_fixed_edge_free_automorphism(make_path(6));
  REQUIRE(even.has_value());
  // odd edge count: the reflection fixes the middle edge and nothing else works
  CHECK_FALSE(find_involutory_fixed_edge_free_automorphism(make_path(5)).has_value());
}

TEST_CASE("even cycles admit the antipodal rotation, odd cycles do not") {
  CHECK(find_involutory_fixed_edge_free_automorphism(make_cycle(6)).has_value());
  CHECK(find_involutory_fixed_edge_free_automorphism(make_cycle(8)).has_value());
  CHECK_FALSE(find_involutory_fixed_edge_free_automorphism(make_cycle(5)).has_value());
}

TEST_CASE("edge image is a permutation consistent with the vertex map") {
  Graph c = make_cycle(6);
  auto phi = find_involutory_fixed_edge_free_automorphism(c);
  REQUIRE(phi.has_value());
  std::vector<bool> seen(c.edge_count(), false);
  for (int e = 0; e < c.edge_count(); ++e) {
    int img = phi->edge_image(c, e);
    CHECK(img != e);
    CHECK_FALSE(seen[img]);
    seen[img] = true;
    CHECK(phi->edge_image(c, img) == e);
  }
}

TEST_CASE("automorphism edge permutation count") {
  CHECK(automorphism_edge_perms(make_path(4)).size() == 2);
  CHECK(automorphism_edge_perms(make_cycle(5)).size() == 10);
  CHECK(automorphism_edge_perms(make_complete(4)).size() == 24);
  CHECK(automorphism_edge_perms(make_complete_bipartite(2, 3)).size() == 12);
}

TEST_CASE("canonicalizer identifies symmetric positions") {
  Graph c = make_cycle(5);
  PositionCanonicalizer canon(c);
  CHECK(canon.exact());
  // red {0}, blue {2} vs rotated red {1}, blue {3}
  CHECK(canon.key(1u << 0, 1u << 2) == canon.key(1u << 1, 1u << 3));
  // a reflection through the right vertex also swaps the colors here
  CHECK(canon.key(1u << 0, 1u << 2) == canon.key(1u << 2, 1u << 0));
  CHECK(canon.key(1u << 0, 1u << 2) != canon.key(1u << 0, 1u << 1));

  // on a path the color swap is not reachable: only the reflection
  Graph p = make_path(4);
  PositionCanonicalizer pc(p);
  CHECK(pc.key(1u << 0, 1u << 1) == pc.key(1u << 3, 1u << 2));
  CHECK(pc.key(1u << 0, 1u << 1) != pc.key(1u << 1, 1u << 0));
}

TEST_CASE("canonical key throws on overlapping colorings") {
  Graph p = make_path(4);
  EdgeSet red(4, {0, 1});
  EdgeSet blue(4, {1, 2});
  CHECK_THROWS_AS(canonical_key(p, red, blue), std::invalid_argument);
}
