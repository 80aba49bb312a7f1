#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "symgame/fo/formula.hpp"

namespace symgame::fo {

namespace {

std::string uvar(int i, int a) {
  return "u" + std::to_string(i) + "_" + std::to_string(a);
}

std::string vvar(int i, int a) {
  return "v" + std::to_string(i) + "_" + std::to_string(a);
}

// the two vertex pairs (x1,x2) and (y1,y2) denote different edges
FormulaPtr dist(const std::string& x1, const std::string& x2,
                const std::string& y1, const std::string& y2) {
  return lnot(lor({land({equal(x1, y1), equal(x2, y2)}),
                   land({equal(x1, y2), equal(x2, y1)})}));
}

// the u-pair j is an edge distinct from every earlier pair of either player
FormulaPtr build_a(int j) {
  std::vector<FormulaPtr> parts;
  parts.push_back(edge(uvar(j, 1), uvar(j, 2)));
  for (int i = 1; i < j; ++i)
    parts.push_back(dist(uvar(j, 1), uvar(j, 2), uvar(i, 1), uvar(i, 2)));
  for (int i = 1; i < j; ++i)
    parts.push_back(dist(uvar(j, 1), uvar(j, 2), vvar(i, 1), vvar(i, 2)));
  return land(std::move(parts));
}

// the v-pair j is an edge distinct from every u-pair up to j and every
// earlier v-pair
FormulaPtr build_b(int j) {
  std::vector<FormulaPtr> parts;
  parts.push_back(edge(vvar(j, 1), vvar(j, 2)));
  for (int i = 1; i <= j; ++i)
    parts.push_back(dist(vvar(j, 1), vvar(j, 2), uvar(i, 1), uvar(i, 2)));
  for (int i = 1; i < j; ++i)
    parts.push_back(dist(vvar(j, 1), vvar(j, 2), vvar(i, 1), vvar(i, 2)));
  return land(std::move(parts));
}

uint64_t disjunct_count(int j) {
  uint64_t c = 1;
  for (int i = 1; i <= j; ++i) c *= 2ull * i;  // j! * 2^j
  return c;
}

}  // namespace

FormulaPtr build_iso(int j) {
  if (j < 1) throw std::invalid_argument("iso index must be positive");
  if (j > 3)
    throw CapabilityError("iso disjunction for j=" + std::to_string(j) +
                          " has " + std::to_string(disjunct_count(j)) +
                          " members; the cap is j <= 3");
  // a pairing-respecting permutation is a permutation of the edge indices
  // plus a per-edge endpoint swap: f(i,a) = (perm[i], a or 3-a)
  std::vector<int> perm(j);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<FormulaPtr> disjuncts;
  do {
    for (int flips = 0; flips < (1 << j); ++flips) {
      auto f = [&](int i, int a) {
        int m = perm[i - 1];
        bool swap = (flips >> (i - 1)) & 1;
        return std::pair<int, int>(m, swap ? 3 - a : a);
      };
      std::vector<FormulaPtr> conj;
      for (int i = 1; i <= j; ++i)
        for (int a = 1; a <= 2; ++a)
          for (int ip = 1; ip <= j; ++ip)
            for (int ap = 1; ap <= 2; ++ap) {
              auto [m, b] = f(i, a);
              auto [mp, bp] = f(ip, ap);
              conj.push_back(iff(equal(uvar(i, a), uvar(ip, ap)),
                                 equal(vvar(m, b), vvar(mp, bp))));
            }
      disjuncts.push_back(land(std::move(conj)));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return lor(std::move(disjuncts));
}

FormulaPtr build_phi_k(int k) {
  if (k < 1) throw std::invalid_argument("round count must be positive");
  if (k > 3)
    throw CapabilityError("materializing the iso disjunction for k=" +
                          std::to_string(k) + " needs " +
                          std::to_string(disjunct_count(k)) +
                          " disjuncts; the cap is k <= 3");
  std::vector<FormulaPtr> as, bs;
  for (int j = 1; j <= k; ++j) {
    as.push_back(build_a(j));
    bs.push_back(build_b(j));
  }
  for (int j = 1; j <= k; ++j) bs.push_back(build_iso(j));
  FormulaPtr body = implies(land(std::move(as)), land(std::move(bs)));
  for (int j = k; j >= 1; --j) {
    body = exists(vvar(j, 2), std::move(body));
    body = exists(vvar(j, 1), std::move(body));
    body = forall(uvar(j, 2), std::move(body));
    body = forall(uvar(j, 1), std::move(body));
  }
  return body;
}

}  // namespace symgame::fo
