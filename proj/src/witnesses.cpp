#include <stdexcept>
#include <string>

#include "pcg/tree.hpp"

namespace pcg {

std::pair<WeightedTree, DistanceBounds> wheel7_witness() {
  // Star of four internal nodes around a center; hub leaf at the center,
  // opposite rim vertices paired on the outer internals. PCG(T,5,7):
  // hub edges have distance 5 or 7, rim edges 6, chords 4 (red) or 8 (blue).
  WeightedTree t;
  int center = t.add_internal();
  int p14 = t.add_internal();
  int p25 = t.add_internal();
  int p36 = t.add_internal();
  int c = t.add_leaf("c");
  int v1 = t.add_leaf("v1");
  int v2 = t.add_leaf("v2");
  int v3 = t.add_leaf("v3");
  int v4 = t.add_leaf("v4");
  int v5 = t.add_leaf("v5");
  int v6 = t.add_leaf("v6");
  t.add_edge(c, center, 3);
  t.add_edge(center, p14, 1);
  t.add_edge(center, p25, 1);
  t.add_edge(center, p36, 1);
  t.add_edge(v1, p14, 1);
  t.add_edge(v4, p14, 3);
  t.add_edge(v5, p25, 1);
  t.add_edge(v2, p25, 3);
  t.add_edge(v3, p36, 1);
  t.add_edge(v6, p36, 3);
  t.validate();
  return {t, DistanceBounds(5, 7)};
}

std::pair<WeightedTree, DistanceBounds> wheel8_witness() {
  // Two three-leaf internals P and Q around a middle node M, with the hub
  // leaf c and rim vertex v5 hanging off a fourth internal R. PCG(T,9,13).
  WeightedTree t;
  int m = t.add_internal();
  int p = t.add_internal();
  int q = t.add_internal();
  int r = t.add_internal();
  int c = t.add_leaf("c");
  int v1 = t.add_leaf("v1");
  int v2 = t.add_leaf("v2");
  int v3 = t.add_leaf("v3");
  int v4 = t.add_leaf("v4");
  int v5 = t.add_leaf("v5");
  int v6 = t.add_leaf("v6");
  int v7 = t.add_leaf("v7");
  t.add_edge(p, m, 2);
  t.add_edge(m, q, 2);
  t.add_edge(m, r, 3);
  t.add_edge(v2, p, 3);
  t.add_edge(v4, p, 1);
  t.add_edge(v7, p, 5);
  t.add_edge(v1, q, 3);
  t.add_edge(v3, q, 5);
  t.add_edge(v6, q, 1);
  t.add_edge(c, r, 3);
  t.add_edge(v5, r, 6);
  t.validate();
  return {t, DistanceBounds(9, 13)};
}

std::pair<WeightedTree, DistanceBounds> minimality_caterpillar(int n) {
  // Caterpillar realizing cycle_strong_p2(n) minus u_n as PCG(T, 2n-2, 2n+2).
  // Spine positions 2,4,...,2n-2 carry the pairs (u_i, v_i) on leaf edges of
  // weight n; v_n sits at spine position n on a weight-1 edge. Pairs at the
  // same position meet at 2n (rungs), consecutive positions at 2n+2 (rims and
  // diagonals), farther apart beyond 2n+2 (blue). v_n reaches positions 2 and
  // 2n-2 at 2n-1 and everything strictly between below 2n-2 (red).
  if (n < 4) throw std::invalid_argument("minimality_caterpillar: n must be >= 4");
  WeightedTree t;
  std::vector<int> spine(n - 1);
  for (int i = 0; i + 1 < n; ++i) spine[i] = t.add_internal();
  int mid;  // spine node at position n
  if (n % 2 == 0) {
    mid = spine[n / 2 - 1];
  } else {
    mid = t.add_internal();
  }
  std::vector<int> u(n - 1), v(n - 1);
  for (int i = 0; i + 1 < n; ++i) u[i] = t.add_leaf("u" + std::to_string(i + 1));
  for (int i = 0; i + 1 < n; ++i) v[i] = t.add_leaf("v" + std::to_string(i + 1));
  int vn = t.add_leaf("v" + std::to_string(n));
  for (int i = 0; i + 2 < n; ++i) {
    if (n % 2 == 1 && i == n / 2 - 1) {
      t.add_edge(spine[i], mid, 1);
      t.add_edge(mid, spine[i + 1], 1);
    } else {
      t.add_edge(spine[i], spine[i + 1], 2);
    }
  }
  for (int i = 0; i + 1 < n; ++i) {
    t.add_edge(u[i], spine[i], n);
    t.add_edge(v[i], spine[i], n);
  }
  t.add_edge(vn, mid, 1);
  t.validate();
  return {t, DistanceBounds(2 * n - 2, 2 * n + 2)};
}

}  // namespace pcg
