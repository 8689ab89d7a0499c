#include "anydim/graphalg/counts.hpp"

namespace anydim {

GraphClass loop_graph(const Partition& lam) {
  MultiGraph g(lam.len());
  for (int i = 0; i < lam.len(); ++i) g.add_edge(i, i, lam[i]);
  return GraphClass(g);
}

}  // namespace anydim
