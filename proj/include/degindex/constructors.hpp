#pragma once

#include <span>

#include "degindex/graph.hpp"

namespace degindex {

// Parts of sizes a and b, fully joined.
Graph complete_bipartite(int a, int b);

// Bipartite graph with b*t vertices of degree a and a*t vertices of degree b
// (requires a <= b, t >= 1). Edge slot j of left vertex i attaches to right
// vertex (i*a + j) mod (a*t); consecutive residues are distinct, so the graph
// is simple. t = 1 gives complete_bipartite(b, a) up to relabelling. Note an
// (a,b)-biregular graph exists only on multiples of (a+b)/gcd(a,b) vertices;
// this generator produces the sizes (a+b)*t.
Graph biregular_graph(int a, int b, int t);

// r-regular circulant on n vertices: offsets 1..r/2, plus n/2 when r is odd
// (n must then be even). Requires r < n and r*n even.
Graph circulant_regular(int n, int r);

// Vertex-disjoint union with shifted labels.
Graph disjoint_union(std::span<const Graph> parts);

}  // namespace degindex
