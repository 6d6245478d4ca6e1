#pragma once

// Explicit vertex-level models of the families that admit small coordinates.
// These are the ground truth the closed-form layer is checked against: walks,
// linear solves, and simulations all run on the adjacency lists built here.

#include "drg/intersection_array.hpp"

#include <string>
#include <utility>
#include <vector>

namespace drg {

struct ExplicitGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;  // sorted neighbor lists

    int degree_of(int v) const { return static_cast<int>(adj[v].size()); }
};

ExplicitGraph build_complete(int n);
ExplicitGraph build_cycle(int n);
ExplicitGraph build_hamming(int m, int q);   // q-ary m-tuples, Hamming distance 1
ExplicitGraph build_johnson(int m, int q);   // q-subsets of [m], meet in q-1
ExplicitGraph build_odd(int m);              // (m-1)-subsets of [2m-1], disjointness
ExplicitGraph build_dodecahedron();          // generalized Petersen GP(10, 2)

// True when build_family can produce coordinates for the name.
bool family_buildable(const std::string& name);

// Explicit model for a family reference. Throws ValidationError for families
// with no wired-in coordinates (biggs-smith) and for models over 20000
// vertices.
ExplicitGraph build_family(const FamilySpec& spec);

std::vector<int> bfs_distances(const ExplicitGraph& g, int src);

// Infers the intersection array by BFS from every vertex and per-pair
// neighbor counting, confirming along the way that the graph is connected,
// regular, and distance-regular. Throws ValidationError naming the first
// violating vertex or pair otherwise.
IntersectionArray extract_array(const ExplicitGraph& g);

// Edges as (u, v) with u < v, lexicographic.
std::vector<std::pair<int, int>> edge_list(const ExplicitGraph& g);

} // namespace drg
