#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cliquesplit/graph.hpp"

namespace cliquesplit {

enum class GeneratorKind {
    complete,
    cycle,
    path,
    gnp,
    random_regular,
    strong_product_cycle_clique,
    disjoint_union,
    join_pendant_clique,
    petersen,
};

// Deterministic description of a graph family member.
//
//   complete / cycle / path   n
//   gnp                       n, probability
//   random_regular            n, degree
//   strong_product_cycle_clique  n = cycle length (odd, >= 5), degree = clique size m
//   disjoint_union            parts (two or more)
//   join_pendant_clique       parts[0] = base, degree = clique size, attach = base vertex
//   petersen                  no parameters
struct GeneratorRecipe {
    GeneratorKind kind = GeneratorKind::complete;
    int n = 0;
    int degree = 0;
    double probability = 0.0;
    int attach = 0;
    std::vector<GeneratorRecipe> parts;
    std::uint64_t seed = 0;
};

// Same recipe, same graph. Infeasible parameters throw GraphError.
Graph generate(const GeneratorRecipe& recipe);

// Recipe strings used by the CLI:
//   complete:N  cycle:N  path:N  petersen  gnp:N,P  regular:N,D  strong:LxM
//   union:R1+R2[+...]  pendant:M,V/BASE
// Throws ParseError on anything else.
GeneratorRecipe parse_recipe(std::string_view text, std::uint64_t seed = 0);
std::string recipe_to_string(const GeneratorRecipe& recipe);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen_graph();
Graph gnp_graph(int n, double p, std::uint64_t seed);
// Pairing model: random point pairs, pairs that would make a loop or a
// repeated edge are redrawn; a dead end restarts with the next sub-seed.
Graph random_regular_graph(int n, int d, std::uint64_t seed);
// base + disjoint K_m + one edge from base vertex `attach` to the first clique vertex.
Graph join_pendant_clique(const Graph& base, int m, Vertex attach);

}  // namespace cliquesplit
