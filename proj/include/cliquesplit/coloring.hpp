#pragma once

#include <vector>

#include "cliquesplit/graph.hpp"

namespace cliquesplit {

// DSatur greedy colouring; colours are 0-based. Ties: larger degree, then smaller index.
std::vector<int> dsatur_coloring(const Graph& g);

int colour_count(const std::vector<int>& colouring);
bool is_proper_colouring(const Graph& g, const std::vector<int>& colouring);

// Colour classes sorted by size (descending), ties by smallest member.
std::vector<VertexSet> colour_classes(const std::vector<int>& colouring);

}  // namespace cliquesplit
