#pragma once

#include <string>
#include <vector>

#include "ktmax/graph.hpp"

namespace ktmax {

struct CanonicalForm {
    /// graph6 encoding of the canonically relabeled graph. Equal certificates
    /// mean isomorphic graphs and vice versa.
    std::string certificate;
    /// labeling[v] = position of v in the canonical graph.
    std::vector<int> labeling;
};

/// Canonical form by iterative degree refinement with backtracking over the
/// first non-singleton cell; discovered automorphisms prune sibling branches.
CanonicalForm canonical_form(const Graph& g);

std::string canonical_graph6(const Graph& g);

Graph relabel(const Graph& g, const std::vector<int>& labeling);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace ktmax
