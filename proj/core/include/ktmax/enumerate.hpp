#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ktmax/graph.hpp"

namespace ktmax {

/// Parameters of an exhaustive run over isomorphism classes of graphs with
/// m edges, max degree <= r and no isolated vertices.
struct SearchSpec {
    std::int64_t m = 0;
    int r = 1;
    int t = 3;
    bool connected_only = false;
    std::optional<int> clique_number_cap;
    int vertex_cap = 0;        // 0 means the natural bound 2m
    std::uint64_t budget = 0;  // max classes visited at the final level; 0 = unlimited
    int jobs = 1;
    int split_depth = 4;       // edge level at which subtrees are distributed
};

/// Stable identifier of the enumeration domain, used to match checkpoints.
std::string spec_key(const SearchSpec& spec);

struct SearchResult {
    std::int64_t f_value = 0;
    std::vector<std::string> extremal_graph6;  // canonical forms, sorted
    std::uint64_t graphs_visited = 0;          // classes at the final level
    std::int64_t g_value = 0;
    bool matches_conjecture = false;
};

/// Result of one finished frontier subtree; the unit of checkpointing.
struct SubtreeOutcome {
    std::string subtree;  // canonical graph6 of the frontier root
    std::int64_t f_value = 0;
    std::vector<std::string> extremal_graph6;
    std::uint64_t graphs_visited = 0;
};

struct SearchCheckpoint {
    std::string spec;  // spec_key of the run
    std::vector<SubtreeOutcome> done;
};

/// Line-delimited checkpoint records; enough to resume a budgeted search.
void write_checkpoint(std::ostream& out, const SearchCheckpoint& checkpoint);
SearchCheckpoint read_checkpoint(std::istream& in);

struct BudgetExceededError : std::runtime_error {
    BudgetExceededError(std::string msg, SearchResult partial_result, SearchCheckpoint progress)
        : std::runtime_error(std::move(msg)),
          partial(std::move(partial_result)),
          checkpoint(std::move(progress)) {}
    SearchResult partial;
    SearchCheckpoint checkpoint;
};

/// Calls the visitor exactly once per isomorphism class at the final level,
/// serially, in a deterministic order. Returns the class count.
std::uint64_t enumerate_graphs(const SearchSpec& spec, const std::function<void(const Graph&)>& visitor);

/// Same tree, but the visitor sees every node: each class with 0 < e <= m
/// edges (plus the empty graph when m = 0) exactly once.
std::uint64_t enumerate_all_levels(const SearchSpec& spec,
                                   const std::function<void(const Graph&, std::int64_t)>& visitor);

/// Exact f_t(m,r) with all extremal classes, distributed over spec.jobs
/// workers; the result is independent of the schedule. When `resume` is
/// given, subtrees recorded there are merged instead of re-run. When the
/// budget runs out, throws BudgetExceededError carrying the partial result
/// and a resumable checkpoint.
SearchResult compute_f(const SearchSpec& spec, const SearchCheckpoint* resume = nullptr);

/// One traversal collecting f_t(m',r) for every 0 <= m' <= m.
/// grid[m'] has g_value/matches filled in against the closed form.
std::vector<SearchResult> compute_f_grid(const SearchSpec& spec);

struct BoundCheckCase {
    std::int64_t m;
    std::string detail;
    bool ok;
};

/// f_t(m,r) <= m C(r+1,t)/C(r+1,2), checked with exact rationals.
BoundCheckCase verify_asymptotic_bound(const SearchSpec& spec);

/// max k_t over graphs with clique number <= omega vs the rainbow colex
/// segment; omega is spec.clique_number_cap.
BoundCheckCase verify_rainbow_corollary(const SearchSpec& spec);

}  // namespace ktmax
