#include "ktmax/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <istream>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ktmax/canonical.hpp"
#include "ktmax/colex.hpp"
#include "ktmax/graph6.hpp"

namespace ktmax {

namespace {

int effective_vertex_cap(const SearchSpec& spec) {
    std::int64_t natural = 2 * spec.m;
    std::int64_t cap = spec.vertex_cap > 0 ? std::min<std::int64_t>(spec.vertex_cap, natural) : natural;
    if (cap > kMaxVertices)
        throw std::domain_error("search: vertex cap exceeds compiled capacity");
    return static_cast<int>(cap);
}

Graph with_extra_vertices(const Graph& g, int extra) {
    Graph out(g.vertex_count() + extra);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    return out;
}

/// The canonical edge of h under its canonical labeling: the edge whose
/// image pair is colex-last in the canonical graph.
std::pair<int, int> canonical_edge(const Graph& h, const std::vector<int>& labeling) {
    std::pair<int, int> best{-1, -1};
    std::pair<int, int> best_img{-1, -1};
    for (auto [u, v] : h.edges()) {
        int a = labeling[u], b = labeling[v];
        if (a > b) std::swap(a, b);
        if (std::pair{b, a} > std::pair{best_img.second, best_img.first}) {
            best = {u, v};
            best_img = {a, b};
        }
    }
    return best;
}

/// h minus its canonical edge, with isolated vertices dropped.
Graph canonical_parent(const Graph& h, const std::vector<int>& labeling) {
    auto [u, v] = canonical_edge(h, labeling);
    Graph stripped = h;
    stripped.remove_edge(u, v);
    std::vector<int> keep;
    keep.reserve(stripped.vertex_count());
    for (int w = 0; w < stripped.vertex_count(); ++w)
        if (stripped.degree(w) > 0) keep.push_back(w);
    return induced_subgraph(stripped, keep);
}

struct TreeWalker {
    const SearchSpec& spec;
    int vertex_cap;
    // Visits a node; returns false to abort the walk (budget exhausted).
    std::function<bool(const Graph&, const std::string& cert, std::int64_t level)> visit;

    bool admissible_child(const Graph& h, std::int64_t level) const {
        if (spec.connected_only) {
            std::int64_t comps = static_cast<std::int64_t>(h.connected_components().size());
            if (comps - 1 > spec.m - level) return false;
        }
        if (spec.clique_number_cap &&
            count_cliques(h, *spec.clique_number_cap + 1) > 0)
            return false;
        return true;
    }

    /// Expands g (a class representative at `level` edges with certificate
    /// `cert`) one level; calls `child` on each accepted class.
    void expand(const Graph& g, const std::string& cert, std::int64_t level,
                const std::function<bool(Graph&&, const std::string&, const CanonicalForm&)>& child) const {
        int n = g.vertex_count();
        std::set<std::string> seen;
        auto consider = [&](Graph&& h) -> bool {
            if (!admissible_child(h, level + 1)) return true;
            CanonicalForm cf = canonical_form(h);
            if (!seen.insert(cf.certificate).second) return true;
            if (canonical_graph6(canonical_parent(h, cf.labeling)) != cert) return true;
            return child(std::move(h), cf.certificate, cf);
        };

        for (int u = 0; u < n; ++u) {
            if (g.degree(u) >= spec.r) continue;
            for (int v = u + 1; v < n; ++v) {
                if (g.degree(v) >= spec.r || g.has_edge(u, v)) continue;
                Graph h = g;
                h.add_edge(u, v);
                if (!consider(std::move(h))) return;
            }
        }
        if (n + 1 <= vertex_cap) {
            for (int u = 0; u < n; ++u) {
                if (g.degree(u) >= spec.r) continue;
                Graph h = with_extra_vertices(g, 1);
                h.add_edge(u, n);
                if (!consider(std::move(h))) return;
            }
        }
        if (n + 2 <= vertex_cap) {
            Graph h = with_extra_vertices(g, 2);
            h.add_edge(n, n + 1);
            consider(std::move(h));
        }
    }

    /// Depth-first walk of the subtree rooted at g. Returns false on abort.
    bool walk(const Graph& g, const std::string& cert, std::int64_t level) const {
        if (!visit(g, cert, level)) return false;
        if (level == spec.m) return true;
        bool keep_going = true;
        expand(g, cert, level, [&](Graph&& h, const std::string& hcert, const CanonicalForm&) {
            keep_going = walk(h, hcert, level + 1);
            return keep_going;
        });
        return keep_going;
    }
};

struct Frontier {
    std::vector<std::pair<Graph, std::string>> nodes;  // level = frontier_level
    std::int64_t level = 0;
};

/// Serial breadth-first construction of the tree up to the split depth,
/// feeding every interior node to `visit`.
Frontier build_frontier(const SearchSpec& spec, const TreeWalker& walker,
                        const std::function<bool(const Graph&, const std::string&, std::int64_t)>& visit) {
    Frontier frontier;
    if (spec.m == 0) {
        Graph empty(0);
        visit(empty, canonical_graph6(empty), 0);
        return frontier;
    }
    std::int64_t split = std::max<std::int64_t>(1, std::min<std::int64_t>(spec.split_depth, spec.m));
    Graph k2 = Graph::complete(2);
    std::string k2cert = canonical_graph6(k2);
    frontier.nodes.emplace_back(std::move(k2), k2cert);
    frontier.level = 1;
    if (!visit(frontier.nodes[0].first, frontier.nodes[0].second, 1)) return frontier;
    while (frontier.level < split) {
        std::vector<std::pair<Graph, std::string>> next;
        for (auto& [g, cert] : frontier.nodes) {
            walker.expand(g, cert, frontier.level, [&](Graph&& h, const std::string& hcert, const CanonicalForm&) {
                bool cont = visit(h, hcert, frontier.level + 1);
                next.emplace_back(std::move(h), hcert);
                return cont;
            });
        }
        frontier.nodes = std::move(next);
        ++frontier.level;
    }
    return frontier;
}

}  // namespace

std::string spec_key(const SearchSpec& spec) {
    std::ostringstream out;
    out << "m=" << spec.m << ";r=" << spec.r << ";t=" << spec.t
        << ";connected=" << (spec.connected_only ? 1 : 0) << ";omega="
        << (spec.clique_number_cap ? std::to_string(*spec.clique_number_cap) : std::string("-"))
        << ";vcap=" << (spec.vertex_cap > 0 ? spec.vertex_cap : 0)
        << ";split=" << std::max<std::int64_t>(1, std::min<std::int64_t>(spec.split_depth, spec.m));
    return out.str();
}

std::uint64_t enumerate_all_levels(const SearchSpec& spec,
                                   const std::function<void(const Graph&, std::int64_t)>& visitor) {
    std::uint64_t count = 0;
    TreeWalker walker{spec, effective_vertex_cap(spec), nullptr};
    walker.visit = [&](const Graph& g, const std::string&, std::int64_t level) {
        ++count;
        visitor(g, level);
        return true;
    };
    Frontier frontier = build_frontier(spec, walker, walker.visit);
    for (auto& [g, cert] : frontier.nodes)
        if (frontier.level < spec.m)
            walker.expand(g, cert, frontier.level, [&](Graph&& h, const std::string& hcert, const CanonicalForm&) {
                return walker.walk(h, hcert, frontier.level + 1);
            });
    return count;
}

std::uint64_t enumerate_graphs(const SearchSpec& spec, const std::function<void(const Graph&)>& visitor) {
    std::uint64_t count = 0;
    enumerate_all_levels(spec, [&](const Graph& g, std::int64_t level) {
        bool counts = level == spec.m && (!spec.connected_only || g.is_connected());
        if (counts) {
            ++count;
            visitor(g);
        }
    });
    return count;
}

namespace {

struct Accumulator {
    std::int64_t best = -1;
    std::vector<std::string> witnesses;
    std::uint64_t visited = 0;

    void offer(std::int64_t value, const std::string& cert) {
        ++visited;
        if (value > best) {
            best = value;
            witnesses.assign(1, cert);
        } else if (value == best) {
            witnesses.push_back(cert);
        }
    }

    void merge(const Accumulator& other) {
        visited += other.visited;
        if (other.best > best) {
            best = other.best;
            witnesses = other.witnesses;
        } else if (other.best == best) {
            witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
        }
    }
};

SearchResult finish_result(const SearchSpec& spec, Accumulator acc) {
    SearchResult result;
    result.f_value = std::max<std::int64_t>(acc.best, 0);
    std::sort(acc.witnesses.begin(), acc.witnesses.end());
    acc.witnesses.erase(std::unique(acc.witnesses.begin(), acc.witnesses.end()), acc.witnesses.end());
    result.extremal_graph6 = std::move(acc.witnesses);
    result.graphs_visited = acc.visited;
    result.g_value = spec.m == 0 ? 0 : g_t(spec.m, spec.r, spec.t);
    result.matches_conjecture = result.f_value == result.g_value;
    return result;
}

}  // namespace

SearchResult compute_f(const SearchSpec& spec, const SearchCheckpoint* resume) {
    TreeWalker walker{spec, effective_vertex_cap(spec), nullptr};

    Accumulator prefix;
    auto eligible = [&](const Graph& g, std::int64_t level) {
        return level == spec.m && (!spec.connected_only || g.is_connected());
    };
    auto prefix_visit = [&](const Graph& g, const std::string& cert, std::int64_t level) {
        if (eligible(g, level)) prefix.offer(count_cliques(g, spec.t), cert);
        return true;
    };
    walker.visit = prefix_visit;
    Frontier frontier = build_frontier(spec, walker, prefix_visit);

    // Merge finished subtrees from the checkpoint, keep the rest as tasks.
    std::set<std::string> done;
    if (resume != nullptr) {
        if (resume->spec != spec_key(spec))
            throw std::domain_error("compute_f: checkpoint belongs to a different search");
        for (const SubtreeOutcome& o : resume->done) {
            done.insert(o.subtree);
            Accumulator sub;
            sub.visited = o.graphs_visited;
            sub.best = o.f_value;
            sub.witnesses = o.extremal_graph6;
            if (o.graphs_visited == 0 && o.extremal_graph6.empty()) sub.best = -1;
            prefix.merge(sub);
        }
    }

    std::vector<const std::pair<Graph, std::string>*> tasks;
    for (auto& node : frontier.nodes)
        if (frontier.level < spec.m && !done.count(node.second)) tasks.push_back(&node);

    std::atomic<std::uint64_t> visited_final{prefix.visited};
    std::atomic<bool> out_of_budget{false};
    std::atomic<std::size_t> next_task{0};
    std::mutex merge_mutex;
    Accumulator total = prefix;
    std::vector<SubtreeOutcome> finished;

    auto run_worker = [&]() {
        while (true) {
            std::size_t i = next_task.fetch_add(1);
            if (i >= tasks.size() || out_of_budget.load()) return;
            const auto& [root, cert] = *tasks[i];
            Accumulator local;
            TreeWalker sub{spec, walker.vertex_cap, nullptr};
            sub.visit = [&](const Graph& g, const std::string& c, std::int64_t level) {
                if (eligible(g, level)) {
                    local.offer(count_cliques(g, spec.t), c);
                    std::uint64_t seen = visited_final.fetch_add(1) + 1;
                    if (spec.budget > 0 && seen > spec.budget) {
                        out_of_budget.store(true);
                        return false;
                    }
                }
                return !out_of_budget.load();
            };
            bool completed = sub.walk(root, cert, frontier.level);
            if (completed) {
                std::lock_guard<std::mutex> lock(merge_mutex);
                total.merge(local);
                SubtreeOutcome o;
                o.subtree = cert;
                o.f_value = local.best;
                o.extremal_graph6 = local.witnesses;
                o.graphs_visited = local.visited;
                finished.push_back(std::move(o));
            }
        }
    };

    int jobs = std::max(1, spec.jobs);
    if (jobs == 1 || tasks.size() <= 1) {
        run_worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < std::min<std::size_t>(jobs, tasks.size()); ++j)
            pool.emplace_back(run_worker);
        for (auto& th : pool) th.join();
    }

    if (out_of_budget.load()) {
        SearchCheckpoint progress;
        progress.spec = spec_key(spec);
        if (resume != nullptr)
            progress.done = resume->done;
        progress.done.insert(progress.done.end(), finished.begin(), finished.end());
        std::sort(progress.done.begin(), progress.done.end(),
                  [](const SubtreeOutcome& a, const SubtreeOutcome& b) { return a.subtree < b.subtree; });
        throw BudgetExceededError(
            "compute_f: budget of " + std::to_string(spec.budget) + " classes exhausted; " +
                std::to_string(progress.done.size()) + "/" + std::to_string(frontier.nodes.size()) +
                " subtrees finished",
            finish_result(spec, total), std::move(progress));
    }
    return finish_result(spec, total);
}

std::vector<SearchResult> compute_f_grid(const SearchSpec& spec) {
    std::vector<Accumulator> levels(static_cast<std::size_t>(spec.m) + 1);
    // The empty graph is the unique class at level 0.
    levels[0].offer(0, canonical_graph6(Graph(0)));

    std::mutex merge_mutex;
    TreeWalker walker{spec, effective_vertex_cap(spec), nullptr};

    std::vector<Accumulator> prefix_levels(levels.size());
    auto prefix_visit = [&](const Graph& g, const std::string& cert, std::int64_t level) {
        if (level > 0 && (!spec.connected_only || g.is_connected()))
            prefix_levels[static_cast<std::size_t>(level)].offer(count_cliques(g, spec.t), cert);
        return true;
    };
    walker.visit = prefix_visit;
    Frontier frontier = build_frontier(spec, walker, prefix_visit);

    std::atomic<std::size_t> next_task{0};
    auto run_worker = [&]() {
        std::vector<Accumulator> local(levels.size());
        while (true) {
            std::size_t i = next_task.fetch_add(1);
            if (i >= frontier.nodes.size() || frontier.level >= spec.m) break;
            const auto& [root, cert] = frontier.nodes[i];
            TreeWalker sub{spec, walker.vertex_cap, nullptr};
            sub.visit = [&](const Graph& g, const std::string& c, std::int64_t level) {
                if (level > frontier.level && (!spec.connected_only || g.is_connected()))
                    local[static_cast<std::size_t>(level)].offer(count_cliques(g, spec.t), c);
                return true;
            };
            sub.walk(root, cert, frontier.level);
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        for (std::size_t l = 0; l < levels.size(); ++l) levels[l].merge(local[l]);
    };

    int jobs = std::max(1, spec.jobs);
    if (jobs == 1) {
        run_worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(run_worker);
        for (auto& th : pool) th.join();
    }
    for (std::size_t l = 0; l < levels.size(); ++l) levels[l].merge(prefix_levels[l]);

    std::vector<SearchResult> out;
    out.reserve(levels.size());
    for (std::size_t l = 0; l < levels.size(); ++l) {
        SearchSpec s = spec;
        s.m = static_cast<std::int64_t>(l);
        out.push_back(finish_result(s, std::move(levels[l])));
    }
    return out;
}

void write_checkpoint(std::ostream& out, const SearchCheckpoint& checkpoint) {
    nlohmann::json head{{"schema", "ktmax.checkpoint.v1"}, {"kind", "spec"}, {"spec", checkpoint.spec}};
    out << head.dump() << "\n";
    for (const SubtreeOutcome& o : checkpoint.done) {
        nlohmann::json rec{{"schema", "ktmax.checkpoint.v1"},
                           {"kind", "subtree"},
                           {"subtree", o.subtree},
                           {"f", o.f_value},
                           {"witnesses", o.extremal_graph6},
                           {"visited", o.graphs_visited}};
        out << rec.dump() << "\n";
    }
}

SearchCheckpoint read_checkpoint(std::istream& in) {
    SearchCheckpoint checkpoint;
    std::string line;
    bool have_spec = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
        if (rec.is_discarded() || rec.value("schema", "") != "ktmax.checkpoint.v1")
            throw std::runtime_error("checkpoint: unrecognized record");
        std::string kind = rec.value("kind", "");
        if (kind == "spec") {
            checkpoint.spec = rec.value("spec", "");
            have_spec = true;
        } else if (kind == "subtree") {
            SubtreeOutcome o;
            o.subtree = rec.value("subtree", "");
            o.f_value = rec.value("f", std::int64_t{-1});
            o.extremal_graph6 = rec.value("witnesses", std::vector<std::string>{});
            o.graphs_visited = rec.value("visited", std::uint64_t{0});
            checkpoint.done.push_back(std::move(o));
        }
    }
    if (!have_spec) throw std::runtime_error("checkpoint: missing spec record");
    return checkpoint;
}

BoundCheckCase verify_asymptotic_bound(const SearchSpec& spec) {
    if (spec.t < 3 || spec.t > spec.r + 1)
        throw std::domain_error("verify_asymptotic_bound: requires 3 <= t <= r+1");
    SearchResult res = compute_f(spec);
    Rational bound = asymptotic_upper_bound(spec.m, spec.r, spec.t);
    bool ok = Rational(res.f_value) <= bound;
    std::ostringstream detail;
    detail << "f_" << spec.t << "(" << spec.m << "," << spec.r << ") = " << res.f_value
           << (ok ? " <= " : " > ") << bound.numerator() << "/" << bound.denominator();
    return {spec.m, detail.str(), ok};
}

BoundCheckCase verify_rainbow_corollary(const SearchSpec& spec) {
    if (!spec.clique_number_cap)
        throw std::domain_error("verify_rainbow_corollary: clique_number_cap (omega) required");
    int omega = *spec.clique_number_cap;
    SearchResult res = compute_f(spec);
    std::int64_t rainbow = rainbow_segment_clique_count(RainbowSpec{omega, kMaxVertices},
                                                        spec.m, spec.t);
    bool ok = res.f_value <= rainbow;
    std::ostringstream detail;
    detail << "max k_" << spec.t << " over omega<=" << omega << ", m=" << spec.m << " is "
           << res.f_value << (ok ? " <= " : " > ") << rainbow << " (rainbow segment)";
    return {spec.m, detail.str(), ok};
}

}  // namespace ktmax
