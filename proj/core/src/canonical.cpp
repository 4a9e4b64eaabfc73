#include "ktmax/canonical.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "ktmax/graph6.hpp"

namespace ktmax {

Graph relabel(const Graph& g, const std::vector<int>& labeling) {
    assert(static_cast<int>(labeling.size()) == g.vertex_count());
    Graph out(g.vertex_count());
    for (auto [u, v] : g.edges()) out.add_edge(labeling[u], labeling[v]);
    return out;
}

namespace {

using Partition = std::vector<std::vector<int>>;

class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {}

    CanonicalForm run() {
        Partition unit;
        if (n_ > 0) {
            std::vector<int> all(n_);
            for (int v = 0; v < n_; ++v) all[v] = v;
            unit.push_back(std::move(all));
        }
        recurse(unit);
        return {std::move(best_cert_), std::move(best_labeling_)};
    }

private:
    // Splits every cell by the vector of neighbor counts into all cells,
    // fragments ordered by count vector; repeats to the equitable fixpoint.
    void refine(Partition& p) const {
        bool changed = true;
        while (changed && static_cast<int>(p.size()) < n_) {
            changed = false;
            std::vector<Bitset> masks(p.size(), Bitset(n_));
            for (std::size_t i = 0; i < p.size(); ++i)
                for (int v : p[i]) masks[i].set(v);
            Partition next;
            next.reserve(p.size());
            for (auto& cell : p) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::map<std::vector<int>, std::vector<int>> groups;
                for (int v : cell) {
                    std::vector<int> sig(p.size());
                    for (std::size_t i = 0; i < p.size(); ++i)
                        sig[i] = Bitset::intersection_count(g_.neighbors(v), masks[i]);
                    groups[std::move(sig)].push_back(v);
                }
                if (groups.size() > 1) changed = true;
                for (auto& [sig, verts] : groups) next.push_back(std::move(verts));
            }
            p = std::move(next);
        }
    }

    void recurse(Partition p) {
        refine(p);
        if (static_cast<int>(p.size()) == n_) {
            handle_leaf(p);
            return;
        }
        std::size_t target = 0;
        while (target < p.size() && p[target].size() == 1) ++target;
        assert(target < p.size());

        std::vector<int> candidates = p[target];
        std::sort(candidates.begin(), candidates.end());
        std::vector<int> processed;
        for (int v : candidates) {
            if (prunable(v, processed)) continue;
            processed.push_back(v);
            Partition q;
            q.reserve(p.size() + 1);
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (i != target) {
                    q.push_back(p[i]);
                    continue;
                }
                q.push_back({v});
                std::vector<int> rest;
                rest.reserve(p[i].size() - 1);
                for (int w : p[i])
                    if (w != v) rest.push_back(w);
                q.push_back(std::move(rest));
            }
            path_.push_back(v);
            recurse(std::move(q));
            path_.pop_back();
        }
    }

    void handle_leaf(const Partition& p) {
        std::vector<int> labeling(n_);
        for (std::size_t pos = 0; pos < p.size(); ++pos) labeling[p[pos][0]] = static_cast<int>(pos);
        std::string cert = to_graph6(relabel(g_, labeling));
        if (!have_best_ || cert < best_cert_) {
            best_cert_ = std::move(cert);
            best_labeling_ = std::move(labeling);
            best_inverse_.assign(n_, 0);
            for (int v = 0; v < n_; ++v) best_inverse_[best_labeling_[v]] = v;
            have_best_ = true;
        } else if (cert == best_cert_) {
            // Two labelings onto the same canonical graph yield an automorphism.
            std::vector<int> sigma(n_);
            bool identity = true;
            for (int v = 0; v < n_; ++v) {
                sigma[v] = best_inverse_[labeling[v]];
                identity = identity && sigma[v] == v;
            }
            if (!identity) generators_.push_back(std::move(sigma));
        }
    }

    // True when some already-processed sibling is equivalent to v under the
    // subgroup generated by discovered automorphisms fixing the current path.
    bool prunable(int v, const std::vector<int>& processed) const {
        if (processed.empty() || generators_.empty()) return false;
        std::vector<const std::vector<int>*> usable;
        for (const auto& sigma : generators_) {
            bool fixes_path = true;
            for (int w : path_)
                if (sigma[w] != w) {
                    fixes_path = false;
                    break;
                }
            if (fixes_path) usable.push_back(&sigma);
        }
        if (usable.empty()) return false;
        Bitset orbit(n_);
        orbit.set(v);
        std::vector<int> queue{v};
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            for (const auto* sigma : usable) {
                int img = (*sigma)[u];
                if (!orbit.test(img)) {
                    orbit.set(img);
                    queue.push_back(img);
                }
                // Permutations of finite order: forward closure suffices for
                // the orbit of the generated group, but add the preimage walk
                // to converge faster.
                for (int w = 0; w < n_; ++w) {
                    if ((*sigma)[w] == u && !orbit.test(w)) {
                        orbit.set(w);
                        queue.push_back(w);
                    }
                }
            }
        }
        for (int u : processed)
            if (orbit.test(u)) return true;
        return false;
    }

    const Graph& g_;
    int n_;
    bool have_best_ = false;
    std::string best_cert_;
    std::vector<int> best_labeling_;
    std::vector<int> best_inverse_;
    std::vector<std::vector<int>> generators_;
    std::vector<int> path_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    if (g.vertex_count() == 0) return {to_graph6(g), {}};
    return CanonSearch(g).run();
}

std::string canonical_graph6(const Graph& g) { return canonical_form(g).certificate; }

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_graph6(a) == canonical_graph6(b);
}

}  // namespace ktmax
