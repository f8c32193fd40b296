#include "artifact/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace artifact {

namespace {
constexpr int kMaxVertices = 64;
}

Graph::Graph(std::vector<std::string> vertices) : labels_(std::move(vertices)) {
    if (static_cast<int>(labels_.size()) > kMaxVertices)
        throw GraphError("vertex limit (64) exceeded");
    for (int i = 0; i < n(); ++i) {
        if (!index_.emplace(labels_[i], i).second)
            throw GraphError("duplicate vertex label: " + labels_[i]);
    }
    adj_.assign(labels_.size(), 0);
}

int Graph::index_of(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n() || v >= n()) throw GraphError("edge endpoint out of range");
    if (u == v) throw GraphError("loops not allowed");
    adj_[u] |= (1ULL << v);
    adj_[v] |= (1ULL << u);
}

void Graph::add_edge(const std::string& u, const std::string& v) {
    int iu = index_of(u), iv = index_of(v);
    if (iu < 0) throw GraphError("unknown vertex: " + u);
    if (iv < 0) throw GraphError("unknown vertex: " + v);
    add_edge(iu, iv);
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n() || v >= n() || u == v) return false;
    return (adj_[u] >> v) & 1ULL;
}

int Graph::edge_count() const {
    int total = 0;
    for (auto row : adj_) total += std::popcount(row);
    return total / 2;
}

int Graph::degree(int v) const { return std::popcount(adj_.at(v)); }

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n(); ++u)
        for (int v = u + 1; v < n(); ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return labels_ == other.labels_ && adj_ == other.adj_;
}

Graph complement(const Graph& g) {
    Graph c(g.labels());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

// ---------------------------------------------------------------------------
// Planarity: incremental face-based embedding (per biconnected block), with an
// exhaustive forbidden-subdivision search when embedding is impossible.
// ---------------------------------------------------------------------------

namespace {

using Dart = std::pair<int, int>;

// Embed one biconnected block (vertex-induced on `verts` with edge list `edges`)
// by repeatedly routing a path of some unembedded fragment through a face that
// contains all of the fragment's attachment vertices.
// On success fills `faces` (each face = cyclic dart list). Returns false if some
// fragment has no admissible face.
bool embed_block(const std::vector<int>& verts, const std::vector<std::pair<int, int>>& edges,
                 std::vector<std::vector<Dart>>& faces) {
    const int nv = static_cast<int>(verts.size());
    if (nv < 3 || edges.size() < 3) {
        return true;  // trivial block: no cycle, handled by the caller
    }
    std::map<int, int> local;
    for (int i = 0; i < nv; ++i) local[verts[i]] = i;
    std::vector<std::vector<int>> adj(nv);
    std::vector<std::vector<char>> has(nv, std::vector<char>(nv, 0));
    for (auto [u, v] : edges) {
        int a = local[u], b = local[v];
        adj[a].push_back(b);
        adj[b].push_back(a);
        has[a][b] = has[b][a] = 1;
    }
    // Find an initial cycle by walking until a repeat.
    std::vector<int> walk{0};
    std::vector<int> where(nv, -1);
    where[0] = 0;
    int cur = 0, prev = -1;
    std::vector<int> cycle;
    while (true) {
        int nxt = -1;
        for (int w : adj[cur])
            if (w != prev) { nxt = w; break; }
        if (nxt < 0) return true;  // no cycle: tree-like, caller handles
        if (where[nxt] >= 0) {
            for (size_t i = where[nxt]; i < walk.size(); ++i) cycle.push_back(walk[i]);
            break;
        }
        where[nxt] = static_cast<int>(walk.size());
        walk.push_back(nxt);
        prev = cur;
        cur = nxt;
    }

    std::vector<std::vector<char>> embedded_edge(nv, std::vector<char>(nv, 0));
    std::vector<char> embedded_vertex(nv, 0);
    std::vector<std::vector<int>> face_list;  // faces as vertex walks (local ids)
    for (int v : cycle) embedded_vertex[v] = 1;
    for (size_t i = 0; i < cycle.size(); ++i) {
        int a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        embedded_edge[a][b] = embedded_edge[b][a] = 1;
    }
    face_list.push_back(cycle);
    face_list.push_back(std::vector<int>(cycle.rbegin(), cycle.rend()));

    auto all_embedded = [&] {
        for (auto [u, v] : edges)
            if (!embedded_edge[local[u]][local[v]]) return false;
        return true;
    };

    while (!all_embedded()) {
        // Fragments: single unembedded edges between embedded vertices, and
        // connected pieces of not-yet-embedded vertices with their attachments.
        struct Fragment {
            std::vector<int> attachments;      // embedded vertices it touches
            std::vector<int> interior;         // unembedded vertices (may be empty)
        };
        std::vector<Fragment> fragments;
        for (int a = 0; a < nv; ++a)
            for (int b : adj[a])
                if (a < b && embedded_vertex[a] && embedded_vertex[b] && !embedded_edge[a][b])
                    fragments.push_back({{a, b}, {}});
        std::vector<char> seen(nv, 0);
        for (int s = 0; s < nv; ++s) {
            if (embedded_vertex[s] || seen[s]) continue;
            Fragment f;
            std::vector<int> stack{s};
            seen[s] = 1;
            std::vector<char> att(nv, 0);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                f.interior.push_back(v);
                for (int w : adj[v]) {
                    if (embedded_vertex[w]) {
                        att[w] = 1;
                    } else if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
            for (int v = 0; v < nv; ++v)
                if (att[v]) f.attachments.push_back(v);
            fragments.push_back(std::move(f));
        }
        if (fragments.empty()) break;

        // Admissible faces per fragment.
        int best = -1;
        std::vector<std::vector<int>> admissible(fragments.size());
        for (size_t fi = 0; fi < fragments.size(); ++fi) {
            for (size_t gi = 0; gi < face_list.size(); ++gi) {
                bool ok = true;
                for (int a : fragments[fi].attachments) {
                    if (std::find(face_list[gi].begin(), face_list[gi].end(), a) ==
                        face_list[gi].end()) {
                        ok = false;
                        break;
                    }
                }
                if (ok) admissible[fi].push_back(static_cast<int>(gi));
            }
            if (admissible[fi].empty()) return false;  // non-planar
            if (best < 0 || admissible[fi].size() < admissible[best].size())
                best = static_cast<int>(fi);
        }

        // Route one path of the chosen fragment through one admissible face.
        const Fragment& frag = fragments[best];
        int face_id = admissible[best][0];
        std::vector<int> path;  // a -> ... -> b through fragment interior
        if (frag.interior.empty()) {
            path = {frag.attachments[0], frag.attachments[1]};
        } else {
            // BFS from one attachment through interior vertices to another.
            int a = frag.attachments[0];
            std::vector<int> par(nv, -2);
            std::vector<int> queue{a};
            par[a] = -1;
            int hit = -1;
            for (size_t qi = 0; qi < queue.size() && hit < 0; ++qi) {
                int v = queue[qi];
                for (int w : adj[v]) {
                    if (par[w] != -2) continue;
                    bool interior_w =
                        std::find(frag.interior.begin(), frag.interior.end(), w) !=
                        frag.interior.end();
                    bool attach_w =
                        std::find(frag.attachments.begin(), frag.attachments.end(), w) !=
                        frag.attachments.end();
                    if (v == a && !interior_w) continue;  // must leave through the fragment
                    if (interior_w) {
                        par[w] = v;
                        queue.push_back(w);
                    } else if (attach_w && w != a) {
                        par[w] = v;
                        hit = w;
                        break;
                    }
                }
            }
            if (hit < 0) return false;
            for (int v = hit; v != -1; v = par[v]) path.push_back(v);
            std::reverse(path.begin(), path.end());
        }
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            embedded_edge[path[i]][path[i + 1]] = embedded_edge[path[i + 1]][path[i]] = 1;
            embedded_vertex[path[i]] = embedded_vertex[path[i + 1]] = 1;
        }
        // Split the face along the path.
        std::vector<int> face = face_list[face_id];
        int a = path.front(), b = path.back();
        auto pos = [&](int v) {
            return static_cast<int>(std::find(face.begin(), face.end(), v) - face.begin());
        };
        int pa = pos(a), pb = pos(b);
        int fn = static_cast<int>(face.size());
        std::vector<int> f1, f2;
        for (size_t i = 0; i + 1 < path.size(); ++i) f1.push_back(path[i]);
        for (int i = pb; i != pa; i = (i + 1) % fn) f1.push_back(face[i]);
        for (int i = static_cast<int>(path.size()) - 1; i > 0; --i) f2.push_back(path[i]);
        for (int i = pa; i != pb; i = (i + 1) % fn) f2.push_back(face[i]);
        face_list[face_id] = f1;
        face_list.push_back(f2);
    }

    for (const auto& f : face_list) {
        std::vector<Dart> walk_darts;
        for (size_t i = 0; i < f.size(); ++i)
            walk_darts.emplace_back(verts[f[i]], verts[f[(i + 1) % f.size()]]);
        faces.push_back(std::move(walk_darts));
    }
    return true;
}

// Tarjan biconnected components: returns blocks as edge lists (global ids).
std::vector<std::vector<std::pair<int, int>>> biconnected_blocks(const Graph& g) {
    int n = g.n();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> stack;
    std::vector<std::vector<std::pair<int, int>>> blocks;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = timer++;
        for (int v = 0; v < n; ++v) {
            if (!g.has_edge(u, v)) continue;
            if (disc[v] < 0) {
                stack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    std::vector<std::pair<int, int>> block;
                    while (true) {
                        auto e = stack.back();
                        stack.pop_back();
                        block.push_back(e);
                        if (e == std::make_pair(u, v)) break;
                    }
                    blocks.push_back(std::move(block));
                }
            } else if (v != parent && disc[v] < disc[u]) {
                stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    };
    for (int s = 0; s < n; ++s)
        if (disc[s] < 0) dfs(s, -1);
    return blocks;
}

// Internally disjoint path search for subdivision witnesses.
bool find_disjoint_paths(const Graph& g, const std::vector<std::pair<int, int>>& pairs,
                         size_t idx, std::uint64_t forbidden,
                         std::vector<std::vector<int>>& out) {
    if (idx == pairs.size()) return true;
    auto [a, b] = pairs[idx];
    std::vector<int> path{a};
    std::uint64_t on_path = 0;
    std::function<bool(int)> dfs = [&](int v) -> bool {
        if (v == b) {
            out.push_back(path);
            std::uint64_t internal = on_path;
            if (find_disjoint_paths(g, pairs, idx + 1, forbidden | internal, out)) return true;
            out.pop_back();
            return false;
        }
        for (int w = 0; w < g.n(); ++w) {
            if (!g.has_edge(v, w)) continue;
            if (w == b) {
                path.push_back(w);
                if (dfs(w)) return true;
                path.pop_back();
                continue;
            }
            if ((forbidden >> w) & 1ULL) continue;
            if ((on_path >> w) & 1ULL) continue;
            on_path |= 1ULL << w;
            path.push_back(w);
            if (dfs(w)) return true;
            path.pop_back();
            on_path &= ~(1ULL << w);
        }
        return false;
    };
    return dfs(a);
}

bool search_subdivision(const Graph& g, bool k33, PlanarityResult& res) {
    int n = g.n();
    int need = k33 ? 6 : 5;
    int min_deg = k33 ? 3 : 4;
    std::vector<int> cand;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= min_deg) cand.push_back(v);
    if (static_cast<int>(cand.size()) < need) return false;
    std::vector<int> pick(need);
    std::function<bool(int, int)> choose = [&](int start, int depth) -> bool {
        if (depth == need) {
            std::uint64_t branch_mask = 0;
            for (int v : pick) branch_mask |= 1ULL << v;
            auto try_pairs = [&](const std::vector<std::pair<int, int>>& pairs) {
                std::vector<std::vector<int>> paths;
                if (find_disjoint_paths(g, pairs, 0, branch_mask, paths)) {
                    res.witness_kind = k33 ? "K33" : "K5";
                    res.branch_vertices = pick;
                    res.witness_paths = paths;
                    return true;
                }
                return false;
            };
            if (!k33) {
                std::vector<std::pair<int, int>> pairs;
                for (int i = 0; i < 5; ++i)
                    for (int j = i + 1; j < 5; ++j) pairs.emplace_back(pick[i], pick[j]);
                return try_pairs(pairs);
            }
            // all 3|3 splits with pick[0] on the left
            for (int mask = 0; mask < 32; ++mask) {
                if (std::popcount(static_cast<unsigned>(mask)) != 2) continue;
                std::vector<int> left{pick[0]}, right;
                for (int i = 1; i < 6; ++i)
                    ((mask >> (i - 1)) & 1 ? left : right).push_back(pick[i]);
                std::vector<std::pair<int, int>> pairs;
                for (int u : left)
                    for (int v : right) pairs.emplace_back(u, v);
                if (try_pairs(pairs)) return true;
            }
            return false;
        }
        for (size_t i = start; i < cand.size(); ++i) {
            pick[depth] = cand[i];
            if (choose(static_cast<int>(i + 1), depth + 1)) return true;
        }
        return false;
    };
    return choose(0, 0);
}

}  // namespace

bool verify_rotation_system(const Graph& g, const std::vector<std::vector<int>>& rotation) {
    int n = g.n();
    if (static_cast<int>(rotation.size()) != n) return false;
    for (int v = 0; v < n; ++v) {
        std::vector<int> nb;
        for (int w = 0; w < n; ++w)
            if (g.has_edge(v, w)) nb.push_back(w);
        std::vector<int> rot = rotation[v];
        std::sort(rot.begin(), rot.end());
        if (rot != nb) return false;
    }
    // Trace faces: successor of dart (u,v) is (v,w) with w following u in
    // rotation[v]. Count faces per connected component and check Euler.
    std::map<Dart, Dart> succ;
    for (int v = 0; v < n; ++v) {
        const auto& rot = rotation[v];
        for (size_t i = 0; i < rot.size(); ++i) {
            int u = rot[i], w = rot[(i + 1) % rot.size()];
            succ[{u, v}] = {v, w};
        }
    }
    std::map<Dart, char> used;
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w)
                if (g.has_edge(v, w) && comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    std::vector<int> faces(ncomp, 0), vcount(ncomp, 0), ecount(ncomp, 0);
    for (int v = 0; v < n; ++v) ++vcount[comp[v]];
    for (auto [u, v] : g.edges()) ++ecount[comp[u]];
    for (auto& [d, s] : succ) {
        if (used.count(d)) continue;
        Dart cur = d;
        int steps = 0;
        do {
            if (used.count(cur)) return false;
            used[cur] = 1;
            cur = succ.at(cur);
            if (++steps > 4 * static_cast<int>(succ.size()) + 4) return false;
        } while (cur != d);
        ++faces[comp[d.first]];
    }
    for (int c = 0; c < ncomp; ++c) {
        if (ecount[c] == 0) continue;  // isolated vertex: nothing to check
        if (vcount[c] - ecount[c] + faces[c] != 2) return false;
    }
    return true;
}

bool verify_kuratowski_witness(const Graph& g, const PlanarityResult& w) {
    size_t expect_paths = w.witness_kind == "K5" ? 10 : (w.witness_kind == "K33" ? 9 : 0);
    if (expect_paths == 0 || w.witness_paths.size() != expect_paths) return false;
    std::uint64_t branch = 0;
    for (int v : w.branch_vertices) {
        if (v < 0 || v >= g.n()) return false;
        branch |= 1ULL << v;
    }
    std::uint64_t internals = 0;
    for (const auto& p : w.witness_paths) {
        if (p.size() < 2) return false;
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (!g.has_edge(p[i], p[i + 1])) return false;
        if (!((branch >> p.front()) & 1) || !((branch >> p.back()) & 1)) return false;
        for (size_t i = 1; i + 1 < p.size(); ++i) {
            std::uint64_t bit = 1ULL << p[i];
            if ((branch & bit) || (internals & bit)) return false;
            internals |= bit;
        }
    }
    return true;
}

PlanarityResult is_planar(const Graph& g) {
    PlanarityResult res;
    int n = g.n();
    int e = g.edge_count();
    bool maybe_planar = !(n >= 3 && e > 3 * n - 6);

    if (maybe_planar) {
        // Per-block embedding; merge rotations at cut vertices.
        std::vector<std::vector<Dart>> faces;
        bool ok = true;
        std::vector<std::vector<int>> rotation(n);
        auto blocks = biconnected_blocks(g);
        std::vector<char> edge_done(n * n, 0);
        for (const auto& block : blocks) {
            std::vector<int> verts;
            for (auto [u, v] : block) {
                verts.push_back(u);
                verts.push_back(v);
            }
            std::sort(verts.begin(), verts.end());
            verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
            std::vector<std::vector<Dart>> block_faces;
            if (!embed_block(verts, block, block_faces)) {
                ok = false;
                break;
            }
            if (block_faces.empty()) {
                // bridge edge: both rotations get each other appended
                for (auto [u, v] : block) {
                    rotation[u].push_back(v);
                    rotation[v].push_back(u);
                }
            } else {
                // rotation at v: successor of dart (u,v) in a face is (v,w);
                // record w after u in rotation (contiguous per block).
                std::map<int, std::vector<std::pair<int, int>>> next_at;  // v -> (u,w)
                for (const auto& f : block_faces)
                    for (size_t i = 0; i < f.size(); ++i) {
                        auto [u, v] = f[i];
                        int w = f[(i + 1) % f.size()].second;
                        next_at[v].emplace_back(u, w);
                    }
                for (auto& [v, succs] : next_at) {
                    std::map<int, int> nxt;
                    for (auto [u, w] : succs) nxt[u] = w;
                    int start = nxt.begin()->first;
                    int cur = start;
                    std::vector<int> order;
                    do {
                        order.push_back(cur);
                        cur = nxt.at(cur);
                    } while (cur != start && order.size() <= nxt.size());
                    for (int u : order) rotation[v].push_back(u);
                }
            }
        }
        if (ok && verify_rotation_system(g, rotation)) {
            res.planar = true;
            res.rotation = std::move(rotation);
            return res;
        }
        // fall through: blocks refused (or verification failed) => non-planar
    }

    if (search_subdivision(g, /*k33=*/true, res) || search_subdivision(g, /*k33=*/false, res)) {
        res.planar = false;
        return res;
    }
    throw GraphError("planarity test failed to produce a certificate");
}

std::optional<std::vector<int>> is_isomorphic(const Graph& g, const Graph& h) {
    int n = g.n();
    if (n != h.n() || g.edge_count() != h.edge_count()) return std::nullopt;
    std::vector<int> dg(n), dh(n);
    for (int v = 0; v < n; ++v) {
        dg[v] = g.degree(v);
        dh[v] = h.degree(v);
    }
    {
        auto sg = dg, sh = dh;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) return std::nullopt;
    }
    // Map vertices of g in order of decreasing degree (rarer degrees first).
    std::map<int, int> freq;
    for (int d : dg) ++freq[d];
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (freq[dg[a]] != freq[dg[b]]) return freq[dg[a]] < freq[dg[b]];
        return dg[a] > dg[b];
    });
    std::vector<int> map_gh(n, -1);
    std::uint64_t used = 0;
    std::function<bool(int)> place = [&](int k) -> bool {
        if (k == n) return true;
        int v = order[k];
        for (int w = 0; w < n; ++w) {
            if ((used >> w) & 1ULL) continue;
            if (dh[w] != dg[v]) continue;
            bool ok = true;
            for (int j = 0; j < k && ok; ++j) {
                int v2 = order[j];
                if (g.has_edge(v, v2) != h.has_edge(w, map_gh[v2])) ok = false;
            }
            if (!ok) continue;
            map_gh[v] = w;
            used |= 1ULL << w;
            if (place(k + 1)) return true;
            used &= ~(1ULL << w);
            map_gh[v] = -1;
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    return map_gh;
}

namespace {
std::vector<std::string> default_labels(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) {
        if (n <= 26)
            out.push_back(std::string(1, static_cast<char>('a' + i)));
        else
            out.push_back("v" + std::to_string(i + 1));
    }
    return out;
}
}  // namespace

Graph builtin_graph(const std::string& name) {
    auto parse_n = [&](const std::string& prefix) -> int {
        if (name.rfind(prefix, 0) != 0) return -1;
        try {
            size_t used = 0;
            int n = std::stoi(name.substr(prefix.size()), &used);
            if (used != name.size() - prefix.size() || n < 1) return -1;
            return n;
        } catch (...) {
            return -1;
        }
    };
    if (int n = parse_n("path_"); n > 0) {
        Graph g(default_labels(n));
        for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
        return g;
    }
    if (int n = parse_n("cycle_"); n > 0) {
        if (n < 3) throw GraphError("cycle needs at least 3 vertices");
        Graph g(default_labels(n));
        for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
        return g;
    }
    if (int n = parse_n("complete_"); n > 0) {
        Graph g(default_labels(n));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
        return g;
    }
    if (name == "icosahedron") {
        // vertex 0 = top, 1..5 upper ring, 6..10 lower ring, 11 = bottom
        Graph g(default_labels(12));
        auto up = [](int i) { return 1 + (i % 5); };
        auto lo = [](int i) { return 6 + (i % 5); };
        for (int i = 0; i < 5; ++i) {
            g.add_edge(0, up(i));
            g.add_edge(11, lo(i));
            g.add_edge(up(i), up(i + 1));
            g.add_edge(lo(i), lo(i + 1));
            g.add_edge(up(i), lo(i));
            g.add_edge(up(i), lo(i + 1));
        }
        return g;
    }
    throw GraphError("unknown builtin graph: " + name);
}

std::string graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["vertices"] = g.labels();
    auto arr = nlohmann::json::array();
    for (auto [u, v] : g.edges()) arr.push_back({g.label(u), g.label(v)});
    j["edges"] = arr;
    return j.dump(2);
}

Graph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw GraphError(std::string("bad graph JSON: ") + e.what());
    }
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw GraphError("graph JSON: missing vertices array");
    Graph g(j["vertices"].get<std::vector<std::string>>());
    if (j.contains("edges")) {
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) throw GraphError("graph JSON: bad edge entry");
            std::string u = e[0].get<std::string>(), v = e[1].get<std::string>();
            if (g.has_edge(g.index_of(u), g.index_of(v)))
                throw GraphError("graph JSON: duplicate edge " + u + "-" + v);
            g.add_edge(u, v);
        }
    }
    return g;
}

}  // namespace artifact
