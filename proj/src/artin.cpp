#include "artifact/artin.hpp"

#include <algorithm>
#include <sstream>

namespace artifact {

ArtinWord make_word(const Graph& g, const std::vector<Letter>& letters) {
    for (const auto& l : letters) {
        if (l.gen < 0 || l.gen >= g.n()) throw WordError("letter out of range");
        if (l.sign != 1 && l.sign != -1) throw WordError("letter sign must be +1 or -1");
    }
    return ArtinWord{&g, letters};
}

namespace {

// Piling reduction: push letters left to right; a new letter cancels the
// nearest inverse it can commute back to, and is blocked by the first letter
// it neither cancels nor commutes with.
void pile_into(const Graph& g, const std::vector<Letter>& in, std::vector<Letter>& out) {
    out.clear();
    for (const auto& l : in) {
        int j = static_cast<int>(out.size()) - 1;
        bool cancelled = false;
        for (; j >= 0; --j) {
            if (out[j].gen == l.gen) {
                if (out[j].sign == -l.sign) {
                    out.erase(out.begin() + j);
                    cancelled = true;
                }
                break;
            }
            if (!g.has_edge(out[j].gen, l.gen)) break;
        }
        if (!cancelled) out.push_back(l);
    }
}

// Left-greedy canonical ordering of a geodesic word, in place: pull to each
// position the smallest letter (by generator index, then sign) that commutes
// past everything before it. A letter is movable iff every earlier generator
// in the unemitted window is distinct from and adjacent to its own, which the
// running `seen` bitmask tests in O(1) (vertex count is at most 64).
void canonical_order(const Graph& g, std::vector<Letter>& w) {
    const int n = static_cast<int>(w.size());
    const auto& adj = g.adjacency();
    for (int pos = 0; pos < n; ++pos) {
        int best = -1;
        std::uint64_t seen = 0;
        for (int i = pos; i < n; ++i) {
            int gi = w[i].gen;
            if ((seen & ~adj[gi]) == 0 && !((seen >> gi) & 1)) {
                if (best < 0 || gi < w[best].gen ||
                    (gi == w[best].gen && w[i].sign > w[best].sign))
                    best = i;
            }
            seen |= 1ULL << gi;
        }
        std::rotate(w.begin() + pos, w.begin() + best, w.begin() + best + 1);
    }
}

}  // namespace

ArtinWord reduce(const ArtinWord& w) {
    if (!w.graph) throw WordError("word has no graph");
    std::vector<Letter> r, r2;
    r.reserve(w.letters.size());
    r2.reserve(w.letters.size());
    pile_into(*w.graph, w.letters, r);
    // pile is already geodesic for right-angled Artin groups; iterate once more
    // defensively so idempotence is structural rather than assumed.
    pile_into(*w.graph, r, r2);
    canonical_order(*w.graph, r2);
    return ArtinWord{w.graph, std::move(r2)};
}

bool equal(const ArtinWord& u, const ArtinWord& v) {
    if (u.graph != v.graph) {
        if (!u.graph || !v.graph || !(*u.graph == *v.graph))
            throw WordError("words over different graphs");
    }
    return reduce(u).letters == reduce(v).letters;
}

int geodesic_length(const ArtinWord& w) { return static_cast<int>(reduce(w).letters.size()); }

int letter_count(const ArtinWord& w, int gen) {
    if (!w.graph || gen < 0 || gen >= w.graph->n()) throw WordError("unknown generator");
    int c = 0;
    for (const auto& l : reduce(w).letters)
        if (l.gen == gen) ++c;
    return c;
}

ArtinWord concat(const ArtinWord& u, const ArtinWord& v) {
    std::vector<Letter> ls = u.letters;
    ls.insert(ls.end(), v.letters.begin(), v.letters.end());
    return ArtinWord{u.graph ? u.graph : v.graph, std::move(ls)};
}

ArtinWord inverse(const ArtinWord& w) {
    std::vector<Letter> ls(w.letters.rbegin(), w.letters.rend());
    for (auto& l : ls) l.sign = -l.sign;
    return ArtinWord{w.graph, std::move(ls)};
}

ArtinWord random_geodesic(const Graph& g, int length, std::uint64_t seed) {
    if (length < 0) throw WordError("negative length");
    if (g.n() == 0 && length > 0) throw WordError("no generators");
    Rng rng(seed);
    ArtinWord w{&g, {}};
    int cur = 0;
    while (cur < length) {
        Letter l{static_cast<int>(rng.below(g.n())), rng.below(2) ? 1 : -1};
        ArtinWord cand = concat(w, ArtinWord{&g, {l}});
        int len = geodesic_length(cand);
        if (len > cur) {
            w = std::move(cand);
            cur = len;
        }
    }
    return w;
}

std::string word_to_text(const ArtinWord& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) os << ' ';
        os << w.graph->label(w.letters[i].gen);
        if (w.letters[i].sign < 0) os << "^-1";
    }
    return os.str();
}

ArtinWord word_from_text(const Graph& g, const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    std::vector<Letter> ls;
    while (is >> tok) {
        int sign = 1;
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
            sign = -1;
            tok = tok.substr(0, tok.size() - 3);
        }
        int v = g.index_of(tok);
        if (v < 0) throw WordError("unknown generator: " + tok);
        ls.push_back({v, sign});
    }
    return ArtinWord{&g, std::move(ls)};
}

}  // namespace artifact
