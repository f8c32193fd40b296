#include "artifact/coxeter.hpp"

#include <sstream>

namespace artifact {

CoxeterWord make_cox_word(const Graph& g, const std::vector<int>& letters) {
    for (int l : letters)
        if (l < 0 || l >= g.n()) throw WordError("letter out of range");
    return CoxeterWord{&g, letters};
}

namespace {

std::vector<int> cox_pile(const Graph& g, const std::vector<int>& in) {
    std::vector<int> out;
    for (int l : in) {
        int j = static_cast<int>(out.size()) - 1;
        bool cancelled = false;
        for (; j >= 0; --j) {
            if (out[j] == l) {
                out.erase(out.begin() + j);
                cancelled = true;
                break;
            }
            if (!g.has_edge(out[j], l)) break;
        }
        if (!cancelled) out.push_back(l);
    }
    return out;
}

std::vector<int> cox_canonical(const Graph& g, std::vector<int> w) {
    std::vector<int> out;
    while (!w.empty()) {
        int best = -1;
        for (size_t i = 0; i < w.size(); ++i) {
            bool movable = true;
            for (size_t j = 0; j < i && movable; ++j)
                if (!g.has_edge(w[j], w[i])) movable = false;
            if (!movable) continue;
            if (best < 0 || w[i] < w[best]) best = static_cast<int>(i);
        }
        out.push_back(w[best]);
        w.erase(w.begin() + best);
    }
    return out;
}

}  // namespace

CoxeterWord cox_reduce(const CoxeterWord& w) {
    if (!w.graph) throw WordError("word has no graph");
    auto r = cox_pile(*w.graph, w.letters);
    r = cox_pile(*w.graph, r);
    return CoxeterWord{w.graph, cox_canonical(*w.graph, r)};
}

bool cox_equal(const CoxeterWord& u, const CoxeterWord& v) {
    if (u.graph != v.graph) {
        if (!u.graph || !v.graph || !(*u.graph == *v.graph))
            throw WordError("words over different graphs");
    }
    return cox_reduce(u).letters == cox_reduce(v).letters;
}

bool in_commutator(const CoxeterWord& w) {
    if (!w.graph) throw WordError("word has no graph");
    std::vector<int> count(w.graph->n(), 0);
    for (int l : w.letters) ++count[l];
    for (int c : count)
        if (c % 2) return false;
    return true;
}

ArtinWord cox_to_artin(const CoxeterWord& w) {
    if (!in_commutator(w)) throw WordError("word is not in the commutator subgroup");
    std::vector<int> seen(w.graph->n(), 0);
    std::vector<Letter> ls;
    for (int l : w.letters) {
        ++seen[l];
        ls.push_back({l, seen[l] % 2 ? 1 : -1});
    }
    return reduce(ArtinWord{w.graph, std::move(ls)});
}

Int commutator_index_check(const Graph& g) {
    Int idx = 1;
    for (int i = 0; i < g.n(); ++i) idx *= 2;
    return idx;
}

CoxeterWord random_commutator_element(const Graph& g, int length, std::uint64_t seed) {
    if (length < 0 || length % 2) throw WordError("length must be even and non-negative");
    if (length == 0) return CoxeterWord{&g, {}};
    Rng rng(seed);
    const int kMaxAttempts = 1 << 20;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        CoxeterWord w{&g, {}};
        // generator-count parities are invariant under shuffles and
        // cancellations, so steering them while growing the geodesic lands in
        // the commutator subgroup by construction
        std::vector<int> parity(g.n(), 0);
        int odd = 0;
        int cur = 0;
        int stall = 0;
        while (cur < length && stall < 1000) {
            int l = static_cast<int>(rng.below(g.n()));
            // keep the odd-parity count repayable within the remaining budget
            if (!parity[l] && odd + 1 > length - cur - 1) {
                ++stall;
                continue;
            }
            CoxeterWord cand{&g, w.letters};
            cand.letters.push_back(l);
            int len = static_cast<int>(cox_reduce(cand).letters.size());
            if (len > cur) {
                w = std::move(cand);
                cur = len;
                odd += parity[l] ? -1 : 1;
                parity[l] ^= 1;
                stall = 0;
            } else {
                ++stall;
            }
        }
        if (cur == length && in_commutator(w)) return cox_reduce(w);
    }
    throw WordError("failed to sample a commutator-subgroup element of the requested length");
}

std::string cox_word_to_text(const CoxeterWord& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) os << ' ';
        os << w.graph->label(w.letters[i]);
    }
    return os.str();
}

CoxeterWord cox_word_from_text(const Graph& g, const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    std::vector<int> ls;
    while (is >> tok) {
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1")
            throw WordError("signed letters not allowed in Coxeter words: " + tok);
        int v = g.index_of(tok);
        if (v < 0) throw WordError("unknown generator: " + tok);
        ls.push_back(v);
    }
    return CoxeterWord{&g, std::move(ls)};
}

}  // namespace artifact
