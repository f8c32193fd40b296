#include "artifact/braid.hpp"

#include <numeric>
#include <sstream>

namespace artifact {

BraidWord make_braid(int m, const std::vector<std::pair<int, int>>& letters) {
    if (m < 2) throw BraidError("need at least 2 strands");
    for (auto [k, s] : letters) {
        if (k < 1 || k >= m) throw BraidError("generator index out of range");
        if (s != 1 && s != -1) throw BraidError("letter sign must be +1 or -1");
    }
    return BraidWord{m, letters};
}

BraidWord compose(const BraidWord& u, const BraidWord& v) {
    if (u.m != v.m) throw BraidError("strand count mismatch");
    BraidWord w = u;
    w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
    return w;
}

BraidWord inverse_braid(const BraidWord& w) {
    BraidWord r{w.m, {}};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back({it->first, -it->second});
    return r;
}

BraidWord free_reduce(const BraidWord& w) {
    BraidWord r{w.m, {}};
    for (auto l : w.letters) {
        if (!r.letters.empty() && r.letters.back().first == l.first &&
            r.letters.back().second == -l.second)
            r.letters.pop_back();
        else
            r.letters.push_back(l);
    }
    return r;
}

std::vector<int> braid_permutation(const BraidWord& w) {
    std::vector<int> pos(w.m);  // pos[slot] = strand currently there (0-indexed)
    std::iota(pos.begin(), pos.end(), 0);
    for (auto [k, s] : w.letters) std::swap(pos[k - 1], pos[k]);
    std::vector<int> out(w.m);
    for (int slot = 0; slot < w.m; ++slot) out[pos[slot]] = slot + 1;
    return out;
}

long long exponent_sum(const BraidWord& w) {
    long long e = 0;
    for (auto [k, s] : w.letters) e += s;
    return e;
}

LamCoords braid_act(const BraidWord& w, const LamCoords& c) {
    if (c.m != w.m) throw BraidError("strand count mismatch");
    return act(c, w.letters);
}

BraidWord full_twist_word(int m, RoundSpec r) {
    if (r.p < 1 || r.q <= r.p || r.q > m) throw BraidError("bad round interval");
    BraidWord w{m, {}};
    for (int rep = 0; rep < r.q - r.p + 1; ++rep)
        for (int k = r.p; k < r.q; ++k) w.letters.push_back({k, 1});
    return w;
}

BraidWord dehn_twist_word(const LamCoords& c, int direction, long long budget) {
    if (direction != 1 && direction != -1) throw BraidError("direction must be +1 or -1");
    RelaxResult rx = relax(c, budget);
    BraidWord conj{c.m, rx.conjugator};
    BraidWord ft = full_twist_word(c.m, rx.target);
    if (direction < 0) ft = inverse_braid(ft);
    return free_reduce(compose(compose(conj, ft), inverse_braid(conj)));
}

bool equal_braids(const BraidWord& u, const BraidWord& v) {
    if (u.m != v.m) throw BraidError("strand count mismatch");
    if (exponent_sum(u) != exponent_sum(v)) return false;
    const int m = u.m;
    if (!(braid_act(u, e_std(m)) == braid_act(v, e_std(m)))) return false;
    for (int p = 1; p < m; ++p)
        for (int q = p + 1; q <= m; ++q) {
            LamCoords r = round_coords(m, {p, q});
            if (!(braid_act(u, r) == braid_act(v, r))) return false;
        }
    return true;
}

std::string braid_to_text(const BraidWord& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) os << ' ';
        os << 's' << w.letters[i].first;
        if (w.letters[i].second < 0) os << "^-1";
    }
    return os.str();
}

BraidWord braid_from_text(int m, const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    std::vector<std::pair<int, int>> ls;
    while (is >> tok) {
        int sign = 1;
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
            sign = -1;
            tok = tok.substr(0, tok.size() - 3);
        }
        if (tok.size() < 2 || tok[0] != 's') throw BraidError("bad braid letter: " + tok);
        int k;
        try {
            size_t used = 0;
            k = std::stoi(tok.substr(1), &used);
            if (used != tok.size() - 1) throw BraidError("bad braid letter: " + tok);
        } catch (const BraidError&) {
            throw;
        } catch (...) {
            throw BraidError("bad braid letter: " + tok);
        }
        ls.push_back({k, sign});
    }
    return make_braid(m, ls);
}

}  // namespace artifact
