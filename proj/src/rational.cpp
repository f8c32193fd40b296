#include "artifact/rational.hpp"

#include <cctype>

namespace artifact {

std::optional<Rat> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    Int n(num), d(den);
    if (d == 0) return std::nullopt;
    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

int sign_surd1(const Rat& a, const Rat& b, const Rat& d) {
    int sa = sgn(a), sb = sgn(b);
    if (d == 0 || sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // a and b*sqrt(d) have opposite signs: compare a^2 vs b^2*d.
    Rat lhs = a * a, rhs = b * b * d;
    int c = cmp(lhs, rhs);
    return c == 0 ? 0 : (c > 0 ? sa : sb);
}

int sign_surd2(const Surd2& v) {
    // v = (a + b*sqrt(d1)) + sqrt(d2) * (c + e*sqrt(d1)) = X + sqrt(d2)*Y
    // with X, Y in Q(sqrt(d1)).
    int sx = sign_surd1(v.a, v.b, v.d1);
    int sy = sign_surd1(v.c, v.e, v.d1);
    if (v.d2 == 0 || sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    // Compare X^2 vs d2 * Y^2 inside Q(sqrt(d1)).
    // X^2 = a^2 + b^2 d1 + 2ab sqrt(d1); Y^2 = c^2 + e^2 d1 + 2ce sqrt(d1).
    Rat p = v.a * v.a + v.b * v.b * v.d1, q = 2 * v.a * v.b;
    Rat r = v.d2 * (v.c * v.c + v.e * v.e * v.d1), t = v.d2 * 2 * v.c * v.e;
    int c = sign_surd1(p - r, q - t, v.d1);
    return c == 0 ? 0 : (c > 0 ? sx : sy);
}

}  // namespace artifact
