#include "obstra/rational.hpp"

#include "obstra/error.hpp"

namespace obstra {

Rat Rat::parse(const std::string& text) {
    if (text.empty()) fail(ErrorKind::parse, "empty scalar");
    std::string num = text, den = "1";
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!is_int(num) || !is_int(den)) fail(ErrorKind::parse, "bad scalar '" + text + "'");
    mpz_class n(num), d(den);
    if (d == 0) fail(ErrorKind::parse, "zero denominator in '" + text + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rat(q);
}

std::string Rat::str() const {
    return v.get_str();
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.sign() == 0) fail(ErrorKind::invariant, "division by zero");
    return Rat(mpq_class(a.v / b.v));
}

Rat rat_floor(const Rat& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    return Rat(q);
}

} // namespace obstra
