#include "semicomplete/format.hpp"

namespace semicomplete {

std::string to_string(const Rational& r) { return r.str(); }

std::string to_string(const GaussianRational& g) { return g.str(); }

std::string exponent_string(long long half_steps) {
    if (half_steps == 0) return "";
    if (half_steps % 2 == 0) {
        const long long k = half_steps / 2;
        if (k == 1) return "q";
        if (k > 0) return "q^" + std::to_string(k);
        return "q^(" + std::to_string(k) + ")";
    }
    return "q^(" + std::to_string(half_steps) + "/2)";
}

namespace {

// One rendered term, sign split out so the joiner can print "a - b" for
// negative real coefficients.
struct RenderedTerm {
    bool negative;
    std::string body;
};

RenderedTerm render_term(long long e, const GaussianRational& c) {
    const std::string exp = exponent_string(e);
    if (!c.is_real()) {
        // Complex coefficients keep their own sign inside parentheses.
        std::string body = "(" + c.str() + ")";
        if (!exp.empty()) body += "*" + exp;
        return {false, body};
    }
    const Rational& re = c.re();
    const bool neg = re.sign() < 0;
    const Rational abs_re = neg ? -re : re;
    std::string body;
    if (exp.empty()) {
        body = abs_re.str();
    } else if (abs_re == Rational(1)) {
        body = exp;
    } else {
        body = abs_re.str() + "*" + exp;
    }
    return {neg, body};
}

}  // namespace

std::string to_string(const HalfQPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        RenderedTerm t = render_term(e, c);
        if (first) {
            out = (t.negative ? "-" : "") + t.body;
            first = false;
        } else {
            out += (t.negative ? " - " : " + ") + t.body;
        }
    }
    return out;
}

}  // namespace semicomplete
