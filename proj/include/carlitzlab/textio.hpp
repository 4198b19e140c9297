#ifndef CARLITZLAB_TEXTIO_HPP
#define CARLITZLAB_TEXTIO_HPP

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "carlitzlab/poly.hpp"
#include "carlitzlab/ratfn.hpp"

namespace carlitzlab {

/// Polynomial text grammar. Terms `c*T^k` joined by `+`; coefficients are
/// integers 0..p-1 when nu = 1, or w-polynomials (parenthesized when they
/// have several terms) when nu > 1. Examples:
///   T^2+2*T+1        over F_3
///   (w+1)*T^2+w*T+1  over F_4
/// Printing is canonical: descending powers, no zero terms, zero -> "0".
inline std::string to_text(const Poly& a) {
    if (a.is_zero()) return "0";
    const auto& spec = a.spec();
    std::string out;
    for (int k = a.deg(); k >= 0; --k) {
        gf_code c = a.coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        std::string cs = spec->render(c);
        bool composite = cs.find('+') != std::string::npos;
        if (k == 0) {
            out += cs;
        } else {
            if (c != 1) {
                out += composite ? "(" + cs + ")" : cs;
                out += '*';
            }
            out += 'T';
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

inline std::string to_text(const RatFn& a) {
    if (a.den().is_one()) return to_text(a.num());
    return to_text(a.num()) + "/" + to_text(a.den());
}

namespace detail {

class PolyParser {
  public:
    PolyParser(std::string_view text, FieldSpecPtr spec) : s_(text), spec_(std::move(spec)) {}

    Poly parse() {
        Poly result = parse_term();
        skip_ws();
        while (!eof() && (peek() == '+' || peek() == '-')) {
            char op = get();
            Poly term = parse_term();
            result = (op == '+') ? result + term : result - term;
            skip_ws();
        }
        if (!eof()) fail("trailing characters");
        return result;
    }

  private:
    [[noreturn]] void fail(const std::string& why) {
        throw ParseError("bad polynomial '" + std::string(s_) + "': " + why);
    }
    bool eof() const { return i_ >= s_.size(); }
    char peek() const { return s_[i_]; }
    char get() { return s_[i_++]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++i_;
    }
    bool accept(char c) {
        skip_ws();
        if (!eof() && peek() == c) {
            ++i_;
            return true;
        }
        return false;
    }

    std::uint64_t parse_uint() {
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        std::uint64_t v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(get() - '0');
            if (v > (1ull << 40)) fail("number too large");
        }
        return v;
    }

    // w^j monomial or integer; used inside coefficients.
    gf_code parse_coef_atom() {
        skip_ws();
        if (eof()) fail("expected a coefficient");
        unsigned mult = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            mult = static_cast<unsigned>(parse_uint() % spec_->p());
            if (!accept('*')) {
                skip_ws();
                if (eof() || peek() != 'w') return mult % spec_->p();
            }
        }
        skip_ws();
        if (!eof() && peek() == 'w') {
            get();
            std::uint64_t j = 1;
            if (accept('^')) j = parse_uint();
            if (spec_->nu() == 1) fail("'w' is not available when nu = 1");
            if (j >= spec_->nu()) fail("w exponent must be < nu");
            gf_code wj = 1;
            for (std::uint64_t t = 0; t < j; ++t) wj = spec_->mul(wj, static_cast<gf_code>(spec_->p()));
            return spec_->mul(wj, mult);
        }
        return mult % spec_->p();
    }

    gf_code parse_coefficient() {
        skip_ws();
        if (!eof() && peek() == '(') {
            get();
            gf_code acc = parse_coef_atom();
            while (accept('+')) acc = spec_->add(acc, parse_coef_atom());
            if (!accept(')')) fail("expected ')'");
            return acc;
        }
        return parse_coef_atom();
    }

    Poly parse_term() {
        skip_ws();
        if (eof()) fail("expected a term");
        gf_code c = 1;
        bool saw_coef = false;
        if (peek() != 'T') {
            c = parse_coefficient();
            saw_coef = true;
        }
        skip_ws();
        bool star = false;
        if (!eof() && peek() == '*') {
            get();
            star = true;
        }
        skip_ws();
        if (!eof() && peek() == 'T') {
            get();
            std::uint64_t k = 1;
            if (accept('^')) k = parse_uint();
            if (k > 4096) fail("T exponent too large");
            return Poly::monomial(spec_, c, static_cast<std::size_t>(k));
        }
        if (star || !saw_coef) fail("expected 'T'");
        return Poly::constant(spec_, c);
    }

    std::string_view s_;
    std::size_t i_ = 0;
    FieldSpecPtr spec_;
};

}  // namespace detail

inline Poly parse_poly(std::string_view text, const FieldSpecPtr& spec) {
    return detail::PolyParser(text, spec).parse();
}

inline RatFn parse_ratfn(std::string_view text, const FieldSpecPtr& spec) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return RatFn(parse_poly(text, spec));
    return RatFn(parse_poly(text.substr(0, slash), spec),
                 parse_poly(text.substr(slash + 1), spec));
}

}  // namespace carlitzlab

#endif
