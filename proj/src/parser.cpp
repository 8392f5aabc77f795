#include "apolar/parser.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "apolar/errors.hpp"

namespace apolar {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)); }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

// Single-pass recursive-descent parser over the raw text. Positions in
// errors are 1-based columns.
class PolyParser {
public:
    PolyParser(std::string_view text, const std::vector<std::string>& vars)
        : text_(text), vars_(vars) {}

    Polynomial run() {
        Polynomial f = parse_expr();
        skip_ws();
        if (!at_end()) fail("unexpected trailing input");
        return f;
    }

private:
    std::size_t nvars() const { return vars_.size(); }

    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_ + 1); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (!at_end() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Integer parse_natural() {
        skip_ws();
        if (at_end() || !is_digit(peek())) fail("expected a number");
        std::string digits;
        while (!at_end() && is_digit(peek())) digits.push_back(text_[pos_++]);
        return Integer(digits);
    }

    Polynomial parse_expr() {
        bool negate = false;
        skip_ws();
        if (accept('-'))
            negate = true;
        else
            accept('+');
        Polynomial sum = parse_term();
        if (negate) sum = -sum;
        for (;;) {
            if (accept('+'))
                sum = sum + parse_term();
            else if (accept('-'))
                sum = sum - parse_term();
            else
                break;
        }
        return sum;
    }

    Polynomial parse_term() {
        Polynomial prod = parse_factor();
        while (accept('*')) prod = prod * parse_factor();
        return prod;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_atom();
        if (accept('^')) {
            skip_ws();
            if (!at_end() && peek() == '-') fail("exponent must be a nonnegative integer");
            Integer e = parse_natural();
            if (e > 64) fail("exponent too large");
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    Polynomial parse_atom() {
        skip_ws();
        if (at_end()) fail("expected a rational, variable, or '('");
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = parse_expr();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (is_digit(c)) {
            Integer num = parse_natural();
            if (accept('/')) {
                std::size_t den_pos = pos_;
                Integer den = parse_natural();
                if (den.is_zero()) {
                    pos_ = den_pos;
                    fail("zero denominator");
                }
                return Polynomial::constant(nvars(), make_rational(num, den));
            }
            return Polynomial::constant(nvars(), Rational(num));
        }
        if (is_ident_start(c)) {
            std::size_t start = pos_;
            std::string name;
            while (!at_end() && is_ident_char(peek())) name.push_back(text_[pos_++]);
            for (std::size_t j = 0; j < vars_.size(); ++j)
                if (vars_[j] == name) return Polynomial::variable(nvars(), j);
            throw UnknownVariable(name, start + 1);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

// One term as "coef*mon" with the unit coefficient and trivial
// exponents elided; sign handled by the caller.
std::string format_term(const MultiIndex& alpha, const Rational& abs_coef,
                        const std::vector<std::string>& vars) {
    std::ostringstream os;
    bool have_factor = false;
    if (abs_coef != Rational(1) || alpha.order() == 0) {
        os << format_rational(abs_coef);
        have_factor = true;
    }
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        if (alpha[j] == 0) continue;
        if (have_factor) os << "*";
        os << vars[j];
        if (alpha[j] > 1) os << "^" << alpha[j];
        have_factor = true;
    }
    return os.str();
}

}  // namespace

std::string format_rational(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    skip_ws();
    bool negate = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negate = text[pos] == '-';
        ++pos;
    }
    auto digits = [&]() -> Integer {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && is_digit(text[pos])) ++pos;
        if (pos == start) throw SyntaxError("expected digits in rational", pos + 1);
        return Integer(std::string(text.substr(start, pos - start)));
    };
    Integer num = digits();
    Integer den(1);
    skip_ws();
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = digits();
        if (den.is_zero()) throw SyntaxError("zero denominator in rational", pos);
    }
    skip_ws();
    if (pos != text.size()) throw SyntaxError("trailing input after rational", pos + 1);
    if (negate) num = -num;
    return make_rational(num, den);
}

std::string format_point(const Point& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ", ";
        os << p[i];
    }
    os << ")";
    return os.str();
}

Point parse_point(std::string_view text) {
    Point p;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        std::string_view coord =
            comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
        p.push_back(parse_rational(coord));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return p;
}

void validate_var_names(const std::vector<std::string>& vars) {
    if (vars.empty()) throw SyntaxError("variable list is empty", 1);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const std::string& v = vars[i];
        bool ok = !v.empty() && is_ident_start(v[0]);
        for (std::size_t k = 1; ok && k < v.size(); ++k) ok = is_ident_char(v[k]);
        if (!ok) throw SyntaxError("invalid variable name '" + v + "'", 1);
        for (std::size_t k = 0; k < i; ++k)
            if (vars[k] == v) throw SyntaxError("duplicate variable name '" + v + "'", 1);
    }
}

std::vector<std::string> dual_var_names(std::size_t nvars) {
    std::vector<std::string> names;
    names.reserve(nvars);
    for (std::size_t j = 1; j <= nvars; ++j) names.push_back("l" + std::to_string(j));
    return names;
}

Polynomial parse_poly(std::string_view text, const std::vector<std::string>& vars) {
    validate_var_names(vars);
    return PolyParser(text, vars).run();
}

std::string format_poly(const Polynomial& f, const std::vector<std::string>& vars) {
    if (vars.size() != f.nvars())
        throw ArityMismatch("formatting a polynomial in " + std::to_string(f.nvars()) +
                            " variables with " + std::to_string(vars.size()) + " names");
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [alpha, c] : f.terms()) {
        bool negative = c < 0;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        os << format_term(alpha, negative ? Rational(-c) : c, vars);
    }
    return os.str();
}

}  // namespace apolar
