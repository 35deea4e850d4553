#include "tsv/expression.hpp"

#include <cctype>
#include <charconv>
#include <ostream>

namespace tsv {

namespace {

std::string describe(std::size_t offset, const std::vector<std::string> &expected,
                     const std::string &detail) {
    std::string msg = "syntax error at offset " + std::to_string(offset);
    if (!detail.empty())
        msg += ": " + detail;
    if (!expected.empty()) {
        msg += detail.empty() ? ": expected " : "; expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i)
                msg += i + 1 == expected.size() ? " or " : ", ";
            msg += expected[i];
        }
    }
    return msg;
}

class Parser {
  public:
    explicit Parser(std::string_view src) : src_(src) {}

    Element element() {
        Element out;
        skip();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        term(out, neg);
        for (;;) {
            skip();
            if (at_end())
                break;
            char c = peek();
            if (c != '+' && c != '-')
                fail({"'+'", "'-'", "end of input"});
            ++pos_;
            term(out, c == '-');
        }
        return out;
    }

    BasisVector basis_only() {
        skip();
        BasisVector b = basis();
        skip();
        if (!at_end())
            fail({"end of input"});
        return b;
    }

  private:
    std::string_view src_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return at_end() ? '\0' : src_[pos_]; }

    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(std::vector<std::string> expected, const std::string &detail = "") const {
        throw SyntaxError(pos_, std::move(expected), detail);
    }

    static bool starts_basis(char c) { return c == 'L' || c == 'Y' || c == 'M' || c == 'C'; }

    void term(Element &out, bool neg) {
        skip();
        char c = peek();
        if (starts_basis(c)) {
            out.add(basis(), Scalar(neg ? -1 : 1));
            return;
        }
        if (c != '(' && c != 'i' && !std::isdigit(static_cast<unsigned char>(c)))
            fail({"basis vector", "scalar"});
        Scalar s = scalar();
        if (neg)
            s = -s;
        skip();
        if (peek() == '*') {
            ++pos_;
            skip();
            out.add(basis(), s);
            return;
        }
        if (!s.is_zero())
            fail({"'*'"}, "a bare scalar term must be 0");
    }

    Scalar scalar() {
        if (peek() == '(') {
            std::size_t open = pos_;
            std::size_t close = src_.find(')', open);
            if (close == std::string_view::npos) {
                pos_ = src_.size();
                fail({"')'"});
            }
            try {
                Scalar s = Scalar::parse(src_.substr(open + 1, close - open - 1));
                pos_ = close + 1;
                return s;
            } catch (const ScalarParseError &e) {
                pos_ = open + 1 + e.offset();
                fail({}, std::string("bad scalar: ") + e.what());
            }
        }
        // Unsigned magnitude: digits ['/' digits] ['i'] | 'i'.
        std::size_t start = pos_;
        if (peek() == 'i') {
            ++pos_;
            return Scalar::i();
        }
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        skip();
        if (peek() == '/') {
            ++pos_;
            skip();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail({"digit"});
            while (std::isdigit(static_cast<unsigned char>(peek())))
                ++pos_;
            skip();
        }
        if (peek() == 'i')
            ++pos_;
        try {
            return Scalar::parse(src_.substr(start, pos_ - start));
        } catch (const ScalarParseError &e) {
            pos_ = start + e.offset();
            fail({}, std::string("bad scalar: ") + e.what());
        }
    }

    BasisVector basis() {
        char c = peek();
        if (c == 'C') {
            ++pos_;
            return C();
        }
        Kind k;
        switch (c) {
        case 'L':
            k = Kind::L;
            break;
        case 'Y':
            k = Kind::Y;
            break;
        case 'M':
            k = Kind::M;
            break;
        default:
            fail({"'L'", "'Y'", "'M'", "'C'"});
        }
        ++pos_;
        skip();
        if (peek() != '[')
            fail({"'['"});
        ++pos_;
        skip();
        std::int64_t index = integer();
        skip();
        if (peek() != ']')
            fail({"']'", "digit"});
        ++pos_;
        return {k, index};
    }

    std::int64_t integer() {
        std::size_t start = pos_;
        if (peek() == '-' || peek() == '+')
            ++pos_;
        std::size_t digits = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (pos_ == digits)
            fail({"digit"});
        std::int64_t value = 0;
        const char *first = src_.data() + (src_[start] == '+' ? start + 1 : start);
        auto [ptr, ec] = std::from_chars(first, src_.data() + pos_, value);
        if (ec != std::errc() || ptr != src_.data() + pos_) {
            pos_ = start;
            fail({}, "index out of machine range");
        }
        return value;
    }
};

std::string coefficient_prefix(const Scalar &mag) {
    if (mag.is_one())
        return "";
    if (!mag.is_real() && sgn(mag.re()) != 0)
        return "(" + mag.str() + ")*";
    return mag.str() + "*";
}

} // namespace

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string &detail)
    : std::invalid_argument(describe(offset, expected, detail)), offset_(offset),
      expected_(std::move(expected)) {}

Element parse_element(std::string_view src) { return Parser(src).element(); }

BasisVector parse_basis(std::string_view src) { return Parser(src).basis_only(); }

std::string to_string(const BasisVector &b) {
    if (b.kind == Kind::C)
        return "C";
    return std::string(1, kind_letter(b.kind)) + "[" + std::to_string(b.index) + "]";
}

std::string to_string(const Element &x) {
    if (x.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &[b, c] : x) {
        // Pull the sign out of real and purely imaginary coefficients.
        bool neg = false;
        Scalar mag = c;
        if (c.is_real() && sgn(c.re()) < 0) {
            neg = true;
            mag = -c;
        } else if (sgn(c.re()) == 0 && sgn(c.im()) < 0) {
            neg = true;
            mag = -c;
        }
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        out += coefficient_prefix(mag);
        out += to_string(b);
    }
    return out;
}

std::ostream &operator<<(std::ostream &os, const Element &x) { return os << to_string(x); }

} // namespace tsv
