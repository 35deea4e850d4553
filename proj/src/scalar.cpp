#include "tsv/scalar.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace tsv {

Scalar::Scalar(long num, long den) {
    if (den == 0)
        throw DivisionByZero();
    re_ = mpq_class(num, den);
    re_.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-re_), mpq_class(-im_)); }

Scalar &Scalar::operator+=(const Scalar &o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar &Scalar::operator*=(const Scalar &o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw DivisionByZero();
    if (sgn(im_) == 0)
        return Scalar(mpq_class(1 / re_));
    mpq_class norm = re_ * re_ + im_ * im_;
    return Scalar(mpq_class(re_ / norm), mpq_class(-im_ / norm));
}

Scalar &Scalar::operator/=(const Scalar &o) { return *this *= o.inverse(); }

Scalar Scalar::pow(std::int64_t e) const {
    if (e < 0)
        return inverse().pow(-e);
    Scalar result(1);
    Scalar base = *this;
    auto n = static_cast<std::uint64_t>(e);
    while (n) {
        if (n & 1u)
            result *= base;
        n >>= 1;
        if (n)
            base *= base;
    }
    return result;
}

namespace {

std::string imag_str(const mpq_class &im) {
    if (im == 1)
        return "i";
    if (im == -1)
        return "-i";
    return im.get_str() + "i";
}

void skip_ws(std::string_view s, std::size_t &pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
        ++pos;
}

bool read_digits(std::string_view s, std::size_t &pos, std::string &out) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
    out.assign(s.substr(start, pos - start));
    return pos > start;
}

// magnitude := digits ['/' digits] ['i'] | 'i'
// Returns the value and whether it carried an 'i'.
std::pair<mpq_class, bool> read_magnitude(std::string_view s, std::size_t &pos) {
    skip_ws(s, pos);
    if (pos < s.size() && s[pos] == 'i') {
        ++pos;
        return {mpq_class(1), true};
    }
    std::string num, den;
    if (!read_digits(s, pos, num))
        throw ScalarParseError("expected digit or 'i'", pos);
    mpq_class value(num);
    std::size_t save = pos;
    skip_ws(s, pos);
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        skip_ws(s, pos);
        std::size_t den_at = pos;
        if (!read_digits(s, pos, den))
            throw ScalarParseError("expected digit after '/'", pos);
        mpz_class d(den);
        if (d == 0)
            throw ScalarParseError("zero denominator", den_at);
        value = mpq_class(mpz_class(num), d);
        value.canonicalize();
        save = pos;
        skip_ws(s, pos);
    }
    if (pos < s.size() && s[pos] == 'i') {
        ++pos;
        return {value, true};
    }
    pos = save;
    return {value, false};
}

} // namespace

std::string Scalar::str() const {
    if (sgn(im_) == 0)
        return re_.get_str();
    if (sgn(re_) == 0)
        return imag_str(im_);
    std::string out = re_.get_str();
    out += sgn(im_) > 0 ? "+" : "-";
    out += imag_str(mpq_class(abs(im_)));
    return out;
}

Scalar Scalar::parse(std::string_view text) {
    std::size_t pos = 0;
    skip_ws(text, pos);
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        neg = text[pos] == '-';
        ++pos;
    }
    auto [first, first_imag] = read_magnitude(text, pos);
    if (neg)
        first = -first;
    Scalar result = first_imag ? Scalar(mpq_class(0), first) : Scalar(first);
    skip_ws(text, pos);
    if (!first_imag && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        bool neg2 = text[pos] == '-';
        ++pos;
        std::size_t at = pos;
        auto [second, second_imag] = read_magnitude(text, pos);
        if (!second_imag)
            throw ScalarParseError("expected imaginary part ending in 'i'", at);
        result = Scalar(result.re(), mpq_class(neg2 ? -second : second));
        skip_ws(text, pos);
    }
    if (pos != text.size())
        throw ScalarParseError("unexpected trailing input", pos);
    return result;
}

std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.str(); }

std::size_t Matrix::add_row() {
    entries_.resize(entries_.size() + cols_);
    return rows_++;
}

Vector Matrix::apply(const Vector &v) const {
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar &a = (*this)(r, c);
            if (!a.is_zero() && !v[c].is_zero())
                out[r] += a * v[c];
        }
    return out;
}

namespace {

// In-place RREF over the rows; returns the pivot column of each pivot row.
std::vector<std::size_t> reduce(std::vector<Vector> &rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
        std::size_t p = next;
        while (p < rows.size() && rows[p][c].is_zero())
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[next]);
        Vector &prow = rows[next];
        Scalar inv = prow[c].inverse();
        for (std::size_t k = c; k < cols; ++k)
            if (!prow[k].is_zero())
                prow[k] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next || rows[r][c].is_zero())
                continue;
            Scalar f = rows[r][c];
            for (std::size_t k = c; k < cols; ++k)
                if (!prow[k].is_zero())
                    rows[r][k] -= f * prow[k];
        }
        pivots.push_back(c);
        ++next;
    }
    return pivots;
}

std::vector<Vector> nonzero_rows(const Matrix &m) {
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Vector row(m.cols());
        bool any = false;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row[c] = m(r, c);
            any = any || !row[c].is_zero();
        }
        if (any)
            rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::vector<Vector> nullspace(const Matrix &m) {
    auto rows = nonzero_rows(m);
    auto pivots = reduce(rows, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v(m.cols());
        v[free] = Scalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (!rows[r][free].is_zero())
                v[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const Matrix &m) {
    auto rows = nonzero_rows(m);
    return reduce(rows, m.cols()).size();
}

} // namespace tsv
