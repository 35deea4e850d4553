#pragma once

// Exact Gaussian rationals Q(i) and a small dense exact linear solver.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tsv {

class DivisionByZero : public std::domain_error {
  public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

class ScalarParseError : public std::invalid_argument {
  public:
    ScalarParseError(const std::string &what, std::size_t offset)
        : std::invalid_argument(what), offset_(offset) {}
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

/// re + im*i with re, im arbitrary-precision rationals kept in lowest terms.
class Scalar {
  public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}
    Scalar(int v) : re_(v) {}
    Scalar(long num, long den);
    Scalar(mpq_class re, mpq_class im = 0);

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class &re() const { return re_; }
    const mpq_class &im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    Scalar operator-() const;
    Scalar &operator+=(const Scalar &o);
    Scalar &operator-=(const Scalar &o);
    Scalar &operator*=(const Scalar &o);
    Scalar &operator/=(const Scalar &o);

    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

    friend bool operator==(const Scalar &a, const Scalar &b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }

    Scalar conj() const { return Scalar(re_, -im_); }
    Scalar inverse() const;
    Scalar pow(std::int64_t e) const;

    /// Canonical text: "3/2", "-1", "2i", "-i", "1/2-3/4i", "0".
    std::string str() const;
    static Scalar parse(std::string_view text);

  private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream &operator<<(std::ostream &os, const Scalar &s);

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Q(i).
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    /// Appends a zero row and returns its index.
    std::size_t add_row();

    Vector apply(const Vector &v) const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

/// Exact kernel basis by reduced row echelon form. Pivots are chosen as the
/// first nonzero entry in column order; each basis vector has a 1 at its free
/// column and zeros at the other free columns.
std::vector<Vector> nullspace(const Matrix &m);

/// Rank via the same elimination.
std::size_t rank(const Matrix &m);

} // namespace tsv
