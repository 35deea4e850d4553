#pragma once

#include "tsv/algebra.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsv {

/// A linear map given extensionally: one image for every generator of a
/// window. Images themselves are exact elements and may leave the window.
class WindowMap {
  public:
    using Images = std::map<BasisVector, Element>;

    /// Throws std::invalid_argument unless every window generator has an
    /// image and no image is listed for a basis vector outside the window.
    WindowMap(Window window, Images images);

    static WindowMap tabulate(Window window, const std::function<Element(const BasisVector &)> &f);

    const Window &window() const { return window_; }
    const Images &images() const { return images_; }

    const Element &image(const BasisVector &b) const;

    /// Linear extension; x must lie inside the window.
    Element apply(const Element &x) const;

  private:
    Window window_;
    Images images_;
};

/// A basis pair (x, y) on which a structural identity fails, with the
/// nonzero difference of its two sides.
struct Violation {
    BasisVector x;
    BasisVector y;
    Element residual;
};

std::string to_string(const Violation &v);

} // namespace tsv
