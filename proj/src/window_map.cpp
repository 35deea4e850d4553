#include "tsv/window_map.hpp"

#include "tsv/expression.hpp"

namespace tsv {

WindowMap::WindowMap(Window window, Images images) : window_(window), images_(std::move(images)) {
    for (const auto &[b, img] : images_)
        if (!window_.contains(b))
            throw std::invalid_argument("image listed for " + to_string(b) + " outside the window");
    for (const auto &g : window_.generators())
        if (!images_.count(g))
            throw std::invalid_argument("missing image for " + to_string(g));
}

WindowMap WindowMap::tabulate(Window window, const std::function<Element(const BasisVector &)> &f) {
    Images images;
    for (const auto &g : window.generators())
        images.emplace(g, f(g));
    return WindowMap(window, std::move(images));
}

const Element &WindowMap::image(const BasisVector &b) const {
    auto it = images_.find(b);
    if (it == images_.end())
        throw std::out_of_range(to_string(b) + " is outside the window");
    return it->second;
}

Element WindowMap::apply(const Element &x) const {
    Element out;
    for (const auto &[b, c] : x)
        out.add(image(b), c);
    return out;
}

std::string to_string(const Violation &v) {
    return "(" + to_string(v.x) + ", " + to_string(v.y) + "): residual " + to_string(v.residual);
}

} // namespace tsv
