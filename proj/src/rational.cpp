#include "tubings/rational.hpp"

#include <stdexcept>

namespace tubings {

std::string to_string(const Rat& r) {
    return r.get_str();
}

std::string to_string(const Int& z) {
    return z.get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

} // namespace tubings
