#ifndef MODCOLOR_ERRORS_HPP
#define MODCOLOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace modcolor {

// Bad arguments or violated preconditions (non-cover modulator, malformed
// files, out-of-range vertices, ...).
class invalid_input : public std::runtime_error {
public:
    explicit invalid_input(const std::string &what) : std::runtime_error(what) {}
};

// A configurable budget (node count, enumeration cap, subset-DP cap) ran out.
class resource_limit : public std::runtime_error {
public:
    explicit resource_limit(const std::string &what) : std::runtime_error(what) {}
};

} // namespace modcolor

#endif
