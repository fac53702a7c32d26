#pragma once

#include <stdexcept>
#include <string>

namespace motdens {

// Base class for every domain error raised by this library. Command-line code maps
// subclasses onto exit codes; library code never prints, it only throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace motdens
