#ifndef SPLITDYN_ERRORS_HPP
#define SPLITDYN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace splitdyn {

struct InvalidVertex : std::invalid_argument {
    explicit InvalidVertex(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidSize : std::invalid_argument {
    explicit InvalidSize(const std::string& what) : std::invalid_argument(what) {}
};

struct SizeMismatch : std::invalid_argument {
    explicit SizeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Query made for a vertex on the wrong side of the partition.
struct WrongSide : std::logic_error {
    explicit WrongSide(const std::string& what) : std::logic_error(what) {}
};

// No layer produced enough verified vertices after an oversized
// neighborhood was detected. Surfaced, never silently degraded.
struct SamplingFailed : std::runtime_error {
    explicit SamplingFailed(const std::string& what) : std::runtime_error(what) {}
};

// Brute-force reference asked to run above its enumeration cap.
struct TooLarge : std::invalid_argument {
    explicit TooLarge(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace splitdyn

#endif
