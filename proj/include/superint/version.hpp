#ifndef SUPERINT_VERSION_HPP
#define SUPERINT_VERSION_HPP

namespace superint {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace superint

#endif
