#ifndef CARTQ_VERSION_HPP
#define CARTQ_VERSION_HPP

namespace cartq {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace cartq

#endif  // CARTQ_VERSION_HPP
