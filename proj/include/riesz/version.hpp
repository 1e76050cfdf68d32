#ifndef RIESZ_VERSION_HPP
#define RIESZ_VERSION_HPP

namespace riesz {

inline constexpr const char* kToolName = "riesz-lab";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace riesz

#endif
