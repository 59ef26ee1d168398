#ifndef KCOVER_VERSION_HPP
#define KCOVER_VERSION_HPP

namespace kcover {

inline constexpr const char* version_string = "0.1.0";

}  // namespace kcover

#endif
