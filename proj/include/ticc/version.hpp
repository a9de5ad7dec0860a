#ifndef TICC_VERSION_HPP
#define TICC_VERSION_HPP

namespace ticc {

inline constexpr const char* kVersion = "0.1.0";

} // namespace ticc

#endif
