#ifndef MINT_VERSION_HPP
#define MINT_VERSION_HPP

namespace mint {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

}  // namespace mint

#endif
