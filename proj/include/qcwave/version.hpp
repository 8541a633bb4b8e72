#ifndef QCWAVE_VERSION_HPP
#define QCWAVE_VERSION_HPP

namespace qcwave {
inline constexpr const char* kVersion = "0.1.0";
}

#endif  // QCWAVE_VERSION_HPP
