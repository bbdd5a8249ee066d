#pragma once

namespace ssk3 {

inline constexpr const char* kVersion = "1.0.0";

// All randomness in the toolkit flows through std::mt19937_64 (the C++
// standard 64-bit Mersenne twister, whose output sequence is pinned by the
// standard) plus rejection sampling, so seeded runs reproduce bit-for-bit
// across platforms and standard libraries.
inline constexpr const char* kPrngName = "mt19937_64";
inline constexpr const char* kPrngVersion = "ISO C++11 std::mersenne_twister_engine<uint64_t,64,312,...>";

}  // namespace ssk3
