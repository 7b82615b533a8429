#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace texsim {

// FNV-1a 64-bit hash; stable across runs and platforms. Used for cache
// keying only, not for integrity.
uint64_t fnv1a64(const void* data, size_t n, uint64_t seed = 0xcbf29ce484222325ull);

std::string to_hex16(uint64_t value);

}  // namespace texsim
