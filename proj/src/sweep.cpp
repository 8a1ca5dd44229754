#include "dk/sweep.hpp"

namespace dk {

  std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
    std::uint64_t z = base + (index + 1) * 0x9e3779b97f4a7c15ull;
    z               = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z               = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t derive_seed(std::uint64_t base, std::string_view label) noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : label) {
      h = (h ^ ch) * 1099511628211ull;
    }
    return derive_seed(base, h);
  }

}  // namespace dk
