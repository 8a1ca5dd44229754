#pragma once

// Index sweeps for the verification suites.  Results come back in index
// order whichever executor ran them, so reports do not depend on thread
// scheduling.  An exception thrown for some index is rethrown after the
// sweep, lowest index first.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <string_view>
#include <type_traits>
#include <vector>

#include "dk/exec.hpp"

namespace dk {

  // splitmix64 of base and index.
  std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept;
  // FNV-1a of the label folded into base.
  std::uint64_t derive_seed(std::uint64_t base, std::string_view label) noexcept;

  template <class F>
  auto sweep(std::size_t n, F const& f, Exec exec = Exec::parallel) {
    using Result = std::invoke_result_t<F const&, std::size_t>;
    std::vector<Result>             out(n);
    std::vector<std::exception_ptr> errors(n);
    auto const body = [&](std::size_t i) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    };
    auto const count = static_cast<std::ptrdiff_t>(n);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
      for (std::ptrdiff_t i = 0; i < count; ++i) {
        body(static_cast<std::size_t>(i));
      }
    } else {
      for (std::ptrdiff_t i = 0; i < count; ++i) {
        body(static_cast<std::size_t>(i));
      }
    }
    for (auto const& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
    return out;
  }

}  // namespace dk
