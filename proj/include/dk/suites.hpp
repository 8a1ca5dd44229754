#pragma once

// Named verification suites.  Each one sweeps an exhaustive or seeded
// sample space and returns a SuiteReport; the same options always produce
// the same report.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dk/exec.hpp"
#include "dk/report.hpp"

namespace dk::suites {

  // Unset fields fall back to the per-suite defaults listed in registry().
  struct SuiteOptions {
    std::uint64_t              seed = 1;
    std::optional<std::size_t> maxlen;   // exhaustive length bound
    std::optional<std::size_t> samples;  // seeded sample count
    std::optional<std::size_t> bound;    // solver length bound L
    std::optional<unsigned>    power;    // power / witness bound K
    Exec                       exec = Exec::parallel;
  };

  using SuiteFn = SuiteReport (*)(SuiteOptions const&);

  struct SuiteInfo {
    std::string_view name;
    std::string_view summary;
    SuiteFn          run;
  };

  // Every suite, in the order `verify --all` runs them.
  std::vector<SuiteInfo> const& registry();
  SuiteInfo const*              find_suite(std::string_view name);

  // Throws std::invalid_argument for an unknown name.  The suite's own seed
  // is derived from options.seed and the suite name.
  SuiteReport run_suite(std::string_view name, SuiteOptions const& options);

}  // namespace dk::suites
