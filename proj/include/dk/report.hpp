#pragma once

// Result record shared by every verification suite.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace dk {

  struct Failure {
    std::string   detail;
    std::uint64_t seed = 0;  // reruns the failing case
  };

  class SuiteReport {
   public:
    SuiteReport() = default;
    explicit SuiteReport(std::string suite) : suite_(std::move(suite)) {}

    void param(std::string const& name, std::string value);
    void param(std::string const& name, std::uint64_t value);
    void count(std::string const& name, std::uint64_t n = 1);
    void fail(std::string detail, std::uint64_t seed = 0);
    // Appends other's counters and failures; other's parameters are dropped.
    void merge(SuiteReport const& other);

    [[nodiscard]] std::string const& suite() const noexcept {
      return suite_;
    }
    [[nodiscard]] std::vector<std::pair<std::string, std::string>> const& params() const noexcept {
      return params_;
    }
    [[nodiscard]] std::vector<std::pair<std::string, std::uint64_t>> const& counters() const noexcept {
      return counters_;
    }
    [[nodiscard]] std::uint64_t counter(std::string const& name) const noexcept;
    [[nodiscard]] std::vector<Failure> const& failures() const noexcept {
      return failures_;
    }
    [[nodiscard]] bool passed() const noexcept {
      return failures_.empty();
    }

    // "PASS name=value ..." followed by one line per failure.
    [[nodiscard]] std::string text() const;
    [[nodiscard]] nlohmann::ordered_json json() const;

   private:
    std::string                                       suite_;
    std::vector<std::pair<std::string, std::string>>   params_;
    std::vector<std::pair<std::string, std::uint64_t>> counters_;
    std::vector<Failure>                              failures_;
  };

}  // namespace dk
