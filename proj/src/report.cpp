#include "dk/report.hpp"

#include <algorithm>

namespace dk {

  void SuiteReport::param(std::string const& name, std::string value) {
    params_.emplace_back(name, std::move(value));
  }

  void SuiteReport::param(std::string const& name, std::uint64_t value) {
    param(name, std::to_string(value));
  }

  void SuiteReport::count(std::string const& name, std::uint64_t n) {
    auto it = std::find_if(counters_.begin(), counters_.end(), [&](auto const& c) {
      return c.first == name;
    });
    if (it == counters_.end()) {
      counters_.emplace_back(name, n);
    } else {
      it->second += n;
    }
  }

  void SuiteReport::fail(std::string detail, std::uint64_t seed) {
    failures_.push_back({std::move(detail), seed});
  }

  void SuiteReport::merge(SuiteReport const& other) {
    for (auto const& [name, n] : other.counters_) {
      count(name, n);
    }
    failures_.insert(failures_.end(), other.failures_.begin(), other.failures_.end());
  }

  std::uint64_t SuiteReport::counter(std::string const& name) const noexcept {
    for (auto const& [n, v] : counters_) {
      if (n == name) {
        return v;
      }
    }
    return 0;
  }

  std::string SuiteReport::text() const {
    std::string out = passed() ? "PASS" : "FAIL";
    for (auto const& [name, n] : counters_) {
      out += " " + name + "=" + std::to_string(n);
    }
    out += "\n";
    for (auto const& f : failures_) {
      out += "  failure seed=" + std::to_string(f.seed) + ": " + f.detail + "\n";
    }
    return out;
  }

  nlohmann::ordered_json SuiteReport::json() const {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (auto const& [name, value] : params_) {
      params[name] = value;
    }
    nlohmann::ordered_json counters = nlohmann::ordered_json::object();
    for (auto const& [name, n] : counters_) {
      counters[name] = n;
    }
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
    for (auto const& f : failures_) {
      witnesses.push_back({{"seed", f.seed}, {"detail", f.detail}});
    }
    nlohmann::ordered_json out;
    out["suite"]     = suite_;
    out["params"]    = params;
    out["verdict"]   = passed() ? "PASS" : "FAIL";
    out["counters"]  = counters;
    out["witnesses"] = witnesses;
    return out;
  }

}  // namespace dk
