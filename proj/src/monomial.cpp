#include "dk/monomial.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "dk/errors.hpp"
#include "dk/grammar.hpp"

namespace dk {

  namespace {

    struct Run {
      bool                           is_a;
      ReducedMonomial::exponent_type count;
    };

    // Pushes a run onto a word held as a run stack, keeping it aax-free.
    void push_run(std::vector<Run>& stack, Run run) {
      if (run.count == 0) {
        return;
      }
      if (stack.empty()) {
        stack.push_back(run);
        return;
      }
      Run& top = stack.back();
      if (top.is_a == run.is_a) {
        top.count += run.count;
        return;
      }
      if (top.is_a && top.count >= 2) {
        auto const k = std::min(top.count - 1, run.count);
        top.count -= k;
        run.count -= k;
        if (run.count == 0) {
          return;
        }
      }
      stack.push_back(run);
    }

    void push_runs(std::vector<Run>& stack, std::span<ReducedMonomial::exponent_type const> e) {
      auto const n = e.size() - 1;
      push_run(stack, {false, e[n]});
      for (std::size_t k = n - 1; k >= 1; --k) {
        push_run(stack, {true, 1});
        push_run(stack, {false, e[k]});
      }
      push_run(stack, {true, e[0]});
    }

  }  // namespace

  ReducedMonomial::ReducedMonomial(std::vector<exponent_type> exps)
      : exps_(std::move(exps)) {
    if (exps_.size() < 2) {
      throw NotReducedError("an exponent vector needs at least two entries");
    }
    for (std::size_t k = 1; k + 1 < exps_.size(); ++k) {
      if (exps_[k] == 0) {
        throw NotReducedError("middle exponent i_" + std::to_string(k)
                              + " must be positive");
      }
    }
  }

  std::size_t ReducedMonomial::length() const noexcept {
    return std::accumulate(exps_.begin(), exps_.end(), std::size_t{0})
           + depth() - 1;
  }

  ReducedMonomial ReducedMonomial::subword(std::size_t l) const {
    if (l < 1 || l > depth()) {
      throw DepthError("subword depth " + std::to_string(l)
                       + " outside 1.." + std::to_string(depth()));
    }
    return ReducedMonomial(
        unchecked_t{},
        std::vector<exponent_type>(exps_.begin(), exps_.begin() + l + 1));
  }

  ReducedMonomial ReducedMonomial::times_a() const {
    auto e = exps_;
    ++e[0];
    return ReducedMonomial(unchecked_t{}, std::move(e));
  }

  ReducedMonomial ReducedMonomial::strip_a() const {
    if (exps_[0] == 0) {
      throw NotInRaError(to_string(*this) + " does not end in a");
    }
    auto e = exps_;
    --e[0];
    return ReducedMonomial(unchecked_t{}, std::move(e));
  }

  Order cmp(ReducedMonomial const& m1, ReducedMonomial const& m2) noexcept {
    auto const e1 = m1.exponents();
    auto const e2 = m2.exponents();
    if (e1[0] != e2[0]) {
      return e1[0] > e2[0] ? Order::less : Order::greater;
    }
    auto const d = std::min(e1.size(), e2.size());
    for (std::size_t k = 1; k < d; ++k) {
      if (e1[k] != e2[k]) {
        return e1[k] < e2[k] ? Order::less : Order::greater;
      }
    }
    if (e1.size() == e2.size()) {
      return Order::equal;
    }
    return e1.size() < e2.size() ? Order::less : Order::greater;
  }

  ReducedMonomial operator*(ReducedMonomial const& m1,
                            ReducedMonomial const& m2) {
    std::vector<Run> stack;
    stack.reserve(2 * (m1.depth() + m2.depth()) + 2);
    push_runs(stack, m1.exponents());
    push_runs(stack, m2.exponents());

    // Read the exponent vector off the run stack from the right.
    std::vector<ReducedMonomial::exponent_type> e;
    e.reserve(m1.depth() + m2.depth() + 1);
    auto take = [&stack](bool is_a) -> ReducedMonomial::exponent_type {
      if (!stack.empty() && stack.back().is_a == is_a) {
        auto c = stack.back().count;
        stack.pop_back();
        return c;
      }
      return 0;
    };
    e.push_back(take(true));
    e.push_back(take(false));
    while (!stack.empty()) {
      // Every a-run left of the trailing one is a single separator.
      stack.pop_back();
      e.push_back(take(false));
    }
    return ReducedMonomial(ReducedMonomial::unchecked_t{}, std::move(e));
  }

  ReducedMonomial to_exponents(std::string_view w) {
    for (char c : w) {
      if (c != 'a' && c != 'x') {
        throw AlphabetError(std::string("letter '") + c
                            + "' is not in {a, x}");
      }
    }
    std::vector<ReducedMonomial::exponent_type> e;
    auto pos = w.size();
    auto run = [&](char letter) {
      ReducedMonomial::exponent_type c = 0;
      while (pos > 0 && w[pos - 1] == letter) {
        --pos;
        ++c;
      }
      return c;
    };
    e.push_back(run('a'));
    e.push_back(run('x'));
    while (pos > 0) {
      --pos;  // separator a
      auto c = run('x');
      if (c == 0 && pos > 0) {
        throw NotReducedError("word '" + std::string(w)
                              + "' contains the factor aax");
      }
      e.push_back(c);
    }
    return ReducedMonomial(ReducedMonomial::unchecked_t{}, std::move(e));
  }

  std::string from_exponents(ReducedMonomial const& m) {
    auto const  e = m.exponents();
    auto const  n = m.depth();
    std::string w;
    w.reserve(m.length());
    w.append(e[n], 'x');
    for (std::size_t k = n - 1; k >= 1; --k) {
      w.push_back('a');
      w.append(e[k], 'x');
    }
    w.append(e[0], 'a');
    return w;
  }

  std::string to_string(ReducedMonomial const& m) {
    return grammar::format_word(from_exponents(m));
  }

  std::vector<ReducedMonomial> const& monomials_up_to(std::size_t max_len) {
    static std::mutex mutex;
    static std::map<std::size_t, std::unique_ptr<std::vector<ReducedMonomial>>>
                                cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto&                       slot = cache[max_len];
    if (!slot) {
      std::vector<std::string> words{std::string{}};
      for (std::size_t begin = 0, len = 1; len <= max_len; ++len) {
        auto const end = words.size();
        for (auto i = begin; i < end; ++i) {
          auto const w = words[i];
          words.push_back(w + 'a');
          if (!w.ends_with("aa")) {
            words.push_back(w + 'x');
          }
        }
        begin = end;
      }
      auto out = std::make_unique<std::vector<ReducedMonomial>>();
      out->reserve(words.size());
      for (auto const& w : words) {
        out->push_back(to_exponents(w));
      }
      std::sort(out->begin(), out->end(), Precedes{});
      slot = std::move(out);
    }
    return *slot;
  }

  std::int64_t grade(ReducedMonomial const& m) noexcept {
    auto const   e      = m.exponents();
    std::int64_t a_runs = static_cast<std::int64_t>(e[0]) + static_cast<std::int64_t>(e.size()) - 2;
    std::int64_t xs     = 0;
    for (std::size_t k = 1; k < e.size(); ++k) {
      xs += e[k];
    }
    return a_runs - xs;
  }

  std::size_t MonomialHash::operator()(ReducedMonomial const& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : m.exponents()) {
      h = (h ^ v) * 1099511628211ull;
    }
    return h;
  }

}  // namespace dk
