#include "dk/jacobson.hpp"

#include <algorithm>

#include "dk/errors.hpp"
#include "dk/grammar.hpp"
#include "dk/rewrite.hpp"

namespace dk::jacobson {

  namespace {

    std::vector<JMonomial> canonical(std::vector<JMonomial> ms) {
      std::sort(ms.begin(), ms.end());
      std::vector<JMonomial> out;
      out.reserve(ms.size());
      for (std::size_t i = 0; i < ms.size();) {
        std::size_t j = i + 1;
        while (j < ms.size() && ms[j] == ms[i]) {
          ++j;
        }
        if ((j - i) % 2 == 1) {
          out.push_back(ms[i]);
        }
        i = j;
      }
      return out;
    }

  }  // namespace

  JMonomial jmul(JMonomial m1, JMonomial m2) noexcept {
    if (m1.j >= m2.i) {
      return {m1.i, m2.j + (m1.j - m2.i)};
    }
    return {m1.i + (m2.i - m1.j), m2.j};
  }

  JElement::JElement(std::vector<JMonomial> monomials)
      : support_(canonical(std::move(monomials))) {}

  JElement operator+(JElement const& lhs, JElement const& rhs) {
    JElement out;
    std::set_symmetric_difference(lhs.support_.begin(),
                                  lhs.support_.end(),
                                  rhs.support_.begin(),
                                  rhs.support_.end(),
                                  std::back_inserter(out.support_));
    return out;
  }

  JElement operator*(JElement const& lhs, JElement const& rhs) {
    std::vector<JMonomial> products;
    products.reserve(lhs.support_.size() * rhs.support_.size());
    for (auto u : lhs.support_) {
      for (auto v : rhs.support_) {
        products.push_back(jmul(u, v));
      }
    }
    return JElement(std::move(products));
  }

  JElement pow(JElement const& e, unsigned k) {
    JElement out = JElement::one();
    for (unsigned i = 0; i < k && !out.is_zero(); ++i) {
      out *= e;
    }
    return out;
  }

  JElement d_element(unsigned n) {
    if (n == 0) {
      throw DimensionError("d_n needs n >= 1");
    }
    return JElement{JMonomial{0, 1}, JMonomial{n, n + 1}};
  }

  JElement matrix_unit(unsigned i, unsigned j) {
    return JElement{JMonomial{i, j}, JMonomial{i + 1, j + 1}};
  }

  std::optional<unsigned> nilpotency_index(JElement const& e, unsigned cap) {
    JElement p = e;
    for (unsigned k = 1; k <= cap; ++k) {
      if (p.is_zero()) {
        return k;
      }
      p *= e;
    }
    return std::nullopt;
  }

  DnReport verify_dn_suite(unsigned n_max) {
    DnReport report;
    auto check = [&report](bool ok, std::string what) {
      ++report.checks;
      if (!ok) {
        report.failures.push_back(std::move(what));
      }
    };
    for (unsigned n = 1; n <= n_max; ++n) {
      auto const d     = d_element(n);
      auto const label = "n=" + std::to_string(n) + ": ";
      JElement   power = JElement::one();
      for (unsigned k = 1; k <= n + 1; ++k) {
        power *= d;
        check(power == b_power(k - 1) * d,
              label + "d^" + std::to_string(k) + " != b^" + std::to_string(k - 1) + " d");
        if (k == n) {
          check(!power.is_zero(), label + "d^n = 0");
        }
        if (k == n + 1) {
          check(power.is_zero(), label + "d^(n+1) != 0");
        }
      }
      check((b_power(n) * d).is_zero(), label + "b^n d_n != 0");
      check(!(b_power(n) * d_element(n + 1)).is_zero(), label + "b^n d_(n+1) = 0");
      check(!(b_power(n) + c_power(1) * b_power(n + 1)).is_zero(),
            label + "b^n + c b^(n+1) = 0");
      auto const correction = JElement::one() + c_power(n + 1) * b_power(n + 1);
      check(d_element(n + 1) * correction == d,
            label + "d_(n+1) (1 + c^(n+1) b^(n+1)) != d_n");
    }
    return report;
  }

  JElement parse_jelement(std::string_view text) {
    auto                   words = grammar::parse_terms(text, {'b', 'c'});
    std::vector<JMonomial> terms;
    terms.reserve(words.size());
    for (auto const& w : words) {
      auto const nf = rewrite::normalize(w, rewrite::jacobson_rule());
      auto const cs = static_cast<std::uint32_t>(nf.find_first_not_of('c') == std::string::npos
                                                     ? nf.size()
                                                     : nf.find_first_not_of('c'));
      terms.push_back({cs, static_cast<std::uint32_t>(nf.size()) - cs});
    }
    return JElement(std::move(terms));
  }

  std::string to_string(JMonomial m) {
    return grammar::format_word(std::string(m.i, 'c') + std::string(m.j, 'b'));
  }

  std::string to_string(JElement const& e) {
    std::vector<std::string> terms;
    terms.reserve(e.support().size());
    for (auto m : e.support()) {
      terms.push_back(to_string(m));
    }
    return grammar::join_terms(terms);
  }

}  // namespace dk::jacobson
