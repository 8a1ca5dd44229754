#include "dk/element.hpp"

#include <algorithm>
#include <random>

#include "dk/errors.hpp"
#include "dk/grammar.hpp"

namespace dk {

  namespace {

    // Sorts descending and cancels equal monomials in pairs.
    std::vector<ReducedMonomial> canonical(std::vector<ReducedMonomial> ms) {
      std::sort(ms.begin(), ms.end(), Succeeds{});
      std::vector<ReducedMonomial> out;
      out.reserve(ms.size());
      for (std::size_t i = 0; i < ms.size();) {
        std::size_t j = i + 1;
        while (j < ms.size() && ms[j] == ms[i]) {
          ++j;
        }
        if ((j - i) % 2 == 1) {
          out.push_back(std::move(ms[i]));
        }
        i = j;
      }
      return out;
    }

  }  // namespace

  RingElement::RingElement(std::vector<ReducedMonomial> monomials)
      : support_(canonical(std::move(monomials))) {}

  bool RingElement::contains(ReducedMonomial const& m) const {
    return std::binary_search(support_.begin(), support_.end(), m, Succeeds{});
  }

  std::size_t RingElement::max_length() const noexcept {
    std::size_t out = 0;
    for (auto const& m : support_) {
      out = std::max(out, m.length());
    }
    return out;
  }

  RingElement operator+(RingElement const& lhs, RingElement const& rhs) {
    RingElement out;
    out.support_.reserve(lhs.support_.size() + rhs.support_.size());
    std::set_symmetric_difference(lhs.support_.begin(),
                                  lhs.support_.end(),
                                  rhs.support_.begin(),
                                  rhs.support_.end(),
                                  std::back_inserter(out.support_),
                                  Succeeds{});
    return out;
  }

  RingElement operator*(RingElement const& lhs, RingElement const& rhs) {
    std::vector<ReducedMonomial> products;
    products.reserve(lhs.support_.size() * rhs.support_.size());
    for (auto const& u : lhs.support_) {
      for (auto const& v : rhs.support_) {
        products.push_back(u * v);
      }
    }
    return RingElement(std::move(products));
  }

  std::size_t RingElementHash::operator()(RingElement const& f) const noexcept {
    std::size_t h = 0;
    for (auto const& m : f.support()) {
      h = h * 31 + MonomialHash{}(m);
    }
    return h;
  }

  RingElement pow(RingElement const& e, unsigned k) {
    RingElement out = RingElement::one();
    RingElement base = e;
    while (k > 0) {
      if (k & 1u) {
        out *= base;
      }
      k >>= 1;
      if (k > 0) {
        base *= base;
      }
    }
    return out;
  }

  RingElement const& a() {
    static RingElement const e(ReducedMonomial::a_power(1));
    return e;
  }

  RingElement const& x() {
    static RingElement const e(ReducedMonomial::x_power(1));
    return e;
  }

  ReducedMonomial max_monomial(RingElement const& f) {
    if (f.is_zero()) {
      throw ZeroElementError("the zero element has no maximal monomial");
    }
    return f.support().front();
  }

  bool in_Ra(RingElement const& f) {
    return std::all_of(f.support().begin(),
                       f.support().end(),
                       [](auto const& m) { return m.ends_in_a(); });
  }

  bool has_Rx_monomial(RingElement const& f) {
    return std::any_of(f.support().begin(),
                       f.support().end(),
                       [](auto const& m) { return m.ends_in_x(); });
  }

  bool in_F2a(RingElement const& f) {
    return std::all_of(f.support().begin(),
                       f.support().end(),
                       [](auto const& m) { return m.is_a_power(); });
  }

  bool has_one(RingElement const& f) {
    // 1 has i_0 = 0 and is the smallest monomial with that property, so it
    // sits near the end; a linear scan keeps this obviously correct.
    return std::any_of(f.support().begin(),
                       f.support().end(),
                       [](auto const& m) { return m.is_one(); });
  }

  RingElement strip_a(RingElement const& f) {
    if (!in_Ra(f)) {
      throw NotInRaError(to_string(f) + " is not in Ra");
    }
    std::vector<ReducedMonomial> out;
    out.reserve(f.support().size());
    for (auto const& m : f.support()) {
      out.push_back(m.strip_a());
    }
    return RingElement(std::move(out));
  }

  RingElement kn(unsigned n) {
    return RingElement{ReducedMonomial::a_power(1),
                       ReducedMonomial(std::vector<ReducedMonomial::exponent_type>{n, n, 0})};
  }

  RingElement random_element(std::size_t   max_len,
                             std::size_t   max_support,
                             std::uint64_t seed) {
    auto const&     basis = monomials_up_to(max_len);
    std::mt19937_64 rng(seed);
    auto const      cap = std::min(max_support, basis.size());
    auto const      size
        = std::uniform_int_distribution<std::size_t>(0, cap)(rng);
    std::vector<ReducedMonomial> picked;
    picked.reserve(size);
    std::sample(basis.begin(), basis.end(), std::back_inserter(picked), size, rng);
    return RingElement(std::move(picked));
  }

  RingElement parse_element(std::string_view text) {
    auto                         words = grammar::parse_terms(text, {'a', 'x'});
    std::vector<ReducedMonomial> terms;
    terms.reserve(words.size());
    for (auto const& w : words) {
      terms.push_back(to_exponents(rewrite::normalize(w, rewrite::dk_rule())));
    }
    return RingElement(std::move(terms));
  }

  std::string to_string(RingElement const& f) {
    std::vector<std::string> terms;
    terms.reserve(f.support().size());
    for (auto const& m : f.support()) {
      terms.push_back(to_string(m));
    }
    return grammar::join_terms(terms);
  }

}  // namespace dk
