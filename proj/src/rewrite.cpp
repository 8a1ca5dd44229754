#include "dk/rewrite.hpp"

#include <algorithm>
#include <utility>

#include "dk/errors.hpp"

namespace dk::rewrite {

  namespace {

    // Sorts and cancels equal words in pairs (F2 coefficients).
    std::vector<Word> cancel_pairs(std::vector<Word> words) {
      std::sort(words.begin(), words.end());
      std::vector<Word> out;
      out.reserve(words.size());
      for (std::size_t i = 0; i < words.size();) {
        std::size_t j = i;
        while (j < words.size() && words[j] == words[i]) {
          ++j;
        }
        if ((j - i) % 2 == 1) {
          out.push_back(std::move(words[i]));
        }
        i = j;
      }
      return out;
    }

    void push_letter(Word& out, char c, RewriteRule const& rule) {
      out.push_back(c);
      auto const& p = rule.pattern();
      if (out.size() >= p.size()
          && std::equal(p.begin(), p.end(), out.end() - p.size())) {
        out.resize(out.size() - p.size());
        for (char r : rule.replacement()) {
          push_letter(out, r, rule);
        }
      }
    }

  }  // namespace

  bool Alphabet::contains(std::string_view w) const noexcept {
    return std::all_of(
        w.begin(), w.end(), [this](char c) { return contains(c); });
  }

  RewriteRule check_rule(Alphabet alphabet, Word pattern, Word replacement) {
    if (alphabet.first == alphabet.second) {
      throw AlphabetError("alphabet letters must be distinct");
    }
    if (!alphabet.contains(pattern) || !alphabet.contains(replacement)) {
      throw AlphabetError("rule uses a letter outside the alphabet");
    }
    if (pattern.empty() || replacement.size() >= pattern.size()) {
      throw NotReducingError("rule " + pattern + " -> " + replacement
                             + " is not length-reducing");
    }
    for (std::size_t k = 1; k < pattern.size(); ++k) {
      if (pattern.compare(pattern.size() - k, k, pattern, 0, k) == 0) {
        throw OverlapError("pattern " + pattern + " overlaps itself at length "
                           + std::to_string(k));
      }
    }
    return RewriteRule(alphabet, std::move(pattern), std::move(replacement));
  }

  RewriteRule const& dk_rule() {
    static RewriteRule const rule = check_rule({'a', 'x'}, "aax", "a");
    return rule;
  }

  RewriteRule const& jacobson_rule() {
    static RewriteRule const rule = check_rule({'b', 'c'}, "bc", "");
    return rule;
  }

  Word normalize(std::string_view w, RewriteRule const& rule) {
    Word out;
    out.reserve(w.size());
    for (char c : w) {
      push_letter(out, c, rule);
    }
    return out;
  }

  std::optional<Word> rewrite_once(std::string_view   w,
                                   RewriteRule const& rule,
                                   Strategy           s) {
    auto const pos = s == Strategy::leftmost ? w.find(rule.pattern())
                                             : w.rfind(rule.pattern());
    if (pos == std::string_view::npos) {
      return std::nullopt;
    }
    Word out(w.substr(0, pos));
    out += rule.replacement();
    out += w.substr(pos + rule.pattern().size());
    return out;
  }

  Word normalize(std::string_view w, RewriteRule const& rule, Strategy s) {
    Word current(w);
    while (auto next = rewrite_once(current, rule, s)) {
      current = std::move(*next);
    }
    return current;
  }

  bool is_normal(std::string_view w, RewriteRule const& rule) {
    return w.find(rule.pattern()) == std::string_view::npos;
  }

  std::vector<Word> all_words(Alphabet alphabet, std::size_t max_len) {
    std::vector<Word> out{Word{}};
    std::size_t       begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::size_t const end = out.size();
      for (std::size_t i = begin; i < end; ++i) {
        out.push_back(out[i] + alphabet.first);
        out.push_back(out[i] + alphabet.second);
      }
      begin = end;
    }
    return out;
  }

  AlgebraElement Algebra::element(std::vector<Word> words) const {
    for (auto& w : words) {
      if (!rule_.alphabet().contains(w)) {
        throw AlphabetError("word '" + w + "' uses a letter outside the alphabet");
      }
      w = normalize(w, rule_);
    }
    return AlgebraElement{cancel_pairs(std::move(words))};
  }

  AlgebraElement Algebra::add(AlgebraElement const& lhs,
                              AlgebraElement const& rhs) const {
    AlgebraElement out;
    std::set_symmetric_difference(lhs.support.begin(),
                                  lhs.support.end(),
                                  rhs.support.begin(),
                                  rhs.support.end(),
                                  std::back_inserter(out.support));
    return out;
  }

  AlgebraElement Algebra::mul(AlgebraElement const& lhs,
                              AlgebraElement const& rhs) const {
    std::vector<Word> products;
    products.reserve(lhs.support.size() * rhs.support.size());
    for (auto const& u : lhs.support) {
      for (auto const& v : rhs.support) {
        products.push_back(normalize(u + v, rule_));
      }
    }
    return AlgebraElement{cancel_pairs(std::move(products))};
  }

  AlgebraElement Algebra::pow(AlgebraElement const& e, unsigned k) const {
    AlgebraElement out = one();
    for (unsigned i = 0; i < k; ++i) {
      out = mul(out, e);
    }
    return out;
  }

}  // namespace dk::rewrite
