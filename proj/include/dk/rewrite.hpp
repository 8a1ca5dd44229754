#pragma once

// Single-rule, length-reducing string rewriting over a two-letter alphabet,
// together with the F2-algebra whose basis is the set of normal forms.
//
// Both presentations handled by this project are of this kind:
//   R = F2<a,x : a = a^2 x>   realised as  aax -> a
//   J = F2<b,c : bc = 1>      realised as  bc  -> (empty word)
// A rule whose pattern has no self-overlap has no critical pairs, so the
// system is confluent and normal forms are unique.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dk::rewrite {

  // The empty word denotes 1.
  using Word = std::string;

  struct Alphabet {
    char first;
    char second;

    [[nodiscard]] bool contains(char c) const noexcept {
      return c == first || c == second;
    }
    [[nodiscard]] bool contains(std::string_view w) const noexcept;
  };

  class RewriteRule {
   public:
    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return alphabet_;
    }
    [[nodiscard]] Word const& pattern() const noexcept {
      return pattern_;
    }
    [[nodiscard]] Word const& replacement() const noexcept {
      return replacement_;
    }

   private:
    friend RewriteRule check_rule(Alphabet, Word, Word);
    RewriteRule(Alphabet alphabet, Word pattern, Word replacement)
        : alphabet_(alphabet),
          pattern_(std::move(pattern)),
          replacement_(std::move(replacement)) {}

    Alphabet alphabet_;
    Word     pattern_;
    Word     replacement_;
  };

  // Validates and builds a rule.  Throws NotReducingError unless the
  // replacement is strictly shorter than a nonempty pattern, OverlapError if
  // some proper nonempty suffix of the pattern is also a prefix of it, and
  // AlphabetError for letters outside the alphabet.
  RewriteRule check_rule(Alphabet alphabet, Word pattern, Word replacement);

  // aax -> a over {a,x}.
  RewriteRule const& dk_rule();
  // bc -> 1 over {b,c}.
  RewriteRule const& jacobson_rule();

  enum class Strategy { leftmost, rightmost };

  // Normal form via a single left-to-right pass with an output stack; this
  // is the leftmost-innermost strategy.
  Word normalize(std::string_view w, RewriteRule const& rule);

  // Step-by-step reduction that rewrites the leftmost (or rightmost)
  // occurrence until none remains.  Slow; kept as the reference for the
  // confluence checks.
  Word normalize(std::string_view w, RewriteRule const& rule, Strategy s);

  // One rewrite step, or nullopt if w is already in normal form.
  std::optional<Word> rewrite_once(std::string_view   w,
                                   RewriteRule const& rule,
                                   Strategy           s);

  [[nodiscard]] bool is_normal(std::string_view w, RewriteRule const& rule);

  // All words of length <= max_len over the rule's alphabet, in shortlex
  // order (first letter < second letter).
  std::vector<Word> all_words(Alphabet alphabet, std::size_t max_len);

  // Element of the algebra presented by one rule with F2 coefficients: the
  // support is a sorted, duplicate-free list of normal forms.
  struct AlgebraElement {
    std::vector<Word> support;

    [[nodiscard]] bool is_zero() const noexcept {
      return support.empty();
    }
    friend bool operator==(AlgebraElement const&,
                           AlgebraElement const&) = default;
  };

  class Algebra {
   public:
    explicit Algebra(RewriteRule rule) : rule_(std::move(rule)) {}

    [[nodiscard]] RewriteRule const& rule() const noexcept {
      return rule_;
    }

    [[nodiscard]] AlgebraElement zero() const {
      return {};
    }
    [[nodiscard]] AlgebraElement one() const {
      return AlgebraElement{{Word{}}};
    }
    // Reduces each word and cancels repeated terms in pairs.
    [[nodiscard]] AlgebraElement element(std::vector<Word> words) const;

    [[nodiscard]] AlgebraElement add(AlgebraElement const& lhs,
                                     AlgebraElement const& rhs) const;
    [[nodiscard]] AlgebraElement mul(AlgebraElement const& lhs,
                                     AlgebraElement const& rhs) const;
    [[nodiscard]] AlgebraElement pow(AlgebraElement const& e,
                                     unsigned              k) const;

   private:
    RewriteRule rule_;
  };

}  // namespace dk::rewrite
