#include "dk/grammar.hpp"

#include <cctype>
#include <limits>

#include "dk/errors.hpp"

namespace dk::grammar {

  namespace {

    // Upper bound on an expanded term, to keep typos like a^99999999 from
    // exhausting memory.
    constexpr std::size_t max_term_length = 4096;

    class Parser {
     public:
      Parser(std::string_view text, rewrite::Alphabet const& alphabet)
          : text_(text), alphabet_(alphabet) {}

      std::vector<rewrite::Word> parse() {
        std::vector<rewrite::Word> terms;
        skip_space();
        if (at_end()) {
          fail("empty expression");
        }
        while (true) {
          if (auto t = term()) {
            terms.push_back(std::move(*t));
          }
          skip_space();
          if (at_end()) {
            break;
          }
          if (text_[pos_] != '+') {
            fail("expected '+'");
          }
          ++pos_;
        }
        return terms;
      }

     private:
      std::optional<rewrite::Word> term() {
        skip_space();
        if (at_end()) {
          fail("expected a term");
        }
        if (text_[pos_] == '0' || text_[pos_] == '1') {
          char const c = text_[pos_++];
          skip_space();
          if (!at_end() && text_[pos_] != '+') {
            fail("'0' and '1' must stand alone as terms");
          }
          return c == '1' ? std::optional<rewrite::Word>(rewrite::Word{})
                          : std::nullopt;
        }
        rewrite::Word w;
        while (true) {
          skip_space();
          if (at_end() || text_[pos_] == '+') {
            break;
          }
          char const c = text_[pos_];
          if (!alphabet_.contains(c)) {
            fail(std::string("unexpected character '") + c + "'");
          }
          ++pos_;
          std::size_t reps = 1;
          skip_space();
          if (!at_end() && text_[pos_] == '^') {
            ++pos_;
            reps = number();
          }
          if (w.size() + reps > max_term_length) {
            fail("term too long");
          }
          w.append(reps, c);
        }
        if (w.empty()) {
          fail("empty term");
        }
        return w;
      }

      std::size_t number() {
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          fail("expected an exponent after '^'");
        }
        std::size_t n = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          n = n * 10 + static_cast<std::size_t>(text_[pos_++] - '0');
          if (n > max_term_length) {
            fail("exponent too large");
          }
        }
        return n;
      }

      void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      [[nodiscard]] bool at_end() const {
        return pos_ >= text_.size();
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_)
                         + " in \"" + std::string(text_) + "\"; grammar: "
                         + "TERM ('+' TERM)*, TERM = 0 | 1 | ("
                         + alphabet_.first + "|" + alphabet_.second
                         + ")['^'k]...");
      }

      std::string_view         text_;
      rewrite::Alphabet const& alphabet_;
      std::size_t              pos_ = 0;
    };

  }  // namespace

  std::vector<rewrite::Word> parse_terms(std::string_view         text,
                                         rewrite::Alphabet const& alphabet) {
    return Parser(text, alphabet).parse();
  }

  std::string format_word(std::string_view w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      out.push_back(w[i]);
      if (j - i > 1) {
        out += '^' + std::to_string(j - i);
      }
      i = j;
    }
    return out;
  }

  std::string join_terms(std::vector<std::string> const& terms) {
    if (terms.empty()) {
      return "0";
    }
    std::string out = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) {
      out += " + ";
      out += terms[i];
    }
    return out;
  }

}  // namespace dk::grammar
