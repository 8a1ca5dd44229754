#include "dk/finring.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <random>

#include "dk/errors.hpp"

namespace dk::finring {

  namespace {

    void require(bool ok, std::string const& label, char const* law) {
      if (!ok) {
        throw RingAxiomError(label + ": " + law + " fails");
      }
    }

    void check_triple(FiniteRing const& r, Id a, Id b, Id c) {
      auto const& l = r.label();
      require(r.add(r.add(a, b), c) == r.add(a, r.add(b, c)), l, "additive associativity");
      require(r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)), l, "multiplicative associativity");
      require(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)), l, "left distributivity");
      require(r.mul(r.add(a, b), c) == r.add(r.mul(a, c), r.mul(b, c)), l, "right distributivity");
    }

    // a^1, a^2, ... up to (excluding) the first repeated power.
    std::vector<Id> distinct_powers(FiniteRing const& r, Id a) {
      std::vector<Id> out;
      Subset          seen;
      for (Id p = a; !seen[p]; p = r.mul(p, a)) {
        seen.set(p);
        out.push_back(p);
      }
      return out;
    }

    bool subset_of(Subset const& lhs, Subset const& rhs) {
      return (lhs & ~rhs).none();
    }

    // A + B = R for additive subgroups A, B: |A| |B| = |R| |A ∩ B|.
    bool sum_is_everything(FiniteRing const& r, Subset const& lhs, Subset const& rhs) {
      return lhs.count() * rhs.count() == r.order() * (lhs & rhs).count();
    }

    Subset closure_right_ideal(FiniteRing const& r, Subset s) {
      s.set(r.zero());
      for (bool grown = true; grown;) {
        grown = false;
        for (std::size_t u = 0; u < r.order(); ++u) {
          if (!s[u]) {
            continue;
          }
          for (std::size_t v = 0; v < r.order(); ++v) {
            auto const sum  = r.add(static_cast<Id>(u), static_cast<Id>(v));
            auto const prod = r.mul(static_cast<Id>(u), static_cast<Id>(v));
            if (s[v] && !s[sum]) {
              s.set(sum);
              grown = true;
            }
            if (!s[prod]) {
              s.set(prod);
              grown = true;
            }
          }
        }
      }
      return s;
    }

    std::string poly_name(std::uint64_t bits) {
      if (bits == 0) {
        return "0";
      }
      std::string out;
      for (int i = 63; i >= 0; --i) {
        if (!((bits >> i) & 1u)) {
          continue;
        }
        if (!out.empty()) {
          out += "+";
        }
        out += i == 0 ? "1" : i == 1 ? "t" : "t^" + std::to_string(i);
      }
      return out;
    }

    int degree(std::uint64_t p) {
      return p == 0 ? -1 : 63 - std::countl_zero(p);
    }

    class SpecParser {
     public:
      explicit SpecParser(std::string_view text) {
        for (char ch : text) {
          if (!std::isspace(static_cast<unsigned char>(ch))) {
            text_ += ch;
          }
        }
      }

      FiniteRing parse() {
        auto ring = spec();
        if (pos_ != text_.size()) {
          fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return ring;
      }

     private:
      [[noreturn]] void fail(std::string const& why) const {
        throw ParseError("ring spec: " + why + " at offset " + std::to_string(pos_)
                         + "; expected spec := factor ('x' factor)*, factor := Zn | F2 | "
                           "Mk(spec) | Tk(spec) | F2[t]/t^k | F2[t]/(poly) | (spec)");
      }

      bool accept(std::string_view token) {
        if (text_.compare(pos_, token.size(), token) == 0) {
          pos_ += token.size();
          return true;
        }
        return false;
      }

      void expect(std::string_view token) {
        if (!accept(token)) {
          fail("expected '" + std::string(token) + "'");
        }
      }

      std::size_t number() {
        std::size_t start = pos_;
        std::size_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
          if (value > 4096) {
            fail("number too large");
          }
          ++pos_;
        }
        if (pos_ == start) {
          fail("expected a number");
        }
        return value;
      }

      FiniteRing spec() {
        auto ring = factor();
        while (accept("x")) {
          auto rhs = factor();
          if (ring.order() * rhs.order() > max_order) {
            throw SizeCapError(ring.label() + " x " + rhs.label() + " exceeds "
                               + std::to_string(max_order) + " elements");
          }
          ring = product(ring, rhs);
        }
        return ring;
      }

      std::uint64_t term() {
        if (accept("1")) {
          return 1;
        }
        expect("t");
        if (accept("^")) {
          auto const k = number();
          if (k >= 63) {
            fail("exponent too large");
          }
          return std::uint64_t{1} << k;
        }
        return 2;
      }

      std::uint64_t poly() {
        if (accept("(")) {
          std::uint64_t p = term();
          while (accept("+")) {
            p ^= term();
          }
          expect(")");
          return p;
        }
        expect("t^");
        auto const k = number();
        if (k >= 63) {
          fail("exponent too large");
        }
        return std::uint64_t{1} << k;
      }

      FiniteRing bracketed() {
        expect("(");
        auto ring = spec();
        expect(")");
        return ring;
      }

      FiniteRing factor() {
        if (accept("F2[t]/")) {
          auto const p = poly();
          if (degree(p) < 1) {
            fail("modulus must have degree >= 1");
          }
          if (degree(p) > 9) {
            throw SizeCapError("F2[t]/(" + poly_name(p) + ") exceeds "
                               + std::to_string(max_order) + " elements");
          }
          return poly_quotient(p);
        }
        if (accept("F2")) {
          auto ring = zmod(2);
          ring.set_label("F2");
          return ring;
        }
        if (accept("Z")) {
          auto const n = number();
          if (n < 2) {
            fail("Z needs n >= 2");
          }
          if (n > max_order) {
            throw SizeCapError("Z" + std::to_string(n) + " exceeds "
                               + std::to_string(max_order) + " elements");
          }
          return zmod(n);
        }
        if (text_.compare(pos_, 1, "M") == 0 || text_.compare(pos_, 1, "T") == 0) {
          bool const upper = text_[pos_] == 'T';
          ++pos_;
          auto const k = number();
          if (k < 1) {
            fail("matrix size must be >= 1");
          }
          auto const base = bracketed();
          return upper ? upper_triangular(base, k) : matrices(base, k);
        }
        if (text_.compare(pos_, 1, "(") == 0) {
          return bracketed();
        }
        fail("expected a ring");
      }

      std::string text_;
      std::size_t pos_ = 0;
    };

    // Matrices over base with entries allowed where `mask` is true,
    // encoded in mixed radix over the free positions.
    FiniteRing matrix_ring(FiniteRing const&        base,
                           std::size_t              k,
                           std::vector<bool> const& mask,
                           std::string              label) {
      std::vector<std::size_t> free;
      for (std::size_t i = 0; i < k * k; ++i) {
        if (mask[i]) {
          free.push_back(i);
        }
      }
      std::size_t order = 1;
      for (std::size_t i = 0; i < free.size(); ++i) {
        order *= base.order();
        if (order > max_order) {
          throw SizeCapError(label + " exceeds " + std::to_string(max_order) + " elements");
        }
      }
      auto const b      = base.order();
      auto       decode = [&, b](Id id) {
        std::vector<Id> m(k * k, base.zero());
        for (auto pos : free) {
          m[pos] = static_cast<Id>(id % b);
          id     = static_cast<Id>(id / b);
        }
        return m;
      };
      auto encode = [&, b](std::vector<Id> const& m) {
        std::size_t id = 0;
        for (auto it = free.rbegin(); it != free.rend(); ++it) {
          id = id * b + m[*it];
        }
        return static_cast<Id>(id);
      };
      std::vector<std::vector<Id>> entries(order);
      for (std::size_t id = 0; id < order; ++id) {
        entries[id] = decode(static_cast<Id>(id));
      }
      auto add = [&](Id x, Id y) {
        std::vector<Id> m(k * k);
        for (std::size_t i = 0; i < k * k; ++i) {
          m[i] = base.add(entries[x][i], entries[y][i]);
        }
        return encode(m);
      };
      auto mul = [&](Id x, Id y) {
        std::vector<Id> m(k * k, base.zero());
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            Id acc = base.zero();
            for (std::size_t l = 0; l < k; ++l) {
              acc = base.add(acc, base.mul(entries[x][i * k + l], entries[y][l * k + j]));
            }
            m[i * k + j] = acc;
          }
        }
        return encode(m);
      };
      std::vector<Id> identity(k * k, base.zero());
      for (std::size_t i = 0; i < k; ++i) {
        identity[i * k + i] = base.one();
      }
      std::vector<std::string> names(order);
      for (std::size_t id = 0; id < order; ++id) {
        std::string n = "[";
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            n += base.name(entries[id][i * k + j]);
            n += j + 1 < k ? " " : "";
          }
          n += i + 1 < k ? ";" : "]";
        }
        names[id] = std::move(n);
      }
      return FiniteRing(std::move(label),
                        order,
                        add,
                        mul,
                        encode(std::vector<Id>(k * k, base.zero())),
                        encode(identity),
                        std::move(names));
    }

  }  // namespace

  FiniteRing::FiniteRing(std::string                      label,
                         std::size_t                      order,
                         std::function<Id(Id, Id)> const& add,
                         std::function<Id(Id, Id)> const& mul,
                         Id                               zero,
                         Id                               one,
                         std::vector<std::string>         names)
      : label_(std::move(label)),
        order_(order),
        add_(order * order),
        mul_(order * order),
        neg_(order),
        zero_(zero),
        one_(one),
        names_(std::move(names)) {
    if (order == 0 || order > max_order) {
      throw SizeCapError(label_ + " has " + std::to_string(order)
                         + " elements; supported orders are 1.."
                         + std::to_string(max_order));
    }
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        add_[a * order + b] = add(static_cast<Id>(a), static_cast<Id>(b));
        mul_[a * order + b] = mul(static_cast<Id>(a), static_cast<Id>(b));
      }
    }
    for (std::size_t a = 0; a < order; ++a) {
      auto const id = static_cast<Id>(a);
      require(this->add(id, zero_) == id, label_, "additive identity");
      require(this->mul(id, one_) == id && this->mul(one_, id) == id, label_, "multiplicative identity");
      bool found = false;
      for (std::size_t b = 0; b < order && !found; ++b) {
        require(this->add(id, static_cast<Id>(b)) == this->add(static_cast<Id>(b), id),
                label_, "additive commutativity");
        if (this->add(id, static_cast<Id>(b)) == zero_) {
          neg_[a] = static_cast<Id>(b);
          found   = true;
        }
      }
      require(found, label_, "additive inverses");
    }
    if (order <= full_axiom_cap) {
      for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
          for (std::size_t c = 0; c < order; ++c) {
            check_triple(*this, static_cast<Id>(a), static_cast<Id>(b), static_cast<Id>(c));
          }
        }
      }
    } else {
      std::mt19937_64                       rng(order);
      std::uniform_int_distribution<std::size_t> pick(0, order - 1);
      for (int t = 0; t < 20000; ++t) {
        check_triple(*this,
                     static_cast<Id>(pick(rng)),
                     static_cast<Id>(pick(rng)),
                     static_cast<Id>(pick(rng)));
      }
    }
    for (std::size_t a = 0; a < order; ++a) {
      auto const id = static_cast<Id>(a);
      if (this->mul(id, id) == id) {
        idempotents_.push_back(id);
      }
      for (std::size_t b = 0; b < order; ++b) {
        if (this->mul(id, static_cast<Id>(b)) == one_ && this->mul(static_cast<Id>(b), id) == one_) {
          units_.push_back(id);
          break;
        }
      }
      for (auto p : distinct_powers(*this, id)) {
        if (p == zero_) {
          nilpotents_.set(a);
          break;
        }
      }
    }
  }

  Id FiniteRing::pow(Id a, std::size_t n) const noexcept {
    Id out = one_;
    for (std::size_t i = 0; i < n; ++i) {
      out = mul(out, a);
    }
    return out;
  }

  Subset FiniteRing::right_multiples(Id a) const {
    Subset s;
    for (std::size_t r = 0; r < order_; ++r) {
      s.set(mul(a, static_cast<Id>(r)));
    }
    return s;
  }

  Subset FiniteRing::left_multiples(Id a) const {
    Subset s;
    for (std::size_t r = 0; r < order_; ++r) {
      s.set(mul(static_cast<Id>(r), a));
    }
    return s;
  }

  Subset FiniteRing::right_annihilator(Id a) const {
    Subset s;
    for (std::size_t r = 0; r < order_; ++r) {
      s.set(r, mul(a, static_cast<Id>(r)) == zero_);
    }
    return s;
  }

  Subset FiniteRing::left_annihilator(Id a) const {
    Subset s;
    for (std::size_t r = 0; r < order_; ++r) {
      s.set(r, mul(static_cast<Id>(r), a) == zero_);
    }
    return s;
  }

  std::vector<Subset> const& FiniteRing::right_ideals() const {
    if (order_ > exchange_cap) {
      throw SizeCapError("right ideals of " + label_ + " (" + std::to_string(order_)
                         + " elements) are only enumerated up to "
                         + std::to_string(exchange_cap) + " elements");
    }
    if (!right_ideals_ready_) {
      std::vector<Subset> found{closure_right_ideal(*this, Subset{})};
      for (std::size_t i = 0; i < found.size(); ++i) {
        for (std::size_t g = 0; g < order_; ++g) {
          if (found[i][g]) {
            continue;
          }
          auto s = found[i];
          s.set(g);
          auto const ideal = closure_right_ideal(*this, s);
          if (std::find(found.begin(), found.end(), ideal) == found.end()) {
            found.push_back(ideal);
          }
        }
      }
      right_ideals_       = std::move(found);
      right_ideals_ready_ = true;
    }
    return right_ideals_;
  }

  FiniteRing zmod(std::size_t n) {
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) {
      names[i] = std::to_string(i);
    }
    return FiniteRing(
        "Z" + std::to_string(n),
        n,
        [n](Id a, Id b) { return static_cast<Id>((a + b) % n); },
        [n](Id a, Id b) { return static_cast<Id>((static_cast<std::size_t>(a) * b) % n); },
        0,
        static_cast<Id>(1 % n),
        std::move(names));
  }

  FiniteRing matrices(FiniteRing const& base, std::size_t k) {
    return matrix_ring(base, k, std::vector<bool>(k * k, true),
                       "M" + std::to_string(k) + "(" + base.label() + ")");
  }

  FiniteRing upper_triangular(FiniteRing const& base, std::size_t k) {
    std::vector<bool> mask(k * k, false);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i; j < k; ++j) {
        mask[i * k + j] = true;
      }
    }
    return matrix_ring(base, k, mask, "T" + std::to_string(k) + "(" + base.label() + ")");
  }

  FiniteRing poly_quotient(std::uint64_t p) {
    auto const d = degree(p);
    if (d < 1) {
      throw DimensionError("modulus must have degree >= 1");
    }
    std::size_t const order = std::size_t{1} << d;
    if (order > max_order) {
      throw SizeCapError("F2[t]/(" + poly_name(p) + ") exceeds "
                         + std::to_string(max_order) + " elements");
    }
    auto mul = [p, d](Id a, Id b) {
      std::uint64_t acc = 0;
      for (int i = 0; i < d; ++i) {
        if ((b >> i) & 1u) {
          acc ^= static_cast<std::uint64_t>(a) << i;
        }
      }
      for (int i = 2 * d; i >= d; --i) {
        if ((acc >> i) & 1u) {
          acc ^= p << (i - d);
        }
      }
      return static_cast<Id>(acc);
    };
    std::vector<std::string> names(order);
    for (std::size_t i = 0; i < order; ++i) {
      names[i] = poly_name(i);
    }
    bool const monomial = std::popcount(p) == 1;
    auto       label = "F2[t]/" + (monomial ? "t^" + std::to_string(d) : "(" + poly_name(p) + ")");
    return FiniteRing(
        std::move(label),
        order,
        [](Id a, Id b) { return static_cast<Id>(a ^ b); },
        mul,
        0,
        1,
        std::move(names));
  }

  FiniteRing product(FiniteRing const& lhs, FiniteRing const& rhs) {
    auto const m     = rhs.order();
    auto const order = lhs.order() * m;
    if (order > max_order) {
      throw SizeCapError(lhs.label() + " x " + rhs.label() + " exceeds "
                         + std::to_string(max_order) + " elements");
    }
    std::vector<std::string> names(order);
    for (std::size_t i = 0; i < order; ++i) {
      names[i] = "(" + lhs.name(static_cast<Id>(i / m)) + "," + rhs.name(static_cast<Id>(i % m)) + ")";
    }
    auto pack = [m](std::size_t a, std::size_t b) { return static_cast<Id>(a * m + b); };
    return FiniteRing(
        lhs.label() + " x " + rhs.label(),
        order,
        [&, m](Id a, Id b) {
          return pack(lhs.add(static_cast<Id>(a / m), static_cast<Id>(b / m)),
                      rhs.add(static_cast<Id>(a % m), static_cast<Id>(b % m)));
        },
        [&, m](Id a, Id b) {
          return pack(lhs.mul(static_cast<Id>(a / m), static_cast<Id>(b / m)),
                      rhs.mul(static_cast<Id>(a % m), static_cast<Id>(b % m)));
        },
        pack(lhs.zero(), rhs.zero()),
        pack(lhs.one(), rhs.one()),
        std::move(names));
  }

  FiniteRing parse_ring(std::string_view spec) {
    return SpecParser(spec).parse();
  }

  bool is_idempotent(FiniteRing const& r, Id a) {
    return r.mul(a, a) == a;
  }

  bool is_regular(FiniteRing const& r, Id a) {
    for (std::size_t x = 0; x < r.order(); ++x) {
      if (r.mul(r.mul(a, static_cast<Id>(x)), a) == a) {
        return true;
      }
    }
    return false;
  }

  bool is_unit_regular(FiniteRing const& r, Id a) {
    return std::any_of(r.units().begin(), r.units().end(), [&](Id u) {
      return r.mul(r.mul(a, u), a) == a;
    });
  }

  bool is_pi_regular(FiniteRing const& r, Id a) {
    auto const ps = distinct_powers(r, a);
    return std::any_of(ps.begin(), ps.end(), [&](Id p) { return is_regular(r, p); });
  }

  bool is_right_strongly_regular(FiniteRing const& r, Id a) {
    return r.right_multiples(r.mul(a, a)).test(a);
  }

  bool is_left_strongly_regular(FiniteRing const& r, Id a) {
    return r.left_multiples(r.mul(a, a)).test(a);
  }

  bool is_right_strongly_pi_regular(FiniteRing const& r, Id a) {
    auto const ps = distinct_powers(r, a);
    return std::any_of(ps.begin(), ps.end(), [&](Id p) {
      return r.right_multiples(r.mul(p, a)).test(p);
    });
  }

  bool is_left_strongly_pi_regular(FiniteRing const& r, Id a) {
    auto const ps = distinct_powers(r, a);
    return std::any_of(ps.begin(), ps.end(), [&](Id p) {
      return r.left_multiples(r.mul(a, p)).test(p);
    });
  }

  bool is_suitable(FiniteRing const& r, Id a) {
    auto const in_aR    = r.right_multiples(a);
    auto const in_comp  = r.right_multiples(r.sub(r.one(), a));
    auto const& idems   = r.idempotents();
    return std::any_of(idems.begin(), idems.end(), [&](Id e) {
      return in_aR[e] && in_comp[r.sub(r.one(), e)];
    });
  }

  bool is_left_suitable(FiniteRing const& r, Id a) {
    auto const  in_Ra   = r.left_multiples(a);
    auto const  in_comp = r.left_multiples(r.sub(r.one(), a));
    auto const& idems   = r.idempotents();
    return std::any_of(idems.begin(), idems.end(), [&](Id e) {
      return in_Ra[e] && in_comp[r.sub(r.one(), e)];
    });
  }

  bool is_right_exchange(FiniteRing const& r, Id a) {
    auto const& ideals = r.right_ideals();
    auto const  aR     = r.right_multiples(a);
    auto const& idems  = r.idempotents();
    for (auto const& ideal : ideals) {
      if (!sum_is_everything(r, aR, ideal)) {
        continue;
      }
      bool const ok = std::any_of(idems.begin(), idems.end(), [&](Id e) {
        return aR[e] && ideal[r.sub(r.one(), e)];
      });
      if (!ok) {
        return false;
      }
    }
    return true;
  }

  bool left_power_ideal(FiniteRing const& r, Id a, std::size_t n) {
    auto const p = r.pow(a, n);
    return subset_of(r.right_multiples(p), r.left_multiples(p));
  }

  bool is_dedekind_finite(FiniteRing const& r) {
    for (std::size_t a = 0; a < r.order(); ++a) {
      for (std::size_t b = 0; b < r.order(); ++b) {
        if (r.mul(static_cast<Id>(a), static_cast<Id>(b)) == r.one()
            && r.mul(static_cast<Id>(b), static_cast<Id>(a)) != r.one()) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_abelian(FiniteRing const& r) {
    for (auto e : r.idempotents()) {
      for (std::size_t x = 0; x < r.order(); ++x) {
        if (r.mul(e, static_cast<Id>(x)) != r.mul(static_cast<Id>(x), e)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_NI(FiniteRing const& r) {
    auto const& n = r.nilpotents();
    for (std::size_t u = 0; u < r.order(); ++u) {
      if (!n[u]) {
        continue;
      }
      for (std::size_t v = 0; v < r.order(); ++v) {
        auto const uid = static_cast<Id>(u);
        auto const vid = static_cast<Id>(v);
        if ((n[v] && !n[r.add(uid, vid)]) || !n[r.mul(uid, vid)] || !n[r.mul(vid, uid)]) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_weakly_semicommutative(FiniteRing const& r) {
    auto const& n = r.nilpotents();
    for (std::size_t a = 0; a < r.order(); ++a) {
      for (std::size_t b = 0; b < r.order(); ++b) {
        if (r.mul(static_cast<Id>(a), static_cast<Id>(b)) != r.zero()) {
          continue;
        }
        for (std::size_t x = 0; x < r.order(); ++x) {
          if (!n[r.mul(r.mul(static_cast<Id>(a), static_cast<Id>(x)), static_cast<Id>(b))]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool is_left_duo(FiniteRing const& r) {
    for (std::size_t a = 0; a < r.order(); ++a) {
      if (!left_power_ideal(r, static_cast<Id>(a), 1)) {
        return false;
      }
    }
    return true;
  }

  bool is_weakly_left_duo(FiniteRing const& r) {
    for (std::size_t a = 0; a < r.order(); ++a) {
      auto const ps = distinct_powers(r, static_cast<Id>(a));
      bool       ok = false;
      for (std::size_t n = 1; n <= ps.size() && !ok; ++n) {
        ok = left_power_ideal(r, static_cast<Id>(a), n);
      }
      if (!ok) {
        return false;
      }
    }
    return true;
  }

  bool is_right_dischinger(FiniteRing const& r) {
    for (std::size_t a = 0; a < r.order(); ++a) {
      auto const id = static_cast<Id>(a);
      if (is_right_strongly_regular(r, id) && !is_left_strongly_regular(r, id)) {
        return false;
      }
    }
    return true;
  }

  bool is_left_dischinger(FiniteRing const& r) {
    for (std::size_t a = 0; a < r.order(); ++a) {
      auto const id = static_cast<Id>(a);
      if (is_left_strongly_regular(r, id) && !is_right_strongly_regular(r, id)) {
        return false;
      }
    }
    return true;
  }

  bool is_right_pi_dischinger(FiniteRing const& r) {
    for (std::size_t a = 0; a < r.order(); ++a) {
      auto const id = static_cast<Id>(a);
      if (is_right_strongly_pi_regular(r, id) && !is_left_strongly_pi_regular(r, id)) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::string> const& element_predicate_names() {
    static std::vector<std::string> const names{
        "idempotent",
        "regular",
        "unit_regular",
        "pi_regular",
        "right_strongly_regular",
        "left_strongly_regular",
        "right_strongly_pi_regular",
        "left_strongly_pi_regular",
        "suitable",
        "right_exchange",
    };
    return names;
  }

  std::vector<ElementRow> element_table(FiniteRing const& r) {
    bool const              exchange = r.order() <= exchange_cap;
    std::vector<ElementRow> rows;
    rows.reserve(r.order());
    for (std::size_t a = 0; a < r.order(); ++a) {
      auto const id = static_cast<Id>(a);
      rows.push_back({id,
                      {is_idempotent(r, id),
                       is_regular(r, id),
                       is_unit_regular(r, id),
                       is_pi_regular(r, id),
                       is_right_strongly_regular(r, id),
                       is_left_strongly_regular(r, id),
                       is_right_strongly_pi_regular(r, id),
                       is_left_strongly_pi_regular(r, id),
                       is_suitable(r, id),
                       exchange && is_right_exchange(r, id)}});
    }
    return rows;
  }

  std::vector<std::pair<std::string, bool>> ring_predicates(FiniteRing const& r) {
    return {
        {"dedekind_finite", is_dedekind_finite(r)},
        {"abelian", is_abelian(r)},
        {"NI", is_NI(r)},
        {"weakly_semicommutative", is_weakly_semicommutative(r)},
        {"left_duo", is_left_duo(r)},
        {"weakly_left_duo", is_weakly_left_duo(r)},
        {"right_dischinger", is_right_dischinger(r)},
        {"left_dischinger", is_left_dischinger(r)},
    };
  }

  SuiteReport verify_equivalences(FiniteRing const& r) {
    SuiteReport report("finring");
    report.param("ring", r.label());
    report.param("order", r.order());
    bool const exchange = r.order() <= exchange_cap;
    report.param("exchange", exchange ? "checked" : "skipped above " + std::to_string(exchange_cap));

    auto const n = r.order();
    auto       memo = [n](auto predicate) {
      return [predicate, cache = std::vector<signed char>(n, -1)](FiniteRing const& ring, Id a) mutable {
        if (cache[a] < 0) {
          cache[a] = predicate(ring, a) ? 1 : 0;
        }
        return cache[a] == 1;
      };
    };
    auto suitable     = memo(is_suitable);
    auto exchange_el  = memo(is_right_exchange);
    auto pi_regular   = memo(is_pi_regular);
    auto regular      = memo(is_regular);
    auto unit_regular = memo(is_unit_regular);
    auto left_sr      = memo(is_left_strongly_regular);

    std::vector<Subset> left_mult(n);
    for (std::size_t a = 0; a < n; ++a) {
      left_mult[a] = r.left_multiples(static_cast<Id>(a));
    }
    bool const abelian = is_abelian(r);
    auto fail = [&](std::string what, Id a) { report.fail(what + " at a=" + r.name(a)); };

    // The seven conditions on a = a^2 x hold or fail together.
    for (std::size_t ai = 0; ai < n; ++ai) {
      auto const a  = static_cast<Id>(ai);
      auto const a2 = r.mul(a, a);
      for (std::size_t xi = 0; xi < n; ++xi) {
        auto const x = static_cast<Id>(xi);
        if (r.mul(a2, x) != a) {
          continue;
        }
        auto const        ax = r.mul(a, x);
        std::vector<bool> block{
            left_mult[a] == left_mult[a2],
            suitable(r, ax),
            pi_regular(r, ax),
            regular(r, ax),
            is_idempotent(r, ax),
            r.mul(ax, a) == a,
        };
        if (exchange) {
          block.push_back(exchange_el(r, ax));
        }
        report.count("block_pairs");
        bool const all  = std::all_of(block.begin(), block.end(), [](bool b) { return b; });
        bool const none = std::none_of(block.begin(), block.end(), [](bool b) { return b; });
        report.count(all ? "block_all_true" : "block_all_false", all || none ? 1 : 0);
        if (!all && !none) {
          report.fail("seven-way block split at a=" + r.name(a) + ", x=" + r.name(x));
        }
      }
    }

    for (std::size_t ai = 0; ai < n; ++ai) {
      auto const a          = static_cast<Id>(ai);
      auto const a2         = r.mul(a, a);
      bool const right_sreg = is_right_strongly_regular(r, a);

      // pi-regular with a = a^2 x forces R a = R a^2.
      if (right_sreg && pi_regular(r, a)) {
        report.count("pi_regular_square");
        if (left_mult[a] != left_mult[a2]) {
          fail("pi-regular a = a^2 x with R a != R a^2", a);
        }
      }

      // aR + eR = R and r(a) + (1-e)R = R force unit-regularity.
      auto const aR   = r.right_multiples(a);
      auto const ann  = r.right_annihilator(a);
      for (auto e : r.idempotents()) {
        if (sum_is_everything(r, aR, r.right_multiples(e))
            && sum_is_everything(r, ann, r.right_multiples(r.sub(r.one(), e)))) {
          report.count("unit_regular_premises");
          if (!unit_regular(r, a)) {
            fail("idempotent " + r.name(e) + " meets the premises but a is not unit-regular", a);
          }
        }
      }

      if (!right_sreg) {
        continue;
      }
      auto const ps          = distinct_powers(r, a);
      bool       some_ideal  = false;
      bool       every_ideal = true;
      for (std::size_t k = 1; k <= ps.size(); ++k) {
        bool const ideal = left_power_ideal(r, a, k);
        some_ideal       = some_ideal || ideal;
        every_ideal      = every_ideal && ideal;
      }
      // R a^n two-sided forces a = y a^2.
      if (some_ideal) {
        report.count("ideal_power");
        if (!left_sr(r, a)) {
          fail("R a^n is an ideal but a != y a^2", a);
        }
      }
      if (abelian) {
        report.count("abelian_converse");
        bool const strongly_regular = left_sr(r, a);
        if (some_ideal != strongly_regular) {
          fail("abelian ring: ideal power and strong regularity disagree", a);
        }
        if (strongly_regular && !every_ideal) {
          fail("abelian ring: strongly regular but some R a^n is not an ideal", a);
        }
      }
    }

    // Both formulations of the Dischinger property agree, on each side.
    report.count("dischinger_sides", 2);
    if (is_right_pi_dischinger(r) != is_right_dischinger(r)) {
      report.fail("right Dischinger formulations disagree");
    }
    bool left_pi = true;
    for (std::size_t ai = 0; ai < n; ++ai) {
      auto const a = static_cast<Id>(ai);
      if (is_left_strongly_pi_regular(r, a) && !is_right_strongly_pi_regular(r, a)) {
        left_pi = false;
      }
    }
    if (left_pi != is_left_dischinger(r)) {
      report.fail("left Dischinger formulations disagree");
    }
    return report;
  }

  std::vector<std::string> const& catalog() {
    static std::vector<std::string> const specs = [] {
      std::vector<std::string> out;
      for (int n = 2; n <= 32; ++n) {
        out.push_back("Z" + std::to_string(n));
      }
      for (char const* s : {"M2(F2)",
                            "M2(Z4)",
                            "T2(F2)",
                            "T3(F2)",
                            "F2[t]/t^1",
                            "F2[t]/t^2",
                            "F2[t]/t^3",
                            "F2[t]/t^4",
                            "F2[t]/(t^2+t+1)",
                            "Z2 x Z2",
                            "Z2 x Z3",
                            "Z4 x F2[t]/t^2",
                            "Z2 x T2(F2)",
                            "Z2 x M2(F2)",
                            "T2(F2) x T2(F2)"}) {
        out.emplace_back(s);
      }
      return out;
    }();
    return specs;
  }

}  // namespace dk::finring
