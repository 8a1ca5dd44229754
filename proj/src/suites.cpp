#include "dk/suites.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "dk/element.hpp"
#include "dk/errors.hpp"
#include "dk/finring.hpp"
#include "dk/jacobson.hpp"
#include "dk/monomial.hpp"
#include "dk/rewrite.hpp"
#include "dk/solver.hpp"
#include "dk/structure.hpp"
#include "dk/sweep.hpp"

namespace dk::suites {

  namespace {

    using structure::NilStatus;

    constexpr unsigned max_draws = 10000;

    // Runs body(i, part) for i < n and merges the parts in index order.
    template <class F>
    void exhaustive(SuiteReport& report, std::size_t n, Exec exec, F const& body) {
      auto const parts = sweep(
          n,
          [&](std::size_t i) {
            SuiteReport part;
            try {
              body(i, part);
            } catch (Error const& e) {
              part.fail(std::string("error: ") + e.what());
            }
            return part;
          },
          exec);
      for (auto const& p : parts) {
        report.merge(p);
      }
    }

    // As exhaustive, with body(s, part) for the derived seed s of each index.
    template <class F>
    void seeded(SuiteReport&  report,
                std::size_t   n,
                std::uint64_t seed,
                Exec          exec,
                F const&      body) {
      exhaustive(report, n, exec, [&](std::size_t i, SuiteReport& part) {
        auto const s = derive_seed(seed, i);
        try {
          body(s, part);
        } catch (Error const& e) {
          part.fail(std::string("error: ") + e.what(), s);
        }
      });
    }

    // gen(derive_seed(seed, t)) for t = 0, 1, ... until keep accepts.
    template <class Gen, class Keep>
    RingElement draw(std::uint64_t seed, Gen const& gen, Keep const& keep) {
      for (unsigned t = 0; t < max_draws; ++t) {
        auto f = gen(derive_seed(seed, t));
        if (keep(f)) {
          return f;
        }
      }
      throw SamplerExhausted("no acceptable sample after " + std::to_string(max_draws)
                             + " draws");
    }

    RingElement random_nonzero(std::size_t len, std::size_t support, std::uint64_t seed) {
      return draw(
          seed,
          [&](std::uint64_t s) { return random_element(len, support, s); },
          [](RingElement const& f) { return !f.is_zero(); });
    }

    // A nilpotent from the curated list or the chain sampler.
    RingElement random_nilpotent_element(std::uint64_t seed) {
      static auto const curated = structure::curated_nilpotents();
      std::mt19937_64   rng(seed);
      if (rng() % 4 == 0) {
        return curated[rng() % curated.size()];
      }
      structure::NilpotentParams params;
      params.chain_length = 1 + static_cast<unsigned>(rng() % 2);
      return structure::random_nilpotent(params, derive_seed(seed, 1));
    }

    // The element with support {basis[i] : bit i of mask}.
    RingElement from_mask(std::vector<ReducedMonomial> const& basis, std::uint64_t mask) {
      std::vector<ReducedMonomial> ms;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if ((mask >> i) & 1u) {
          ms.push_back(basis[i]);
        }
      }
      return RingElement(std::move(ms));
    }

    std::vector<ReducedMonomial> const& small_basis(std::size_t maxlen) {
      auto const& basis = monomials_up_to(maxlen);
      if (basis.size() > 20) {
        throw std::invalid_argument("maxlen " + std::to_string(maxlen)
                                    + " gives too many monomials for a subset sweep");
      }
      return basis;
    }

    RingElement a_power(unsigned k) {
      return RingElement(ReducedMonomial::a_power(k));
    }

    RingElement x_power(unsigned k) {
      return RingElement(ReducedMonomial::x_power(k));
    }

    std::string show(RingElement const& f) {
      return to_string(f);
    }

    SuiteReport confluence(SuiteOptions const& o) {
      auto const  maxlen = o.maxlen.value_or(10);
      SuiteReport report("confluence");
      report.param("maxlen", maxlen);
      for (auto const* rule : {&rewrite::dk_rule(), &rewrite::jacobson_rule()}) {
        auto const  words = rewrite::all_words(rule->alphabet(), maxlen);
        std::string counter{rule->alphabet().first, rule->alphabet().second};
        counter += "_words";
        exhaustive(report, words.size(), o.exec, [&](std::size_t i, SuiteReport& part) {
          auto const& w     = words[i];
          auto const  left  = rewrite::normalize(w, *rule, rewrite::Strategy::leftmost);
          auto const  right = rewrite::normalize(w, *rule, rewrite::Strategy::rightmost);
          auto const  fast  = rewrite::normalize(w, *rule);
          part.count(counter);
          if (left != right || left != fast || !rewrite::is_normal(left, *rule)) {
            part.fail("'" + w + "' normalizes to '" + left + "', '" + right + "' and '" + fast
                      + "'");
          }
        });
      }
      return report;
    }

    SuiteReport order(SuiteOptions const& o) {
      auto const  maxlen = o.maxlen.value_or(8);
      auto const  triple = std::min<std::size_t>(maxlen, 6);
      SuiteReport report("order");
      report.param("maxlen", maxlen);
      report.param("triple_maxlen", triple);

      auto const& ms = monomials_up_to(maxlen);
      exhaustive(report, ms.size(), o.exec, [&](std::size_t i, SuiteReport& part) {
        for (auto const& m2 : ms) {
          auto const& m1 = ms[i];
          part.count("pairs");
          int const relations = (precedes(m1, m2) ? 1 : 0) + (m1 == m2 ? 1 : 0)
                                + (precedes(m2, m1) ? 1 : 0);
          bool const equal_ok = (cmp(m1, m2) == Order::equal) == (m1 == m2);
          if (relations != 1 || !equal_ok) {
            part.fail("trichotomy fails for " + to_string(m1) + ", " + to_string(m2));
          }
        }
      });

      auto const& ts = monomials_up_to(triple);
      exhaustive(report, ts.size(), o.exec, [&](std::size_t i, SuiteReport& part) {
        auto const& m1 = ts[i];
        part.count("triples", ts.size() * ts.size());
        for (auto const& m2 : ts) {
          if (!precedes(m1, m2)) {
            continue;
          }
          for (auto const& m3 : ts) {
            if (precedes(m2, m3) && !precedes(m1, m3)) {
              part.fail("transitivity fails for " + to_string(m1) + ", " + to_string(m2) + ", "
                        + to_string(m3));
            }
          }
        }
      });

      for (auto const& [lo, hi] : {std::pair{"aa", "a"},
                                   std::pair{"x", "xx"},
                                   std::pair{"aa", "xaa"},
                                   std::pair{"a", "x"},
                                   std::pair{"xaaa", "xxaaa"}}) {
        report.count("examples");
        if (!precedes(to_exponents(lo), to_exponents(hi))) {
          report.fail(std::string("expected ") + lo + " < " + hi);
        }
      }
      return report;
    }

    SuiteReport mainlemma(SuiteOptions const& o) {
      auto const  maxlen = o.maxlen.value_or(7);
      SuiteReport report("mainlemma");
      report.param("maxlen", maxlen);
      auto const& ms   = monomials_up_to(maxlen);
      auto const& rule = rewrite::dk_rule();
      exhaustive(report, ms.size(), o.exec, [&](std::size_t i, SuiteReport& part) {
        auto const& m1 = ms[i];
        auto const  w1 = from_exponents(m1);
        for (auto const& m2 : ms) {
          part.count("pairs");
          auto const w = w1 + from_exponents(m2);
          auto const p = m1 * m2;
          if (rewrite::is_normal(w, rule)) {
            if (to_exponents(w) != p) {
              part.fail(to_string(m1) + " * " + to_string(m2) + " should stay " + w);
            }
          } else if (to_exponents(rewrite::normalize(w, rule)) != p || !precedes(p, m2)) {
            part.fail(to_string(m1) + " * " + to_string(m2) + " = " + to_string(p)
                      + " is not below the right factor");
          }
        }
      });
      return report;
    }

    SuiteReport mainthm(SuiteOptions const& o) {
      auto const  maxlen  = o.maxlen.value_or(5);
      auto const  samples = o.samples.value_or(500);
      auto const  L       = o.bound.value_or(10);
      SuiteReport report("mainthm");
      report.param("maxlen", maxlen);
      report.param("samples", samples);
      report.param("bound", L);

      std::vector<ReducedMonomial> rx;
      for (auto const& m : monomials_up_to(maxlen)) {
        if (m.ends_in_x()) {
          rx.push_back(m);
        }
      }
      exhaustive(report, rx.size(), o.exec, [&](std::size_t i, SuiteReport& part) {
        part.count("monomials");
        if (!solver::right_annihilator(RingElement(rx[i]), L).empty()) {
          part.fail("r(" + to_string(rx[i]) + ") is nonzero");
        }
      });
      seeded(report, samples, o.seed, o.exec, [&](std::uint64_t s, SuiteReport& part) {
        auto const f = draw(
            s,
            [](std::uint64_t t) { return random_element(4, 4, t); },
            [](RingElement const& g) { return has_Rx_monomial(g); });
        part.count("samples");
        auto const kernel = solver::right_annihilator(f, L);
        if (!kernel.empty()) {
          part.fail("r(" + show(f) + ") contains " + show(kernel.front()), s);
        }
      });
      return report;
    }

    SuiteReport rann(SuiteOptions const& o) {
      auto const  samples = o.samples.value_or(200);
      auto const  L       = o.bound.value_or(10);
      SuiteReport report("rann");
      report.param("samples", samples);
      report.param("bound", L);

      std::vector<ReducedMonomial> pool;
      for (auto const& m : monomials_up_to(5)) {
        if (m.ends_in_a()) {
          pool.push_back(m);
        }
      }
      seeded(report, samples, o.seed, o.exec, [&](std::uint64_t s, SuiteReport& part) {
        std::mt19937_64              rng(s);
        std::vector<ReducedMonomial> picked;
        std::sample(pool.begin(), pool.end(), std::back_inserter(picked), 1 + rng() % 4, rng);
        RingElement const f(std::move(picked));
        auto const        k      = solver::annihilator_exponent(f);
        auto const        kernel = solver::right_annihilator(f, L);
        part.count("samples");
        for (auto const& h : kernel) {
          if (!(f * h).is_zero()) {
            part.fail("kernel vector " + show(h) + " of " + show(f) + " is not annihilated", s);
            return;
          }
        }
        if (!solver::same_span(kernel, solver::right_annihilator(a_power(k), L))) {
          part.fail("r(" + show(f) + ") differs from r(a^" + std::to_string(k) + ")", s);
        }
      });
      return report;
    }

    SuiteReport lann(SuiteOptions const& o) {
      auto const  samples = o.samples.value_or(200);
      auto const  L       = o.bound.value_or(10);
      SuiteReport report("lann");
      report.param("samples", samples);
      report.param("bound", L);

      auto const one_ax = RingElement::one() + a() * x();
      seeded(report, samples, o.seed, o.exec, [&](std::uint64_t s, SuiteReport& part) {
        std::mt19937_64 rng(s);
        auto const      j = static_cast<unsigned>(rng() % 3);
        auto const      f = x_power(j) * one_ax * random_nonzero(3, 3, derive_seed(s, 1));
        auto const      kernel = solver::left_annihilator(f, L);
        part.count("samples");
        if (kernel.empty()) {
          part.fail("l(" + show(f) + ") is zero at the bound", s);
          return;
        }
        auto const n = structure::zero_divisor_class(f, static_cast<unsigned>(L)).right_zd;
        if (!n) {
          part.fail("no a^n f = 0 with n <= bound for f = " + show(f), s);
          return;
        }
        for (auto const& h : kernel) {
          if (!(h * f).is_zero()) {
            part.fail("kernel vector " + show(h) + " of " + show(f) + " is not annihilated", s);
            return;
          }
        }
        auto const span = solver::truncated_left_multiples(a_power(*n), L - *n);
        if (!solver::same_span(kernel, span)) {
          part.fail("l(" + show(f) + ") differs from R a^" + std::to_string(*n), s);
        }
      });
      return report;
    }

    SuiteReport nr(SuiteOptions const& o) {
      auto const  maxlen  = o.maxlen.value_or(3);
      auto const  samples = o.samples.value_or(500);
      auto const  K       = o.power.value_or(12);
      SuiteReport report("nr");
      report.param("maxlen", maxlen);
      report.param("samples", samples);
      report.param("power", K);

      auto const check = [K](RingElement const& f, SuiteReport& part, std::uint64_t s) {
        auto const v = structure::chain_nilpotency(f);
        auto const p = structure::power_nilpotency(f, K);
        if (v.status == NilStatus::undecided) {
          part.fail("chain oracle undecided on " + show(f), s);
          return;
        }
        if (v.nilpotent()) {
          part.count("nilpotent");
        }
        if (v.nilpotent() != p.has_value()) {
          part.fail("oracles disagree on " + show(f) + ": chain says "
                        + structure::to_string(v.status),
                    s);
        } else if (v.nilpotent() && !v.verify(f)) {
          part.fail("chain identities fail for " + show(f), s);
        }
      };

      auto const& basis = small_basis(maxlen);
      exhaustive(report, std::size_t{1} << basis.size(), o.exec,
                 [&](std::size_t mask, SuiteReport& part) {
                   part.count("exhaustive");
                   check(from_mask(basis, mask), part, 0);
                 });
      seeded(report, samples, o.seed, o.exec, [&](std::uint64_t s, SuiteReport& part) {
        part.count("samples");
        check(random_element(5, 4, s), part, s);
      });
      return report;
    }

    SuiteReport zerodivisors(SuiteOptions const& o) {
      auto const  maxlen = o.maxlen.value_or(3);
      auto const  L      = o.bound.value_or(10);
      SuiteReport report("zerodivisors");
      report.param("maxlen", maxlen);
      report.param("bound", L);

      auto const& basis = small_basis(maxlen);
      exhaustive(report, (std::size_t{1} << basis.size()) - 1, o.exec,
                 [&](std::size_t i, SuiteReport& part) {
                   auto const f = from_mask(basis, i + 1);
                   auto const z = structure::zero_divisor_class(f, static_cast<unsigned>(L));
                   part.count("elements");
                   bool const left  = !solver::right_annihilator(f, L).empty();
                   bool const right = !solver::left_annihilator(f, L).empty();
                   if (left) {
                     part.count("left_zd");
                   }
                   if (right) {
                     part.count("right_zd");
                   }
                   if (left != z.left_zd) {
                     part.fail("left zero-divisor status of " + show(f) + " is not membership in Ra");
                   }
                   if (right != z.right_zd.has_value()) {
                     part.fail("right zero-divisor status of " + show(f)
                               + " does not match a^n f = 0");
                   }
                 });
      return report;
    }

    SuiteReport symm(SuiteOptions const& o) {
      auto const  samples = o.samples.value_or(100);
      auto const  L       = o.bound.value_or(10);
      SuiteReport report("symm");
      report.param("samples", samples);
      report.param("bound", L);
      report.param("witness_bound", 12);

      report.count("witness", 3);
      if (a() * a() * x() != a()) {
        report.fail("a != a^2 x");
      }
      if (auto y = solver::solve_sr_equation(a(), 12)) {
        report.fail("a = y a^2 with y = " + show(*y));
      }
      if (structure::is_unit(a())) {
        report.fail("a is a unit");
      }
      seeded(report, samples, o.seed, o.exec, [&](std::uint64_t s, SuiteReport& part) {
        auto const f = draw(
            s,
            [](std::uint64_t t) { return random_element(3, 4, t); },
            [](RingElement const& g) { return !g.is_zero() && !structure::is_unit(g); });
        part.count("samples");
        if (auto y = solver::solve_sr_equation(f, L)) {
          part.fail(show(f) + " = y f^2 with y = " + show(*y), s);
        }
      });
      return report;
    }

    SuiteReport aa(SuiteOptions const& o) {
      auto const  samples = o.samples.value_or(500);
      SuiteReport report("aa");
      report.param("samples", samples);
      seeded(report, samples, o.seed, o.exec, [&](std::uint64_t s, SuiteReport& part) {
        RingElement f, g;
        for (unsigned t = 0;; ++t) {
          if (t == max_draws) {
            throw SamplerExhausted("no admissible pair");
          }
          f = random_element(3, 4, derive_seed(s, 2 * t));
          g = random_element(3, 4, derive_seed(s, 2 * t + 1));
          if (!has_one(f) && !has_one(g) && (!in_Ra(f) || !in_Ra(g))) {
            break;
          }
        }
        part.count("pairs");
        if (in_Ra(f + g + f * g)) {
          part.fail("f + g + fg in Ra for f = " + show(f) + ", g = " + show(g), s);
        }
      });
      return report;
    }

    SuiteReport unitprop(SuiteOptions const& o) {
      auto const  maxdeg  = o.maxlen.value_or(6);
      auto const  samples = o.samples.value_or(200);
      auto const  L       = o.bound.value_or(12);
      SuiteReport report("unitprop");
      report.param("maxdeg", maxdeg);
      report.param("samples", samples);
      report.param("bound", L);

      std::vector<ReducedMonomial> powers;
      for (unsigned k = 0; k <= maxdeg; ++k) {
        powers.push_back(ReducedMonomial::a_power(k));
      }
      // Masks 2 .. 2^{d+1} - 1: every nonzero polynomial in a other than 1.
      exhaustive(report, (std::size_t{1} << powers.size()) - 2, o.exec,
                 [&](std::size_t i, SuiteReport& part) {
                   auto const p = from_mask(powers, i + 2);
                   part.count("polynomials");
                   if (structure::is_unit(p)) {
                     part.fail(show(p) + " is a unit");
                   } else if (auto g = solver::solve_right_inverse(p, L)) {
                     part.fail(show(p) + " has right inverse " + show(*g));
                   }
                 });

      seeded(report, samples, o.seed, o.exec, [&](std::uint64_t s, SuiteReport& part) {
        part.count("samples");
        if (s % 2 == 0) {
          auto const n   = random_nilpotent_element(s);
          auto const u   = RingElement::one() + n;
          auto const inv = structure::inverse(u);
          if (!inv || u * *inv != RingElement::one()) {
            part.fail("1 + " + show(n) + " has no inverse", s);
          } else if (!has_one(u) || !has_one(*inv)) {
            part.fail("unit " + show(u) + " or its inverse lacks 1", s);
          } else if (!in_Ra(n)) {
            part.fail("1 + f is a unit but f = " + show(n) + " is not in Ra", s);
          }
          return;
        }
        auto f = random_element(4, 4, s);
        if (has_one(f)) {
          f += RingElement::one();
        }
        if (structure::is_unit(RingElement::one() + f)) {
          part.count("random_units");
          if (!in_Ra(f)) {
            part.fail("1 + f is a unit but f = " + show(f) + " is not in Ra", s);
          }
        }
      });
      return report;
    }

    SuiteReport uu(SuiteOptions const& o) {
      auto const  samples = o.samples.value_or(300);
      auto const  L       = o.bound.value_or(12);
      SuiteReport report("uu");
      report.param("samples", samples);
      report.param("bound", L);

      seeded(report, samples, derive_seed(o.seed, "units"), o.exec,
             [&](std::uint64_t s, SuiteReport& part) {
               auto const n = random_nilpotent_element(s);
               auto const u = RingElement::one() + n;
               part.count("units");
               auto const inv = structure::inverse(u);
               if (!inv) {
                 part.fail("1 + " + show(n) + " is not a unit", s);
                 return;
               }
               if (u * *inv != RingElement::one() || *inv * u != RingElement::one()) {
                 part.fail("geometric series is not an inverse of " + show(u), s);
                 return;
               }
               auto const g = solver::solve_right_inverse(u, std::max(L, inv->max_length()));
               if (!g || u * *g != RingElement::one()) {
                 part.fail("linear solve finds no right inverse of " + show(u), s);
               }
             });
      seeded(report, samples, derive_seed(o.seed, "non-units"), o.exec,
             [&](std::uint64_t s, SuiteReport& part) {
               auto const f = draw(
                   s,
                   [](std::uint64_t t) { return random_element(3, 4, t); },
                   [](RingElement const& g) {
                     return structure::chain_nilpotency(g + RingElement::one()).status
                            == NilStatus::not_nilpotent;
                   });
               part.count("non_units");
               if (auto g = solver::solve_right_inverse(f, L)) {
                 part.fail(show(f) + " has right inverse " + show(*g), s);
               }
             });
      return report;
    }

    SuiteReport jrad(SuiteOptions const& o) {
      auto const  samples = o.samples.value_or(200);
      auto const  K       = o.power.value_or(8);
      SuiteReport report("jrad");
      report.param("samples", samples);
      report.param("power", K);

      seeded(report, samples, derive_seed(o.seed, "witness"), o.exec,
             [&](std::uint64_t s, SuiteReport& part) {
               auto const f = random_nonzero(4, 4, s);
               part.count("witnesses");
               auto const k = structure::rx_witness(f, K);
               if (!k) {
                 part.fail("no k <= " + std::to_string(K) + " puts f x^k outside Ra for f = "
                               + show(f),
                           s);
                 return;
               }
               auto const g = f * x_power(*k);
               if (structure::chain_nilpotency(g).nilpotent()) {
                 part.fail(show(g) + " is nilpotent", s);
               } else if (structure::is_unit(RingElement::one() + g)) {
                 part.fail("1 + " + show(g) + " is a unit", s);
               }
             });
      seeded(report, samples, derive_seed(o.seed, "pairs"), o.exec,
             [&](std::uint64_t s, SuiteReport& part) {
               auto const n = random_nilpotent_element(derive_seed(s, 1));
               auto const u = RingElement::one() + random_nilpotent_element(derive_seed(s, 2));
               part.count("pairs");
               if (!structure::is_unit(n + u)) {
                 part.fail(show(n) + " + " + show(u) + " is not a unit", s);
               } else if (!structure::chain_nilpotency(u * n).nilpotent()
                          || !structure::chain_nilpotency(n * u).nilpotent()) {
                 part.fail("unit " + show(u) + " times " + show(n) + " is not nilpotent", s);
               }
             });
      return report;
    }

    SuiteReport mccoy(SuiteOptions const& o) {
      auto const  samples = o.samples.value_or(200);
      auto const  L       = o.bound.value_or(8);
      SuiteReport report("mccoy");
      report.param("samples", samples);
      report.param("bound", L);

      seeded(report, samples, o.seed, o.exec, [&](std::uint64_t s, SuiteReport& part) {
        std::mt19937_64 rng(s);
        auto            f = random_nonzero(3, 4, derive_seed(s, 1));
        auto            g = random_nonzero(3, 4, derive_seed(s, 2));
        auto const one_ax = RingElement::one() + a() * x();
        switch (rng() % 3) {
          case 0:
            f *= a();
            g *= a();
            break;
          case 1:
            f = one_ax * f;
            g = one_ax * g;
            break;
          default:
            break;
        }
        part.count("pairs");
        auto const r = solver::mccoy_check(f, g, L);
        auto const n = static_cast<unsigned>(L);

        bool const both_ra = in_Ra(f) && in_Ra(g);
        if (both_ra) {
          part.count("both_in_Ra");
        }
        bool const right_premise_false = r.right.verdict == solver::McCoyVerdict::premise_false;
        if (right_premise_false != both_ra) {
          part.fail("right premise misclassified for " + show(f) + ", " + show(g), s);
        }
        bool const both_killed = structure::zero_divisor_class(f, n).right_zd.has_value()
                                 && structure::zero_divisor_class(g, n).right_zd.has_value();
        bool const left_premise_false = r.left.verdict == solver::McCoyVerdict::premise_false;
        if (left_premise_false) {
          part.count("left_premise_false");
        }
        if (left_premise_false != both_killed) {
          part.fail("left premise misclassified for " + show(f) + ", " + show(g), s);
        }
        if (r.right.verdict == solver::McCoyVerdict::violated
            || r.left.verdict == solver::McCoyVerdict::violated) {
          part.fail("criterion violated for " + show(f) + ", " + show(g), s);
        }
      });
      return report;
    }

    SuiteReport uniform(SuiteOptions const& o) {
      auto const  L     = o.bound.value_or(8);
      auto const  count = o.maxlen.value_or(6);
      SuiteReport report("uniform");
      report.param("bound", L);
      report.param("ideals", count);

      auto const s = RingElement::one() + a() * x();
      auto const t = a();
      report.count("checks", 3);
      if (!solver::cyclic_intersection(s, t, L).empty()) {
        report.fail("S s and S t intersect");
      }
      if (!solver::left_annihilator(t, L).empty()) {
        report.fail("l(t) is nonzero");
      }
      RingElement g = s;
      for (std::size_t k = 0; k < count; ++k, g *= t) {
        report.count("ideals");
        if (g.is_zero()) {
          report.fail("s t^" + std::to_string(k) + " = 0");
        }
      }
      auto const deps = solver::stacked_dependencies(s, t, count, L);
      if (!deps.empty()) {
        report.fail("the left ideals S s t^k are dependent: kernel dimension "
                    + std::to_string(deps.size()));
      }
      return report;
    }

    SuiteReport kn_suite(SuiteOptions const& o) {
      auto const  n_max = o.maxlen.value_or(6);
      SuiteReport report("kn");
      report.param("maxlen", n_max);

      auto check = [&](bool ok, std::string const& what) {
        report.count("identities");
        if (!ok) {
          report.fail(what);
        }
      };
      for (unsigned n = 1; n <= n_max; ++n) {
        auto const k    = kn(n);
        auto const name = "k_" + std::to_string(n);
        check(pow(k, n + 1).is_zero(), name + "^" + std::to_string(n + 1) + " != 0");
        check(!pow(k, n).is_zero(), name + "^" + std::to_string(n) + " = 0");
        for (unsigned m = 1; m <= n; ++m) {
          auto const km       = pow(k, m);
          auto const explicit_form
              = a_power(m) + a() * x_power(n - m + 1) * a_power(n);
          check(km == a_power(m - 1) * k && km == explicit_form,
                name + "^" + std::to_string(m) + " has the wrong form");
        }
        auto const next = kn(n + 1);
        check(k == next * (RingElement::one() + x_power(n) * a_power(n)),
              name + " != k_" + std::to_string(n + 1) + "(1 + x^n a^n)");
        check((a_power(n) * k).is_zero(), "a^n " + name + " != 0");
        check(!(a_power(n) * next).is_zero(), "a^n k_" + std::to_string(n + 1) + " = 0");
        check(structure::power_nilpotency(k) == n + 1, name + " has the wrong index");
      }
      return report;
    }

    SuiteReport nilsubring(SuiteOptions const& o) {
      return structure::nilsubring_closure_check(
          static_cast<unsigned>(o.samples.value_or(200)), o.seed);
    }

    // c^i b^j as a word, and back.
    std::string jword(jacobson::JMonomial m) {
      return std::string(m.i, 'c') + std::string(m.j, 'b');
    }

    jacobson::JMonomial jparse(std::string const& w) {
      auto const i = w.find_first_not_of('c');
      auto const c = i == std::string::npos ? w.size() : i;
      return {static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(w.size() - c)};
    }

    SuiteReport jacobson_suite(SuiteOptions const& o) {
      auto const  n_max   = o.maxlen.value_or(8);
      auto const  samples = o.samples.value_or(200);
      SuiteReport report("jacobson");
      report.param("maxlen", n_max);
      report.param("samples", samples);

      auto const dn = jacobson::verify_dn_suite(static_cast<unsigned>(n_max));
      report.count("dn_checks", dn.checks);
      for (auto const& f : dn.failures) {
        report.fail(f);
      }

      constexpr unsigned units = 5;
      for (unsigned i = 0; i < units; ++i) {
        for (unsigned j = 0; j < units; ++j) {
          for (unsigned k = 0; k < units; ++k) {
            for (unsigned l = 0; l < units; ++l) {
              report.count("matrix_units");
              auto const lhs = jacobson::matrix_unit(i, j) * jacobson::matrix_unit(k, l);
              auto const rhs = j == k ? jacobson::matrix_unit(i, l) : jacobson::JElement{};
              if (lhs != rhs) {
                report.fail("E" + std::to_string(i) + std::to_string(j) + " E"
                            + std::to_string(k) + std::to_string(l) + " is wrong");
              }
            }
          }
        }
      }

      std::vector<jacobson::JMonomial> ms;
      for (std::uint32_t i = 0; i <= n_max; ++i) {
        for (std::uint32_t j = 0; i + j <= n_max; ++j) {
          ms.push_back({i, j});
        }
      }
      for (auto const m1 : ms) {
        for (auto const m2 : ms) {
          report.count("jmul_pairs");
          auto const w = rewrite::normalize(jword(m1) + jword(m2), rewrite::jacobson_rule());
          if (jparse(w) != jacobson::jmul(m1, m2)) {
            report.fail("jmul disagrees with rewriting on " + jword(m1) + " * " + jword(m2));
          }
        }
      }

      seeded(report, samples, o.seed, o.exec, [&](std::uint64_t s, SuiteReport& part) {
        auto const f = random_element(4, 4, derive_seed(s, 1));
        auto const g = random_element(4, 4, derive_seed(s, 2));
        part.count("homomorphism");
        auto const phi = structure::jacobson_image;
        if (phi(f * g) != phi(f) * phi(g) || phi(f + g) != phi(f) + phi(g)) {
          part.fail("a -> b, x -> c is not multiplicative on " + show(f) + ", " + show(g), s);
        }
      });
      return report;
    }

    SuiteReport finring_suite(SuiteOptions const& o) {
      namespace fr = dk::finring;
      SuiteReport report("finring");
      auto const& specs = fr::catalog();
      report.param("rings", specs.size());

      exhaustive(report, specs.size(), o.exec, [&](std::size_t i, SuiteReport& part) {
        auto const r = fr::parse_ring(specs[i]);
        part.count("rings");
        auto const eq = fr::verify_equivalences(r);
        for (auto const& [name, n] : eq.counters()) {
          part.count(name, n);
        }
        for (auto const& f : eq.failures()) {
          part.fail(r.label() + ": " + f.detail);
        }
        auto invariant = [&](bool ok, std::string const& what) {
          part.count("invariants");
          if (!ok) {
            part.fail(r.label() + ": " + what);
          }
        };
        invariant(fr::is_right_dischinger(r), "not right Dischinger");
        invariant(fr::is_left_dischinger(r), "not left Dischinger");
        invariant(fr::is_right_pi_dischinger(r), "not right pi-Dischinger");
        invariant(fr::is_dedekind_finite(r), "not Dedekind-finite");
        invariant(!fr::is_weakly_semicommutative(r) || fr::is_dedekind_finite(r),
                  "weakly semicommutative but not Dedekind-finite");
        invariant(!fr::is_NI(r) || fr::is_weakly_semicommutative(r),
                  "NI but not weakly semicommutative");
        bool symmetric = true;
        for (std::size_t a = 0; a < r.order(); ++a) {
          auto const id = static_cast<fr::Id>(a);
          symmetric     = symmetric && fr::is_suitable(r, id) == fr::is_left_suitable(r, id);
        }
        invariant(symmetric, "suitability is one-sided");
      });

      auto const m2 = fr::parse_ring("M2(F2)");
      std::optional<fr::Id> e11;
      for (std::size_t a = 0; a < m2.order(); ++a) {
        if (m2.name(static_cast<fr::Id>(a)) == "[1 0;0 0]") {
          e11 = static_cast<fr::Id>(a);
        }
      }
      report.count("e11", 1);
      if (!e11) {
        report.fail("M2(F2) has no element [1 0;0 0]");
      } else if (!fr::is_right_strongly_regular(m2, *e11)
                 || !fr::is_left_strongly_regular(m2, *e11)) {
        report.fail("E11 is not strongly regular");
      } else if (fr::left_power_ideal(m2, *e11, 1)) {
        report.fail("R E11 is a two-sided ideal");
      }
      return report;
    }

  }  // namespace

  std::vector<SuiteInfo> const& registry() {
    static std::vector<SuiteInfo> const suites{
        {"confluence", "leftmost and rightmost rewriting agree on all words (maxlen 10)", confluence},
        {"order", "the monomial order is total: trichotomy (8), transitivity (6), examples", order},
        {"mainlemma", "m1 m2 is reduced or below m2 after reduction (maxlen 7)", mainlemma},
        {"mainthm", "r(f) = 0 when f has a monomial ending in x (maxlen 5, 500 samples, L 10)",
         mainthm},
        {"rann", "r(f) = r(a^k) for f in Ra (200 samples, L 10)", rann},
        {"lann", "l(f) = R a^n for the least n with a^n f = 0 (200 samples, L 10)", lann},
        {"nr", "chain and power nilpotency oracles agree (maxlen 3 exhaustive, 500 samples, K 12)",
         nr},
        {"zerodivisors", "left zero divisors are Ra, right ones are killed by a^n (maxlen 3, L 10)",
         zerodivisors},
        {"symm", "a = a^2 x but a != y a^2; f = y f^2 only for units (100 samples, L 10)", symm},
        {"aa", "f + g + fg stays outside Ra (500 samples)", aa},
        {"unitprop", "units of F2[a] and of the form 1 + f (maxlen 6, 200 samples, L 12)",
         unitprop},
        {"uu", "1 + nilpotent is a unit; other elements have no right inverse (300 + 300, L 12)",
         uu},
        {"jrad", "f x^k leaves Ra, N + U in U, U N and N U in N (200 + 200, K 8)", jrad},
        {"mccoy", "linear McCoy criterion on both sides (200 samples, L 8)", mccoy},
        {"uniform", "S s, S s t, ... independent for s = 1 + ax, t = a (6 ideals, L 8)", uniform},
        {"kn", "k_n identities (maxlen 6)", kn_suite},
        {"nilsubring", "sums and products of nilpotents are nilpotent (200 samples)", nilsubring},
        {"jacobson", "d_n identities (8), matrix units, normal-form product, a -> b, x -> c",
         jacobson_suite},
        {"finring", "finite-ring equivalences and invariants over the catalog", finring_suite},
    };
    return suites;
  }

  SuiteInfo const* find_suite(std::string_view name) {
    for (auto const& s : registry()) {
      if (s.name == name) {
        return &s;
      }
    }
    return nullptr;
  }

  SuiteReport run_suite(std::string_view name, SuiteOptions const& options) {
    auto const* info = find_suite(name);
    if (info == nullptr) {
      throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
    }
    SuiteOptions local = options;
    local.seed         = derive_seed(options.seed, name);
    auto report        = info->run(local);
    auto const& params = report.params();
    if (std::none_of(params.begin(), params.end(), [](auto const& p) { return p.first == "seed"; })) {
      report.param("seed", options.seed);
    }
    return report;
  }

}  // namespace dk::suites
