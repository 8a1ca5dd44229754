#include "cli.hpp"

#include <CLI11.hpp>

#include <json.hpp>
#include <optional>
#include <sstream>

#include "dk/element.hpp"
#include "dk/errors.hpp"
#include "dk/finring.hpp"
#include "dk/jacobson.hpp"
#include "dk/solver.hpp"
#include "dk/structure.hpp"
#include "dk/suites.hpp"

namespace dk::cli {

  namespace {

    struct Settings {
      std::vector<std::string> exprs;
      unsigned                 cap   = structure::default_chain_cap;
      std::optional<unsigned>  power_check;
      bool                     show_chain = false;
      std::size_t              bound      = solver::default_annihilator_bound;

      unsigned    jn = 1;
      unsigned    ji = 0, jj = 0;
      std::string ring_spec;
      std::string ring_action;

      std::string                suite;
      bool                       all  = false;
      bool                       json = false;
      bool                       serial = false;
      std::uint64_t              seed   = 1;
      std::optional<std::size_t> maxlen, samples, verify_bound;
      std::optional<unsigned>    power;
    };

    ReducedMonomial single_monomial(std::string const& text) {
      auto const f = parse_element(text);
      if (f.support().size() != 1) {
        throw ParseError("'" + text + "' is not a single monomial");
      }
      return f.support().front();
    }

    void print_basis(std::ostream& out, std::vector<RingElement> const& basis) {
      out << "dim=" << basis.size() << "\n";
      for (auto const& h : basis) {
        out << to_string(h) << "\n";
      }
    }

    int nilpotent(Settings const& s, std::ostream& out) {
      auto const f = parse_element(s.exprs.at(0));
      auto const v = structure::chain_nilpotency(f, s.cap);
      if (v.status == structure::NilStatus::undecided) {
        out << "undecided reason=" << structure::to_string(v.reason) << "\n";
        return undecided;
      }
      auto const K = s.power_check.value_or(structure::default_power_bound);
      auto const p = structure::power_nilpotency(f, K);
      if (v.nilpotent()) {
        out << "nilpotent index=";
        if (p) {
          out << *p;
        } else {
          out << ">" << K;
        }
        out << " chain_len=" << v.chain.size() << "\n";
      } else {
        out << "not-nilpotent reason=" << structure::to_string(v.reason) << "\n";
      }
      if (s.show_chain) {
        for (std::size_t i = 0; i < v.chain.size(); ++i) {
          out << "r" << i + 1 << " = " << to_string(v.chain[i]) << "\n";
        }
      }
      if (s.power_check && v.nilpotent() != p.has_value()) {
        out << "FAIL power oracle (K=" << K << ") disagrees\n";
        return failed;
      }
      return ok;
    }

    int invert(Settings const& s, std::ostream& out) {
      auto const f   = parse_element(s.exprs.at(0));
      auto const inv = structure::inverse(f, s.cap);
      if (!inv) {
        out << "not-unit\n";
      } else {
        out << to_string(*inv) << "\n";
      }
      return ok;
    }

    int classify_command(Settings const& s, std::ostream& out) {
      auto const f = parse_element(s.exprs.at(0));
      auto const z = structure::zero_divisor_class(f, static_cast<unsigned>(s.bound));
      out << "left_zd=" << (z.left_zd ? "true" : "false") << " right_zd=";
      if (z.right_zd) {
        out << *z.right_zd;
      } else {
        out << "none";
      }
      out << "\n";
      return ok;
    }

    int finring_command(Settings const& s, std::ostream& out) {
      auto const r = finring::parse_ring(s.ring_spec);
      if (s.ring_action == "equivalences") {
        auto const report = finring::verify_equivalences(r);
        out << report.text();
        return report.passed() ? ok : failed;
      }
      out << "ring " << r.label() << " order=" << r.order() << "\n";
      for (auto const& [name, value] : finring::ring_predicates(r)) {
        out << name << "=" << (value ? "true" : "false") << "\n";
      }
      bool const exchange = r.order() <= finring::exchange_cap;
      out << "element";
      for (auto const& name : finring::element_predicate_names()) {
        out << " " << name;
      }
      out << "\n";
      for (auto const& row : finring::element_table(r)) {
        out << r.name(row.id);
        for (std::size_t i = 0; i < row.values.size(); ++i) {
          bool const last = i + 1 == row.values.size();
          out << " " << (last && !exchange ? "-" : row.values[i] ? "1" : "0");
        }
        out << "\n";
      }
      return ok;
    }

    int verify(Settings const& s, std::ostream& out, std::ostream& err) {
      suites::SuiteOptions options;
      options.seed    = s.seed;
      options.maxlen  = s.maxlen;
      options.samples = s.samples;
      options.bound   = s.verify_bound;
      options.power   = s.power;
      options.exec    = s.serial ? Exec::serial : Exec::parallel;

      std::vector<std::string> names;
      if (s.all) {
        for (auto const& info : suites::registry()) {
          names.emplace_back(info.name);
        }
      } else if (!s.suite.empty()) {
        if (suites::find_suite(s.suite) == nullptr) {
          err << "unknown suite '" << s.suite << "'; known suites:";
          for (auto const& info : suites::registry()) {
            err << " " << info.name;
          }
          err << "\n";
          return usage;
        }
        names.push_back(s.suite);
      } else {
        err << "verify needs a suite name or --all\n";
        return usage;
      }

      bool                   passed = true;
      nlohmann::ordered_json reports = nlohmann::ordered_json::array();
      for (auto const& name : names) {
        auto const report = suites::run_suite(name, options);
        passed            = passed && report.passed();
        if (s.json) {
          reports.push_back(report.json());
        } else if (s.all) {
          out << name << " " << report.text();
        } else {
          out << report.text();
        }
        out.flush();
      }
      if (s.json) {
        out << (s.all ? reports : reports.front()).dump(2) << "\n";
      }
      return passed ? ok : failed;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Workbench for R = F2<a,x : a = a^2 x>, the Jacobson algebra and small finite rings",
                 "dkwb"};
    app.require_subcommand(1);
    Settings s;

    auto* reduce = app.add_subcommand("reduce", "print the normal form of an element");
    reduce->add_option("expr", s.exprs, "element, e.g. a^2x + 1")->required()->expected(1);

    auto* mul = app.add_subcommand("mul", "multiply two elements");
    mul->add_option("exprs", s.exprs, "two elements")->required()->expected(2);

    auto* cmp = app.add_subcommand("cmp", "compare two monomials: prints <, = or >");
    cmp->add_option("monos", s.exprs, "two monomials")->required()->expected(2);

    auto* max = app.add_subcommand("max", "largest monomial of an element");
    max->add_option("expr", s.exprs)->required()->expected(1);

    auto* nil = app.add_subcommand("nilpotent", "chain-oracle nilpotency verdict");
    nil->add_option("expr", s.exprs)->required()->expected(1);
    nil->add_option("--cap", s.cap, "chain iteration cap")->capture_default_str();
    nil->add_option("--power-check", s.power_check, "cross-check against f^k = 0 for k <= K");
    nil->add_flag("--chain", s.show_chain, "print the chain r_1, ..., r_k");

    auto* inv = app.add_subcommand("invert", "inverse of a unit, or not-unit");
    inv->add_option("expr", s.exprs)->required()->expected(1);
    inv->add_option("--cap", s.cap, "chain iteration cap")->capture_default_str();

    auto add_bounded = [&](char const* name, char const* help) {
      auto* sub = app.add_subcommand(name, help);
      sub->add_option("expr", s.exprs)->required()->expected(1);
      sub->add_option("--bound", s.bound, "length bound L")->capture_default_str();
      return sub;
    };
    auto* rann     = add_bounded("rann", "basis of the right annihilator at length <= L");
    auto* lann     = add_bounded("lann", "basis of the left annihilator at length <= L");
    auto* classify = add_bounded("classify", "left / right zero-divisor class");
    auto* srsolve  = add_bounded("srsolve", "some y with y f^2 = f at length <= L");

    auto* jac   = app.add_subcommand("jacobson", "the algebra F2<b,c : bc = 1>");
    jac->require_subcommand(1);
    auto* jac_d = jac->add_subcommand("d", "d_n = b + c^n b^(n+1) and its nilpotency index");
    jac_d->add_option("n", s.jn)->required()->check(CLI::Range(1u, 1000u));
    auto* jac_unit = jac->add_subcommand("unit", "matrix unit E_ij = c^i (1 + cb) b^j");
    jac_unit->add_option("i", s.ji)->required();
    jac_unit->add_option("j", s.jj)->required();
    auto* jac_verify = jac->add_subcommand("verify", "run the jacobson suite");

    auto* fin = app.add_subcommand("finring", "predicates of a small finite ring");
    fin->add_option("spec", s.ring_spec, "e.g. Z4, M2(F2), T3(F2), F2[t]/t^3, Z4 x M2(F2)")
        ->required();
    fin->add_option("action", s.ring_action)
        ->required()
        ->check(CLI::IsMember({"predicates", "equivalences"}));

    auto* ver = app.add_subcommand("verify", "run verification suites");
    ver->add_option("suite", s.suite, "suite name");
    ver->add_flag("--all", s.all, "run every suite");
    ver->add_option("--seed", s.seed, "base seed")->capture_default_str();
    ver->add_flag("--json", s.json, "machine-readable report");
    ver->add_flag("--serial", s.serial, "single-threaded sweeps");
    ver->add_option("--maxlen", s.maxlen, "exhaustive length bound");
    ver->add_option("--samples", s.samples, "sample count");
    ver->add_option("--bound", s.verify_bound, "solver length bound L");
    ver->add_option("--power", s.power, "power / witness bound K");

    std::vector<char const*> argv{"dkwb"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      auto const code = app.exit(e, out, err);
      return code == 0 ? ok : usage;
    }

    try {
      if (reduce->parsed()) {
        out << to_string(parse_element(s.exprs[0])) << "\n";
      } else if (mul->parsed()) {
        out << to_string(parse_element(s.exprs[0]) * parse_element(s.exprs[1])) << "\n";
      } else if (cmp->parsed()) {
        auto const o = dk::cmp(single_monomial(s.exprs[0]), single_monomial(s.exprs[1]));
        out << (o == Order::less ? "<" : o == Order::equal ? "=" : ">") << "\n";
      } else if (max->parsed()) {
        out << to_string(max_monomial(parse_element(s.exprs[0]))) << "\n";
      } else if (nil->parsed()) {
        return nilpotent(s, out);
      } else if (inv->parsed()) {
        return invert(s, out);
      } else if (rann->parsed()) {
        print_basis(out, solver::right_annihilator(parse_element(s.exprs[0]), s.bound));
      } else if (lann->parsed()) {
        print_basis(out, solver::left_annihilator(parse_element(s.exprs[0]), s.bound));
      } else if (classify->parsed()) {
        return classify_command(s, out);
      } else if (srsolve->parsed()) {
        auto const y = solver::solve_sr_equation(parse_element(s.exprs[0]), s.bound);
        out << (y ? to_string(*y) : std::string("none")) << "\n";
      } else if (jac_d->parsed()) {
        auto const d   = jacobson::d_element(s.jn);
        auto const idx = jacobson::nilpotency_index(d, s.jn + 2);
        out << jacobson::to_string(d) << " index=";
        out << (idx ? std::to_string(*idx) : ">" + std::to_string(s.jn + 2)) << "\n";
      } else if (jac_unit->parsed()) {
        out << jacobson::to_string(jacobson::matrix_unit(s.ji, s.jj)) << "\n";
      } else if (jac_verify->parsed()) {
        auto const report = suites::run_suite("jacobson", {});
        out << report.text();
        return report.passed() ? ok : failed;
      } else if (fin->parsed()) {
        return finring_command(s, out);
      } else if (ver->parsed()) {
        return verify(s, out, err);
      }
    } catch (UndecidedError const& e) {
      out << "undecided: " << e.what() << "\n";
      return undecided;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return usage;
    } catch (std::invalid_argument const& e) {
      err << "error: " << e.what() << "\n";
      return usage;
    }
    return ok;
  }

}  // namespace dk::cli
