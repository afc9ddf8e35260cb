// skewlab: command-line front end for the property checkers and theorem
// verifiers.

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "skewlab/catalog.hpp"
#include "skewlab/error.hpp"
#include "skewlab/properties.hpp"
#include "skewlab/skewpoly.hpp"
#include "skewlab/theorems.hpp"

namespace {

  using namespace skewlab;

  constexpr int exit_ok           = 0;
  constexpr int exit_refuted      = 1;
  constexpr int exit_fails        = 2;
  constexpr int exit_inconclusive = 3;
  constexpr int exit_usage        = 64;
  constexpr int exit_definitions  = 65;

  struct Options {
    std::string              ring;
    std::string              sigma  = "id";
    std::string              module = "regular";
    int                      degree = 2;
    std::optional<long long> budget;
    std::string              format = "text";
    std::vector<std::string> defs;
    bool                     all = false;
    std::string              props;
    std::string              theorem;
    std::string              element;
    std::string              dump_id;
    std::string              f, g;
  };

  void selector_flags(CLI::App* cmd, Options& o, bool with_all) {
    cmd->add_option("--ring", o.ring, "ring id");
    cmd->add_option("--sigma", o.sigma, "endomorphism name")->capture_default_str();
    cmd->add_option("--module", o.module, "module name")->capture_default_str();
    if (with_all) {
      cmd->add_flag("--all", o.all, "every instance of the catalog");
    }
  }

  void run_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--degree", o.degree, "degree bound D")->check(CLI::NonNegativeNumber)->capture_default_str();
    cmd->add_option("--budget", o.budget, "enumeration budget (elementary products)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", o.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  }

  EnumerationBudget budget_of(Options const& o) {
    EnumerationBudget b;
    if (char const* env = std::getenv("SKEWLAB_BUDGET")) {
      std::string_view s(env);
      std::uint64_t    v = 0;
      auto [p, ec]       = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || p != s.data() + s.size() || v == 0) {
        throw UsageError("SKEWLAB_BUDGET must be a positive integer, got '" + std::string(s) + "'");
      }
      b.pairs = v;
    }
    if (o.budget) {
      b.pairs = static_cast<std::uint64_t>(*o.budget);
    }
    return b;
  }

  Catalog catalog_of(Options const& o) {
    Catalog c;
    for (auto const& path : o.defs) {
      c.add(load_definitions(path));
    }
    return c;
  }

  // --all: everything. Otherwise --ring is required; --sigma and --module
  // narrow the ring's instances only when given explicitly.
  std::vector<Instance> select(Catalog const& c, Options const& o, CLI::App const* cmd, bool filter) {
    if (o.all) {
      return c.instances();
    }
    if (o.ring.empty()) {
      throw UsageError("give --ring <id> or --all");
    }
    if (!filter) {
      return {c.resolve(o.ring, o.sigma, o.module)};
    }
    auto const* e = c.find(o.ring);
    if (!e) {
      c.resolve(o.ring, o.sigma, o.module);  // throws with the list of rings
    }
    bool const by_sigma  = cmd->count("--sigma") > 0;
    bool const by_module = cmd->count("--module") > 0;
    if (by_sigma || by_module) {
      c.resolve(o.ring, by_sigma ? o.sigma : "id", by_module ? o.module : "regular");
    }
    std::vector<Instance> out;
    for (auto const& inst : c.instances()) {
      if (inst.ring->name() == o.ring && (!by_sigma || inst.sigma->name() == o.sigma)
          && (!by_module || inst.module->name() == o.module)) {
        out.push_back(inst);
      }
    }
    return out;
  }

  std::string witness_text(Witness const& w) {
    std::string s;
    for (auto const& [k, v] : w) {
      s += (s.empty() ? "" : " ") + k + "=" + v;
    }
    return s;
  }

  void print_property(std::ostream& out, PropertyReport const& r, std::string const& indent = "") {
    out << indent << r.property << ": " << to_string(r.verdict);
    if (r.verdict == Verdict::holds_up_to_degree && r.degree_bound) {
      out << " (D=" << *r.degree_bound << ")";
    }
    if (!r.witness.empty()) {
      out << "  " << witness_text(r.witness);
    }
    out << "\n";
    if (!r.note.empty()) {
      out << indent << "  " << r.note << "\n";
    }
  }

  void print_theorem(std::ostream& out, TheoremReport const& r) {
    out << r.theorem << " " << r.instance << " D=" << r.degree_bound << ": " << to_string(r.status)
        << " (hypotheses " << to_string(r.hypotheses) << ", conclusion " << to_string(r.conclusion)
        << ")\n";
    if (r.status == TheoremStatus::refuted || r.status == TheoremStatus::inconclusive) {
      for (auto const& p : r.evidence) {
        print_property(out, p, "  ");
      }
    }
  }

  std::vector<std::string> split_props(std::string const& list) {
    std::vector<std::string> out;
    std::stringstream        ss(list);
    for (std::string item; std::getline(ss, item, ',');) {
      if (!item.empty()) {
        out.push_back(item);
      }
    }
    return out;
  }

  int cmd_check(Options const& o) {
    if (o.ring.empty()) {
      throw UsageError("check needs --ring");
    }
    auto const catalog = catalog_of(o);
    auto const inst    = catalog.resolve(o.ring, o.sigma, o.module);
    auto props = split_props(o.props);
    if (props.empty()) {
      props = {"c1", "c2", "compatible", "semicommutative", "sigma-semicommutative", "reduced",
               "sigma-reduced", "star", "pp", "pq-baer", "quasi-baer", "baer", "sigma-skew-armendariz"};
    }
    auto const& valid = property_ids();
    for (auto const& p : props) {
      if (std::find(valid.begin(), valid.end(), p) == valid.end()) {
        check_property(inst, p, DegreeBound(o.degree));  // throws UsageError listing ids
      }
    }
    bool any_fail = false, any_inconclusive = false;
    for (auto const& p : props) {
      auto const rep = check_property(inst, p, DegreeBound(o.degree), budget_of(o));
      any_fail |= rep.verdict == Verdict::fails;
      any_inconclusive |= rep.verdict == Verdict::inconclusive;
      if (o.format == "json") {
        std::cout << to_json(rep) << "\n";
      } else {
        print_property(std::cout, rep);
      }
    }
    return any_fail ? exit_fails : any_inconclusive ? exit_inconclusive : exit_ok;
  }

  void summarize(std::ostream& out, std::vector<TheoremReport> const& reports) {
    std::size_t counts[4] = {};
    for (auto const& r : reports) {
      ++counts[static_cast<int>(r.status)];
    }
    out << reports.size() << " reports: " << counts[0] << " verified, " << counts[1] << " vacuous, "
        << counts[3] << " inconclusive, " << counts[2] << " REFUTED\n";
  }

  void emit(Options const& o, std::vector<TheoremReport> reports) {
    if (o.format == "json") {
      std::sort(reports.begin(), reports.end(), [](auto const& a, auto const& b) {
        return std::tie(a.theorem, a.instance) < std::tie(b.theorem, b.instance);
      });
      for (auto const& r : reports) {
        std::cout << to_json(r) << "\n";
      }
      summarize(std::cerr, reports);
    } else {
      summarize(std::cout, reports);
    }
  }

  bool any_refuted(std::vector<TheoremReport> const& reports) {
    return std::any_of(reports.begin(), reports.end(), [](auto const& r) {
      return r.status == TheoremStatus::refuted;
    });
  }

  int cmd_suite(Options const& o, CLI::App const* cmd) {
    auto const                 catalog = catalog_of(o);
    auto const                 insts   = select(catalog, o, cmd, false);
    auto const                 budget  = budget_of(o);
    std::vector<TheoremReport> all;
    for (auto const& inst : insts) {
      for (auto& r : run_suite(inst, DegreeBound(o.degree), budget)) {
        if (o.format == "text") {
          print_theorem(std::cout, r);
        }
        all.push_back(std::move(r));
      }
    }
    emit(o, all);
    return any_refuted(all) ? exit_refuted : exit_ok;
  }

  int cmd_hunt(Options const& o, CLI::App const* cmd) {
    auto const& spec    = find_theorem(o.theorem);
    auto const  catalog = catalog_of(o);
    auto const  insts   = select(catalog, o, cmd, true);
    auto        result  = hunt(insts, spec, DegreeBound(o.degree), budget_of(o));
    if (o.format == "json") {
      emit(o, result.anomalies);
      std::cerr << result.verified << " verified instances not listed\n";
    } else {
      for (auto const& r : result.anomalies) {
        print_theorem(std::cout, r);
      }
      std::cout << spec.id << ": " << result.verified << " verified, " << result.anomalies.size()
                << " listed\n";
    }
    return any_refuted(result.anomalies) ? exit_refuted : exit_ok;
  }

  int cmd_catalog_list(Options const& o) {
    auto const catalog = catalog_of(o);
    for (auto const& e : catalog.entries()) {
      std::string endos, mods;
      for (auto const& s : e.endomorphisms) {
        endos += (endos.empty() ? "" : ",") + s->name();
      }
      for (auto const& m : e.modules) {
        mods += (mods.empty() ? "" : ",") + m->name();
      }
      std::cout << e.id << " size=" << e.ring->size() << " sigma=" << endos << " modules=" << mods
                << " (" << to_string(e.provenance) << ")\n";
    }
    return exit_ok;
  }

  int cmd_catalog_dump(Options const& o) {
    auto const  catalog = catalog_of(o);
    auto const* e       = catalog.find(o.dump_id);
    if (!e) {
      catalog.resolve(o.dump_id, "id", "regular");
    }
    std::cout << dump_definitions(*e);
    return exit_ok;
  }

  std::string generated(std::optional<Elem> e) {
    return e ? std::to_string(*e) : "none";
  }

  int cmd_ann(Options const& o) {
    auto const catalog = catalog_of(o);
    auto const inst    = catalog.resolve(o.ring, o.sigma, o.module);
    auto const lit     = parse_poly_literal(o.element, inst.module->size(), true, std::nullopt);
    bool const constant = lit.offset == 0 && lit.coeffs.size() <= 1;
    if (constant) {
      Elem const m  = lit.coeffs.empty() ? inst.module->zero() : lit.coeffs[0];
      auto const rm = annihilator(*inst.module, std::vector<Elem>{m}, AnnihilatorMode::set);
      auto const rmr
          = annihilator(*inst.module, std::vector<Elem>{m}, AnnihilatorMode::cyclic_submodule);
      auto gen_m  = find_idempotent_generator(RightIdeal{inst.ring, rm.elements});
      auto gen_mr = find_idempotent_generator(RightIdeal{inst.ring, rmr.elements});
      std::cout << "r(m)  = " << format_set(rm.elements) << "  generator " << generated(gen_m) << "\n"
                << "r(mR) = " << format_set(rmr.elements) << "  generator " << generated(gen_mr) << "\n";
      return exit_ok;
    }
    Extension const ext = lit.offset < 0 ? Extension::laurent : Extension::poly;
    std::cout << "m(x) = " << format_poly(lit.coeffs, lit.offset, inst.module->zero()) << " in "
              << to_string(ext) << ", annihilators up to degree " << o.degree << "\n";
    for (auto kind : {ExtensionKind::pp, ExtensionKind::pq_baer}) {
      auto const a = extension_annihilator(inst, ext, kind, lit.coeffs, lit.offset, DegreeBound(o.degree));
      std::cout << (kind == ExtensionKind::pp ? "r(m(x))" : "r(m(x)R[x;sigma])") << ": "
                << a.elements.size() << " elements, ";
      switch (a.outcome) {
        case ExtensionAnnihilator::Outcome::generated:
          std::cout << "generated by " << format_poly(a.generator, 0, inst.ring->zero())
                    << (a.constructive ? " (coefficient product)" : "") << "\n";
          break;
        case ExtensionAnnihilator::Outcome::not_generated:
          std::cout << "no idempotent generator\n";
          break;
        case ExtensionAnnihilator::Outcome::undetermined:
          std::cout << "no constant idempotent generator; undetermined\n";
          break;
      }
    }
    return exit_ok;
  }

  int cmd_idempotents(Options const& o) {
    auto const  catalog = catalog_of(o);
    auto const* e       = catalog.find(o.ring);
    if (!e) {
      catalog.resolve(o.ring, "id", "regular");
    }
    std::cout << format_set(idempotents(*e->ring)) << "\n";
    return exit_ok;
  }

  int cmd_mul(Options const& o) {
    auto const catalog = catalog_of(o);
    auto const inst    = catalog.resolve(o.ring, o.sigma, "regular");
    auto const size    = inst.ring->size();
    auto const f       = parse_poly_literal(o.f, size, false);
    auto const g       = parse_poly_literal(o.g, size, false);
    auto       pad     = [](PolyLiteral const& p) {
      std::vector<Elem> c(static_cast<std::size_t>(p.offset), 0);
      c.insert(c.end(), p.coeffs.begin(), p.coeffs.end());
      return c;
    };
    auto const h = ring_mul(SkewPoly(inst.sigma, pad(f)), SkewPoly(inst.sigma, pad(g)));
    std::cout << format_poly(h.coeffs(), 0, inst.ring->zero()) << "\n";
    return exit_ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skewlab: finite rings, skew polynomial extensions and annihilator conditions"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "run property checks on one instance");
  selector_flags(check, o, false);
  run_flags(check, o);
  check->add_option("--props", o.props, "comma-separated property ids");

  auto* suite = app.add_subcommand("suite", "run every theorem on the selected instances");
  selector_flags(suite, o, true);
  run_flags(suite, o);

  auto* hunt_cmd = app.add_subcommand("hunt", "list instances where a theorem is not verified");
  hunt_cmd->add_option("theorem", o.theorem, "theorem id")->required();
  selector_flags(hunt_cmd, o, true);
  run_flags(hunt_cmd, o);

  auto* cat = app.add_subcommand("catalog", "inspect the catalog");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "list rings, endomorphisms and modules");
  auto* dump = cat->add_subcommand("dump", "print a ring as a definition file");
  dump->add_option("id", o.dump_id, "ring id")->required();

  auto* ann = app.add_subcommand("ann", "annihilators of a module element or polynomial");
  selector_flags(ann, o, false);
  ann->add_option("--element", o.element, "module element or polynomial literal")->required();
  ann->add_option("--degree", o.degree, "degree bound D")->check(CLI::NonNegativeNumber);

  auto* idem = app.add_subcommand("idempotents", "idempotents of a ring");
  idem->add_option("--ring", o.ring, "ring id")->required();

  auto* mul = app.add_subcommand("mul", "multiply two polynomials in R[x;sigma]");
  mul->add_option("--ring", o.ring, "ring id")->required();
  mul->add_option("--sigma", o.sigma, "endomorphism name");
  mul->add_option("--f", o.f, "left factor")->required();
  mul->add_option("--g", o.g, "right factor")->required();

  for (auto* cmd : {check, suite, hunt_cmd, list, dump, ann, idem, mul}) {
    cmd->add_option("--defs", o.defs, "definition file (repeatable)")->check(CLI::ExistingFile);
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (check->parsed()) {
      return cmd_check(o);
    }
    if (suite->parsed()) {
      return cmd_suite(o, suite);
    }
    if (hunt_cmd->parsed()) {
      return cmd_hunt(o, hunt_cmd);
    }
    if (list->parsed()) {
      return cmd_catalog_list(o);
    }
    if (dump->parsed()) {
      return cmd_catalog_dump(o);
    }
    if (ann->parsed()) {
      return cmd_ann(o);
    }
    if (idem->parsed()) {
      return cmd_idempotents(o);
    }
    return cmd_mul(o);
  } catch (ParseError const& e) {
    std::cerr << "skewlab: " << e.what() << "\n";
    return e.file() == "<literal>" ? exit_usage : exit_definitions;
  } catch (DefinitionError const& e) {
    std::cerr << "skewlab: " << e.what() << "\n";
    return exit_definitions;
  } catch (UsageError const& e) {
    std::cerr << "skewlab: " << e.what() << "\n";
    return exit_usage;
  } catch (UnsupportedOperation const& e) {
    std::cerr << "skewlab: " << e.what() << "\n";
    return exit_usage;
  } catch (ContractViolation const& e) {
    std::cerr << "skewlab: " << e.what() << "\n";
    return exit_usage;
  } catch (Error const& e) {
    std::cerr << "skewlab: internal error: " << e.what() << "\n";
    return 70;
  }
}
