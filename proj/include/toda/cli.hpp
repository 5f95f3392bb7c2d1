#pragma once

// Command-line surface: eleven subcommands over the library, each emitting a
// single JSON document on standard output (keys sorted, deterministic for
// fixed flags and seed). Diagnostics go to standard error. Exit codes:
// 0 success, 1 domain error or failed check, 2 usage error.

#include <cstdint>
#include <exception>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "toda/chains.hpp"
#include "toda/classify.hpp"
#include "toda/degree.hpp"
#include "toda/dsl.hpp"
#include "toda/equivariant.hpp"
#include "toda/graded.hpp"
#include "toda/space.hpp"

namespace toda::cli {

using nlohmann::json;

namespace detail {

inline json ranks_to_json(const graded::PoincarePolynomial& p) {
  json out = json::object();
  for (const auto& [d, r] : p.ranks) out[std::to_string(d)] = r;
  return out;
}

inline json ranks_to_json(const std::map<int, long long>& ranks) {
  json out = json::object();
  for (const auto& [d, r] : ranks) out[std::to_string(d)] = r;
  return out;
}

inline json ring_to_json(const graded::RingPresentation& ring) {
  json gens = json::array();
  for (const auto& g : ring.generators)
    gens.push_back(json{{"name", g.name}, {"degree", g.degree}});
  json rels = json::array();
  for (const auto& rel : ring.relations) rels.push_back(ring.relation_string(rel));
  json params = json::object();
  for (const auto& [k, v] : ring.params) params[k] = v;
  return json{{"generators", gens},
              {"relations", rels},
              {"basis_degrees", ring.basis_degrees},
              {"params", params},
              {"iso_class", ring.iso_class}};
}

inline json report_to_json(const equivariant::FixedSetReport& r) {
  return json{{"total", dsl::to_dsl(r.total)},
              {"fixed", dsl::to_dsl(r.fixed)},
              {"rank_total", r.rank_total},
              {"rank_fixed", r.rank_fixed},
              {"chi_total", r.chi_total},
              {"chi_fixed", r.chi_fixed},
              {"tnhz", r.tnhz}};
}

inline json cases_to_json(const std::vector<classify::FixedSetType>& cases) {
  json out = json::array();
  for (const auto& f : cases) out.push_back(f.to_string());
  return out;
}

inline void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"rational cohomology calculus for circle actions on Toda-type spaces"};
  app.require_subcommand(1);

  std::string expr_text;
  long long n = 0, a = 0, b = 0;
  std::string tnhz_text;
  bool p2_allow_odd = false, p2_full_range = false, statement_literal = false;
  std::string map_name;
  long long samples = 2000000;
  std::uint64_t seed = 0;
  int workers = 1;
  std::string case_id;
  bool all_cases = false;

  auto* cmd_cohomology =
      app.add_subcommand("cohomology", "ranks, total rank and Euler characteristic");
  cmd_cohomology->add_option("expr", expr_text, "space expression")->required();

  auto* cmd_euler = app.add_subcommand("euler", "Euler characteristic of a space expression");
  cmd_euler->add_option("expr", expr_text, "space expression")->required();

  auto* cmd_ring =
      app.add_subcommand("ring", "ring presentation of toda(...), cone(...) or P(...)");
  cmd_ring->add_option("expr", expr_text, "space expression")->required();

  auto* cmd_classify_type =
      app.add_subcommand("classify-type", "the four-way (a,b) classification");
  cmd_classify_type->add_option("--n", n, "degree parameter")->required();
  cmd_classify_type->add_option("--a", a, "coefficient in u1^2 = a u2")->required();
  cmd_classify_type->add_option("--b", b, "coefficient in u1 u2 = b u3")->required();

  auto* cmd_fixed_set = app.add_subcommand("fixed-set", "fixed set of an action expression");
  cmd_fixed_set->add_option("expr", expr_text, "action expression")->required();

  auto* cmd_report =
      app.add_subcommand("report", "full fixed-set report with rank and Euler checks");
  cmd_report->add_option("expr", expr_text, "action expression")->required();

  auto add_axiom_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--p2-allow-odd", p2_allow_odd,
                  "admit odd-degree P2 components (rationally degenerate branch)");
    cmd->add_flag("--p2-full-range", p2_full_range,
                  "let the P2 degree range up to 3n instead of n");
  };

  auto* cmd_classify =
      app.add_subcommand("classify", "enumerate admissible fixed-set types");
  cmd_classify->add_option("--n", n, "degree parameter")->required();
  cmd_classify->add_option("--tnhz", tnhz_text, "rank equality holds: yes or no")
      ->required()
      ->check(CLI::IsMember({"yes", "no"}));
  add_axiom_flags(cmd_classify);

  auto* cmd_compare =
      app.add_subcommand("compare-theorem", "diff the enumerator against the case list");
  cmd_compare->add_option("--n", n, "degree parameter")->required();
  cmd_compare->add_option("--tnhz", tnhz_text, "rank equality holds: yes or no")
      ->required()
      ->check(CLI::IsMember({"yes", "no"}));
  add_axiom_flags(cmd_compare);
  cmd_compare->add_flag("--statement-literal", statement_literal,
                        "compare against the bare statement instead of the refined cases");

  auto* cmd_degree = app.add_subcommand("degree", "bidegree and Hopf invariant of a map");
  cmd_degree->add_option("--map", map_name, "phi, cayley1, cayley2 or cayley3")
      ->required()
      ->check(CLI::IsMember({"phi", "cayley1", "cayley2", "cayley3"}));
  cmd_degree->add_option("--n", n, "ambient dimension (phi only; even, >= 2)");
  cmd_degree->add_option("--samples", samples, "Monte Carlo samples (default 2000000)");
  cmd_degree->add_option("--seed", seed, "RNG seed (default 0)");
  cmd_degree->add_option("--workers", workers, "Monte Carlo worker count (default 1)");

  auto* cmd_gallery = app.add_subcommand("gallery", "run documented example constructions");
  cmd_gallery->add_option("--case", case_id, "single case id");
  cmd_gallery->add_flag("--all", all_cases, "run the full catalog");

  auto* cmd_oracle = app.add_subcommand("oracle-check", "compare ranks against the simplicial oracle");
  cmd_oracle->add_option("expr", expr_text, "space expression (points, spheres <= 4, wedge/join/susp)")
      ->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  classify::AxiomConfig axioms;
  axioms.p2_even_only = !p2_allow_odd;
  axioms.p2_max_n = !p2_full_range;

  try {
    if (app.got_subcommand(cmd_cohomology)) {
      space::SpaceExpr e = dsl::parse_space(expr_text);
      graded::PoincarePolynomial p = space::eval_poincare(e);
      detail::emit(out, json{{"expr", dsl::to_dsl(e)},
                             {"ranks", detail::ranks_to_json(p)},
                             {"total_rank", graded::total_rank(p)},
                             {"chi", graded::euler_char(p)}});
      return 0;
    }

    if (app.got_subcommand(cmd_euler)) {
      space::SpaceExpr e = dsl::parse_space(expr_text);
      detail::emit(out, json{{"chi", graded::euler_char(space::eval_poincare(e))}});
      return 0;
    }

    if (app.got_subcommand(cmd_ring)) {
      space::SpaceExpr e = dsl::parse_space(expr_text);
      graded::RingPresentation ring;
      if (e.kind == space::SpaceKind::Toda)
        ring = space::toda_ring(e.p1, e.p2, e.p3);
      else if (e.kind == space::SpaceKind::MappingCone)
        ring = space::mapping_cone_ring(e.p1, e.p2);
      else if (e.kind == space::SpaceKind::PTrunc)
        ring = space::ptrunc_ring(e.p1, e.p2);
      else
        throw std::invalid_argument(
            "ring: only toda(...), cone(...) and P(...) carry a ring presentation");
      detail::emit(out, detail::ring_to_json(ring));
      return 0;
    }

    if (app.got_subcommand(cmd_classify_type)) {
      space::RationalTypeLabel label = space::classify_type(n, a, b);
      detail::emit(out, json{{"n", n},
                             {"a", a},
                             {"b", b},
                             {"type", label.to_string()},
                             {"model", dsl::to_dsl(label.model())}});
      return 0;
    }

    if (app.got_subcommand(cmd_fixed_set)) {
      equivariant::ActionExpr act = dsl::parse_action(expr_text);
      space::SpaceExpr fixed = equivariant::fixed_set(act);
      detail::emit(out, json{{"action", dsl::to_dsl(act)},
                             {"total", dsl::to_dsl(equivariant::total_space(act))},
                             {"fixed", dsl::to_dsl(fixed)},
                             {"fixed_type", classify::to_fixed_set_type(fixed).to_string()},
                             {"ranks", detail::ranks_to_json(space::eval_poincare(fixed))}});
      return 0;
    }

    if (app.got_subcommand(cmd_report)) {
      equivariant::ActionExpr act = dsl::parse_action(expr_text);
      detail::emit(out, detail::report_to_json(equivariant::report(act)));
      return 0;
    }

    if (app.got_subcommand(cmd_classify)) {
      bool tnhz = tnhz_text == "yes";
      auto cases = classify::enumerate_fixed_types(n, tnhz, axioms);
      detail::emit(out, json{{"n", n},
                             {"tnhz", tnhz},
                             {"cases", detail::cases_to_json(cases)}});
      return 0;
    }

    if (app.got_subcommand(cmd_compare)) {
      bool tnhz = tnhz_text == "yes";
      auto enumerated = classify::enumerate_fixed_types(n, tnhz, axioms);
      auto reference = classify::theorem_reference_list(n, tnhz, axioms, statement_literal);
      classify::DiffReport diff = classify::compare(enumerated, reference);
      detail::emit(out, json{{"n", n},
                             {"tnhz", tnhz},
                             {"statement_literal", statement_literal},
                             {"enumerated_count", enumerated.size()},
                             {"theorem_count", reference.size()},
                             {"match", diff.empty()},
                             {"only_enumerated", detail::cases_to_json(diff.only_lhs)},
                             {"only_theorem", detail::cases_to_json(diff.only_rhs)}});
      return 0;
    }

    if (app.got_subcommand(cmd_degree)) {
      degree::MapDescriptor m;
      if (map_name == "phi") {
        if (n == 0)
          throw std::invalid_argument("degree: --n is required for the phi map");
        m = degree::phi_map(static_cast<int>(n));
      } else {
        m = degree::cayley_map(map_name.back() - '0');
      }
      degree::BidegreeOptions opt;
      opt.seed = seed;
      opt.mc_samples = samples;
      opt.workers = workers;
      degree::BidegreeResult res = degree::bidegree(m, opt);
      degree::HopfInvariant hopf = degree::hopf_from_bidegree(res.degrees);
      auto evidence = [](const degree::SliceEvidence& ev) {
        return json{{"method", ev.method},
                    {"estimate", ev.estimate},
                    {"std_error", ev.std_error}};
      };
      detail::emit(out, json{{"map", map_name},
                             {"n", m.n},
                             {"alpha", res.degrees.alpha},
                             {"beta", res.degrees.beta},
                             {"estimates",
                              json{{"alpha", evidence(res.alpha_evidence)},
                                   {"beta", evidence(res.beta_evidence)}}},
                             {"hopf",
                              json{{"magnitude", hopf.magnitude},
                                   {"signed_product", hopf.signed_product},
                                   {"note", hopf.note}}},
                             {"seed", seed}});
      return 0;
    }

    if (app.got_subcommand(cmd_gallery)) {
      if (all_cases != case_id.empty()) {
        // exactly one of --all / --case must be given; both or neither is a
        // usage error
        err << "gallery: pass exactly one of --all or --case ID\n";
        return 2;
      }
      auto run_case = [&](const equivariant::GalleryCase& c) {
        json doc{{"id", c.id},
                 {"n", c.n},
                 {"description", c.description},
                 {"action", dsl::to_dsl(c.action)},
                 {"claimed", c.claimed.to_string()},
                 {"tnhz_expected", c.tnhz_expected}};
        try {
          equivariant::FixedSetReport rep = equivariant::report(c.action);
          classify::FixedSetType actual = classify::to_fixed_set_type(rep.fixed);
          doc["report"] = detail::report_to_json(rep);
          doc["actual"] = actual.to_string();
          doc["match"] = actual == c.claimed && rep.tnhz == c.tnhz_expected;
        } catch (const std::exception& ex) {
          doc["error"] = ex.what();
          doc["match"] = false;
        }
        return doc;
      };
      if (!case_id.empty()) {
        json doc = run_case(equivariant::gallery_case(case_id));
        detail::emit(out, doc);
        return doc["match"].get<bool>() ? 0 : 1;
      }
      json cases = json::array();
      bool all_match = true;
      for (const auto& c : equivariant::gallery_catalog()) {
        json doc = run_case(c);
        all_match = all_match && doc["match"].get<bool>();
        cases.push_back(doc);
      }
      detail::emit(out, json{{"all_match", all_match}, {"cases", cases}});
      return all_match ? 0 : 1;
    }

    if (app.got_subcommand(cmd_oracle)) {
      space::SpaceExpr e = dsl::parse_space(expr_text);
      chains::OracleVerdict v = chains::oracle_check(e);
      detail::emit(out, json{{"expr", dsl::to_dsl(e)},
                             {"match", v.match},
                             {"chain_ranks", detail::ranks_to_json(v.chain_ranks)},
                             {"graded_ranks", detail::ranks_to_json(v.graded_ranks)}});
      return v.match ? 0 : 1;
    }
  } catch (const dsl::ParseError& pe) {
    err << pe.what() << "\n";
    return pe.semantic ? 1 : 2;
  } catch (const std::invalid_argument& ex) {
    err << ex.what() << "\n";
    return 1;
  } catch (const std::domain_error& ex) {
    err << ex.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << "\n";
    return 1;
  }

  err << "no command executed\n";
  return 2;
}

}  // namespace toda::cli
