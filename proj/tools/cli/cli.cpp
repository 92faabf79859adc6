#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "report.hpp"
#include "rbcm/crt.hpp"
#include "rbcm/error.hpp"

namespace rbcm::cli {

namespace {

struct Common {
  std::string format;  // empty: the command's default
  std::string output;
  int jobs = 1;
};

struct Emitted {
  Json json;
  std::string table;
};

std::vector<Int> parse_ints(const std::string& s) {
  std::vector<Int> out;
  static const std::regex num("-?[0-9]+");
  for (auto it = std::sregex_iterator(s.begin(), s.end(), num); it != std::sregex_iterator(); ++it) {
    out.push_back(std::stoll(it->str()));
  }
  return out;
}

// "3,9", "3x9" or "Z3xZ9".
AbelianType parse_group(const std::string& s) {
  const auto moduli = parse_ints(s);
  if (moduli.empty()) throw Error(ErrorKind::InvalidArgument, "empty group spec '" + s + "'");
  for (Int m : moduli) {
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "group spec '" + s + "' has a nonpositive factor");
  }
  return AbelianType::of_cyclic_factors(moduli);
}

void require_prime(Int p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

MapType parse_type(const std::string& t) { return t == "II" ? MapType::II : MapType::I; }

std::string str(Int v) { return std::to_string(v); }

// factor

Emitted run_factor(Int p, int k, int n, const std::string& target) {
  require_prime(p);
  const Modulus mod = Modulus::prime_power(p, k);
  std::vector<LabeledFactor> fs;
  Poly expected(mod);
  if (target == "plus") {
    fs = factor_xn_plus1(p, k, n);
    expected = Poly::binomial(mod, n, 1);
  } else if (target == "minus") {
    fs = factor_xn_minus1(p, k, n);
    expected = Poly::binomial(mod, n, -1);
  } else {
    fs = factor_radical_sum(p, k, n);
    const PrimeSplit sp = split_prime_part(n, p);
    expected = radical_sum(mod, sp.n_prime, sp.r);
  }
  const bool match = expand(fs, mod) == expected;
  Json list = Json::array();
  std::vector<std::vector<std::string>> rows{{"d", "l", "level", "mult", "factor"}};
  for (const auto& f : fs) {
    list.push_back(to_json(f));
    rows.push_back({str(f.label.d), str(f.label.ell), str(f.label.level), str(f.multiplicity), f.poly.to_string()});
  }
  Json j{{"command", "factor"}, {"p", p},          {"k", k},
         {"n", n},              {"target", target}, {"product", expected.to_string()},
         {"product_matches", match}, {"factors", list}};
  std::string table = render_table(rows) + "product " + expected.to_string() + (match ? " matches\n" : " MISMATCH\n");
  return {j, table};
}

// lift

Emitted run_lift(Int p, int k, const std::string& coeffs, int n, const std::string& target) {
  require_prime(p);
  const Poly q(Modulus::prime_power(p, 1), parse_ints(coeffs));
  const Modulus mod = Modulus::prime_power(p, k);
  const Poly t = Poly::binomial(mod, n, target == "plus" ? 1 : -1);
  const Poly lifted = hensel_lift_factor(q, p, k, t);
  Json j{{"command", "lift"},
         {"p", p},
         {"k", k},
         {"factor", to_json(q)},
         {"target", t.to_string()},
         {"lifted", to_json(lifted)},
         {"poly", lifted.to_string()}};
  return {j, q.to_string() + " -> " + lifted.to_string() + " dividing " + t.to_string() + " over Z_" + str(mod.N()) + "\n"};
}

// ideals

Emitted run_ideals(Int p, int k, int n, Int budget) {
  require_prime(p);
  Json list = Json::array();
  std::vector<std::vector<std::string>> rows{{"d", "l", "level", "factor", "ideals", "closed form", "ideal"}};
  for (const auto& f : factor_xn_plus1(p, k, n)) {
    Json entry = to_json(f);
    try {
      const IdealLattice lat = enumerate_ideals_containing(f, budget);
      Json ideals = Json::array();
      for (const auto& q : lat.ideals) ideals.push_back(to_json(q));
      entry["closed_form_used"] = lat.closed_form_used;
      entry["cross_checked"] = lat.cross_checked;
      entry["ideals"] = ideals;
      for (const auto& q : lat.ideals) {
        rows.push_back({str(f.label.d), str(f.label.ell), str(f.label.level), f.poly.to_string(), str(static_cast<Int>(lat.ideals.size())),
                        lat.closed_form_used ? "yes" : "no", q.to_string()});
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TooLarge) throw;
      entry["error"] = std::string(e.name());
      entry["detail"] = e.what();
      rows.push_back({str(f.label.d), str(f.label.ell), str(f.label.level), f.poly.to_string(), "-", "-", e.what()});
    }
    list.push_back(entry);
  }
  return {Json{{"command", "ideals"}, {"p", p}, {"k", k}, {"n", n}, {"factors", list}}, render_table(rows)};
}

// classify

Emitted members_report(const std::string& variant, const std::vector<FamilyMember>& members) {
  Json list = Json::array();
  std::vector<std::vector<std::string>> rows{{"#", "parameters", "group", "genus", "faces", "ideal"}};
  for (size_t i = 0; i < members.size(); ++i) {
    const auto& m = members[i];
    list.push_back(to_json(m));
    rows.push_back({str(static_cast<Int>(i)), m.params.describe(), m.group.to_string(), str(m.stats.genus),
                    str(m.stats.faces), m.ideal.to_string()});
  }
  Json j{{"command", "classify"}, {"variant", variant}, {"count", members.size()}, {"members", list}};
  return {j, render_table(rows)};
}

struct ClassifyArgs {
  std::string variant;
  Int p = 0;
  int k = 1, kp = 1, m = 1, n = 2;
  std::string type = "I";
  std::string group;
};

Emitted run_classify(const ClassifyArgs& a) {
  const std::string& v = a.variant;
  if (v != "twogroup" && v != "standard") require_prime(a.p);
  std::vector<FamilyMember> members;
  if (v == "cyclic") {
    members = classify_cyclic(a.p, a.k, a.n);
  } else if (v == "elementary") {
    members = classify_elementary(a.p, a.m, a.n, parse_type(a.type));
  } else if (v == "twogroup") {
    members = classify_2group(a.k, a.n);
  } else if (v == "coprime") {
    members = classify_coprime(a.p, a.k, a.n);
  } else if (v == "rank2") {
    members = classify_rank2(a.p, a.k, a.kp, a.n);
  } else {
    if (a.group.empty()) throw Error(ErrorKind::InvalidArgument, "standard needs --group");
    members = classify_standard(parse_group(a.group), a.n, parse_type(a.type));
  }
  return members_report(v, members);
}

// oracle

Emitted run_oracle(const std::string& group, int valence, int jobs) {
  const AbelianType g = parse_group(group);
  OracleOptions opts;
  opts.jobs = jobs;
  const auto maps = brute_force_rbcms(g, valence, opts);
  Json list = Json::array();
  std::vector<std::vector<std::string>> rows{{"#", "type", "genus", "faces", "omega"}};
  for (size_t i = 0; i < maps.size(); ++i) {
    list.push_back(to_json(maps[i]));
    std::string om;
    for (const auto& r : maps[i].omega_repr) om += (om.empty() ? "" : " ") + r;
    const MapStats s = trace_faces(maps[i]);
    rows.push_back({str(static_cast<Int>(i)), map_type_name(maps[i].type), str(s.genus), str(s.faces), om});
  }
  Json j{{"command", "oracle"}, {"group", to_json(g)}, {"valence", valence}, {"count", maps.size()}, {"maps", list}};
  return {j, g.to_string() + " valence " + str(valence) + ": " + str(static_cast<Int>(maps.size())) + " maps\n" + render_table(rows)};
}

// crosscheck

std::string report_table(const CrossCheckReport& r) {
  std::ostringstream os;
  os << r.group.to_string() << " valence " << r.valence << " type " << map_type_name(r.type) << ": oracle "
     << r.oracle_count << (r.ok() ? " ok" : " MISMATCH") << (r.oracle_only ? " (oracle only)" : "") << '\n';
  for (const auto& f : r.families) {
    os << "  " << family_name(f.family) << (f.perfect ? " perfect: " : " differs: ") << f.detail << '\n';
  }
  for (const auto& n : r.notes) os << "  note: " << n << '\n';
  return os.str();
}

Emitted run_ledger(int jobs) {
  OracleOptions opts;
  opts.jobs = jobs;
  const auto entries = discrepancy_ledger(opts);
  Json list = Json::array();
  bool all = true;
  std::vector<std::vector<std::string>> rows{{"topic", "instance", "printed", "implemented", "oracle", "resolved"}};
  for (const auto& e : entries) {
    list.push_back(to_json(e));
    all = all && e.implemented_agrees;
    rows.push_back({e.topic, e.instance, e.printed, e.implemented, str(e.oracle), e.implemented_agrees ? "yes" : "NO"});
  }
  return {Json{{"command", "crosscheck"}, {"ledger", list}, {"all_resolved", all}}, render_table(rows)};
}

Emitted run_crosscheck(const std::string& group, int valence, Int max_order, int max_n, int jobs) {
  OracleOptions opts;
  opts.jobs = jobs;
  std::vector<CrossCheckReport> reports;
  if (!group.empty()) {
    reports.push_back(cross_check(parse_group(group), valence, opts));
  } else {
    for (Int p : {2, 3, 5}) {
      for (int e = 1; ipow(p, e) <= max_order; ++e) {
        for (const auto& g : abelian_p_groups(p, e)) {
          const bool type2 = p == 2 && g.exponent() == 2;
          for (int n = 2; n <= max_n; ++n) reports.push_back(cross_check(g, type2 ? n : 2 * n, opts));
        }
      }
    }
  }
  Json list = Json::array();
  std::string table;
  bool all = true;
  for (const auto& r : reports) {
    list.push_back(to_json(r));
    table += report_table(r);
    all = all && r.ok();
  }
  return {Json{{"command", "crosscheck"}, {"all_ok", all}, {"reports", list}}, table};
}

// export-map

Emitted run_export(Int modulus, int n, const std::vector<std::string>& gens, const std::string& context,
                   const std::string& type) {
  const Modulus mod = Modulus::of(modulus);
  if (!mod.is_prime_power()) throw Error(ErrorKind::InvalidArgument, "export-map needs a prime-power modulus");
  const Poly ctx = context.empty() ? Poly::binomial(mod, n, 1) : Poly(mod, parse_ints(context));
  std::vector<Poly> polys;
  for (const auto& g : gens) polys.push_back(Poly(mod, parse_ints(g)));
  IdealPresentation q = canonical_form(polys, ctx);
  const CayleyMapRecord m = build_map(q, n, parse_type(type));
  Json j{{"command", "export-map"}, {"ideal", to_json(q)}, {"map", to_json(m)}, {"rotation_system", rotation_system(m)}};
  return {j, rotation_system(m)};
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Regular balanced Cayley maps on abelian p-groups", "rbcm"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--output", common.output, "write the result to this file");
    sub->add_option("--jobs", common.jobs, "worker threads for the oracle")->check(CLI::Range(1, 256));
  };
  const auto positive = CLI::Range(1, 1 << 20);
  const auto valence_range = CLI::Range(2, 1 << 20);

  std::function<Emitted()> action;
  std::string default_format = "json";

  Int p = 0;
  int k = 1, n = 2;
  std::string target = "plus";
  auto* factor = app.add_subcommand("factor", "factor x^n+1, x^n-1 or the radical sum over Z_{p^k}");
  factor->add_option("--p", p)->required();
  factor->add_option("--k", k)->required()->check(positive);
  factor->add_option("--n", n)->required()->check(valence_range);
  factor->add_option("--target", target)->check(CLI::IsMember({"plus", "minus", "radical"}));
  add_common(factor);
  factor->callback([&] { action = [&] { return run_factor(p, k, n, target); }; });

  std::string coeffs;
  std::string lift_target = "minus";
  auto* lift = app.add_subcommand("lift", "Hensel-lift a factor of x^n -+ 1 from Z_p to Z_{p^k}");
  lift->add_option("--p", p)->required();
  lift->add_option("--k", k)->required()->check(positive);
  lift->add_option("--n", n)->required()->check(positive);
  lift->add_option("--factor", coeffs, "ascending coefficients over Z_p, e.g. 2,1,1")->required();
  lift->add_option("--target", lift_target)->check(CLI::IsMember({"plus", "minus"}));
  add_common(lift);
  lift->callback([&] { action = [&] { return run_lift(p, k, coeffs, n, lift_target); }; });

  Int budget = kIdealEnumerationBudget;
  auto* ideals = app.add_subcommand("ideals", "ideal lattices above each labeled factor of x^n+1");
  ideals->add_option("--p", p)->required();
  ideals->add_option("--k", k)->required()->check(positive);
  ideals->add_option("--n", n)->required()->check(valence_range);
  ideals->add_option("--budget", budget, "largest quotient ring searched exhaustively");
  add_common(ideals);
  ideals->callback([&] { action = [&] { return run_ideals(p, k, n, budget); }; });

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "list the maps of one family");
  classify->add_option("variant", ca.variant)
      ->required()
      ->check(CLI::IsMember({"cyclic", "elementary", "twogroup", "coprime", "rank2", "standard"}));
  classify->add_option("--p", ca.p);
  classify->add_option("--k", ca.k)->check(positive);
  classify->add_option("--kp", ca.kp, "smaller exponent for rank2")->check(positive);
  classify->add_option("--m", ca.m, "rank for elementary")->check(positive);
  classify->add_option("--n", ca.n)->required()->check(valence_range);
  classify->add_option("--type", ca.type)->check(CLI::IsMember({"I", "II"}));
  classify->add_option("--group", ca.group, "group for standard, e.g. 3,9");
  add_common(classify);
  classify->callback([&] {
    default_format = "table";
    action = [&] { return run_classify(ca); };
  });

  std::string group;
  int valence = 4;
  auto* oracle = app.add_subcommand("oracle", "brute-force enumeration up to isomorphism");
  oracle->add_option("--group", group)->required();
  oracle->add_option("--valence", valence)->required()->check(positive);
  add_common(oracle);
  oracle->callback([&] {
    default_format = "table";
    action = [&] { return run_oracle(group, valence, common.jobs); };
  });

  bool ledger = false;
  Int max_order = 81;
  int max_n = 8;
  auto* crosscheck = app.add_subcommand("crosscheck", "reconcile the families with the oracle");
  crosscheck->add_option("--group", group, "one group; omit to sweep all p-groups up to --max-order");
  crosscheck->add_option("--valence", valence)->check(positive);
  crosscheck->add_option("--max-order", max_order)->check(positive);
  crosscheck->add_option("--max-n", max_n)->check(valence_range);
  crosscheck->add_flag("--ledger", ledger, "printed versus implemented readings");
  add_common(crosscheck);
  crosscheck->callback([&] {
    default_format = "table";
    action = [&] { return ledger ? run_ledger(common.jobs) : run_crosscheck(group, valence, max_order, max_n, common.jobs); };
  });

  Int modulus = 0;
  std::vector<std::string> gens;
  std::string context, map_type = "I";
  auto* exportm = app.add_subcommand("export-map", "rotation system of M_Q for Q = (generators)");
  exportm->add_option("--modulus", modulus)->required()->check(CLI::Range(Int{2}, kMaxModulus));
  exportm->add_option("--n", n)->required()->check(valence_range);
  exportm->add_option("--gen", gens, "generator, ascending coefficients; repeatable")->required();
  exportm->add_option("--context", context, "monic context, ascending coefficients (default x^n+1)");
  exportm->add_option("--type", map_type)->check(CLI::IsMember({"I", "II"}));
  add_common(exportm);
  exportm->callback([&] {
    default_format = "table";
    action = [&] { return run_export(modulus, n, gens, context, map_type); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    const Emitted result = action();
    const std::string format = common.format.empty() ? default_format : common.format;
    const std::string text = format == "json" ? result.json.dump(2) + "\n" : result.table;
    if (common.output.empty()) {
      out << text;
    } else {
      std::ofstream f(common.output, std::ios::binary);
      if (!f) throw Error(ErrorKind::InvalidArgument, "cannot open " + common.output);
      f << text;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace rbcm::cli
