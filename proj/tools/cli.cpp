#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tpv/errors.hpp"
#include "tpv/families.hpp"
#include "tpv/lemma_a.hpp"
#include "tpv/matgroup.hpp"
#include "tpv/plane.hpp"
#include "tpv/sn_bounds.hpp"
#include "tpv/tower.hpp"

namespace tpv::cli {

namespace {

constexpr int kUsage = 3;

struct Options {
  std::vector<std::size_t> n;
  std::vector<std::uint64_t> q;
  int statement = 0;
  std::string mode = "exhaustive";
  std::uint64_t seed = 1;
  std::size_t trials = 0;
  std::string format = "json";
  std::string out;
  std::size_t cap = kDefaultClosureCap;
  bool stable = false;
  unsigned jobs = 1;
  std::vector<std::string> inputs;
};

template <class T>
T first_or(const std::vector<T>& v, T d) {
  return v.empty() ? d : v.front();
}

std::string render(const std::vector<VerificationReport>& reports, const Options& o) {
  std::ostringstream os;
  if (o.format == "csv") {
    os << csv_header() << '\n';
    for (const auto& r : reports) os << to_csv_row(r, o.stable) << '\n';
  } else if (o.format == "md") {
    os << to_markdown(reports, o.stable);
  } else {
    for (const auto& r : reports) os << to_json(r, o.stable) << '\n';
  }
  return os.str();
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InvalidArgument("cannot open output file " + o.out);
  f << text;
}

int finish(const std::vector<VerificationReport>& reports, const Options& o, std::ostream& out) {
  for (const auto& r : reports) r.check();
  emit(render(reports, o), o, out);
  return exit_code_for(reports);
}

std::vector<VerificationReport> verify_sylow2(const Options& o) {
  const std::size_t n = first_or<std::size_t>(o.n, 2);
  const std::uint64_t q = first_or<std::uint64_t>(o.q, 7);
  std::vector<VerificationReport> reports;
  if (o.statement == 0) {
    for (int s = 1; s <= 5; ++s) reports.push_back(verify_sylowtwoingln(s, n, q, o.cap));
  } else {
    reports.push_back(verify_sylowtwoingln(o.statement, n, q, o.cap));
  }
  return reports;
}

GroupElement baer_involution(const SingerNormalizer& sn) {
  return GroupElement(frobenius_collineation(sn.group.plane()).points());
}

std::vector<VerificationReport> verify_counting(const Options& o) {
  const auto sn = singer_normalizer(first_or<std::uint64_t>(o.q, 9));
  return {counting_identity_check(sn.group, baer_involution(sn))};
}

std::vector<VerificationReport> verify_fixtrans(const Options& o) {
  std::vector<VerificationReport> reports;
  auto label = [](VerificationReport r, const std::string& k) {
    r.params["K"] = k;
    return r;
  };
  if (!o.n.empty()) {
    // S_n on unordered pairs, every subgroup class of the stabilizer of {1,2}.
    const auto g = families::on_pairs(families::symmetric(o.n.front()));
    SubgroupStream stream(stabilizer(g, 0));
    for (const auto& item : stream.items()) {
      reports.push_back(label(fixpoint_transitivity_check(g, 0, item.group), "order " + std::to_string(item.group.order())));
      reports.back().params["action"] = "S" + std::to_string(o.n.front()) + " on pairs";
    }
    return reports;
  }
  const auto sn = singer_normalizer(first_or<std::uint64_t>(o.q, 9));
  const auto& stab = sn.group.point_stabilizer();
  reports.push_back(label(fixpoint_transitivity_check(sn.group, FiniteGroup::trivial(sn.singer)), "trivial"));
  const std::uint64_t f = sn.frobenius.order();
  for (std::uint64_t d = 1; d < f; ++d) {
    if (f % d != 0) continue;
    reports.push_back(label(fixpoint_transitivity_check(sn.group, FiniteGroup::closure({sn.frobenius.pow(static_cast<long long>(d))})),
                            "frobenius^" + std::to_string(d)));
  }
  reports.push_back(label(fixpoint_transitivity_check(sn.group, stab), "stabilizer"));
  return reports;
}

std::vector<VerificationReport> verify_lemma_a(const Options& o, std::string* csv) {
  StreamCaps caps;
  if (o.trials) caps.count = o.trials;
  if (o.cap != kDefaultClosureCap) caps.max_subgroup_order = o.cap;
  auto c = lemma_a_campaign(first_or<std::size_t>(o.n, 2), first_or<std::uint64_t>(o.q, 7), stream_mode_from_string(o.mode), o.seed, caps,
                            o.jobs);
  if (csv) {
    std::ostringstream os;
    os << lemma_a_csv_header() << '\n';
    for (const auto& v : c.verdicts) os << to_csv(v) << '\n';
    *csv = os.str();
  }
  return {c.report};
}

std::vector<VerificationReport> verify_sn_bounds(const Options& o) {
  std::vector<std::size_t> degrees = o.n;
  if (degrees.empty()) {
    for (std::size_t d = 3; d <= 13; ++d) degrees.push_back(d);
  }
  std::vector<VerificationReport> reports;
  for (auto d : degrees) {
    for (const auto& inst : primitive_instances(d)) {
      for (auto kind : {SnBoundKind::OddSn, SnBoundKind::SnInvolutions}) {
        auto r = sn_bound_check(kind, inst.group);
        r.params["group"] = inst.name;
        reports.push_back(std::move(r));
      }
    }
  }
  return reports;
}

std::vector<VerificationReport> verify_quaternion(const Options& o) {
  std::vector<VerificationReport> reports;
  const std::vector<NamedGroup> family{
      {"C8", families::cyclic(8)},
      {"C16", families::cyclic(16)},
      {"D8", families::dihedral(4)},
      {"D16", families::dihedral(8)},
      {"Q8", families::quaternion(8)},
      {"Q16", families::quaternion(16)},
      {"SD32", families::semidihedral(32)},
      {"V4xC2", families::direct_product({families::cyclic(2), families::cyclic(2), families::cyclic(2)})},
      {"Syl2(SL2(7))", sylow_two(families::sl(2, 7))},
      {"Syl2(GL2(7))", sylow2_gl2(7).group},
  };
  for (const auto& [name, g] : family) {
    Stopwatch clock;
    VerificationReport r;
    r.lemma_id = "two-rank";
    r.params = {{"group", name}, {"order", std::to_string(g.order())}};
    const unsigned rank = two_rank(g);
    const bool shape = is_cyclic(g) || is_generalized_quaternion(g);
    r.counts = {{"two_rank", rank}, {"cyclic_or_quaternion", shape ? 1 : 0}};
    r.verdict = (rank == 1) == shape ? Verdict::Verified : Verdict::Violated;
    if (r.verdict == Verdict::Violated) r.witness = name;
    r.elapsed_ms = clock.elapsed_ms();
    reports.push_back(std::move(r));
  }
  const std::vector<std::tuple<std::string, FiniteGroup, QuaternionStructure>> shapes{
      {"Q16", families::quaternion(16), QuaternionStructure::TwoGroup},
      {"SL2(7)", families::sl(2, 7), QuaternionStructure::SL2qD},
      {"C15:Q8", families::cyclic_by_quaternion(15), QuaternionStructure::TwoGroup},
  };
  for (const auto& [name, g, expected] : shapes) {
    Stopwatch clock;
    VerificationReport r;
    r.lemma_id = "quaternion-structure";
    const auto c = classify_quaternion_structure(g);
    r.params = {{"group", name}, {"tag", to_string(c.tag)}, {"expected", to_string(expected)}};
    r.counts = {{"order", g.order()}, {"odd_core_order", c.odd_core_order}, {"reduced_order", c.reduced_order}};
    if (c.tag == QuaternionStructure::SL2qD) {
      r.counts["q"] = c.q;
      r.counts["d"] = c.d;
    }
    r.verdict = c.tag == expected ? Verdict::Verified : Verdict::Violated;
    if (r.verdict == Verdict::Violated) r.witness = name + " classified as " + to_string(c.tag);
    r.elapsed_ms = clock.elapsed_ms();
    reports.push_back(std::move(r));
  }
  {
    Stopwatch clock;
    const std::uint64_t q = first_or<std::uint64_t>(o.q, 9);
    const auto sn = singer_normalizer(q);
    VerificationReport r;
    r.lemma_id = "odd-transitive";
    r.params = {{"q", std::to_string(q)}, {"group_order", std::to_string(sn.group.group().order())}};
    const auto found = odd_transitive_search(sn.group.group());
    r.counts["candidates_tried"] = found.candidates_tried;
    if (found.witness) {
      const std::size_t points = sn.group.plane().point_count();
      const bool ok = found.witness->order() % 2 == 1 && is_transitive(*found.witness) &&
                      sn.group.group().order() % found.witness->order() == 0;
      r.counts["witness_order"] = found.witness->order();
      r.counts["points"] = points;
      r.verdict = ok ? Verdict::Verified : Verdict::Violated;
      if (!ok) r.witness = "witness of order " + std::to_string(found.witness->order());
    } else {
      r.verdict = Verdict::SkippedResource;
      r.notes.push_back("search budget exhausted");
    }
    r.elapsed_ms = clock.elapsed_ms();
    reports.push_back(std::move(r));
  }
  return reports;
}

std::string census(const Options& o) {
  const std::vector<std::size_t> ns = o.n.empty() ? std::vector<std::size_t>{2} : o.n;
  const std::vector<std::uint64_t> qs = o.q.empty() ? std::vector<std::uint64_t>{7} : o.q;
  std::ostringstream os;
  os << census_csv_header() << '\n';
  for (auto n : ns) {
    for (auto q : qs) os << to_csv(census_row(n, q, o.cap)) << '\n';
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidArgument("cannot read " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of group-theoretic identities and bounds", "tpverify"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
    c->add_option("--out", o.out, "write to PATH instead of stdout");
    c->add_flag("--stable-output", o.stable, "zero out timings for byte-stable output");
    c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    c->add_option("--cap", o.cap, "element cap for closures")->check(CLI::PositiveNumber);
  };
  auto add_group_params = [&](CLI::App* c) {
    c->add_option("--n", o.n, "dimension or degree (comma list allowed)")->delimiter(',');
    c->add_option("--q", o.q, "field order (comma list allowed)")->delimiter(',');
  };

  auto* verify = app.add_subcommand("verify", "run a verifier");
  verify->require_subcommand(1);
  auto* v_sylow = verify->add_subcommand("sylow2", "involution bounds for Sylow 2-subgroups of GL_n(q)");
  auto* v_tower = verify->add_subcommand("tower", "seeded centralizer-index identity campaign");
  auto* v_count = verify->add_subcommand("counting", "Baer involution counting ratio on PG(2,q)");
  auto* v_fix = verify->add_subcommand("fixtrans", "fixed-point transitivity criterion");
  auto* v_lemma = verify->add_subcommand("lemma-a", "involution index bound over subgroups of GL_n(q)");
  auto* v_sn = verify->add_subcommand("sn-bounds", "order and involution bounds for primitive groups");
  auto* v_quat = verify->add_subcommand("quaternion", "2-rank and quaternion structure recognition");
  for (auto* c : {v_sylow, v_tower, v_count, v_fix, v_lemma, v_sn, v_quat}) {
    add_common(c);
    add_group_params(c);
  }
  v_sylow->add_option("--statement", o.statement, "1..5; all when omitted")->check(CLI::Range(1, 5));
  for (auto* c : {v_tower, v_lemma}) {
    c->add_option("--seed", o.seed, "RNG seed");
    c->add_option("--trials", o.trials, "trial count (lemma-a random: subgroups wanted)");
  }
  v_lemma->add_option("--mode", o.mode, "exhaustive or random")->check(CLI::IsMember({"exhaustive", "random"}));

  auto* census_cmd = app.add_subcommand("census", "tabulate");
  census_cmd->require_subcommand(1);
  auto* c_sylow = census_cmd->add_subcommand("sylow2", "Sylow 2-subgroup involution census as CSV");
  add_common(c_sylow);
  add_group_params(c_sylow);

  auto* plane_cmd = app.add_subcommand("plane", "projective planes");
  plane_cmd->require_subcommand(1);
  auto* p_build = plane_cmd->add_subcommand("build", "PG(2,q) as JSON, or its incidence matrix as CSV");
  add_common(p_build);
  add_group_params(p_build);

  auto* report_cmd = app.add_subcommand("report", "report files");
  report_cmd->require_subcommand(1);
  auto* r_merge = report_cmd->add_subcommand("merge", "merge newline-delimited JSON reports");
  add_common(r_merge);
  r_merge->add_option("inputs", o.inputs, "report files")->required()->check(CLI::ExistingFile);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*v_sylow) return finish(verify_sylow2(o), o, out);
    if (*v_tower) return finish({random_identity_campaign(o.seed, o.trials ? o.trials : 200, o.jobs)}, o, out);
    if (*v_count) return finish(verify_counting(o), o, out);
    if (*v_fix) return finish(verify_fixtrans(o), o, out);
    if (*v_lemma) {
      std::string csv;
      auto reports = verify_lemma_a(o, o.format == "csv" ? &csv : nullptr);
      if (o.format != "csv") return finish(reports, o, out);
      emit(csv, o, out);
      return exit_code_for(reports);
    }
    if (*v_sn) return finish(verify_sn_bounds(o), o, out);
    if (*v_quat) return finish(verify_quaternion(o), o, out);
    if (*c_sylow) {
      emit(census(o), o, out);
      return 0;
    }
    if (*p_build) {
      const auto plane = pg2(first_or<std::uint64_t>(o.q, 9));
      emit(o.format == "csv" ? incidence_csv(plane) : plane_to_json(plane) + "\n", o, out);
      return 0;
    }
    if (*r_merge) {
      std::vector<VerificationReport> all;
      for (const auto& path : o.inputs) {
        auto part = reports_from_ndjson(read_file(path));
        all.insert(all.end(), part.begin(), part.end());
      }
      return finish(all, o, out);
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  err << app.help();
  return kUsage;
}

}  // namespace tpv::cli
