#include "cubegroup/cli.hpp"

#include <algorithm>

#include "CLI11.hpp"
#include "cubegroup/errors.hpp"
#include "cubegroup/replib.hpp"
#include "cubegroup/structure.hpp"

namespace cubegroup {

namespace {

struct VerifyArgs {
  bool json = false;
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  std::vector<std::string> filters;
};

std::vector<std::string> all_check_ids() {
  auto ids = structure_check_ids();
  const auto more = replib_check_ids();
  ids.insert(ids.end(), more.begin(), more.end());
  std::sort(ids.begin(), ids.end());
  return ids;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const auto ids = all_check_ids();
  for (const auto& f : a.filters) {
    if (std::none_of(ids.begin(), ids.end(), [&](const std::string& id) { return id_matches(f, id); })) {
      err << "error: no check matches '" << f << "'\n";
      return kExitUsage;
    }
  }
  StructureSuiteOptions so;
  so.seed = a.seed;
  so.trials = a.trials;
  VerificationReport report = verify_structure_suite(so, a.filters);
  report.merge(verify_replib_suite(ReplibSuiteOptions{a.seed, a.trials}, a.filters));

  if (a.json) {
    nlohmann::json j = {{"seed", a.seed},
                        {"trials", a.trials},
                        {"summary", {{"passed", report.passed_count()}, {"failed", report.failed_count()}}},
                        {"checks", report.to_json()}};
    out << j.dump(2) << '\n';
  } else {
    out << report.to_text();
  }
  return report.all_passed() ? kExitPass : kExitCheckFailure;
}

nlohmann::json cycles_json(const Permutation& p, LabelStyle style) { return to_cycle_string(p, style); }

int cmd_apply(int size, const std::string& text, std::ostream& out) {
  if (size != 2 && size != 3) throw ParseError("cube size must be 2 or 3");
  const MoveWord w = MoveWord::parse(text);
  const CubeState state = CubeState::solved(size).apply(w);
  nlohmann::json j;
  j["size"] = size;
  j["word"] = w.to_string();
  j["solved"] = state == CubeState::solved(size);
  j["state"] = state.to_json();
  j["corner_permutation"] = cycles_json(corner_permutation(state), LabelStyle::Digits);
  j["corner_orientation"] = corner_orientation(state, reference_basis()).entries();
  j["invariants"]["s"] = invariant_s(state);
  if (size == 3) {
    j["edge_permutation"] = cycles_json(edge_permutation(state), LabelStyle::Letters);
    j["edge_orientation"] = edge_orientation(state, reference_basis()).entries();
    j["invariants"]["t"] = invariant_t(state);
  }
  out << j.dump(2) << '\n';
  return kExitPass;
}

int cmd_order(const std::string& target, std::ostream& out) {
  BigCount order;
  if (target == "g2") {
    order = g2_sticker_chain().order();
  } else if (target == "g3") {
    order = g3_sticker_chain().order();
  } else if (target == "corner-group") {
    order = corner_chain().order();
  } else if (target == "edge-group") {
    std::vector<Permutation> gens;
    for (Face f : kFaces) gens.push_back(alpha(MoveWord::generator(f)).first);
    order = StabilizerChain::build(gens, kEdges).order();
  } else if (target == "P") {
    order = pair_chain().order();
  } else {
    throw ParseError("unknown order target '" + target + "'");
  }
  out << order.to_string() << '\n';
  return kExitPass;
}

int report_mdim(std::ostream& out, const std::string& group, std::size_t complex, std::size_t real,
                const std::string& method, bool consistent) {
  nlohmann::json j = {{"group", group}, {"complex", complex}, {"real", real}, {"method", method}};
  if (!consistent) j["error"] = "construction and lower bound disagree";
  out << j.dump(2) << '\n';
  return consistent ? kExitPass : kExitCheckFailure;
}

int cmd_mdim(const std::string& target, const std::string& group_text, std::ostream& out) {
  if (target == "g2") {
    const MonomialRep rep = build_rep_g2();
    const unsigned lower = lower_bound_complex_split(zk0m(3, 8).group, PermGroupDescriptor::parse("S8"));
    const auto cases = g2_real_case_analysis();
    const bool ok = faithful(rep, g2_split_group()) && rep.degree() == lower &&
                    realify(rep).real_dimension() == cases.minimum;
    return report_mdim(out, "g2", lower, cases.minimum, "case-table", ok);
  }
  if (target == "g3") {
    const MonomialRep rep = build_rep_g3();
    const unsigned lower = mu("A8xA12");
    const auto table = g3_real_case_table();
    const ConjMonomialRep real = realify(rep);
    const bool ok = faithful(rep, g3_split_group()) && rep.degree() == lower && faithful(real, g3_split_group()) &&
                    real.real_dimension() == table.minimum;
    return report_mdim(out, "g3", lower, table.minimum, "case-table", ok);
  }
  if (target == "abelian") {
    const auto g = FiniteAbelianGroup::parse(group_text);
    return report_mdim(out, g.to_string(), mdim_complex_abelian(g), mdim_real_abelian(g), "formula", true);
  }
  if (target == "exceptional") {
    const auto ex = build_exceptional();
    const unsigned lower_c = lower_bound_complex_split(zk0m(3, 4).group, PermGroupDescriptor::parse("S4"));
    const std::size_t lower_r = subgroup_real_lower_bound(zk0m(3, 4).group);
    const bool ok = faithful(ex.rep4, ex.group) && ex.rep4.degree() == lower_c && faithful(ex.rep6, ex.group) &&
                    ex.rep6.real_dimension() == lower_r;
    return report_mdim(out, "Z_{3,0}^4 x| S_4", lower_c, lower_r, "construction", ok);
  }
  throw ParseError("unknown mdim target '" + target + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation-group model of the 2x2 and 3x3 cubes and their minimal faithful representations"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "run the verification suites");
  v->add_flag("--json", verify.json, "emit the report as JSON");
  v->add_option("--seed", verify.seed, "seed for randomized checks");
  v->add_option("--trials", verify.trials, "scale of randomized checks")->check(CLI::PositiveNumber);
  v->add_option("--filter", verify.filters, "check id, prefix or glob (repeatable)");

  int size = 0;
  std::string word;
  auto* a = app.add_subcommand("apply", "apply a move word to the solved cube");
  a->add_option("size", size, "2 or 3")->required()->check(CLI::IsMember({2, 3}));
  a->add_option("word", word, "moves such as \"U R' F2\"")->required();

  std::string order_target;
  auto* o = app.add_subcommand("order", "exact group orders");
  o->add_option("target", order_target, "g2, g3, corner-group, edge-group or P")
      ->required()
      ->check(CLI::IsMember({"g2", "g3", "corner-group", "edge-group", "P"}));

  std::string mdim_target, mdim_group;
  auto* m = app.add_subcommand("mdim", "minimal faithful dimensions over C and R");
  m->add_option("target", mdim_target, "g2, g3, abelian or exceptional")
      ->required()
      ->check(CLI::IsMember({"g2", "g3", "abelian", "exceptional"}));
  m->add_option("group", mdim_group, "for abelian: cyclic orders \"2,2,3,3\" or \"zk0m:k,m\"");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*v) return cmd_verify(verify, out, err);
    if (*a) return cmd_apply(size, word, out);
    if (*o) return cmd_order(order_target, out);
    if (*m) {
      if (mdim_target == "abelian" && m->count("group") == 0) throw ParseError("mdim abelian needs a group");
      return cmd_mdim(mdim_target, mdim_group, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cubegroup
