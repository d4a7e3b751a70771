#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "gradsym/replicate.hpp"

using namespace gradsym;

namespace {

enum Exit { kYes = 0, kNo = 1, kUnknown = 2, kUsage = 3 };

bool g_pretty = false;

void emit(const Json& j) {
  if (g_pretty)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << canonical_text(j) << "\n";
}

int cmd_check(const std::string& spec, const std::string& mode_text, const std::string& out_path) {
  const Mode mode = parse_mode(mode_text);
  const auto a = parse_algebra_file(spec);
  const auto v = decide_form_existence(a, mode);
  const Json cert = verdict_to_json(a, v);
  if (!out_path.empty()) std::ofstream(out_path) << canonical_text(cert) << "\n";
  if (g_pretty) {
    std::cout << "mode        " << mode_name(mode) << "\n"
              << "status      " << verdict_status_name(v.status) << "\n"
              << "dim         " << v.dim << "\n"
              << "trace space " << v.trace_space_dim << "\n"
              << "gram rank   " << v.gram_rank << "\n";
    if (v.witness) std::cout << "witness     " << to_string(v.witness->coords) << "\n";
    if (v.refutation != Refutation::None) std::cout << "refutation  " << refutation_name(v.refutation) << "\n";
  } else {
    emit(cert);
  }
  return v.yes() ? kYes : kNo;
}

int cmd_verify(const std::string& spec, const std::string& cert_path) {
  const auto a = parse_algebra_file(spec);
  const auto chk = check_certificate(a, read_json_file(cert_path));
  emit(Json{{"failures", chk.failures}, {"hash_matches", chk.hash_matches}, {"passed", chk.passed}});
  return chk.passed ? kYes : kNo;
}

int cmd_invariants(const std::string& spec) {
  const auto a = parse_algebra_file(spec);
  Json sup = Json::array();
  for (auto g : support(a)) sup.push_back(a.group().label(g));
  const auto dv = is_graded_division(a);
  emit(Json{{"algebra_hash", algebra_hash(a)},
            {"center", subspace_to_json(center(a))},
            {"commutators", subspace_to_json(commutator_subspace(a))},
            {"dim", a.dim()},
            {"division", division_to_json(dv)},
            {"graded_commutators", subspace_to_json(graded_commutator_space(a))},
            {"support", sup}});
  return kYes;
}

int cmd_replicate(bool all, const std::string& name, const std::string& corrupt) {
  if (all == !name.empty()) throw Error(ErrorKind::InvalidArgument, "give exactly one of --all and --name");
  SuiteOptions o;
  o.only = name;
  o.corrupt = corrupt;
  const auto entries = run_suite(o);
  bool ok = true;
  for (const auto& e : entries) ok = ok && e.passed;
  if (g_pretty) {
    for (const auto& e : entries)
      std::cout << (e.passed ? "PASS " : "FAIL ") << e.name << "  " << e.detail << "\n";
  } else {
    emit(suite_to_json(entries));
  }
  return ok ? kYes : kNo;
}

struct HuntArgs {
  std::uint32_t p = 2;
  std::size_t max_group = 4;
  std::uint32_t max_ext = 2;
  std::vector<std::uint32_t> alpha;
  std::uint64_t budget = 0;
  unsigned workers = 1;
  std::string resume;
  std::string checkpoint;
  bool no_prefilter = false;
};

int cmd_hunt(const HuntArgs& h) {
  HuntParams params;
  HuntReport r;
  if (!h.resume.empty()) {
    const Json ck = read_json_file(h.resume);
    r = resume_hunt(ck, h.budget, h.workers);
    // Resumed runs carry their own parameters inside the checkpoint.
    const Json& pj = ck.at("body").at("params");
    params.p = pj.at("char").get<std::uint32_t>();
    params.ext_degrees = pj.at("ext_degrees").get<std::vector<std::uint32_t>>();
    params.groups.clear();
    for (const auto& g : pj.at("groups")) params.groups.push_back(group_from_json(g));
    params.alpha_values = pj.at("alpha_values").get<std::vector<std::uint32_t>>();
    params.cocycle_prefilter = pj.at("cocycle_prefilter").get<bool>();
  } else {
    params.p = h.p;
    params.ext_degrees.clear();
    for (std::uint32_t m = 1; m <= h.max_ext; ++m) params.ext_degrees.push_back(m);
    params.groups = hunt_groups(h.max_group);
    params.alpha_values = h.alpha;
    params.cocycle_prefilter = !h.no_prefilter;
    params.budget = h.budget;
    params.workers = h.workers;
    r = hunt_counterexample(params);
  }
  if (!h.checkpoint.empty()) std::ofstream(h.checkpoint) << canonical_text(hunt_checkpoint(params, r)) << "\n";
  if (g_pretty) {
    std::cout << "coverage            " << r.coverage << "\n"
              << "instances tested    " << r.instances_tested << "\n"
              << "graded division     " << r.division_count << "\n"
              << "graded symmetric    " << r.symmetric_count << "\n"
              << "non-symmetric       " << r.non_symmetric_instances.size() << "\n"
              << "no base-field point " << r.no_base_field_point_instances.size() << "\n";
  } else {
    emit(hunt_report_to_json(r));
  }
  if (!r.non_symmetric_instances.empty()) return kNo;
  return r.truncated ? kUnknown : kYes;
}

int cmd_emit(const std::string& constructor, const std::vector<std::string>& params) {
  Json j{{"constructor", constructor}};
  for (const auto& kv : params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "parameter '" + kv + "' is not key=value");
    const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
    Json parsed = Json::parse(value, nullptr, false);
    j[key] = parsed.is_discarded() ? Json(value) : parsed;
  }
  emit(algebra_to_json(algebra_from_json(j)));
  return kYes;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument:
    case ErrorKind::ValidationError:
    case ErrorKind::HashMismatch:
      return kUsage;
    default:
      return kUnknown;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded symmetric and Frobenius decisions for group-graded algebras"};
  app.require_subcommand(1);
  app.add_flag("--pretty", g_pretty, "Human-readable output");

  std::string spec, mode = "graded-symmetric", cert, out, name, corrupt, constructor;
  bool all = false;
  std::vector<std::string> params;
  HuntArgs hunt;

  auto* check = app.add_subcommand("check", "Decide and print a certificate");
  check->add_option("spec", spec, "Algebra spec file")->required();
  check->add_option("--mode", mode, "graded-symmetric|graded-frobenius|symmetric|frobenius");
  check->add_option("-o,--output", out, "Also write the certificate to this file");

  auto* verify = app.add_subcommand("verify", "Check a certificate against an algebra");
  verify->add_option("spec", spec)->required();
  verify->add_option("cert", cert)->required();

  auto* inv = app.add_subcommand("invariants", "Center, commutators, support, division");
  inv->add_option("spec", spec)->required();

  auto* rep = app.add_subcommand("replicate", "Run the replication checks");
  rep->add_flag("--all", all);
  rep->add_option("--name", name, "One check by name");
  rep->add_option("--corrupt", corrupt, "Instance whose structure constants get corrupted");

  auto* hu = app.add_subcommand("hunt", "Exhaustive crossed-product search");
  hu->add_option("--char", hunt.p);
  hu->add_option("--max-group", hunt.max_group);
  hu->add_option("--max-ext", hunt.max_ext);
  hu->add_option("--alpha", hunt.alpha, "Allowed alpha value codes (default all units)");
  hu->add_option("--budget", hunt.budget, "Stop after this many candidates");
  hu->add_option("--workers", hunt.workers);
  hu->add_option("--resume", hunt.resume, "Checkpoint file to continue from");
  hu->add_option("--checkpoint", hunt.checkpoint, "Write a checkpoint file");
  hu->add_flag("--no-prefilter", hunt.no_prefilter);

  auto* em = app.add_subcommand("emit", "Expand a constructor to a raw block");
  em->add_option("--constructor", constructor)->required();
  em->add_option("--param", params, "key=value, value parsed as JSON when possible");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) return cmd_check(spec, mode, out);
    if (*verify) return cmd_verify(spec, cert);
    if (*inv) return cmd_invariants(spec);
    if (*rep) return cmd_replicate(all, name, corrupt);
    if (*hu) return cmd_hunt(hunt);
    if (*em) return cmd_emit(constructor, params);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kUnknown;
  }
  return kUsage;
}
