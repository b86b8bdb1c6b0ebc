// matroid-id: enumerate cases, certify them, verify certificate files,
// report model dimensions and compare small matroids exhaustively.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "matroid_id/cli/campaign.hpp"
#include "matroid_id/cli/certificate_io.hpp"

namespace {

using namespace matroid_id;

enum Exit { kSolved = 0, kError = 1, kUnsolved = 2, kBudget = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<phylo::ModelKind> model_kind(const std::string& s) {
  if (s.empty()) return std::nullopt;
  try {
    return phylo::parse_model_kind(s);
  } catch (const std::invalid_argument&) {
    throw UsageError("--model must be one of cfn, jc, k2p, k3p");
  }
}

// A case line may start with its model; it must then agree with --model.
CaseDescriptor parse_case_line(const std::string& text, std::optional<phylo::ModelKind> kind) {
  const auto space = text.find(' ');
  std::optional<phylo::ModelKind> own;
  if (space != std::string::npos) {
    try {
      own = phylo::parse_model_kind(text.substr(0, space));
    } catch (const std::invalid_argument&) {
    }
  }
  if (!own) return parse_case(text, kind);
  if (kind && *kind != *own) throw DataError("case model differs from --model: " + text);
  return parse_case(text);
}

std::vector<CaseDescriptor> enumerate_cases(phylo::ModelKind kind, unsigned leaves, bool networks, unsigned cycle) {
  std::vector<CaseDescriptor> out;
  if (networks) {
    if (leaves < 2 || leaves > phylo::kMaxLeaves || cycle < 2 || cycle > leaves)
      throw UsageError("networks need 2 <= --cycle <= --leaves <= 9");
    auto nets = phylo::enumerate_cycle_networks(leaves, cycle);
    for (std::size_t a = 0; a < nets.size(); ++a)
      for (std::size_t b = a + 1; b < nets.size(); ++b)
        out.push_back({kind, network_spec(nets[a]), network_spec(nets[b])});
    return out;
  }
  if (leaves < 4 || leaves > 6) throw UsageError("--leaves must be 4, 5 or 6");
  for (const auto& c : phylo::enumerate_mixture_cases(leaves)) out.push_back(mixture_case(kind, c));
  return out;
}

std::vector<CaseDescriptor> read_case_file(const std::string& path, std::optional<phylo::ModelKind> kind) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<CaseDescriptor> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty() || line[0] == '#') continue;
    try {
      out.push_back(parse_case_line(line, kind));
    } catch (const DataError& e) {
      throw DataError(path + ":" + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

std::string subset_text(const Certificate& c) {
  std::string s;
  const auto group = phylo::group_of(c.case_id->kind);
  for (const auto& g : c.labels) s += (s.empty() ? "" : ", ") + phylo::coordinate_string(g, group);
  return "{" + s + "}";
}

struct CommonArgs {
  std::string model;
  unsigned leaves = 0;
  std::vector<std::string> cases;
  std::string case_file;
  bool networks = false;
  unsigned cycle = 0;
};

std::vector<CaseDescriptor> collect_cases(const CommonArgs& a) {
  const auto kind = model_kind(a.model);
  std::vector<CaseDescriptor> out;
  for (const auto& text : a.cases) out.push_back(parse_case_line(text, kind));
  if (!a.case_file.empty())
    for (auto& c : read_case_file(a.case_file, kind)) out.push_back(std::move(c));
  if (a.leaves) {
    if (!kind) throw UsageError("--leaves needs --model");
    for (auto& c : enumerate_cases(*kind, a.leaves, a.networks, a.cycle ? a.cycle : a.leaves))
      out.push_back(std::move(c));
  }
  if (out.empty()) throw UsageError("no cases given (use --case, --cases or --leaves)");
  return out;
}

int cmd_enumerate(const CommonArgs& a) {
  const auto kind = model_kind(a.model.empty() ? "cfn" : a.model);
  if (!a.leaves) throw UsageError("--leaves is required");
  const auto cases = enumerate_cases(*kind, a.leaves, a.networks, a.cycle ? a.cycle : a.leaves);
  for (const auto& c : cases) std::cout << to_string(c) << '\n';
  std::cout << "# " << cases.size() << " cases\n";
  return kSolved;
}

struct CertifyArgs {
  std::string mode = "exact";
  std::string epsilon = "1e-10";
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::string out;
  std::optional<std::size_t> max_size;
  std::size_t sample = 0;
  std::string sampling = "walk";
};

int cmd_certify(const CommonArgs& a, const CertifyArgs& c) {
  auto cases = collect_cases(a);
  if (c.sample && c.sample < cases.size()) {
    std::vector<std::size_t> idx(cases.size());
    std::iota(idx.begin(), idx.end(), 0);
    Rng rng(campaign::mix64(c.seed));
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(c.sample);
    std::sort(idx.begin(), idx.end());
    std::vector<CaseDescriptor> picked;
    for (auto i : idx) picked.push_back(cases[i]);
    cases = std::move(picked);
  }
  campaign::Options opt;
  if (c.mode == "exact") opt.mode = campaign::Mode::Exact;
  else if (c.mode == "sz") opt.mode = campaign::Mode::SZ;
  else throw UsageError("--mode must be exact or sz");
  try {
    opt.epsilon = parse_rational(c.epsilon);
  } catch (const std::exception&) {
    throw UsageError("--epsilon is not a number: " + c.epsilon);
  }
  if (opt.epsilon <= 0 || opt.epsilon >= 1) throw UsageError("--epsilon must lie strictly between 0 and 1");
  if (c.trials == 0) throw UsageError("--trials must be positive");
  opt.trials = c.trials;
  opt.seed = c.seed;
  opt.max_size = c.max_size;
  if (c.sampling == "walk") opt.sizes = SizeSampling::Walk;
  else if (c.sampling == "geometric") opt.sizes = SizeSampling::Geometric;
  else if (c.sampling == "uniform") opt.sizes = SizeSampling::Uniform;
  else if (c.sampling == "basis") opt.sizes = SizeSampling::Basis;
  else throw UsageError("--sampling must be walk, geometric, uniform or basis");

  // Checkpointing: cases already present in the output file are skipped.
  std::ofstream out;
  std::set<std::string> finished;
  if (!c.out.empty()) {
    if (std::filesystem::exists(c.out) && std::filesystem::file_size(c.out) > 0) {
      std::ifstream in(c.out);
      for (const auto& r : io::read_certificates(in).records)
        if (auto* cert = std::get_if<Certificate>(&r.content)) finished.insert(to_string(*cert->case_id));
      out.open(c.out, std::ios::app);
    } else {
      out.open(c.out);
      if (out) out << io::header().dump() << '\n';
    }
    if (!out) throw std::runtime_error("cannot write " + c.out);
  }
  std::vector<CaseDescriptor> todo;
  for (auto& id : cases)
    if (!finished.count(to_string(id))) todo.push_back(std::move(id));
  if (todo.size() < cases.size())
    std::cout << "skipping " << cases.size() - todo.size() << " case(s) already in " << c.out << '\n';

  std::size_t solved = 0, unsolved = 0, failed = 0;
  campaign::run_all(todo, opt, c.jobs, [&](std::size_t, const campaign::Outcome& o) {
    const std::string id = to_string(o.id);
    if (!o.error.empty()) {
      ++failed;
      std::cout << "error    " << id << ": " << o.error << '\n';
    } else if (o.result.certificate) {
      ++solved;
      const Certificate& cert = *o.result.certificate;
      std::cout << "solved   " << id << "  " << to_string(cert.direction) << " |S|=" << cert.subset.size()
                << " " << subset_text(cert) << '\n';
      if (out.is_open()) {
        io::write_record(out, cert);
        out.flush();
      }
    } else {
      ++unsolved;
      const auto& s = o.result.stats;
      std::cout << "unsolved " << id << "  trials=" << s.trials << " screened=" << s.screened
                << " refuted=" << s.refuted << " deferred=" << s.deferred << " restarts=" << s.restarts
                << " dims=" << o.left_dim << "/" << o.right_dim << '\n';
    }
    std::cout.flush();
  });
  std::cout << "solved " << solved << " of " << todo.size() << " (unsolved " << unsolved << ", errors " << failed
            << ")\n";
  if (failed) return kError;
  return unsolved ? kUnsolved : kSolved;
}

int cmd_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  io::CertificateFile file;
  try {
    file = io::read_certificates(in);
  } catch (const DataError& e) {
    std::cerr << path << ": " << e.what() << '\n';
    return kError;
  }
  if (!file.ok()) {
    for (const auto& r : file.records)
      if (auto* msg = std::get_if<std::string>(&r.content)) std::cerr << path << ":" << r.line << ": " << *msg << '\n';
    return kError;
  }
  std::size_t pass = 0, fail = 0;
  for (const auto& r : file.records) {
    const Certificate& c = std::get<Certificate>(r.content);
    bool ok = false;
    std::string why;
    try {
      ok = verify_certificate(c);
    } catch (const DataError& e) {
      why = e.what();
    }
    (ok ? pass : fail)++;
    std::cout << (ok ? "pass " : "FAIL ") << path << ":" << r.line << "  " << to_string(*c.case_id)
              << (why.empty() ? "" : "  (" + why + ")") << '\n';
  }
  std::cout << pass << " passed, " << fail << " failed\n";
  return fail ? kUnsolved : kSolved;
}

// "<left> vs <right>" or a single model.
std::vector<std::pair<std::string, ModelSpec>> models_of(const std::string& text, std::optional<phylo::ModelKind>& kind) {
  if (text.find(" vs ") != std::string::npos) {
    CaseDescriptor c = parse_case_line(text, kind);
    kind = c.kind;
    return {{"left", c.left}, {"right", c.right}};
  }
  std::string body = text;
  if (auto space = text.find(' '); space != std::string::npos) {
    kind = phylo::parse_model_kind(text.substr(0, space));
    body = text.substr(space + 1);
  }
  if (!kind) throw UsageError("--model is required");
  return {{"model", parse_model_spec(body)}};
}

int cmd_dimension(const CommonArgs& a) {
  if (a.cases.empty()) throw UsageError("--case is required");
  for (const auto& text : a.cases) {
    auto kind = model_kind(a.model);
    for (const auto& [side, spec] : models_of(text, kind)) {
      auto p = build_parameterization(*kind, spec);
      const PolyMatrix J = phylo::normalized_jacobian(p);
      std::cout << side << " " << phylo::to_string(*kind) << " " << to_string(spec) << "  dim=" << model_dimension(J)
                << " parameters=" << p.num_variables() << " coordinates=" << p.num_coordinates() << '\n';
    }
  }
  return kSolved;
}

int cmd_compare(const CommonArgs& a, std::size_t max_size, std::size_t budget) {
  if (a.cases.size() != 1) throw UsageError("matroid-compare takes exactly one --case");
  const CaseDescriptor id = parse_case_line(a.cases[0], model_kind(a.model));
  ExactModel m1(build_parameterization(id.kind, id.left));
  ExactModel m2(build_parameterization(id.kind, id.right));
  if (m1.param.coordinates != m2.param.coordinates) throw DataError("the two models use different coordinates");
  try {
    auto r = exhaustive_matroid_equal(m1.jacobian, m2.jacobian, max_size, budget);
    if (r.equal) {
      std::cout << "equal  (" << r.checked << " subsets of size <= " << max_size << ")\n";
    } else {
      Certificate c = *r.witness;
      c.case_id = id;
      for (auto j : c.subset) c.labels.push_back(m1.param.coordinates[j]);
      std::cout << "witness " << subset_text(c) << "  " << to_string(c.direction) << "  (" << r.checked
                << " subsets checked)\n";
    }
    return kSolved;
  } catch (const ResourceError& e) {
    std::cout << "budget exhausted: " << e.done() << " of " << e.total() << " subsets checked, no difference found\n";
    return kBudget;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify generic identifiability of discrete model parameters with Jacobian matroids"};
  app.set_version_flag("--version", std::string(io::kToolVersion));
  app.require_subcommand(1);

  CommonArgs common;
  CertifyArgs cert;
  std::string verify_path;
  std::size_t max_size = 7, budget = 10000;

  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model", common.model, "cfn, jc, k2p or k3p");
  };
  auto add_sources = [&](CLI::App* sub) {
    add_model(sub);
    sub->add_option("--case", common.cases, "case text \"<left> vs <right>\" (repeatable)");
    sub->add_option("--cases", common.case_file, "file with one case per line")->check(CLI::ExistingFile);
    sub->add_option("--leaves", common.leaves, "all cases on this many leaves");
    sub->add_flag("--networks", common.networks, "with --leaves: pairs of cycle networks instead of mixtures");
    sub->add_option("--cycle", common.cycle, "cycle size for --networks (default: --leaves)");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list cases up to leaf relabelling");
  add_model(enumerate);
  enumerate->add_option("--leaves", common.leaves, "number of leaves")->required();
  enumerate->add_flag("--networks", common.networks, "pairs of cycle networks instead of mixtures");
  enumerate->add_option("--cycle", common.cycle, "cycle size for --networks (default: --leaves)");

  auto* certify = app.add_subcommand("certify", "search for separating certificates");
  add_sources(certify);
  certify->add_option("--mode", cert.mode, "exact or sz")->capture_default_str();
  certify->add_option("--epsilon", cert.epsilon, "sz failure tolerance")->capture_default_str();
  certify->add_option("--trials", cert.trials, "random trials per case")->capture_default_str();
  certify->add_option("--seed", cert.seed, "master seed")->capture_default_str();
  certify->add_option("--jobs", cert.jobs, "worker threads")->capture_default_str();
  certify->add_option("--out", cert.out, "append certificates to this file");
  certify->add_option("--max-size", cert.max_size, "largest candidate subset");
  certify->add_option("--sampling", cert.sampling, "candidate sampler: walk, geometric, uniform or basis")
      ->capture_default_str();
  certify->add_option("--sample", cert.sample, "certify a seeded random sample of this many cases");

  auto* verify = app.add_subcommand("verify", "re-check every record of a certificate file");
  verify->add_option("file", verify_path, "certificate file")->required();

  auto* dimension = app.add_subcommand("dimension", "dimension of each model in a case");
  add_model(dimension);
  dimension->add_option("--case", common.cases, "case text or a single model")->required();

  auto* compare = app.add_subcommand("matroid-compare", "compare the matroids on all small subsets");
  add_model(compare);
  compare->add_option("--case", common.cases, "case text")->required();
  compare->add_option("--max-size", max_size, "largest subset size")->capture_default_str();
  compare->add_option("--budget", budget, "largest number of subsets to check")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSolved : kError;
  }

  try {
    if (*enumerate) return cmd_enumerate(common);
    if (*certify) return cmd_certify(common, cert);
    if (*verify) return cmd_verify(verify_path);
    if (*dimension) return cmd_dimension(common);
    if (*compare) return cmd_compare(common, max_size, budget);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
