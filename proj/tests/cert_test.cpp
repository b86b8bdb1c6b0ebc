#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "matroid_id/cli/campaign.hpp"
#include "matroid_id/cli/certificate_io.hpp"

using namespace matroid_id;
using namespace matroid_id::phylo;

namespace {

PolyMatrix binomial_jacobian() {
  auto t = Polynomial::variable(2, 0), th = Polynomial::variable(2, 1);
  auto one = Polynomial::constant(2, Rational(1)), two = Polynomial::constant(2, Rational(2));
  return PolyMatrix::from_rows({"t", "th"}, {{(one - th) * (one - th), two * th * (one - th), th * th},
                                              {Polynomial::constant(2, Rational(-2)) * t * (one - th),
                                               two * t * (one - two * th), two * t * th}});
}

PolyMatrix constant_matrix(const std::vector<std::vector<long>>& rows, std::vector<std::string> vars = {"x"}) {
  std::vector<std::vector<Polynomial>> p;
  for (const auto& r : rows) {
    p.emplace_back();
    for (long v : r) p.back().push_back(Polynomial::constant(vars.size(), Rational(v)));
  }
  return PolyMatrix::from_rows(std::move(vars), p);
}

CaseDescriptor tree_case(const char* a, const char* b) {
  return {ModelKind::CFN, tree_spec(parse_tree(a)), tree_spec(parse_tree(b))};
}

}  // namespace

TEST(SZConfig, AmplificationAndSampleSet) {
  const Rational eps = parse_rational("1e-10");
  auto c = SZConfig::make(12, eps);
  EXPECT_EQ(c.sample_size, Integer(12000000));
  EXPECT_EQ(c.amplification, 2u);  // 1e-6 > 1e-10 >= 1e-12
  EXPECT_EQ(SZConfig::make(3, parse_rational("1e-6")).amplification, 1u);
  EXPECT_EQ(SZConfig::make(1, parse_rational("1e-19"), Integer(10)).amplification, 19u);
  EXPECT_THROW(SZConfig::make(10, eps, Integer(10)), ConfigError);
  EXPECT_THROW(SZConfig::make(10, Rational(0)), ConfigError);
  EXPECT_THROW(SZConfig::make(10, Rational(1)), ConfigError);
  c.amplification = 3;
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Search, IdenticalJacobiansGiveNothing) {
  const auto J = jacobian(mixture_map(parse_tree("12|34"), parse_tree("13|24"), ModelKind::K3P));
  SearchOptions o;
  o.trials = 200;
  o.same_dim = true;
  EXPECT_FALSE(certify_exact(J, J, o).found());
  EXPECT_FALSE(certify_sz(J, J, SZConfig::make(certification_alpha(J, J, o), parse_rational("1e-10")), o).found());
  o.trials = 0;
  EXPECT_THROW(certify_exact(J, J, o), std::invalid_argument);
}

TEST(Search, DistinctQuartetsAreSeparated) {
  const auto id = tree_case("12|34", "13|24");
  ExactModel m1(build_parameterization(id.kind, id.left)), m2(build_parameterization(id.kind, id.right));
  SearchOptions o;
  o.same_dim = true;
  o.seed = 9;
  auto r = certify_exact(m1.jacobian, m2.jacobian, o);
  ASSERT_TRUE(r.found());
  Certificate c = *r.certificate;
  c.case_id = id;
  EXPECT_TRUE(verify_certificate(c));

  // swapping the models flips the direction
  auto s = certify_exact(m2.jacobian, m1.jacobian, o);
  ASSERT_TRUE(s.found());
  EXPECT_TRUE(verify_subset(m2.jacobian, m1.jacobian, s.certificate->subset, s.certificate->direction));
  EXPECT_TRUE(verify_subset(m1.jacobian, m2.jacobian, s.certificate->subset,
                            s.certificate->direction == Direction::LeftIndependent ? Direction::RightIndependent
                                                                                    : Direction::LeftIndependent));

  c.subset.clear();
  EXPECT_FALSE(verify_certificate(c));
  Certificate flipped = *r.certificate;
  flipped.case_id = id;
  flipped.direction = flipped.direction == Direction::LeftIndependent ? Direction::RightIndependent
                                                                     : Direction::LeftIndependent;
  EXPECT_FALSE(verify_certificate(flipped));
}

TEST(Search, ExactModelsOnK3PMixtures) {
  const auto cases = enumerate_mixture_cases(4);
  ASSERT_EQ(cases.size(), 4u);
  for (const auto& mc : cases) {
    const auto id = mixture_case(ModelKind::K3P, mc);
    ExactModel m1(build_parameterization(id.kind, id.left)), m2(build_parameterization(id.kind, id.right));
    SearchOptions o;
    o.same_dim = model_dimension(m1.jacobian) == model_dimension(m2.jacobian);
    auto r = certify_exact(m1, m2, o);
    ASSERT_TRUE(r.found()) << to_string(id);
    EXPECT_TRUE(verify_subset(m1, m2, r.certificate->subset, r.certificate->direction));
  }
}

TEST(Search, SchwartzZippelCertificate) {
  const auto id = tree_case("12|34", "13|24");
  const auto J1 = jacobian(build_parameterization(id.kind, id.left));
  const auto J2 = jacobian(build_parameterization(id.kind, id.right));
  SearchOptions o;
  o.same_dim = true;
  const auto cfg = SZConfig::make(certification_alpha(J1, J2, o), parse_rational("1e-10"));
  auto r = certify_sz(J1, J2, cfg, o);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.certificate->verification.kind, Verification::Kind::SchwartzZippel);
  EXPECT_EQ(r.certificate->verification.amplification, cfg.amplification);
  Certificate c = *r.certificate;
  c.case_id = id;
  EXPECT_TRUE(verify_certificate(c));
}

TEST(Exhaustive, SmallMatroids) {
  const auto A = constant_matrix({{1, 1, -1, -2}, {3, 1, 2, 4}, {0, -1, 1, 2}});
  EXPECT_TRUE(exhaustive_matroid_equal(A, A, 4).equal);
  const auto J = binomial_jacobian();
  // both are the uniform matroid of rank 2 on three elements
  const auto U = constant_matrix({{1, 0, 1}, {0, 1, 1}}, J.variables());
  EXPECT_TRUE(exhaustive_matroid_equal(J, U, 3).equal);
  const auto V = constant_matrix({{1, 2, 0}, {2, 4, 1}}, J.variables());  // first two columns parallel
  auto cmp = exhaustive_matroid_equal(J, V, 3);
  EXPECT_FALSE(cmp.equal);
  ASSERT_TRUE(cmp.witness);
  EXPECT_EQ(cmp.witness->subset, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(cmp.witness->direction, Direction::LeftIndependent);
}

TEST(Exhaustive, SwappedFourCyclesAgree) {
  const auto J1 = jacobian(network_map(parse_network("fig4-left"), ModelKind::CFN));
  const auto J2 = jacobian(network_map(parse_network("fig4-right"), ModelKind::CFN));
  auto r = exhaustive_matroid_equal(J1, J2, 7);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.checked, 255u);
  EXPECT_THROW(exhaustive_matroid_equal(J1, J2, 7, 100), ResourceError);

  SearchOptions o;
  o.same_dim = true;
  EXPECT_FALSE(certify_exact(J1, J2, o).found());
}

TEST(Exhaustive, DistinctQuartetsDiffer) {
  const auto J1 = jacobian(fourier_map(parse_tree("12|34"), ModelKind::CFN));
  const auto J2 = jacobian(fourier_map(parse_tree("13|24"), ModelKind::CFN));
  auto r = exhaustive_matroid_equal(J1, J2, 8);
  EXPECT_FALSE(r.equal);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(verify_subset(J1, J2, r.witness->subset, r.witness->direction));
}

TEST(CertificateIO, RoundTrip) {
  const auto mc = enumerate_mixture_cases(4)[1];
  campaign::Options opt;
  opt.seed = 5;
  auto out = campaign::run_case(mixture_case(ModelKind::K3P, mc), opt);
  ASSERT_TRUE(out.error.empty()) << out.error;
  ASSERT_TRUE(out.result.found());
  const Certificate& c = *out.result.certificate;
  const auto j = io::to_json(c);
  EXPECT_EQ(j["model"], "k3p");
  const Certificate back = io::from_json(j);
  EXPECT_EQ(back.labels, c.labels);
  EXPECT_EQ(back.direction, c.direction);
  EXPECT_EQ(back.seed, c.seed);
  EXPECT_EQ(to_string(*back.case_id), to_string(*c.case_id));
  EXPECT_EQ(io::to_json(back), j);
  EXPECT_TRUE(verify_certificate(back));

  Certificate sz = back;
  sz.verification = {Verification::Kind::SchwartzZippel, parse_rational("1e-10"), 2, Integer("12000000"), 12};
  const Certificate sz_back = io::from_json(io::to_json(sz));
  EXPECT_EQ(sz_back.verification.epsilon, sz.verification.epsilon);
  EXPECT_EQ(sz_back.verification.sample_size, sz.verification.sample_size);
  EXPECT_EQ(sz_back.verification.alpha, 12u);
  EXPECT_EQ(sz_back.verification.amplification, 2u);
}

TEST(CertificateIO, FileDiagnostics) {
  std::istringstream no_header("{\"version\":1}\n");
  EXPECT_THROW(io::read_certificates(no_header), DataError);
  std::istringstream empty("");
  EXPECT_THROW(io::read_certificates(empty), DataError);

  std::ostringstream text;
  text << io::header().dump() << "\n\nnot json\n{\"version\":1,\"model\":\"k3p\"}\n";
  std::istringstream in(text.str());
  auto file = io::read_certificates(in);
  ASSERT_EQ(file.records.size(), 2u);
  EXPECT_FALSE(file.ok());
  EXPECT_EQ(file.records[0].line, 3u);
  EXPECT_EQ(std::get<std::string>(file.records[0].content), "invalid JSON");
  EXPECT_NE(std::get<std::string>(file.records[1].content).find("missing field"), std::string::npos);

  auto bad = io::to_json(*campaign::run_case(mixture_case(ModelKind::K3P, enumerate_mixture_cases(4)[0]), {}).result.certificate);
  bad["subset"][0][0] = "02";
  EXPECT_THROW(io::from_json(bad), DataError);
}

TEST(CertificateIO, GoldenFileVerifies) {
  std::ifstream in(std::string(MATROID_ID_TEST_DATA) + "/k3p_4leaf_golden.jsonl");
  ASSERT_TRUE(in);
  auto file = io::read_certificates(in);
  ASSERT_EQ(file.records.size(), 4u);
  ASSERT_TRUE(file.ok());
  std::set<std::string> cases;
  for (const auto& r : file.records) {
    const auto& c = std::get<Certificate>(r.content);
    EXPECT_TRUE(verify_certificate(c)) << "line " << r.line;
    cases.insert(to_string(*c.case_id));
  }
  for (const auto& mc : enumerate_mixture_cases(4)) EXPECT_TRUE(cases.count(to_string(mixture_case(ModelKind::K3P, mc))));
}

TEST(CertificateIO, CorruptedSubsetFails) {
  std::ifstream in(std::string(MATROID_ID_TEST_DATA) + "/k3p_4leaf_golden.jsonl");
  auto file = io::read_certificates(in);
  Certificate c = std::get<Certificate>(file.records[0].content);
  c.labels.pop_back();  // a proper subset of a circuit is independent on both sides
  EXPECT_FALSE(verify_certificate(c));
}

TEST(Campaign, SeedsAndParallelismAreDeterministic) {
  std::vector<CaseDescriptor> cases;
  for (const auto& mc : enumerate_mixture_cases(4)) cases.push_back(mixture_case(ModelKind::K3P, mc));
  EXPECT_EQ(campaign::case_seed(1, cases[0]), campaign::case_seed(1, cases[0]));
  EXPECT_NE(campaign::case_seed(1, cases[0]), campaign::case_seed(2, cases[0]));
  EXPECT_NE(campaign::case_seed(1, cases[0]), campaign::case_seed(1, cases[1]));

  campaign::Options opt;
  opt.seed = 77;
  std::vector<std::string> serial, parallel;
  auto collect = [](std::vector<std::string>& into) {
    return [&into](std::size_t, const campaign::Outcome& o) {
      std::string s = to_string(o.id) + (o.result.found() ? " solved" : " unsolved");
      if (o.result.found()) {
        auto j = io::to_json(*o.result.certificate);
        j.erase("timestamp");
        s += " " + j.dump();
      }
      into.push_back(s);
    };
  };
  campaign::run_all(cases, opt, 1, collect(serial));
  campaign::run_all(cases, opt, 3, collect(parallel));
  EXPECT_EQ(serial, parallel);
  EXPECT_EQ(serial.size(), cases.size());
}

TEST(Campaign, ReportsBadCases) {
  CaseDescriptor mismatched{ModelKind::CFN, tree_spec(parse_tree("12|34")), tree_spec(parse_tree("12|345,123|45"))};
  auto out = campaign::run_case(mismatched, {});
  EXPECT_FALSE(out.error.empty());
}
