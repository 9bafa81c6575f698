#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "eulerlab/cli.hpp"
#include "eulerlab/io.hpp"

using namespace eulerlab;
using nlohmann::json;

namespace {

struct Outcome {
  int code = 0;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json machine(std::vector<std::string> args) {
  args.push_back("--machine");
  const auto o = call(args);
  EXPECT_EQ(o.code, 0) << o.err;
  const auto doc = json::parse(o.out);
  EXPECT_EQ(doc["command"], args[0]);
  return doc["result"];
}

const char* kRankTwo = R"({"group":{"kind":"elem_abelian_2","rank":2},
  "module":{"entries":[{"char":[1,0],"mult":3},{"char":[0,1],"mult":1},{"char":[1,1],"mult":1}]},
  "target":{"entries":[{"char":[1,0],"mult":1}]}})";

const char* kTorus = R"({"group":{"kind":"torus","rank":1},
  "module":{"entries":[{"char":[1],"mult":2}]},"target":{"entries":[{"char":[5],"mult":1}]}})";

const char* kStiefel = R"({"group":{"kind":"elem_abelian_2","rank":1},
  "module":{"entries":[{"char":[1],"mult":1}]},"target":{"entries":[{"char":[1],"mult":3}]},"n":4})";

RepE rank_two_u() {
  RepE u(2);
  u.add(CharF2{0b01}, 3).add(CharF2{0b10}, 1).add(CharF2{0b11}, 1);
  return u;
}

RepE rank_two_v() {
  RepE v(2);
  v.add(CharF2{0b01}, 1);
  return v;
}

class SeedEnv : public ::testing::Test {
 protected:
  void TearDown() override { unsetenv("EULERLAB_SEED"); }
};

}  // namespace

TEST(Document, ParsesBothKinds) {
  const auto d = parse_document(kRankTwo);
  EXPECT_EQ(d.kind, GroupKind::ElemAbelian2);
  EXPECT_EQ(d.module_e, rank_two_u());
  EXPECT_EQ(d.target_e, rank_two_v());
  EXPECT_TRUE(d.has_target);
  const auto t = parse_document(kTorus);
  EXPECT_EQ(t.kind, GroupKind::Torus);
  EXPECT_EQ(t.module_t.dim(), 2);
  EXPECT_EQ(parse_document(kStiefel).n, 4);
}

TEST(Document, RejectsMalformedInput) {
  const std::vector<std::string> bad{
      "not json",
      R"({"group":{"kind":"elem_abelian_2","rank":1},"module":{"entries":[]},"extra":1})",
      R"({"group":{"kind":"elem_abelian_2","rank":1},"module":{"entries":[{"char":[1],"mult":1},{"char":[1],"mult":2}]}})",
      R"({"group":{"kind":"elem_abelian_2","rank":1},"module":{"entries":[{"char":[1],"mult":0}]}})",
      R"({"group":{"kind":"elem_abelian_2","rank":0},"module":{"entries":[]}})",
      R"({"group":{"kind":"elem_abelian_2","rank":2},"module":{"entries":[{"char":[1],"mult":1}]}})",
      R"({"group":{"kind":"elem_abelian_2","rank":1},"module":{"entries":[{"char":[2],"mult":1}]}})",
      R"({"group":{"kind":"klein","rank":1},"module":{"entries":[]}})",
      R"({"group":{"kind":"torus","rank":1}})",
  };
  for (const auto& text : bad) {
    EXPECT_THROW(parse_document(text), InputError) << text;
    EXPECT_EQ(call({"euler-check", "--inline", text}).code, 2) << text;
  }
}

TEST(CliRoundTrip, Reduce) {
  const auto j = machine({"reduce", "--field", "Q", "--vars", "2", "--poly", "T2^3 + T1", "--gen", "2*T1^2",
                          "--gen", "T2^2 - T1*T2"});
  const auto r = j.get<ReduceResult>();
  const TriangularSystem s({Poly::parse("2*T1^2", Field::Q, 2), Poly::parse("T2^2 - T1*T2", Field::Q, 2)});
  const Poly p = Poly::parse("T2^3 + T1", Field::Q, 2);
  EXPECT_EQ(r, (ReduceResult{p, s, reduce(p, s), reduce(p, s).is_zero()}));
}

TEST(CliRoundTrip, EulerCheck) {
  const auto r = machine({"euler-check", "--inline", kRankTwo}).get<EulerCheckResult>();
  const auto flag = find_flag(rank_two_u(), rank_two_v());
  EXPECT_EQ(r.kind, GroupKind::ElemAbelian2);
  EXPECT_EQ(r.flag, flag_coords(flag));
  EXPECT_EQ(r.result, euler_nonvanishing(rank_two_u(), rank_two_v(), flag));

  const auto t = machine({"euler-check", "--inline", kTorus}).get<EulerCheckResult>();
  const auto d = parse_document(kTorus);
  EXPECT_EQ(t.result, euler_nonvanishing(d.module_t, d.target_t, find_rational_flag(d.module_t, d.target_t)));
}

TEST(CliRoundTrip, FlagFind) {
  EXPECT_EQ(machine({"flag-find", "--inline", kRankTwo}).get<FlagFindResult>(),
            find_flag_with_subgroup(rank_two_u(), rank_two_v()));
  const auto d = parse_document(kTorus);
  const auto f = find_rational_flag(d.module_t, d.target_t);
  EXPECT_EQ(machine({"flag-find", "--inline", kTorus}).get<TorusFlagResult>(),
            (TorusFlagResult{f, decompose(d.module_t, f).dims(), decompose(d.target_t, f).dims()}));
}

TEST(CliRoundTrip, Bound) {
  EXPECT_EQ(machine({"bound", "--theorem", "free-zero-set", "--inline", kRankTwo}).get<BoundReport>(),
            bound_free_zero_set(rank_two_u(), rank_two_v()));
  const auto s = parse_document(kStiefel);
  EXPECT_EQ(machine({"bound", "--theorem", "stiefel", "--inline", kStiefel}).get<BoundReport>(),
            bound_stiefel(s.module_e, s.target_e, 4));
  const auto d = parse_document(kTorus);
  EXPECT_EQ(machine({"bound", "--theorem", "torus-interior", "--inline", kTorus}).get<BoundReport>(),
            bound_torus(d.module_t, d.target_t, TorusVariant::Interior));
  EXPECT_EQ(machine({"bound", "--theorem", "torus-annulus", "--inline", kTorus}).get<BoundReport>(),
            bound_torus(d.module_t, d.target_t, TorusVariant::Annulus));
}

TEST(CliRoundTrip, FlagRing) {
  const auto r = machine({"flag-ring", "-n", "4", "-l", "2", "--verify", "--samples", "20", "--seed", "3"})
                     .get<FlagRingResult>();
  EXPECT_EQ(r, (FlagRingResult{flag_ring(4, 2), verify_flag_ring(4, 2, {std::nullopt, 20, 3})}));
  const auto p = machine({"flag-ring", "-n", "5", "-l", "3", "--bounds", "2,4,5"}).get<FlagRingResult>();
  EXPECT_EQ(p, (FlagRingResult{flag_ring(5, 3, std::vector<int>{2, 4, 5}), std::nullopt}));
}

TEST(CliRoundTrip, Sympow) {
  const auto t = machine({"sympow", "-d", "3", "--inline",
                          R"({"group":{"kind":"elem_abelian_2","rank":2},
                              "module":{"entries":[{"char":[1,0],"mult":1},{"char":[0,1],"mult":1}]}})"})
                     .get<SymPowerTable>();
  RepE u(2);
  u.add(CharF2{0b01}, 1).add(CharF2{0b10}, 1);
  EXPECT_EQ(t, (SymPowerTable{u, 3, sym_multiplicities(u, 3)}));

  const auto e = machine({"sympow", "-d", "2", "--inline", kRankTwo}).get<EmbeddingResult>();
  EXPECT_EQ(e, min_embedding_k(rank_two_u(), rank_two_v(), 2));
}

TEST(CliRoundTrip, Torus) {
  const auto d = parse_document(kTorus);
  EXPECT_EQ(machine({"torus-decompose", "--inline", kTorus}).get<LineDecomposition>(),
            line_decomposition(d.module_t));
  const auto r = machine({"torus-example", "-a", "3", "-b", "5", "-c", "2", "--samples", "500"})
                     .get<TorusExampleResult>();
  const auto m = circle_example(3, 5, 2);
  EXPECT_EQ(r.params, circle_params(3, 5, 2));
  EXPECT_EQ(r.source_layout, m.source_layout);
  EXPECT_EQ(r.target_layout, m.target_layout);
  EXPECT_EQ(r.report, verify_equivariance(m, {500, 1e-9, 0, Execution::Parallel}));
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> cmds{
      {"flag-find", "--inline", kRankTwo},
      {"bound", "--theorem", "free-zero-set", "--inline", kRankTwo, "--machine"},
      {"flag-ring", "-n", "4", "-l", "3", "--verify", "--samples", "10"},
      {"torus-example", "-a", "2", "-b", "3", "-c", "1", "--samples", "300", "--machine"},
  };
  for (const auto& c : cmds) {
    const auto a = call(c), b = call(c);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.err, b.err);
    EXPECT_EQ(a.code, b.code);
  }
}

TEST(Cli, ExitCodes) {
  const auto ok = call({"bound", "--theorem", "free-zero-set", "--inline", kRankTwo});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("bound: 4"), std::string::npos);

  EXPECT_EQ(call({"flag-ring", "-n", "3", "-l", "2", "--verify"}).code, 0);

  const auto gcd = call({"torus-example", "-a", "2", "-b", "4", "-c", "1"});
  EXPECT_EQ(gcd.code, 2);
  EXPECT_NE(gcd.err.find("gcd(a,b) must be 1"), std::string::npos);

  const auto na = call({"bound", "--theorem", "free-zero-set", "--inline",
                        R"({"group":{"kind":"elem_abelian_2","rank":1},"module":{"entries":[{"char":[0],"mult":2}]},
                            "target":{"entries":[{"char":[1],"mult":1}]}})"});
  EXPECT_EQ(na.code, 1);
  EXPECT_NE(na.err.find("hypothesis failed: dim U - dim V > dim U^E"), std::string::npos);

  const auto vanish = call({"euler-check", "--inline",
                            R"({"group":{"kind":"elem_abelian_2","rank":1},"module":{"entries":[{"char":[1],"mult":2}]},
                                "target":{"entries":[{"char":[1],"mult":2}]},"flag":{"dual_basis":[[1]]}})"});
  EXPECT_EQ(vanish.code, 1);

  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"nonsense"}).code, 2);
  EXPECT_EQ(call({"bound", "--theorem", "other", "--inline", kRankTwo}).code, 2);
  EXPECT_EQ(call({"euler-check"}).code, 2);
  EXPECT_EQ(call({"euler-check", "-i", "/nonexistent/doc.json"}).code, 2);
  EXPECT_EQ(call({"flag-ring", "-n", "3", "-l", "5"}).code, 2);
  EXPECT_EQ(call({"reduce", "--vars", "1", "--poly", "T1", "--gen", "T2"}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST_F(SeedEnv, EnvironmentSeedIsDefault) {
  unsetenv("EULERLAB_SEED");
  EXPECT_EQ(cli::default_seed(), 0u);
  setenv("EULERLAB_SEED", "17", 1);
  EXPECT_EQ(cli::default_seed(), 17u);
  const auto from_env = call({"torus-example", "-a", "2", "-b", "3", "-c", "1", "--samples", "50", "--machine"});
  const auto explicit_seed =
      call({"torus-example", "-a", "2", "-b", "3", "-c", "1", "--samples", "50", "--machine", "--seed", "17"});
  EXPECT_EQ(from_env.out, explicit_seed.out);
  EXPECT_EQ(json::parse(from_env.out)["result"]["report"]["seed"], 17);
  // The flag wins over the environment.
  const auto flag_wins =
      call({"torus-example", "-a", "2", "-b", "3", "-c", "1", "--samples", "50", "--machine", "--seed", "4"});
  EXPECT_EQ(json::parse(flag_wins.out)["result"]["report"]["seed"], 4);
  setenv("EULERLAB_SEED", "abc", 1);
  EXPECT_THROW(cli::default_seed(), InputError);
  EXPECT_EQ(call({"torus-example", "-a", "2", "-b", "3", "-c", "1", "--samples", "5"}).code, 2);
}
