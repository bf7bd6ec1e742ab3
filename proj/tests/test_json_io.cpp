#include <gtest/gtest.h>

#include "support/brute.hpp"

using namespace liaison;

namespace {

MonomialIdeal worked_ideal() { return lex_ideal_from_hvector(HVector::artinian({1, 3, 6, 10, 4, 2}), 3); }

template <class T, class R>
T through_text(const T& value, R read) {
  return read(parse_json(to_json(value).dump(2)));
}

}  // namespace

TEST(JsonIo, IdealAndHVectorRoundTrip) {
  const auto J = worked_ideal();
  EXPECT_EQ(through_text(J, ideal_from_json), J);
  const auto j = to_json(MonomialIdeal(2, {{2, 0}, {1, 1}}));
  EXPECT_EQ(j.dump(), R"({"schema":"liaison.ideal/1","n":2,"gens":[[2,0],[1,1]]})");

  for (const auto& h : {HVector::artinian({1, 3, 6, 10, 4, 2}), HVector::truncated({1, 3, 5, 7})})
    EXPECT_EQ(through_text(h, hvector_from_json).values(), h.values());
  EXPECT_EQ(to_json(HVector::truncated({1, 2})).dump(), R"({"schema":"liaison.hvector/1","h":[1,2],"kind":{"truncated":1}})");
  EXPECT_TRUE(through_text(HVector::truncated({1, 2}), hvector_from_json).horizon().has_value());
}

TEST(JsonIo, MalformedInputIsAnInputError) {
  EXPECT_THROW(parse_json("{\"n\": 2,"), InputError);
  EXPECT_THROW(ideal_from_json(parse_json(R"({"n": 2})")), InputError);
  EXPECT_THROW(ideal_from_json(parse_json(R"({"n": 2, "gens": [[1, 0, 0]]})")), InputError);
  EXPECT_THROW(ideal_from_json(parse_json(R"({"n": 2, "gens": [[1, -1]]})")), InputError);
  EXPECT_THROW(ideal_from_json(parse_json(R"({"n": "two", "gens": []})")), InputError);
  EXPECT_THROW(ideal_from_json(parse_json(R"({"schema": "liaison.hvector/1", "n": 1, "gens": []})")), InputError);
  EXPECT_THROW(hvector_from_json(parse_json(R"({"h": [1, 2], "kind": "weird"})")), InputError);
  EXPECT_THROW(hvector_from_json(parse_json(R"({"h": [1, "x"], "kind": "artinian"})")), InputError);
  EXPECT_THROW(hvector_from_json(parse_json(R"({"h": [1, 2], "kind": {"truncated": 5}})")), InputError);
  EXPECT_THROW(matrix_from_json(parse_json(R"({"kind": "bf", "n": 2})")), InputError);
  EXPECT_EQ(ideal_from_json(parse_json(R"({"n": 2, "gens": []})")), MonomialIdeal::zero(2));
}

TEST(JsonIo, MatrixRoundTrip) {
  for (const auto& A : {default_matrix_bf(3, 4), default_matrix_tlift(3, 2, 5, 11)}) {
    const auto B = through_text(A, matrix_from_json);
    EXPECT_EQ(B, A);
    EXPECT_EQ(matrix_fingerprint(B), matrix_fingerprint(A));
  }
  auto C = default_matrix_tlift(2, 1, 2, 3);
  C.kind = MatrixKind::custom;
  C.seed = 0;
  EXPECT_EQ(through_text(C, matrix_from_json), C);
}

TEST(JsonIo, LiftedIdealIntegrity) {
  const PrimeField F;
  const auto J = worked_ideal();
  const auto I = lift_ideal(J, default_matrix_tlift(3, 1, 6, 1), F);
  const auto back = through_text(I, [](const Json& j) { return lifted_from_json(j); });
  EXPECT_EQ(back.source, I.source);
  EXPECT_EQ(back.matrix, I.matrix);
  EXPECT_EQ(back.generators, I.generators);

  auto j = to_json(I);
  j["matrix"]["rows"][0][0][3] = 17;
  EXPECT_THROW(lifted_from_json(j), VerificationError);

  j = to_json(I);
  j["generators"][0] = Json::array({Json::array({0, 0})});
  EXPECT_THROW(lifted_from_json(j), VerificationError);

  j = to_json(I);
  j.erase("matrix_hash");
  EXPECT_THROW(lifted_from_json(j), InputError);

  const auto pts = point_model(J, I.matrix, F);
  j = to_json(I, pts);
  EXPECT_EQ(j["points"].size(), 26u);
}

TEST(JsonIo, ArtinianCertificateRoundTripStillVerifies) {
  const auto J = worked_ideal();
  const auto cert = glicci_certificate_artinian(J, default_matrix_tlift(3, 1, 6, 1), OracleContext{PrimeField(), 8});
  const auto text = to_json(cert).dump();
  const auto back = certificate_from_json(parse_json(text));
  EXPECT_EQ(back.steps.size(), cert.steps.size());
  EXPECT_EQ(to_json(back).dump(), text);
  const auto rep = verify_certificate(back);
  EXPECT_TRUE(rep.passed()) << rep.to_text();
  const auto rj = to_json(rep);
  EXPECT_EQ(rj["schema"], "liaison.report/1");
}

TEST(JsonIo, BorelCertificateRoundTripAndTamper) {
  const auto cert = glicci_certificate_borel(MonomialIdeal::maximal_power(3, 2), OracleContext{PrimeField(), 6});
  auto j = to_json(cert);
  EXPECT_EQ(j["schema"], "liaison.certificate/1");
  EXPECT_EQ(j["steps"][0]["kind"], "bdl");
  EXPECT_EQ(j["steps"][1]["kind"], "hyperplane-descent");
  EXPECT_EQ(j["steps"][2]["kind"], "cone-descent");
  EXPECT_EQ(j["leaf"], "licci");
  EXPECT_TRUE(verify_certificate(certificate_from_json(parse_json(j.dump()))).passed());

  // multiplier x1 replaced by x2
  j["steps"][0]["data"]["link"]["multiplier"]["terms"][0][1] = Json::array({0, 1, 0});
  const auto rep = verify_certificate(certificate_from_json(j));
  ASSERT_FALSE(rep.passed());
  EXPECT_EQ(rep.first_failure()->scope, "step 1 (bdl) / link");

  j = to_json(cert);
  j["steps"][0]["kind"] = "teleport";
  EXPECT_THROW(certificate_from_json(j), InputError);
  j = to_json(cert);
  j["leaf"] = "tree";
  EXPECT_THROW(certificate_from_json(j), InputError);
  j = to_json(cert);
  j.erase("root");
  EXPECT_THROW(certificate_from_json(j), InputError);
}
