#include <gtest/gtest.h>

#include "phinlab/fixtures.hpp"
#include "phinlab/serialize.hpp"
#include "test_helpers.hpp"

using namespace phinlab;

namespace {

FieldContext C(long p, int e, int f) { return FieldContext::make(p, e, f); }

ModuleFile reparse(const Json& j) { return module_from_json(Json::parse(j.dump())); }

}  // namespace

TEST(Scalars, ExactStrings) {
  EXPECT_EQ(to_json(Scalar(1, 3)), Json("1/3"));
  EXPECT_EQ(scalar_from_json(Json(7)), 7);
  EXPECT_EQ(scalar_from_json(Json("-6/4")), Scalar(-3, 2));
  EXPECT_ERROR_KIND(scalar_from_json(Json(0.5)), ErrorKind::ParseError);
}

TEST(ModuleJson, RoundTripAuxiliary) {
  const auto d = auxiliary_module({Scalar(1, 2), -3, 0, Scalar(7, 5)}, C(3, 2, 2));
  const std::vector<Refinement> refs{auxiliary_refinement(d, {1, 2, 3}), auxiliary_refinement(d, {1, 3, 2})};
  const Json j = module_to_json(d, refs);
  const ModuleFile once = reparse(j);
  EXPECT_EQ(once.module, d);
  EXPECT_EQ(once.refinements, refs);
  const ModuleFile twice = reparse(module_to_json(once.module, once.refinements));
  EXPECT_EQ(twice.module, once.module);
  EXPECT_EQ(twice.refinements, once.refinements);
  EXPECT_EQ(dump_canonical(module_to_json(twice.module, twice.refinements)), dump_canonical(j));
}

TEST(ModuleJson, RoundTripTensorBlock) {
  const auto tf = tensor_fixtures(3, {Scalar(-2, 3)}, {0}, {2}, C(5, 1, 1));
  EXPECT_EQ(reparse(module_to_json(tf.big)).module, tf.big);
  EXPECT_EQ(reparse(module_to_json(tf.block)).module, tf.block);
}

TEST(ModuleJson, SortedKeys) {
  const std::string text = dump_canonical(module_to_json(unit_object(C(2, 1, 1))));
  EXPECT_LT(text.find("\"N\""), text.find("\"ctx\""));
  EXPECT_LT(text.find("\"ctx\""), text.find("\"filtration\""));
  EXPECT_LT(text.find("\"kind\""), text.find("\"phi\""));
}

TEST(ModuleJson, AcceptsIntegers) {
  Json j = module_to_json(construct_rank1(3, {1}, C(3, 1, 1)));
  j["phi"][0][0][0] = 3;
  EXPECT_EQ(module_from_json(j).module, construct_rank1(3, {1}, C(3, 1, 1)));
}

TEST(ModuleJson, Errors) {
  const Json good = module_to_json(auxiliary_module({1}, C(3, 1, 1)));
  Json j = good;
  j.erase("phi");
  EXPECT_ERROR_KIND(module_from_json(j), ErrorKind::ParseError);
  j = good;
  j["n"] = "three";
  EXPECT_ERROR_KIND(module_from_json(j), ErrorKind::ParseError);
  j = good;
  j["phi"][0].erase(j["phi"][0].begin());
  EXPECT_ERROR_KIND(module_from_json(j), ErrorKind::ValidationError);
  j = good;
  j["kind"] = "family";
  EXPECT_ERROR_KIND(module_from_json(j), ErrorKind::ParseError);
  j = good;
  j["schema"] = "phinlab/0";
  EXPECT_ERROR_KIND(module_from_json(j), ErrorKind::ParseError);
}

TEST(ModuleJson, RefinementChecked) {
  const auto d = auxiliary_module({1}, C(3, 1, 1));
  Json j = module_to_json(d, {auxiliary_refinement(d, {1, 2, 3})});
  j["refinements"][0]["flag"][0][0] = Json::array({Json::array({"0/1", "1/1", "0/1"})});
  EXPECT_ERROR_KIND(module_from_json(j), ErrorKind::NotStable);
}

TEST(FamilyJson, RoundTrip) {
  FamilyFile fam;
  fam.ctx = C(3, 1, 2);
  InfinitesimalCharacter c;
  c.base_weights = {1, 2};
  c.eps_weights = {Scalar(1, 3), 0};
  c.eps_at_p = Scalar(-5, 2);
  c.smooth_tag = "smooth_1";
  fam.characters = {c, c};
  fam.L = std::vector<Scalar>{1, Scalar(2, 7)};
  fam.s = 1;
  fam.t = 2;
  const FamilyFile back = family_from_json(Json::parse(family_to_json(fam).dump()));
  EXPECT_EQ(back.characters, fam.characters);
  EXPECT_EQ(back.L, fam.L);
  EXPECT_EQ(back.s, fam.s);
  EXPECT_EQ(back.t, fam.t);
  EXPECT_EQ(family_to_json(back), family_to_json(fam));
}

TEST(ClassJson, RoundTrip) {
  const UnramifiedClass x{Scalar(1, 2), {3, 0}};
  const KummerClass y{-1, {Scalar(4, 9), 2}};
  const auto x2 = unramified_from_json(class_to_json(x));
  const auto y2 = kummer_from_json(class_to_json(y));
  EXPECT_EQ(x2.a0, x.a0);
  EXPECT_EQ(x2.a, x.a);
  EXPECT_EQ(y2.b0, y.b0);
  EXPECT_EQ(y2.b, y.b);
  EXPECT_ERROR_KIND(kummer_from_json(class_to_json(x)), ErrorKind::ParseError);
}
