#include <catch2/catch_amalgamated.hpp>

#include "rcech/extensions.hpp"
#include "rcech/io.hpp"
#include "rcech/samples.hpp"

using namespace rcech;

namespace {

bool same_groupoid(const RealGroupoid& a, const RealGroupoid& b) {
  if (a.num_objects != b.num_objects || a.arrows.size() != b.arrows.size()) return false;
  for (std::size_t i = 0; i < a.arrows.size(); ++i)
    if (a.arrows[i].src != b.arrows[i].src || a.arrows[i].tgt != b.arrows[i].tgt) return false;
  return a.compose_table == b.compose_table && a.inverse == b.inverse &&
         a.obj_involution == b.obj_involution && a.arr_involution == b.arr_involution;
}

}  // namespace

TEST_CASE("every sample groupoid survives a serialization round trip") {
  for (const std::string& name : sample_names()) {
    INFO(name);
    RealGroupoid g = sample_groupoid(name);
    RealGroupoid back = groupoid_from_json(groupoid_to_json(g));
    CHECK(same_groupoid(g, back));
  }
}

TEST_CASE("recipes build the same groupoids as the constructors") {
  CHECK(same_groupoid(
      groupoid_from_json(parse_json_text(R"({"kind":"group","orders":[4],"involution":"inversion"})")),
      sample_groupoid("z4_inv")));
  CHECK(same_groupoid(
      groupoid_from_json(parse_json_text(R"({"kind":"pair","points":2,"involution":[1,0]})")),
      sample_groupoid("pair2_swap")));
  CHECK(same_groupoid(
      groupoid_from_json(parse_json_text(R"({"kind":"real_space","points":3,"involution":[1,0,2]})")),
      sample_groupoid("points3_mixed")));
  CHECK(same_groupoid(
      groupoid_from_json(parse_json_text(
          R"({"kind":"swap_double","of":{"kind":"group","orders":[3]}})")),
      sample_groupoid("double_z3")));
  CHECK(same_groupoid(
      groupoid_from_json(parse_json_text(
          R"({"kind":"orientifold","points":2,"point_involution":[1,0],
              "group":{"orders":[2]},"action":[[0,1],[1,0]]})")),
      sample_groupoid("orientifold_ab")));
  // A pair recipe without an involution defaults to the identity.
  CHECK(same_groupoid(groupoid_from_json(parse_json_text(R"({"kind":"pair","points":2})")),
                      sample_groupoid("pair2")));
}

TEST_CASE("malformed groupoid files are rejected with pointed messages") {
  auto reject = [](const char* text, const char* needle) {
    CHECK_THROWS_WITH(groupoid_from_json(parse_json_text(text)),
                      Catch::Matchers::ContainsSubstring(needle));
  };
  reject(R"({"arrows":[]})", "missing field 'objects'");
  reject(R"({"kind":"moebius"})", "unknown kind");
  reject(R"({"objects":1,"arrows":[{"src":0,"tgt":2}],"compose":[],"inverse":[0],
             "involution":{"objects":[0],"arrows":[0]}})",
         "out of range");
  reject(R"({"objects":1,"arrows":[{"src":0,"tgt":0}],"compose":[[0,0,0],[0,0,1]],
             "inverse":[0],"involution":{"objects":[0],"arrows":[0]}})",
         "out of range");
  reject(R"({"objects":1,"arrows":[{"src":0,"tgt":0},{"src":0,"tgt":0}],
             "compose":[[0,0,0],[0,1,1],[1,0,1],[1,1,0]],"inverse":[0,1],
             "involution":{"objects":[0],"arrows":[0,1]},"extra":3})",
         "unknown field 'extra'");
  // Structurally fine JSON whose axioms fail is caught by validation.
  reject(R"({"objects":1,"arrows":[{"src":0,"tgt":0},{"src":0,"tgt":0}],
             "compose":[[0,0,0],[0,1,1],[1,0,1],[1,1,0]],"inverse":[0,0],
             "involution":{"objects":[0],"arrows":[0,1]}})",
         "inverse");
}

TEST_CASE("coefficient literals cover the advertised forms") {
  CHECK(coefficient_from_token("Z2").name == coeff_Zm(2, +1).name);
  CHECK(coefficient_from_token("Z8").order() == 8);
  CHECK(coefficient_from_token("Z").orders == std::vector<Int>{0});
  CHECK(coefficient_from_token("Z(0,1)").involution(0, 0) == -1);
  CHECK(coefficient_from_token("Zm(5,-1)").involution(0, 0) == -1);
  CHECK(coefficient_from_token("Zm(4,+1)").trivial_involution());
  CHECK(coefficient_from_token("S1").circle);
  CHECK_THROWS_AS(coefficient_from_token("Q"), std::invalid_argument);
  CHECK_THROWS_AS(coefficient_from_token("Z1"), std::invalid_argument);
  CHECK_THROWS_AS(coefficient_from_token("Zm(1,+1)"), std::invalid_argument);
}

TEST_CASE("complex matrices and type models round trip") {
  TypeModel m = reference_model(6);
  TypeModel back = type_model_from_json(type_model_to_json(m));
  CHECK((back.gamma - m.gamma).norm() == 0.0);
  CHECK((back.U - m.U).norm() == 0.0);
  CHECK(back.odd == m.odd);
  CHECK(back.lambda == m.lambda);

  // im defaults to zero, and ragged rows are rejected.
  CMat r = cmatrix_from_json(parse_json_text(R"({"re":[[1,0],[0,-1]]})"));
  CHECK((r - reference_model(0).gamma).norm() == 0.0);
  CHECK_THROWS_WITH(cmatrix_from_json(parse_json_text(R"({"re":[[1,0],[0]]})")),
                    Catch::Matchers::ContainsSubstring("ragged"));
  CHECK_THROWS_AS(type_model_from_json(parse_json_text(R"({"gamma":{"re":[[1]]}})")),
                  std::invalid_argument);
}

TEST_CASE("value tables accept sparse Real data and reject the rest") {
  Nerve nv = build_nerve(sample_groupoid("z2"), 2);
  RealCoefficient z2 = coeff_Zm(2, +1);
  ValueTable t =
      value_table_from_json(nv, z2, 1, parse_json_text(R"({"level":1,"values":[[1,[1]]]})"));
  CHECK(t.values[0] == IntVec{0});
  CHECK(t.values[1] == IntVec{1});
  Json back = value_table_to_json(t);
  CHECK(back["values"].size() == 1);  // zeros stay implicit

  CHECK_THROWS_WITH(
      value_table_from_json(nv, z2, 1, parse_json_text(R"({"level":2,"values":[]})")),
      Catch::Matchers::ContainsSubstring("expected level 1"));
  CHECK_THROWS_WITH(
      value_table_from_json(nv, z2, 1, parse_json_text(R"({"level":1,"values":[[1,[1]],[1,[1]]]})")),
      Catch::Matchers::ContainsSubstring("twice"));
  CHECK_THROWS_WITH(
      value_table_from_json(nv, z2, 1, parse_json_text(R"({"level":1,"values":[[0,[1,0]]]})")),
      Catch::Matchers::ContainsSubstring("1 coordinates"));

  // A value pinned on one half of a swapped pair breaks the Real condition.
  Nerve dbl = build_nerve(sample_groupoid("double_point"), 1);
  CHECK_THROWS_WITH(
      value_table_from_json(dbl, coeff_Zm(3, -1), 0, parse_json_text(R"({"level":0,"values":[[0,[1]]]})")),
      Catch::Matchers::ContainsSubstring("not Real"));
  ValueTable ok = value_table_from_json(
      dbl, coeff_Zm(3, -1), 0, parse_json_text(R"({"level":0,"values":[[0,[1]],[1,[2]]]})"));
  CHECK(ok.values[1] == IntVec{2});
}

TEST_CASE("rational cochains enforce reality and the cocycle identity") {
  Nerve nv = build_nerve(sample_groupoid("z2"), 3);
  // The order two extension cocycle: one half on the simplex (g, g).
  RationalCochain w =
      rational_cochain_from_json(nv, 2, parse_json_text(R"({"level":2,"den":2,"values":[[3,1]]})"));
  CHECK(w.numerators == std::vector<Int>{0, 0, 0, 1});
  // Same values written over denominator four.
  RationalCochain w4 =
      rational_cochain_from_json(nv, 2, parse_json_text(R"({"level":2,"den":4,"values":[[3,2]]})"));
  CHECK(w4.numerators == std::vector<Int>{0, 0, 0, 2});

  CHECK_THROWS_WITH(
      rational_cochain_from_json(nv, 2, parse_json_text(R"({"level":2,"den":2,"values":[[1,1]]})")),
      Catch::Matchers::ContainsSubstring("not a cocycle"));
  CHECK_THROWS_WITH(
      rational_cochain_from_json(nv, 2, parse_json_text(R"({"level":2,"den":0,"values":[]})")),
      Catch::Matchers::ContainsSubstring("positive denominator"));

  // With a free involution, assigning a half to only one of two conjugate
  // simplices fails reality before the cocycle test runs.
  Nerve dbl = build_nerve(sample_groupoid("double_z2"), 3);
  std::size_t c = dbl.involution(2, 0);
  REQUIRE(c != 0);
  CHECK_THROWS_WITH(
      rational_cochain_from_json(dbl, 2, parse_json_text(R"({"level":2,"den":4,"values":[[0,1]]})")),
      Catch::Matchers::ContainsSubstring("not Real"));
}

TEST_CASE("twist classes from rational data agree with the halves reader") {
  Nerve nv = build_nerve(sample_groupoid("z2"), 3);
  ExtGroup ext(nv);
  std::vector<Int> nums = {0, 0, 0, 1};
  std::vector<int> halves = {0, 0, 0, 1};
  CHECK(ext.twist_class(nums, 2) == ext.twist_class_of_halves(halves));
  CHECK(ext.twist_class(nums, 2) == IntVec{1});
  // Doubling numerator and denominator names the same circle values.
  CHECK(ext.twist_class({0, 0, 0, 2}, 4) == IntVec{1});
  CHECK_THROWS_AS(ext.twist_class({0, 0, 0, 1}, 4), std::invalid_argument);
}

TEST_CASE("extension elements assemble from explicit cochain files") {
  Nerve nv = build_nerve(sample_groupoid("z2"), 3);
  ExtGroup ext(nv);
  ValueTable delta = value_table_from_json(nv, coeff_Zm(2, +1), 1,
                                           parse_json_text(R"({"level":1,"values":[[1,[1]]]})"));
  RationalCochain omega =
      rational_cochain_from_json(nv, 2, parse_json_text(R"({"level":2,"den":2,"values":[]})"));
  ExtElement g = ext.element_from_cochains(nv, delta, omega.numerators, omega.den);
  CHECK(g.grading == IntVec{1});
  CHECK(g.twist_num == IntVec{0});
  // The square picks up the twist: the known order four structure.
  CHECK(ext.multiply(g, g) == (ExtElement{IntVec{0}, IntVec{1}}));

  ValueTable zero = value_table_from_json(nv, coeff_Zm(2, +1), 1,
                                          parse_json_text(R"({"level":1,"values":[]})"));
  ExtElement w = ext.element_from_cochains(nv, zero, {0, 0, 0, 1}, 2);
  CHECK(w.grading == IntVec{0});
  CHECK(w.twist_num == IntVec{1});
}

TEST_CASE("fingerprints and reports are deterministic") {
  CHECK(fnv1a("") == 14695981039346656037ull);
  CHECK(fnv1a("abc") == 0xe71fa2190541574bull);

  Report r;
  r.command = {"cohomology", "--coeff", "Z2"};
  r.results["HR"] = "Z/2";
  r.lines.push_back("HR^1 = Z/2");
  std::string once = r.render(), twice = r.render();
  CHECK(once == twice);
  Json parsed = parse_json_text(once);
  CHECK(parsed["scope"] == kScopeNote);
  CHECK(parsed["oracle"] == "not run");
  CHECK(parsed["output"][0] == "HR^1 = Z/2");
}
