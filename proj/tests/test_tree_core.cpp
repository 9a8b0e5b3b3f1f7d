#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "incrtree/canonical.hpp"
#include "incrtree/counting.hpp"
#include "incrtree/enumerate.hpp"
#include "incrtree/grow.hpp"
#include "incrtree/oracle.hpp"
#include "incrtree/textform.hpp"

using namespace incrtree;

namespace {

std::vector<std::string> enumerate_texts(int d, int n) {
  std::vector<std::string> out;
  enumerate_dary(d, n, [&](const IncreasingTree& t) { out.push_back(to_text(t)); });
  return out;
}

}  // namespace

TEST_CASE("count_dary matches the product formula") {
  CHECK(count_dary(2, 4) == 24);
  CHECK(count_dary(3, 4) == 105);  // 3 * 5 * 7
  for (int d = 2; d <= 5; ++d) CHECK(count_dary(d, 1) == 1);
  // d = 2 gives n!
  CHECK(count_dary(2, 6) == 720);
  CHECK(count_dary(2, 10) == factorial(10));
  CHECK_THROWS_AS(count_dary(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(count_dary(2, 0), std::invalid_argument);
}

TEST_CASE("enumerate_dary yields every tree exactly once") {
  CHECK(enumerate_texts(2, 1).size() == 1);
  CHECK(enumerate_texts(2, 3).size() == 6);
  CHECK(enumerate_texts(3, 3).size() == 15);
  for (int d = 2; d <= 4; ++d) {
    for (int n = 1; n <= 5; ++n) {
      const auto texts = enumerate_texts(d, n);
      CHECK(BigInt(texts.size()) == count_dary(d, n));
      const std::set<std::string> distinct(texts.begin(), texts.end());
      CHECK(distinct.size() == texts.size());
    }
  }
}

TEST_CASE("enumeration order is insertion-slot order (golden)") {
  const std::vector<std::string> expected = {
      "1[s0:2[_,_],s1:3[_,_]]", "1[s0:2[s0:3[_,_],_],_]",
      "1[s0:2[_,s1:3[_,_]],_]", "1[s0:3[_,_],s1:2[_,_]]",
      "1[_,s1:2[s0:3[_,_],_]]", "1[_,s1:2[_,s1:3[_,_]]]"};
  CHECK(enumerate_texts(2, 3) == expected);

  std::vector<std::string> plane;
  enumerate_plane(3, [&](const IncreasingTree& t) { plane.push_back(to_text(t)); });
  CHECK(plane == std::vector<std::string>{"1(3 2)", "1(2 3)", "1(2(3))"});
}

TEST_CASE("enumerate_plane counts PORTs: (2n-3)!!") {
  std::size_t n3 = 0, n4 = 0, n1 = 0;
  enumerate_plane(3, [&](const IncreasingTree&) { ++n3; });
  enumerate_plane(4, [&](const IncreasingTree&) { ++n4; });
  enumerate_plane(1, [&](const IncreasingTree&) { ++n1; });
  CHECK(n3 == 3);
  CHECK(n4 == 15);
  CHECK(n1 == 1);
}

TEST_CASE("enumerate_recursive counts (n-1)!") {
  for (int n = 1; n <= 6; ++n) {
    std::size_t count = 0;
    enumerate_recursive(n, [&](const IncreasingTree& t) {
      ++count;
      t.validate();
    });
    CHECK(BigInt(count) == count_recursive(n));
  }
}

TEST_CASE("enumeration respects the tree budget") {
  EnumLimits tiny;
  tiny.max_trees = 10;
  CHECK_THROWS_AS(enumerate_dary(2, 5, [](const IncreasingTree&) {}, tiny),
                  resource_error);
  CHECK_NOTHROW(enumerate_dary(2, 3, [](const IncreasingTree&) {}, tiny));
}

TEST_CASE("gport_total_weight") {
  CHECK(gport_total_weight(1, 4) == 15);  // (2n-3)!!
  CHECK(gport_total_weight(2, 3) == 10);  // 2 * 5
  CHECK(gport_total_weight(Rational(1, 2), 1) == 1);
  CHECK(gport_total_weight(7, 1) == 1);
  CHECK_THROWS_AS(gport_total_weight(0, 3), std::invalid_argument);
}

TEST_CASE("weight_port") {
  // alpha = 1: C(j, j) = 1 for every outdegree
  enumerate_plane(5, [&](const IncreasingTree& t) {
    CHECK(weight_port(1, t) == 1);
  });
  // path of 3: two vertices of outdegree 1 -> C(2,1)^2 = 4
  const IncreasingTree path3 = parse_tree("1(2(3))");
  CHECK(weight_port(2, path3) == 4);
  CHECK(weight_port(Rational(1, 2), path3) == Rational(1, 4));

  // sum of weights over all PORTs of size n equals the total weight
  for (const Rational& alpha : {Rational(1), Rational(2), Rational(1, 2)}) {
    for (int n = 1; n <= 6; ++n) {
      Rational sum = 0;
      enumerate_plane(n, [&](const IncreasingTree& t) {
        sum += weight_port(alpha, t);
      });
      CHECK(sum == gport_total_weight(alpha, n));
    }
  }
}

TEST_CASE("tree_probability: uniform models") {
  enumerate_dary(2, 4, [&](const IncreasingTree& t) {
    CHECK(tree_probability(ModelParams::make_dary(2), t) == Rational(1, 24));
  });
  enumerate_plane(4, [&](const IncreasingTree& t) {
    CHECK(tree_probability(ModelParams::make_gport(1), t) == Rational(1, 15));
  });
}

TEST_CASE("tree_probability sums to 1 over the support") {
  const std::vector<ModelParams> models = {
      ModelParams::make_dary(2), ModelParams::make_dary(3),
      ModelParams::make_recursive(), ModelParams::make_gport(1),
      ModelParams::make_gport(2), ModelParams::make_gport(Rational(1, 2))};
  for (const ModelParams& model : models) {
    for (int n = 1; n <= 5; ++n) {
      Rational sum = 0;
      enumerate_model(model, n, [&](const IncreasingTree& t) {
        sum += tree_probability(model, t);
      });
      CHECK(sum == 1);
    }
  }
}

TEST_CASE("gport probability identity P(T) * W_n == w(T)") {
  for (const Rational& alpha : {Rational(1), Rational(2), Rational(1, 2)}) {
    const ModelParams model = ModelParams::make_gport(alpha);
    for (int n = 1; n <= 6; ++n) {
      const Rational total = gport_total_weight(alpha, n);
      enumerate_plane(n, [&](const IncreasingTree& t) {
        CHECK(tree_probability(model, t) * total == weight_port(alpha, t));
      });
    }
  }
}

TEST_CASE("recursive model: non-canonical embeddings have probability 0") {
  const ModelParams rec = ModelParams::make_recursive();
  CHECK(tree_probability(rec, parse_tree("1(2 3)")) == Rational(1, 2));
  CHECK(tree_probability(rec, parse_tree("1(3 2)")) == 0);
  Rational sum = 0;
  enumerate_plane(4, [&](const IncreasingTree& t) {
    sum += tree_probability(rec, t);
  });
  CHECK(sum == 1);
}

TEST_CASE("grow_dary basics") {
  Rng rng(7);
  const IncreasingTree t1 = grow_dary(2, 1, rng);
  CHECK(t1.size() == 1);
  CHECK(to_text(t1) == "1[_,_]");
  CHECK_THROWS_AS(grow_dary(1, 3, rng), std::invalid_argument);
  CHECK_THROWS_AS(grow_dary(2, 0, rng), std::invalid_argument);

  // free slots of a d-ary tree of size n: d*n - (n-1)
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + trial % 3;
    const IncreasingTree t = grow_dary(d, 30, rng);
    t.validate();
    int free_slots = 0;
    for (int v = 0; v < t.size(); ++v) free_slots += d - t.outdeg(v);
    CHECK(free_slots == d * t.size() - (t.size() - 1));
  }
}

TEST_CASE("grow_dary(3, 2): each root slot with probability 1/3") {
  const auto report = chi_square_vs_model(ModelParams::make_dary(3), 2, 30000, 11);
  CHECK(report.cells == 3);
  CHECK(report.p_value > 0.001);
}

TEST_CASE("grow_dary(2, 4) is uniform over the 24 trees") {
  const auto report = verify_uniformity(2, 4, 24000, 20240409);
  CHECK(report.cells == 24);
  CHECK(report.min_expected == doctest::Approx(1000.0));
  CHECK(report.p_value > 0.001);
}

TEST_CASE("grow_recursive basics and distribution") {
  Rng rng(5);
  CHECK(to_text(grow_recursive(2, rng)) == "1(2)");
  // n = 3: path vs two children of the root, each 1/2
  const auto r3 = chi_square_vs_model(ModelParams::make_recursive(), 3, 20000, 3);
  CHECK(r3.cells == 2);
  CHECK(r3.p_value > 0.001);
  // n = 4: 6 equally likely canonical trees
  const auto r4 = chi_square_vs_model(ModelParams::make_recursive(), 4, 30000, 4);
  CHECK(r4.cells == 6);
  CHECK(r4.p_value > 0.001);
}

TEST_CASE("grow_gport matches the weighted-PORT law") {
  // alpha = 1, n = 3: each of the three PORTs with probability 1/3
  const auto r1 = chi_square_vs_model(ModelParams::make_gport(1), 3, 30000, 17);
  CHECK(r1.cells == 3);
  CHECK(r1.p_value > 0.001);
  // alpha = 2: exact probabilities from tree_probability
  const auto r2 = chi_square_vs_model(ModelParams::make_gport(2), 3, 30000, 23);
  CHECK(r2.p_value > 0.001);
  const auto r3 =
      chi_square_vs_model(ModelParams::make_gport(Rational(1, 2)), 4, 30000, 29);
  CHECK(r3.p_value > 0.001);
  Rng rng(1);
  CHECK_THROWS_AS(grow_gport(-1.0, 3, rng), std::invalid_argument);
}

TEST_CASE("grown trees carry valid increasing labelings") {
  Rng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    grow_dary(2, 50, rng).validate();
    grow_gport(0.5, 50, rng).validate();
    grow_recursive(50, rng).validate();
  }
}

TEST_CASE("canonical_form basics") {
  const IncreasingTree single = IncreasingTree::dary(2);
  CHECK(canonical_form(single, Equivalence::labeled).bytes == "1[_,_]");
  CHECK(canonical_form(single, Equivalence::shape).bytes == "()");
  CHECK(canonical_form(IncreasingTree::plane(), Equivalence::shape).bytes ==
        "()");

  IncreasingTree left = IncreasingTree::dary(2);
  left.attach_dary(0, 0);
  IncreasingTree right = IncreasingTree::dary(2);
  right.attach_dary(0, 1);
  CHECK(canonical_form(left, Equivalence::labeled) !=
        canonical_form(right, Equivalence::labeled));
  CHECK(canonical_form(left, Equivalence::shape) ==
        canonical_form(right, Equivalence::shape));
}

TEST_CASE("shape forms are insensitive to child order") {
  CHECK(canonical_form(parse_tree("1(2(4) 3)"), Equivalence::shape) ==
        canonical_form(parse_tree("1(2 3(4))"), Equivalence::shape));
  CHECK(canonical_form(parse_tree("1(2(4) 3)"), Equivalence::shape) !=
        canonical_form(parse_tree("1(2(3(4)))"), Equivalence::shape));
}

TEST_CASE("distinct shapes among the 24 binary trees of size 4") {
  // brute force over the enumeration; 3 unordered shapes exist with
  // outdegree <= 2 (chain, cherry under a stem, leaf+path split)
  std::set<std::string> shapes;
  enumerate_dary(2, 4, [&](const IncreasingTree& t) {
    shapes.insert(canonical_form(t, Equivalence::shape).bytes);
  });
  CHECK(shapes.size() == 3);
}

TEST_CASE("canonical forms are stable under rebuild") {
  for (int n = 1; n <= 5; ++n) {
    enumerate_dary(2, n, [&](const IncreasingTree& t) {
      for (const auto eq : {Equivalence::labeled, Equivalence::shape}) {
        const CanonicalForm cf = canonical_form(t, eq);
        CHECK(canonical_form(from_canonical(cf, eq), eq) == cf);
      }
    });
    enumerate_plane(n, [&](const IncreasingTree& t) {
      for (const auto eq : {Equivalence::labeled, Equivalence::shape}) {
        const CanonicalForm cf = canonical_form(t, eq);
        CHECK(canonical_form(from_canonical(cf, eq), eq) == cf);
      }
    });
  }
}

TEST_CASE("shape fingerprints agree with shape bytes on the enumeration range") {
  // fingerprint equality must coincide with canonical shape equality
  std::vector<std::pair<std::string, ShapeFp>> seen;
  for (int n = 1; n <= 5; ++n) {
    enumerate_dary(2, n, [&](const IncreasingTree& t) {
      seen.emplace_back(canonical_form(t, Equivalence::shape).bytes,
                        shape_fingerprint(t));
    });
    enumerate_plane(n, [&](const IncreasingTree& t) {
      seen.emplace_back(canonical_form(t, Equivalence::shape).bytes,
                        shape_fingerprint(t));
    });
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (std::size_t j = i + 1; j < seen.size(); ++j)
      CHECK((seen[i].first == seen[j].first) ==
            (seen[i].second == seen[j].second));
}

TEST_CASE("textual round trip") {
  Rng rng(123);
  for (int trial = 0; trial < 25; ++trial) {
    const IncreasingTree t = grow_dary(2 + trial % 3, 1 + trial, rng);
    CHECK(parse_tree(to_text(t)) == t);
  }
  for (int trial = 0; trial < 25; ++trial) {
    const IncreasingTree t = grow_gport(1.0, 1 + trial, rng);
    CHECK(parse_tree(to_text(t)) == t);
  }
  CHECK(to_text(parse_tree("1(2(4) 3)")) == "1(2(4) 3)");
  CHECK(to_text(parse_tree("1[s0:2[_,_],_]")) == "1[s0:2[_,_],_]");
  CHECK_THROWS_AS(parse_tree("2(1)"), std::invalid_argument);   // root label
  CHECK_THROWS_AS(parse_tree("1(2"), std::invalid_argument);    // unbalanced
  CHECK_THROWS_AS(parse_tree("1(1)"), std::invalid_argument);   // duplicate
  CHECK_THROWS_AS(parse_tree("1(3)"), std::invalid_argument);   // not 1..n
  CHECK_THROWS_AS(parse_tree("1[s1:2[_,_],_]"), std::invalid_argument);
}

TEST_CASE("attach/pop maintain invariants") {
  IncreasingTree t = IncreasingTree::dary(2);
  const int a = t.attach_dary(0, 1);
  CHECK(a == 1);
  CHECK_THROWS_AS(t.attach_dary(0, 1), std::invalid_argument);  // occupied
  CHECK_THROWS_AS(t.attach_dary(0, 2), std::invalid_argument);  // bad slot
  CHECK_THROWS_AS(t.attach_plane(0, 0), std::logic_error);      // wrong kind
  t.attach_dary(1, 0);
  t.validate();
  t.pop_last();
  CHECK(t.size() == 2);
  t.validate();

  IncreasingTree p = IncreasingTree::plane();
  p.attach_rightmost(0);
  p.attach_plane(0, 0);
  CHECK(to_text(p) == "1(3 2)");
  CHECK_THROWS_AS(p.attach_plane(0, 3), std::invalid_argument);
  p.pop_last();
  CHECK(to_text(p) == "1(2)");
  p.pop_last();
  CHECK_THROWS_AS(p.pop_last(), std::logic_error);  // cannot remove the root
}

TEST_CASE("custom labels must be order-isomorphic") {
  IncreasingTree t = parse_tree("1(2 3)");
  t.set_custom_labels({5, 8, 11});
  CHECK(t.label(0) == 5);
  CHECK(t.has_custom_labels());
  CHECK(canonical_form(t, Equivalence::labeled).bytes == "1(2 3)");
  CHECK_THROWS_AS(parse_tree("1(2 3)").set_custom_labels({5, 8}),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_tree("1(2 3)").set_custom_labels({5, 8, 8}),
                  std::invalid_argument);
}

TEST_CASE("model parsing") {
  CHECK(ModelParams::parse("dary:2") == ModelParams::make_dary(2));
  CHECK(ModelParams::parse("recursive") == ModelParams::make_recursive());
  CHECK(ModelParams::parse("gport:1/2") ==
        ModelParams::make_gport(Rational(1, 2)));
  CHECK(ModelParams::parse("port") == ModelParams::make_gport(1));
  CHECK(ModelParams::parse("gport:0.5") ==
        ModelParams::make_gport(Rational(1, 2)));
  CHECK_THROWS_AS(ModelParams::parse("dary"), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams::parse("dary:1"), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams::parse("gport:-1"), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams::parse("weird"), std::invalid_argument);
  CHECK(ModelParams::parse("dary:3").to_string() == "dary:3");
  CHECK(ModelParams::parse("gport:1/2").to_string() == "gport:1/2");
}
