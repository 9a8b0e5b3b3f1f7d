#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>

#include "incrtree/additive.hpp"
#include "incrtree/canonical.hpp"
#include "incrtree/counting.hpp"
#include "incrtree/enumerate.hpp"
#include "incrtree/grow.hpp"
#include "incrtree/oracle.hpp"
#include "incrtree/subtrees.hpp"
#include "incrtree/symmetry.hpp"
#include "incrtree/textform.hpp"

using namespace incrtree;

namespace {

std::vector<TollPtr> builtin_tolls_for_tests() {
  return {
      make_leaf_toll(),
      make_outdegree_toll(0),
      make_outdegree_toll(1),
      make_path_length_toll(),
      make_shape_toll(),
      make_fringe_size_toll(2),
      make_fringe_occurrence_toll(parse_tree("1(2)")),
      make_log_root_subtrees_toll(),
      make_log_branch_symmetry_toll(),
      make_orbits_toll(),
      make_constant_toll(0.5),
  };
}

void for_all_small_trees(int dary_cutoff, int plane_cutoff,
                         const TreeVisitor& visit) {
  for (int n = 1; n <= dary_cutoff; ++n) {
    enumerate_dary(2, n, visit);
    enumerate_dary(3, n, visit);
  }
  for (int n = 1; n <= plane_cutoff; ++n) enumerate_plane(n, visit);
}

}  // namespace

TEST_CASE("evaluate_additive on the worked examples") {
  const IncreasingTree path3 = parse_tree("1(2(3))");
  CHECK(evaluate_additive(*make_leaf_toll(), path3).value ==
        doctest::Approx(1.0));
  // internal path length of a path: 0 + 1 + 2
  CHECK(evaluate_additive(*make_path_length_toll(), path3).value ==
        doctest::Approx(3.0));
  // shape functional on root + two children: log 3 + 2 log 1
  CHECK(evaluate_additive(*make_shape_toll(), parse_tree("1(2 3)")).value ==
        doctest::Approx(std::log(3.0)));
}

TEST_CASE("per-vertex breakdown sums to the functional") {
  const IncreasingTree t = parse_tree("1(2(4 5) 3)");
  const auto fv = evaluate_additive(*make_shape_toll(), t, true);
  REQUIRE(fv.per_vertex.has_value());
  double sum = 0;
  for (double x : *fv.per_vertex) sum += x;
  CHECK(sum == doctest::Approx(fv.value));
  CHECK((*fv.per_vertex)[0] == doctest::Approx(std::log(5.0)));
}

TEST_CASE("F equals the fringe sum for every built-in toll") {
  const auto tolls = builtin_tolls_for_tests();
  for_all_small_trees(5, 5, [&](const IncreasingTree& t) {
    const auto fringes = fringe_subtrees(t);
    for (const TollPtr& toll : tolls) {
      double direct = 0;
      for (const IncreasingTree& s : fringes) direct += toll->eval(s);
      const double engine = evaluate_additive(*toll, t).value;
      CHECK(engine == doctest::Approx(direct).epsilon(1e-12));
    }
  });
}

TEST_CASE("F satisfies the additive recursion over root branches") {
  const auto tolls = builtin_tolls_for_tests();
  for_all_small_trees(5, 5, [&](const IncreasingTree& t) {
    std::vector<double> node_tolls(t.size());
    std::vector<double> subtree_F(t.size());
    for (const TollPtr& toll : tolls) {
      toll->eval_nodes(t, node_tolls);
      functional_per_subtree(t, node_tolls, subtree_F);
      double branches = 0;
      for (std::int32_t c : t.children(0)) branches += subtree_F[c];
      CHECK(subtree_F[0] ==
            doctest::Approx(branches + node_tolls[0]).epsilon(1e-12));
    }
  });
}

TEST_CASE("constant toll gives F = c|T| exactly") {
  const TollPtr toll = make_constant_toll(2.5);
  Rng rng(3);
  for (int n : {1, 5, 40}) {
    const IncreasingTree t = grow_dary(2, n, rng);
    CHECK(evaluate_additive(*toll, t).value == 2.5 * n);
  }
}

TEST_CASE("leaf and outdegree tolls count what they claim") {
  const TollPtr leaf = make_leaf_toll();
  for_all_small_trees(5, 5, [&](const IncreasingTree& t) {
    int leaves = 0, deg1 = 0;
    for (int v = 0; v < t.size(); ++v) {
      if (t.outdeg(v) == 0) ++leaves;
      if (t.outdeg(v) == 1) ++deg1;
    }
    CHECK(evaluate_additive(*leaf, t).value == doctest::Approx(leaves));
    CHECK(evaluate_additive(*make_outdegree_toll(1), t).value ==
          doctest::Approx(deg1));
  });
}

TEST_CASE("definitional coincidences between tolls") {
  const TollPtr leaf = make_leaf_toll();
  const TollPtr fs1 = make_fringe_size_toll(1);
  const TollPtr occ1 = make_fringe_occurrence_toll(parse_tree("1"));
  const TollPtr occ1_dary =
      make_fringe_occurrence_toll(parse_tree("1[_,_]"));
  const TollPtr out0 = make_outdegree_toll(0);
  for (int n = 1; n <= 6; ++n) {
    enumerate_dary(2, n, [&](const IncreasingTree& t) {
      const double l = evaluate_additive(*leaf, t).value;
      CHECK(evaluate_additive(*fs1, t).value == l);
      CHECK(evaluate_additive(*occ1_dary, t).value == l);
      CHECK(evaluate_additive(*out0, t).value == l);
    });
    enumerate_plane(n, [&](const IncreasingTree& t) {
      const double l = evaluate_additive(*leaf, t).value;
      CHECK(evaluate_additive(*fs1, t).value == l);
      CHECK(evaluate_additive(*occ1, t).value == l);
    });
  }
}

TEST_CASE("fringe occurrences respect slots and plane order") {
  const TollPtr occ_left = make_fringe_occurrence_toll(parse_tree("1[s0:2[_,_],_]"));
  IncreasingTree left = IncreasingTree::dary(2);
  left.attach_dary(0, 0);
  IncreasingTree right = IncreasingTree::dary(2);
  right.attach_dary(0, 1);
  CHECK(occ_left->eval(left) == 1.0);
  CHECK(occ_left->eval(right) == 0.0);

  // count occurrences of the cherry inside a bigger tree
  const TollPtr cherry = make_fringe_occurrence_toll(parse_tree("1(2 3)"));
  CHECK(evaluate_additive(*cherry, parse_tree("1(2(4 5) 3)")).value == 1.0);
  CHECK(evaluate_additive(*cherry, parse_tree("1(2(4 5) 3(6 7))")).value == 2.0);
  // relative label order matters: (5 4) realizes the mirrored cherry
  CHECK(evaluate_additive(*cherry, parse_tree("1(2(5 4) 3)")).value == 0.0);
  const TollPtr mirrored = make_fringe_occurrence_toll(parse_tree("1(3 2)"));
  CHECK(evaluate_additive(*mirrored, parse_tree("1(2(5 4) 3)")).value == 1.0);
}

TEST_CASE("subtree_count_root") {
  CHECK(subtree_count_root(parse_tree("1")) == 1);
  CHECK(subtree_count_root(parse_tree("1(2)")) == 2);
  CHECK(subtree_count_root(parse_tree("1(2 3)")) == 4);
  // brute-force subset oracle over all binary trees up to size 6
  for (int n = 1; n <= 6; ++n) {
    enumerate_dary(2, n, [&](const IncreasingTree& t) {
      const BigInt s = subtree_count_root(t);
      CHECK(s == subtree_count_brute(t));
      CHECK(s >= t.size());
    });
  }
  enumerate_plane(5, [&](const IncreasingTree& t) {
    CHECK(subtree_count_root(t) == subtree_count_brute(t));
  });
}

TEST_CASE("log_subtree_toll values and bound") {
  CHECK(log_subtree_toll(parse_tree("1")) == doctest::Approx(std::log(2.0)));
  CHECK(log_subtree_toll(parse_tree("1(2)")) ==
        doctest::Approx(std::log(1.5)));
  for_all_small_trees(6, 5, [&](const IncreasingTree& t) {
    const double f = log_subtree_toll(t);
    CHECK(f > 0);
    CHECK(f <= std::log1p(1.0 / t.size()) + 1e-15);
  });
  Rng rng(8);
  const IncreasingTree big = grow_dary(2, 500, rng);
  const double f = log_subtree_toll(big);
  CHECK(f > 0);
  CHECK(f <= std::log1p(1.0 / 500));
}

TEST_CASE("log-root-subtrees toll pass agrees with the exact bigint route") {
  using Float50 = boost::multiprecision::cpp_bin_float_50;
  const TollPtr toll = make_log_root_subtrees_toll();
  Rng rng(21);
  for (int trial = 0; trial < 6; ++trial) {
    // sizes straddling the uint64 fast-path threshold
    const int n = 40 + trial * 45;
    const IncreasingTree t =
        trial % 2 == 0 ? grow_dary(2, n, rng) : grow_gport(1.0, n, rng);
    std::vector<double> out(t.size());
    toll->eval_nodes(t, out);
    const BigInt s = subtree_count_root(t);
    const Float50 s50(s.str());
    const double expected =
        static_cast<double>(log(s50 + 1) - log(s50));
    CHECK(out[0] == doctest::Approx(expected).epsilon(1e-10));
    // per-node values match a fresh evaluation of each fringe subtree
    for (int v = 0; v < t.size(); v += 17)
      CHECK(out[v] ==
            doctest::Approx(log_subtree_toll(fringe_subtree(t, v)))
                .epsilon(1e-10));
  }
}

TEST_CASE("branch_symmetry worked examples") {
  CHECK(branch_symmetry(parse_tree("1[s0:2[_,_],s1:3[_,_]]")) == 2);
  CHECK(branch_symmetry(parse_tree("1(2 3 4)")) == 6);  // three leaf branches
  CHECK(branch_symmetry(
            parse_tree("1[s0:2[_,_,_],s1:3[_,_,_],s2:4[_,_,_]]")) == 6);
  // paths have trivial symmetry at every vertex
  const TollPtr toll = make_log_branch_symmetry_toll();
  CHECK(evaluate_additive(*toll, parse_tree("1(2(3(4)))")).value == 0.0);
}

TEST_CASE("log branch symmetry sums to log|Aut|") {
  const TollPtr toll = make_log_branch_symmetry_toll();
  for_all_small_trees(5, 5, [&](const IncreasingTree& t) {
    const BigInt brute = automorphism_count_brute(t);
    CHECK(automorphism_group_order(t) == brute);
    const double f = evaluate_additive(*toll, t).value;
    CHECK(f == doctest::Approx(std::log(to_double(brute))).epsilon(1e-10));
  });
  // all binary trees of size 6 against the permutation oracle
  enumerate_dary(2, 6, [&](const IncreasingTree& t) {
    CHECK(automorphism_group_order(t) == automorphism_count_brute(t));
  });
}

TEST_CASE("orbit_count worked examples and brute-force agreement") {
  CHECK(orbit_count(parse_tree("1(2(3(4)))")) == 4);  // path: one orbit each
  CHECK(orbit_count(parse_tree("1(2 3)")) == 2);
  // complete binary shape on 7 vertices
  const IncreasingTree complete = parse_tree("1(2(4 5) 3(6 7))");
  CHECK(orbit_count(complete) == 3);
  CHECK(orbit_count_brute(complete) == 3);
  for_all_small_trees(5, 5, [&](const IncreasingTree& t) {
    CHECK(orbit_count(t) == orbit_count_brute(t));
  });
  enumerate_dary(2, 6, [&](const IncreasingTree& t) {
    CHECK(orbit_count(t) == orbit_count_brute(t));
  });
}

TEST_CASE("orbit toll telescopes to the orbit count") {
  const TollPtr toll = make_orbits_toll();
  for_all_small_trees(5, 5, [&](const IncreasingTree& t) {
    CHECK(evaluate_additive(*toll, t).value ==
          doctest::Approx(orbit_count(t)));
  });
  // binary tree with isomorphic branches: f = 1 - orbits(branch)
  const IncreasingTree iso = parse_tree("1(2(4) 3(5))");
  const int branch_orbits = orbit_count(parse_tree("1(2)"));
  CHECK(toll->eval(iso) == doctest::Approx(1.0 - branch_orbits));
  // non-isomorphic branches: f = 1
  CHECK(toll->eval(parse_tree("1(2(4 5) 3)")) == doctest::Approx(1.0));
  CHECK(toll->eval(parse_tree("1")) == doctest::Approx(1.0));
}

TEST_CASE("relabel invariance audit") {
  CHECK(relabel_invariance_audit(*make_leaf_toll(), 5).passed);
  CHECK(relabel_invariance_audit(*make_shape_toll(), 5).passed);
  CHECK(relabel_invariance_audit(*make_log_branch_symmetry_toll(), 4).passed);
  // adversarial toll reading the absolute root label
  const TollPtr bad = make_custom_toll(
      "root-label",
      [](const IncreasingTree& t) { return static_cast<double>(t.label(0)); },
      {});
  const AuditReport report = relabel_invariance_audit(*bad, 3);
  CHECK_FALSE(report.passed);
  REQUIRE_FALSE(report.mismatches.empty());
  CHECK(report.mismatches.front().tree_text == "1[_,_]");
}

TEST_CASE("declared metadata survives the brute-force audit") {
  for (const TollPtr& toll : builtin_tolls_for_tests()) {
    const AuditReport report = audit_toll_metadata(*toll, 6);
    INFO("toll ", toll->meta().display_name());
    CHECK(report.passed);
  }
}

TEST_CASE("toll evaluator failures identify the vertex") {
  const TollPtr bomb = make_custom_toll(
      "bomb",
      [](const IncreasingTree& t) -> double {
        if (t.size() == 1) throw std::runtime_error("boom");
        return 0;
      },
      {});
  const IncreasingTree t = parse_tree("1(2(3))");
  try {
    evaluate_additive(*bomb, t);
    FAIL("expected toll_error");
  } catch (const toll_error& e) {
    CHECK(e.vertex_label() == 3);  // deepest vertex is the only leaf
  }
}

TEST_CASE("toll registry round trips") {
  CHECK(make_toll("leaf")->meta().name == "leaf");
  CHECK(make_toll("fringe-size:k=2")->meta().display_name() ==
        "fringe-size:k=2");
  CHECK(make_toll("constant:c=1")->eval(parse_tree("1")) == 1.0);
  const TollPtr occ = make_toll("fringe-occurrence:tree=1[s0:2[_,_],_]");
  CHECK(occ->meta().support_cutoff == 2);
  CHECK_THROWS_AS(make_toll("unknown-toll"), std::invalid_argument);
  CHECK_THROWS_AS(make_toll("fringe-size"), std::invalid_argument);
  CHECK_THROWS_AS(make_toll("fringe-size:k=0"), std::invalid_argument);
  CHECK_THROWS_AS(make_toll("leaf:k=1"), std::invalid_argument);
  try {
    make_toll("nope");
  } catch (const std::invalid_argument& e) {
    // the error lists the registry
    CHECK(std::string(e.what()).find("log-branch-symmetry") !=
          std::string::npos);
  }
  CHECK(toll_registry().size() == 10);

  // JSON parameter route
  CHECK(make_toll_json("fringe-size", R"({"k": 2})")->meta().display_name() ==
        "fringe-size:k=2");
  CHECK(make_toll_json("leaf", "")->meta().name == "leaf");
  CHECK(make_toll_json("fringe-occurrence", R"js({"tree": "1(2)"})js")
            ->meta()
            .support_cutoff == 2);
  CHECK_THROWS_AS(make_toll_json("fringe-size", "[1]"), std::invalid_argument);
  CHECK_THROWS_AS(make_toll_json("fringe-size", "{bad"), std::invalid_argument);
}

TEST_CASE("fringe_subtrees basics") {
  CHECK(fringe_subtrees(parse_tree("1")).size() == 1);
  const auto fringes = fringe_subtrees(parse_tree("1(2(3))"));
  REQUIRE(fringes.size() == 3);
  CHECK(fringes[0].size() == 3);
  CHECK(fringes[1].size() == 2);
  CHECK(fringes[2].size() == 1);
  CHECK(to_text(fringes[1]) == "1(2)");  // labels reinterpreted by rank
  // slots survive extraction
  const IncreasingTree t = parse_tree("1[s0:2[_,s1:3[_,_]],_]");
  CHECK(to_text(fringe_subtree(t, 1)) == "1[_,s1:2[_,_]]");
}
