#pragma once

#include <string>
#include <string_view>

#include "incrtree/rational.hpp"
#include "incrtree/tree.hpp"

namespace incrtree {

// Growth-process parameters. PORT == gport(1).
struct ModelParams {
  enum class Variant { dary, recursive, gport };

  Variant variant = Variant::recursive;
  int d = 0;             // dary only, >= 2
  Rational alpha = 0;    // gport only, > 0

  static ModelParams make_dary(int d);
  static ModelParams make_recursive();
  static ModelParams make_gport(Rational alpha);

  TreeKind tree_kind() const {
    return variant == Variant::dary ? TreeKind::dary : TreeKind::plane;
  }

  double alpha_double() const { return to_double(alpha); }

  // "dary:2", "recursive", "gport:1/2"; "port" is accepted for gport:1.
  static ModelParams parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

}  // namespace incrtree
