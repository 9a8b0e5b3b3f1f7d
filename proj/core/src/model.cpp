#include "incrtree/model.hpp"

namespace incrtree {

ModelParams ModelParams::make_dary(int d) {
  if (d < 2) throw std::invalid_argument("dary model requires d >= 2");
  ModelParams m;
  m.variant = Variant::dary;
  m.d = d;
  return m;
}

ModelParams ModelParams::make_recursive() {
  ModelParams m;
  m.variant = Variant::recursive;
  return m;
}

ModelParams ModelParams::make_gport(Rational alpha) {
  if (alpha <= 0) throw std::invalid_argument("gport model requires alpha > 0");
  ModelParams m;
  m.variant = Variant::gport;
  m.alpha = std::move(alpha);
  return m;
}

ModelParams ModelParams::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string head(text.substr(0, colon));
  if (head == "recursive") {
    if (colon != std::string_view::npos)
      throw std::invalid_argument("recursive model takes no parameter");
    return make_recursive();
  }
  if (head == "port") {
    if (colon != std::string_view::npos)
      throw std::invalid_argument("port model takes no parameter (use gport:a)");
    return make_gport(1);
  }
  if (head == "dary") {
    if (colon == std::string_view::npos)
      throw std::invalid_argument("dary model needs an arity, e.g. dary:2");
    const int d = std::stoi(std::string(text.substr(colon + 1)));
    return make_dary(d);
  }
  if (head == "gport") {
    if (colon == std::string_view::npos)
      throw std::invalid_argument("gport model needs alpha, e.g. gport:1/2");
    return make_gport(parse_rational(text.substr(colon + 1)));
  }
  throw std::invalid_argument("unknown model '" + std::string(text) +
                              "' (expected dary:<d>, recursive, gport:<alpha>)");
}

std::string ModelParams::to_string() const {
  switch (variant) {
    case Variant::dary:
      return "dary:" + std::to_string(d);
    case Variant::recursive:
      return "recursive";
    case Variant::gport:
      return "gport:" + incrtree::to_string(alpha);
  }
  return {};
}

}  // namespace incrtree
