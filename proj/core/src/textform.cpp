#include "incrtree/textform.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace incrtree {

namespace {

void render_dary(const IncreasingTree& t, int v, std::string& out) {
  out += std::to_string(t.label(v));
  out += '[';
  for (int s = 0; s < t.arity(); ++s) {
    if (s > 0) out += ',';
    const int c = t.child_in_slot(v, s);
    if (c < 0) {
      out += '_';
    } else {
      out += 's';
      out += std::to_string(s);
      out += ':';
      render_dary(t, c, out);
    }
  }
  out += ']';
}

void render_plane(const IncreasingTree& t, int v, std::string& out) {
  out += std::to_string(t.label(v));
  const auto kids = t.children(v);
  if (kids.empty()) return;
  out += '(';
  bool first = true;
  for (std::int32_t c : kids) {
    if (!first) out += ' ';
    first = false;
    render_plane(t, c, out);
  }
  out += ')';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  IncreasingTree parse() {
    skip_ws();
    // peek past the root label to find the kind
    std::size_t probe = pos_;
    while (probe < text_.size() && std::isdigit(text_[probe])) ++probe;
    if (probe == pos_) fail("expected a root label");
    const bool is_dary = probe < text_.size() && text_[probe] == '[';

    ParsedNode root = is_dary ? parse_dary_node() : parse_plane_node();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");

    return build(root, is_dary);
  }

 private:
  struct ParsedNode {
    std::uint64_t label = 0;
    int arity = 0;  // d-ary only
    std::vector<int> slots;
    std::vector<ParsedNode> children;
  };

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("tree parse error at offset " +
                                std::to_string(pos_) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::uint64_t parse_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a number");
    return std::stoull(std::string(text_.substr(start, pos_ - start)));
  }

  ParsedNode parse_dary_node() {
    ParsedNode node;
    node.label = parse_number();
    expect('[');
    int slot = 0;
    while (true) {
      skip_ws();
      if (peek() == '_') {
        ++pos_;
      } else {
        expect('s');
        const auto s = parse_number();
        if (static_cast<int>(s) != slot) fail("slot tag out of order");
        expect(':');
        node.slots.push_back(slot);
        node.children.push_back(parse_dary_node());
      }
      ++slot;
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(']');
      break;
    }
    node.arity = slot;
    return node;
  }

  ParsedNode parse_plane_node() {
    ParsedNode node;
    node.label = parse_number();
    if (peek() == '(') {
      ++pos_;
      skip_ws();
      if (peek() == ')') fail("empty child list");
      while (true) {
        node.children.push_back(parse_plane_node());
        skip_ws();
        if (peek() == ')') {
          ++pos_;
          break;
        }
      }
    }
    return node;
  }

  struct Entry {
    const ParsedNode* node = nullptr;
    std::uint64_t parent_label = 0;
    int slot = -1;
  };

  IncreasingTree build(const ParsedNode& root, bool is_dary) {
    if (root.label != 1) fail("root must carry label 1");
    // collect (parent label, slot/position, node) and attach in label order
    std::vector<Entry> by_label;
    std::vector<Entry> all;
    all.push_back({&root, 0, -1});
    collect(root, all, is_dary ? root.arity : 0);
    std::size_t n = all.size();
    by_label.resize(n);
    for (const Entry& e : all) {
      if (e.node->label < 1 || e.node->label > n) fail("labels must be 1..n");
      auto& cell = by_label[e.node->label - 1];
      if (cell.node) fail("duplicate label");
      cell = e;
    }
    IncreasingTree t =
        is_dary ? IncreasingTree::dary(root.arity) : IncreasingTree::plane();
    std::vector<int> index_of_label(n + 1, -1);
    index_of_label[1] = 0;
    for (std::size_t lbl = 2; lbl <= n; ++lbl) {
      const Entry& e = by_label[lbl - 1];
      const int parent = index_of_label[e.parent_label];
      if (parent < 0) fail("child label precedes its parent");
      int v;
      if (is_dary) {
        v = t.attach_dary(parent, e.slot);
      } else {
        // children of any vertex appear in plane order; labels need not be
        // sorted within a sibling list, so insert at the recorded position
        // among already-attached siblings
        int gap = 0;
        const ParsedNode* pn = by_label[e.parent_label - 1].node;
        for (const ParsedNode& sib : pn->children) {
          if (sib.label == lbl) break;
          if (sib.label < lbl) ++gap;
        }
        v = t.attach_plane(parent, gap);
      }
      index_of_label[lbl] = v;
    }
    t.validate();
    return t;
  }

  void collect(const ParsedNode& node, std::vector<Entry>& all,
               int expected_arity) {
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      const ParsedNode& child = node.children[i];
      if (expected_arity > 0 && child.arity != expected_arity)
        fail("inconsistent arity");
      const int slot =
          node.slots.empty() ? static_cast<int>(i) : node.slots[i];
      all.push_back({&child, node.label, slot});
      collect(child, all, expected_arity);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_text(const IncreasingTree& t) {
  std::string out;
  if (t.kind() == TreeKind::dary)
    render_dary(t, 0, out);
  else
    render_plane(t, 0, out);
  return out;
}

IncreasingTree parse_tree(std::string_view text) {
  return Parser(text).parse();
}

std::ostream& write_tree_line(std::ostream& os, const IncreasingTree& t) {
  return os << to_text(t) << '\n';
}

}  // namespace incrtree
