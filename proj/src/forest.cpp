#include "stokes/forest.hpp"

#include "stokes/enumerate.hpp"
#include "stokes/error.hpp"
#include "stokes/io.hpp"
#include "stokes/simplify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace stokes {

namespace {

// Only data with top level below 2 (and not below 1 at infinity) can take a
// simplifying step, so these ranges hold every possible child.
OpenInterval candidate_range(Mode mode) {
  return mode == Mode::Infinity ? OpenInterval{Rational(1), Rational(2)} : OpenInterval{Rational(0), Rational(2)};
}

template <typename Visit>
void for_each_candidate(std::int64_t ram_from, std::int64_t ram_bound, Mode mode, Visit visit) {
  for (std::int64_t r = std::max<std::int64_t>(ram_from, 2); r <= ram_bound; ++r)
    for (LevelDatum& c : level_data_with_ram(r, candidate_range(mode))) visit(std::move(c));
}

// Parent -> children for every candidate up to the bound, built once per
// expansion.
class ChildIndex {
 public:
  ChildIndex(std::int64_t ram_bound, Mode mode) {
    for_each_candidate(2, ram_bound, mode, [&](LevelDatum c) {
      StepResult s = step(c, mode);
      if (s.step.kind != StepCase::Minimal) by_parent_[std::move(s.datum)].push_back(std::move(c));
    });
    for (auto& [parent, kids] : by_parent_) std::sort(kids.begin(), kids.end(), canonical_less);
  }

  const std::vector<LevelDatum>& children_of(const LevelDatum& datum) const {
    static const std::vector<LevelDatum> none;
    auto it = by_parent_.find(datum);
    return it == by_parent_.end() ? none : it->second;
  }

 private:
  struct Less {
    bool operator()(const LevelDatum& a, const LevelDatum& b) const { return canonical_less(a, b); }
  };
  std::map<LevelDatum, std::vector<LevelDatum>, Less> by_parent_;
};

TreeNode build(const LevelDatum& datum, int depth, const ChildIndex& index) {
  TreeNode node{datum, ramification(datum), balance(datum), {}, true};
  if (depth > 0)
    for (const LevelDatum& c : index.children_of(datum)) node.children.push_back(build(c, depth - 1, index));
  return node;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void write_dot_nodes(const TreeNode& node, std::ostringstream& out) {
  std::string label = dot_quote(format_datum(node.datum, DatumStyle::Human));
  label.insert(label.size() - 1, "\\nB=" + node.balance.str());
  out << "  " << dot_quote(format_datum(node.datum)) << " [label=" << label << "];\n";
  for (const TreeNode& c : node.children) write_dot_nodes(c, out);
}

void write_dot_edges(const TreeNode& node, std::ostringstream& out) {
  for (const TreeNode& c : node.children) {
    out << "  " << dot_quote(format_datum(c.datum)) << " -> " << dot_quote(format_datum(node.datum)) << ";\n";
    write_dot_edges(c, out);
  }
}

}  // namespace

std::vector<LevelDatum> children(const LevelDatum& datum, std::int64_t ram_bound, Mode mode) {
  if (ram_bound < 1) throw InvalidInput("ram bound must be positive");
  std::vector<LevelDatum> out;
  Integer ram = ramification(datum);
  if (ram >= ram_bound) return out;
  // Simplifying steps strictly lower the ramification.
  std::int64_t first = static_cast<std::int64_t>(ram) + 1;
  for_each_candidate(first, ram_bound, mode, [&](LevelDatum c) {
    if (c != datum && step(c, mode).datum == datum) out.push_back(std::move(c));
  });
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

TreeNode expand_tree(const LevelDatum& root, int depth, std::int64_t ram_bound, Mode mode) {
  if (ram_bound < 1) throw InvalidInput("ram bound must be positive");
  if (depth < 0) throw InvalidInput("depth must be non-negative");
  ChildIndex index(depth > 0 ? ram_bound : 1, mode);
  return build(root, depth, index);
}

std::size_t tree_size(const TreeNode& node) {
  std::size_t n = 1;
  for (const TreeNode& c : node.children) n += tree_size(c);
  return n;
}

std::string export_tree(const TreeNode& tree, TreeFormat format) {
  if (format == TreeFormat::Json) return tree_to_json(tree).dump(2) + "\n";
  std::ostringstream out;
  out << "digraph {\n";
  write_dot_nodes(tree, out);
  write_dot_edges(tree, out);
  out << "}\n";
  return out.str();
}

}  // namespace stokes
