#include "finloc/dot.hpp"

#include <sstream>

namespace finloc {

namespace {

std::string quote(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string render(const std::string &graph, const std::vector<std::string> &labels,
                   const std::vector<std::pair<std::size_t, std::size_t>> &edges) {
  std::ostringstream os;
  os << "digraph " << graph << " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < labels.size(); ++i)
    os << "  n" << i << " [label=" << quote(labels[i]) << "];\n";
  for (const auto &[a, b] : edges)
    os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

} // namespace

std::string frame_to_dot(const Frame &f) {
  auto edges = covering_pairs(f.size(), [&](std::size_t a, std::size_t b) {
    return f.leq(ElementId(a), ElementId(b));
  });
  return render("frame", f.labels(), edges);
}

std::string sublocales_to_dot(const Frame &f, const EnumerationLimits &limits) {
  auto subs = enumerate_sublocales(f, limits);
  std::vector<std::string> labels;
  for (const auto &s : subs) {
    std::string l = "{";
    bool first = true;
    for (const auto &m : s.labels()) {
      l += (first ? "" : ",") + m;
      first = false;
    }
    labels.push_back(l + "}");
  }
  auto edges = covering_pairs(subs.size(), [&](std::size_t a, std::size_t b) {
    return subs[a].is_subset_of(subs[b]);
  });
  return render("sublocales", labels, edges);
}

} // namespace finloc
