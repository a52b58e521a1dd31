#include "qhyper/verify/catalog.hpp"

#include <algorithm>
#include <set>

namespace qhyper::verify {

const std::vector<IdentitySpec>& identity_catalog() {
  static const std::vector<IdentitySpec> catalog = [] {
    std::vector<IdentitySpec> v;
    register_formal(v);
    register_numeric(v);
    register_remark2(v);
    for (auto& s : v) {
      s.groups.push_back("all");
      s.groups.push_back(s.mode == Mode::Formal ? "formal" : "numeric");
    }
    std::sort(v.begin(), v.end(), [](const IdentitySpec& a, const IdentitySpec& b) { return a.id < b.id; });
    return v;
  }();
  return catalog;
}

const IdentitySpec* find_identity(std::string_view id) {
  for (const auto& s : identity_catalog()) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

std::vector<std::string> suite_names() {
  std::set<std::string> groups;
  for (const auto& s : identity_catalog()) groups.insert(s.groups.begin(), s.groups.end());
  std::vector<std::string> out(groups.begin(), groups.end());
  for (const auto& s : identity_catalog()) {
    if (!groups.count(s.id)) out.push_back(s.id);
  }
  return out;
}

std::vector<const IdentitySpec*> resolve_suite(std::string_view suite) {
  std::vector<const IdentitySpec*> out;
  for (const auto& s : identity_catalog()) {
    if (s.id == suite || std::find(s.groups.begin(), s.groups.end(), suite) != s.groups.end()) {
      out.push_back(&s);
    }
  }
  return out;
}

}  // namespace qhyper::verify
