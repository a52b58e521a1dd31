#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qhyper/verify/engine.hpp"

namespace qhyper::verify {

/// Every registered identity, sorted by id.
const std::vector<IdentitySpec>& identity_catalog();

const IdentitySpec* find_identity(std::string_view id);

/// Suite names: group names followed by individual identity ids.
std::vector<std::string> suite_names();

/// Identities of a suite (a group name or an identity id); empty if unknown.
std::vector<const IdentitySpec*> resolve_suite(std::string_view suite);

// Registration hooks, one per catalog source file.
void register_formal(std::vector<IdentitySpec>& out);
void register_numeric(std::vector<IdentitySpec>& out);
void register_remark2(std::vector<IdentitySpec>& out);

}  // namespace qhyper::verify
