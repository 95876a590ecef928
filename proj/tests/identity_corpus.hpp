#pragma once

// Thin alias over the library's identity catalogue, kept so the test suites
// can refer to the corpus under their own namespace.

#include "tiealg/identities.hpp"

namespace tiealg_tests {

using tiealg::IdentityCase;
using tiealg::defining_relation_cases;
using tiealg::derived_identity_cases;
using tiealg::full_corpus;
using tiealg::skein_cases;

}  // namespace tiealg_tests
