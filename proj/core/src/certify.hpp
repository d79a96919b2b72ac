#pragma once

#include "packtree/construct.hpp"

namespace packtree {

// Internal: mark a coloured tree as construction-certified. Only the
// construct and families translation units may mint these.
ColouredTree make_certified(Tree t, Colouring c);

}  // namespace packtree
