#pragma once

#include "rational.hpp"       // IWYU pragma: export
#include "sums.hpp"           // IWYU pragma: export
#include "reciprocity.hpp"    // IWYU pragma: export
#include "closed_forms.hpp"   // IWYU pragma: export
#include "identities.hpp"     // IWYU pragma: export
#include "report_io.hpp"      // IWYU pragma: export
