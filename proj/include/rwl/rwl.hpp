#pragma once

// Umbrella header: exact counting of random walk labelings.

#include "rwl/bigmath.hpp"
#include "rwl/closed_forms.hpp"
#include "rwl/errors.hpp"
#include "rwl/families.hpp"
#include "rwl/graph.hpp"
#include "rwl/graph_enum.hpp"
#include "rwl/identities.hpp"
#include "rwl/oeis.hpp"
#include "rwl/oracle.hpp"
#include "rwl/series.hpp"
