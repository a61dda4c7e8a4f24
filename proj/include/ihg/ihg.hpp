#pragma once

#include "ihg/diagnostics.hpp"
#include "ihg/errors.hpp"
#include "ihg/hypergraph.hpp"
#include "ihg/matrix.hpp"
#include "ihg/rational.hpp"
#include "ihg/solver.hpp"
#include "ihg/testkit.hpp"
#include "ihg/textio.hpp"
#include "ihg/validate.hpp"
