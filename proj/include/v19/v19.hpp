#pragma once

#include "v19/algebra.hpp"
#include "v19/bruteforce.hpp"
#include "v19/checks.hpp"
#include "v19/cli.hpp"
#include "v19/coefficients.hpp"
#include "v19/errors.hpp"
#include "v19/expr.hpp"
#include "v19/field.hpp"
#include "v19/functional.hpp"
#include "v19/interpolation.hpp"
#include "v19/linear_algebra.hpp"
#include "v19/model.hpp"
#include "v19/monodromy.hpp"
#include "v19/parallel.hpp"
#include "v19/prime_field.hpp"
#include "v19/rational.hpp"
#include "v19/report.hpp"
#include "v19/sampling.hpp"
#include "v19/solver.hpp"
#include "v19/tables.hpp"
#include "v19/weights.hpp"
#include "v19/zh_system.hpp"
