#pragma once

#include "flagpos/coxeter.hpp"
#include "flagpos/errors.hpp"
#include "flagpos/flags.hpp"
#include "flagpos/generators.hpp"
#include "flagpos/io_json.hpp"
#include "flagpos/lp.hpp"
#include "flagpos/matrix.hpp"
#include "flagpos/positivity.hpp"
#include "flagpos/rational.hpp"
#include "flagpos/strata.hpp"
#include "flagpos/subsets.hpp"
