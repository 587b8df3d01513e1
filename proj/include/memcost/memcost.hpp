#pragma once

#include "memcost/constituent_calculus.hpp"
#include "memcost/cost_core.hpp"
#include "memcost/cost_function.hpp"
#include "memcost/mla_oracle.hpp"
#include "memcost/permutation_space.hpp"
#include "memcost/stats.hpp"
