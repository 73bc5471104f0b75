#pragma once

#include "arith.hpp"
#include "bfile.hpp"
#include "experiments.hpp"
#include "fiber_index.hpp"
#include "search.hpp"
#include "sieve.hpp"
#include "tables.hpp"
