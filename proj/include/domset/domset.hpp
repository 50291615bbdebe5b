#pragma once

#include "anneal.hpp"
#include "bench.hpp"
#include "construct.hpp"
#include "deadline.hpp"
#include "generate.hpp"
#include "graph.hpp"
#include "pipeline.hpp"
#include "prune.hpp"
#include "reduce.hpp"
#include "solution.hpp"
#include "swap_search.hpp"
#include "verify.hpp"
