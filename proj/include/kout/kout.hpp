#pragma once

#include "kout/audits.hpp"
#include "kout/connectivity.hpp"
#include "kout/edge_list.hpp"
#include "kout/error.hpp"
#include "kout/exploration_tree.hpp"
#include "kout/generators.hpp"
#include "kout/graph.hpp"
#include "kout/harness.hpp"
#include "kout/longcycle.hpp"
#include "kout/longpath_dfs.hpp"
#include "kout/posa.hpp"
#include "kout/random.hpp"
#include "kout/rotation_search.hpp"
#include "kout/sampler.hpp"
#include "kout/stats.hpp"
