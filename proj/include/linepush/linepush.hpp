#pragma once

#include "compact.hpp"
#include "compaction.hpp"
#include "configuration.hpp"
#include "direction.hpp"
#include "oracles.hpp"
#include "perm_engine.hpp"
#include "perm_solver.hpp"
#include "permutation.hpp"
#include "push.hpp"
#include "puzzle_file.hpp"
#include "search.hpp"
#include "service.hpp"
