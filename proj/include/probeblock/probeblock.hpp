#pragma once

#include "probeblock/decomposition.hpp"
#include "probeblock/gen.hpp"
#include "probeblock/graph.hpp"
#include "probeblock/induced_search.hpp"
#include "probeblock/io.hpp"
#include "probeblock/oracle.hpp"
#include "probeblock/patterns.hpp"
#include "probeblock/probe.hpp"
#include "probeblock/structure.hpp"
