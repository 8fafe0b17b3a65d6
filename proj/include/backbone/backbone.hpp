#pragma once

// Umbrella header for the backbone library.

#include "backbone/attack.hpp"
#include "backbone/centrality.hpp"
#include "backbone/graph.hpp"
#include "backbone/ingest.hpp"
#include "backbone/metrics.hpp"
#include "backbone/trace.hpp"
