#pragma once

// Umbrella header: panel ingestion, imputation, statistical preprocessing,
// Granger causality, IC* causal discovery, aggregation, and exports.

#include "causalpanel/aggregate.hpp"
#include "causalpanel/common.hpp"
#include "causalpanel/graph_io.hpp"
#include "causalpanel/granger.hpp"
#include "causalpanel/icstar.hpp"
#include "causalpanel/imputation.hpp"
#include "causalpanel/panel.hpp"
#include "causalpanel/panel_io.hpp"
#include "causalpanel/pipeline.hpp"
#include "causalpanel/rng.hpp"
#include "causalpanel/special.hpp"
#include "causalpanel/stages.hpp"
#include "causalpanel/stats.hpp"
#include "causalpanel/synth.hpp"
