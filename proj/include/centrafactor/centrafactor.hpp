#pragma once

#include "centrafactor/cca.hpp"
#include "centrafactor/centrality.hpp"
#include "centrafactor/config.hpp"
#include "centrafactor/efa.hpp"
#include "centrafactor/emit.hpp"
#include "centrafactor/error.hpp"
#include "centrafactor/generate.hpp"
#include "centrafactor/graph.hpp"
#include "centrafactor/linalg.hpp"
#include "centrafactor/manifest.hpp"
#include "centrafactor/report.hpp"
#include "centrafactor/serialize.hpp"
#include "centrafactor/svg.hpp"
