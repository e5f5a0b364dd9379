#pragma once

#include "kindex/analysis.hpp"
#include "kindex/corpus.hpp"
#include "kindex/errors.hpp"
#include "kindex/indexes.hpp"
#include "kindex/networks.hpp"
#include "kindex/plot.hpp"
#include "kindex/sparse_matrix.hpp"
#include "kindex/synth.hpp"
