#pragma once

// Umbrella header for the kneadkit symbolic dynamics library.

#include "kneadkit/errors.hpp"
#include "kneadkit/signed_graph.hpp"
#include "kneadkit/word.hpp"
#include "kneadkit/classify.hpp"
#include "kneadkit/tuning.hpp"
#include "kneadkit/constructor.hpp"
#include "kneadkit/intpoly.hpp"
#include "kneadkit/intmatrix.hpp"
#include "kneadkit/roots.hpp"
#include "kneadkit/markov.hpp"
#include "kneadkit/spectral.hpp"
#include "kneadkit/experiments.hpp"
#include "kneadkit/json_io.hpp"
