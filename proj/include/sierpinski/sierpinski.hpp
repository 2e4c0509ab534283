#pragma once

#include "bit_matrix.hpp"
#include "encoding.hpp"
#include "errors.hpp"
#include "forest.hpp"
#include "io.hpp"
#include "node_set.hpp"
#include "optimizer.hpp"
#include "trace.hpp"
#include "weights.hpp"
