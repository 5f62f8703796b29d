#pragma once

#include "orthant/almost_orthant.hpp"
#include "orthant/catalog.hpp"
#include "orthant/coxeter.hpp"
#include "orthant/decompose.hpp"
#include "orthant/errors.hpp"
#include "orthant/json_io.hpp"
#include "orthant/linalg.hpp"
#include "orthant/oracle.hpp"
#include "orthant/rational.hpp"
#include "orthant/realization.hpp"
#include "orthant/rings.hpp"
#include "orthant/transposition_graph.hpp"
