#pragma once

// Everything except the command-line front end.
#include "hoffman/bounds.hpp"
#include "hoffman/coloring.hpp"
#include "hoffman/error.hpp"
#include "hoffman/families.hpp"
#include "hoffman/graph.hpp"
#include "hoffman/graph6.hpp"
#include "hoffman/linalg.hpp"
#include "hoffman/params.hpp"
#include "hoffman/quadratic.hpp"
#include "hoffman/regularity.hpp"
#include "hoffman/spectral.hpp"
#include "hoffman/survey.hpp"
#include "hoffman/vector_coloring.hpp"
