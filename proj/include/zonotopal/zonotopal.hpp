#pragma once

#include "zonotopal/algebra.hpp"
#include "zonotopal/chambers.hpp"
#include "zonotopal/dmspace.hpp"
#include "zonotopal/errors.hpp"
#include "zonotopal/gspaces.hpp"
#include "zonotopal/ideals.hpp"
#include "zonotopal/matrix.hpp"
#include "zonotopal/multipoly.hpp"
#include "zonotopal/rational.hpp"
#include "zonotopal/splines.hpp"
#include "zonotopal/tutte.hpp"
#include "zonotopal/vectorlist.hpp"
