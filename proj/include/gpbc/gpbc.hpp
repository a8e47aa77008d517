#pragma once

#include "gpbc/centrality.hpp"
#include "gpbc/closed_forms.hpp"
#include "gpbc/errors.hpp"
#include "gpbc/export.hpp"
#include "gpbc/families.hpp"
#include "gpbc/geodesics.hpp"
#include "gpbc/graph.hpp"
#include "gpbc/json_io.hpp"
#include "gpbc/petersen.hpp"
#include "gpbc/rational.hpp"
#include "gpbc/validation.hpp"
