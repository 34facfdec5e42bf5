#pragma once

#include "renewal/analytics.hpp"
#include "renewal/characterization.hpp"
#include "renewal/epoch_io.hpp"
#include "renewal/law.hpp"
#include "renewal/law_expr.hpp"
#include "renewal/rng.hpp"
#include "renewal/simulate.hpp"
#include "renewal/stats.hpp"
#include "renewal/transforms.hpp"
