#pragma once

#include "nhedge/adversary.hpp"
#include "nhedge/analytics.hpp"
#include "nhedge/baselines.hpp"
#include "nhedge/errors.hpp"
#include "nhedge/learner.hpp"
#include "nhedge/learner_state.hpp"
#include "nhedge/normal_hedge.hpp"
#include "nhedge/potential.hpp"
#include "nhedge/scale.hpp"
