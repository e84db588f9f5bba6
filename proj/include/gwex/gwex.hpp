#pragma once

#include "gwex/closed_forms.hpp"
#include "gwex/distribution.hpp"
#include "gwex/extropy.hpp"
#include "gwex/lambda_profile.hpp"
#include "gwex/order_statistics.hpp"
#include "gwex/quadrature.hpp"
#include "gwex/rng.hpp"
#include "gwex/sampling.hpp"
#include "gwex/serialization.hpp"
#include "gwex/special_functions.hpp"
#include "gwex/stochastic_orders.hpp"
#include "gwex/theorems.hpp"
#include "gwex/weight.hpp"
