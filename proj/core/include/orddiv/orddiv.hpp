#pragma once

#include "orddiv/arith.hpp"
#include "orddiv/base.hpp"
#include "orddiv/census.hpp"
#include "orddiv/checkpoint.hpp"
#include "orddiv/density.hpp"
#include "orddiv/export.hpp"
#include "orddiv/identity.hpp"
#include "orddiv/kummer.hpp"
#include "orddiv/order.hpp"
#include "orddiv/rational.hpp"
#include "orddiv/sieve.hpp"
