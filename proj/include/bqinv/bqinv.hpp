#pragma once

#include "bqinv/algebra.hpp"
#include "bqinv/cohomology.hpp"
#include "bqinv/diagram.hpp"
#include "bqinv/error.hpp"
#include "bqinv/statesum.hpp"
#include "bqinv/terms.hpp"
#include "bqinv/version.hpp"
