#pragma once

#include "artin/errors.hpp"
#include "artin/coxeter.hpp"
#include "artin/garside.hpp"
#include "artin/ribbon.hpp"
#include "artin/conjugacy.hpp"
#include "artin/parabolic.hpp"
#include "artin/lattice.hpp"
