#pragma once

#include "jcm/angle.hpp"
#include "jcm/catlab.hpp"
#include "jcm/dynamics.hpp"
#include "jcm/error.hpp"
#include "jcm/fock.hpp"
#include "jcm/observables.hpp"
