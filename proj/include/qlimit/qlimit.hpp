#pragma once

#include "qlimit/phase.hpp"
#include "qlimit/linalg.hpp"
#include "qlimit/automaton.hpp"
#include "qlimit/spectral.hpp"
#include "qlimit/algebra.hpp"
#include "qlimit/magnetron.hpp"
#include "qlimit/csv.hpp"
#include "qlimit/report.hpp"
