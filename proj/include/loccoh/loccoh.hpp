#pragma once

#include "loccoh/analysis.hpp"
#include "loccoh/cache.hpp"
#include "loccoh/cech.hpp"
#include "loccoh/complex.hpp"
#include "loccoh/error.hpp"
#include "loccoh/graphs.hpp"
#include "loccoh/ideals.hpp"
#include "loccoh/io.hpp"
#include "loccoh/linalg.hpp"
#include "loccoh/report.hpp"
#include "loccoh/simplicial.hpp"
#include "loccoh/varset.hpp"
