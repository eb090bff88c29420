#pragma once

#include <mgof/collection.hpp>
#include <mgof/density.hpp>
#include <mgof/error.hpp>
#include <mgof/io.hpp>
#include <mgof/maxtest.hpp>
#include <mgof/mellin.hpp>
#include <mgof/numerics.hpp>
#include <mgof/parallel.hpp>
#include <mgof/problem.hpp>
#include <mgof/rates.hpp>
#include <mgof/report.hpp>
#include <mgof/rng.hpp>
#include <mgof/simulation.hpp>
#include <mgof/statistic.hpp>
#include <mgof/thresholds.hpp>
#include <mgof/weight.hpp>
