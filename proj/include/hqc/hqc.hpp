#pragma once

#include "hqc/scalar.hpp"
#include "hqc/algebra.hpp"
#include "hqc/format.hpp"
#include "hqc/memo.hpp"
#include "hqc/report.hpp"
#include "hqc/hopf.hpp"
#include "hqc/ideal.hpp"
#include "hqc/calculus.hpp"
#include "hqc/dual.hpp"
#include "hqc/parser.hpp"
#include "hqc/suites.hpp"
