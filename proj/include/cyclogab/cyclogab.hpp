#pragma once

#include "cyclogab/certify.hpp"
#include "cyclogab/cyclotomic.hpp"
#include "cyclogab/elimination.hpp"
#include "cyclogab/error.hpp"
#include "cyclogab/gabidulin.hpp"
#include "cyclogab/gmmds.hpp"
#include "cyclogab/matrix.hpp"
#include "cyclogab/polynomial.hpp"
#include "cyclogab/random.hpp"
#include "cyclogab/rational.hpp"
#include "cyclogab/support.hpp"
