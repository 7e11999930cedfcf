#pragma once

#include "surgeon/d3.hpp"
#include "surgeon/exactlin.hpp"
#include "surgeon/frontlang.hpp"
#include "surgeon/invariants.hpp"
#include "surgeon/io.hpp"
#include "surgeon/matrix.hpp"
#include "surgeon/model.hpp"
#include "surgeon/numeric.hpp"
#include "surgeon/surgery.hpp"
