#pragma once

#include "charfield/arith.hpp"
#include "charfield/chartab.hpp"
#include "charfield/cyclotomic.hpp"
#include "charfield/expression.hpp"
#include "charfield/glq.hpp"
#include "charfield/groups.hpp"
#include "charfield/harness.hpp"
#include "charfield/json_io.hpp"
#include "charfield/numfield.hpp"
#include "charfield/symchar.hpp"
#include "charfield/table_io.hpp"
#include "charfield/wreath.hpp"
