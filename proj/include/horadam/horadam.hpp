#pragma once

#include "horadam/errors.hpp"
#include "horadam/genfunc.hpp"
#include "horadam/horadam_quaternion.hpp"
#include "horadam/horadam_scalar.hpp"
#include "horadam/presets.hpp"
#include "horadam/quad_ext.hpp"
#include "horadam/quaternion.hpp"
#include "horadam/rational.hpp"
#include "horadam/remarks.hpp"
#include "horadam/report.hpp"
