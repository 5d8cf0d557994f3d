#pragma once

#include "algcut/char_numbers.hpp"
#include "algcut/cut.hpp"
#include "algcut/error.hpp"
#include "algcut/fixed_point.hpp"
#include "algcut/laurent.hpp"
#include "algcut/localization.hpp"
#include "algcut/oracle.hpp"
#include "algcut/poly.hpp"
#include "algcut/rational.hpp"
#include "algcut/weights.hpp"
