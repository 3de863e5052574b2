#pragma once

#include "hyparr/arrangement.hpp"
#include "hyparr/bsideal.hpp"
#include "hyparr/corpus.hpp"
#include "hyparr/freeness.hpp"
#include "hyparr/lattice.hpp"
#include "hyparr/linear_form.hpp"
#include "hyparr/matrix.hpp"
#include "hyparr/poly.hpp"
#include "hyparr/rational.hpp"
#include "hyparr/report.hpp"
#include "hyparr/zeta.hpp"
