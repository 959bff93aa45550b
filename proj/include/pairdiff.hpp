#pragma once

#include "pairdiff/gaussian_rational.hpp"
#include "pairdiff/chart.hpp"
#include "pairdiff/scalar.hpp"
#include "pairdiff/form.hpp"
#include "pairdiff/linalg.hpp"
#include "pairdiff/chart_map.hpp"
#include "pairdiff/exterior.hpp"
#include "pairdiff/hodge.hpp"
#include "pairdiff/symplectic.hpp"
#include "pairdiff/pair.hpp"
#include "pairdiff/relative.hpp"
#include "pairdiff/dolbeault.hpp"
#include "pairdiff/text.hpp"
#include "pairdiff/cohomology.hpp"
#include "pairdiff/generators.hpp"
#include "pairdiff/checks.hpp"
#include "pairdiff/scenario.hpp"
