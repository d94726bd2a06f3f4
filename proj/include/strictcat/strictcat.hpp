#pragma once

#include "strictcat/acceptance.hpp"
#include "strictcat/algebra.hpp"
#include "strictcat/constructions.hpp"
#include "strictcat/corpus.hpp"
#include "strictcat/error.hpp"
#include "strictcat/fincat.hpp"
#include "strictcat/functor.hpp"
#include "strictcat/generators.hpp"
#include "strictcat/groupoid.hpp"
#include "strictcat/homotopy.hpp"
#include "strictcat/monoidal.hpp"
#include "strictcat/report.hpp"
#include "strictcat/serialize.hpp"
#include "strictcat/splitting.hpp"
#include "strictcat/symbolic.hpp"
#include "strictcat/truncation.hpp"
#include "strictcat/validate.hpp"
