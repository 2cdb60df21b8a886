#pragma once

#include "homuce/scalar.hpp"
#include "homuce/matrix.hpp"
#include "homuce/subspace.hpp"
#include "homuce/text.hpp"
#include "homuce/algebra.hpp"
#include "homuce/constructions.hpp"
#include "homuce/corep.hpp"
#include "homuce/chain.hpp"
#include "homuce/lie_complex.hpp"
#include "homuce/hom.hpp"
#include "homuce/uce.hpp"
#include "homuce/compare.hpp"
#include "homuce/audit.hpp"
#include "homuce/catalog.hpp"
#include "homuce/random.hpp"
#include "homuce/document.hpp"
#include "homuce/expectations.hpp"
#include "homuce/paper_suite.hpp"
