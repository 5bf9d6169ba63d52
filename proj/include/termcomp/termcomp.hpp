#pragma once

#include "termcomp/error.hpp"
#include "termcomp/text.hpp"
#include "termcomp/corpus.hpp"
#include "termcomp/termhood.hpp"
#include "termcomp/sparse.hpp"
#include "termcomp/dictionary.hpp"
#include "termcomp/comparability.hpp"
#include "termcomp/bilex.hpp"
#include "termcomp/synthetic.hpp"
#include "termcomp/io.hpp"
