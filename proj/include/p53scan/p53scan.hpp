#ifndef P53SCAN_P53SCAN_HPP
#define P53SCAN_P53SCAN_HPP

#include "p53scan/alignment.hpp"
#include "p53scan/composition.hpp"
#include "p53scan/error.hpp"
#include "p53scan/mutcall.hpp"
#include "p53scan/mutdb.hpp"
#include "p53scan/pipeline.hpp"
#include "p53scan/refstore.hpp"
#include "p53scan/report.hpp"
#include "p53scan/seqio.hpp"
#include "p53scan/translation.hpp"

#endif  // P53SCAN_P53SCAN_HPP
