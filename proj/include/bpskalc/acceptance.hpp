#ifndef BPSKALC_ACCEPTANCE_HPP
#define BPSKALC_ACCEPTANCE_HPP

// The end-to-end verification suite: eleven exact criteria, one report line
// each. Returns the number of failed criteria.

#include <ostream>

namespace bpsk::acceptance {

int run_acceptance(std::ostream& out);

}  // namespace bpsk::acceptance

#endif
