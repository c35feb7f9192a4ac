// Acceptance gate: one line per criterion, exit 0 iff everything passes.
#include <reflex/acceptance.hpp>

int main() { return reflex::run_acceptance(std::cout) ? 0 : 1; }
