// Runs every acceptance criterion at its stated trial count and prints one
// pass/fail line per criterion.
#include "barnov/selftest.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
	std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 42;
	bool ok = barnov::selftest::report_acceptance(seed, std::cout);
	return ok ? 0 : 1;
}
